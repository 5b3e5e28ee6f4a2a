// Command-line front end over the C API.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chordidx/chordidx.h"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kParseError = 2, kNotAdmissible = 3 };

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::stringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool is_parse_error(ci_status s) {
  return s == CI_MALFORMED_TOKEN || s == CI_DUPLICATE_PASSAGE || s == CI_SIGN_MISMATCH ||
         s == CI_SIDE_INDEX_OUT_OF_RANGE || s == CI_MISSING_GENUS_HEADER || s == CI_WRONG_LENGTH ||
         s == CI_NON_INTEGER;
}

int exit_for(ci_status s) {
  if (s == CI_NOT_ADMISSIBLE || s == CI_NOT_MOD2_ADMISSIBLE) return kNotAdmissible;
  if (is_parse_error(s)) return kParseError;
  return kCheckFailed;
}

std::string error_line(ci_status s) {
  std::string msg = std::string(ci_status_name(s)) + ": " + ci_last_error_message();
  if (s == CI_NOT_ADMISSIBLE) msg += " (intersection number " + std::to_string(ci_last_pairing()) + ")";
  return msg;
}

struct Diagram {
  ci_diagram* d = nullptr;
  ~Diagram() { ci_diagram_free(d); }
};

// Loads a file; on failure prints to stderr and returns the exit code.
int load(const std::string& path, Diagram& out) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "cannot read " << path << "\n";
    return kParseError;
  }
  const ci_status s = ci_diagram_parse(text.c_str(), &out.d);
  if (s != CI_OK) {
    std::cerr << path << ": " << error_line(s) << "\n";
    return exit_for(s);
  }
  return kOk;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  ci_string_free(s);
  return out;
}

void summary(const std::string& label, const ci_diagram* d, double seconds) {
  int genus = 0;
  size_t crossings = 0;
  int64_t w = 0;
  ci_diagram_genus(d, &genus);
  ci_diagram_crossing_count(d, &crossings);
  ci_diagram_writhe(d, &w);
  std::fprintf(stderr, "%s: genus %d, %zu crossings, writhe %lld, %.3f s\n", label.c_str(), genus, crossings,
               static_cast<long long>(w), seconds);
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ",") + n;
  return out.empty() ? "all" : out;
}

struct ComputeOptions {
  std::string alpha;
  bool has_alpha = false;
  std::vector<std::string> invariants;
  bool normalized = false;
};

int run_compute(const std::string& path, const ComputeOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  Diagram d;
  if (int rc = load(path, d)) return rc;
  char* json = nullptr;
  const ci_status s = ci_compute(d.d, opt.has_alpha ? opt.alpha.c_str() : nullptr, join(opt.invariants).c_str(),
                                 opt.normalized, &json);
  if (s != CI_OK) {
    std::cerr << path << ": " << error_line(s) << "\n";
    return exit_for(s);
  }
  std::cout << take(json) << "\n";
  summary(path, d.d, since(t0));
  return kOk;
}

int run_verify(const std::string& path, const std::string& alpha, bool has_alpha, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  Diagram d;
  if (int rc = load(path, d)) return rc;
  char* json = nullptr;
  int passed = 0;
  const ci_status s = ci_verify(d.d, has_alpha ? alpha.c_str() : nullptr, seed, &json, &passed);
  if (s != CI_OK) {
    std::cerr << path << ": " << error_line(s) << "\n";
    return exit_for(s) == kNotAdmissible ? kNotAdmissible : (is_parse_error(s) ? kParseError : kCheckFailed);
  }
  const std::string out = take(json);
  std::cout << out << "\n";
  const Json report = Json::parse(out);
  for (const auto& c : report["checks"])
    std::fprintf(stderr, "  %-20s %s (%lld cases)%s%s\n", c["name"].get<std::string>().c_str(),
                 c["passed"].get<bool>() ? "pass" : "FAIL", static_cast<long long>(c["cases"].get<int64_t>()),
                 c["detail"].get<std::string>().empty() ? "" : ": ", c["detail"].get<std::string>().c_str());
  summary(path, d.d, since(t0));
  return passed ? kOk : kCheckFailed;
}

int run_scan(const std::string& path, int bound) {
  const auto t0 = std::chrono::steady_clock::now();
  Diagram d;
  if (int rc = load(path, d)) return rc;
  char* json = nullptr;
  const ci_status s = ci_scan(d.d, bound, &json);
  if (s != CI_OK) {
    std::cerr << path << ": " << error_line(s) << "\n";
    return exit_for(s);
  }
  const std::string out = take(json);
  std::cout << out << "\n";
  const Json report = Json::parse(out);
  std::fprintf(stderr, "%zu zero classes within bound %d. %s\n", report["zero_classes"].size(), bound,
               report["note"].get<std::string>().c_str());
  summary(path, d.d, since(t0));
  return kOk;
}

// One JSON line per file, in filename order.
int run_batch(const std::string& dir, const ComputeOptions& opt, unsigned jobs) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    std::cerr << dir << " is not a directory\n";
    return kParseError;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && !name.empty() && name[0] != '.') files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });

  std::vector<std::string> lines(files.size());
  std::vector<char> ok(files.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      Json rec;
      rec["file"] = files[i].filename().string();
      std::string text;
      ci_diagram* d = nullptr;
      ci_status s = CI_OK;
      if (!read_file(files[i].string(), text)) {
        rec["error"] = {{"code", "Unreadable"}, {"message", "cannot read file"}};
        lines[i] = rec.dump();
        continue;
      }
      s = ci_diagram_parse(text.c_str(), &d);
      char* json = nullptr;
      if (s == CI_OK)
        s = ci_compute(d, opt.has_alpha ? opt.alpha.c_str() : nullptr, join(opt.invariants).c_str(), opt.normalized,
                       &json);
      if (s == CI_OK) {
        rec["report"] = Json::parse(take(json));
        ok[i] = 1;
      } else {
        rec["error"] = {{"code", ci_status_name(s)}, {"message", ci_last_error_message()}};
        if (s == CI_NOT_ADMISSIBLE) rec["error"]["pairing"] = ci_last_pairing();
      }
      ci_diagram_free(d);
      lines[i] = rec.dump();
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(files.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t good = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::cout << lines[i] << "\n";
    good += ok[i];
  }
  std::fprintf(stderr, "%zu of %zu files processed\n", good, files.size());
  return files.empty() || good > 0 ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chord indices and writhe-type invariants of knot diagrams on surfaces"};
  app.require_subcommand(1);

  const std::vector<std::string> names = {"all",
                                          "chord_index",
                                          "ind",
                                          "parity",
                                          "index_function",
                                          "writhe_polynomial",
                                          "virtual_writhe_polynomial",
                                          "group_ring",
                                          "small_state_sum",
                                          "regular",
                                          "transcendental"};

  ComputeOptions copt;
  std::string file, dir;
  std::uint64_t seed = 1;
  int bound = 2;
  unsigned jobs = 1;

  auto* compute = app.add_subcommand("compute", "Compute invariants of one diagram file");
  compute->add_option("file", file, "Diagram file")->required();
  auto* calpha = compute->add_option("--alpha", copt.alpha, "Class as 2g integers, or 'auto' for the knot class");
  compute->add_option("--invariant", copt.invariants, "Invariant name, repeatable (default all)")
      ->check(CLI::IsMember(names));
  compute->add_flag("--normalized", copt.normalized, "Normalized virtual writhe polynomial");

  std::string valpha;
  auto* verify = app.add_subcommand("verify", "Run the identity checks on one diagram file");
  verify->add_option("file", file, "Diagram file")->required();
  auto* vopt = verify->add_option("--alpha", valpha, "Class as 2g integers, or 'auto'");
  verify->add_option("--seed", seed, "Seed for the random classes");

  auto* scan = app.add_subcommand("scan", "List admissible classes with vanishing writhe polynomial");
  scan->add_option("file", file, "Diagram file")->required();
  scan->add_option("--bound", bound, "Coefficient bound in the admissible basis")->check(CLI::PositiveNumber);

  ComputeOptions bopt;
  auto* batch = app.add_subcommand("batch", "Compute invariants for every file in a directory");
  batch->add_option("directory", dir, "Directory of diagram files")->required();
  auto* balpha = batch->add_option("--alpha", bopt.alpha, "Class as 2g integers, or 'auto'");
  batch->add_option("--invariant", bopt.invariants, "Invariant name, repeatable")->check(CLI::IsMember(names));
  batch->add_flag("--normalized", bopt.normalized, "Normalized virtual writhe polynomial");
  batch->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  if (compute->parsed()) {
    copt.has_alpha = calpha->count() > 0;
    return run_compute(file, copt);
  }
  if (verify->parsed()) return run_verify(file, valpha, vopt->count() > 0, seed);
  if (scan->parsed()) return run_scan(file, bound);
  bopt.has_alpha = balpha->count() > 0;
  return run_batch(dir, bopt, jobs);
}
