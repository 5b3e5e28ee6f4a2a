#include "chordidx/chordidx.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "chordidx/codec.hpp"
#include "chordidx/error.hpp"
#include "chordidx/report.hpp"

struct ci_diagram {
  chordidx::DiagramFile file;
};

namespace {

thread_local std::string last_error;
thread_local std::int64_t last_pairing = 0;

ci_status status_of(chordidx::ErrorCode code) { return static_cast<ci_status>(static_cast<int>(code)); }

template <class F>
ci_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return CI_OK;
  } catch (const chordidx::NotAdmissibleError& e) {
    last_error = e.what();
    last_pairing = e.pairing();
    return status_of(e.code());
  } catch (const chordidx::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return CI_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ci_status null_argument() {
  last_error = "null argument";
  return CI_NULL_ARGUMENT;
}

std::optional<chordidx::HomologyClass> resolve_alpha(const ci_diagram* d, const char* alpha) {
  if (!alpha) return d->file.alpha;
  if (std::string(alpha) == "auto") return chordidx::walk_class(d->file.diagram);
  return chordidx::parse_class(alpha, d->file.diagram.genus());
}

std::vector<std::string> split_names(const char* names) {
  std::vector<std::string> out;
  std::stringstream in(names ? names : "all");
  std::string tok;
  while (std::getline(in, tok, ',')) {
    const auto b = tok.find_first_not_of(' ');
    const auto e = tok.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(tok.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

extern "C" {

const char* ci_status_name(ci_status status) {
  switch (status) {
    case CI_OK: return "Ok";
    case CI_NULL_ARGUMENT: return "NullArgument";
    case CI_INTERNAL: return "Internal";
    default: break;
  }
  const int v = static_cast<int>(status);
  if (v >= 1 && v <= static_cast<int>(chordidx::ErrorCode::kOverflow))
    return chordidx::to_string(static_cast<chordidx::ErrorCode>(v)).data();
  return "Unknown";
}

const char* ci_last_error_message(void) { return last_error.c_str(); }

int64_t ci_last_pairing(void) { return last_pairing; }

ci_status ci_diagram_parse(const char* text, ci_diagram** out) {
  if (!text || !out) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new ci_diagram{chordidx::parse_diagram_file(text)}; });
}

void ci_diagram_free(ci_diagram* d) { delete d; }

ci_status ci_diagram_serialize(const ci_diagram* d, char** out) {
  if (!d || !out) return null_argument();
  return guarded([&] { *out = copy_string(chordidx::serialize_diagram(d->file.diagram)); });
}

void ci_string_free(char* s) { std::free(s); }

ci_status ci_diagram_genus(const ci_diagram* d, int* out) {
  if (!d || !out) return null_argument();
  *out = d->file.diagram.genus();
  return CI_OK;
}

ci_status ci_diagram_crossing_count(const ci_diagram* d, size_t* out) {
  if (!d || !out) return null_argument();
  *out = d->file.diagram.crossing_count();
  return CI_OK;
}

ci_status ci_diagram_writhe(const ci_diagram* d, int64_t* out) {
  if (!d || !out) return null_argument();
  *out = chordidx::writhe(d->file.diagram);
  return CI_OK;
}

ci_status ci_diagram_knot_class(const ci_diagram* d, int64_t* buf, size_t cap, size_t* len) {
  if (!d || !len || (cap > 0 && !buf)) return null_argument();
  return guarded([&] {
    const auto k = chordidx::walk_class(d->file.diagram);
    *len = k.rank();
    for (size_t i = 0; i < k.rank() && i < cap; ++i) buf[i] = k[i];
  });
}

ci_status ci_diagram_has_class(const ci_diagram* d, int* out) {
  if (!d || !out) return null_argument();
  *out = d->file.alpha ? 1 : 0;
  return CI_OK;
}

ci_status ci_compute(const ci_diagram* d, const char* alpha, const char* invariants, int normalized, char** json) {
  if (!d || !json) return null_argument();
  return guarded([&] {
    const auto a = resolve_alpha(d, alpha);
    *json = copy_string(chordidx::compute_report(d->file.diagram, a, split_names(invariants), normalized != 0).dump());
  });
}

ci_status ci_chord_index(const ci_diagram* d, const char* alpha, int64_t crossing, int64_t* out) {
  if (!d || !out) return null_argument();
  return guarded([&] {
    const auto a = resolve_alpha(d, alpha);
    if (!a) chordidx::fail(chordidx::ErrorCode::kInvalidArgument, "no class given and the file has none");
    *out = chordidx::chord_index(d->file.diagram, *a, crossing);
  });
}

ci_status ci_verify(const ci_diagram* d, const char* alpha, uint64_t seed, char** json, int* all_passed) {
  if (!d || !json) return null_argument();
  return guarded([&] {
    const auto a = resolve_alpha(d, alpha);
    bool ok = false;
    *json = copy_string(chordidx::verify_report(d->file.diagram, a, seed, &ok).dump());
    if (all_passed) *all_passed = ok ? 1 : 0;
  });
}

ci_status ci_scan(const ci_diagram* d, int bound, char** json) {
  if (!d || !json) return null_argument();
  return guarded([&] { *json = copy_string(chordidx::scan_report(d->file.diagram, bound).dump()); });
}

}  // extern "C"
