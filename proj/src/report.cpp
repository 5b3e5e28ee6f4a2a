#include "chordidx/report.hpp"

#include <algorithm>

#include "chordidx/error.hpp"
#include "chordidx/verify.hpp"

namespace chordidx {

namespace {

Json terms_json(const std::map<std::int64_t, std::int64_t>& terms) {
  Json out = Json::array();
  for (const auto& [e, c] : terms) out.push_back({e, c});
  return out;
}

Json per_crossing(const std::map<CrossingId, std::int64_t>& values) {
  Json out = Json::array();
  for (const auto& [id, v] : values) out.push_back({{"crossing", id}, {"value", v}});
  return out;
}

}  // namespace

const std::vector<std::string>& invariant_names() {
  static const std::vector<std::string> names = {
      "chord_index",     "ind",          "parity",          "index_function",  "writhe_polynomial",
      "virtual_writhe_polynomial", "group_ring", "small_state_sum", "regular", "transcendental"};
  return names;
}

bool needs_class(const std::string& name) {
  return name == "chord_index" || name == "parity" || name == "index_function" || name == "writhe_polynomial" ||
         name == "transcendental";
}

Json to_json(const HomologyClass& c) {
  Json out = Json::array();
  for (auto x : c.coords()) out.push_back(x);
  return out;
}

Json to_json(const LaurentPoly& p) { return {{"text", p.to_string()}, {"terms", terms_json(p.terms())}}; }

Json to_json(const CyclicPoly& p) {
  return {{"modulus", p.modulus()}, {"text", p.to_string('s')}, {"terms", terms_json(p.terms())}};
}

Json to_json(const GroupRingElement& g) {
  Json out = Json::array();
  for (const auto& [cls, c] : g.terms()) out.push_back({{"class", to_json(cls)}, {"coeff", c}});
  return out;
}

Json to_json(const RegularElement& r) {
  Json out = Json::array();
  for (const auto& [cls, poly] : r.terms()) {
    Json terms = Json::array();
    for (const auto& [m, c] : poly.terms()) terms.push_back({m.first, m.second, c});
    out.push_back({{"class", to_json(cls)}, {"coeff", {{"text", poly.to_string()}, {"terms", terms}}}});
  }
  return out;
}

Json to_json(const FormalSum& f) {
  Json out = Json::array();
  for (const auto& [key, c] : f.terms())
    out.push_back({{"k", key.k}, {"poly", terms_json(key.exponent.terms())}, {"coeff", c}});
  return out;
}

Json summary_json(const SurfaceDiagram& d) {
  return {{"genus", d.genus()},
          {"crossings", d.crossing_count()},
          {"writhe", writhe(d)},
          {"knot_class", to_json(walk_class(d))}};
}

Json compute_report(const SurfaceDiagram& d, const std::optional<HomologyClass>& alpha,
                    const std::vector<std::string>& invariants, bool normalized) {
  std::vector<std::string> wanted;
  for (const auto& name : invariants) {
    if (name == "all") {
      wanted = invariant_names();
      break;
    }
    if (std::find(invariant_names().begin(), invariant_names().end(), name) == invariant_names().end())
      fail(ErrorCode::kInvalidArgument, "unknown invariant '" + name + "'");
    if (std::find(wanted.begin(), wanted.end(), name) == wanted.end()) wanted.push_back(name);
  }
  if (alpha) require_admissible(*alpha, d);

  Json report;
  report["diagram"] = summary_json(d);
  report["alpha"] = alpha ? to_json(*alpha) : Json(nullptr);
  Json values = Json::object();
  Json skipped = Json::array();
  const GaussDiagram g = gauss_diagram(d);
  for (const auto& name : invariant_names()) {
    if (std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
    if (needs_class(name) && !alpha) {
      skipped.push_back(name);
      continue;
    }
    if (name == "chord_index") {
      values[name] = per_crossing(chord_indices(d, *alpha));
    } else if (name == "ind") {
      std::map<CrossingId, std::int64_t> v;
      for (const Chord& c : g.chords()) v[c.id] = ind(g, c.id);
      values[name] = per_crossing(v);
    } else if (name == "parity") {
      std::map<CrossingId, std::int64_t> v;
      for (const auto& [id, info] : d.crossings()) v[id] = parity(d, *alpha, id);
      values[name] = per_crossing(v);
    } else if (name == "index_function") {
      Json arr = Json::array();
      for (const auto& [id, info] : d.crossings())
        arr.push_back({{"crossing", id}, {"value", to_json(index_function(d, *alpha, id))}});
      values[name] = arr;
    } else if (name == "writhe_polynomial") {
      values[name] = to_json(writhe_polynomial(d, *alpha));
    } else if (name == "virtual_writhe_polynomial") {
      values[name] = to_json(virtual_writhe_polynomial(g, normalized));
    } else if (name == "group_ring") {
      values[name] = to_json(group_ring_invariant(d));
    } else if (name == "small_state_sum") {
      values[name] = to_json(small_state_sum(d));
    } else if (name == "regular") {
      values[name] = to_json(regular_invariant(d));
    } else if (name == "transcendental") {
      values[name] = to_json(transcendental_invariant(d, *alpha));
    }
  }
  report["normalized"] = normalized;
  report["invariants"] = values;
  report["skipped"] = skipped;
  return report;
}

Json verify_report(const SurfaceDiagram& d, const std::optional<HomologyClass>& alpha, std::uint64_t seed,
                   bool* all_passed) {
  Json report;
  report["diagram"] = summary_json(d);
  report["alpha"] = alpha ? to_json(*alpha) : Json(nullptr);
  report["seed"] = seed;
  Json checks = Json::array();
  bool ok = true;
  for (const auto& r : run_checks(d, alpha, seed)) {
    ok = ok && r.passed;
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
  }
  report["checks"] = checks;
  report["all_passed"] = ok;
  if (all_passed) *all_passed = ok;
  return report;
}

Json scan_report(const SurfaceDiagram& d, int bound) {
  const auto found = zero_class_scan(d, bound);
  Json report;
  report["diagram"] = summary_json(d);
  report["bound"] = bound;
  Json basis = Json::array();
  for (const auto& b : admissible_subgroup_basis(d)) basis.push_back(to_json(b));
  report["admissible_basis"] = basis;
  Json classes = Json::array();
  for (const auto& c : found) classes.push_back(to_json(c));
  report["zero_classes"] = classes;
  report["note"] =
      "Classes listed have a vanishing writhe polynomial. An empty list only means no such class was found "
      "within the bound; it is not a proof that the surface has minimal genus.";
  return report;
}

}  // namespace chordidx
