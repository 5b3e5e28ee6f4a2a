#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "chordidx/diagram.hpp"
#include "chordidx/homology.hpp"
#include "chordidx/indices.hpp"
#include "chordidx/invariants.hpp"

namespace chordidx {

using Json = nlohmann::ordered_json;

/// Names accepted by compute_report, in report order.
const std::vector<std::string>& invariant_names();
/// Names that need a class.
bool needs_class(const std::string& name);

Json to_json(const HomologyClass& c);
Json to_json(const LaurentPoly& p);
Json to_json(const CyclicPoly& p);
Json to_json(const GroupRingElement& g);
Json to_json(const RegularElement& r);
Json to_json(const FormalSum& f);

/// genus, crossings, writhe, knot_class.
Json summary_json(const SurfaceDiagram& d);

/// Requested invariants (names from invariant_names(), or "all"). Invariants
/// that need a class are listed under "skipped" when alpha is missing.
/// Throws NotAdmissible, InvalidArgument (unknown name).
Json compute_report(const SurfaceDiagram& d, const std::optional<HomologyClass>& alpha,
                    const std::vector<std::string>& invariants, bool normalized);

Json verify_report(const SurfaceDiagram& d, const std::optional<HomologyClass>& alpha, std::uint64_t seed,
                   bool* all_passed = nullptr);

/// Throws InvalidArgument for bound < 1.
Json scan_report(const SurfaceDiagram& d, int bound);

}  // namespace chordidx
