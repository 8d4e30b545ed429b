#pragma once

#include <string>
#include <vector>

#include "graded/ring.hpp"

namespace graded {

/// Parsed problem document: a ring plus optional ideal / multiplicative-set
/// generator lists (already resolved to element indices of the ring).
struct ProblemSpec {
    RingPtr ring;
    std::vector<Index> ideal_gens;
    std::vector<Index> set_gens;
};

/// Parse a JSON problem document.  Schema:
///
///   {
///     "ring": {
///       "kind": "cyclic" | "poly_quotient" | "product" | "quotient",
///       ... per-kind fields, see below ...
///     },
///     "ideal_generators": [[...coords...], ...],   // optional
///     "set_generators":   [[...coords...], ...]    // optional
///   }
///
///   cyclic:        modulus, grade_orders (opt), grade_of_one (opt residues)
///   poly_quotient: modulus, poly (lowest-first, monic), grade_orders,
///                  x_grade (residues)
///   product:       factors: [ringspec, ringspec]
///   quotient:      base: ringspec, ideal_generators: [[...], ...]
///
/// Elements are coordinate vectors over the ring's additive basis.  For a
/// quotient ring, coordinates of the immediate base ring are also accepted
/// (and projected) when the arities differ.
ProblemSpec parse_problem_spec(const std::string& json_text);

/// Resolve one coordinate vector against a ring (with the quotient-ring
/// base-coordinate convenience described above).
Index resolve_element(const RingPtr& ring, const std::vector<int>& coords);

} // namespace graded
