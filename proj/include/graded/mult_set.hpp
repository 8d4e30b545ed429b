#pragma once

#include <vector>

#include "graded/dense_set.hpp"
#include "graded/ring.hpp"

namespace graded {

/// Multiplicative subset of h(R): contains 1, closed under products,
/// excludes 0.  Immutable after construction.
class MultSet {
public:
    /// Multiplicative closure of homogeneous generators, always including
    /// the empty product 1.  Throws if the closure reaches 0 (such a set is
    /// useless here: 0 lies in every ideal, so disjointness always fails).
    static MultSet closure(RingPtr ring, const std::vector<Index>& gens);

    /// Wrap an already-closed set; validates every invariant.
    static MultSet from_elements(RingPtr ring, const DenseSet& elems);

    const RingPtr& ring() const { return ring_; }
    const DenseSet& elements() const { return set_; }
    const std::vector<Index>& generators() const { return gens_; }
    bool contains(Index x) const { return set_.contains(x); }
    std::size_t size() const { return sorted_.size(); }

    /// Elements sorted by index; this is the canonical witness search order.
    const std::vector<Index>& canonical_order() const { return sorted_; }

    bool in_identity_component() const;
    bool all_units() const;
    bool all_regular() const;
    bool is_subset_of(const MultSet& o) const { return set_.is_subset_of(o.set_); }

private:
    MultSet(RingPtr ring, DenseSet set, std::vector<Index> gens);

    RingPtr ring_;
    DenseSet set_;
    std::vector<Index> gens_;
    std::vector<Index> sorted_;
};

} // namespace graded
