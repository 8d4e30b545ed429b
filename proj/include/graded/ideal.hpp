#pragma once

#include <vector>

#include "graded/dense_set.hpp"
#include "graded/mult_set.hpp"
#include "graded/ring.hpp"

namespace graded {

/// An ideal of a finite graded ring, held as its full realized element set
/// together with a homogeneous generator list when the ideal is graded.
/// Equality is realized-set equality; generator lists are not canonical.
class GradedIdeal {
public:
    /// Smallest graded ideal containing the given homogeneous generators.
    static GradedIdeal from_generators(RingPtr ring, const std::vector<Index>& gens);

    /// Wrap a realized element set.  Verifies the set is an ideal; computes
    /// gradedness and, when graded, a homogeneous generator list.
    static GradedIdeal from_elements(RingPtr ring, DenseSet elems);

    static GradedIdeal zero(RingPtr ring);
    static GradedIdeal unit(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const DenseSet& elements() const { return set_; }
    const std::vector<Index>& generators() const { return gens_; }
    bool contains(Index x) const { return set_.contains(x); }
    std::size_t size() const { return size_; }
    bool is_proper() const { return !set_.contains(ring_->one()); }
    bool is_graded() const { return graded_; }
    bool is_zero() const { return size_ == 1; }

    /// P_g = P intersected with R_g.
    DenseSet slice(int g) const;

    bool operator==(const GradedIdeal& o) const { return set_ == o.set_; }
    bool subset_of(const GradedIdeal& o) const { return set_.is_subset_of(o.set_); }

private:
    GradedIdeal(RingPtr ring, DenseSet set, std::vector<Index> gens, bool graded);
    friend GradedIdeal ideal_unchecked(RingPtr, DenseSet, std::vector<Index>, bool);

    RingPtr ring_;
    DenseSet set_;
    std::vector<Index> gens_;
    bool graded_;
    std::size_t size_;
};

/// Subgroup-and-absorption test plus component decomposability.
bool is_graded_ideal(const RingPtr& ring, const DenseSet& subset);

/// Additive span of a set of elements (the subgroup they generate).
DenseSet additive_span(const GradedRing& ring, const std::vector<Index>& gens);

/// Greedy homogeneous generator list for a graded ideal's realized set.
std::vector<Index> homogeneous_generators(const RingPtr& ring, const DenseSet& elems);

/// Graded radical: all x whose homogeneous components each have some power
/// in P (power search capped by |R|; powers cycle within that bound).
GradedIdeal grad_radical(const GradedIdeal& p);

/// (P : s) = { x : s x in P }.  Graded whenever s is homogeneous; permitted
/// for general s, in which case the result may fail to be graded.
GradedIdeal colon_elem(const GradedIdeal& p, Index s);

/// Union over n >= 1 of (P : s^n); the chain stabilizes within |R| steps.
GradedIdeal colon_stable(const GradedIdeal& p, Index s);

/// (P :_{R_g} a) = { r in R_g : r a in P }.
DenseSet colon_graded_slice(const GradedIdeal& p, Index a, int g);

GradedIdeal sum(const GradedIdeal& p, const GradedIdeal& q);
GradedIdeal product(const GradedIdeal& p, const GradedIdeal& q);
GradedIdeal intersect(const GradedIdeal& p, const GradedIdeal& q);

/// Every graded ideal exactly once, in canonical order (size, then lowest
/// differing member).  Computed as the join closure of the homogeneous
/// principal ideals.
std::vector<GradedIdeal> enumerate_graded_ideals(const RingPtr& ring);

/// A graded ideal containing I, disjoint from S, maximal under inclusion
/// among such (exhaustive over the graded-ideal lattice; first maximal in
/// canonical order).  Requires I and S disjoint.
GradedIdeal maximal_disjoint_ideal(const RingPtr& ring, const GradedIdeal& i,
                                   const MultSet& s);

/// R/I as a graded ring, with quotient provenance for the projection map.
/// I must be a proper graded ideal.
RingPtr quotient_ring(const GradedIdeal& i);

/// The product ideal P1 x P2 inside a direct product ring.
GradedIdeal product_ideal(const RingPtr& prod, const GradedIdeal& p1, const GradedIdeal& p2);

/// The product set S1 x S2 inside a direct product ring; valid only when
/// every pair is homogeneous (matching grades).
MultSet product_multset(const RingPtr& prod, const MultSet& s1, const MultSet& s2);

bool is_disjoint(const GradedIdeal& p, const MultSet& s);

} // namespace graded
