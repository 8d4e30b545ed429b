#pragma once

#include "graded/ideal.hpp"
#include "graded/mult_set.hpp"

namespace graded {

/// S^{-1}R for a finite graded ring, realized as the quotient R/K with
/// K = { r : s r = 0 for some s in S }.  Because S is closed under
/// products, K is the annihilator of the product of all members of S; the
/// image of every s is regular in the quotient, and a regular element of a
/// finite commutative ring is a unit, so fractions r/s are well defined.
class LocalizedRing {
public:
    LocalizedRing(RingPtr base, MultSet s);

    const RingPtr& ring() const { return quotient_; }   // S^{-1}R
    const RingPtr& base() const { return base_; }
    const GradedIdeal& kernel() const { return kernel_; }
    const MultSet& set() const { return set_; }

    Index image(Index base_elem) const;
    /// Inverse of the image of s; s must belong to S.
    Index inverse_of_image(Index s) const;
    Index fraction(Index r, Index s) const;

private:
    RingPtr base_;
    MultSet set_;
    GradedIdeal kernel_;
    RingPtr quotient_;
    std::vector<Index> inverse_;   // indexed by quotient element, 0 if absent
    std::vector<bool> has_inverse_;
};

/// Ideal of S^{-1}R generated by the image of P.
GradedIdeal extend_ideal(const LocalizedRing& loc, const GradedIdeal& p);

/// Preimage in R of an ideal of S^{-1}R.
GradedIdeal contract_ideal(const LocalizedRing& loc, const GradedIdeal& q);

/// Every nonzero homogeneous element a unit.
bool is_graded_field(const RingPtr& r);
/// No homogeneous zero divisors.
bool is_graded_domain(const RingPtr& r);

/// S* = { r in h(R) : r/1 is a unit in S^{-1}R }.
MultSet saturation_star(const MultSet& s);

} // namespace graded
