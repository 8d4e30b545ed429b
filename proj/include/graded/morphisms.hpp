#pragma once

#include "graded/ideal.hpp"
#include "graded/mult_set.hpp"

namespace graded {

/// Unital graded ring homomorphism between finite graded rings, stored as
/// a full value table.  Validated at construction: additive (well defined
/// on each cyclic basis factor), multiplicative on basis pairs, f(1) = 1,
/// and grade preserving (f(R_g) inside R'_g).
class GradedHom {
public:
    static GradedHom from_basis_images(RingPtr src, RingPtr dst,
                                       const std::vector<Index>& basis_images);

    const RingPtr& source() const { return src_; }
    const RingPtr& target() const { return dst_; }

    Index operator()(Index x) const { return table_[x]; }

    const GradedIdeal& kernel() const { return kernel_; }
    bool is_epi() const { return epi_; }
    bool is_mono() const { return kernel_.size() == 1; }

private:
    GradedHom(RingPtr src, RingPtr dst, std::vector<Index> table, GradedIdeal kernel,
              bool epi);

    RingPtr src_;
    RingPtr dst_;
    std::vector<Index> table_;
    GradedIdeal kernel_;
    bool epi_;
};

/// Projection R -> R/I recovered from a quotient ring's provenance.
GradedHom quotient_projection(const RingPtr& quotient);

/// Inclusion R_e -> R recovered from an identity-component ring's provenance.
GradedHom component_inclusion(const RingPtr& component_ring);

/// Projection R1 x R2 -> R_i (which = 0 for the left factor, 1 for the right).
GradedHom product_projection(const RingPtr& prod, int which);

/// Ideal generated by the image of P (equals the set image when f is epi).
GradedIdeal image_ideal(const GradedHom& f, const GradedIdeal& p);

/// Preimage of an ideal; automatically an ideal, graded when Q is.
GradedIdeal preimage_ideal(const GradedHom& f, const GradedIdeal& q);

/// Image of a multiplicative set; requires 0 outside the image.
MultSet image_multset(const GradedHom& f, const MultSet& s);

} // namespace graded
