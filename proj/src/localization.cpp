#include "graded/localization.hpp"

#include "graded/errors.hpp"

namespace graded {

LocalizedRing::LocalizedRing(RingPtr base, MultSet s)
    : base_(std::move(base)), set_(std::move(s)), kernel_(GradedIdeal::zero(base_)) {
    if (set_.ring() != base_) throw precondition_error("localize: set from a different ring");
    // K = Ann(sigma) for sigma the product of all of S: any annihilated
    // element is annihilated by sigma, and sigma itself lies in S.
    Index sigma = base_->one();
    for (Index x : set_.canonical_order()) sigma = base_->mul(sigma, x);
    DenseSet k(base_->order());
    for (std::size_t x = 0; x < base_->order(); ++x)
        if (base_->mul(sigma, static_cast<Index>(x)) == base_->zero())
            k.insert(static_cast<Index>(x));
    kernel_ = GradedIdeal::from_elements(base_, std::move(k));
    if (!kernel_.is_graded())
        throw precondition_error("localization kernel failed to be graded");
    quotient_ = quotient_ring(kernel_);

    has_inverse_.assign(quotient_->order(), false);
    inverse_.assign(quotient_->order(), 0);
    for (Index x : set_.canonical_order()) {
        Index q = image(x);
        if (has_inverse_[q]) continue;
        auto inv = quotient_->inverse(q);
        if (!inv)
            throw precondition_error("image of the multiplicative set is not invertible");
        has_inverse_[q] = true;
        inverse_[q] = *inv;
    }
}

Index LocalizedRing::image(Index base_elem) const {
    return quotient_->quotient_info()->projection[base_elem];
}

Index LocalizedRing::inverse_of_image(Index s) const {
    if (!set_.contains(s))
        throw precondition_error("inverse_of_image: element not in the multiplicative set");
    return inverse_[image(s)];
}

Index LocalizedRing::fraction(Index r, Index s) const {
    return quotient_->mul(image(r), inverse_of_image(s));
}

GradedIdeal extend_ideal(const LocalizedRing& loc, const GradedIdeal& p) {
    if (p.ring() != loc.base()) throw precondition_error("extend_ideal: mismatched rings");
    DenseSet img(loc.ring()->order());
    p.elements().for_each([&](Index x) { img.insert(loc.image(x)); });
    // the image of an ideal under a surjection is already an ideal
    return GradedIdeal::from_elements(loc.ring(), std::move(img));
}

GradedIdeal contract_ideal(const LocalizedRing& loc, const GradedIdeal& q) {
    if (q.ring() != loc.ring()) throw precondition_error("contract_ideal: mismatched rings");
    DenseSet pre(loc.base()->order());
    for (std::size_t x = 0; x < loc.base()->order(); ++x)
        if (q.contains(loc.image(static_cast<Index>(x)))) pre.insert(static_cast<Index>(x));
    return GradedIdeal::from_elements(loc.base(), std::move(pre));
}

bool is_graded_field(const RingPtr& r) {
    for (Index h : r->homogeneous_elements())
        if (h != r->zero() && !r->is_unit(h)) return false;
    return true;
}

bool is_graded_domain(const RingPtr& r) {
    const auto& hom = r->homogeneous_elements();
    for (std::size_t a = 0; a < hom.size(); ++a) {
        if (hom[a] == r->zero()) continue;
        for (std::size_t b = 0; b < hom.size(); ++b) {
            if (hom[b] == r->zero()) continue;
            if (r->hom_product(r->hom_rank(hom[a]), r->hom_rank(hom[b])) == r->zero())
                return false;
        }
    }
    return true;
}

MultSet saturation_star(const MultSet& s) {
    LocalizedRing loc(s.ring(), s);
    const RingPtr& q = loc.ring();
    std::vector<bool> unit_memo(q->order(), false), unit_known(q->order(), false);
    DenseSet sat(s.ring()->order());
    for (Index h : s.ring()->homogeneous_elements()) {
        Index img = loc.image(h);
        if (!unit_known[img]) {
            unit_known[img] = true;
            unit_memo[img] = q->is_unit(img);
        }
        if (unit_memo[img]) sat.insert(h);
    }
    return MultSet::from_elements(s.ring(), sat);
}

} // namespace graded
