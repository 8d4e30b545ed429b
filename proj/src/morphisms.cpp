#include "graded/morphisms.hpp"

#include "graded/errors.hpp"

namespace graded {

GradedHom::GradedHom(RingPtr src, RingPtr dst, std::vector<Index> table, GradedIdeal kernel,
                     bool epi)
    : src_(std::move(src)), dst_(std::move(dst)), table_(std::move(table)),
      kernel_(std::move(kernel)), epi_(epi) {}

GradedHom GradedHom::from_basis_images(RingPtr src, RingPtr dst,
                                       const std::vector<Index>& basis_images) {
    const int k = src->basis_size();
    if (static_cast<int>(basis_images.size()) != k)
        throw precondition_error("homomorphism needs one image per basis element");
    for (int i = 0; i < k; ++i) {
        // order compatibility makes the additive extension well defined
        if (dst->scale(src->basis_order(i), basis_images[i]) != dst->zero())
            throw precondition_error("homomorphism violates additive orders");
        // grade preservation on the basis
        if (!dst->component_set(src->basis_grade(i)).contains(basis_images[i]))
            throw precondition_error("homomorphism does not preserve grades");
    }

    std::vector<Index> table(src->order());
    for (std::size_t x = 0; x < src->order(); ++x) {
        std::vector<int> c = src->coords_of(static_cast<Index>(x));
        Index v = dst->zero();
        for (int i = 0; i < k; ++i)
            if (c[i]) v = dst->add(v, dst->scale(c[i], basis_images[i]));
        table[x] = v;
    }
    if (table[src->one()] != dst->one())
        throw precondition_error("homomorphism is not unital");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Index lhs = table[src->mul(src->basis_element(i), src->basis_element(j))];
            Index rhs = dst->mul(basis_images[i], basis_images[j]);
            if (lhs != rhs) throw precondition_error("homomorphism is not multiplicative");
        }

    DenseSet ker(src->order());
    DenseSet img(dst->order());
    for (std::size_t x = 0; x < src->order(); ++x) {
        if (table[x] == dst->zero()) ker.insert(static_cast<Index>(x));
        img.insert(table[x]);
    }
    GradedIdeal kernel = GradedIdeal::from_elements(src, std::move(ker));
    if (!kernel.is_graded())
        throw precondition_error("homomorphism kernel failed to be graded");
    bool epi = img.size() == dst->order();
    return GradedHom(std::move(src), std::move(dst), std::move(table), std::move(kernel), epi);
}

GradedHom quotient_projection(const RingPtr& quotient) {
    const QuotientInfo* qi = quotient->quotient_info();
    if (!qi) throw precondition_error("quotient_projection: not a quotient ring");
    std::vector<Index> images(qi->base->basis_size());
    for (int i = 0; i < qi->base->basis_size(); ++i)
        images[i] = qi->projection[qi->base->basis_element(i)];
    return GradedHom::from_basis_images(qi->base, quotient, images);
}

GradedHom component_inclusion(const RingPtr& component_ring) {
    const ComponentInfo* ci = component_ring->component_info();
    if (!ci) throw precondition_error("component_inclusion: not a component ring");
    std::vector<Index> images(component_ring->basis_size());
    for (int i = 0; i < component_ring->basis_size(); ++i)
        images[i] = ci->parent->basis_element(ci->parent_basis[i]);
    return GradedHom::from_basis_images(component_ring, ci->parent, images);
}

GradedHom product_projection(const RingPtr& prod, int which) {
    const ProductInfo* pi = prod->product_info();
    if (!pi) throw precondition_error("product_projection: not a product ring");
    const RingPtr& dst = which == 0 ? pi->left : pi->right;
    const int ka = pi->left->basis_size();
    std::vector<Index> images(prod->basis_size(), dst->zero());
    for (int i = 0; i < prod->basis_size(); ++i) {
        if (which == 0 && i < ka) images[i] = dst->basis_element(i);
        if (which == 1 && i >= ka) images[i] = dst->basis_element(i - ka);
    }
    return GradedHom::from_basis_images(prod, dst, images);
}

GradedIdeal image_ideal(const GradedHom& f, const GradedIdeal& p) {
    if (p.ring() != f.source()) throw precondition_error("image_ideal: mismatched rings");
    std::vector<Index> gens;
    for (Index g : p.generators()) gens.push_back(f(g));
    GradedIdeal out = GradedIdeal::from_generators(f.target(), gens);
    if (f.is_epi()) {
        DenseSet img(f.target()->order());
        p.elements().for_each([&](Index x) { img.insert(f(x)); });
        if (!(img == out.elements()))
            throw precondition_error("epimorphic image of an ideal must equal the set image");
    }
    return out;
}

GradedIdeal preimage_ideal(const GradedHom& f, const GradedIdeal& q) {
    if (q.ring() != f.target()) throw precondition_error("preimage_ideal: mismatched rings");
    DenseSet pre(f.source()->order());
    for (std::size_t x = 0; x < f.source()->order(); ++x)
        if (q.contains(f(static_cast<Index>(x)))) pre.insert(static_cast<Index>(x));
    return GradedIdeal::from_elements(f.source(), std::move(pre));
}

MultSet image_multset(const GradedHom& f, const MultSet& s) {
    if (s.ring() != f.source()) throw precondition_error("image_multset: mismatched rings");
    DenseSet img(f.target()->order());
    for (Index x : s.canonical_order()) {
        Index y = f(x);
        if (y == f.target()->zero())
            throw precondition_error("image of the multiplicative set contains 0");
        img.insert(y);
    }
    return MultSet::from_elements(f.target(), img);
}

} // namespace graded
