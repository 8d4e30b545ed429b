#include "graded/ring.hpp"

#include <algorithm>
#include <cassert>

#include "graded/errors.hpp"

namespace graded {

namespace {

constexpr std::size_t kHomTableCap = std::size_t(1) << 22;

std::string poly_to_string(const std::vector<int>& c) {
    // lowest-first coefficients; printed highest-first
    std::string s;
    for (int d = static_cast<int>(c.size()) - 1; d >= 0; --d) {
        if (c[d] == 0) continue;
        if (!s.empty()) s += "+";
        if (d == 0 || c[d] != 1) s += std::to_string(c[d]);
        if (d >= 1) s += "x";
        if (d >= 2) s += "^" + std::to_string(d);
    }
    return s.empty() ? "0" : s;
}

} // namespace

GradedRing::GradedRing(RingData data)
    : name_(std::move(data.name)),
      group_(std::move(data.group)),
      basis_orders_(std::move(data.basis_orders)),
      basis_grades_(std::move(data.basis_grades)),
      products_(std::move(data.products)),
      product_(std::move(data.product)),
      quotient_(std::move(data.quotient)),
      component_(std::move(data.component)) {
    const int k = static_cast<int>(basis_orders_.size());
    if (k == 0) throw spec_error("ring needs at least one basis element");
    if (static_cast<int>(basis_grades_.size()) != k)
        throw spec_error("basis grade list has wrong length");
    strides_.resize(k);
    for (int i = 0; i < k; ++i) {
        if (basis_orders_[i] < 1) throw spec_error("basis order must be >= 1");
        if (basis_grades_[i] < 0 || basis_grades_[i] >= group_.size())
            throw spec_error("basis grade out of range");
        strides_[i] = static_cast<Index>(order_);
        order_ *= static_cast<std::size_t>(basis_orders_[i]);
        if (order_ > kMaxOrder) throw cap_error("ring order exceeds cap " + std::to_string(kMaxOrder));
    }
    if (order_ < 2) throw spec_error("ring must have at least two elements");
    if (static_cast<int>(products_.size()) != k)
        throw spec_error("basis product table has wrong shape");
    for (auto& row : products_) {
        if (static_cast<int>(row.size()) != k)
            throw spec_error("basis product table has wrong shape");
        for (auto& cell : row) {
            if (static_cast<int>(cell.size()) != k)
                throw spec_error("basis product entry has wrong arity");
            for (int i = 0; i < k; ++i) {
                cell[i] %= basis_orders_[i];
                if (cell[i] < 0) cell[i] += basis_orders_[i];
            }
        }
    }
    if (static_cast<int>(data.one_coords.size()) != k)
        throw spec_error("identity coordinates have wrong arity");
    one_ = index_of(data.one_coords);
    if (one_ == 0) throw spec_error("identity must differ from zero");
}

RingPtr GradedRing::create(RingData data) {
    auto ring = std::shared_ptr<GradedRing>(new GradedRing(std::move(data)));
    ring->finalize();
    ring->validate();
    return ring;
}

void GradedRing::finalize() {
    const int k = basis_size();
    coords_flat_.resize(order_ * k);
    for (std::size_t x = 0; x < order_; ++x) {
        std::size_t rem = x;
        for (int i = 0; i < k; ++i) {
            coords_flat_[x * k + i] = static_cast<int>(rem % basis_orders_[i]);
            rem /= basis_orders_[i];
        }
    }

    grade_positions_.assign(group_.size(), {});
    for (int i = 0; i < k; ++i) grade_positions_[basis_grades_[i]].push_back(i);

    comp_elems_.resize(group_.size());
    comp_sets_.assign(group_.size(), DenseSet(order_));
    DenseSet seen(order_);
    for (int g = 0; g < group_.size(); ++g) {
        // enumerate R_g: all coordinate vectors supported on grade-g positions
        const auto& pos = grade_positions_[g];
        std::size_t count = 1;
        for (int p : pos) count *= static_cast<std::size_t>(basis_orders_[p]);
        comp_elems_[g].reserve(count);
        std::vector<int> digits(pos.size(), 0);
        for (std::size_t n = 0; n < count; ++n) {
            Index x = 0;
            std::size_t rem = n;
            for (std::size_t j = 0; j < pos.size(); ++j) {
                int d = static_cast<int>(rem % basis_orders_[pos[j]]);
                rem /= basis_orders_[pos[j]];
                x += static_cast<Index>(d) * strides_[pos[j]];
            }
            comp_elems_[g].push_back(x);
            comp_sets_[g].insert(x);
            seen.insert(x);
        }
        std::sort(comp_elems_[g].begin(), comp_elems_[g].end());
    }
    hom_ = seen.elements();
    hom_rank_.assign(order_, -1);
    for (std::size_t r = 0; r < hom_.size(); ++r)
        hom_rank_[hom_[r]] = static_cast<int>(r);

    if (hom_.size() * hom_.size() <= kHomTableCap) {
        hom_mul_.resize(hom_.size() * hom_.size());
        for (std::size_t a = 0; a < hom_.size(); ++a)
            for (std::size_t b = 0; b <= a; ++b) {
                Index p = mul(hom_[a], hom_[b]);
                hom_mul_[a * hom_.size() + b] = p;
                hom_mul_[b * hom_.size() + a] = p;
            }
        hom_mul_built_ = true;
    }
}

void GradedRing::validate() const {
    const int k = basis_size();
    // identity: homogeneous of grade e, and neutral on the basis
    if (!is_homogeneous(one_) || grade_of(one_) != group_.identity())
        throw spec_error("identity is not homogeneous of the identity grade");
    for (int i = 0; i < k; ++i) {
        if (mul(one_, basis_element(i)) != basis_element(i))
            throw spec_error("identity fails to be neutral");
    }
    // commutativity + grade closure on basis pairs
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Index pij = mul(basis_element(i), basis_element(j));
            if (pij != mul(basis_element(j), basis_element(i)))
                throw spec_error("multiplication not commutative");
            int g = group_.add(basis_grades_[i], basis_grades_[j]);
            if (component(pij, g) != pij)
                throw spec_error("grading violated: product of grades " +
                                 std::to_string(basis_grades_[i]) + "," +
                                 std::to_string(basis_grades_[j]) +
                                 " leaves component " + std::to_string(g));
        }
    // associativity on basis triples (bilinearity extends it to the carrier)
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) {
                Index lhs = mul(mul(basis_element(i), basis_element(j)), basis_element(l));
                Index rhs = mul(basis_element(i), mul(basis_element(j), basis_element(l)));
                if (lhs != rhs) throw spec_error("multiplication not associative");
            }
}

Index GradedRing::index_of(std::span<const int> coords) const {
    const int k = basis_size();
    if (static_cast<int>(coords.size()) != k)
        throw spec_error("coordinate vector has wrong arity for ring " + name_);
    Index x = 0;
    for (int i = 0; i < k; ++i) {
        int c = coords[i] % basis_orders_[i];
        if (c < 0) c += basis_orders_[i];
        x += static_cast<Index>(c) * strides_[i];
    }
    return x;
}

std::vector<int> GradedRing::coords_of(Index x) const {
    const int k = basis_size();
    return std::vector<int>(coords_flat_.begin() + static_cast<std::ptrdiff_t>(x) * k,
                            coords_flat_.begin() + static_cast<std::ptrdiff_t>(x + 1) * k);
}

RingElem GradedRing::elem(Index x) const {
    return RingElem{shared_from_this(), coords_of(x)};
}

Index GradedRing::add(Index a, Index b) const {
    const int k = basis_size();
    const int* ca = &coords_flat_[static_cast<std::size_t>(a) * k];
    const int* cb = &coords_flat_[static_cast<std::size_t>(b) * k];
    Index x = 0;
    for (int i = 0; i < k; ++i) {
        int c = ca[i] + cb[i];
        if (c >= basis_orders_[i]) c -= basis_orders_[i];
        x += static_cast<Index>(c) * strides_[i];
    }
    return x;
}

Index GradedRing::neg(Index a) const {
    const int k = basis_size();
    const int* ca = &coords_flat_[static_cast<std::size_t>(a) * k];
    Index x = 0;
    for (int i = 0; i < k; ++i) {
        int c = (basis_orders_[i] - ca[i]) % basis_orders_[i];
        x += static_cast<Index>(c) * strides_[i];
    }
    return x;
}

Index GradedRing::mul(Index a, Index b) const {
    const int k = basis_size();
    const int* ca = &coords_flat_[static_cast<std::size_t>(a) * k];
    const int* cb = &coords_flat_[static_cast<std::size_t>(b) * k];
    std::vector<long long> acc(k, 0);
    for (int i = 0; i < k; ++i) {
        if (ca[i] == 0) continue;
        for (int j = 0; j < k; ++j) {
            if (cb[j] == 0) continue;
            long long c = static_cast<long long>(ca[i]) * cb[j];
            const auto& prod = products_[i][j];
            for (int l = 0; l < k; ++l) {
                if (prod[l]) acc[l] += (c % basis_orders_[l]) * prod[l];
            }
        }
    }
    Index x = 0;
    for (int l = 0; l < k; ++l)
        x += static_cast<Index>(acc[l] % basis_orders_[l]) * strides_[l];
    return x;
}

Index GradedRing::scale(long long s, Index a) const {
    const int k = basis_size();
    const int* ca = &coords_flat_[static_cast<std::size_t>(a) * k];
    Index x = 0;
    for (int i = 0; i < k; ++i) {
        long long c = (s % basis_orders_[i]) * ca[i] % basis_orders_[i];
        if (c < 0) c += basis_orders_[i];
        x += static_cast<Index>(c) * strides_[i];
    }
    return x;
}

Index GradedRing::pow(Index a, unsigned long long n) const {
    Index out = one_;
    Index base = a;
    while (n) {
        if (n & 1) out = mul(out, base);
        base = mul(base, base);
        n >>= 1;
    }
    return out;
}

bool GradedRing::is_homogeneous(Index x) const {
    return hom_rank_[x] >= 0;
}

int GradedRing::grade_of(Index x) const {
    if (x == 0) return group_.identity();
    for (int g = 0; g < group_.size(); ++g)
        if (comp_sets_[g].contains(x)) return g;
    throw precondition_error("grade_of: element is not homogeneous");
}

Index GradedRing::component(Index x, int g) const {
    const int k = basis_size();
    const int* cx = &coords_flat_[static_cast<std::size_t>(x) * k];
    Index out = 0;
    for (int p : grade_positions_[g]) out += static_cast<Index>(cx[p]) * strides_[p];
    return out;
}

std::vector<std::pair<int, Index>> GradedRing::decompose(Index x) const {
    std::vector<std::pair<int, Index>> out;
    for (int g = 0; g < group_.size(); ++g) {
        Index c = component(x, g);
        if (c != 0) out.emplace_back(g, c);
    }
    return out;
}

Index GradedRing::hom_product(int rank_a, int rank_b) const {
    if (hom_mul_built_)
        return hom_mul_[static_cast<std::size_t>(rank_a) * hom_.size() + rank_b];
    return mul(hom_[rank_a], hom_[rank_b]);
}

std::optional<Index> GradedRing::inverse(Index x) const {
    for (std::size_t y = 0; y < order_; ++y)
        if (mul(x, static_cast<Index>(y)) == one_) return static_cast<Index>(y);
    return std::nullopt;
}

bool GradedRing::is_unit(Index x) const { return inverse(x).has_value(); }

bool GradedRing::is_regular(Index x) const {
    for (std::size_t y = 1; y < order_; ++y)
        if (mul(x, static_cast<Index>(y)) == 0) return false;
    return true;
}

Index GradedRing::combine(Index left, Index right) const {
    if (!product_) throw precondition_error("combine: not a product ring");
    const std::size_t lo = product_->left->order();
    // left factor occupies the low basis positions
    return left + static_cast<Index>(right * lo);
}

std::pair<Index, Index> GradedRing::split(Index x) const {
    if (!product_) throw precondition_error("split: not a product ring");
    const std::size_t lo = product_->left->order();
    return {static_cast<Index>(x % lo), static_cast<Index>(x / lo)};
}

DenseSet GradedRing::full_set() const {
    DenseSet s(order_);
    for (std::size_t i = 0; i < order_; ++i) s.insert(static_cast<Index>(i));
    return s;
}

RingPtr make_cyclic_graded(int n, GradeGroup g, int grade_of_one) {
    if (n < 2) throw spec_error("cyclic ring modulus must be >= 2");
    if (grade_of_one != g.identity())
        throw spec_error("grade assignment violates component closure: "
                         "the additive generator 1 must sit in the identity grade");
    RingData d;
    d.name = "Z_" + std::to_string(n);
    if (g.size() > 1) d.name += "[G=" + g.to_string() + "]";
    d.group = std::move(g);
    d.basis_orders = {n};
    d.basis_grades = {grade_of_one};
    d.products = {{{1}}};
    d.one_coords = {1};
    return GradedRing::create(std::move(d));
}

RingPtr make_poly_quotient(int n, const std::vector<int>& monic_poly, GradeGroup g,
                           int x_grade) {
    if (n < 2) throw spec_error("coefficient modulus must be >= 2");
    const int deg = static_cast<int>(monic_poly.size()) - 1;
    if (deg < 1) throw spec_error("modulus polynomial must have degree >= 1");
    if (monic_poly[deg] != 1) throw spec_error("modulus polynomial must be monic");
    if (x_grade < 0 || x_grade >= g.size()) throw spec_error("x grade out of range");

    // x^deg reduces to minus the low-order part, coefficients mod n.
    std::vector<int> red(deg, 0);
    for (int i = 0; i < deg; ++i) {
        red[i] = (-monic_poly[i]) % n;
        if (red[i] < 0) red[i] += n;
    }
    // Grading consistency: every surviving monomial of the reduction must have
    // the same grade as x^deg.
    const int top_grade = g.scale(deg, x_grade);
    for (int i = 0; i < deg; ++i)
        if (red[i] != 0 && g.scale(i, x_grade) != top_grade)
            throw spec_error("inconsistent grading: reduction of x^" + std::to_string(deg) +
                             " leaves the grade " + std::to_string(top_grade) + " component");

    // Reduction table for x^t, t = 0..2(deg-1).
    std::vector<std::vector<int>> rem(2 * deg - 1, std::vector<int>(deg, 0));
    for (int t = 0; t < deg; ++t) rem[t][t] = 1;
    for (int t = deg; t < 2 * deg - 1; ++t) {
        // x^t = x * x^(t-1), then reduce the possible x^deg term
        std::vector<int> shifted(deg + 1, 0);
        for (int i = 0; i < deg; ++i) shifted[i + 1] = rem[t - 1][i];
        int carry = shifted[deg];
        for (int i = 0; i < deg; ++i)
            rem[t][i] = static_cast<int>((shifted[i] + static_cast<long long>(carry) * red[i]) % n);
    }

    RingData d;
    if (monic_poly == std::vector<int>{1, 0, 1})
        d.name = "Z_" + std::to_string(n) + "[i]";
    else
        d.name = "Z_" + std::to_string(n) + "[x]/(" + poly_to_string(monic_poly) + ")";
    d.group = std::move(g);
    d.basis_orders.assign(deg, n);
    d.basis_grades.resize(deg);
    for (int t = 0; t < deg; ++t) d.basis_grades[t] = d.group.scale(t, x_grade);
    d.products.assign(deg, std::vector<std::vector<int>>(deg));
    for (int i = 0; i < deg; ++i)
        for (int j = 0; j < deg; ++j) d.products[i][j] = rem[i + j];
    d.one_coords.assign(deg, 0);
    d.one_coords[0] = 1;
    return GradedRing::create(std::move(d));
}

RingPtr direct_product(const RingPtr& a, const RingPtr& b) {
    if (!(a->grade_group() == b->grade_group()))
        throw precondition_error("direct_product: mismatched grading groups");
    const int ka = a->basis_size(), kb = b->basis_size();
    RingData d;
    d.name = "(" + a->name() + ")x(" + b->name() + ")";
    d.group = a->grade_group();
    d.basis_orders.reserve(ka + kb);
    d.basis_grades.reserve(ka + kb);
    for (int i = 0; i < ka; ++i) {
        d.basis_orders.push_back(a->basis_order(i));
        d.basis_grades.push_back(a->basis_grade(i));
    }
    for (int i = 0; i < kb; ++i) {
        d.basis_orders.push_back(b->basis_order(i));
        d.basis_grades.push_back(b->basis_grade(i));
    }
    auto inject = [&](const std::vector<int>& c, bool left) {
        std::vector<int> out(ka + kb, 0);
        for (std::size_t i = 0; i < c.size(); ++i) out[(left ? 0 : ka) + i] = c[i];
        return out;
    };
    d.products.assign(ka + kb, std::vector<std::vector<int>>(ka + kb, std::vector<int>(ka + kb, 0)));
    for (int i = 0; i < ka; ++i)
        for (int j = 0; j < ka; ++j)
            d.products[i][j] =
                inject(a->coords_of(a->mul(a->basis_element(i), a->basis_element(j))), true);
    for (int i = 0; i < kb; ++i)
        for (int j = 0; j < kb; ++j)
            d.products[ka + i][ka + j] =
                inject(b->coords_of(b->mul(b->basis_element(i), b->basis_element(j))), false);
    // cross terms are zero
    std::vector<int> one = inject(a->coords_of(a->one()), true);
    std::vector<int> one_b = inject(b->coords_of(b->one()), false);
    for (int i = 0; i < ka + kb; ++i) one[i] += one_b[i];
    d.one_coords = std::move(one);
    d.product = ProductInfo{a, b};
    return GradedRing::create(std::move(d));
}

RingPtr identity_component_ring(const RingPtr& r) {
    const int e = r->grade_group().identity();
    std::vector<int> positions;
    for (int i = 0; i < r->basis_size(); ++i)
        if (r->basis_grade(i) == e) positions.push_back(i);
    RingData d;
    d.name = "(" + r->name() + ")_e";
    d.group = GradeGroup::trivial();
    const int k = static_cast<int>(positions.size());
    d.basis_orders.resize(k);
    d.basis_grades.assign(k, 0);
    for (int i = 0; i < k; ++i) d.basis_orders[i] = r->basis_order(positions[i]);
    auto restrict_coords = [&](const std::vector<int>& full) {
        std::vector<int> out(k);
        for (int i = 0; i < k; ++i) out[i] = full[positions[i]];
        return out;
    };
    d.products.assign(k, std::vector<std::vector<int>>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Index p = r->mul(r->basis_element(positions[i]), r->basis_element(positions[j]));
            // R_e is multiplicatively closed, so p is supported on e-positions
            d.products[i][j] = restrict_coords(r->coords_of(p));
        }
    d.one_coords = restrict_coords(r->coords_of(r->one()));
    d.component = ComponentInfo{r, positions};
    return GradedRing::create(std::move(d));
}

} // namespace graded
