#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graded/dense_set.hpp"
#include "graded/grade_group.hpp"

namespace graded {

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

/// Dense index of a ring element inside its carrier, 0..order()-1.
/// Index 0 is always the zero element.
using Index = std::uint32_t;

/// An element tagged with its owning ring, as a coordinate vector over the
/// ring's additive basis.  Thin value type for API boundaries; hot paths
/// work on Index.
struct RingElem {
    RingPtr ring;
    std::vector<int> coords;
};

struct ProductInfo {
    RingPtr left;
    RingPtr right;
};

struct QuotientInfo {
    RingPtr base;
    DenseSet kernel;                 // over the base carrier
    std::vector<Index> projection;   // base index -> quotient index
    std::vector<Index> section;      // quotient index -> one base representative
};

struct ComponentInfo {
    RingPtr parent;
    std::vector<int> parent_basis;   // basis i here = this basis of the parent
};

/// Raw description consumed by GradedRing::create.  Factories below fill
/// one in; create() validates every structural axiom before returning.
struct RingData {
    std::string name;
    GradeGroup group = GradeGroup::trivial();
    std::vector<int> basis_orders;                       // additive order of each basis element
    std::vector<int> basis_grades;                       // grade id of each basis element
    std::vector<std::vector<std::vector<int>>> products; // products[i][j] = coords of b_i * b_j
    std::vector<int> one_coords;
    std::optional<ProductInfo> product;
    std::optional<QuotientInfo> quotient;
    std::optional<ComponentInfo> component;
};

/// A finite commutative graded ring, realized as coordinate vectors over an
/// explicit additive basis with a precomputed multiplication table on basis
/// pairs.  Equality of elements is coordinate equality.  Instances are
/// immutable after construction and safe to share across readers.
///
/// Structural invariants checked at construction:
///   - the carrier decomposes as the direct sum of components R_g
///     (each basis element is homogeneous of a single grade);
///   - R_g * R_h lies in R_{g+h}, exhaustively over basis pairs;
///   - multiplication is commutative and associative (basis triples);
///   - the identity is homogeneous of grade e.
class GradedRing : public std::enable_shared_from_this<GradedRing> {
public:
    static constexpr std::size_t kMaxOrder = 65536;

    static RingPtr create(RingData data);

    const std::string& name() const { return name_; }
    const GradeGroup& grade_group() const { return group_; }
    std::size_t order() const { return order_; }

    int basis_size() const { return static_cast<int>(basis_orders_.size()); }
    int basis_order(int i) const { return basis_orders_[i]; }
    int basis_grade(int i) const { return basis_grades_[i]; }
    Index basis_element(int i) const { return strides_[i]; }

    Index zero() const { return 0; }
    Index one() const { return one_; }

    Index index_of(std::span<const int> coords) const;
    std::vector<int> coords_of(Index x) const;
    RingElem elem(Index x) const;

    Index add(Index a, Index b) const;
    Index neg(Index a) const;
    Index sub(Index a, Index b) const { return add(a, neg(b)); }
    Index mul(Index a, Index b) const;
    Index scale(long long k, Index a) const;
    Index pow(Index a, unsigned long long n) const;

    bool is_homogeneous(Index x) const;
    /// Grade of a homogeneous element; zero reports the identity grade.
    int grade_of(Index x) const;
    Index component(Index x, int g) const;
    /// Nonzero homogeneous components of x, by grade.
    std::vector<std::pair<int, Index>> decompose(Index x) const;

    /// All homogeneous elements, deduplicated, sorted by index.
    const std::vector<Index>& homogeneous_elements() const { return hom_; }
    /// R_g as a sorted element list.
    const std::vector<Index>& component_elements(int g) const { return comp_elems_[g]; }
    const DenseSet& component_set(int g) const { return comp_sets_[g]; }
    /// Position of x in homogeneous_elements(), or -1.
    int hom_rank(Index x) const { return hom_rank_[x]; }
    /// Product of two homogeneous elements given by rank; table-backed when
    /// the ring is small enough, computed on the fly otherwise.
    Index hom_product(int rank_a, int rank_b) const;

    bool is_unit(Index x) const;
    std::optional<Index> inverse(Index x) const;
    /// x is regular iff x*y = 0 forces y = 0 (scan over the carrier).
    bool is_regular(Index x) const;

    const ProductInfo* product_info() const { return product_ ? &*product_ : nullptr; }
    const QuotientInfo* quotient_info() const { return quotient_ ? &*quotient_ : nullptr; }
    const ComponentInfo* component_info() const { return component_ ? &*component_ : nullptr; }

    /// Pairing helpers for direct products.
    Index combine(Index left, Index right) const;
    std::pair<Index, Index> split(Index x) const;

    DenseSet empty_set() const { return DenseSet(order_); }
    DenseSet full_set() const;

private:
    explicit GradedRing(RingData data);
    void finalize();   // build caches
    void validate() const;

    std::string name_;
    GradeGroup group_;
    std::vector<int> basis_orders_;
    std::vector<int> basis_grades_;
    std::vector<Index> strides_;
    std::size_t order_ = 1;
    std::vector<std::vector<std::vector<int>>> products_;
    Index one_ = 0;

    std::vector<int> coords_flat_;                 // order_ * k
    std::vector<std::vector<int>> grade_positions_; // grade id -> basis positions
    std::vector<Index> hom_;
    std::vector<int> hom_rank_;
    std::vector<std::vector<Index>> comp_elems_;
    std::vector<DenseSet> comp_sets_;
    std::vector<Index> hom_mul_;                   // |h|^2 table, empty if capped
    bool hom_mul_built_ = false;

    std::optional<ProductInfo> product_;
    std::optional<QuotientInfo> quotient_;
    std::optional<ComponentInfo> component_;
};

/// Z_n with the given grading group; the additive generator 1 must be
/// assigned the identity grade (anything else breaks R_g R_h within-grade
/// closure and is rejected).
RingPtr make_cyclic_graded(int n, GradeGroup g, int grade_of_one = 0);

/// Z_n[x]/(f) for a monic f of degree d >= 1 (coefficients lowest-first),
/// with x placed in grade x_grade.  The reduction of x^d must land inside
/// the grade d*x_grade component, otherwise the grading is inconsistent.
RingPtr make_poly_quotient(int n, const std::vector<int>& monic_poly, GradeGroup g,
                           int x_grade);

/// Componentwise product; both factors must share the same grading group.
RingPtr direct_product(const RingPtr& a, const RingPtr& b);

/// R_e as a trivially graded ring, with provenance for the inclusion map.
RingPtr identity_component_ring(const RingPtr& r);

} // namespace graded
