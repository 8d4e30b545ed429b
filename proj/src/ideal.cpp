#include "graded/ideal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "graded/errors.hpp"
#include "graded/snf.hpp"

namespace graded {

namespace {

// Extend a subgroup (given as bitset + member list) by one new generator.
void extend_subgroup(const GradedRing& ring, DenseSet& set, std::vector<Index>& members,
                     Index t) {
    if (set.contains(t)) return;
    std::deque<Index> work;
    auto push = [&](Index x) {
        if (!set.contains(x)) {
            set.insert(x);
            members.push_back(x);
            work.push_back(x);
        }
    };
    push(t);
    while (!work.empty()) {
        Index x = work.front();
        work.pop_front();
        for (std::size_t i = 0, n = members.size(); i < n; ++i) {
            // adding x to existing members stays in the closure; adding t
            // repeatedly walks the cyclic part
            push(ring.add(x, members[i]));
        }
    }
}

std::vector<Index> greedy_subgroup_generators(const GradedRing& ring, const DenseSet& target,
                                              const std::vector<Index>& candidates) {
    DenseSet span(ring.order());
    span.insert(ring.zero());
    std::vector<Index> members{ring.zero()};
    std::vector<Index> gens;
    for (Index c : candidates) {
        if (!target.contains(c) || span.contains(c)) continue;
        gens.push_back(c);
        extend_subgroup(ring, span, members, c);
        if (members.size() == target.size()) break;
    }
    return gens;
}

} // namespace

DenseSet additive_span(const GradedRing& ring, const std::vector<Index>& gens) {
    DenseSet set(ring.order());
    set.insert(ring.zero());
    std::vector<Index> members{ring.zero()};
    for (Index g : gens) extend_subgroup(ring, set, members, g);
    return set;
}

GradedIdeal::GradedIdeal(RingPtr ring, DenseSet set, std::vector<Index> gens, bool graded)
    : ring_(std::move(ring)), set_(std::move(set)), gens_(std::move(gens)), graded_(graded) {
    size_ = set_.size();
}

GradedIdeal ideal_unchecked(RingPtr ring, DenseSet set, std::vector<Index> gens, bool graded) {
    return GradedIdeal(std::move(ring), std::move(set), std::move(gens), graded);
}

GradedIdeal GradedIdeal::from_generators(RingPtr ring, const std::vector<Index>& gens) {
    for (Index g : gens)
        if (!ring->is_homogeneous(g))
            throw precondition_error("ideal generator is not homogeneous");
    // The ideal is the additive span of all homogeneous multiples of the
    // generators: a general multiple r*g splits into homogeneous ones.
    std::vector<Index> multiples;
    multiples.reserve(gens.size() * ring->homogeneous_elements().size());
    for (Index g : gens)
        for (Index h : ring->homogeneous_elements()) {
            Index m = ring->mul(h, g);
            if (m != ring->zero()) multiples.push_back(m);
        }
    DenseSet set = additive_span(*ring, multiples);
    return GradedIdeal(std::move(ring), std::move(set), gens, true);
}

GradedIdeal GradedIdeal::from_elements(RingPtr ring, DenseSet elems) {
    if (!elems.contains(ring->zero()))
        throw precondition_error("ideal must contain 0");
    // subgroup check via greedy generators
    std::vector<Index> members = elems.elements();
    std::vector<Index> add_gens = greedy_subgroup_generators(*ring, elems, members);
    if (!(additive_span(*ring, add_gens) == elems))
        throw precondition_error("element set is not an additive subgroup");
    // absorption on additive generators suffices
    for (Index g : add_gens)
        for (Index h : ring->homogeneous_elements())
            if (!elems.contains(ring->mul(h, g)))
                throw precondition_error("element set does not absorb ring multiplication");
    // gradedness: every member decomposes inside the set
    bool graded = true;
    for (Index m : members) {
        for (auto& [g, c] : ring->decompose(m))
            if (!elems.contains(c)) {
                graded = false;
                break;
            }
        if (!graded) break;
    }
    std::vector<Index> gens;
    if (graded) gens = homogeneous_generators(ring, elems);
    return GradedIdeal(std::move(ring), std::move(elems), std::move(gens), graded);
}

GradedIdeal GradedIdeal::zero(RingPtr ring) {
    DenseSet s(ring->order());
    s.insert(ring->zero());
    return GradedIdeal(std::move(ring), std::move(s), {}, true);
}

GradedIdeal GradedIdeal::unit(RingPtr ring) {
    DenseSet s = ring->full_set();
    std::vector<Index> gens{ring->one()};
    return GradedIdeal(std::move(ring), std::move(s), std::move(gens), true);
}

DenseSet GradedIdeal::slice(int g) const {
    DenseSet out = set_;
    out &= ring_->component_set(g);
    return out;
}

std::vector<Index> homogeneous_generators(const RingPtr& ring, const DenseSet& elems) {
    // Greedy: walk homogeneous members in index order, keep those outside
    // the ideal closure of the ones already kept.
    std::vector<Index> gens;
    DenseSet span(ring->order());
    span.insert(ring->zero());
    for (Index h : ring->homogeneous_elements()) {
        if (!elems.contains(h) || span.contains(h)) continue;
        gens.push_back(h);
        span = GradedIdeal::from_generators(ring, gens).elements();
        if (span == elems) break;
    }
    return gens;
}

bool is_graded_ideal(const RingPtr& ring, const DenseSet& subset) {
    if (!subset.contains(ring->zero())) return false;
    std::vector<Index> members = subset.elements();
    std::vector<Index> add_gens = greedy_subgroup_generators(*ring, subset, members);
    if (!(additive_span(*ring, add_gens) == subset)) return false;
    for (Index g : add_gens)
        for (Index h : ring->homogeneous_elements())
            if (!subset.contains(ring->mul(h, g))) return false;
    for (Index m : members)
        for (auto& [g, c] : ring->decompose(m))
            if (!subset.contains(c)) return false;
    return true;
}

GradedIdeal grad_radical(const GradedIdeal& p) {
    if (!p.is_graded()) throw precondition_error("grad_radical requires a graded ideal");
    const RingPtr& ring = p.ring();
    // Homogeneous elements with some power in P.  Powers of a fixed element
    // cycle within |R| steps, so the visited-set walk is exhaustive.
    DenseSet rad_hom(ring->order());
    for (Index h : ring->homogeneous_elements()) {
        DenseSet visited(ring->order());
        Index y = h;
        bool in = false;
        while (!visited.contains(y)) {
            visited.insert(y);
            if (p.contains(y)) {
                in = true;
                break;
            }
            y = ring->mul(y, h);
        }
        if (in) rad_hom.insert(h);
    }
    // x belongs iff every homogeneous component does (0 belongs vacuously).
    DenseSet out(ring->order());
    for (std::size_t x = 0; x < ring->order(); ++x) {
        bool all = true;
        for (auto& [g, c] : ring->decompose(static_cast<Index>(x)))
            if (!rad_hom.contains(c)) {
                all = false;
                break;
            }
        if (all) out.insert(static_cast<Index>(x));
    }
    GradedIdeal result = GradedIdeal::from_elements(ring, std::move(out));
    if (!result.is_graded())
        throw precondition_error("graded radical failed to be graded");
    return result;
}

GradedIdeal colon_elem(const GradedIdeal& p, Index s) {
    const RingPtr& ring = p.ring();
    DenseSet out(ring->order());
    for (std::size_t x = 0; x < ring->order(); ++x)
        if (p.contains(ring->mul(s, static_cast<Index>(x)))) out.insert(static_cast<Index>(x));
    GradedIdeal result = GradedIdeal::from_elements(ring, std::move(out));
    if (ring->is_homogeneous(s) && p.is_graded() && !result.is_graded())
        throw precondition_error("colon by a homogeneous element must be graded");
    return result;
}

GradedIdeal colon_stable(const GradedIdeal& p, Index s) {
    if (!p.ring()->is_homogeneous(s))
        throw precondition_error("colon_stable requires a homogeneous element");
    const RingPtr& ring = p.ring();
    GradedIdeal cur = colon_elem(p, s);
    Index sn = s;
    for (std::size_t n = 1; n < ring->order(); ++n) {
        sn = ring->mul(sn, s);
        GradedIdeal next = colon_elem(p, sn);
        if (next == cur) break;
        cur = std::move(next);
    }
    return cur;
}

DenseSet colon_graded_slice(const GradedIdeal& p, Index a, int g) {
    const RingPtr& ring = p.ring();
    DenseSet out(ring->order());
    for (Index r : ring->component_elements(g))
        if (p.contains(ring->mul(r, a))) out.insert(r);
    return out;
}

GradedIdeal sum(const GradedIdeal& p, const GradedIdeal& q) {
    if (p.ring() != q.ring()) throw precondition_error("ideal sum: mismatched rings");
    DenseSet set = p.elements();
    std::vector<Index> members = set.elements();
    q.elements().for_each([&](Index x) { extend_subgroup(*p.ring(), set, members, x); });
    return GradedIdeal::from_elements(p.ring(), std::move(set));
}

GradedIdeal product(const GradedIdeal& p, const GradedIdeal& q) {
    if (p.ring() != q.ring()) throw precondition_error("ideal product: mismatched rings");
    if (!p.is_graded() || !q.is_graded())
        throw precondition_error("ideal product requires graded inputs");
    std::vector<Index> gens;
    for (Index a : p.generators())
        for (Index b : q.generators()) gens.push_back(p.ring()->mul(a, b));
    return GradedIdeal::from_generators(p.ring(), gens);
}

GradedIdeal intersect(const GradedIdeal& p, const GradedIdeal& q) {
    if (p.ring() != q.ring()) throw precondition_error("ideal intersection: mismatched rings");
    DenseSet set = p.elements();
    set &= q.elements();
    return GradedIdeal::from_elements(p.ring(), std::move(set));
}

std::vector<GradedIdeal> enumerate_graded_ideals(const RingPtr& ring) {
    // Graded ideals are exactly the joins of homogeneous principal ideals,
    // so closing the principal list under join is exhaustive.
    std::unordered_map<DenseSet, std::size_t, DenseSetHash> seen;
    auto add_unique = [&](std::vector<GradedIdeal>& list, GradedIdeal&& cand) -> bool {
        auto [it, inserted] = seen.emplace(cand.elements(), list.size());
        if (inserted) {
            list.push_back(std::move(cand));
            return true;
        }
        return false;
    };

    std::vector<GradedIdeal> out;
    for (Index h : ring->homogeneous_elements())
        add_unique(out, GradedIdeal::from_generators(ring, {h}));
    std::size_t head = 0;
    while (head < out.size()) {
        // join the current ideal with every principal; indices stay stable
        const std::size_t cur = head++;
        for (std::size_t pi = 0; pi < ring->homogeneous_elements().size(); ++pi) {
            Index h = ring->homogeneous_elements()[pi];
            if (out[cur].contains(h)) continue;
            std::vector<Index> gens = out[cur].generators();
            gens.push_back(h);
            DenseSet set = out[cur].elements();
            std::vector<Index> members = set.elements();
            GradedIdeal principal = GradedIdeal::from_generators(ring, {h});
            principal.elements().for_each(
                [&](Index x) { extend_subgroup(*ring, set, members, x); });
            add_unique(out, ideal_unchecked(ring, std::move(set), std::move(gens), true));
        }
    }
    std::sort(out.begin(), out.end(), [](const GradedIdeal& a, const GradedIdeal& b) {
        return a.elements().canonical_before(b.elements());
    });
    return out;
}

GradedIdeal maximal_disjoint_ideal(const RingPtr& ring, const GradedIdeal& i,
                                   const MultSet& s) {
    if (i.elements().intersects(s.elements()))
        throw precondition_error("maximal_disjoint_ideal: ideal meets the multiplicative set");
    std::vector<GradedIdeal> all = enumerate_graded_ideals(ring);
    std::vector<const GradedIdeal*> candidates;
    for (const auto& p : all)
        if (i.elements().is_subset_of(p.elements()) && !p.elements().intersects(s.elements()))
            candidates.push_back(&p);
    for (const GradedIdeal* p : candidates) {
        bool maximal = true;
        for (const GradedIdeal* q : candidates)
            if (q != p && p->elements().is_subset_of(q->elements()) &&
                !(q->elements() == p->elements())) {
                maximal = false;
                break;
            }
        if (maximal) return *p;
    }
    throw precondition_error("maximal_disjoint_ideal: no candidate"); // unreachable: I qualifies
}

RingPtr quotient_ring(const GradedIdeal& i) {
    if (!i.is_graded()) throw precondition_error("quotient by a non-graded ideal");
    if (!i.is_proper()) throw precondition_error("quotient by the unit ideal is the zero ring");
    const RingPtr& base = i.ring();
    const GradeGroup& group = base->grade_group();
    const int kb = base->basis_size();

    struct GradeBlock {
        int grade;
        std::vector<int> positions;      // base basis positions of this grade
        SmithResult snf;
        std::vector<int> kept;           // t with diag[t] > 1
    };
    std::vector<GradeBlock> blocks;
    std::vector<int> new_orders, new_grades;

    for (int g = 0; g < group.size(); ++g) {
        std::vector<int> pos;
        for (int bi = 0; bi < kb; ++bi)
            if (base->basis_grade(bi) == g) pos.push_back(bi);
        if (pos.empty()) continue;
        const int k = static_cast<int>(pos.size());

        // lattice columns: basis relations n_i e_i plus lifted members of I_g
        std::vector<std::vector<long long>> cols;
        for (int t = 0; t < k; ++t) {
            std::vector<long long> c(k, 0);
            c[t] = base->basis_order(pos[t]);
            cols.push_back(std::move(c));
        }
        DenseSet ig = i.slice(g);
        std::vector<Index> slice_members = ig.elements();
        for (Index gen : greedy_subgroup_generators(*base, ig, slice_members)) {
            std::vector<int> coords = base->coords_of(gen);
            std::vector<long long> c(k);
            for (int t = 0; t < k; ++t) c[t] = coords[pos[t]];
            cols.push_back(std::move(c));
        }
        GradeBlock blk{g, pos, smith_normal_form(std::move(cols), k), {}};
        for (int t = 0; t < k; ++t)
            if (blk.snf.diag[t] > 1) {
                blk.kept.push_back(t);
                new_orders.push_back(static_cast<int>(blk.snf.diag[t]));
                new_grades.push_back(g);
            }
        blocks.push_back(std::move(blk));
    }

    const int kq = static_cast<int>(new_orders.size());
    if (kq == 0) throw precondition_error("quotient collapses to the zero ring");

    std::vector<Index> new_strides(kq);
    {
        std::size_t acc = 1;
        for (int t = 0; t < kq; ++t) {
            new_strides[t] = static_cast<Index>(acc);
            acc *= static_cast<std::size_t>(new_orders[t]);
        }
    }

    // projection of a base element into quotient coordinates
    auto project_coords = [&](Index x) {
        std::vector<int> bc = base->coords_of(x);
        std::vector<int> qc(kq, 0);
        int col = 0;
        for (const auto& blk : blocks) {
            const int k = static_cast<int>(blk.positions.size());
            for (int kept_t : blk.kept) {
                long long y = 0;
                for (int j = 0; j < k; ++j)
                    y += blk.snf.Pinv[kept_t][j] * bc[blk.positions[j]];
                long long d = blk.snf.diag[kept_t];
                y %= d;
                if (y < 0) y += d;
                qc[col++] = static_cast<int>(y);
            }
        }
        return qc;
    };
    auto project_index = [&](Index x) {
        std::vector<int> qc = project_coords(x);
        Index out = 0;
        for (int t = 0; t < kq; ++t) out += static_cast<Index>(qc[t]) * new_strides[t];
        return out;
    };
    // representative of a quotient basis element in the base ring
    std::vector<Index> new_basis_rep(kq);
    {
        int col = 0;
        for (const auto& blk : blocks) {
            const int k = static_cast<int>(blk.positions.size());
            for (int kept_t : blk.kept) {
                std::vector<int> bc(kb, 0);
                for (int j = 0; j < k; ++j) {
                    long long v = blk.snf.P[j][kept_t] % base->basis_order(blk.positions[j]);
                    if (v < 0) v += base->basis_order(blk.positions[j]);
                    bc[blk.positions[j]] = static_cast<int>(v);
                }
                new_basis_rep[col++] = base->index_of(bc);
            }
        }
    }

    RingData d;
    d.name = base->name() + "/(" + std::to_string(i.generators().size()) + " gens)";
    d.group = group;
    d.basis_orders = new_orders;
    d.basis_grades = new_grades;
    d.products.assign(kq, std::vector<std::vector<int>>(kq));
    for (int a = 0; a < kq; ++a)
        for (int b = 0; b < kq; ++b)
            d.products[a][b] = project_coords(base->mul(new_basis_rep[a], new_basis_rep[b]));
    d.one_coords = project_coords(base->one());

    QuotientInfo qi;
    qi.base = base;
    qi.kernel = i.elements();
    qi.projection.resize(base->order());
    std::size_t new_order = 1;
    for (int t = 0; t < kq; ++t) new_order *= static_cast<std::size_t>(new_orders[t]);
    qi.section.assign(new_order, 0);
    std::vector<bool> have(new_order, false);
    for (std::size_t x = 0; x < base->order(); ++x) {
        Index q = project_index(static_cast<Index>(x));
        qi.projection[x] = q;
        if (!have[q]) {
            have[q] = true;
            qi.section[q] = static_cast<Index>(x);
        }
    }
    if (new_order * i.size() != base->order())
        throw precondition_error("quotient order mismatch");
    d.quotient = std::move(qi);
    return GradedRing::create(std::move(d));
}

GradedIdeal product_ideal(const RingPtr& prod, const GradedIdeal& p1, const GradedIdeal& p2) {
    const ProductInfo* info = prod->product_info();
    if (!info || info->left != p1.ring() || info->right != p2.ring())
        throw precondition_error("product_ideal: rings do not match the product");
    DenseSet set(prod->order());
    p1.elements().for_each([&](Index a) {
        p2.elements().for_each([&](Index b) { set.insert(prod->combine(a, b)); });
    });
    return GradedIdeal::from_elements(prod, std::move(set));
}

MultSet product_multset(const RingPtr& prod, const MultSet& s1, const MultSet& s2) {
    const ProductInfo* info = prod->product_info();
    if (!info || info->left != s1.ring() || info->right != s2.ring())
        throw precondition_error("product_multset: rings do not match the product");
    DenseSet set(prod->order());
    for (Index a : s1.canonical_order())
        for (Index b : s2.canonical_order()) set.insert(prod->combine(a, b));
    return MultSet::from_elements(prod, set);
}

bool is_disjoint(const GradedIdeal& p, const MultSet& s) {
    if (p.ring() != s.ring()) throw precondition_error("is_disjoint: mismatched rings");
    return !p.elements().intersects(s.elements());
}

} // namespace graded
