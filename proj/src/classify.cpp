#include "graded/classify.hpp"

#include <algorithm>

#include "graded/errors.hpp"

namespace graded {

namespace {

bool kind_is_s_parameterized(Pred k) {
    return k == Pred::s_prime || k == Pred::s_primary || k == Pred::weakly_s_prime ||
           k == Pred::weakly_s_primary;
}
bool kind_is_weakly(Pred k) {
    return k == Pred::weakly_prime || k == Pred::weakly_primary ||
           k == Pred::weakly_s_prime || k == Pred::weakly_s_primary;
}
bool kind_concludes_in_radical(Pred k) {
    return k == Pred::primary || k == Pred::weakly_primary || k == Pred::s_primary ||
           k == Pred::weakly_s_primary;
}

} // namespace

std::string property_name(Pred kind, int grade) {
    const char* base = nullptr;
    switch (kind) {
        case Pred::prime: base = "prime"; break;
        case Pred::primary: base = "primary"; break;
        case Pred::weakly_prime: base = "weakly_prime"; break;
        case Pred::weakly_primary: base = "weakly_primary"; break;
        case Pred::s_prime: base = "s_prime"; break;
        case Pred::s_primary: base = "s_primary"; break;
        case Pred::weakly_s_prime: base = "weakly_s_prime"; break;
        case Pred::weakly_s_primary: base = "weakly_s_primary"; break;
    }
    return std::string(grade >= 0 ? "g_" : "graded_") + base;
}

Classifier::Classifier(RingPtr ring) : ring_(std::move(ring)) {}

const std::vector<GradedIdeal>& Classifier::lattice() {
    if (!lattice_) {
        lattice_ = enumerate_graded_ideals(ring_);
        for (std::size_t i = 0; i < lattice_->size(); ++i)
            lattice_pos_.emplace((*lattice_)[i].elements(), static_cast<int>(i));
    }
    return *lattice_;
}

int Classifier::lattice_position(const GradedIdeal& p) {
    lattice();
    auto it = lattice_pos_.find(p.elements());
    return it == lattice_pos_.end() ? -1 : it->second;
}

const GradedIdeal& Classifier::lattice_product(int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = lattice_product_memo_.find(key);
    if (it != lattice_product_memo_.end()) return it->second;
    const auto& all = lattice();
    return lattice_product_memo_.emplace(key, product(all[a], all[b])).first->second;
}

int Classifier::ideal_id(const GradedIdeal& p) {
    auto it = ideal_ids_.find(p.elements());
    if (it != ideal_ids_.end()) return it->second;
    int id = static_cast<int>(ideals_.size());
    ideals_.push_back(p);
    ideal_ids_.emplace(p.elements(), id);
    return id;
}

int Classifier::set_id(const MultSet& s) {
    auto it = set_ids_.find(s.elements());
    if (it != set_ids_.end()) return it->second;
    int id = static_cast<int>(sets_.size());
    sets_.push_back(s);
    set_ids_.emplace(s.elements(), id);
    return id;
}

const GradedIdeal& Classifier::radical(const GradedIdeal& p) {
    int pid = ideal_id(p);
    auto it = radical_memo_.find(pid);
    if (it != radical_memo_.end()) return ideals_[it->second];
    int rid = ideal_id(grad_radical(ideals_[pid]));
    radical_memo_.emplace(pid, rid);
    return ideals_[rid];
}

const GradedIdeal& Classifier::radical_of_zero() {
    if (!rad_zero_id_) rad_zero_id_ = ideal_id(radical(GradedIdeal::zero(ring_)));
    return ideals_[*rad_zero_id_];
}

const Certificate& Classifier::pairwise(Pred kind, const GradedIdeal& p, const MultSet* s,
                                        int grade) {
    if (kind_is_s_parameterized(kind) && !s)
        throw precondition_error("predicate requires a multiplicative set");
    int pid = ideal_id(p);
    int sid = s ? set_id(*s) : -1;
    auto key = std::make_tuple(static_cast<int>(kind), pid, sid, grade);
    auto it = pairwise_memo_.find(key);
    if (it != pairwise_memo_.end()) return it->second;
    Certificate cert = run_pairwise(kind, ideals_[pid], s ? &sets_[sid] : nullptr, grade);
    return pairwise_memo_.emplace(key, std::move(cert)).first->second;
}

Certificate Classifier::run_pairwise(Pred kind, const GradedIdeal& p, const MultSet* s,
                                     int grade) {
    const GradedRing& ring = *ring_;
    if (!p.is_graded()) throw precondition_error("predicate requires a graded ideal");
    if (!p.is_proper()) throw precondition_error("predicate requires a proper ideal");
    if (s) {
        if (s->ring() != ring_ || p.ring() != ring_)
            throw precondition_error("predicate arguments from a different ring");
        if (p.elements().intersects(s->elements()))
            throw precondition_error("ideal meets the multiplicative set");
        if (grade >= 0 && !s->in_identity_component())
            throw precondition_error("per-grade predicate requires S inside R_e");
    }

    const bool weakly = kind_is_weakly(kind);
    const bool radical_concl = kind_concludes_in_radical(kind);
    const DenseSet& conclusion_set =
        radical_concl ? radical(p).elements() : p.elements();

    std::vector<Index> cands;
    if (s)
        cands = s->canonical_order();
    else
        cands = {ring.one()};

    const std::vector<Index>& domain =
        grade >= 0 ? ring.component_elements(grade) : ring.homogeneous_elements();
    std::vector<int> rank(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) rank[i] = ring.hom_rank(domain[i]);

    Certificate cert;
    cert.property = property_name(kind, grade);
    if (grade >= 0) cert.grade = grade;

    const std::size_t m = domain.size();
    std::vector<char> sx_in_p(m), sx_in_concl(m);
    for (Index cand : cands) {
        const int cand_rank = ring.hom_rank(cand);
        for (std::size_t i = 0; i < m; ++i) {
            Index sx = ring.hom_product(cand_rank, rank[i]);
            sx_in_p[i] = p.contains(sx);
            sx_in_concl[i] = conclusion_set.contains(sx);
        }
        bool ok = true;
        for (std::size_t xi = 0; xi < m && ok; ++xi) {
            for (std::size_t yi = 0; yi < m; ++yi) {
                ++cert.trace_size;
                Index prod = ring.hom_product(rank[xi], rank[yi]);
                if (!p.contains(prod)) continue;
                if (weakly && prod == ring.zero()) continue;
                if (sx_in_p[xi] || sx_in_concl[yi]) continue;
                CounterPair bad;
                if (s) bad.s = cand;
                bad.x = domain[xi];
                bad.y = domain[yi];
                cert.counters.push_back(bad);
                ok = false;
                break;
            }
        }
        if (ok) {
            cert.verdict = true;
            if (s) cert.witness_s = cand;
            cert.counters.clear();
            return cert;
        }
    }
    cert.verdict = false;
    return cert;
}

const Certificate& Classifier::idealwise(const GradedIdeal& p, const MultSet& s,
                                         bool corrected) {
    int pid = ideal_id(p);
    int sid = set_id(s);
    auto key = std::make_tuple(pid, sid, corrected);
    auto it = idealwise_memo_.find(key);
    if (it != idealwise_memo_.end()) return it->second;
    Certificate cert = run_idealwise(ideals_[pid], sets_[sid], corrected);
    return idealwise_memo_.emplace(key, std::move(cert)).first->second;
}

Certificate Classifier::run_idealwise(const GradedIdeal& p, const MultSet& s,
                                      bool corrected) {
    if (!p.is_proper()) throw precondition_error("predicate requires a proper ideal");
    if (p.elements().intersects(s.elements()))
        throw precondition_error("ideal meets the multiplicative set");
    const GradedRing& ring = *ring_;
    const std::vector<GradedIdeal>& all = lattice();
    const DenseSet& grad_p = radical(p).elements();

    // s*I is inside T iff s*g is for every ideal generator g of I.
    auto scaled_inside = [&](Index cand, const GradedIdeal& i, const DenseSet& t) {
        for (Index g : i.generators())
            if (!t.contains(ring.mul(cand, g))) return false;
        return true;
    };

    const std::size_t n = all.size();

    Certificate cert;
    cert.property = corrected ? "idealwise_weakly_s_primary_corrected"
                              : "idealwise_weakly_s_primary_literal";
    for (Index cand : s.canonical_order()) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                ++cert.trace_size;
                const GradedIdeal& ij = lattice_product(static_cast<int>(a), static_cast<int>(b));
                if (!ij.elements().is_subset_of(p.elements())) continue;
                if (corrected && ij.is_zero()) continue;
                bool concl = scaled_inside(cand, all[a], p.elements()) ||
                             scaled_inside(cand, all[b], corrected ? grad_p : p.elements());
                if (concl) continue;
                cert.ideal_counters.push_back(
                    IdealCounter{cand, all[a].generators(), all[b].generators()});
                ok = false;
                break;
            }
        }
        if (ok) {
            cert.verdict = true;
            cert.witness_s = cand;
            cert.ideal_counters.clear();
            return cert;
        }
    }
    cert.verdict = false;
    return cert;
}

namespace {

Certificate run_once(Pred kind, const GradedIdeal& p, const MultSet* s, int grade = -1) {
    Classifier c(p.ring());
    return c.pairwise(kind, p, s, grade);
}

} // namespace

Certificate is_graded_prime(const GradedIdeal& p) { return run_once(Pred::prime, p, nullptr); }
Certificate is_graded_primary(const GradedIdeal& p) {
    return run_once(Pred::primary, p, nullptr);
}
Certificate is_graded_weakly_prime(const GradedIdeal& p) {
    return run_once(Pred::weakly_prime, p, nullptr);
}
Certificate is_graded_weakly_primary(const GradedIdeal& p) {
    return run_once(Pred::weakly_primary, p, nullptr);
}
Certificate is_graded_s_prime(const GradedIdeal& p, const MultSet& s) {
    return run_once(Pred::s_prime, p, &s);
}
Certificate is_graded_s_primary(const GradedIdeal& p, const MultSet& s) {
    return run_once(Pred::s_primary, p, &s);
}
Certificate is_graded_weakly_s_prime(const GradedIdeal& p, const MultSet& s) {
    return run_once(Pred::weakly_s_prime, p, &s);
}
Certificate is_graded_weakly_s_primary(const GradedIdeal& p, const MultSet& s) {
    return run_once(Pred::weakly_s_primary, p, &s);
}
Certificate is_g_s_primary(const GradedIdeal& p, const MultSet& s, int g) {
    return run_once(Pred::s_primary, p, &s, g);
}
Certificate is_g_weakly_s_primary(const GradedIdeal& p, const MultSet& s, int g) {
    return run_once(Pred::weakly_s_primary, p, &s, g);
}
Certificate is_g_s_prime(const GradedIdeal& p, const MultSet& s, int g) {
    return run_once(Pred::s_prime, p, &s, g);
}
Certificate is_g_weakly_s_prime(const GradedIdeal& p, const MultSet& s, int g) {
    return run_once(Pred::weakly_s_prime, p, &s, g);
}
Certificate idealwise_weakly_s_primary(const GradedIdeal& p, const MultSet& s,
                                       bool corrected) {
    Classifier c(p.ring());
    return c.idealwise(p, s, corrected);
}

namespace {

std::optional<Pred> kind_from_property(const std::string& prop) {
    auto strip = [&](const std::string& prefix) -> std::optional<std::string> {
        if (prop.rfind(prefix, 0) == 0) return prop.substr(prefix.size());
        return std::nullopt;
    };
    std::optional<std::string> base = strip("graded_");
    if (!base) base = strip("g_");
    if (!base) return std::nullopt;
    if (*base == "prime") return Pred::prime;
    if (*base == "primary") return Pred::primary;
    if (*base == "weakly_prime") return Pred::weakly_prime;
    if (*base == "weakly_primary") return Pred::weakly_primary;
    if (*base == "s_prime") return Pred::s_prime;
    if (*base == "s_primary") return Pred::s_primary;
    if (*base == "weakly_s_prime") return Pred::weakly_s_prime;
    if (*base == "weakly_s_primary") return Pred::weakly_s_primary;
    return std::nullopt;
}

} // namespace

bool replay(const Certificate& c, const GradedIdeal& p, const MultSet* s) {
    const GradedRing& ring = *p.ring();

    if (!c.ideal_counters.empty() || c.property.rfind("idealwise", 0) == 0) {
        // idealwise replay
        if (!s) return false;
        const bool corrected = c.property == "idealwise_weakly_s_primary_corrected";
        const GradedIdeal rad = grad_radical(p);
        const DenseSet& grad_p = rad.elements();
        auto scaled_inside = [&](Index cand, const GradedIdeal& i, const DenseSet& t) {
            for (Index g : i.generators())
                if (!t.contains(ring.mul(cand, g))) return false;
            return true;
        };
        if (c.verdict) {
            Certificate again = idealwise_weakly_s_primary(p, *s, corrected);
            return again.verdict && again.witness_s == c.witness_s;
        }
        if (c.ideal_counters.size() != s->size()) return false;
        for (const IdealCounter& ic : c.ideal_counters) {
            if (!ic.s) return false;
            GradedIdeal i = GradedIdeal::from_generators(p.ring(), ic.left_gens);
            GradedIdeal j = GradedIdeal::from_generators(p.ring(), ic.right_gens);
            GradedIdeal ij = product(i, j);
            if (!ij.elements().is_subset_of(p.elements())) return false;
            if (corrected && ij.is_zero()) return false;
            if (scaled_inside(*ic.s, i, p.elements())) return false;
            if (scaled_inside(*ic.s, j, corrected ? grad_p : p.elements())) return false;
        }
        return true;
    }

    std::optional<Pred> kind = kind_from_property(c.property);
    if (!kind) return false;
    const bool weakly = kind_is_weakly(*kind);
    const bool radical_concl = kind_concludes_in_radical(*kind);
    const GradedIdeal rad = radical_concl ? grad_radical(p) : p;
    const DenseSet& concl_set = rad.elements();
    const std::vector<Index>& domain =
        c.grade ? ring.component_elements(*c.grade) : ring.homogeneous_elements();

    auto pair_violates = [&](Index cand, Index x, Index y) {
        Index prod = ring.mul(x, y);
        if (!p.contains(prod)) return false;
        if (weakly && prod == ring.zero()) return false;
        if (p.contains(ring.mul(cand, x))) return false;
        if (concl_set.contains(ring.mul(cand, y))) return false;
        return true;
    };

    if (c.verdict) {
        Index cand = c.witness_s ? *c.witness_s : ring.one();
        if (s && c.witness_s && !s->contains(*c.witness_s)) return false;
        for (Index x : domain)
            for (Index y : domain)
                if (pair_violates(cand, x, y)) return false;
        return true;
    }
    // false verdict: one violating pair per candidate s
    std::vector<Index> cands = s ? s->canonical_order() : std::vector<Index>{ring.one()};
    if (c.counters.size() != cands.size()) return false;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const CounterPair& cp = c.counters[i];
        Index cand = cp.s ? *cp.s : ring.one();
        if (cand != cands[i]) return false;
        if (!pair_violates(cand, cp.x, cp.y)) return false;
    }
    return true;
}

ClassifyReport classify_full(const GradedIdeal& p, const MultSet& s) {
    if (p.ring() != s.ring()) throw precondition_error("classify_full: mismatched rings");
    Classifier cls(p.ring());
    const GradeGroup& group = p.ring()->grade_group();

    ClassifyReport rep;
    std::vector<bool> row_uses_set;
    auto push = [&](const Certificate& c, bool uses_set) {
        rep.rows.push_back(c);
        row_uses_set.push_back(uses_set);
    };

    const Certificate c_prime = cls.pairwise(Pred::prime, p, nullptr);
    const Certificate c_primary = cls.pairwise(Pred::primary, p, nullptr);
    const Certificate c_wprime = cls.pairwise(Pred::weakly_prime, p, nullptr);
    const Certificate c_wprimary = cls.pairwise(Pred::weakly_primary, p, nullptr);
    const Certificate c_sprime = cls.pairwise(Pred::s_prime, p, &s);
    const Certificate c_sprimary = cls.pairwise(Pred::s_primary, p, &s);
    const Certificate c_wsprime = cls.pairwise(Pred::weakly_s_prime, p, &s);
    const Certificate c_wsprimary = cls.pairwise(Pred::weakly_s_primary, p, &s);
    push(c_prime, false);
    push(c_primary, false);
    push(c_wprime, false);
    push(c_wprimary, false);
    push(c_sprime, true);
    push(c_sprimary, true);
    push(c_wsprime, true);
    push(c_wsprimary, true);
    push(cls.idealwise(p, s, false), true);
    push(cls.idealwise(p, s, true), true);

    rep.per_grade_included = s.in_identity_component();
    std::vector<Certificate> per_grade_weakly;
    if (rep.per_grade_included) {
        for (int g = 0; g < group.size(); ++g) {
            push(cls.pairwise(Pred::s_primary, p, &s, g), true);
            per_grade_weakly.push_back(cls.pairwise(Pred::weakly_s_primary, p, &s, g));
            push(per_grade_weakly.back(), true);
        }
    }

    auto check = [&](std::string name, bool pass) {
        rep.cross_checks.push_back(CrossCheck{std::move(name), pass});
    };
    auto implies = [](bool a, bool b) { return !a || b; };

    check("prime_implies_primary", implies(c_prime.verdict, c_primary.verdict));
    check("primary_implies_weakly_primary", implies(c_primary.verdict, c_wprimary.verdict));
    check("weakly_primary_implies_weakly_s_primary",
          implies(c_wprimary.verdict, c_wsprimary.verdict));
    check("s_primary_implies_weakly_s_primary",
          implies(c_sprimary.verdict, c_wsprimary.verdict));
    check("weakly_s_prime_implies_weakly_s_primary",
          implies(c_wsprime.verdict, c_wsprimary.verdict));
    check("weakly_prime_implies_weakly_primary",
          implies(c_wprime.verdict, c_wprimary.verdict));

    if (s.all_units())
        check("unit_set_collapse",
              c_wsprimary.verdict == c_wprimary.verdict);

    // radical transfer: P weakly S-primary iff Grad(P) weakly S-prime
    const GradedIdeal& rad = cls.radical(p);
    check("radical_transfer",
          c_wsprimary.verdict ==
              cls.pairwise(Pred::weakly_s_prime, rad, &s).verdict);

    if (rep.per_grade_included) {
        bool restriction_ok = true;
        bool per_grade_transfer_ok = true;
        for (int g = 0; g < group.size(); ++g) {
            if (c_wsprimary.verdict && !per_grade_weakly[g].verdict) restriction_ok = false;
            if (per_grade_weakly[g].verdict !=
                cls.pairwise(Pred::weakly_s_prime, rad, &s, g).verdict)
                per_grade_transfer_ok = false;
        }
        check("restriction_to_components", restriction_ok);
        check("per_grade_radical_transfer", per_grade_transfer_ok);
    }

    bool replay_ok = true;
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        if (!replay(rep.rows[i], p, row_uses_set[i] ? &s : nullptr)) replay_ok = false;
    }
    check("certificate_replay", replay_ok);

    return rep;
}

} // namespace graded
