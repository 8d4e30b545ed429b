#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "graded/ideal.hpp"
#include "graded/mult_set.hpp"

namespace graded {

/// One violating pair for a specific candidate s (s empty for predicates
/// that are not S-parameterized).
struct CounterPair {
    std::optional<Index> s;
    Index x = 0;
    Index y = 0;
};

/// One violating ideal pair for the idealwise predicates.
struct IdealCounter {
    std::optional<Index> s;
    std::vector<Index> left_gens;
    std::vector<Index> right_gens;
};

/// Outcome of a predicate check.  When the verdict is true for an
/// S-parameterized property the first working s in canonical element order
/// is recorded; when false, one counter is stored per candidate s.
struct Certificate {
    std::string property;
    bool verdict = false;
    std::optional<Index> witness_s;
    std::vector<CounterPair> counters;
    std::vector<IdealCounter> ideal_counters;
    std::optional<int> grade;
    std::uint64_t trace_size = 0;
};

enum class Pred {
    prime,
    primary,
    weakly_prime,
    weakly_primary,
    s_prime,
    s_primary,
    weakly_s_prime,
    weakly_s_primary,
};

std::string property_name(Pred kind, int grade);

/// Memoizing predicate engine for one ring.  Interns ideals and sets by
/// realized-set identity, caches radicals, the graded-ideal lattice, and
/// every certificate.  All results are deterministic: candidate witnesses
/// are tried in canonical element order.
class Classifier {
public:
    explicit Classifier(RingPtr ring);

    const RingPtr& ring() const { return ring_; }

    const std::vector<GradedIdeal>& lattice();
    /// Position of a graded ideal inside lattice(), or -1.
    int lattice_position(const GradedIdeal& p);
    /// Memoized product of two lattice ideals by position.
    const GradedIdeal& lattice_product(int a, int b);

    int ideal_id(const GradedIdeal& p);
    const GradedIdeal& ideal_by_id(int id) const { return ideals_[id]; }
    int set_id(const MultSet& s);
    const MultSet& set_by_id(int id) const { return sets_[id]; }

    const GradedIdeal& radical(const GradedIdeal& p);
    const GradedIdeal& radical_of_zero();

    /// Pairwise predicate over homogeneous pairs (grade < 0) or over the
    /// single component R_g (grade >= 0, which also requires S inside R_e).
    /// s may be null only for the non-S kinds.
    const Certificate& pairwise(Pred kind, const GradedIdeal& p, const MultSet* s,
                                int grade = -1);

    /// Idealwise characterization over the graded-ideal lattice.
    /// literal:    IJ in P           => sI in P or sJ in P
    /// corrected:  {0} != IJ in P    => sI in P or sJ in Grad(P)
    const Certificate& idealwise(const GradedIdeal& p, const MultSet& s, bool corrected);

private:
    Certificate run_pairwise(Pred kind, const GradedIdeal& p, const MultSet* s, int grade);
    Certificate run_idealwise(const GradedIdeal& p, const MultSet& s, bool corrected);

    RingPtr ring_;
    std::deque<GradedIdeal> ideals_;
    std::unordered_map<DenseSet, int, DenseSetHash> ideal_ids_;
    std::deque<MultSet> sets_;
    std::unordered_map<DenseSet, int, DenseSetHash> set_ids_;
    std::map<int, int> radical_memo_;
    std::map<std::tuple<int, int, int, int>, Certificate> pairwise_memo_;
    std::map<std::tuple<int, int, bool>, Certificate> idealwise_memo_;
    std::optional<std::vector<GradedIdeal>> lattice_;
    std::unordered_map<DenseSet, int, DenseSetHash> lattice_pos_;
    std::map<std::pair<int, int>, GradedIdeal> lattice_product_memo_;
    std::optional<int> rad_zero_id_;
};

// Convenience single-shot wrappers (spec-facing predicate API).  Each
// validates its preconditions: the ideal must be proper and graded; the
// S-parameterized forms require P and S disjoint (violations raise
// precondition_error, which is distinct from a false verdict); the
// per-grade forms require S inside R_e.

Certificate is_graded_prime(const GradedIdeal& p);
Certificate is_graded_primary(const GradedIdeal& p);
Certificate is_graded_weakly_prime(const GradedIdeal& p);
Certificate is_graded_weakly_primary(const GradedIdeal& p);
Certificate is_graded_s_prime(const GradedIdeal& p, const MultSet& s);
Certificate is_graded_s_primary(const GradedIdeal& p, const MultSet& s);
Certificate is_graded_weakly_s_prime(const GradedIdeal& p, const MultSet& s);
Certificate is_graded_weakly_s_primary(const GradedIdeal& p, const MultSet& s);
Certificate is_g_s_primary(const GradedIdeal& p, const MultSet& s, int g);
Certificate is_g_weakly_s_primary(const GradedIdeal& p, const MultSet& s, int g);
Certificate is_g_s_prime(const GradedIdeal& p, const MultSet& s, int g);
Certificate is_g_weakly_s_prime(const GradedIdeal& p, const MultSet& s, int g);
Certificate idealwise_weakly_s_primary(const GradedIdeal& p, const MultSet& s, bool corrected);

/// Re-check a certificate against the public predicate machinery: a true
/// verdict must survive a full re-scan with the stored witness; a false one
/// must have a concrete violating pair for every candidate s.
bool replay(const Certificate& c, const GradedIdeal& p, const MultSet* s);

struct CrossCheck {
    std::string name;
    bool pass = false;
};

struct ClassifyReport {
    std::vector<Certificate> rows;
    std::vector<CrossCheck> cross_checks;
    bool per_grade_included = false;
};

/// Run every predicate (plus the per-grade variants for each g when S lies
/// in R_e), then the consistency cross-checks: the implication chain, the
/// unit-set collapse, the radical transfer in both the global and per-grade
/// forms, quantifier-domain restriction, and certificate replay.
ClassifyReport classify_full(const GradedIdeal& p, const MultSet& s);

} // namespace graded
