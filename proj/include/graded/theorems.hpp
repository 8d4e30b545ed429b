#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graded/classify.hpp"
#include "graded/ideal.hpp"
#include "graded/localization.hpp"
#include "graded/morphisms.hpp"

namespace graded::theorems {

enum class Status { verified, falsified, vacuous };
std::string to_string(Status s);

struct Counterexample {
    std::string instance_id;
    std::string detail;
};

struct TheoremReport {
    std::string id;
    std::string statement;
    Status status = Status::vacuous;
    long long instances = 0;     // combinations evaluated
    long long non_vacuous = 0;   // combinations satisfying the hypothesis
    std::optional<Counterexample> counterexample;
    std::string note;
    double wall_ms = 0.0;
};

struct CorpusConfig {
    std::string name = "default";
    std::vector<int> cyclic_mods;       // Z_n, trivially graded
    std::vector<int> field_mods;        // prime Z_p, trivially graded
    std::vector<int> gauss_mods;        // Z_n[x]/(x^2+1), Z_2-graded
    std::vector<int> dual_mods;         // Z_n[x]/(x^2), Z_2-graded
    std::vector<int> degenerate_mods;   // Z_n carrying a Z_2 grading with R_1 = {0}
    // ring-name pairs combined into direct products (must share grade groups)
    std::vector<std::pair<std::string, std::string>> products;
    int max_set_generators = 2;
    std::size_t max_product_set_pairs = 64;
    std::size_t idealwise_lattice_cap = 12;  // pair/triple scans sample this many ideals
};

CorpusConfig empty_config();
CorpusConfig small_config();
CorpusConfig default_config();
CorpusConfig large_config();
CorpusConfig config_by_name(const std::string& name);

/// One classifiable (ring, P, S) combination.  P and S are positions into
/// the owning ring entry's canonical ideal and set lists.
struct CorpusInstance {
    std::string id;
    int ring_index = 0;
    int p_index = 0;
    int s_index = 0;
    bool disjoint = false;
};

struct RingEntry {
    RingPtr ring;
    std::vector<GradedIdeal> ideals;  // all graded ideals, canonical order
    std::vector<MultSet> sets;        // deduplicated closures, canonical order
    std::unique_ptr<Classifier> cls;
    int left_factor = -1;   // ring indices for product rings
    int right_factor = -1;

    std::vector<char> ideal_proper;
    std::vector<char> set_in_e, set_all_units, set_all_regular;
    int unit_set_index = -1;    // position of the trivial set {1}
    int unit_ideal_index = -1;  // position of R itself
    bool is_domain = false;
    bool lattice_chain = false;

    // identity-component machinery
    RingPtr component;
    std::unique_ptr<GradedHom> component_hom;    // inclusion R_e -> R
    std::vector<int> parent_to_component;        // parent index -> component index or -1
    std::map<int, MultSet> component_sets;       // set index -> same set inside R_e

    // lazy caches
    std::map<int, std::unique_ptr<LocalizedRing>> localizations;  // by set index
    std::map<int, RingPtr> quotients;                             // by ideal index
    std::map<int, MultSet> saturations;                           // by set index
    std::map<std::pair<int, int>, GradedIdeal> intersections;
    std::map<std::pair<int, int>, GradedIdeal> sums;
    std::map<std::pair<int, int>, GradedIdeal> factor_products;   // product rings only
    std::map<std::pair<int, int>, MultSet> factor_sets;           // valid combos only
};

class Corpus {
public:
    std::string config_name;
    CorpusConfig config;
    std::vector<RingEntry> rings;
    std::vector<CorpusInstance> instances;

    Classifier& cls(int ring_index) { return *rings[ring_index].cls; }
    /// Classifier for any ring: resolves corpus rings to their entry's
    /// classifier and caches one for auxiliary rings (quotients,
    /// localizations, components).
    Classifier& cls_for(const RingPtr& ring);

    const LocalizedRing& localization(int ring_index, int set_index);
    const RingPtr& quotient(int ring_index, int ideal_index);
    const MultSet& saturation(int ring_index, int set_index);
    const GradedIdeal& intersection(int ring_index, int a, int b);
    const GradedIdeal& sum_of(int ring_index, int a, int b);
    /// P1 x P2 as an ideal of the product ring; indices into the factor
    /// entries' ideal lists.
    const GradedIdeal& factor_product(int ring_index, int p1, int p2);
    /// S1 x S2 when gradewise valid (all pairs homogeneous), else null.
    const MultSet* factor_set(int ring_index, int s1, int s2);

    int find_ring(const std::string& name) const;

private:
    std::map<const GradedRing*, std::unique_ptr<Classifier>> aux_;
};

Corpus build_corpus(const CorpusConfig& config);

/// Canonical list of registry entries (sorted by id).
std::vector<std::string> registry_ids();
std::string registry_statement(const std::string& id);

TheoremReport run_theorem(const std::string& id, Corpus& corpus);
std::vector<TheoremReport> run_all(Corpus& corpus);

/// Exploratory finite analogue of the valuation-domain results, restricted
/// to corpus rings whose graded ideals form a chain.
std::vector<TheoremReport> probe_chain_rings(Corpus& corpus);

} // namespace graded::theorems
