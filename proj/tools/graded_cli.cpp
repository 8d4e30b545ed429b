// Command-line front end: classify ideal properties, compute graded
// radicals, localize, enumerate graded ideals, run the theorem suite, and
// check the exact-arithmetic witness facts.
//
// Exit codes: 0 ok, 2 malformed input, 3 violated precondition, 4 size cap.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graded/classify.hpp"
#include "graded/errors.hpp"
#include "graded/euclid.hpp"
#include "graded/ideal.hpp"
#include "graded/localization.hpp"
#include "graded/spec_parse.hpp"
#include "graded/theorems.hpp"

using nlohmann::json;
using namespace graded;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw spec_error("cannot open spec file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

json coords_json(const GradedRing& r, Index x) { return json(r.coords_of(x)); }

json gens_json(const GradedRing& r, const std::vector<Index>& gens) {
    json a = json::array();
    for (Index g : gens) a.push_back(coords_json(r, g));
    return a;
}

std::string coords_str(const GradedRing& r, Index x) {
    std::vector<int> c = r.coords_of(x);
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + "]";
}

json certificate_json(const GradedRing& r, const Certificate& c) {
    json j;
    j["property"] = c.property;
    j["verdict"] = c.verdict;
    if (c.grade) j["grade"] = *c.grade;
    if (c.witness_s) j["witness_s"] = coords_json(r, *c.witness_s);
    if (!c.counters.empty()) {
        json arr = json::array();
        for (const CounterPair& cp : c.counters) {
            json e;
            if (cp.s) e["s"] = coords_json(r, *cp.s);
            e["x"] = coords_json(r, cp.x);
            e["y"] = coords_json(r, cp.y);
            arr.push_back(e);
        }
        j["counters"] = arr;
    }
    if (!c.ideal_counters.empty()) {
        json arr = json::array();
        for (const IdealCounter& ic : c.ideal_counters) {
            json e;
            if (ic.s) e["s"] = coords_json(r, *ic.s);
            e["left_generators"] = gens_json(r, ic.left_gens);
            e["right_generators"] = gens_json(r, ic.right_gens);
            arr.push_back(e);
        }
        j["ideal_counters"] = arr;
    }
    j["trace_size"] = c.trace_size;
    return j;
}

struct Options {
    std::string spec_path;
    bool as_json = false;
    bool no_timestamp = false;
    std::string corpus = "default";
    std::string theorem_id;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_classify(const Options& opt) {
    ProblemSpec spec = parse_problem_spec(read_file(opt.spec_path));
    const RingPtr& r = spec.ring;
    GradedIdeal p = GradedIdeal::from_generators(r, spec.ideal_gens);
    MultSet s = MultSet::closure(r, spec.set_gens);
    ClassifyReport rep = classify_full(p, s);

    if (opt.as_json) {
        json j;
        j["command"] = "classify";
        j["ring"] = r->name();
        j["ring_order"] = r->order();
        j["ideal_generators"] = gens_json(*r, p.generators());
        j["ideal_size"] = p.size();
        j["set_elements"] = gens_json(*r, s.canonical_order());
        json rows = json::array();
        for (const Certificate& c : rep.rows) rows.push_back(certificate_json(*r, c));
        j["results"] = rows;
        json checks = json::array();
        for (const CrossCheck& cc : rep.cross_checks)
            checks.push_back(json{{"name", cc.name}, {"pass", cc.pass}});
        j["cross_checks"] = checks;
        if (!opt.no_timestamp) j["generated_at"] = iso_timestamp();
        emit(j);
        return 0;
    }

    std::cout << "ring: " << r->name() << " (order " << r->order() << ", grading "
              << r->grade_group().to_string() << ")\n";
    std::cout << "ideal: |P| = " << p.size() << ", generators";
    for (Index g : p.generators()) std::cout << " " << coords_str(*r, g);
    if (p.generators().empty()) std::cout << " (zero ideal)";
    std::cout << "\nset: {";
    bool first = true;
    for (Index x : s.canonical_order()) {
        if (!first) std::cout << ", ";
        first = false;
        std::cout << coords_str(*r, x);
    }
    std::cout << "}\n\n";
    for (const Certificate& c : rep.rows) {
        std::cout << c.property;
        if (c.grade) std::cout << "[g=" << *c.grade << "]";
        std::cout << ": " << (c.verdict ? "true" : "false");
        if (c.witness_s) std::cout << "  witness_s=" << coords_str(*r, *c.witness_s);
        if (!c.counters.empty()) {
            const CounterPair& cp = c.counters.front();
            std::cout << "  counter=(";
            if (cp.s) std::cout << "s=" << coords_str(*r, *cp.s) << ",";
            std::cout << "x=" << coords_str(*r, cp.x) << ",y=" << coords_str(*r, cp.y) << ")";
        }
        std::cout << "\n";
    }
    std::cout << "\ncross checks:\n";
    for (const CrossCheck& cc : rep.cross_checks)
        std::cout << "  " << cc.name << ": " << (cc.pass ? "ok" : "FAILED") << "\n";
    return 0;
}

int cmd_radical(const Options& opt) {
    ProblemSpec spec = parse_problem_spec(read_file(opt.spec_path));
    GradedIdeal p = GradedIdeal::from_generators(spec.ring, spec.ideal_gens);
    GradedIdeal rad = grad_radical(p);
    if (opt.as_json) {
        json j;
        j["command"] = "radical";
        j["ring"] = spec.ring->name();
        j["ideal_generators"] = gens_json(*spec.ring, p.generators());
        j["radical_generators"] = gens_json(*spec.ring, rad.generators());
        j["radical_size"] = rad.size();
        if (!opt.no_timestamp) j["generated_at"] = iso_timestamp();
        emit(j);
        return 0;
    }
    std::cout << "ring: " << spec.ring->name() << "\n|P| = " << p.size()
              << ", |Grad(P)| = " << rad.size() << "\nGrad(P) generators:";
    for (Index g : rad.generators()) std::cout << " " << coords_str(*spec.ring, g);
    if (rad.generators().empty()) std::cout << " (zero ideal)";
    std::cout << "\n";
    return 0;
}

int cmd_localize(const Options& opt) {
    ProblemSpec spec = parse_problem_spec(read_file(opt.spec_path));
    MultSet s = MultSet::closure(spec.ring, spec.set_gens);
    LocalizedRing loc(spec.ring, s);
    if (opt.as_json) {
        json j;
        j["command"] = "localize";
        j["ring"] = spec.ring->name();
        j["set_elements"] = gens_json(*spec.ring, s.canonical_order());
        j["kernel_generators"] = gens_json(*spec.ring, loc.kernel().generators());
        j["kernel_size"] = loc.kernel().size();
        j["localized_order"] = loc.ring()->order();
        if (!opt.no_timestamp) j["generated_at"] = iso_timestamp();
        emit(j);
        return 0;
    }
    std::cout << "ring: " << spec.ring->name() << " (order " << spec.ring->order() << ")\n"
              << "kernel |K| = " << loc.kernel().size() << ", generators";
    for (Index g : loc.kernel().generators()) std::cout << " " << coords_str(*spec.ring, g);
    if (loc.kernel().generators().empty()) std::cout << " (zero ideal)";
    std::cout << "\nlocalized ring order: " << loc.ring()->order() << "\n";
    return 0;
}

int cmd_enumerate(const Options& opt) {
    ProblemSpec spec = parse_problem_spec(read_file(opt.spec_path));
    std::vector<GradedIdeal> all = enumerate_graded_ideals(spec.ring);
    if (opt.as_json) {
        json j;
        j["command"] = "enumerate";
        j["ring"] = spec.ring->name();
        j["count"] = all.size();
        json arr = json::array();
        for (const GradedIdeal& p : all)
            arr.push_back(json{{"size", p.size()},
                               {"generators", gens_json(*spec.ring, p.generators())}});
        j["ideals"] = arr;
        if (!opt.no_timestamp) j["generated_at"] = iso_timestamp();
        emit(j);
        return 0;
    }
    std::cout << "ring: " << spec.ring->name() << "\n"
              << all.size() << " graded ideals\n";
    for (const GradedIdeal& p : all) {
        std::cout << "  |I| = " << p.size() << ", generators";
        for (Index g : p.generators()) std::cout << " " << coords_str(*spec.ring, g);
        if (p.generators().empty()) std::cout << " (zero ideal)";
        std::cout << "\n";
    }
    return 0;
}

int cmd_theorems(const Options& opt) {
    theorems::Corpus corpus = theorems::build_corpus(theorems::config_by_name(opt.corpus));
    std::vector<theorems::TheoremReport> reports;
    if (!opt.theorem_id.empty())
        reports.push_back(theorems::run_theorem(opt.theorem_id, corpus));
    else
        reports = theorems::run_all(corpus);

    if (opt.as_json) {
        json j;
        j["command"] = "theorems";
        j["corpus"] = corpus.config_name;
        j["instances"] = corpus.instances.size();
        json arr = json::array();
        for (const auto& r : reports) {
            json e;
            e["id"] = r.id;
            e["statement"] = r.statement;
            e["status"] = theorems::to_string(r.status);
            e["instances"] = r.instances;
            e["non_vacuous"] = r.non_vacuous;
            if (r.counterexample) {
                e["counterexample"] = json{{"instance", r.counterexample->instance_id},
                                           {"detail", r.counterexample->detail}};
            }
            if (!r.note.empty()) e["note"] = r.note;
            if (!opt.no_timestamp) e["wall_ms"] = r.wall_ms;
            arr.push_back(e);
        }
        j["reports"] = arr;
        if (!opt.no_timestamp) j["generated_at"] = iso_timestamp();
        emit(j);
        return 0;
    }

    std::cout << "corpus: " << corpus.config_name << " (" << corpus.rings.size()
              << " rings, " << corpus.instances.size() << " instances)\n";
    for (const auto& r : reports) {
        std::printf("%-20s %-9s instances=%-7lld non_vacuous=%-7lld %7.1fms\n", r.id.c_str(),
                    theorems::to_string(r.status).c_str(), r.instances, r.non_vacuous,
                    r.wall_ms);
        if (r.counterexample)
            std::cout << "    counterexample @ " << r.counterexample->instance_id << ": "
                      << r.counterexample->detail << "\n";
        if (!r.note.empty()) std::cout << "    note: " << r.note << "\n";
    }
    return 0;
}

int cmd_witness(const Options& opt) {
    std::vector<euclid::WitnessFact> facts = euclid::verify_witness_facts();
    bool all = true;
    if (opt.as_json) {
        json j;
        j["command"] = "witness";
        json arr = json::array();
        for (const auto& f : facts) {
            arr.push_back(json{{"fact", f.description}, {"pass", f.holds}});
            all = all && f.holds;
        }
        j["facts"] = arr;
        j["all_pass"] = all;
        if (!opt.no_timestamp) j["generated_at"] = iso_timestamp();
        emit(j);
        return 0;
    }
    for (const auto& f : facts) {
        std::cout << (f.holds ? "[pass] " : "[FAIL] ") << f.description << "\n";
        all = all && f.holds;
    }
    std::cout << (all ? "all facts pass\n" : "FACT FAILURES PRESENT\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite graded commutative rings: ideal classification and "
                 "exhaustive structural checks"};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_spec) {
        if (needs_spec)
            sub->add_option("--spec", opt.spec_path, "problem document (JSON)")->required();
        sub->add_flag("--json", opt.as_json, "machine-readable output");
        sub->add_flag("--no-timestamp", opt.no_timestamp,
                      "suppress timestamps for byte-identical reruns");
    };

    CLI::App* c_classify = app.add_subcommand("classify", "run every ideal predicate");
    add_common(c_classify, true);
    CLI::App* c_radical = app.add_subcommand("radical", "graded radical of the ideal");
    add_common(c_radical, true);
    CLI::App* c_localize = app.add_subcommand("localize", "localize at the multiplicative set");
    add_common(c_localize, true);
    CLI::App* c_enumerate = app.add_subcommand("enumerate", "list all graded ideals");
    add_common(c_enumerate, true);
    CLI::App* c_theorems = app.add_subcommand("theorems", "run the structural check registry");
    add_common(c_theorems, false);
    c_theorems->add_option("--corpus", opt.corpus, "corpus preset: small, default, large")
        ->check(CLI::IsMember({"empty", "small", "default", "large"}));
    c_theorems->add_option("--id", opt.theorem_id, "run a single registry entry");
    CLI::App* c_witness = app.add_subcommand("witness", "exact-arithmetic witness facts");
    add_common(c_witness, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_classify->parsed()) return cmd_classify(opt);
        if (c_radical->parsed()) return cmd_radical(opt);
        if (c_localize->parsed()) return cmd_localize(opt);
        if (c_enumerate->parsed()) return cmd_enumerate(opt);
        if (c_theorems->parsed()) return cmd_theorems(opt);
        if (c_witness->parsed()) return cmd_witness(opt);
    } catch (const spec_error& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const cap_error& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
