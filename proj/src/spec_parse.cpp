#include "graded/spec_parse.hpp"

#include <json.hpp>

#include "graded/errors.hpp"
#include "graded/ideal.hpp"

namespace graded {

namespace {

using nlohmann::json;

std::vector<int> int_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw spec_error(what + " must be an array of integers");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw spec_error(what + " must contain integers");
        out.push_back(v.get<int>());
    }
    return out;
}

GradeGroup group_from(const json& ring) {
    if (!ring.contains("grade_orders")) return GradeGroup::trivial();
    return GradeGroup(int_list(ring.at("grade_orders"), "grade_orders"));
}

RingPtr parse_ring(const json& ring) {
    if (!ring.is_object() || !ring.contains("kind"))
        throw spec_error("ring description needs a kind field");
    std::string kind = ring.at("kind").get<std::string>();
    if (kind == "cyclic") {
        if (!ring.contains("modulus")) throw spec_error("cyclic ring needs modulus");
        GradeGroup g = group_from(ring);
        int grade_of_one = g.identity();
        if (ring.contains("grade_of_one"))
            grade_of_one = g.from_residues(int_list(ring.at("grade_of_one"), "grade_of_one"));
        return make_cyclic_graded(ring.at("modulus").get<int>(), std::move(g), grade_of_one);
    }
    if (kind == "poly_quotient") {
        if (!ring.contains("modulus") || !ring.contains("poly"))
            throw spec_error("poly_quotient ring needs modulus and poly");
        GradeGroup g = group_from(ring);
        int x_grade = g.identity();
        if (ring.contains("x_grade"))
            x_grade = g.from_residues(int_list(ring.at("x_grade"), "x_grade"));
        return make_poly_quotient(ring.at("modulus").get<int>(),
                                  int_list(ring.at("poly"), "poly"), std::move(g), x_grade);
    }
    if (kind == "product") {
        if (!ring.contains("factors") || !ring.at("factors").is_array() ||
            ring.at("factors").size() != 2)
            throw spec_error("product ring needs exactly two factors");
        return direct_product(parse_ring(ring.at("factors")[0]),
                              parse_ring(ring.at("factors")[1]));
    }
    if (kind == "quotient") {
        if (!ring.contains("base")) throw spec_error("quotient ring needs a base ring");
        RingPtr base = parse_ring(ring.at("base"));
        std::vector<Index> gens;
        if (ring.contains("ideal_generators"))
            for (const auto& g : ring.at("ideal_generators"))
                gens.push_back(base->index_of(int_list(g, "quotient ideal generator")));
        GradedIdeal ideal = GradedIdeal::from_generators(base, gens);
        if (!ideal.is_proper()) throw spec_error("quotient by the unit ideal");
        return quotient_ring(ideal);
    }
    throw spec_error("unknown ring kind: " + kind);
}

} // namespace

Index resolve_element(const RingPtr& ring, const std::vector<int>& coords) {
    if (static_cast<int>(coords.size()) == ring->basis_size())
        return ring->index_of(coords);
    const QuotientInfo* qi = ring->quotient_info();
    if (qi && static_cast<int>(coords.size()) == qi->base->basis_size())
        return qi->projection[qi->base->index_of(coords)];
    throw spec_error("coordinate vector arity matches neither the ring nor its base");
}

ProblemSpec parse_problem_spec(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw spec_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("ring"))
        throw spec_error("problem document needs a ring field");
    ProblemSpec out;
    try {
        out.ring = parse_ring(doc.at("ring"));
        if (doc.contains("ideal_generators"))
            for (const auto& g : doc.at("ideal_generators"))
                out.ideal_gens.push_back(
                    resolve_element(out.ring, int_list(g, "ideal generator")));
        if (doc.contains("set_generators"))
            for (const auto& g : doc.at("set_generators"))
                out.set_gens.push_back(resolve_element(out.ring, int_list(g, "set generator")));
    } catch (const json::exception& e) {
        throw spec_error(std::string("malformed problem document: ") + e.what());
    }
    return out;
}

} // namespace graded
