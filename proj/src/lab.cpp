#include "laukit/lab.hpp"

#include "laukit/analysis.hpp"
#include "laukit/constructions.hpp"

namespace laukit {

std::optional<Predicate> parse_predicate(const std::string& name) {
    if (name == "unital") return Predicate::unital;
    if (name == "commutative") return Predicate::commutative;
    if (name == "semisimple") return Predicate::semisimple;
    return std::nullopt;
}

const char* predicate_name(Predicate p) {
    switch (p) {
        case Predicate::unital: return "unital";
        case Predicate::commutative: return "commutative";
        case Predicate::semisimple: return "semisimple";
    }
    return "?";
}

namespace {

bool holds(Predicate p, const Fingerprint& fp) {
    switch (p) {
        case Predicate::unital: return fp.unital;
        case Predicate::commutative: return fp.commutative;
        case Predicate::semisimple: return fp.semisimple();
    }
    return false;
}

std::string quoted_describe(const std::string& expr) {
    return "laukit describe '" + expr + "'";
}

}  // namespace

LabInputs shipped_lab_inputs() {
    using F = Family;
    LabInputs in;
    in.corpus = {
        {F::zero, 1},      {F::zero, 2},      {F::pointwise, 1}, {F::pointwise, 2},
        {F::pointwise, 3}, {F::trunc_poly, 2}, {F::trunc_poly, 3},
        {F::cyclic_group, 2}, {F::cyclic_group, 3}, {F::matrix, 2},
    };
    for (const CatalogSpec& a : in.corpus)
        for (const CatalogSpec& b : in.corpus) in.pairs.emplace_back(a, b);
    std::vector<std::pair<CatalogSpec, std::string>> characters = {
        {{F::pointwise, 1}, "coord:1"}, {{F::pointwise, 2}, "coord:1"},
        {{F::pointwise, 3}, "coord:2"}, {{F::trunc_poly, 2}, "eval0"},
        {{F::trunc_poly, 3}, "eval0"},  {{F::cyclic_group, 2}, "aug"},
        {{F::cyclic_group, 3}, "aug"},
    };
    for (const CatalogSpec& a : in.corpus)
        for (const auto& [b, chi] : characters) in.triples.push_back({a, b, chi});
    return in;
}

LabReport run_lab(Predicate p, const LabInputs& inputs) {
    LabReport rep;
    rep.predicate = predicate_name(p);
    const std::string q = rep.predicate;

    for (const CatalogSpec& spec : inputs.corpus) {
        AlgebraPtr a = catalog_algebra(spec);
        if (!holds(p, fingerprint(a))) continue;
        ++rep.h1_unitization.cases;
        std::string expr = "unitize(" + spec.to_string() + ")";
        if (!holds(p, fingerprint(unitization(a).algebra)))
            rep.h1_unitization.failures.push_back(
                {spec.to_string() + " is " + q + " but " + expr + " is not",
                 quoted_describe(expr)});
    }

    for (const auto& [s1, s2] : inputs.pairs) {
        AlgebraPtr a1 = catalog_algebra(s1);
        AlgebraPtr a2 = catalog_algebra(s2);
        if (!holds(p, fingerprint(a1)) || !holds(p, fingerprint(a2))) continue;
        ++rep.h2_direct_sum.cases;
        std::string expr = "dsum(" + s1.to_string() + "," + s2.to_string() + ")";
        if (!holds(p, fingerprint(direct_sum(a1, a2))))
            rep.h2_direct_sum.failures.push_back(
                {s1.to_string() + " and " + s2.to_string() + " are " + q + " but " + expr +
                     " is not",
                 quoted_describe(expr)});
    }

    for (const H3Instance& inst : shipped_h3_instances()) {
        if (!holds(p, fingerprint(inst.ambient))) continue;
        ++rep.h3_finite_codim.cases;
        AlgebraPtr sub = subspace_algebra(inst.subspace, "sub(" + inst.name + ")");
        std::string expr = "sub(" + inst.name + ")";
        if (!holds(p, fingerprint(sub)))
            rep.h3_finite_codim.failures.push_back(
                {inst.name + " (" + inst.summary + "): ambient is " + q +
                     " but the codimension-" + std::to_string(inst.subspace.codimension()) +
                     " subalgebra is not",
                 quoted_describe(expr)});
    }

    for (const LauTriple& t : inputs.triples) {
        AlgebraPtr a = catalog_algebra(t.a);
        AlgebraPtr b = catalog_algebra(t.b);
        if (!holds(p, fingerprint(a)) || !holds(p, fingerprint(b))) continue;
        ++rep.conclusion_lau.cases;
        LinearMap chi = catalog_character(t.b, t.character);
        std::string expr =
            "lau(" + t.a.to_string() + "," + t.b.to_string() + "," + t.character + ")";
        if (!holds(p, fingerprint(lau_product(a, b, chi))))
            rep.conclusion_lau.failures.push_back(
                {t.a.to_string() + " and " + t.b.to_string() + " are " + q + " but " + expr +
                     " is not",
                 quoted_describe(expr)});
    }

    return rep;
}

LabReport run_lab(Predicate p) {
    return run_lab(p, shipped_lab_inputs());
}

namespace {

Json section_to_json(const LabSection& s) {
    Json failures = Json::array();
    for (const LabFailure& f : s.failures)
        failures.push_back(Json{{"description", f.description}, {"replay", f.replay}});
    return Json{{"cases", s.cases}, {"failures", std::move(failures)}};
}

}  // namespace

Json lab_report_to_json(const LabReport& rep) {
    Json j;
    j["predicate"] = rep.predicate;
    j["h1_unitization"] = section_to_json(rep.h1_unitization);
    j["h2_direct_sum"] = section_to_json(rep.h2_direct_sum);
    j["h3_finite_codim"] = section_to_json(rep.h3_finite_codim);
    j["conclusion_lau"] = section_to_json(rep.conclusion_lau);
    j["all_passed"] = rep.all_passed();
    return j;
}

}  // namespace laukit
