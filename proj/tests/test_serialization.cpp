#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sho/serialization.hpp"

using namespace sho;
using nlohmann::json;

namespace {

struct Fixture {
    ParamsPtr par = make_parameters(5, 2, {1, 1});
    Workbench wb{par};

    SuperElement elem(std::vector<int> alpha, std::uint32_t u = 0, int c = 1) const {
        Mono mn;
        mn.alpha = std::move(alpha);
        mn.u = u;
        return SuperElement::monomial(par, mn, c);
    }
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "params roundtrip") {
    auto big = make_parameters(5, 3, {2, 1, 1});
    auto back = params_from_json(params_to_json(*big));
    CHECK(back->p() == 5);
    CHECK(back->m() == 3);
    CHECK(back->t() == std::vector<int>{2, 1, 1});
    CHECK_THROWS_AS(params_from_json(json{{"p", 4}, {"m", 2}, {"t", {1, 1}}}), config_error);
}

TEST_CASE_FIXTURE(Fixture, "element and derivation roundtrip") {
    SuperElement f = elem({2, 1}, 3, 4) + elem({0, 0}, 1, 2) + elem({4, 4});
    CHECK(element_from_json(par, element_to_json(f)) == f);
    CHECK(element_from_json(par, element_to_json(SuperElement(par))).is_zero());
    Derivation d = t_h(f) + Derivation::d(par, 2);
    CHECK(derivation_from_json(par, derivation_to_json(d)) == d);
    // malformed terms are rejected
    CHECK_THROWS_AS(element_from_json(par, json::parse(R"([{"alpha":[5,0],"u":[],"c":1}])")),
                    config_error);
    CHECK_THROWS_AS(element_from_json(par, json::parse(R"([{"alpha":[1,0],"u":[2],"c":1}])")),
                    config_error);
    CHECK_THROWS_AS(element_from_json(par, json::parse(R"([{"alpha":[1,0],"u":[3,3],"c":1}])")),
                    config_error);
    CHECK_THROWS_AS(derivation_from_json(par, json::array({json::array()})), config_error);
}

TEST_CASE_FIXTURE(Fixture, "automorphism roundtrip and revalidation") {
    const auto& sho = wb.algebra(AlgebraTag::SHO);
    OAutomorphism sigma = sample_automorphism(sho, 77, 1);
    json j = automorphism_to_json(sigma);
    CHECK(automorphism_from_json(j) == sigma);
    CHECK(j.dump() == automorphism_to_json(sigma).dump());
    // corrupting an image so the linear part degenerates must throw
    json bad = j;
    bad["images"][1] = bad["images"][0];
    CHECK_THROWS_AS(automorphism_from_json(bad), config_error);
}

TEST_CASE_FIXTURE(Fixture, "g-automorphism roundtrip and revalidation") {
    const auto& sho = wb.algebra(AlgebraTag::SHO);
    GAutomorphism f = phi(sample_automorphism(sho, 31, 0), sho);
    json j = gautomorphism_to_json(f, "SHO");
    CHECK(gautomorphism_from_json(sho, j) == f);
    json bad = j;
    bad["matrix"][0][0] = 9;
    CHECK_THROWS_AS(gautomorphism_from_json(sho, bad), config_error);
    bad = j;
    bad["basis"][0] = "bogus";
    CHECK_THROWS_AS(gautomorphism_from_json(sho, bad), config_error);
    bad = j;
    bad["matrix"].erase(0);
    CHECK_THROWS_AS(gautomorphism_from_json(sho, bad), config_error);
}

TEST_CASE_FIXTURE(Fixture, "structure constants export, import, and cross-check") {
    const auto& sho = wb.algebra(AlgebraTag::SHO);
    json j = export_structure_constants(sho, "SHO");
    CHECK(j.at("header").at("algebra") == "SHO");
    CHECK(j.at("basis").size() == 46);
    // deterministic dump
    CHECK(j.dump() == export_structure_constants(sho, "SHO").dump());

    StructureConstantAlgebra alg = import_structure_constants(j);
    CHECK(alg.dim == 46);
    CHECK(alg.p == 5);
    CHECK(alg.check_consistency(2000, 1));
    // the abstract table reproduces a concrete bracket
    const auto& basis = sho.flat_basis();
    auto coords = sho.coords(bracket(basis[3], basis[7]));
    REQUIRE(coords.has_value());
    auto row = alg.bracket_basis(3, 7);
    for (int k = 0; k < alg.dim; ++k) CHECK(row[k] == (*coords)[k]);
}

TEST_CASE_FIXTURE(Fixture, "import rejects corrupted tables") {
    const auto& sho = wb.algebra(AlgebraTag::SHO);
    json j = export_structure_constants(sho, "SHO");

    json bad = j;
    bad["constants"][0]["result"][0][1] =
        (bad["constants"][0]["result"][0][1].get<int>() % 4) + 1;
    CHECK_THROWS_AS(import_structure_constants(bad), config_error);

    bad = j;
    bad["basis"][5]["label"] = bad["basis"][4]["label"];
    CHECK_THROWS_AS(import_structure_constants(bad), config_error);

    bad = j;
    bad["constants"][2]["result"][0][0] = "unknown_label";
    CHECK_THROWS_AS(import_structure_constants(bad), config_error);

    // corrupting a stored basis vector breaks the vector/table cross-check
    bad = j;
    json& vec = bad["basis"][10]["vector"];
    bool bumped = false;
    for (auto& coeff : vec)
        for (auto& term : coeff)
            if (!bumped) {
                term["c"] = (term["c"].get<int>() % 4) + 1;
                bumped = true;
            }
    REQUIRE(bumped);
    CHECK_THROWS_AS(import_structure_constants(bad), config_error);
}

TEST_CASE("export and import agree across the series at t=(2,1)") {
    auto par = make_parameters(5, 2, {2, 1});
    Workbench wb(par);
    const auto& shobar = wb.algebra(AlgebraTag::SHOBar);
    StructureConstantAlgebra alg =
        import_structure_constants(export_structure_constants(shobar, "SHO-bar"));
    CHECK(alg.dim == shobar.dim());
}
