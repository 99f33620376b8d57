#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sho/cartan.hpp"
#include "sho/subspace.hpp"

using namespace sho;

namespace {

struct Fixture {
    ParamsPtr par = make_parameters(5, 2, {1, 1});
    Workbench wb{par};
};

}  // namespace

TEST_CASE("algebra tags roundtrip") {
    for (AlgebraTag tag : {AlgebraTag::W, AlgebraTag::HO, AlgebraTag::SPrime, AlgebraTag::SHOPrime,
                           AlgebraTag::SHOBar, AlgebraTag::SHO})
        CHECK(tag_from_string(to_string(tag)) == tag);
    CHECK_THROWS_AS(tag_from_string("nope"), config_error);
}

TEST_CASE_FIXTURE(Fixture, "dimensions of the series at p=5, m=2") {
    CHECK(wb.algebra(AlgebraTag::W).dim() == 400);
    CHECK(wb.algebra(AlgebraTag::HO).dim() == 99);
    CHECK(wb.algebra(AlgebraTag::SPrime).dim() == 301);
    CHECK(wb.algebra(AlgebraTag::SHOPrime).dim() == 51);
    CHECK(wb.algebra(AlgebraTag::SHOBar).dim() == 47);
    CHECK(wb.algebra(AlgebraTag::SHO).dim() == 46);
}

TEST_CASE_FIXTURE(Fixture, "inclusion chain") {
    const auto& ho = wb.algebra(AlgebraTag::HO);
    const auto& sp = wb.algebra(AlgebraTag::SPrime);
    const auto& shop = wb.algebra(AlgebraTag::SHOPrime);
    const auto& shobar = wb.algebra(AlgebraTag::SHOBar);
    const auto& sho = wb.algebra(AlgebraTag::SHO);
    CHECK(sho.subspace_of(shobar));
    CHECK(shobar.subspace_of(shop));
    CHECK(shop.subspace_of(ho));
    CHECK(shop.subspace_of(sp));
    CHECK_FALSE(ho.subspace_of(sp));
    // SHO' is exactly the intersection: rank formula dim(A) + dim(B) - dim(A+B)
    GradedSubspace sum(par, wb.index());
    for (const auto& b : ho.flat_basis()) sum.insert(b);
    for (const auto& b : sp.flat_basis()) sum.insert(b);
    CHECK(ho.dim() + sp.dim() - sum.dim() == shop.dim());
}

TEST_CASE_FIXTURE(Fixture, "graded subspace bookkeeping") {
    const auto& sho = wb.algebra(AlgebraTag::SHO);
    CHECK(sho.min_degree() == -1);
    CHECK(sho.max_degree() == 5);
    CHECK(sho.dim_at(-1) == 4);
    int total = 0;
    for (const auto& [deg, n] : sho.dims()) total += n;
    CHECK(total == sho.dim());
    // coords roundtrip on every basis element
    for (const auto& b : sho.flat_basis()) {
        auto v = sho.coords(b);
        REQUIRE(v.has_value());
        CHECK(sho.from_coords(*v) == b);
    }
    // x_1 D_1 has divergence 1, so it lies outside SHO
    CHECK_FALSE(sho.coords(Derivation::monomial(par, Mono{{1, 0}, 0}, 0)).has_value());
}

TEST_CASE_FIXTURE(Fixture, "series members are bracket-closed, W-degree bounds hold") {
    for (AlgebraTag tag : {AlgebraTag::SPrime, AlgebraTag::SHOPrime, AlgebraTag::SHOBar,
                           AlgebraTag::SHO}) {
        const auto& g = wb.algebra(tag);
        GradedSubspace derived = derived_algebra(g);
        CHECK(derived.subspace_of(g));
    }
    // SHO is its own derived algebra (simplicity at desk scale)
    CHECK(derived_algebra(wb.algebra(AlgebraTag::SHO)).dim() == 46);
}

TEST_CASE_FIXTURE(Fixture, "omega element spans the top of SHO-bar") {
    Derivation omega = omega_element(par);
    CHECK_FALSE(omega.is_zero());
    CHECK(omega.min_degree() == 6);
    CHECK(omega.is_homogeneous_degree());
    CHECK(omega.parity() == 0);
    const auto& shobar = wb.algebra(AlgebraTag::SHOBar);
    CHECK(shobar.contains(omega));
    CHECK_FALSE(wb.algebra(AlgebraTag::SHO).contains(omega));
    CHECK(shobar.dim_at(6) == 1);
}

TEST_CASE_FIXTURE(Fixture, "structural verification passes") {
    Lemma11Report report = verify_lemma11(wb);
    CHECK(report.all_passed);
    CHECK(report.items.size() == 4);
    for (const auto& item : report.items) {
        INFO(item.item, ": ", item.detail);
        CHECK(item.passed);
    }
}

TEST_CASE_FIXTURE(Fixture, "transitivity of the graded algebras") {
    CHECK(transitivity_check(wb, wb.algebra(AlgebraTag::SHOPrime)));
    CHECK(transitivity_check(wb, wb.algebra(AlgebraTag::SHOBar)));
    CHECK(transitivity_check(wb, wb.algebra(AlgebraTag::SHO)));
}

TEST_CASE("structural verification at m=3") {
    Workbench wb(make_parameters(5, 3, {1, 1, 1}));
    CHECK(wb.algebra(AlgebraTag::W).dim() == 6000);
    Lemma11Report report = verify_lemma11(wb);
    CHECK(report.all_passed);
    CHECK(wb.algebra(AlgebraTag::SHOBar).dim() - wb.algebra(AlgebraTag::SHO).dim() == 1);
    CHECK(wb.algebra(AlgebraTag::SHOBar).max_degree() == 11);
}

TEST_CASE("series at t=(2,1)") {
    Workbench wb(make_parameters(5, 2, {2, 1}));
    const auto& shop = wb.algebra(AlgebraTag::SHOPrime);
    const auto& shobar = wb.algebra(AlgebraTag::SHOBar);
    CHECK(shobar.subspace_of(shop));
    CHECK(shobar.min_degree() == -1);
    CHECK(wb.algebra(AlgebraTag::SHO).subspace_of(shobar));
}
