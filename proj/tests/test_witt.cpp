#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sho/witt.hpp"

using namespace sho;

namespace {

struct Fixture {
    ParamsPtr par = make_parameters(5, 2, {1, 1});

    Mono mono(std::vector<int> alpha, std::uint32_t u = 0) const {
        Mono mn;
        mn.alpha = std::move(alpha);
        mn.u = u;
        return mn;
    }
    SuperElement elem(std::vector<int> alpha, std::uint32_t u = 0, int c = 1) const {
        return SuperElement::monomial(par, mono(std::move(alpha), u), c);
    }
    Derivation rand_basis(std::mt19937_64& rng) const {
        std::uniform_int_distribution<int> a(0, 4), u(0, 3), r(0, 3);
        return Derivation::monomial(par, mono({a(rng), a(rng)}, static_cast<std::uint32_t>(u(rng))),
                                    r(rng));
    }
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "evaluate acts as sum f_r D_r") {
    Derivation d = Derivation::monomial(par, mono({1, 0}), 0);  // x_1 D_1
    CHECK(evaluate(d, elem({3, 0})) == multiply(elem({1, 0}), elem({2, 0})));
    CHECK(evaluate(Derivation::d(par, 2), elem({0, 0}, 3)) == elem({0, 0}, 2));
}

TEST_CASE_FIXTURE(Fixture, "bracket reduces to known classical cases") {
    // [D_1, x_1 D_1] = D_1
    Derivation e = Derivation::monomial(par, mono({1, 0}), 0);
    CHECK(bracket(Derivation::d(par, 0), e) == Derivation::d(par, 0));
    // [x_1 D_1, x^(2e_1) D_1] = x^(2e_1) D_1  (2 - 1 = 1 via x_1 x_1 = 2 x^(2))
    Derivation f = Derivation::monomial(par, mono({2, 0}), 0);
    CHECK(bracket(e, f) == f);
    // odd square: [D_3, x_3 D_3] has the anticommutator sign
    Derivation g = Derivation::monomial(par, mono({0, 0}, 1), 2);  // x_3 D_3
    CHECK(bracket(Derivation::d(par, 2), g) == Derivation::d(par, 2));
}

TEST_CASE_FIXTURE(Fixture, "bracket skew-symmetry and super Jacobi on random triples") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        Derivation x = rand_basis(rng), y = rand_basis(rng), z = rand_basis(rng);
        int sxy = (x.parity() & y.parity()) ? 1 : -1;
        CHECK((bracket(x, y) + bracket(y, x).scaled(-sxy)).is_zero());
        auto term = [&](const Derivation& a, const Derivation& b, const Derivation& c) {
            int sign = (a.parity() & c.parity()) ? -1 : 1;
            return bracket(a, bracket(b, c)).scaled(sign);
        };
        CHECK((term(x, y, z) + term(y, z, x) + term(z, x, y)).is_zero());
    }
}

TEST_CASE_FIXTURE(Fixture, "t_h matches hand-computed values") {
    // T_H(x_1) = D_3, T_H(x_3) = -D_1
    CHECK(t_h(elem({1, 0})) == Derivation::d(par, 2));
    CHECK(t_h(elem({0, 0}, 1)) == Derivation::d(par, 0).scaled(-1));
    // T_H(x_1 x_2) = x_2 D_3 + x_1 D_4
    Derivation expect(par);
    expect.coeff(2) = elem({0, 1});
    expect.coeff(3) = elem({1, 0});
    CHECK(t_h(elem({1, 1})) == expect);
    // T_H(x_1 x_3) = x_3 D_3 - x_1 D_1
    Derivation expect2(par);
    expect2.coeff(2) = elem({0, 0}, 1);
    expect2.coeff(0) = elem({1, 0}, 0, -1);
    CHECK(t_h(multiply(elem({1, 0}), elem({0, 0}, 1))) == expect2);
}

TEST_CASE_FIXTURE(Fixture, "t_h identities") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> a(0, 4), u(0, 3);
    for (int trial = 0; trial < 100; ++trial) {
        SuperElement f = elem({a(rng), a(rng)}, static_cast<std::uint32_t>(u(rng)));
        SuperElement g = elem({a(rng), a(rng)}, static_cast<std::uint32_t>(u(rng)));
        CHECK(bracket(t_h(f), t_h(g)) == t_h(evaluate(t_h(f), g)));
        for (int i = 0; i < 4; ++i)
            CHECK(bracket(Derivation::d(par, i), t_h(f)) == t_h(derive(i, f)));
    }
}

TEST_CASE_FIXTURE(Fixture, "divergence values and the superderivation identity") {
    // div(x_1 D_1) = 1, div(x_3 D_3) = -1
    CHECK(divergence(Derivation::monomial(par, mono({1, 0}), 0)) == SuperElement::one(par));
    CHECK(divergence(Derivation::monomial(par, mono({0, 0}, 1), 2)) ==
          SuperElement::one(par).scaled(-1));
    std::mt19937_64 rng(1001);
    for (int trial = 0; trial < 150; ++trial) {
        Derivation d = rand_basis(rng), e = rand_basis(rng);
        int sign = (d.parity() & e.parity()) ? -1 : 1;
        CHECK(divergence(bracket(d, e)) ==
              evaluate(d, divergence(e)) - evaluate(e, divergence(d)).scaled(sign));
    }
}

TEST_CASE_FIXTURE(Fixture, "grading of derivations") {
    Derivation d = Derivation::monomial(par, mono({2, 0}), 0);  // degree 1
    CHECK(d.min_degree() == 1);
    CHECK(Derivation::d(par, 0).min_degree() == -1);
    Derivation sum = d + Derivation::d(par, 1);
    auto comps = sum.graded_components();
    CHECK(comps.size() == 2);
    CHECK(comps.at(-1) == Derivation::d(par, 1));
    CHECK(sum.component(1) == d);
}

TEST_CASE_FIXTURE(Fixture, "basis index coordinates roundtrip") {
    BasisIndex idx(par);
    CHECK(idx.o_dim_total() == 100);
    CHECK(idx.top_degree() == 10);
    int total = 0;
    for (int deg = 0; deg <= 10; ++deg) total += idx.o_dim(deg);
    CHECK(total == 100);
    CHECK(idx.w_dim(-1) == 4);
    SuperElement f = elem({1, 1}, 0, 2) + elem({2, 0}, 0, 3);
    auto v = idx.o_coords(f, 2);
    CHECK(idx.o_from_coords(2, v) == f);
    Derivation d(par);
    d.coeff(0) = elem({2, 1});
    d.coeff(3) = elem({1, 2});
    auto w = idx.w_coords(d, 2);
    CHECK(idx.w_from_coords(2, w) == d);
}
