#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sho/gf.hpp"
#include "sho/superelement.hpp"

using namespace sho;

namespace {

// independent binomial oracle: Pascal's triangle mod p
int binom_oracle(int n, int k, int p) {
    if (k < 0 || k > n) return 0;
    std::vector<std::vector<int>> c(n + 1);
    for (int i = 0; i <= n; ++i) {
        c[i].assign(i + 1, 1);
        for (int j = 1; j < i; ++j) c[i][j] = (c[i - 1][j - 1] + c[i - 1][j]) % p;
    }
    return c[n][k];
}

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

    SuperElement random_element(std::mt19937_64& rng, int terms) const {
        SuperElement f(par);
        std::uniform_int_distribution<int> a(0, 4), u(0, 3), c(1, 4);
        for (int s = 0; s < terms; ++s)
            f += elem({a(rng), a(rng)}, static_cast<std::uint32_t>(u(rng)), c(rng));
        return f;
    }
};

}  // namespace

TEST_CASE("gf arithmetic") {
    CHECK(gf::norm(-3, 5) == 2);
    CHECK(gf::inv(2, 5) == 3);
    CHECK(gf::inv(4, 7) == 2);
    CHECK(gf::pow(3, 4, 5) == 1);
    CHECK_THROWS(gf::inv(0, 5));
}

TEST_CASE("Lucas binomials match the Pascal oracle") {
    for (int p : {5, 7})
        for (int n = 0; n <= 30; ++n)
            for (int k = 0; k <= n; ++k) CHECK(gf::binom(n, k, p) == binom_oracle(n, k, p));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(make_parameters(4, 2, {1, 1}), config_error);
    CHECK_THROWS_AS(make_parameters(3, 2, {1, 1}), config_error);
    CHECK_THROWS_AS(make_parameters(5, 1, {1}), config_error);
    CHECK_THROWS_AS(make_parameters(5, 2, {1}), config_error);
    CHECK_THROWS_AS(make_parameters(5, 2, {1, 0}), config_error);
    auto par = make_parameters(5, 2, {2, 1});
    CHECK(par->pi(0) == 24);
    CHECK(par->pi(1) == 4);
    CHECK(par->xi() == 30);
    CHECK_FALSE(par->unit_t());
    CHECK(make_parameters(5, 3, {1, 1, 1})->xi() == 15);
}

TEST_CASE_FIXTURE(Fixture, "monomial degree and parity") {
    CHECK(mono({4, 4}, 3).degree() == 10);
    CHECK(mono({0, 0}, 1).parity() == 1);
    CHECK(mono({3, 0}, 3).parity() == 0);
}

TEST_CASE_FIXTURE(Fixture, "divided power products") {
    // x^(1) x^(1) = C(2,1) x^(2)
    CHECK(multiply(elem({1, 0}), elem({1, 0})) == elem({2, 0}, 0, 2));
    // x^(2) x^(2) = C(4,2) x^(4) = 6 = 1 mod 5
    CHECK(multiply(elem({2, 0}), elem({2, 0})) == elem({4, 0}, 0, 1));
    // truncation: x^(4) x^(1) = 0 since C(5,1) = 0 mod 5 (and 5 > pi)
    CHECK(multiply(elem({4, 0}), elem({1, 0})).is_zero());
    SUBCASE("larger height keeps the term") {
        auto big = make_parameters(5, 2, {2, 1});
        auto x4 = SuperElement::monomial(big, Mono{{4, 0}, 0});
        auto x1 = SuperElement::monomial(big, Mono{{1, 0}, 0});
        // C(5,1) = 0 mod 5 even though alpha = 5 <= pi = 24
        CHECK(multiply(x4, x1).is_zero());
        auto x5 = SuperElement::monomial(big, Mono{{5, 0}, 0});
        CHECK(multiply(x5, x1) == SuperElement::monomial(big, Mono{{6, 0}, 0}, gf::binom(6, 1, 5)));
    }
}

TEST_CASE_FIXTURE(Fixture, "exterior products") {
    auto x3 = SuperElement::x(par, 2);
    auto x4 = SuperElement::x(par, 3);
    CHECK(multiply(x3, x3).is_zero());
    CHECK(multiply(x3, x4) == elem({0, 0}, 3));
    CHECK(multiply(x4, x3) == elem({0, 0}, 3, -1));
}

TEST_CASE_FIXTURE(Fixture, "supercommutativity and associativity on random elements") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 50; ++trial) {
        SuperElement f = random_element(rng, 3);
        SuperElement g = random_element(rng, 3);
        SuperElement h = random_element(rng, 2);
        CHECK(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
        auto [f0, f1] = f.parity_split();
        auto [g0, g1] = g.parity_split();
        // fg = (-1)^{p(f)p(g)} gf on parity components
        CHECK(multiply(f0, g0) == multiply(g0, f0));
        CHECK(multiply(f0, g1) == multiply(g1, f0));
        CHECK(multiply(f1, g1) == -multiply(g1, f1));
    }
}

TEST_CASE_FIXTURE(Fixture, "derive is a superderivation") {
    // D(x^(k)) = x^(k-1)
    CHECK(derive(0, elem({3, 2})) == elem({2, 2}));
    CHECK(derive(0, elem({0, 2})).is_zero());
    // odd derivative signs: D_4(x_3 x_4) = -x_3
    CHECK(derive(3, elem({0, 0}, 3)) == elem({0, 0}, 1, -1));
    CHECK(derive(2, elem({0, 0}, 3)) == elem({0, 0}, 2));
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        SuperElement f = random_element(rng, 2);
        SuperElement g = random_element(rng, 2);
        auto [f0, f1] = f.parity_split();
        for (int r = 0; r < 4; ++r) {
            // Leibniz: D_r(fg) = D_r(f) g + (-1)^{mu(r) p(f)} f D_r(g)
            for (const SuperElement* part : {&f0, &f1}) {
                int sign = (par->mu(r) && part == &f1) ? -1 : 1;
                SuperElement rhs =
                    multiply(derive(r, *part), g) + multiply(*part, derive(r, g)).scaled(sign);
                CHECK(derive(r, multiply(*part, g)) == rhs);
            }
        }
    }
}

TEST_CASE_FIXTURE(Fixture, "grading and filtration") {
    SuperElement f = elem({1, 0}) + elem({2, 1}, 1) + elem({0, 0}, 0, 2);
    CHECK(f.min_degree() == 0);
    CHECK(f.max_degree() == 4);
    CHECK_FALSE(f.in_filtration(1));
    CHECK(f.component(1) == elem({1, 0}));
    auto comps = f.graded_components();
    CHECK(comps.size() == 3);
    SuperElement back(par);
    for (auto& [d, c] : comps) back += c;
    CHECK(back == f);
    CHECK_THROWS_AS(f.parity(), parity_error);
}
