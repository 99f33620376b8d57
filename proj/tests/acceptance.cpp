// Acceptance gate: one pass/fail line per criterion, exit 0 only when all pass.
#include <iostream>
#include <random>
#include <sstream>

#include "sho/restricted.hpp"
#include "sho/serialization.hpp"
#include "sho/suites.hpp"

using namespace sho;

namespace {

int failures = 0;

void report(int criterion, bool passed, const std::string& what) {
    std::cout << "criterion " << criterion << ": " << (passed ? "PASS" : "FAIL") << " - " << what
              << "\n";
    if (!passed) ++failures;
}

bool suite_items_pass(const SuiteReport& r, std::initializer_list<const char*> names) {
    for (const char* name : names) {
        bool found = false;
        for (const auto& item : r.items)
            if (item.name == name) {
                found = true;
                if (!item.passed) return false;
            }
        if (!found) return false;
    }
    return true;
}

}  // namespace

int main() {
    auto par2 = make_parameters(5, 2, {1, 1});
    Workbench wb2(par2);
    Workbench wb3(make_parameters(5, 3, {1, 1, 1}));
    Workbench wb21(make_parameters(5, 2, {2, 1}));
    const BasisIndex& idx2 = *wb2.index();

    // 1: structural suite for the series at m = 2 and m = 3
    {
        Lemma11Report a = verify_lemma11(wb2);
        Lemma11Report b = verify_lemma11(wb3);
        bool diff2 = wb2.algebra(AlgebraTag::SHOBar).dim() - wb2.algebra(AlgebraTag::SHO).dim() == 1;
        bool diff3 = wb3.algebra(AlgebraTag::SHOBar).dim() - wb3.algebra(AlgebraTag::SHO).dim() == 1;
        report(1, a.all_passed && b.all_passed && diff2 && diff3,
               "degree ranges, degreewise agreement, bracket generation, top component (m=2, m=3)");
    }

    SuiteReport engine = suite_engine(wb2, 1, 2000);

    // 2: the T_H identities, exhaustive over homogeneous basis pairs
    report(2, suite_items_pass(engine, {"t_h-bracket-identity", "t_h-d-identity"}),
           "[T_H(a),T_H(b)] = T_H(T_H(a)(b)) and [D_i,T_H(f)] = T_H(D_i f), exhaustive at m=2");

    // 3: the divergence superderivation identity
    report(3, suite_items_pass(engine, {"divergence-identity"}),
           "div[D,E] = D(div E) - (-1)^{p(D)p(E)} E(div D) on all basis pairs of W");

    // 4: restrictedness at t = 1, failure with witness at t = (2,1),
    //    piecewise p-power formula, nilpotency of the top element
    {
        bool ok = true;
        for (AlgebraTag tag : {AlgebraTag::SHOPrime, AlgebraTag::SHOBar, AlgebraTag::SHO}) {
            if (!is_restricted(wb2, tag).restricted) ok = false;
            RestrictedReport r = is_restricted(wb21, tag);
            if (r.restricted || !r.witness) ok = false;
        }
        {
            // the explicit witness identity (ad D_1)^5 T_H(x^(6 e_1)) = T_H(x^(e_1))
            auto par21 = wb21.params();
            Mono six;
            six.alpha = {6, 0};
            Derivation z = t_h(SuperElement::monomial(par21, six));
            for (int k = 0; k < 5; ++k) z = bracket(Derivation::d(par21, 0), z);
            Mono e1;
            e1.alpha = {1, 0};
            if (z.is_zero() || !(z == t_h(SuperElement::monomial(par21, e1)))) ok = false;
        }
        const auto& shop = wb2.algebra(AlgebraTag::SHOPrime);
        int formula_checked = 0;
        for (int deg = 1; deg <= idx2.top_degree(); ++deg)
            for (const Mono& mn : idx2.monos(deg)) {
                Derivation th = t_h(SuperElement::monomial(par2, mn));
                if (th.is_zero() || th.parity() != 0 || !shop.contains(th)) continue;
                bool diagonal = false;
                for (int i = 0; i < par2->m(); ++i) {
                    bool unit_alpha = mn.alpha[i] == 1;
                    for (int k = 0; k < par2->m(); ++k)
                        if (k != i && mn.alpha[k] != 0) unit_alpha = false;
                    if (unit_alpha && mn.u == (1u << i)) diagonal = true;
                }
                Derivation power = p_power(th);
                if (!(diagonal ? power == th : power.is_zero())) ok = false;
                ++formula_checked;
            }
        if (formula_checked == 0) ok = false;
        if (!p_power(omega_element(par2)).is_zero()) ok = false;
        report(4, ok,
               "restricted at t=1, witnessed failure at t=(2,1), piecewise p-power formula, "
               "nilpotent top element");
    }

    // shared sample pool on SHO(2,2;1), mixed depths 0-3
    const GradedSubspace& sho = wb2.algebra(AlgebraTag::SHO);
    std::vector<OAutomorphism> sigmas;
    std::vector<GAutomorphism> phis;
    bool sampling_ok = true;
    for (int s = 0; s < 100; ++s) {
        try {
            sigmas.push_back(sample_automorphism(sho, 9000 + s, s % 4));
            phis.push_back(phi(sigmas.back(), sho));
        } catch (const std::exception&) {
            sampling_ok = false;
        }
    }

    // 5: roundtrip reconstruction and multiplicativity of the conjugation map
    {
        bool ok = sampling_ok && sigmas.size() == 100;
        int roundtrips = 0, pairs = 0;
        for (std::size_t s = 0; s < sigmas.size(); ++s) {
            try {
                if (!(reconstruct_sigma(phis[s]) == sigmas[s])) ok = false;
            } catch (const std::exception&) {
                ok = false;
            }
            ++roundtrips;
        }
        for (std::size_t s = 0; s + 1 < sigmas.size(); ++s) {
            if (!(phi(compose(sigmas[s], sigmas[s + 1]), sho) == compose(phis[s], phis[s + 1])))
                ok = false;
            ++pairs;
        }
        if (!(phi(compose(sigmas.front(), sigmas.back()), sho) ==
              compose(phis.front(), phis.back())))
            ok = false;
        ++pairs;
        try {
            if (!reconstruct_sigma(GAutomorphism::identity(sho)).is_identity()) ok = false;
        } catch (const std::exception&) {
            ok = false;
        }
        std::ostringstream what;
        what << roundtrips << " reconstruction roundtrips, " << pairs
             << " multiplicativity pairs, identity reconstruction";
        report(5, ok && roundtrips >= 100 && pairs >= 100, what.str());
    }

    // 6: depth and homogeneity correspondence on SHO', SHO-bar, SHO
    {
        bool ok = true;
        int checked = 0;
        for (AlgebraTag tag : {AlgebraTag::SHOPrime, AlgebraTag::SHOBar, AlgebraTag::SHO}) {
            const GradedSubspace& g = wb2.algebra(tag);
            for (int s = 0; s < 8; ++s) {
                try {
                    OAutomorphism sigma = sample_automorphism(g, 1700 + s, s % 4);
                    GAutomorphism f = phi(sigma, g);
                    if (depth_O(sigma, idx2) != depth_g(f)) ok = false;
                    if (is_homogeneous_O(sigma) != is_homogeneous_g(f)) ok = false;
                } catch (const std::exception&) {
                    ok = false;
                }
                ++checked;
            }
        }
        report(6, ok, "depth_O = depth_g and homogeneity equivalence on " +
                          std::to_string(checked) + " samples across SHO', SHO-bar, SHO");
    }

    // 7: commutator depth additivity
    {
        bool ok = true;
        int checked = 0;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                for (int s = 0; s < 14; ++s) {
                    try {
                        unsigned long long base = 80000 + (i * 2 + j) * 1000 + s;
                        OAutomorphism sigma = sample_automorphism(sho, base, i);
                        OAutomorphism tau = sample_automorphism(sho, base + 500, j);
                        OAutomorphism comm =
                            compose(invert(sigma), compose(invert(tau), compose(sigma, tau)));
                        DepthProfile d = depth_O(comm, idx2);
                        if (d && *d < i + j) ok = false;
                    } catch (const std::exception&) {
                        ok = false;
                    }
                    ++checked;
                }
        report(7, ok, "group commutators of depths (i,j) in {1,2}^2 reach depth >= i+j, " +
                          std::to_string(checked) + " pairs");
    }

    // 8: degree -1 determines everything
    {
        bool ok = true;
        const int n = par2->nvars();
        // the degree -1 projection of any O-basis of W is an F-basis of W_[-1]
        std::mt19937_64 rng(0xacc8);
        std::uniform_int_distribution<int> scalar(0, 4), coeff(1, 4);
        std::vector<Mono> pos_monos;
        for (int d = 1; d <= idx2.top_degree(); ++d)
            for (const Mono& mn : idx2.monos(d)) pos_monos.push_back(mn);
        std::uniform_int_distribution<std::size_t> pick(0, pos_monos.size() - 1);
        for (int trial = 0; trial < 5; ++trial) {
            OMatrix a = OMatrix::identity(par2, n);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) {
                    if (trial > 0) a.at(i, k) += SuperElement::one(par2).scaled(scalar(rng) - 2);
                    SuperElement extra =
                        SuperElement::monomial(par2, pos_monos[pick(rng)], coeff(rng));
                    if ((extra.parity() == 0) == (par2->mu(i) == par2->mu(k)))
                        a.at(i, k) += extra;
                }
            try {
                invert_over_O(a);  // certifies that the columns form an O-basis of W
            } catch (const config_error&) {
                continue;  // singular draw: not a basis, nothing to test
            }
            Mat proj(n, n);
            for (int r = 0; r < n; ++r) {
                Derivation basis_vec(par2);
                for (int s = 0; s < n; ++s) basis_vec.coeff(s) = a.at(s, r);
                Derivation low = basis_vec.component(-1);
                for (int s = 0; s < n; ++s) {
                    const SuperElement& c = low.coeff(s);
                    proj.at(s, r) = static_cast<std::uint8_t>(
                        c.is_zero() ? 0 : c.terms().begin()->second);
                }
            }
            if (mat_rank(proj, par2->p()) != n) ok = false;
        }
        // sampled automorphisms agreeing on g_[-1] coincide
        int off = sho.flat_offset(-1);
        auto minus_one_equal = [&](const Mat& x, const Mat& y) {
            for (int k = off; k < off + sho.dim_at(-1); ++k)
                for (int i = 0; i < x.rows; ++i)
                    if (x.at(i, k) != y.at(i, k)) return false;
            return true;
        };
        for (std::size_t s = 0; s < phis.size() && s < 30; ++s)
            for (std::size_t t = s + 1; t < phis.size() && t < 30; ++t)
                if (minus_one_equal(phis[s].matrix(), phis[t].matrix()) && !(phis[s] == phis[t]))
                    ok = false;
        for (AlgebraTag tag : {AlgebraTag::SHOPrime, AlgebraTag::SHOBar, AlgebraTag::SHO})
            if (!transitivity_check(wb2, wb2.algebra(tag))) ok = false;
        report(8, ok,
               "degree -1 projections span W_[-1], g_[-1] action determines automorphisms, "
               "transitivity");
    }

    // 9: engine health and byte-identical determinism
    {
        bool ok = suite_items_pass(engine, {"skew-and-jacobi"});
        nlohmann::json j1 = export_structure_constants(sho, "SHO");
        Workbench fresh(make_parameters(5, 2, {1, 1}));
        nlohmann::json j2 = export_structure_constants(fresh.algebra(AlgebraTag::SHO), "SHO");
        if (j1.dump() != j2.dump()) ok = false;
        try {
            StructureConstantAlgebra alg = import_structure_constants(j1);
            if (alg.dim != sho.dim()) ok = false;
        } catch (const std::exception&) {
            ok = false;
        }
        nlohmann::json a1 = automorphism_to_json(sigmas[0]);
        if (a1.dump() != automorphism_to_json(sample_automorphism(sho, 9000, 0)).dump()) ok = false;
        if (a1.dump() != automorphism_to_json(automorphism_from_json(a1)).dump()) ok = false;
        report(9, ok,
               "exhaustive skew/Jacobi plus sampled triples, export/import and sampler reruns "
               "byte-identical");
    }

    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
