#include "sho/suites.hpp"

#include <random>

#include "sho/gf.hpp"

namespace sho {

bool SuiteReport::all_passed() const {
    for (const CheckItem& item : items)
        if (!item.passed) return false;
    return true;
}

CheckItem& SuiteReport::add(const std::string& name, bool passed, std::string detail) {
    items.push_back(CheckItem{name, passed, std::move(detail)});
    return items.back();
}

SuiteReport suite_lemma11(Workbench& wb) {
    SuiteReport report{"lemma11", {}};
    for (const Lemma11Item& item : verify_lemma11(wb).items)
        report.add(item.item, item.passed, item.detail);
    return report;
}

SuiteReport suite_restricted(Workbench& wb) {
    SuiteReport report{"restricted", {}};
    const bool expect = wb.params()->unit_t();
    std::vector<AlgebraTag> tags{AlgebraTag::SHOPrime, AlgebraTag::SHOBar, AlgebraTag::SHO};
    if (expect) tags.insert(tags.begin(), AlgebraTag::W);
    for (AlgebraTag tag : tags) {
        RestrictedReport r = is_restricted(wb, tag);
        report.add(to_string(tag), r.restricted == expect,
                   (r.restricted ? "restricted: " : "not restricted: ") + r.note);
    }
    return report;
}

namespace {

std::vector<Mono> all_monos(const BasisIndex& idx, int min_degree) {
    std::vector<Mono> out;
    for (int d = min_degree; d <= idx.top_degree(); ++d)
        for (const Mono& mn : idx.monos(d)) out.push_back(mn);
    return out;
}

}  // namespace

SuiteReport suite_engine(Workbench& wb, unsigned long long seed, int samples) {
    SuiteReport report{"engine", {}};
    const auto& par = wb.params();
    const BasisIndex& idx = *wb.index();
    std::mt19937_64 rng(seed ^ 0x454e47ull);

    std::vector<Mono> monos = all_monos(idx, 0);
    std::vector<Mono> monos_pos = all_monos(idx, 1);
    const bool exhaustive = static_cast<int>(monos.size()) <= 150;
    std::uniform_int_distribution<std::size_t> pick_pos(0, monos_pos.size() - 1);
    auto pair_list = [&](const std::vector<Mono>& pool, int count) {
        std::vector<std::pair<Mono, Mono>> pairs;
        if (exhaustive) {
            for (const Mono& a : pool)
                for (const Mono& b : pool) pairs.emplace_back(a, b);
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            for (int s = 0; s < count; ++s) pairs.emplace_back(pool[pick(rng)], pool[pick(rng)]);
        }
        return pairs;
    };

    // [T_H(a), T_H(b)] = T_H(T_H(a)(b)) on (positive-degree) monomial pairs
    {
        int checked = 0, failed = 0;
        for (const auto& [a, b] : pair_list(monos_pos, samples)) {
            Derivation ta = t_h(SuperElement::monomial(par, a));
            SuperElement image = evaluate(ta, SuperElement::monomial(par, b));
            Derivation lhs = bracket(ta, t_h(SuperElement::monomial(par, b)));
            if (!(lhs == t_h(image))) ++failed;
            ++checked;
        }
        report.add("t_h-bracket-identity", failed == 0,
                   std::to_string(checked) + " pairs, " + std::to_string(failed) + " failures");
    }

    // [D_i, T_H(f)] = T_H(D_i(f))
    {
        int checked = 0, failed = 0;
        for (const Mono& mn : monos_pos)
            for (int i = 0; i < par->nvars(); ++i) {
                Derivation lhs =
                    bracket(Derivation::d(par, i), t_h(SuperElement::monomial(par, mn)));
                if (!(lhs == t_h(derive(i, SuperElement::monomial(par, mn))))) ++failed;
                ++checked;
            }
        report.add("t_h-d-identity", failed == 0,
                   std::to_string(checked) + " pairs, " + std::to_string(failed) + " failures");
    }

    // div[D,E] = D(div E) - (-1)^{p(D)p(E)} E(div D) on W basis pairs
    {
        int checked = 0, failed = 0;
        auto w_basis = [&](const Mono& mn, int r) { return Derivation::monomial(par, mn, r); };
        auto pairs = pair_list(monos, samples);
        std::uniform_int_distribution<int> pick_r(0, par->nvars() - 1);
        for (const auto& [a, b] : pairs) {
            int r = exhaustive ? 0 : pick_r(rng);
            int s = exhaustive ? 0 : pick_r(rng);
            int rmax = exhaustive ? par->nvars() : r + 1;
            int smax = exhaustive ? par->nvars() : s + 1;
            for (int rr = r; rr < rmax; ++rr)
                for (int ss = s; ss < smax; ++ss) {
                    Derivation d = w_basis(a, rr), e = w_basis(b, ss);
                    int sign = (d.parity() & e.parity()) ? -1 : 1;
                    SuperElement rhs =
                        evaluate(d, divergence(e)) - evaluate(e, divergence(d)).scaled(sign);
                    if (!(divergence(bracket(d, e)) == rhs)) ++failed;
                    ++checked;
                }
        }
        report.add("divergence-identity", failed == 0,
                   std::to_string(checked) + " pairs, " + std::to_string(failed) + " failures");
    }

    // super skew-symmetry and Jacobi on W basis elements
    {
        int checked = 0, failed = 0;
        std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
        std::uniform_int_distribution<int> pick_r(0, par->nvars() - 1);
        auto random_basis = [&]() { return Derivation::monomial(par, monos[pick(rng)], pick_r(rng)); };
        for (const auto& [a, b] : pair_list(monos, samples)) {
            Derivation d = Derivation::monomial(par, a, exhaustive ? 0 : pick_r(rng));
            Derivation e = Derivation::monomial(par, b, exhaustive ? 1 : pick_r(rng));
            int sign = (d.parity() & e.parity()) ? -1 : 1;
            if (!(bracket(d, e) + bracket(e, d).scaled(sign)).is_zero()) ++failed;
            ++checked;
        }
        int triples = std::max(samples, 1000);
        for (int s = 0; s < triples; ++s) {
            Derivation x = random_basis(), y = random_basis(), z = random_basis();
            auto term = [&](const Derivation& a, const Derivation& b, const Derivation& c) {
                int sign = (a.parity() & c.parity()) ? -1 : 1;
                return bracket(a, bracket(b, c)).scaled(sign);
            };
            if (!(term(x, y, z) + term(y, z, x) + term(z, x, y)).is_zero()) ++failed;
            checked += 1;
        }
        report.add("skew-and-jacobi", failed == 0,
                   std::to_string(checked) + " checks, " + std::to_string(failed) + " failures");
    }
    return report;
}

SuiteReport suite_phi_iso(Workbench& wb, unsigned long long seed, int samples) {
    SuiteReport report{"phi-iso", {}};
    const auto& par = wb.params();
    if (!par->unit_t()) {
        report.add("t-unit", false, "automorphism suites require t = 1");
        return report;
    }
    BasisIndex idx(par);
    for (AlgebraTag tag : {AlgebraTag::SHOPrime, AlgebraTag::SHOBar, AlgebraTag::SHO}) {
        const GradedSubspace& g = wb.algebra(tag);
        std::string prefix = to_string(tag) + ":";

        std::vector<OAutomorphism> sigmas;
        std::vector<GAutomorphism> phis;
        int sample_failures = 0;
        for (int s = 0; s < samples; ++s) {
            try {
                sigmas.push_back(sample_automorphism(g, seed * 1000 + s, s % 4));
                phis.push_back(phi(sigmas.back(), g));
            } catch (const sampling_error&) {
                ++sample_failures;
            }
        }
        report.add(prefix + "sampling", sample_failures == 0,
                   std::to_string(sigmas.size()) + " samples at depths 0-3, " +
                       std::to_string(sample_failures) + " exhaustions");

        int rt_fail = 0, depth_fail = 0, hom_fail = 0;
        for (std::size_t s = 0; s < sigmas.size(); ++s) {
            try {
                if (!(reconstruct_sigma(phis[s]) == sigmas[s])) ++rt_fail;
            } catch (const reconstruction_error&) {
                ++rt_fail;
            }
            if (depth_O(sigmas[s], idx) != depth_g(phis[s])) ++depth_fail;
            if (is_homogeneous_O(sigmas[s]) != is_homogeneous_g(phis[s])) ++hom_fail;
        }
        report.add(prefix + "roundtrip", rt_fail == 0,
                   std::to_string(sigmas.size()) + " reconstructions, " + std::to_string(rt_fail) +
                       " mismatches");
        report.add(prefix + "depth-correspondence", depth_fail == 0,
                   std::to_string(depth_fail) + " mismatches");
        report.add(prefix + "homogeneity-correspondence", hom_fail == 0,
                   std::to_string(hom_fail) + " mismatches");

        int mult_fail = 0, mult_checked = 0;
        for (std::size_t s = 0; s + 1 < sigmas.size(); ++s) {
            GAutomorphism lhs = phi(compose(sigmas[s], sigmas[s + 1]), g);
            if (!(lhs == compose(phis[s], phis[s + 1]))) ++mult_fail;
            ++mult_checked;
        }
        report.add(prefix + "multiplicativity", mult_fail == 0,
                   std::to_string(mult_checked) + " pairs, " + std::to_string(mult_fail) +
                       " failures");

        bool id_ok = false;
        try {
            id_ok = reconstruct_sigma(GAutomorphism::identity(g)).is_identity();
        } catch (const reconstruction_error&) {
        }
        report.add(prefix + "identity-reconstruction", id_ok);

        // two automorphisms of g agreeing on g_[-1] coincide
        int uniq_fail = 0;
        int off = g.dim_at(-1) > 0 ? g.flat_offset(-1) : 0;
        auto minus_one_block_equal = [&](const Mat& a, const Mat& b) {
            for (int k = off; k < off + g.dim_at(-1); ++k)
                for (int i = 0; i < a.rows; ++i)
                    if (a.at(i, k) != b.at(i, k)) return false;
            return true;
        };
        for (std::size_t s = 0; s < phis.size(); ++s)
            for (std::size_t t2 = s + 1; t2 < phis.size(); ++t2)
                if (minus_one_block_equal(phis[s].matrix(), phis[t2].matrix()) &&
                    !(phis[s] == phis[t2]))
                    ++uniq_fail;
        for (std::size_t s = 0; s < phis.size(); ++s) {
            try {
                GAutomorphism again = phi(reconstruct_sigma(phis[s]), g);
                if (minus_one_block_equal(again.matrix(), phis[s].matrix()) &&
                    !(again == phis[s]))
                    ++uniq_fail;
            } catch (const reconstruction_error&) {
                ++uniq_fail;
            }
        }
        report.add(prefix + "degree-minus-one-determines", uniq_fail == 0);

        report.add(prefix + "transitivity", transitivity_check(wb, g));
    }
    return report;
}

SuiteReport suite_normal_series(Workbench& wb, unsigned long long seed, int samples) {
    SuiteReport report{"normal-series", {}};
    const auto& par = wb.params();
    if (!par->unit_t()) {
        report.add("t-unit", false, "automorphism suites require t = 1");
        return report;
    }
    BasisIndex idx(par);
    const GradedSubspace& g = wb.algebra(AlgebraTag::SHO);
    int per_combo = std::max(1, (samples + 3) / 4);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            int checked = 0, failed = 0;
            for (int s = 0; s < per_combo; ++s) {
                unsigned long long base = seed * 4000 + (i * 2 + j) * 500 + s;
                OAutomorphism sigma = sample_automorphism(g, base, i);
                OAutomorphism tau = sample_automorphism(g, base + 250, j);
                OAutomorphism comm =
                    compose(invert(sigma), compose(invert(tau), compose(sigma, tau)));
                DepthProfile d = depth_O(comm, idx);
                if (d && *d < i + j) ++failed;
                ++checked;
            }
            report.add("commutator-depth-" + std::to_string(i) + "+" + std::to_string(j),
                       failed == 0,
                       std::to_string(checked) + " pairs, " + std::to_string(failed) +
                           " below depth " + std::to_string(i + j));
        }
    return report;
}

std::vector<SuiteReport> run_suites(Workbench& wb, const std::string& name,
                                    unsigned long long seed, int samples) {
    std::vector<SuiteReport> out;
    if (name == "lemma11" || name == "all") out.push_back(suite_lemma11(wb));
    if (name == "restricted" || name == "all") out.push_back(suite_restricted(wb));
    if (name == "engine" || name == "all") out.push_back(suite_engine(wb, seed, samples));
    if (name == "phi-iso" || (name == "all" && wb.params()->unit_t()))
        out.push_back(suite_phi_iso(wb, seed, samples));
    if (name == "normal-series" || (name == "all" && wb.params()->unit_t()))
        out.push_back(suite_normal_series(wb, seed, samples));
    if (out.empty()) throw config_error("unknown suite: " + name);
    return out;
}

}  // namespace sho
