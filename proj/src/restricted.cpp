#include "sho/restricted.hpp"

#include "sho/gf.hpp"
#include "sho/linalg.hpp"

namespace sho {

SuperElement apply_times(const Derivation& d, SuperElement f, int k) {
    for (int i = 0; i < k; ++i) f = evaluate(d, f);
    return f;
}

Derivation p_power(const Derivation& d) {
    const auto& par = d.params();
    if (!par->unit_t())
        throw config_error("p_power via generators requires t = 1 (O is not generated by the x_r otherwise)");
    if (d.parity() != 0) throw parity_error("p_power is defined on even derivations only");
    Derivation out(par);
    for (int r = 0; r < par->nvars(); ++r)
        out.coeff(r) = apply_times(d, SuperElement::x(par, r), par->p());
    return out;
}

PPowerResult p_power_result(Workbench& wb, const Derivation& d,
                            const std::vector<AlgebraTag>& tags) {
    PPowerResult res{d, p_power(d), {}};
    for (AlgebraTag tag : tags) res.membership[tag] = wb.algebra(tag).contains(res.power);
    return res;
}

namespace {

// columns of ad B in the frozen flat basis of g
Mat ad_matrix(const GradedSubspace& g, const Derivation& b) {
    const int n = static_cast<int>(g.flat_basis().size());
    Mat m(n, n);
    for (int k = 0; k < n; ++k) {
        auto coords = g.coords(bracket(b, g.flat_basis()[k]));
        if (!coords) throw config_error("ad_matrix: bracket escapes the subspace");
        for (int i = 0; i < n; ++i) m.at(i, k) = (*coords)[i];
    }
    return m;
}

// does some F in g satisfy ad F = op?
bool has_ad_preimage(const GradedSubspace& g, const Mat& op, int p) {
    const int n = op.rows;
    Mat sys(n * n, static_cast<int>(g.flat_basis().size()) + 1);
    for (int l = 0; l < static_cast<int>(g.flat_basis().size()); ++l) {
        Mat adl = ad_matrix(g, g.flat_basis()[l]);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) sys.at(i * n + k, l) = adl.at(i, k);
    }
    int last = static_cast<int>(g.flat_basis().size());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) sys.at(i * n + k, last) = static_cast<std::uint8_t>(gf::neg(op.at(i, k), p));
    for (const auto& v : mat_nullspace(sys, p))
        if (v[last]) return true;
    return false;
}

}  // namespace

RestrictedReport is_restricted(Workbench& wb, AlgebraTag tag) {
    const auto& par = wb.params();
    const GradedSubspace& g = wb.algebra(tag);
    RestrictedReport report;
    report.tag = tag;

    if (par->unit_t()) {
        for (const Derivation& b : g.flat_basis()) {
            if (b.parity() != 0) continue;
            Derivation power = p_power(b);
            if (!g.contains(power)) {
                report.restricted = false;
                report.witness = b;
                report.note = "p-power of an even basis element escapes the algebra";
                return report;
            }
        }
        report.restricted = true;
        report.note = "p-power of every even basis element stays in the algebra";
        return report;
    }

    // t != 1: (ad D_i)^p has Z-degree -p < -1, so a nonzero value rules out
    // any inner realization; T_H(x^((p+1) eps_i)) is the classical witness
    for (int i = 0; i < par->m(); ++i) {
        if (par->t()[i] == 1) continue;
        Mono mn;
        mn.alpha.assign(par->m(), 0);
        mn.alpha[i] = par->p() + 1;
        Derivation y = t_h(SuperElement::monomial(par, mn));
        if (!g.contains(y)) continue;
        Derivation z = y;
        for (int k = 0; k < par->p(); ++k) z = bracket(Derivation::d(par, i), z);
        if (!z.is_zero()) {
            report.restricted = false;
            report.witness = y;
            report.note = "(ad D_" + std::to_string(i + 1) + ")^p is nonzero on T_H(x^((p+1)e_" +
                          std::to_string(i + 1) + ")), but an inner derivation of degree -p cannot exist";
            return report;
        }
    }

    // no quick obstruction: decide by solving ad F = (ad B)^p for each even B
    for (const Derivation& b : g.flat_basis()) {
        if (b.parity() != 0) continue;
        Mat ad_b = ad_matrix(g, b);
        Mat power = ad_b;
        for (int k = 1; k < par->p(); ++k) power = mat_mul(power, ad_b, par->p());
        if (!has_ad_preimage(g, power, par->p())) {
            report.restricted = false;
            report.witness = b;
            report.note = "(ad B)^p is not an inner derivation";
            return report;
        }
    }
    report.restricted = true;
    report.note = "every even ad-p-power is inner";
    return report;
}

}  // namespace sho
