#include "sho/superelement.hpp"

#include <numeric>

#include "sho/gf.hpp"

namespace sho {

int Mono::degree() const {
    int d = __builtin_popcount(u);
    for (int a : alpha) d += a;
    return d;
}

SuperElement SuperElement::one(ParamsPtr par) {
    Mono mn;
    mn.alpha.assign(par->m(), 0);
    return monomial(std::move(par), std::move(mn), 1);
}

SuperElement SuperElement::monomial(ParamsPtr par, Mono mn, int c) {
    SuperElement f(std::move(par));
    f.add_term(mn, c);
    return f;
}

SuperElement SuperElement::x(ParamsPtr par, int j) {
    Mono mn;
    mn.alpha.assign(par->m(), 0);
    if (j < par->m())
        mn.alpha[j] = 1;
    else
        mn.u = 1u << (j - par->m());
    return monomial(std::move(par), std::move(mn), 1);
}

int SuperElement::coeff(const Mono& mn) const {
    auto it = terms_.find(mn);
    return it == terms_.end() ? 0 : it->second;
}

void SuperElement::add_term(const Mono& mn, int c) {
    c = gf::norm(c, par_->p());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mn, c);
    if (!inserted) {
        it->second = gf::add(it->second, c, par_->p());
        if (it->second == 0) terms_.erase(it);
    }
}

SuperElement& SuperElement::operator+=(const SuperElement& g) {
    ensure_same(par_, g.par_);
    for (const auto& [mn, c] : g.terms_) add_term(mn, c);
    return *this;
}

SuperElement& SuperElement::operator-=(const SuperElement& g) {
    ensure_same(par_, g.par_);
    for (const auto& [mn, c] : g.terms_) add_term(mn, -c);
    return *this;
}

SuperElement SuperElement::scaled(int c) const {
    SuperElement r(par_);
    c = gf::norm(c, par_->p());
    if (c == 0) return r;
    for (const auto& [mn, v] : terms_) r.terms_[mn] = gf::mul(v, c, par_->p());
    return r;
}

int SuperElement::parity() const {
    if (!is_homogeneous_parity())
        throw parity_error("parity of a mixed-parity element is undefined");
    return terms_.empty() ? 0 : terms_.begin()->first.parity();
}

bool SuperElement::is_homogeneous_parity() const {
    if (terms_.empty()) return true;
    int par = terms_.begin()->first.parity();
    for (const auto& [mn, c] : terms_)
        if (mn.parity() != par) return false;
    return true;
}

std::pair<SuperElement, SuperElement> SuperElement::parity_split() const {
    SuperElement even(par_), odd(par_);
    for (const auto& [mn, c] : terms_)
        (mn.parity() == 0 ? even : odd).terms_.emplace(mn, c);
    return {even, odd};
}

std::map<int, SuperElement> SuperElement::graded_components() const {
    std::map<int, SuperElement> comps;
    for (const auto& [mn, c] : terms_) {
        auto [it, ins] = comps.try_emplace(mn.degree(), par_);
        it->second.terms_.emplace(mn, c);
    }
    return comps;
}

SuperElement SuperElement::component(int degree) const {
    SuperElement r(par_);
    for (const auto& [mn, c] : terms_)
        if (mn.degree() == degree) r.terms_.emplace(mn, c);
    return r;
}

bool SuperElement::is_homogeneous_degree() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [mn, c] : terms_)
        if (mn.degree() != d) return false;
    return true;
}

std::optional<int> SuperElement::min_degree() const {
    if (terms_.empty()) return std::nullopt;
    // map is ordered by degree first
    return terms_.begin()->first.degree();
}

std::optional<int> SuperElement::max_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
}

bool SuperElement::in_filtration(int k) const {
    auto d = min_degree();
    return !d || *d >= k;
}

std::optional<std::pair<Mono, int>> multiply_monos(const Parameters& par, const Mono& a,
                                                   const Mono& b) {
    if (a.u & b.u) return std::nullopt;  // repeated odd variable
    const int p = par.p();
    int c = 1;
    Mono r;
    r.alpha.resize(par.m());
    for (int i = 0; i < par.m(); ++i) {
        long long s = a.alpha[i] + b.alpha[i];
        if (s > par.pi(i)) return std::nullopt;  // truncated divided powers
        c = gf::mul(c, gf::binom(s, a.alpha[i], p), p);
        if (c == 0) return std::nullopt;
        r.alpha[i] = static_cast<int>(s);
    }
    // exterior sign: each variable of b passes the variables of a above it
    int swaps = 0;
    std::uint32_t bu = b.u;
    while (bu) {
        int k = __builtin_ctz(bu);
        bu &= bu - 1;
        swaps += __builtin_popcount(a.u >> (k + 1));
    }
    if (swaps & 1) c = gf::neg(c, p);
    r.u = a.u | b.u;
    return std::make_pair(std::move(r), c);
}

SuperElement multiply(const SuperElement& f, const SuperElement& g) {
    ensure_same(f.params(), g.params());
    const Parameters& par = *f.params();
    SuperElement r(f.params());
    for (const auto& [ma, ca] : f.terms())
        for (const auto& [mb, cb] : g.terms())
            if (auto prod = multiply_monos(par, ma, mb))
                r.add_term(prod->first, gf::mul(prod->second, gf::mul(ca, cb, par.p()), par.p()));
    return r;
}

SuperElement derive(int r, const SuperElement& f) {
    const Parameters& par = *f.params();
    SuperElement out(f.params());
    const int m = par.m();
    for (const auto& [mn, c] : f.terms()) {
        if (r < m) {
            if (mn.alpha[r] == 0) continue;
            Mono d = mn;
            --d.alpha[r];
            out.add_term(d, c);
        } else {
            int k = r - m;
            if (!(mn.u >> k & 1)) continue;
            Mono d = mn;
            d.u &= ~(1u << k);
            // odd derivation passes the odd variables below slot k
            int sign = __builtin_popcount(mn.u & ((1u << k) - 1));
            out.add_term(d, (sign & 1) ? -c : c);
        }
    }
    return out;
}

}  // namespace sho
