#include "sho/witt.hpp"

#include <algorithm>

#include "sho/gf.hpp"

namespace sho {

Derivation::Derivation(ParamsPtr par) : par_(std::move(par)) {
    coeffs_.assign(par_->nvars(), SuperElement(par_));
}

Derivation Derivation::d(ParamsPtr par, int r) {
    Derivation out(par);
    out.coeffs_[r] = SuperElement::one(par);
    return out;
}

Derivation Derivation::monomial(ParamsPtr par, Mono mn, int r, int c) {
    Derivation out(par);
    out.coeffs_[r] = SuperElement::monomial(par, std::move(mn), c);
    return out;
}

bool Derivation::is_zero() const {
    return std::ranges::all_of(coeffs_, [](const SuperElement& f) { return f.is_zero(); });
}

Derivation& Derivation::operator+=(const Derivation& e) {
    ensure_same(par_, e.par_);
    for (int r = 0; r < par_->nvars(); ++r) coeffs_[r] += e.coeffs_[r];
    return *this;
}

Derivation& Derivation::operator-=(const Derivation& e) {
    ensure_same(par_, e.par_);
    for (int r = 0; r < par_->nvars(); ++r) coeffs_[r] -= e.coeffs_[r];
    return *this;
}

Derivation Derivation::scaled(int c) const {
    Derivation out(par_);
    for (int r = 0; r < par_->nvars(); ++r) out.coeffs_[r] = coeffs_[r].scaled(c);
    return out;
}

int Derivation::parity() const {
    if (!is_homogeneous_parity())
        throw parity_error("parity of a mixed-parity derivation is undefined");
    for (int r = 0; r < par_->nvars(); ++r)
        if (!coeffs_[r].is_zero()) return (coeffs_[r].parity() + par_->mu(r)) & 1;
    return 0;
}

bool Derivation::is_homogeneous_parity() const {
    int want = -1;
    for (int r = 0; r < par_->nvars(); ++r) {
        for (const auto& [mn, c] : coeffs_[r].terms()) {
            int par = (mn.parity() + par_->mu(r)) & 1;
            if (want < 0)
                want = par;
            else if (par != want)
                return false;
        }
    }
    return true;
}

std::pair<Derivation, Derivation> Derivation::parity_split() const {
    Derivation even(par_), odd(par_);
    for (int r = 0; r < par_->nvars(); ++r) {
        auto [e, o] = coeffs_[r].parity_split();
        if (par_->mu(r) == 0) {
            even.coeffs_[r] = std::move(e);
            odd.coeffs_[r] = std::move(o);
        } else {
            even.coeffs_[r] = std::move(o);
            odd.coeffs_[r] = std::move(e);
        }
    }
    return {even, odd};
}

std::map<int, Derivation> Derivation::graded_components() const {
    std::map<int, Derivation> comps;
    for (int r = 0; r < par_->nvars(); ++r) {
        for (auto& [deg, f] : coeffs_[r].graded_components()) {
            auto [it, ins] = comps.try_emplace(deg - 1, par_);
            it->second.coeffs_[r] += f;
        }
    }
    return comps;
}

Derivation Derivation::component(int degree) const {
    Derivation out(par_);
    for (int r = 0; r < par_->nvars(); ++r) out.coeffs_[r] = coeffs_[r].component(degree + 1);
    return out;
}

std::optional<int> Derivation::min_degree() const {
    std::optional<int> best;
    for (int r = 0; r < par_->nvars(); ++r)
        if (auto d = coeffs_[r].min_degree())
            if (!best || *d - 1 < *best) best = *d - 1;
    return best;
}

bool Derivation::is_homogeneous_degree() const {
    std::optional<int> deg;
    for (int r = 0; r < par_->nvars(); ++r) {
        for (const auto& [mn, c] : coeffs_[r].terms()) {
            if (!deg)
                deg = mn.degree();
            else if (mn.degree() != *deg)
                return false;
        }
    }
    return true;
}

Derivation Derivation::left_mul(const SuperElement& f) const {
    Derivation out(par_);
    for (int r = 0; r < par_->nvars(); ++r) out.coeffs_[r] = multiply(f, coeffs_[r]);
    return out;
}

SuperElement evaluate(const Derivation& d, const SuperElement& f) {
    ensure_same(d.params(), f.params());
    SuperElement out(d.params());
    for (int r = 0; r < d.params()->nvars(); ++r)
        if (!d.coeff(r).is_zero()) out += multiply(d.coeff(r), derive(r, f));
    return out;
}

namespace {

// [D,E] for parity-homogeneous operands: sum_s D(g_s) D_s - (-1)^{p(D)p(E)} sum_r E(f_r) D_r
Derivation bracket_homogeneous(const Derivation& d, const Derivation& e) {
    const auto& par = d.params();
    Derivation out(par);
    int sign = (d.parity() * e.parity()) & 1;
    for (int s = 0; s < par->nvars(); ++s) {
        SuperElement c = evaluate(d, e.coeff(s));
        SuperElement c2 = evaluate(e, d.coeff(s));
        out.coeff(s) += c;
        out.coeff(s) -= sign ? -c2 : c2;
    }
    return out;
}

}  // namespace

Derivation bracket(const Derivation& d, const Derivation& e) {
    ensure_same(d.params(), e.params());
    auto [d0, d1] = d.parity_split();
    auto [e0, e1] = e.parity_split();
    Derivation out(d.params());
    for (const Derivation* a : {&d0, &d1})
        for (const Derivation* b : {&e0, &e1})
            if (!a->is_zero() && !b->is_zero()) out += bracket_homogeneous(*a, *b);
    return out;
}

SuperElement divergence(const Derivation& d) {
    const auto& par = d.params();
    SuperElement out(par);
    for (int r = 0; r < par->nvars(); ++r) {
        auto [e, o] = d.coeff(r).parity_split();
        // sign (-1)^{mu(r) p(f_r)} per parity component
        out += derive(r, e);
        SuperElement od = derive(r, o);
        out += par->mu(r) ? -od : od;
    }
    return out;
}

Derivation t_h(const SuperElement& a) {
    const auto& par = a.params();
    auto [even, odd] = a.parity_split();
    Derivation out(par);
    for (int i = 0; i < par->nvars(); ++i) {
        int ip = par->partner(i);
        // (-1)^{mu(i) p(a)}: only odd i against odd a flips
        out.coeff(ip) += derive(i, even);
        SuperElement od = derive(i, odd);
        out.coeff(ip) += par->mu(i) ? -od : od;
    }
    return out;
}

BasisIndex::BasisIndex(ParamsPtr par) : par_(std::move(par)) {
    by_degree_.resize(static_cast<std::size_t>(par_->xi()) + 1);
    const int m = par_->m();
    // enumerate all (alpha, u)
    std::vector<int> alpha(m, 0);
    for (;;) {
        for (std::uint32_t u = 0; u < (1u << m); ++u) {
            Mono mn{alpha, u};
            by_degree_[mn.degree()].push_back(std::move(mn));
        }
        int i = 0;
        while (i < m && alpha[i] == par_->pi(i)) alpha[i++] = 0;
        if (i == m) break;
        ++alpha[i];
    }
    for (auto& bucket : by_degree_) {
        std::sort(bucket.begin(), bucket.end());
        for (int k = 0; k < static_cast<int>(bucket.size()); ++k) index_[bucket[k]] = k;
        total_ += static_cast<int>(bucket.size());
    }
}

int BasisIndex::o_dim(int degree) const {
    if (degree < 0 || degree > top_degree()) return 0;
    return static_cast<int>(by_degree_[degree].size());
}

const std::vector<Mono>& BasisIndex::monos(int degree) const { return by_degree_[degree]; }

int BasisIndex::mono_index(const Mono& mn) const { return index_.at(mn); }

std::vector<std::uint8_t> BasisIndex::o_coords(const SuperElement& f, int degree) const {
    std::vector<std::uint8_t> v(o_dim(degree), 0);
    for (const auto& [mn, c] : f.terms()) {
        if (mn.degree() != degree)
            throw config_error("o_coords: element not homogeneous of the requested degree");
        v[mono_index(mn)] = static_cast<std::uint8_t>(c);
    }
    return v;
}

SuperElement BasisIndex::o_from_coords(int degree, const std::vector<std::uint8_t>& v) const {
    SuperElement f(par_);
    const auto& bucket = by_degree_[degree];
    for (int k = 0; k < static_cast<int>(bucket.size()); ++k)
        if (v[k]) f.add_term(bucket[k], v[k]);
    return f;
}

std::vector<std::uint8_t> BasisIndex::w_coords(const Derivation& d, int degree) const {
    const int n = par_->nvars();
    std::vector<std::uint8_t> v(w_dim(degree), 0);
    for (int r = 0; r < n; ++r) {
        for (const auto& [mn, c] : d.coeff(r).terms()) {
            if (mn.degree() != degree + 1)
                throw config_error("w_coords: derivation not homogeneous of the requested degree");
            v[mono_index(mn) * n + r] = static_cast<std::uint8_t>(c);
        }
    }
    return v;
}

Derivation BasisIndex::w_from_coords(int degree, const std::vector<std::uint8_t>& v) const {
    const int n = par_->nvars();
    Derivation d(par_);
    const auto& bucket = by_degree_[degree + 1];
    for (int k = 0; k < static_cast<int>(bucket.size()); ++k)
        for (int r = 0; r < n; ++r)
            if (v[k * n + r]) d.coeff(r).add_term(bucket[k], v[k * n + r]);
    return d;
}

}  // namespace sho
