#ifndef SHO_SUPERELEMENT_HPP
#define SHO_SUPERELEMENT_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sho/params.hpp"

namespace sho {

/// Basis monomial x^(alpha) x^u of O(m,m;t). The odd factor u is a bitmask
/// over slots 0..m-1, slot k standing for the variable with index m+k; the
/// canonical form is the product in increasing index order.
struct Mono {
    std::vector<int> alpha;  // size m, 0 <= alpha_i <= pi_i
    std::uint32_t u = 0;

    int degree() const;
    int parity() const { return __builtin_popcount(u) & 1; }

    friend auto operator<=>(const Mono& a, const Mono& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        if (auto c = a.alpha <=> b.alpha; c != 0) return c;
        return a.u <=> b.u;
    }
    friend bool operator==(const Mono&, const Mono&) = default;
};

/// Finite GF(p)-linear combination of monomials. Zero coefficients are never
/// stored; term order is the canonical monomial order, so iteration (and
/// hence serialization) is deterministic.
class SuperElement {
public:
    explicit SuperElement(ParamsPtr par) : par_(std::move(par)) {}

    static SuperElement zero(ParamsPtr par) { return SuperElement(std::move(par)); }
    static SuperElement one(ParamsPtr par);
    static SuperElement monomial(ParamsPtr par, Mono mn, int c = 1);
    static SuperElement x(ParamsPtr par, int j);  // generator x_j, 0-based

    const ParamsPtr& params() const { return par_; }
    const std::map<Mono, int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int coeff(const Mono& mn) const;

    void add_term(const Mono& mn, int c);

    SuperElement& operator+=(const SuperElement& g);
    SuperElement& operator-=(const SuperElement& g);
    friend SuperElement operator+(SuperElement f, const SuperElement& g) { return f += g; }
    friend SuperElement operator-(SuperElement f, const SuperElement& g) { return f -= g; }
    friend SuperElement operator*(int c, const SuperElement& f) { return f.scaled(c); }
    SuperElement scaled(int c) const;
    SuperElement operator-() const { return scaled(-1); }

    friend bool operator==(const SuperElement& f, const SuperElement& g) {
        return f.terms_ == g.terms_;
    }

    /// Z_2-parity; throws parity_error on a mixed-parity element.
    int parity() const;
    bool is_homogeneous_parity() const;
    std::pair<SuperElement, SuperElement> parity_split() const;  // (even, odd)

    /// Z-grading: components keyed by degree, summing back to *this.
    std::map<int, SuperElement> graded_components() const;
    SuperElement component(int degree) const;
    bool is_homogeneous_degree() const;
    /// Smallest degree with a nonzero component; nullopt for 0.
    std::optional<int> min_degree() const;
    std::optional<int> max_degree() const;
    /// Filtration membership f in O_k.
    bool in_filtration(int k) const;

private:
    ParamsPtr par_;
    std::map<Mono, int> terms_;
};

/// Supercommutative product of O(m,m;t): divided-power rule on the even part
/// (binomials mod p via Lucas, truncation past pi), signed exterior product
/// on the odd part.
SuperElement multiply(const SuperElement& f, const SuperElement& g);

/// Superderivation D_r (0-based r), lowers Z-degree by 1.
SuperElement derive(int r, const SuperElement& f);

/// Product of a single monomial pair; returns nullopt when it vanishes.
std::optional<std::pair<Mono, int>> multiply_monos(const Parameters& par, const Mono& a,
                                                  const Mono& b);

}  // namespace sho

#endif
