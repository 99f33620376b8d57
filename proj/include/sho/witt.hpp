#ifndef SHO_WITT_HPP
#define SHO_WITT_HPP

#include <map>
#include <optional>
#include <vector>

#include "sho/superelement.hpp"

namespace sho {

/// Element of W(m,m;t) as a free O-module: sum f_r D_r, one coefficient per
/// direction r = 0..2m-1. The component f_r D_r has parity p(f_r) + mu(r)
/// and Z-degree deg(f_r) - 1.
class Derivation {
public:
    explicit Derivation(ParamsPtr par);

    static Derivation zero(ParamsPtr par) { return Derivation(std::move(par)); }
    static Derivation d(ParamsPtr par, int r);  // the basis derivation D_r
    static Derivation monomial(ParamsPtr par, Mono mn, int r, int c = 1);

    const ParamsPtr& params() const { return par_; }
    const SuperElement& coeff(int r) const { return coeffs_[r]; }
    SuperElement& coeff(int r) { return coeffs_[r]; }
    bool is_zero() const;

    Derivation& operator+=(const Derivation& e);
    Derivation& operator-=(const Derivation& e);
    friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
    friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
    Derivation scaled(int c) const;
    Derivation operator-() const { return scaled(-1); }
    friend bool operator==(const Derivation& a, const Derivation& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Parity as a superderivation; throws parity_error when mixed.
    int parity() const;
    bool is_homogeneous_parity() const;
    std::pair<Derivation, Derivation> parity_split() const;  // (even, odd)

    std::map<int, Derivation> graded_components() const;
    Derivation component(int degree) const;
    std::optional<int> min_degree() const;
    bool is_homogeneous_degree() const;

    /// Left multiplication by f in O: f * (sum f_r D_r).
    Derivation left_mul(const SuperElement& f) const;

private:
    ParamsPtr par_;
    std::vector<SuperElement> coeffs_;
};

/// Apply the superderivation to f: (sum f_r D_r)(f) = sum f_r * D_r(f).
SuperElement evaluate(const Derivation& d, const SuperElement& f);

/// Supercommutator [D,E], computed coefficientwise; valid for every t.
Derivation bracket(const Derivation& d, const Derivation& e);

/// div(f_r D_r) = (-1)^{mu(r) p(f_r)} D_r(f_r), extended linearly.
SuperElement divergence(const Derivation& d);

/// Odd Hamiltonian operator T_H(a) = sum_i (-1)^{mu(i) p(a)} D_i(a) D_{i'}.
Derivation t_h(const SuperElement& a);

/// Per-parameters enumeration of the monomial basis of O grouped by degree,
/// with coordinate maps for O_[d] and W_[d]. The W coordinate of the basis
/// vector (monomial #k of degree d+1, direction r) is k * 2m + r.
class BasisIndex {
public:
    explicit BasisIndex(ParamsPtr par);

    const ParamsPtr& params() const { return par_; }
    int o_dim(int degree) const;
    int o_dim_total() const { return total_; }
    int w_dim(int degree) const { return 2 * par_->m() * o_dim(degree + 1); }
    int top_degree() const { return static_cast<int>(par_->xi()); }

    const std::vector<Mono>& monos(int degree) const;
    int mono_index(const Mono& mn) const;  // index within its degree

    std::vector<std::uint8_t> o_coords(const SuperElement& f, int degree) const;
    SuperElement o_from_coords(int degree, const std::vector<std::uint8_t>& v) const;
    std::vector<std::uint8_t> w_coords(const Derivation& d, int degree) const;
    Derivation w_from_coords(int degree, const std::vector<std::uint8_t>& v) const;

private:
    ParamsPtr par_;
    std::vector<std::vector<Mono>> by_degree_;
    std::map<Mono, int> index_;
    int total_ = 0;
};

using BasisIndexPtr = std::shared_ptr<const BasisIndex>;

}  // namespace sho

#endif
