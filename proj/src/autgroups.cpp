#include "sho/autgroups.hpp"

#include <algorithm>

#include "sho/gf.hpp"
#include "sho/restricted.hpp"

namespace sho {

namespace {

std::vector<int> factorial_invs(int p) {
    std::vector<int> inv(p);
    int f = 1;
    for (int k = 0; k < p; ++k) {
        if (k > 1) f = gf::mul(f, k, p);
        inv[k] = gf::inv(f, p);
    }
    return inv;
}

}  // namespace

OAutomorphism OAutomorphism::make(ParamsPtr par, std::vector<SuperElement> images) {
    if (!par->unit_t())
        throw config_error("automorphisms are supported for t = 1 only");
    if (static_cast<int>(images.size()) != par->nvars())
        throw config_error("expected 2m generator images");
    const int n = par->nvars();
    Mat linear(n, n);
    for (int j = 0; j < n; ++j) {
        const SuperElement& y = images[j];
        ensure_same(par, y.params());
        if (!y.is_homogeneous_parity() || (!y.is_zero() && y.parity() != par->mu(j)))
            throw parity_error("image of x_" + std::to_string(j + 1) + " has the wrong parity");
        if (!y.in_filtration(1))
            throw config_error("image of x_" + std::to_string(j + 1) + " has a constant term");
        for (int i = 0; i < n; ++i) {
            Mono xi;
            xi.alpha.assign(par->m(), 0);
            if (i < par->m())
                xi.alpha[i] = 1;
            else
                xi.u = 1u << (i - par->m());
            linear.at(i, j) = static_cast<std::uint8_t>(y.coeff(xi));
        }
    }
    if (!mat_inverse(linear, par->p()))
        throw config_error("linear part of the substitution is singular");
    OAutomorphism sigma;
    sigma.par_ = std::move(par);
    sigma.images_ = std::move(images);
    sigma.linear_ = std::move(linear);
    return sigma;
}

OAutomorphism OAutomorphism::identity(ParamsPtr par) {
    std::vector<SuperElement> images;
    for (int j = 0; j < par->nvars(); ++j) images.push_back(SuperElement::x(par, j));
    return make(std::move(par), std::move(images));
}

bool OAutomorphism::is_identity() const {
    for (int j = 0; j < par_->nvars(); ++j)
        if (images_[j] != SuperElement::x(par_, j)) return false;
    return true;
}

const SuperElement& OAutomorphism::mono_image(const Mono& mn) const {
    auto it = memo_.find(mn);
    if (it != memo_.end()) return it->second;
    const int m = par_->m();
    SuperElement result(par_);
    int i = 0;
    while (i < m && mn.alpha[i] == 0) ++i;
    if (i < m) {
        // sigma(x^(a)) = sigma(x^(a - e_i)) y_i / a_i
        Mono rest = mn;
        --rest.alpha[i];
        result = multiply(mono_image(rest), images_[i]).scaled(gf::inv(mn.alpha[i], par_->p()));
    } else if (mn.u) {
        int k = __builtin_ctz(mn.u);
        Mono rest = mn;
        rest.u &= ~(1u << k);
        result = multiply(images_[m + k], mono_image(rest));
    } else {
        result = SuperElement::one(par_);
    }
    return memo_.emplace(mn, std::move(result)).first->second;
}

SuperElement OAutomorphism::apply(const SuperElement& f) const {
    ensure_same(par_, f.params());
    SuperElement out(par_);
    for (const auto& [mn, c] : f.terms()) out += mono_image(mn).scaled(c);
    return out;
}

const OAutomorphism& OAutomorphism::inverse() const {
    if (!inverse_) inverse_ = std::make_shared<OAutomorphism>(invert(*this));
    return *inverse_;
}

OAutomorphism compose(const OAutomorphism& a, const OAutomorphism& b) {
    std::vector<SuperElement> images;
    for (int j = 0; j < a.params()->nvars(); ++j) images.push_back(a.apply(b.image(j)));
    return OAutomorphism::make(a.params(), std::move(images));
}

OAutomorphism invert(const OAutomorphism& sigma) {
    const auto& par = sigma.params();
    const int n = par->nvars();
    // seed with the inverse of the linear part, then cancel the
    // higher-filtration discrepancy; each round pushes it strictly deeper
    auto linv = mat_inverse(sigma.linear_part(), par->p());
    std::vector<SuperElement> images;
    for (int j = 0; j < n; ++j) {
        SuperElement y(par);
        for (int i = 0; i < n; ++i)
            if (linv->at(i, j)) y += SuperElement::x(par, i).scaled(linv->at(i, j));
        images.push_back(std::move(y));
    }
    OAutomorphism tau = OAutomorphism::make(par, std::move(images));
    for (long long round = 0; round <= par->xi() + 1; ++round) {
        bool clean = true;
        std::vector<SuperElement> corrected;
        for (int j = 0; j < n; ++j) {
            SuperElement err = sigma.apply(tau.image(j)) - SuperElement::x(par, j);
            if (err.is_zero()) {
                corrected.push_back(tau.image(j));
            } else {
                clean = false;
                corrected.push_back(tau.image(j) - tau.apply(err));
            }
        }
        if (clean) return tau;
        tau = OAutomorphism::make(par, std::move(corrected));
    }
    throw config_error("inversion did not terminate (invalid automorphism?)");
}

Derivation conjugate(const OAutomorphism& sigma, const Derivation& d) {
    ensure_same(sigma.params(), d.params());
    const auto& par = sigma.params();
    const OAutomorphism& inv = sigma.inverse();
    Derivation out(par);
    for (int k = 0; k < par->nvars(); ++k)
        out.coeff(k) = sigma.apply(evaluate(d, inv.image(k)));
    return out;
}

bool is_admissible(const OAutomorphism& sigma, const GradedSubspace& g) {
    for (const Derivation& b : g.flat_basis())
        if (!g.contains(conjugate(sigma, b))) return false;
    return true;
}

DepthProfile depth_O(const OAutomorphism& sigma, const BasisIndex& idx) {
    const auto& par = sigma.params();
    std::optional<int> depth;
    for (int d = 1; d <= idx.top_degree(); ++d)
        for (const Mono& mn : idx.monos(d)) {
            SuperElement diff = sigma.apply(SuperElement::monomial(par, mn)) -
                                SuperElement::monomial(par, mn);
            if (diff.is_zero()) continue;
            int shift = *diff.min_degree() - d;
            if (!depth || shift < *depth) depth = shift;
        }
    if (depth && *depth < 0)
        throw config_error("substitution does not preserve the filtration");
    return depth;
}

bool is_homogeneous_O(const OAutomorphism& sigma) {
    for (int j = 0; j < sigma.params()->nvars(); ++j) {
        const SuperElement& y = sigma.image(j);
        if (!y.is_zero() && !(y.is_homogeneous_degree() && *y.min_degree() == 1)) return false;
    }
    return true;
}

OMatrix::OMatrix(ParamsPtr par, int n) : par_(std::move(par)), n_(n) {
    entries_.assign(static_cast<std::size_t>(n_) * n_, SuperElement(par_));
}

OMatrix OMatrix::identity(ParamsPtr par, int n) {
    OMatrix a(par, n);
    for (int i = 0; i < n; ++i) a.at(i, i) = SuperElement::one(a.par_);
    return a;
}

Mat OMatrix::scalar_part() const {
    Mono unit;
    unit.alpha.assign(par_->m(), 0);
    Mat s(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) s.at(i, j) = static_cast<std::uint8_t>(at(i, j).coeff(unit));
    return s;
}

OMatrix OMatrix::augmentation_part() const {
    OMatrix a(par_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            SuperElement e = at(i, j);
            Mono unit;
            unit.alpha.assign(par_->m(), 0);
            e.add_term(unit, -e.coeff(unit));
            a.at(i, j) = std::move(e);
        }
    return a;
}

bool OMatrix::is_zero() const {
    return std::ranges::all_of(entries_, [](const SuperElement& e) { return e.is_zero(); });
}

OMatrix operator*(const OMatrix& a, const OMatrix& b) {
    ensure_same(a.par_, b.par_);
    OMatrix c(a.par_, a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.n_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < a.n_; ++j)
                c.at(i, j) += multiply(a.at(i, k), b.at(k, j));
        }
    return c;
}

bool operator==(const OMatrix& a, const OMatrix& b) { return a.entries_ == b.entries_; }

OMatrix invert_over_O(const OMatrix& a) {
    const auto& par = a.params();
    const int n = a.size();
    auto sinv = mat_inverse(a.scalar_part(), par->p());
    if (!sinv) throw config_error("invert_over_O: scalar part is singular");
    // A = S (I + N), N = S^{-1} pr_1(A) nilpotent, so the Neumann series is finite
    OMatrix p1 = a.augmentation_part();
    OMatrix nmat(par, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (!sinv->at(i, k)) continue;
            for (int j = 0; j < n; ++j) nmat.at(i, j) += p1.at(k, j).scaled(sinv->at(i, k));
        }
    OMatrix series = OMatrix::identity(par, n);
    OMatrix power = nmat;
    int sign = -1;
    while (!power.is_zero()) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) series.at(i, j) += power.at(i, j).scaled(sign);
        power = power * nmat;
        sign = -sign;
    }
    // A^{-1} = (I + N)^{-1} S^{-1}
    OMatrix result(par, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                if (sinv->at(k, j)) result.at(i, j) += series.at(i, k).scaled(sinv->at(k, j));
    return result;
}

namespace {

std::vector<int> flat_degrees(const GradedSubspace& g) {
    std::vector<int> deg(g.flat_basis().size());
    for (const auto& [d, count] : g.dims())
        for (int k = 0; k < count; ++k) deg[g.flat_offset(d) + k] = d;
    return deg;
}

}  // namespace

GAutomorphism GAutomorphism::make(const GradedSubspace& g, Mat matrix) {
    const int n = static_cast<int>(g.flat_basis().size());
    const int p = g.params()->p();
    if (matrix.rows != n || matrix.cols != n)
        throw config_error("automorphism matrix has the wrong size");
    if (!mat_inverse(matrix, p)) throw config_error("automorphism matrix is singular");
    GAutomorphism out(g, std::move(matrix), false);

    auto degrees = flat_degrees(g);
    std::vector<int> parities(n);
    for (int k = 0; k < n; ++k) parities[k] = g.flat_basis()[k].parity();
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!out.matrix_.at(i, k)) continue;
            if (parities[i] != parities[k])
                throw parity_error("matrix does not preserve parity");
            if (degrees[i] < degrees[k])
                throw config_error("matrix does not preserve the standard filtration");
        }

    // multiplicativity on a spanning pair set: all degree -1 rows against
    // everything, plus seeded random pairs
    auto check_pair = [&](int i, int j) {
        const auto& basis = g.flat_basis();
        auto lhs = g.coords(bracket(basis[i], basis[j]));
        if (!lhs) throw config_error("basis bracket escapes the subspace");
        auto rhs = g.coords(bracket(out.apply(basis[i]), out.apply(basis[j])));
        if (!rhs || out.apply_coords(*lhs) != *rhs)
            throw config_error("matrix is not multiplicative on basis brackets");
    };
    if (g.dim_at(-1) > 0) {
        int off = g.flat_offset(-1);
        for (int i = off; i < off + g.dim_at(-1); ++i)
            for (int j = 0; j < n; ++j) check_pair(i, j);
    }
    std::mt19937_64 rng(0x5348304175ull);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int s = 0; s < 200; ++s) check_pair(pick(rng), pick(rng));
    out.verified_ = true;
    return out;
}

GAutomorphism GAutomorphism::identity(const GradedSubspace& g) {
    return GAutomorphism(g, Mat::identity(static_cast<int>(g.flat_basis().size())), true);
}

Derivation GAutomorphism::apply(const Derivation& d) const {
    auto coords = g_->coords(d);
    if (!coords) throw config_error("element lies outside the algebra");
    return g_->from_coords(apply_coords(*coords));
}

std::vector<std::uint8_t> GAutomorphism::apply_coords(const std::vector<std::uint8_t>& v) const {
    const int n = matrix_.rows;
    const int p = g_->params()->p();
    std::vector<std::uint8_t> out(n, 0);
    for (int k = 0; k < n; ++k) {
        if (!v[k]) continue;
        for (int i = 0; i < n; ++i)
            out[i] = static_cast<std::uint8_t>(gf::norm(out[i] + v[k] * matrix_.at(i, k), p));
    }
    return out;
}

GAutomorphism compose(const GAutomorphism& a, const GAutomorphism& b) {
    return GAutomorphism(a.algebra(), mat_mul(a.matrix(), b.matrix(), a.algebra().params()->p()),
                         a.multiplicativity_verified() && b.multiplicativity_verified());
}

GAutomorphism invert(const GAutomorphism& phi_map) {
    auto inv = mat_inverse(phi_map.matrix(), phi_map.algebra().params()->p());
    return GAutomorphism(phi_map.algebra(), std::move(*inv), phi_map.multiplicativity_verified());
}

GAutomorphism phi(const OAutomorphism& sigma, const GradedSubspace& g) {
    const int n = static_cast<int>(g.flat_basis().size());
    Mat matrix(n, n);
    for (int k = 0; k < n; ++k) {
        auto coords = g.coords(conjugate(sigma, g.flat_basis()[k]));
        if (!coords) throw std::domain_error("sigma is not admissible for this algebra");
        for (int i = 0; i < n; ++i) matrix.at(i, k) = (*coords)[i];
    }
    return GAutomorphism(g, std::move(matrix), true);
}

OAutomorphism reconstruct_sigma(const GAutomorphism& phi_map) {
    const GradedSubspace& g = phi_map.algebra();
    const auto& par = g.params();
    if (!par->unit_t()) throw config_error("reconstruction requires t = 1");
    const int n = par->nvars();

    // matrix A of the images phi(D_i) in the O-basis {D_j}
    OMatrix a(par, n);
    std::vector<Derivation> phi_d;
    for (int i = 0; i < n; ++i) {
        phi_d.push_back(phi_map.apply(Derivation::d(par, i)));
        for (int j = 0; j < n; ++j) a.at(i, j) = phi_d.back().coeff(j);
    }
    OMatrix ainv = invert_over_O(a);

    // expand phi(T) over the O-basis {phi(D_l)}: T = sum_l c_l phi(D_l)
    // with c = (coefficient row of phi(T)) * A^{-1}
    auto expand = [&](const Derivation& t) -> std::optional<std::vector<SuperElement>> {
        auto coords = g.coords(t);
        if (!coords) return std::nullopt;
        Derivation image = g.from_coords(phi_map.apply_coords(*coords));
        std::vector<SuperElement> c(n, SuperElement(par));
        for (int l = 0; l < n; ++l)
            for (int s = 0; s < n; ++s) c[l] += multiply(image.coeff(s), ainv.at(s, l));
        return c;
    };

    std::vector<SuperElement> images(n, SuperElement(par));
    for (int j = 0; j < n; ++j) {
        bool found = false;
        // T_H(x_{k'} x_j) expands as +-x_j D_k +- x_{k'} D_{j'}; extract
        // the phi(D_k) coefficient, preferring the k' = x_1 choice
        std::vector<int> candidates = {par->m(), par->m() + 1};
        for (int k = 0; k < n; ++k) candidates.push_back(k);
        for (int k : candidates) {
            int kp = par->partner(k);
            if (kp == j || k == par->partner(j)) continue;
            SuperElement elem = multiply(SuperElement::x(par, kp), SuperElement::x(par, j));
            if (elem.is_zero()) continue;
            auto c = expand(t_h(elem));
            if (!c) continue;
            int sign = (par->mu(kp) + par->mu(kp) * par->mu(j)) & 1;
            images[j] = sign ? -(*c)[k] : (*c)[k];
            found = true;
            break;
        }
        if (!found) {
            // fall back to the mixed element x_e x_o - x_q x_{q'} whose
            // T_H image carries +-x_j on D_j
            int e = par->is_even_index(j) ? j : par->partner(j);
            int o = par->partner(e);
            int q = (e == 0) ? 1 : 0;
            SuperElement elem = multiply(SuperElement::x(par, e), SuperElement::x(par, o)) -
                                multiply(SuperElement::x(par, q), SuperElement::x(par, par->partner(q)));
            auto c = expand(t_h(elem));
            if (!c)
                throw reconstruction_error("no extraction element available inside the algebra for x_" +
                                           std::to_string(j + 1));
            images[j] = par->is_even_index(j) ? -(*c)[j] : (*c)[j];
        }
    }

    OAutomorphism sigma = OAutomorphism::make(par, std::move(images));
    if (!(phi(sigma, g) == phi_map))
        throw reconstruction_error("reconstructed substitution does not induce the given automorphism");
    return sigma;
}

DepthProfile depth_g(const GAutomorphism& phi_map) {
    const GradedSubspace& g = phi_map.algebra();
    auto degrees = flat_degrees(g);
    const int n = phi_map.matrix().rows;
    const int p = g.params()->p();
    std::optional<int> depth;
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            int v = phi_map.matrix().at(i, k);
            if (i == k) v = gf::sub(v, 1, p);
            if (!v) continue;
            int shift = degrees[i] - degrees[k];
            if (!depth || shift < *depth) depth = shift;
        }
    }
    if (depth && *depth < 0)
        throw config_error("matrix does not preserve the filtration");
    return depth;
}

bool is_homogeneous_g(const GAutomorphism& phi_map) {
    const GradedSubspace& g = phi_map.algebra();
    auto degrees = flat_degrees(g);
    const int n = phi_map.matrix().rows;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (phi_map.matrix().at(i, k) && degrees[i] != degrees[k]) return false;
    return true;
}

namespace {

// truncated exponential of a p-nilpotent even element of g, extended
// multiplicatively from the generator images
std::optional<OAutomorphism> try_exponential(const GradedSubspace& g, int degree,
                                             std::mt19937_64& rng) {
    const auto& par = g.params();
    if (!g.frozen() || g.dim_at(degree) == 0) return std::nullopt;
    std::vector<const Derivation*> even;
    for (const Derivation& b : g.basis(degree))
        if (b.parity() == 0) even.push_back(&b);
    if (even.empty()) return std::nullopt;
    // sparse combinations are far more likely to be p-nilpotent
    std::uniform_int_distribution<int> coeff(1, par->p() - 1);
    std::uniform_int_distribution<std::size_t> pick(0, even.size() - 1);
    int support = 1 + static_cast<int>(rng() % 3);
    Derivation elem(par);
    for (int k = 0; k < support; ++k) elem += even[pick(rng)]->scaled(coeff(rng));
    if (elem.is_zero()) return std::nullopt;
    // p-nilpotency on generators (enough at t = 1)
    for (int r = 0; r < par->nvars(); ++r)
        if (!apply_times(elem, SuperElement::x(par, r), par->p()).is_zero()) return std::nullopt;
    auto fact_inv = factorial_invs(par->p());
    std::vector<SuperElement> images;
    for (int j = 0; j < par->nvars(); ++j) {
        SuperElement y(par);
        SuperElement term = SuperElement::x(par, j);
        for (int k = 0; k < par->p() && !term.is_zero(); ++k) {
            y += term.scaled(fact_inv[k]);
            if (k + 1 < par->p()) term = evaluate(elem, term);
        }
        images.push_back(std::move(y));
    }
    return OAutomorphism::make(par, std::move(images));
}

std::optional<OAutomorphism> try_linear(const GradedSubspace& g, std::mt19937_64& rng) {
    const auto& par = g.params();
    const int m = par->m();
    std::uniform_int_distribution<int> coeff(0, par->p() - 1);
    Mat b(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) b.at(i, j) = static_cast<std::uint8_t>(coeff(rng));
    auto binv = mat_inverse(b, par->p());
    if (!binv) return std::nullopt;
    // odd block = inverse transpose of the even block, preserving the
    // x_i <-> x_{i'} pairing behind T_H
    std::vector<SuperElement> images;
    for (int j = 0; j < m; ++j) {
        SuperElement y(par);
        for (int i = 0; i < m; ++i)
            if (b.at(i, j)) y += SuperElement::x(par, i).scaled(b.at(i, j));
        images.push_back(std::move(y));
    }
    for (int j = 0; j < m; ++j) {
        SuperElement y(par);
        for (int i = 0; i < m; ++i)
            if (binv->at(j, i)) y += SuperElement::x(par, m + i).scaled(binv->at(j, i));
        images.push_back(std::move(y));
    }
    return OAutomorphism::make(par, std::move(images));
}

}  // namespace

OAutomorphism sample_automorphism(const GradedSubspace& g, unsigned long long seed,
                                  int depth_target) {
    const auto& par = g.params();
    if (!par->unit_t()) throw config_error("sampling requires t = 1");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x5348414dull);
    BasisIndex idx_local(par);
    const int attempts = 400;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::optional<OAutomorphism> sigma;
        if (depth_target == 0) {
            sigma = try_linear(g, rng);
            if (sigma && !sigma->is_identity() && (rng() & 1)) {
                // richer depth-0 samples: compose with a deeper exponential
                int d = 1 + static_cast<int>(rng() % 3);
                if (auto extra = try_exponential(g, d, rng)) sigma = compose(*sigma, *extra);
            }
        } else {
            sigma = try_exponential(g, depth_target, rng);
        }
        if (!sigma || sigma->is_identity()) continue;
        if (depth_O(*sigma, idx_local) != DepthProfile(depth_target)) continue;
        if (!is_admissible(*sigma, g)) continue;
        return *sigma;
    }
    throw sampling_error("no admissible automorphism found after bounded attempts");
}

}  // namespace sho
