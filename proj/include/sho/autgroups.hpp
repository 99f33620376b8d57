#ifndef SHO_AUTGROUPS_HPP
#define SHO_AUTGROUPS_HPP

#include <optional>
#include <random>

#include "sho/cartan.hpp"
#include "sho/linalg.hpp"

namespace sho {

struct reconstruction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct sampling_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filtration depth: the largest i with (sigma - 1)(X_j) in X_{i+j} for all
/// j; nullopt is the identity sentinel (every i works).
using DepthProfile = std::optional<int>;

/// Automorphism of O(m,m;1), stored as the generator images y_j = sigma(x_j).
/// Validated on construction: parities match, no constant terms, invertible
/// linear part. Immutable; monomial images and the inverse are memoized.
class OAutomorphism {
public:
    /// Validates and extends multiplicatively, sigma(x^(alpha)) being
    /// prod y_i^{alpha_i} / alpha_i! (well defined since alpha_i < p).
    static OAutomorphism make(ParamsPtr par, std::vector<SuperElement> images);
    static OAutomorphism identity(ParamsPtr par);

    const ParamsPtr& params() const { return par_; }
    const SuperElement& image(int j) const { return images_[j]; }
    const std::vector<SuperElement>& images() const { return images_; }
    /// Linear part: entry (i,j) is the x_i-coefficient of y_j.
    const Mat& linear_part() const { return linear_; }

    SuperElement apply(const SuperElement& f) const;
    const OAutomorphism& inverse() const;
    bool is_identity() const;

    friend bool operator==(const OAutomorphism& a, const OAutomorphism& b) {
        return a.images_ == b.images_;
    }

private:
    OAutomorphism() = default;
    const SuperElement& mono_image(const Mono& mn) const;

    ParamsPtr par_;
    std::vector<SuperElement> images_;
    Mat linear_;
    mutable std::map<Mono, SuperElement> memo_;
    mutable std::shared_ptr<OAutomorphism> inverse_;
};

/// (a o b)(x) = a(b(x)).
OAutomorphism compose(const OAutomorphism& a, const OAutomorphism& b);
OAutomorphism invert(const OAutomorphism& sigma);

/// sigma D sigma^{-1}, reassembled in coefficient form.
Derivation conjugate(const OAutomorphism& sigma, const Derivation& d);

/// Does conjugation by sigma preserve g?
bool is_admissible(const OAutomorphism& sigma, const GradedSubspace& g);

DepthProfile depth_O(const OAutomorphism& sigma, const BasisIndex& idx);
bool is_homogeneous_O(const OAutomorphism& sigma);

/// Matrix of 2m x 2m matrices over O with the scalar/augmentation split
/// pr_[0] + pr_1 used for triangular inversion.
class OMatrix {
public:
    OMatrix(ParamsPtr par, int n);
    static OMatrix identity(ParamsPtr par, int n);

    int size() const { return n_; }
    const ParamsPtr& params() const { return par_; }
    SuperElement& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    const SuperElement& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }

    Mat scalar_part() const;    // pr_[0] entrywise
    OMatrix augmentation_part() const;  // pr_1 entrywise
    bool is_zero() const;
    friend OMatrix operator*(const OMatrix& a, const OMatrix& b);
    friend bool operator==(const OMatrix&, const OMatrix&);

private:
    ParamsPtr par_;
    int n_;
    std::vector<SuperElement> entries_;
};

/// A^{-1} via the finite Neumann series of the nilpotent augmentation part;
/// throws config_error when the scalar part is singular.
OMatrix invert_over_O(const OMatrix& a);

/// Automorphism of a built algebra g, stored as a matrix in the frozen flat
/// basis. `make` validates parity and filtration preservation, invertibility
/// and multiplicativity on a spanning pair set; `phi` constructs certified
/// instances directly from conjugation.
class GAutomorphism {
public:
    static GAutomorphism make(const GradedSubspace& g, Mat matrix);
    static GAutomorphism identity(const GradedSubspace& g);

    const GradedSubspace& algebra() const { return *g_; }
    const Mat& matrix() const { return matrix_; }
    bool multiplicativity_verified() const { return verified_; }

    Derivation apply(const Derivation& d) const;
    std::vector<std::uint8_t> apply_coords(const std::vector<std::uint8_t>& v) const;

    friend bool operator==(const GAutomorphism& a, const GAutomorphism& b) {
        return a.matrix_ == b.matrix_;
    }

private:
    friend GAutomorphism phi(const OAutomorphism&, const GradedSubspace&);
    friend GAutomorphism compose(const GAutomorphism&, const GAutomorphism&);
    friend GAutomorphism invert(const GAutomorphism&);
    GAutomorphism(const GradedSubspace& g, Mat matrix, bool verified)
        : g_(&g), matrix_(std::move(matrix)), verified_(verified) {}

    const GradedSubspace* g_;
    Mat matrix_;
    bool verified_;
};

GAutomorphism compose(const GAutomorphism& a, const GAutomorphism& b);
GAutomorphism invert(const GAutomorphism& phi);

/// Conjugation restricted to g; throws std::domain_error when sigma is not
/// admissible for g.
GAutomorphism phi(const OAutomorphism& sigma, const GradedSubspace& g);

/// The surjectivity construction: recover sigma with phi(sigma) = given
/// automorphism, via the O-matrix of the images phi(D_i) and coefficient
/// extraction from images of the quadratic Hamiltonian elements.
OAutomorphism reconstruct_sigma(const GAutomorphism& phi_map);

DepthProfile depth_g(const GAutomorphism& phi_map);
bool is_homogeneous_g(const GAutomorphism& phi_map);

/// Deterministic-by-seed generator of admissible automorphisms: invertible
/// pairing-compatible linear substitutions for depth 0, truncated
/// exponentials of even nilpotent elements of g_[depth] otherwise. Every
/// sample is certified admissible before it is returned.
OAutomorphism sample_automorphism(const GradedSubspace& g, unsigned long long seed,
                                  int depth_target);

}  // namespace sho

#endif
