#ifndef SHO_SUBSPACE_HPP
#define SHO_SUBSPACE_HPP

#include <map>
#include <optional>
#include <vector>

#include "sho/linalg.hpp"
#include "sho/witt.hpp"

namespace sho {

/// Graded subspace of W: one echelonized coefficient block per Z-degree,
/// relative to the standard monomial-times-direction basis. Inserting a
/// non-homogeneous derivation inserts its graded components, so the stored
/// object is always a graded span.
class GradedSubspace {
public:
    GradedSubspace(ParamsPtr par, BasisIndexPtr idx);

    const ParamsPtr& params() const { return par_; }
    const BasisIndexPtr& index() const { return idx_; }

    bool insert(const Derivation& d);
    bool contains(const Derivation& d) const;
    bool contains_homogeneous(const Derivation& d, int degree) const;

    std::map<int, int> dims() const;
    int dim() const;
    int dim_at(int degree) const;
    std::optional<int> min_degree() const;
    std::optional<int> max_degree() const;

    /// Sparse spanning set: the inserted derivations that increased the rank.
    const std::vector<Derivation>& generators() const { return gens_; }

    /// Materializes per-degree basis derivations from the echelon rows and
    /// the flat basis ordering (degrees ascending, rows in echelon order).
    void freeze();
    bool frozen() const { return frozen_; }
    const std::vector<Derivation>& basis(int degree) const;
    /// Flat basis across degrees, in the frozen ordering.
    const std::vector<Derivation>& flat_basis() const;
    int flat_offset(int degree) const;
    /// Coordinates of d in the flat frozen basis; nullopt if d lies outside.
    std::optional<std::vector<std::uint8_t>> coords(const Derivation& d) const;
    Derivation from_coords(const std::vector<std::uint8_t>& v) const;

    /// True iff every graded component of this space is contained in other.
    bool subspace_of(const GradedSubspace& other) const;

private:
    bool insert_homogeneous(const Derivation& d, int degree, bool track);

    ParamsPtr par_;
    BasisIndexPtr idx_;
    std::map<int, Echelon> blocks_;
    std::vector<Derivation> gens_;
    bool frozen_ = false;
    std::map<int, std::vector<Derivation>> basis_;
    std::vector<Derivation> flat_;
    std::map<int, int> offsets_;
};

/// Span of all pairwise brackets of a spanning set of s, iterated to closure.
GradedSubspace derived_algebra(const GradedSubspace& s);

}  // namespace sho

#endif
