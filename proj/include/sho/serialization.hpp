#ifndef SHO_SERIALIZATION_HPP
#define SHO_SERIALIZATION_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "sho/autgroups.hpp"
#include "sho/cartan.hpp"
#include "sho/subspace.hpp"

namespace sho {

// Variable indices in JSON are 1-based (1..m even, m+1..2m odd), matching
// the usual mathematical labeling; in-memory indices are 0-based.

nlohmann::json params_to_json(const Parameters& par);
ParamsPtr params_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const SuperElement& f);
SuperElement element_from_json(const ParamsPtr& par, const nlohmann::json& j);

nlohmann::json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const ParamsPtr& par, const nlohmann::json& j);

/// {"params": ..., "images": [element x 2m]}; from_json revalidates.
nlohmann::json automorphism_to_json(const OAutomorphism& sigma);
OAutomorphism automorphism_from_json(const nlohmann::json& j);

/// {"params": ..., "algebra": tag, "basis": labels, "matrix": row-major
/// residues}; from_json revalidates against the frozen basis of g.
nlohmann::json gautomorphism_to_json(const GAutomorphism& phi_map, const std::string& name);
GAutomorphism gautomorphism_from_json(const GradedSubspace& g, const nlohmann::json& j);

/// Structure-constant table of a frozen graded subspace: basis labels with
/// degree and parity, plus all nonzero brackets [e_i, e_j] for i <= j.
nlohmann::json export_structure_constants(const GradedSubspace& s, const std::string& name);

/// Abstract algebra reconstructed from a structure-constant file; used for
/// cross-checking, independent of the derivation representation.
class StructureConstantAlgebra {
public:
    int p = 0;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<int> degrees;
    std::vector<int> parities;
    // brackets[i][j] for i <= j, sparse (index, coeff) pairs
    std::vector<std::vector<std::vector<std::pair<int, int>>>> table;

    std::vector<int> bracket_basis(int i, int j) const;  // dense result
    /// Super skew-symmetry plus the super Jacobi identity on sampled triples.
    bool check_consistency(int samples, unsigned long long seed) const;
};

/// Parses and validates; throws config_error on malformed input and on a
/// failed consistency check.
StructureConstantAlgebra import_structure_constants(const nlohmann::json& j);

}  // namespace sho

#endif
