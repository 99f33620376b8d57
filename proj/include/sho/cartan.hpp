#ifndef SHO_CARTAN_HPP
#define SHO_CARTAN_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sho/subspace.hpp"

namespace sho {

enum class AlgebraTag { W, HO, SPrime, SHOPrime, SHOBar, SHO };

std::string to_string(AlgebraTag tag);
AlgebraTag tag_from_string(const std::string& name);

/// The distinguished element [T_H(x^(pi)), T_H(x^omega)], omega the full odd
/// word; its degree is xi - 4 and it spans SHO-bar at that degree.
Derivation omega_element(const ParamsPtr& par);

/// Shared context: parameters, monomial index, and lazily built, frozen
/// algebras of the series W > HO, S' > SHO' > SHO-bar > SHO.
class Workbench {
public:
    explicit Workbench(ParamsPtr par);

    const ParamsPtr& params() const { return par_; }
    const BasisIndexPtr& index() const { return idx_; }
    /// Built and frozen on first request, then cached.
    const GradedSubspace& algebra(AlgebraTag tag);

private:
    GradedSubspace build(AlgebraTag tag);

    ParamsPtr par_;
    BasisIndexPtr idx_;
    std::map<AlgebraTag, std::shared_ptr<GradedSubspace>> cache_;
};

struct Lemma11Item {
    std::string item;                       // "1.1(3)", "1.1(4)", "1.1(5)"
    bool passed = false;
    std::string detail;
    std::map<int, int> dims;                // relevant dimension table
};

struct Lemma11Report {
    bool all_passed = false;
    std::vector<Lemma11Item> items;
};

/// Checks the structural identities of the series: degree ranges, degreewise
/// agreement of SHO-bar and SHO, bracket generation from degree -1, and the
/// one-dimensional top component spanned by the omega element.
Lemma11Report verify_lemma11(Workbench& wb);

/// True iff for every degree i >= 0 the joint kernel of ad D_1..D_2m on
/// s_[i] is zero; requires s_[-1] = W_[-1].
bool transitivity_check(Workbench& wb, const GradedSubspace& s);

}  // namespace sho

#endif
