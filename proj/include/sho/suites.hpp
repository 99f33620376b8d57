#ifndef SHO_SUITES_HPP
#define SHO_SUITES_HPP

#include <string>
#include <vector>

#include "sho/autgroups.hpp"
#include "sho/cartan.hpp"
#include "sho/restricted.hpp"

namespace sho {

struct CheckItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckItem> items;

    bool all_passed() const;
    CheckItem& add(const std::string& name, bool passed, std::string detail = "");
};

/// Structural identities of the series (degree ranges, degreewise agreement,
/// bracket generation, one-dimensional top component).
SuiteReport suite_lemma11(Workbench& wb);

/// Restrictedness of SHO', SHO-bar, SHO (and W at t = 1): expected true at
/// t = 1, expected false with a witness otherwise.
SuiteReport suite_restricted(Workbench& wb);

/// Bracket engine health: the T_H and divergence identities, super
/// skew-symmetry and Jacobi. Exhaustive over basis pairs at m = 2, sampled
/// otherwise.
SuiteReport suite_engine(Workbench& wb, unsigned long long seed, int samples);

/// The conjugation isomorphism: roundtrip reconstruction, multiplicativity,
/// depth and homogeneity correspondence, identity reconstruction,
/// determination by the degree -1 action, and transitivity. Requires t = 1.
SuiteReport suite_phi_iso(Workbench& wb, unsigned long long seed, int samples);

/// Commutator depth additivity on SHO: group commutators of depth-i and
/// depth-j samples land at depth >= i+j. Requires t = 1.
SuiteReport suite_normal_series(Workbench& wb, unsigned long long seed, int samples);

std::vector<SuiteReport> run_suites(Workbench& wb, const std::string& name,
                                    unsigned long long seed, int samples);

}  // namespace sho

#endif
