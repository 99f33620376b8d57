#ifndef SHO_RESTRICTED_HPP
#define SHO_RESTRICTED_HPP

#include <map>
#include <optional>
#include <string>

#include "sho/cartan.hpp"

namespace sho {

/// f |-> D^k(f) by k-fold application; the independent oracle for p_power.
SuperElement apply_times(const Derivation& d, SuperElement f, int k);

/// The p-th power of an even derivation, reassembled from its values on the
/// 2m generators. Requires t = 1 (only then is O generated by the x_r);
/// rejects odd input (odd elements carry no p-power in a restricted
/// superalgebra).
Derivation p_power(const Derivation& d);

struct PPowerResult {
    Derivation input;
    Derivation power;
    std::map<AlgebraTag, bool> membership;
};

PPowerResult p_power_result(Workbench& wb, const Derivation& d,
                            const std::vector<AlgebraTag>& tags);

struct RestrictedReport {
    AlgebraTag tag;
    bool restricted = false;
    std::optional<Derivation> witness;  // even element whose p-power escapes
    std::string note;
};

/// Restrictedness of the built algebra: every even basis element must have a
/// p-power inside it. For t = 1 the p-power is reassembled from generators;
/// for t != 1 the check works through ad-powers, looking first for the
/// degree-(-p) obstruction (ad D_i)^p != 0.
RestrictedReport is_restricted(Workbench& wb, AlgebraTag tag);

}  // namespace sho

#endif
