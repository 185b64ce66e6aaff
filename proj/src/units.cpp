#include "photon_ledger/units.hpp"

#include <string>

#include "photon_ledger/errors.hpp"

namespace photon_ledger {

UnitSystem parse_unit_system(std::string_view name) {
    if (name == "si" || name == "SI") return UnitSystem::si();
    if (name == "natural") return UnitSystem::natural();
    throw DomainError("unknown unit system '" + std::string(name) + "' (expected si|natural)");
}

}  // namespace photon_ledger
