#pragma once

#include <string_view>

namespace photon_ledger {

enum class UnitKind { SI, Natural };

/// Constants used by every thermodynamic relation in the library.
///
/// SI carries the exact 2019 SI values of h and k_B. Natural measures energy in
/// photon quanta (h*nu == 1 for every frequency) and temperature in energy
/// units (k_B == 1); frequencies are still validated but do not scale energy.
struct UnitSystem {
    UnitKind kind = UnitKind::Natural;
    double h = 1.0;    ///< Planck constant, energy * time
    double k_B = 1.0;  ///< Boltzmann constant, energy / temperature

    static constexpr double kPlanckSI = 6.62607015e-34;     // J s
    static constexpr double kBoltzmannSI = 1.380649e-23;    // J/K

    [[nodiscard]] static constexpr UnitSystem si() noexcept {
        return {UnitKind::SI, kPlanckSI, kBoltzmannSI};
    }
    [[nodiscard]] static constexpr UnitSystem natural() noexcept {
        return {UnitKind::Natural, 1.0, 1.0};
    }

    /// Energy of one photon at frequency `nu`.
    [[nodiscard]] constexpr double photon_energy(double nu) const noexcept {
        return kind == UnitKind::Natural ? 1.0 : h * nu;
    }

    [[nodiscard]] constexpr std::string_view name() const noexcept {
        return kind == UnitKind::Natural ? "natural" : "si";
    }
};

/// Parses "si" or "natural"; throws DomainError otherwise.
UnitSystem parse_unit_system(std::string_view name);

}  // namespace photon_ledger
