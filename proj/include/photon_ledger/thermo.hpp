#pragma once

// Planck single-mode relations for a coherent pulse treated as the emission of
// a blackbody into one radiation mode:
//
//   n = 1 / (exp(h nu / k_B T) - 1)        occupancy of the mode at temperature T
//   T = h nu / (k_B ln(1 + 1/n))           inverse of the above
//   S = n k_B ln(1 + 1/n)                  entropy carried by the pulse (= q / T)
//   q = n h nu                             pulse energy
//
// S rises from 0 (empty mode) to k_B (classical limit) and never reaches k_B.

#include <optional>

#include "photon_ledger/units.hpp"

namespace photon_ledger::thermo {

/// One radiation mode: its frequency and mean photon number. The occupancy is
/// a nonnegative real because attenuation scales the mean continuously.
struct PhotonMode {
    double frequency;  ///< Hz, > 0
    double occupancy;  ///< >= 0

    /// Throws DomainError if the mode is not physical.
    void validate() const;
};

/// Energy, temperature and entropy of a single pulse.
struct PulseThermo {
    double energy;                      ///< q = n h nu
    std::optional<double> temperature;  ///< absent for an empty mode
    double entropy;                     ///< in [0, k_B)
};

/// Bose occupancy of a mode at temperature T. Returns 0 once h nu / k_B T
/// exceeds the largest exponent whose exp is representable.
[[nodiscard]] double occupancy_from_temperature(double frequency, double temperature,
                                                const UnitSystem& units);

/// Blackbody-equivalent temperature of a mode holding `occupancy` photons.
/// Throws UndefinedTemperature for n == 0.
[[nodiscard]] double temperature_from_occupancy(double frequency, double occupancy,
                                                const UnitSystem& units);

/// Entropy carried by a pulse of `occupancy` photons, S(0) = 0.
[[nodiscard]] double pulse_entropy(double occupancy, const UnitSystem& units);

/// 1 - S(n)/k_B, evaluated without cancellation so that it stays accurate in
/// the classical limit where it behaves like 1/(2n).
[[nodiscard]] double entropy_shortfall(double occupancy);

[[nodiscard]] double pulse_energy(double frequency, double occupancy, const UnitSystem& units);

[[nodiscard]] PulseThermo pulse_thermo(const PhotonMode& mode, const UnitSystem& units);

}  // namespace photon_ledger::thermo
