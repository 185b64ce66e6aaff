#pragma once

// Entropy and information of a whole pulse train.
//
// Two quantities are kept apart on purpose: the mixing entropy of the slot
// ensemble (k_B ln 2 per slot for a fair file, k_B L ln 2 in total) and the
// per-pulse transport entropy S(n) from thermo.hpp (at most k_B). The entropy
// deficiency ties them together at finite occupancy.
//
// Everything is in nats internally. The bits convention exists only for the
// file temperature, where it turns T = Q/S into the harmonic-oscillator form
// T = q / 2k_B for a random file.

#include <cstddef>
#include <optional>

#include "photon_ledger/pulse_train.hpp"
#include "photon_ledger/units.hpp"

namespace photon_ledger::information {

enum class EntropyConvention { Nats, Bits };

struct InformationMeasure {
    double total_nats = 0.0;
    double per_symbol_nats = 0.0;  ///< in [0, ln 2]
    int order = 1;
};

struct FileThermoState {
    double energy = 0.0;                ///< Q, sum of pulse energies
    double entropy = 0.0;               ///< S, mixing entropy of the slot ensemble
    std::optional<double> temperature;  ///< Q/S under `convention`; absent when S == 0
    EntropyConvention convention = EntropyConvention::Nats;
};

/// H(p) = -[p ln p + (1-p) ln(1-p)], 0 ln 0 = 0.
[[nodiscard]] double mixing_entropy_per_slot(double p);

/// k_B L H(p).
[[nodiscard]] double file_entropy(std::size_t length, double p, const UnitSystem& units);

/// Capacity entropy k_B L ln 2, the largest mixing entropy an L-slot train can hold.
[[nodiscard]] double capacity_entropy(std::size_t length, const UnitSystem& units);

/// Plug-in block-entropy estimate of the information in `file`, using all
/// overlapping blocks of `order` bits. Throws InsufficientData when the file
/// is shorter than one block.
[[nodiscard]] InformationMeasure shannon_information(const BitFile& file, int order = 1);

/// Occupied slots times the per-pulse energy.
[[nodiscard]] double file_energy(const PulseTrain& train, const UnitSystem& units);

/// Q/S. Throws UndefinedTemperature when S == 0.
[[nodiscard]] double file_temperature(double energy, double entropy, EntropyConvention convention);

/// Q, S and T of a train; S is k_B L H(p) at the empirical fraction of ones.
[[nodiscard]] FileThermoState file_thermo_state(const PulseTrain& train,
                                                EntropyConvention convention,
                                                const UnitSystem& units);

/// S_physical - k_B I. Nonnegative whenever the Clausius inequality holds.
[[nodiscard]] double clausius_margin(double physical_entropy, double information_nats,
                                     const UnitSystem& units);

/// k_B I - S(Q), with S(Q) taken as I * pulse_entropy(n): the share of the
/// logical information not backed by physical entropy at occupancy n.
[[nodiscard]] double entropy_deficiency(double occupancy, double information_nats,
                                        const UnitSystem& units);

}  // namespace photon_ledger::information
