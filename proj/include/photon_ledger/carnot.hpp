#pragma once

// The amplifier as a four-stroke cycle:
//
//   1. isothermal read at T_C   heat Q_C flows from the pulses into the amplifier
//   2. adiabatic amplification  work W is invested, no entropy change
//   3. isothermal write at T_H  heat Q_H = Q_C + W leaves with the pulses
//   4. fiber attenuation        adiabatic expansion back to T_C (channel.hpp)
//
// Reversibility means Q_H/T_H = Q_C/T_C, which fixes W = Q_C (T_H/T_C - 1) and
// gives W/Q_H = 1 - T_C/T_H. An irreversible amplifier spends (1 + eps) times
// that work; the excess is dissipated at T_H and shows up as
// Q_H/T_H - Q_C/T_C = eps W_rev / T_H > 0.

#include <array>
#include <optional>
#include <string_view>

#include "photon_ledger/pulse_train.hpp"
#include "photon_ledger/units.hpp"

namespace photon_ledger::carnot {

struct AmplifierModel {
    double excess_work_fraction = 0.0;  ///< eps >= 0; 0 is the reversible amplifier

    [[nodiscard]] static constexpr AmplifierModel reversible() noexcept { return {0.0}; }
    [[nodiscard]] static AmplifierModel irreversible(double eps);
    [[nodiscard]] bool is_reversible() const noexcept { return excess_work_fraction == 0.0; }
};

struct CycleRecord {
    double T_C = 0.0;
    double T_H = 0.0;
    double Q_C = 0.0;
    double Q_H = 0.0;
    double W = 0.0;
    double entropy_change_file = 0.0;       ///< pulses: Q_H/T_H - Q_C/T_C
    double entropy_change_amplifier = 0.0;  ///< amplifier working medium over a closed cycle
    double entropy_change_total = 0.0;      ///< production, >= 0
    std::optional<double> work_over_heat_out;  ///< W/Q_H, absent when Q_H == 0
    std::optional<double> work_over_heat_in;   ///< W/Q_C, absent when Q_C == 0
    double carnot_value = 0.0;                 ///< 1 - T_C/T_H
};

struct CycleResult {
    PulseTrain train;
    CycleRecord record;
};

enum class StrokeKind { IsothermalRead, AdiabaticAmplification, IsothermalWrite, FiberExpansion };

struct StrokeEntry {
    StrokeKind kind;
    double temperature;     ///< temperature at which the stroke runs (T_C, T_H, or start of it)
    double heat;            ///< heat into the amplifier, J
    double work;            ///< work invested, J
    double entropy_change;  ///< amplifier-side entropy change, J/K
};

[[nodiscard]] std::string_view stroke_name(StrokeKind kind) noexcept;

/// 1 - T_C/T_H. Requires 0 < T_C <= T_H.
[[nodiscard]] double carnot_efficiency(double T_C, double T_H);

/// Q_C (T_H/T_C - 1): the work that restores Q_H/T_H = Q_C/T_C.
[[nodiscard]] double reversible_work(double Q_C, double T_C, double T_H);

/// Reads `train_in`, amplifies its occupied pulses to `target_occupancy` and writes them out.
/// Temperatures come from the exact single-mode relation at both occupancies.
[[nodiscard]] CycleResult run_cycle(const PulseTrain& train_in, double target_occupancy,
                                    const AmplifierModel& model, const UnitSystem& units);

/// Record built from heats and temperatures directly, without a pulse train.
[[nodiscard]] CycleRecord cycle_from_heat(double Q_C, double T_C, double T_H,
                                          const AmplifierModel& model);

/// Per-stroke decomposition. The entropy entries sum to -entropy_change_total.
[[nodiscard]] std::array<StrokeEntry, 4> stroke_ledger(const CycleRecord& record);

}  // namespace photon_ledger::carnot
