#pragma once

// End-to-end link simulation: a file is launched into a chain of fiber spans
// with amplifier cycles between them, and every stage is booked into a ledger
// of energy, work and entropy production.
//
// Bookkeeping conventions:
//  - a span is an adiabatic stroke; it produces no entropy in the ledger, its
//    finite-occupancy pulse entropy change is reported by the span audit, and
//    the absorbed energy counts as dissipated heat;
//  - an amplifier produces Q_H/T_H - Q_C/T_C, with T_C and T_H from the exact
//    single-mode temperatures at the actual occupancies. The difference between
//    Q_H and the energy of the pulses it writes is exchanged with its reservoir
//    at T_H and booked as dissipated heat (negative when the reservoir supplies it).
// With these, launch energy + total work - final energy == dissipated heat.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "photon_ledger/carnot.hpp"
#include "photon_ledger/channel.hpp"
#include "photon_ledger/pulse_train.hpp"
#include "photon_ledger/units.hpp"

namespace photon_ledger::link {

struct ExplicitBits {
    std::string bits;  ///< '0'/'1' characters
};

struct RandomBits {
    std::size_t length = 1024;
    double bias = 0.5;  ///< probability of a 1
};

using FileSource = std::variant<ExplicitBits, RandomBits>;

struct AmplifierSite {
    std::size_t after_span = 0;  ///< index of the span this amplifier follows
    carnot::AmplifierModel model;
    std::optional<double> target_occupancy;  ///< defaults to the launch occupancy
};

inline constexpr double kDefaultFrequencyHz = 1.934e14;  // 1550 nm

struct SimulationConfig {
    double frequency_hz = kDefaultFrequencyHz;
    double launch_occupancy = 1e6;
    FileSource file = RandomBits{};
    std::vector<channel::FiberSpan> spans;
    std::vector<AmplifierSite> amplifiers;
    double min_occupancy = 0.0;        ///< integrity floor
    double adiabatic_tolerance = 0.0;  ///< J/K per pulse
    int estimator_order = 1;
    UnitSystem units = UnitSystem::natural();
    std::uint64_t seed = 0;

    /// Throws DomainError on the first invalid field.
    void validate() const;
};

/// The file a config launches. Random files depend only on (length, bias, seed).
[[nodiscard]] BitFile make_file(const SimulationConfig& config);

enum class StageKind { Span, Amplifier };

[[nodiscard]] std::string_view stage_kind_name(StageKind kind) noexcept;

struct StageRecord {
    std::size_t index = 0;
    StageKind kind = StageKind::Span;
    std::size_t span = 0;  ///< span index, or the span an amplifier follows
    double Q_in = 0.0;
    double Q_out = 0.0;
    double W = 0.0;
    std::optional<double> T_C;  ///< span: temperature after; amplifier: read temperature
    std::optional<double> T_H;  ///< span: temperature before; amplifier: write temperature
    double entropy_production = 0.0;
    double cumulative_entropy = 0.0;
    double occupancy_out = 0.0;
    std::variant<channel::SpanAudit, carnot::CycleRecord> detail;
};

struct LedgerTotals {
    double launch_energy = 0.0;
    double final_energy = 0.0;
    double W_total = 0.0;
    double Q_dissipated = 0.0;
    double entropy_universe = 0.0;
    double entropy_throughput = 0.0;  ///< sum of Q_H/T_H over amplifier cycles
    double deficiency_max = 0.0;
    double information_nats = 0.0;
    double min_occupancy = 0.0;
};

struct Ledger {
    std::vector<StageRecord> stages;
    LedgerTotals totals;
    bool pattern_preserved = true;
    bool integrity = true;  ///< pattern preserved and occupancy never below the floor
    std::string launched_bits;
    std::string final_bits;
};

[[nodiscard]] Ledger run(const SimulationConfig& config);

struct SecondLawVerdict {
    bool pass = true;
    double margin = 0.0;     ///< entropy change of the universe, J/K
    double tolerance = 0.0;  ///< allowed negative slack, J/K
};

[[nodiscard]] SecondLawVerdict second_law_audit(const Ledger& ledger);

/// Q/T_H - Q/T_C: the entropy balance of an amplifier that adds no work. Never positive.
[[nodiscard]] double naive_amplification_entropy_gap(double Q, double T_C, double T_H);

// ---------------------------------------------------------------------------
// Amplifier placement on a uniform link

struct PlacementProblem {
    double total_length_km = 0.0;
    double attenuation_db_per_km = 0.0;
    double launch_occupancy = 1e6;
    double min_occupancy = 0.0;
    double frequency_hz = kDefaultFrequencyHz;
    double launch_energy = 1.0;  ///< Q0, energy of the launched file
    UnitSystem units = UnitSystem::natural();

    [[nodiscard]] double total_loss_db() const noexcept {
        return total_length_km * attenuation_db_per_km;
    }
};

struct PlacementResult {
    std::size_t count = 0;             ///< N amplifiers = N equal spans
    std::vector<double> positions_km;  ///< amplifier k sits at k * length / N
    double span_transmission = 1.0;
    double W_total = 0.0;              ///< with exact single-mode temperatures
    double W_classical = 0.0;          ///< N Q0 (1 - s)
    double min_occupancy = 0.0;        ///< lowest occupancy on the link
    double slack = 0.0;                ///< min_occupancy - floor
};

struct SweepRow {
    std::size_t count = 0;
    bool feasible = false;
    double span_loss_db = 0.0;
    double span_transmission = 1.0;
    double min_occupancy = 0.0;
    double W_total = 0.0;
    double W_classical = 0.0;
};

/// Minimum-work uniform placement. Throws DomainError if the floor is at or above
/// the launch occupancy.
[[nodiscard]] PlacementResult optimize_placement(const PlacementProblem& problem);

/// Work and feasibility for N = 1..max_count equal spans.
[[nodiscard]] std::vector<SweepRow> placement_sweep(const PlacementProblem& problem,
                                                    std::size_t max_count);

/// A link of `count` equal spans covering the problem length, each followed by a
/// reversible amplifier restoring the launch occupancy.
[[nodiscard]] SimulationConfig uniform_link(const PlacementProblem& problem, std::size_t count,
                                            FileSource file, std::uint64_t seed = 0);

}  // namespace photon_ledger::link
