#pragma once

// Lossy fiber spans. Attenuation scales every occupancy by the span
// transmission and leaves the zero/nonzero pattern alone: the pulses cool while
// the information rides through. Whether the pulse entropy is also conserved
// depends on the occupancy; the audit measures how far from adiabatic a span is.

#include <optional>

#include "photon_ledger/pulse_train.hpp"
#include "photon_ledger/units.hpp"

namespace photon_ledger::channel {

struct FiberSpan {
    double length_km = 0.0;             ///< > 0
    double attenuation_db_per_km = 0.0;  ///< >= 0

    void validate() const;
    [[nodiscard]] double loss_db() const noexcept { return length_km * attenuation_db_per_km; }
    /// g = 10^(-alpha d / 10), in (0, 1].
    [[nodiscard]] double transmission() const;
};

/// Power transmission of a loss given in dB.
[[nodiscard]] double transmission_from_db(double loss_db);

struct SpanAudit {
    bool pattern_preserved = true;
    /// pulse_entropy(n_after) - pulse_entropy(n_before) for one occupied pulse, <= 0.
    double entropy_change_per_pulse = 0.0;
    std::optional<double> temperature_before;
    std::optional<double> temperature_after;
    /// |entropy_change_per_pulse| within the audit tolerance.
    bool classical_adiabatic = true;
};

[[nodiscard]] PulseTrain transmit(const PulseTrain& train, const FiberSpan& span);

/// Temperature of a pulse of `occupancy` photons after a span of transmission `g`.
[[nodiscard]] double temperature_after_span(double frequency, double occupancy, double g,
                                            const UnitSystem& units);

/// Compares a train before and after a span. Throws AuditError on a length mismatch.
[[nodiscard]] SpanAudit adiabatic_audit(const PulseTrain& before, const PulseTrain& after,
                                        const UnitSystem& units, double tolerance = 0.0);

}  // namespace photon_ledger::channel
