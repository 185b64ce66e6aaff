#include "photon_ledger/channel.hpp"

#include <cmath>
#include <string>

#include "photon_ledger/errors.hpp"
#include "photon_ledger/thermo.hpp"

namespace photon_ledger::channel {

void FiberSpan::validate() const {
    if (!(length_km > 0.0) || !std::isfinite(length_km)) {
        throw DomainError("span length must be positive and finite, got " +
                          std::to_string(length_km));
    }
    if (!(attenuation_db_per_km >= 0.0) || !std::isfinite(attenuation_db_per_km)) {
        throw DomainError("span attenuation must be nonnegative and finite, got " +
                          std::to_string(attenuation_db_per_km));
    }
}

double transmission_from_db(double loss_db) {
    if (!(loss_db >= 0.0) || !std::isfinite(loss_db)) {
        throw DomainError("loss must be nonnegative and finite, got " + std::to_string(loss_db));
    }
    const double g = std::pow(10.0, -loss_db / 10.0);
    if (!(g > 0.0)) throw DomainError("loss of " + std::to_string(loss_db) + " dB underflows");
    return g;
}

double FiberSpan::transmission() const {
    validate();
    return transmission_from_db(loss_db());
}

PulseTrain transmit(const PulseTrain& train, const FiberSpan& span) {
    const double g = span.transmission();
    if (g == 1.0) return train;
    return train.scaled(g);
}

double temperature_after_span(double frequency, double occupancy, double g,
                              const UnitSystem& units) {
    if (!(g > 0.0 && g <= 1.0)) {
        throw DomainError("transmission must lie in (0, 1], got " + std::to_string(g));
    }
    if (occupancy == 0.0) throw UndefinedTemperature("an empty mode has no temperature");
    return thermo::temperature_from_occupancy(frequency, g * occupancy, units);
}

SpanAudit adiabatic_audit(const PulseTrain& before, const PulseTrain& after,
                          const UnitSystem& units, double tolerance) {
    if (before.size() != after.size()) {
        throw AuditError("trains differ in length: " + std::to_string(before.size()) + " vs " +
                         std::to_string(after.size()));
    }
    SpanAudit audit;
    audit.pattern_preserved = before.same_pattern(after);

    const double n0 = before.level();
    const double n1 = after.level();
    // S(n1) - S(n0) = k_B [(1 - S(n0)/k_B) - (1 - S(n1)/k_B)], free of cancellation near k_B.
    audit.entropy_change_per_pulse =
        units.k_B * (thermo::entropy_shortfall(n0) - thermo::entropy_shortfall(n1));
    if (n0 > 0.0) {
        audit.temperature_before = thermo::temperature_from_occupancy(before.frequency(), n0, units);
    }
    if (n1 > 0.0) {
        audit.temperature_after = thermo::temperature_from_occupancy(after.frequency(), n1, units);
    }
    audit.classical_adiabatic = std::abs(audit.entropy_change_per_pulse) <= tolerance;
    return audit;
}

}  // namespace photon_ledger::channel
