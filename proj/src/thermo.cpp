#include "photon_ledger/thermo.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "photon_ledger/errors.hpp"

namespace photon_ledger::thermo {

namespace {

// exp(x) overflows a double beyond this.
const double kMaxExponent = std::log(std::numeric_limits<double>::max());

// Above this occupancy the shortfall 1 - n ln(1 + 1/n) is summed as a series in
// 1/n; below it the closed form has no harmful cancellation.
constexpr double kSeriesOccupancy = 1e3;

void require_frequency(double frequency) {
    if (!(frequency > 0.0) || !std::isfinite(frequency)) {
        throw DomainError("frequency must be positive and finite, got " + std::to_string(frequency));
    }
}

void require_occupancy(double occupancy) {
    if (!(occupancy >= 0.0) || !std::isfinite(occupancy)) {
        throw DomainError("occupancy must be nonnegative and finite, got " + std::to_string(occupancy));
    }
}

}  // namespace

void PhotonMode::validate() const {
    require_frequency(frequency);
    require_occupancy(occupancy);
}

double occupancy_from_temperature(double frequency, double temperature, const UnitSystem& units) {
    require_frequency(frequency);
    if (!(temperature > 0.0) || !std::isfinite(temperature)) {
        throw DomainError("temperature must be positive and finite, got " + std::to_string(temperature));
    }
    const double x = units.photon_energy(frequency) / (units.k_B * temperature);
    if (!(x <= kMaxExponent)) return 0.0;
    const double n = 1.0 / std::expm1(x);
    if (!std::isfinite(n)) {
        throw DomainError("temperature too high for a representable occupancy");
    }
    return n;
}

double temperature_from_occupancy(double frequency, double occupancy, const UnitSystem& units) {
    require_frequency(frequency);
    require_occupancy(occupancy);
    if (occupancy == 0.0) {
        throw UndefinedTemperature("an empty mode has no temperature");
    }
    return units.photon_energy(frequency) / (units.k_B * std::log1p(1.0 / occupancy));
}

double entropy_shortfall(double occupancy) {
    require_occupancy(occupancy);
    if (occupancy == 0.0) return 1.0;
    if (occupancy < kSeriesOccupancy) {
        return 1.0 - occupancy * std::log1p(1.0 / occupancy);
    }
    // 1 - n ln(1 + x), x = 1/n:  x/2 - x^2/3 + x^3/4 - ... ; truncation error < x^8/9.
    const double x = 1.0 / occupancy;
    double sum = 0.0;
    for (int k = 8; k >= 2; --k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum = sign / k + x * sum;
    }
    return x * sum;
}

double pulse_entropy(double occupancy, const UnitSystem& units) {
    require_occupancy(occupancy);
    if (occupancy == 0.0) return 0.0;
    if (occupancy < kSeriesOccupancy) {
        return units.k_B * occupancy * std::log1p(1.0 / occupancy);
    }
    const double s = units.k_B * (1.0 - entropy_shortfall(occupancy));
    // Past n ~ 1e16 the shortfall drops below half an ulp of k_B.
    return s < units.k_B ? s : std::nextafter(units.k_B, 0.0);
}

double pulse_energy(double frequency, double occupancy, const UnitSystem& units) {
    require_frequency(frequency);
    require_occupancy(occupancy);
    return occupancy * units.photon_energy(frequency);
}

PulseThermo pulse_thermo(const PhotonMode& mode, const UnitSystem& units) {
    mode.validate();
    PulseThermo out{pulse_energy(mode.frequency, mode.occupancy, units), std::nullopt,
                    pulse_entropy(mode.occupancy, units)};
    if (mode.occupancy > 0.0) {
        out.temperature = temperature_from_occupancy(mode.frequency, mode.occupancy, units);
    }
    return out;
}

}  // namespace photon_ledger::thermo
