#include "photon_ledger/information.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "photon_ledger/errors.hpp"
#include "photon_ledger/kernels.hpp"
#include "photon_ledger/thermo.hpp"

namespace photon_ledger::information {

using std::numbers::ln2;

double mixing_entropy_per_slot(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("probability must lie in [0, 1], got " + std::to_string(p));
    }
    if (p == 0.0 || p == 1.0) return 0.0;
    return -(p * std::log(p) + (1.0 - p) * std::log1p(-p));
}

double file_entropy(std::size_t length, double p, const UnitSystem& units) {
    if (length == 0) throw DomainError("file length must be at least 1");
    return units.k_B * static_cast<double>(length) * mixing_entropy_per_slot(p);
}

double capacity_entropy(std::size_t length, const UnitSystem& units) {
    return units.k_B * static_cast<double>(length) * ln2;
}

InformationMeasure shannon_information(const BitFile& file, int order) {
    const auto counts = kernels::count_blocks(file.bits(), order);
    InformationMeasure out;
    out.order = order;
    // H_k <= k ln 2 holds exactly; the clamp only absorbs rounding in the last ulp.
    out.per_symbol_nats = std::min(kernels::plugin_entropy(counts) / order, ln2);
    out.total_nats = static_cast<double>(file.size()) * out.per_symbol_nats;
    return out;
}

double file_energy(const PulseTrain& train, const UnitSystem& units) {
    if (train.level() == 0.0) return 0.0;
    const double q = thermo::pulse_energy(train.frequency(), train.level(), units);
    return static_cast<double>(train.occupied()) * q;
}

double file_temperature(double energy, double entropy, EntropyConvention convention) {
    if (!(entropy > 0.0)) throw UndefinedTemperature("file temperature needs S > 0");
    if (!(energy >= 0.0)) throw DomainError("file energy must be nonnegative");
    const double s = convention == EntropyConvention::Bits ? entropy / ln2 : entropy;
    return energy / s;
}

FileThermoState file_thermo_state(const PulseTrain& train, EntropyConvention convention,
                                  const UnitSystem& units) {
    FileThermoState out;
    out.convention = convention;
    out.energy = file_energy(train, units);
    const double p = static_cast<double>(train.occupied()) / static_cast<double>(train.size());
    out.entropy = file_entropy(train.size(), p, units);
    if (out.entropy > 0.0) {
        out.temperature = file_temperature(out.energy, out.entropy, convention);
    }
    return out;
}

double clausius_margin(double physical_entropy, double information_nats, const UnitSystem& units) {
    return physical_entropy - units.k_B * information_nats;
}

double entropy_deficiency(double occupancy, double information_nats, const UnitSystem& units) {
    if (!(information_nats >= 0.0)) {
        throw DomainError("information must be nonnegative");
    }
    return units.k_B * information_nats * thermo::entropy_shortfall(occupancy);
}

}  // namespace photon_ledger::information
