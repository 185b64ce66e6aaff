#include "photon_ledger/carnot.hpp"

#include <cmath>
#include <string>

#include "photon_ledger/errors.hpp"
#include "photon_ledger/information.hpp"
#include "photon_ledger/thermo.hpp"

namespace photon_ledger::carnot {

namespace {

void require_temperatures(double T_C, double T_H) {
    if (!(T_C > 0.0) || !(T_H > 0.0) || !std::isfinite(T_C) || !std::isfinite(T_H)) {
        throw DomainError("temperatures must be positive and finite");
    }
    if (T_C > T_H) {
        throw DomainError("an amplifier only heats: T_C = " + std::to_string(T_C) +
                          " exceeds T_H = " + std::to_string(T_H));
    }
}

}  // namespace

AmplifierModel AmplifierModel::irreversible(double eps) {
    if (!(eps >= 0.0) || !std::isfinite(eps)) {
        throw DomainError("excess work fraction must be nonnegative, got " + std::to_string(eps));
    }
    return {eps};
}

std::string_view stroke_name(StrokeKind kind) noexcept {
    switch (kind) {
        case StrokeKind::IsothermalRead: return "isothermal_read";
        case StrokeKind::AdiabaticAmplification: return "adiabatic_amplification";
        case StrokeKind::IsothermalWrite: return "isothermal_write";
        case StrokeKind::FiberExpansion: return "fiber_expansion";
    }
    return "unknown";
}

double carnot_efficiency(double T_C, double T_H) {
    require_temperatures(T_C, T_H);
    return 1.0 - T_C / T_H;
}

double reversible_work(double Q_C, double T_C, double T_H) {
    require_temperatures(T_C, T_H);
    if (!(Q_C >= 0.0) || !std::isfinite(Q_C)) {
        throw DomainError("Q_C must be nonnegative and finite");
    }
    return Q_C * (T_H / T_C - 1.0);
}

CycleRecord cycle_from_heat(double Q_C, double T_C, double T_H, const AmplifierModel& model) {
    if (!(model.excess_work_fraction >= 0.0) || !std::isfinite(model.excess_work_fraction)) {
        throw DomainError("excess work fraction must be nonnegative");
    }
    CycleRecord r;
    r.T_C = T_C;
    r.T_H = T_H;
    r.Q_C = Q_C;
    r.W = (1.0 + model.excess_work_fraction) * reversible_work(Q_C, T_C, T_H);
    r.Q_H = Q_C + r.W;
    r.entropy_change_file = r.Q_H / T_H - r.Q_C / T_C;
    // The working medium returns to its initial state every cycle.
    r.entropy_change_amplifier = 0.0;
    r.entropy_change_total = r.entropy_change_file + r.entropy_change_amplifier;
    if (r.Q_H > 0.0) r.work_over_heat_out = r.W / r.Q_H;
    if (r.Q_C > 0.0) r.work_over_heat_in = r.W / r.Q_C;
    r.carnot_value = carnot_efficiency(T_C, T_H);
    return r;
}

CycleResult run_cycle(const PulseTrain& train_in, double target_occupancy,
                      const AmplifierModel& model, const UnitSystem& units) {
    const double n_C = train_in.level();
    if (!(n_C > 0.0)) {
        throw DomainError("amplifier input has no occupied level to read");
    }
    if (!(target_occupancy >= n_C) || !std::isfinite(target_occupancy)) {
        throw DomainError("target occupancy " + std::to_string(target_occupancy) +
                          " is below the input occupancy " + std::to_string(n_C));
    }
    const double nu = train_in.frequency();
    const double T_C = thermo::temperature_from_occupancy(nu, n_C, units);
    const double T_H = thermo::temperature_from_occupancy(nu, target_occupancy, units);
    const double Q_C = information::file_energy(train_in, units);
    CycleRecord record = cycle_from_heat(Q_C, T_C, T_H, model);
    if (target_occupancy == n_C) return {train_in, record};
    return {train_in.releveled(target_occupancy), record};
}

std::array<StrokeEntry, 4> stroke_ledger(const CycleRecord& r) {
    return {{
        {StrokeKind::IsothermalRead, r.T_C, r.Q_C, 0.0, r.T_C > 0.0 ? r.Q_C / r.T_C : 0.0},
        {StrokeKind::AdiabaticAmplification, r.T_C, 0.0, r.W, 0.0},
        {StrokeKind::IsothermalWrite, r.T_H, -r.Q_H, 0.0, r.T_H > 0.0 ? -r.Q_H / r.T_H : 0.0},
        {StrokeKind::FiberExpansion, r.T_H, 0.0, 0.0, 0.0},
    }};
}

}  // namespace photon_ledger::carnot
