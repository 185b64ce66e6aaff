#include "photon_ledger/link_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "photon_ledger/errors.hpp"
#include "photon_ledger/information.hpp"
#include "photon_ledger/kernels.hpp"
#include "photon_ledger/thermo.hpp"

namespace photon_ledger::link {

namespace {

// Relative slack on the occupancy floor, so that a span sized to land exactly
// on the floor is not failed by the last bit of 10^(-x/10).
constexpr double kFloorSlack = 1e-12;

// Relative second-law tolerance against the entropy throughput.
constexpr double kSecondLawTolerance = 1e-12;

bool meets_floor(double occupancy, double floor) {
    return occupancy >= floor * (1.0 - kFloorSlack);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

bool positive_finite(double x) { return x > 0.0 && std::isfinite(x); }
bool nonnegative_finite(double x) { return x >= 0.0 && std::isfinite(x); }

}  // namespace

void SimulationConfig::validate() const {
    require(positive_finite(frequency_hz), "frequency_hz must be positive");
    require(positive_finite(launch_occupancy), "launch_occupancy must be positive");
    require(nonnegative_finite(min_occupancy), "min_occupancy must be nonnegative");
    require(nonnegative_finite(adiabatic_tolerance), "adiabatic_tolerance must be nonnegative");
    require(estimator_order >= 1 && estimator_order <= kernels::kMaxBlockOrder,
            "estimator_order must be in [1, 64]");
    if (const auto* r = std::get_if<RandomBits>(&file)) {
        require(r->length >= 1, "random file length must be at least 1");
        require(r->bias >= 0.0 && r->bias <= 1.0, "random file bias must lie in [0, 1]");
    } else {
        require(!std::get<ExplicitBits>(file).bits.empty(), "explicit bit string is empty");
    }
    for (std::size_t i = 0; i < spans.size(); ++i) {
        try {
            spans[i].validate();
        } catch (const DomainError& e) {
            throw DomainError("span " + std::to_string(i) + ": " + e.what());
        }
    }
    for (std::size_t i = 0; i < amplifiers.size(); ++i) {
        const auto& a = amplifiers[i];
        const std::string where = "amplifier " + std::to_string(i) + ": ";
        require(a.after_span < spans.size(), where + "after_span is past the last span");
        require(nonnegative_finite(a.model.excess_work_fraction),
                where + "excess_work_fraction must be nonnegative");
        require(!a.target_occupancy || positive_finite(*a.target_occupancy),
                where + "target_occupancy must be positive");
    }
}

BitFile make_file(const SimulationConfig& config) {
    if (const auto* r = std::get_if<RandomBits>(&config.file)) {
        return BitFile::random(r->length, r->bias, config.seed);
    }
    return BitFile::from_string(std::get<ExplicitBits>(config.file).bits);
}

std::string_view stage_kind_name(StageKind kind) noexcept {
    return kind == StageKind::Span ? "span" : "amplifier";
}

Ledger run(const SimulationConfig& config) {
    config.validate();
    const UnitSystem& units = config.units;
    const BitFile file = make_file(config);

    Ledger ledger;
    ledger.launched_bits = file.to_string();
    auto& t = ledger.totals;
    t.information_nats = information::shannon_information(file, config.estimator_order).total_nats;

    PulseTrain train(file, config.frequency_hz, config.launch_occupancy);
    t.launch_energy = information::file_energy(train, units);
    t.min_occupancy = train.level();
    t.deficiency_max = information::entropy_deficiency(train.level(), t.information_nats, units);
    bool above_floor = meets_floor(train.level(), config.min_occupancy);

    std::vector<AmplifierSite> sites = config.amplifiers;
    std::stable_sort(sites.begin(), sites.end(),
                     [](const auto& a, const auto& b) { return a.after_span < b.after_span; });
    auto next_site = sites.begin();

    const auto book = [&](StageRecord rec) {
        rec.index = ledger.stages.size();
        t.entropy_universe += rec.entropy_production;
        rec.cumulative_entropy = t.entropy_universe;
        rec.occupancy_out = train.level();
        t.min_occupancy = std::min(t.min_occupancy, train.level());
        t.deficiency_max = std::max(
            t.deficiency_max, information::entropy_deficiency(train.level(), t.information_nats, units));
        above_floor = above_floor && meets_floor(train.level(), config.min_occupancy);
        ledger.stages.push_back(std::move(rec));
    };

    for (std::size_t s = 0; s < config.spans.size(); ++s) {
        const std::size_t stage = ledger.stages.size();
        PulseTrain after = channel::transmit(train, config.spans[s]);
        if (!(after.level() > 0.0)) {
            throw SimulationError(stage, "occupancy reaches 0 in span " + std::to_string(s));
        }
        auto audit = channel::adiabatic_audit(train, after, units, config.adiabatic_tolerance);
        ledger.pattern_preserved = ledger.pattern_preserved && audit.pattern_preserved;

        StageRecord rec;
        rec.kind = StageKind::Span;
        rec.span = s;
        rec.Q_in = information::file_energy(train, units);
        rec.Q_out = information::file_energy(after, units);
        rec.T_H = audit.temperature_before;
        rec.T_C = audit.temperature_after;
        t.Q_dissipated += rec.Q_in - rec.Q_out;
        rec.detail = audit;
        train = std::move(after);
        book(std::move(rec));

        for (; next_site != sites.end() && next_site->after_span == s; ++next_site) {
            const std::size_t amp_stage = ledger.stages.size();
            const double target = next_site->target_occupancy.value_or(config.launch_occupancy);
            if (target < train.level()) {
                throw SimulationError(amp_stage, "amplifier target occupancy " +
                                                     std::to_string(target) +
                                                     " is below its input occupancy " +
                                                     std::to_string(train.level()));
            }
            auto [out, cycle] = carnot::run_cycle(train, target, next_site->model, units);

            StageRecord arec;
            arec.kind = StageKind::Amplifier;
            arec.span = s;
            arec.Q_in = cycle.Q_C;
            arec.Q_out = information::file_energy(out, units);
            arec.W = cycle.W;
            arec.T_C = cycle.T_C;
            arec.T_H = cycle.T_H;
            arec.entropy_production = cycle.entropy_change_total;
            t.W_total += cycle.W;
            t.Q_dissipated += cycle.Q_H - arec.Q_out;
            t.entropy_throughput += cycle.Q_H / cycle.T_H;
            arec.detail = cycle;
            train = std::move(out);
            book(std::move(arec));
        }
    }

    t.final_energy = information::file_energy(train, units);
    ledger.final_bits = train.pattern().to_string();
    ledger.pattern_preserved = ledger.pattern_preserved && ledger.final_bits == ledger.launched_bits;
    ledger.integrity = ledger.pattern_preserved && above_floor;
    return ledger;
}

SecondLawVerdict second_law_audit(const Ledger& ledger) {
    SecondLawVerdict v;
    v.margin = ledger.totals.entropy_universe;
    v.tolerance = kSecondLawTolerance * ledger.totals.entropy_throughput;
    v.pass = v.margin >= -v.tolerance;
    return v;
}

double naive_amplification_entropy_gap(double Q, double T_C, double T_H) {
    require(positive_finite(T_C) && positive_finite(T_H), "temperatures must be positive");
    require(T_C <= T_H, "amplification needs T_C <= T_H");
    require(nonnegative_finite(Q), "Q must be nonnegative");
    return Q / T_H - Q / T_C;
}

namespace {

void validate_problem(const PlacementProblem& p) {
    require(nonnegative_finite(p.total_length_km), "total_length_km must be nonnegative");
    require(nonnegative_finite(p.attenuation_db_per_km), "attenuation_db_per_km must be nonnegative");
    require(positive_finite(p.launch_occupancy), "launch_occupancy must be positive");
    require(nonnegative_finite(p.min_occupancy), "min_occupancy must be nonnegative");
    require(positive_finite(p.frequency_hz), "frequency_hz must be positive");
    require(nonnegative_finite(p.launch_energy), "launch_energy must be nonnegative");
    if (p.min_occupancy >= p.launch_occupancy) {
        throw DomainError("infeasible: min_occupancy " + std::to_string(p.min_occupancy) +
                          " is not below launch_occupancy " + std::to_string(p.launch_occupancy));
    }
}

// Same arithmetic as a FiberSpan of length total/N, so the sweep and a full
// simulation of the same link agree to rounding.
double span_transmission(const PlacementProblem& p, std::size_t count) {
    const double span_length = p.total_length_km / static_cast<double>(count);
    return channel::transmission_from_db(span_length * p.attenuation_db_per_km);
}

SweepRow evaluate(const PlacementProblem& p, std::size_t count) {
    SweepRow row;
    row.count = count;
    row.span_loss_db = p.total_loss_db() / static_cast<double>(count);
    row.span_transmission = span_transmission(p, count);
    row.min_occupancy = p.launch_occupancy * row.span_transmission;
    row.feasible = row.min_occupancy > 0.0 && meets_floor(row.min_occupancy, p.min_occupancy);
    const double n = static_cast<double>(count);
    row.W_classical = n * p.launch_energy * (1.0 - row.span_transmission);
    if (row.min_occupancy > 0.0) {
        const double T_C = thermo::temperature_from_occupancy(p.frequency_hz, row.min_occupancy, p.units);
        const double T_H = thermo::temperature_from_occupancy(p.frequency_hz, p.launch_occupancy, p.units);
        row.W_total = n * carnot::reversible_work(p.launch_energy * row.span_transmission, T_C, T_H);
    } else {
        row.W_total = std::numeric_limits<double>::infinity();
    }
    return row;
}

}  // namespace

PlacementResult optimize_placement(const PlacementProblem& problem) {
    validate_problem(problem);
    PlacementResult result;
    const double loss = problem.total_loss_db();
    if (loss == 0.0) {
        result.min_occupancy = problem.launch_occupancy;
        result.slack = problem.launch_occupancy - problem.min_occupancy;
        return result;
    }

    // Work grows with N at fixed total loss, so the fewest feasible spans win.
    const double max_span_loss =
        problem.min_occupancy > 0.0
            ? 10.0 * std::log10(problem.launch_occupancy / problem.min_occupancy)
            : std::numeric_limits<double>::infinity();
    const double estimate = std::ceil(loss / max_span_loss);
    std::size_t count = std::max<std::size_t>(1, static_cast<std::size_t>(estimate));
    while (!evaluate(problem, count).feasible) ++count;
    while (count > 1 && evaluate(problem, count - 1).feasible) --count;

    const SweepRow best = evaluate(problem, count);
    result.count = count;
    result.span_transmission = best.span_transmission;
    result.W_total = best.W_total;
    result.W_classical = best.W_classical;
    result.min_occupancy = best.min_occupancy;
    result.slack = best.min_occupancy - problem.min_occupancy;
    result.positions_km.reserve(count);
    for (std::size_t k = 1; k <= count; ++k) {
        result.positions_km.push_back(problem.total_length_km * static_cast<double>(k) /
                                      static_cast<double>(count));
    }
    return result;
}

std::vector<SweepRow> placement_sweep(const PlacementProblem& problem, std::size_t max_count) {
    validate_problem(problem);
    std::vector<SweepRow> rows;
    rows.reserve(max_count);
    for (std::size_t n = 1; n <= max_count; ++n) rows.push_back(evaluate(problem, n));
    return rows;
}

SimulationConfig uniform_link(const PlacementProblem& problem, std::size_t count, FileSource file,
                              std::uint64_t seed) {
    SimulationConfig c;
    c.frequency_hz = problem.frequency_hz;
    c.launch_occupancy = problem.launch_occupancy;
    c.file = std::move(file);
    c.min_occupancy = problem.min_occupancy;
    c.units = problem.units;
    c.seed = seed;
    const double span_length = count > 0 ? problem.total_length_km / static_cast<double>(count) : 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        c.spans.push_back({span_length, problem.attenuation_db_per_km});
        c.amplifiers.push_back({k, carnot::AmplifierModel::reversible(), std::nullopt});
    }
    return c;
}

}  // namespace photon_ledger::link
