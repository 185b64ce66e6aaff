#include "photon_ledger/report.hpp"

#include <optional>

#include <fmt/format.h>
#include <json.hpp>

#include "photon_ledger/carnot.hpp"

namespace photon_ledger::report {

namespace {

using Json = nlohmann::ordered_json;

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::string optional_cell(const std::optional<double>& v) { return v ? exact(*v) : std::string(); }

Json cycle_json(const carnot::CycleRecord& r) {
    Json j;
    j["T_C"] = r.T_C;
    j["T_H"] = r.T_H;
    j["Q_C"] = r.Q_C;
    j["Q_H"] = r.Q_H;
    j["W"] = r.W;
    j["dS_file"] = r.entropy_change_file;
    j["dS_amplifier"] = r.entropy_change_amplifier;
    j["dS_total"] = r.entropy_change_total;
    j["W_over_Q_H"] = optional_number(r.work_over_heat_out);
    j["W_over_Q_C"] = optional_number(r.work_over_heat_in);
    j["carnot_value"] = r.carnot_value;
    Json strokes = Json::array();
    for (const auto& s : carnot::stroke_ledger(r)) {
        Json e;
        e["stroke"] = carnot::stroke_name(s.kind);
        e["temperature"] = s.temperature;
        e["heat"] = s.heat;
        e["work"] = s.work;
        e["dS_amplifier_side"] = s.entropy_change;
        strokes.push_back(std::move(e));
    }
    j["strokes"] = std::move(strokes);
    return j;
}

Json audit_json(const channel::SpanAudit& a) {
    Json j;
    j["pattern_preserved"] = a.pattern_preserved;
    j["dS_per_pulse"] = a.entropy_change_per_pulse;
    j["T_before"] = optional_number(a.temperature_before);
    j["T_after"] = optional_number(a.temperature_after);
    j["classical_adiabatic"] = a.classical_adiabatic;
    return j;
}

}  // namespace

std::string exact(double value) { return fmt::format("{:.17g}", value); }

std::string human(double value) { return fmt::format("{:.6g}", value); }

std::string ledger_json(const link::Ledger& ledger, const link::SimulationConfig& config) {
    Json root;
    root["units"] = config.units.name();
    root["seed"] = config.seed;
    root["frequency_hz"] = config.frequency_hz;
    root["launch_occupancy"] = config.launch_occupancy;
    root["min_occupancy"] = config.min_occupancy;
    root["length"] = ledger.launched_bits.size();

    const auto& t = ledger.totals;
    Json totals;
    totals["launch_energy"] = t.launch_energy;
    totals["final_energy"] = t.final_energy;
    totals["W_total"] = t.W_total;
    totals["Q_dissipated"] = t.Q_dissipated;
    totals["dS_universe"] = t.entropy_universe;
    totals["entropy_throughput"] = t.entropy_throughput;
    totals["deficiency_max"] = t.deficiency_max;
    totals["information_nats"] = t.information_nats;
    totals["min_occupancy_reached"] = t.min_occupancy;
    root["totals"] = std::move(totals);

    const auto verdict = link::second_law_audit(ledger);
    Json audit;
    audit["pass"] = verdict.pass;
    audit["margin"] = verdict.margin;
    audit["tolerance"] = verdict.tolerance;
    root["second_law"] = std::move(audit);
    root["pattern_preserved"] = ledger.pattern_preserved;
    root["integrity"] = ledger.integrity;

    Json stages = Json::array();
    for (const auto& s : ledger.stages) {
        Json j;
        j["index"] = s.index;
        j["kind"] = link::stage_kind_name(s.kind);
        j["span"] = s.span;
        j["Q_in"] = s.Q_in;
        j["Q_out"] = s.Q_out;
        j["W"] = s.W;
        j["T_C"] = optional_number(s.T_C);
        j["T_H"] = optional_number(s.T_H);
        j["dS_stage"] = s.entropy_production;
        j["dS_universe"] = s.cumulative_entropy;
        j["occupancy_out"] = s.occupancy_out;
        if (const auto* cycle = std::get_if<carnot::CycleRecord>(&s.detail)) {
            j["cycle"] = cycle_json(*cycle);
        } else {
            j["audit"] = audit_json(std::get<channel::SpanAudit>(s.detail));
        }
        stages.push_back(std::move(j));
    }
    root["stages"] = std::move(stages);
    return root.dump(2) + "\n";
}

std::string stages_csv(const link::Ledger& ledger) {
    std::string out = "stage,kind,Q_in,Q_out,W,T_C,T_H,dS_stage,dS_universe\n";
    for (const auto& s : ledger.stages) {
        out += fmt::format("{},{},{},{},{},{},{},{},{}\n", s.index, link::stage_kind_name(s.kind),
                           exact(s.Q_in), exact(s.Q_out), exact(s.W), optional_cell(s.T_C),
                           optional_cell(s.T_H), exact(s.entropy_production),
                           exact(s.cumulative_entropy));
    }
    return out;
}

std::string sweep_csv(const std::vector<link::SweepRow>& rows) {
    std::string out = "N,feasible,span_loss_db,span_transmission,min_occupancy,W_total,W_classical\n";
    for (const auto& r : rows) {
        out += fmt::format("{},{},{},{},{},{},{}\n", r.count, r.feasible ? 1 : 0,
                           exact(r.span_loss_db), exact(r.span_transmission),
                           exact(r.min_occupancy), exact(r.W_total), exact(r.W_classical));
    }
    return out;
}

std::string placement_json(const link::PlacementResult& result,
                           const link::PlacementProblem& problem) {
    Json root;
    root["total_length_km"] = problem.total_length_km;
    root["attenuation_db_per_km"] = problem.attenuation_db_per_km;
    root["total_loss_db"] = problem.total_loss_db();
    root["launch_occupancy"] = problem.launch_occupancy;
    root["min_occupancy"] = problem.min_occupancy;
    root["launch_energy"] = problem.launch_energy;
    root["amplifiers"] = result.count;
    root["positions_km"] = result.positions_km;
    root["span_transmission"] = result.span_transmission;
    root["W_total"] = result.W_total;
    root["W_classical"] = result.W_classical;
    root["min_occupancy_reached"] = result.min_occupancy;
    root["slack"] = result.slack;
    return root.dump(2) + "\n";
}

}  // namespace photon_ledger::report
