#include "photon_ledger/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "photon_ledger/config.hpp"
#include "photon_ledger/errors.hpp"
#include "photon_ledger/information.hpp"
#include "photon_ledger/report.hpp"
#include "photon_ledger/thermo.hpp"

namespace photon_ledger::cli {

namespace fs = std::filesystem;
using report::human;
using Json = nlohmann::ordered_json;

namespace {

std::string write_report(const fs::path& dir, const std::string& name, const std::string& body) {
    fs::create_directories(dir);
    const fs::path path = dir / name;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << body;
    if (!f) throw std::runtime_error("failed writing " + path.string());
    return path.string();
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::string optional_human(const std::optional<double>& v) { return v ? human(*v) : "undefined"; }

void apply_overrides(config::Document& doc, const GlobalOptions& global) {
    if (global.units) doc.simulation.units = parse_unit_system(*global.units);
    if (global.seed) doc.simulation.seed = *global.seed;
}

}  // namespace

CommandOutcome analyze(const AnalyzeOptions& options, const GlobalOptions& global,
                       std::ostream& out, std::ostream& err) {
    CommandOutcome outcome;
    try {
        const UnitSystem units = parse_unit_system(global.units.value_or("si"));
        std::ifstream in(options.path, std::ios::binary);
        if (!in) {
            fmt::print(err, "error: cannot read '{}'\n", options.path);
            outcome.exit_code = kInvalidInput;
            return outcome;
        }
        std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (raw.empty()) {
            fmt::print(err, "error: '{}' is empty\n", options.path);
            outcome.exit_code = kInvalidInput;
            return outcome;
        }
        const auto file = BitFile::from_bytes(std::as_bytes(std::span(raw)));
        const auto info = information::shannon_information(file, options.block_order);

        const double L = static_cast<double>(file.size());
        const double capacity = information::capacity_entropy(file.size(), units);
        const double margin = information::clausius_margin(capacity, info.total_nats, units);
        const PulseTrain train(file, options.frequency_hz, options.occupancy);
        const auto nats = information::file_thermo_state(train, information::EntropyConvention::Nats, units);
        const auto bits = information::file_thermo_state(train, information::EntropyConvention::Bits, units);
        const auto pulse = thermo::pulse_thermo({options.frequency_hz, options.occupancy}, units);
        const double deficiency =
            information::entropy_deficiency(options.occupancy, info.total_nats, units);

        fmt::print(out, "file               {}\n", options.path);
        fmt::print(out, "length L           {} bits ({} ones)\n", file.size(), file.ones());
        fmt::print(out, "block order k      {}\n", options.block_order);
        fmt::print(out, "information        {} nats/symbol, {} bits/symbol\n",
                   human(info.per_symbol_nats), human(info.per_symbol_nats / std::numbers::ln2));
        fmt::print(out, "total information  {} nats, {} bits\n", human(info.total_nats),
                   human(info.total_nats / std::numbers::ln2));
        fmt::print(out, "capacity entropy   {} ({} k_B)\n", human(capacity), human(L * std::numbers::ln2));
        fmt::print(out, "Clausius margin    {}\n", human(margin));
        fmt::print(out, "pulse              n = {}, q = {}, T = {}, S = {}\n", human(options.occupancy),
                   human(pulse.energy), optional_human(pulse.temperature), human(pulse.entropy));
        fmt::print(out, "file energy Q      {}\n", human(nats.energy));
        fmt::print(out, "mixing entropy S   {}\n", human(nats.entropy));
        fmt::print(out, "file temperature   {} (nats), {} (bits)\n", optional_human(nats.temperature),
                   optional_human(bits.temperature));
        fmt::print(out, "entropy deficiency {}\n", human(deficiency));

        if (global.out_dir) {
            Json j;
            j["file"] = options.path;
            j["units"] = units.name();
            j["length"] = file.size();
            j["ones"] = file.ones();
            j["block_order"] = options.block_order;
            j["information_per_symbol_nats"] = info.per_symbol_nats;
            j["information_per_symbol_bits"] = info.per_symbol_nats / std::numbers::ln2;
            j["information_total_nats"] = info.total_nats;
            j["information_total_bits"] = info.total_nats / std::numbers::ln2;
            j["capacity_entropy"] = capacity;
            j["clausius_margin"] = margin;
            j["occupancy"] = options.occupancy;
            j["frequency_hz"] = options.frequency_hz;
            j["pulse_energy"] = pulse.energy;
            j["pulse_temperature"] = optional_number(pulse.temperature);
            j["pulse_entropy"] = pulse.entropy;
            j["file_energy"] = nats.energy;
            j["mixing_entropy"] = nats.entropy;
            j["file_temperature_nats"] = optional_number(nats.temperature);
            j["file_temperature_bits"] = optional_number(bits.temperature);
            j["entropy_deficiency"] = deficiency;
            outcome.reports.push_back(write_report(*global.out_dir, "analysis.json", j.dump(2) + "\n"));
        }
    } catch (const InsufficientData& e) {
        fmt::print(err, "error: insufficient data: {}\n", e.what());
        outcome.exit_code = kInvalidInput;
    } catch (const std::exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        outcome.exit_code = kInvalidInput;
    }
    return outcome;
}

CommandOutcome simulate(const std::string& config_path, const GlobalOptions& global,
                        std::ostream& out, std::ostream& err) {
    CommandOutcome outcome;
    config::Document doc;
    try {
        doc = config::load(config_path);
        apply_overrides(doc, global);
    } catch (const ConfigError& e) {
        fmt::print(err, "error: invalid config at {}\n", e.what());
        outcome.exit_code = kInvalidInput;
        return outcome;
    } catch (const std::exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        outcome.exit_code = kInvalidInput;
        return outcome;
    }

    link::Ledger ledger;
    try {
        ledger = link::run(doc.simulation);
    } catch (const SimulationError& e) {
        fmt::print(err, "simulation failed: {}\n", e.what());
        outcome.exit_code = kAuditFailure;
        return outcome;
    } catch (const std::exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        outcome.exit_code = kInvalidInput;
        return outcome;
    }

    const auto verdict = link::second_law_audit(ledger);
    const auto& t = ledger.totals;
    fmt::print(out, "stages             {}\n", ledger.stages.size());
    fmt::print(out, "launch energy      {}\n", human(t.launch_energy));
    fmt::print(out, "final energy       {}\n", human(t.final_energy));
    fmt::print(out, "W_total            {}\n", human(t.W_total));
    fmt::print(out, "Q_dissipated       {}\n", human(t.Q_dissipated));
    fmt::print(out, "dS_universe        {}\n", human(t.entropy_universe));
    fmt::print(out, "deficiency_max     {}\n", human(t.deficiency_max));
    fmt::print(out, "second law         {} (margin {}, tolerance {})\n", verdict.pass ? "pass" : "FAIL",
               human(verdict.margin), human(verdict.tolerance));
    fmt::print(out, "integrity          {}\n", ledger.integrity ? "ok" : "LOST");
    for (const auto& s : ledger.stages) {
        if (const auto* c = std::get_if<carnot::CycleRecord>(&s.detail)) {
            fmt::print(out, "amplifier @stage {:<3} W/Q_H = {}  1 - T_C/T_H = {}  W/Q_C = {}\n",
                       s.index, optional_human(c->work_over_heat_out), human(c->carnot_value),
                       optional_human(c->work_over_heat_in));
        }
    }

    try {
        const fs::path dir = global.out_dir.value_or(".");
        outcome.reports.push_back(write_report(dir, "ledger.json", report::ledger_json(ledger, doc.simulation)));
        outcome.reports.push_back(write_report(dir, "stages.csv", report::stages_csv(ledger)));
    } catch (const std::exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        outcome.exit_code = kInvalidInput;
        return outcome;
    }
    if (!verdict.pass || !ledger.integrity) outcome.exit_code = kAuditFailure;
    return outcome;
}

CommandOutcome optimize(const std::string& config_path, const GlobalOptions& global,
                        std::ostream& out, std::ostream& err) {
    CommandOutcome outcome;
    try {
        auto doc = config::load(config_path);
        apply_overrides(doc, global);
        const auto problem = config::placement_problem(doc);
        const auto result = link::optimize_placement(problem);
        const auto sweep = link::placement_sweep(problem, doc.placement->max_amplifiers);

        fmt::print(out, "total loss         {} dB\n", human(problem.total_loss_db()));
        fmt::print(out, "amplifiers N*      {}\n", result.count);
        std::string positions;
        for (double p : result.positions_km) positions += (positions.empty() ? "" : ", ") + human(p);
        fmt::print(out, "positions (km)     [{}]\n", positions);
        fmt::print(out, "W_total            {} (classical {})\n", human(result.W_total),
                   human(result.W_classical));
        fmt::print(out, "occupancy slack    {}\n", human(result.slack));
        const std::string table = report::sweep_csv(sweep);
        fmt::print(out, "\n{}", table);

        if (global.out_dir) {
            outcome.reports.push_back(
                write_report(*global.out_dir, "placement.json", report::placement_json(result, problem)));
            outcome.reports.push_back(write_report(*global.out_dir, "sweep.csv", table));
        }
    } catch (const ConfigError& e) {
        fmt::print(err, "error: invalid config at {}\n", e.what());
        outcome.exit_code = kInvalidInput;
    } catch (const std::exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        outcome.exit_code = kInvalidInput;
    }
    return outcome;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Thermodynamic ledger for binary data on lossy optical fiber", "photon-ledger"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOptions global;
    std::string units;
    std::uint64_t seed = 0;
    std::string out_dir;
    auto* units_opt = app.add_option("--units", units, "Unit system: si or natural")
                          ->check(CLI::IsMember({"si", "natural"}));
    auto* seed_opt = app.add_option("--seed", seed, "Override the config seed");
    auto* dir_opt = app.add_option("--out-dir", out_dir, "Directory for reports");

    AnalyzeOptions analyze_opts;
    auto* analyze_cmd = app.add_subcommand("analyze", "Information and entropy of a binary file");
    analyze_cmd->add_option("file", analyze_opts.path, "File to analyze")->required();
    analyze_cmd->add_option("--block-order", analyze_opts.block_order, "Estimator block order k")
        ->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--occupancy", analyze_opts.occupancy, "Photons per '1' pulse")
        ->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--frequency", analyze_opts.frequency_hz, "Carrier frequency, Hz")
        ->check(CLI::PositiveNumber);

    std::string config_path;
    auto* simulate_cmd = app.add_subcommand("simulate", "Run a link simulation from a JSON config");
    simulate_cmd->add_option("--config", config_path, "Config file")->required();
    auto* optimize_cmd = app.add_subcommand("optimize", "Optimize amplifier placement");
    optimize_cmd->add_option("--config", config_path, "Config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    if (*units_opt) global.units = units;
    if (*seed_opt) global.seed = seed;
    if (*dir_opt) global.out_dir = out_dir;

    CommandOutcome outcome;
    if (*analyze_cmd) {
        outcome = analyze(analyze_opts, global, out, err);
    } else if (*simulate_cmd) {
        outcome = simulate(config_path, global, out, err);
    } else {
        outcome = optimize(config_path, global, out, err);
    }
    for (const auto& path : outcome.reports) fmt::print(out, "wrote {}\n", path);
    return outcome.exit_code;
}

}  // namespace photon_ledger::cli
