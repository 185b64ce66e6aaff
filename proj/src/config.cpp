#include "photon_ledger/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <json.hpp>

#include "photon_ledger/errors.hpp"
#include "photon_ledger/information.hpp"
#include "photon_ledger/kernels.hpp"

namespace photon_ledger::config {

namespace {

using nlohmann::json;

std::string child(const std::string& path, std::string_view key) {
    return path + "/" + std::string(key);
}

std::string child(const std::string& path, std::size_t index) {
    return path + "/" + std::to_string(index);
}

void require_object(const json& j, const std::string& path,
                    std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) throw ConfigError(path.empty() ? "/" : path, "expected an object");
    const std::set<std::string_view> keys(allowed);
    for (const auto& [key, value] : j.items()) {
        if (!keys.contains(key)) throw ConfigError(child(path, key), "unknown field");
    }
}

double number(const json& j, const std::string& path) {
    if (!j.is_number()) throw ConfigError(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ConfigError(path, "expected a finite number");
    return v;
}

double positive(const json& j, const std::string& path) {
    const double v = number(j, path);
    if (!(v > 0.0)) throw ConfigError(path, "must be > 0");
    return v;
}

double nonnegative(const json& j, const std::string& path) {
    const double v = number(j, path);
    if (!(v >= 0.0)) throw ConfigError(path, "must be >= 0");
    return v;
}

std::uint64_t unsigned_integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    const auto v = j.get<std::int64_t>();
    if (v < 0) throw ConfigError(path, "must be >= 0");
    return static_cast<std::uint64_t>(v);
}

link::FileSource parse_file(const json& j, const std::string& path) {
    require_object(j, path, {"bits", "random"});
    if (j.contains("bits") == j.contains("random")) {
        throw ConfigError(path, "exactly one of \"bits\" or \"random\" is required");
    }
    if (j.contains("bits")) {
        const auto& b = j.at("bits");
        const auto p = child(path, "bits");
        if (!b.is_string()) throw ConfigError(p, "expected a string of 0/1");
        const auto s = b.get<std::string>();
        if (s.empty()) throw ConfigError(p, "must not be empty");
        if (s.find_first_not_of("01") != std::string::npos) {
            throw ConfigError(p, "may only contain '0' and '1'");
        }
        return link::ExplicitBits{s};
    }
    const auto& r = j.at("random");
    const auto p = child(path, "random");
    require_object(r, p, {"length", "bias"});
    link::RandomBits out;
    if (!r.contains("length")) throw ConfigError(child(p, "length"), "required");
    out.length = unsigned_integer(r.at("length"), child(p, "length"));
    if (out.length < 1) throw ConfigError(child(p, "length"), "must be >= 1");
    if (r.contains("bias")) {
        out.bias = number(r.at("bias"), child(p, "bias"));
        if (!(out.bias >= 0.0 && out.bias <= 1.0)) {
            throw ConfigError(child(p, "bias"), "must lie in [0, 1]");
        }
    }
    return out;
}

channel::FiberSpan parse_span(const json& j, const std::string& path) {
    require_object(j, path, {"length_km", "attenuation_db_per_km"});
    for (const char* key : {"length_km", "attenuation_db_per_km"}) {
        if (!j.contains(key)) throw ConfigError(child(path, key), "required");
    }
    return {positive(j.at("length_km"), child(path, "length_km")),
            nonnegative(j.at("attenuation_db_per_km"), child(path, "attenuation_db_per_km"))};
}

link::AmplifierSite parse_amplifier(const json& j, const std::string& path, std::size_t span_count) {
    require_object(j, path, {"after_span", "excess_work_fraction", "target_occupancy"});
    if (!j.contains("after_span")) throw ConfigError(child(path, "after_span"), "required");
    link::AmplifierSite site;
    const auto after = unsigned_integer(j.at("after_span"), child(path, "after_span"));
    if (after >= span_count) {
        throw ConfigError(child(path, "after_span"), "refers to span " + std::to_string(after) +
                                                         " but there are " +
                                                         std::to_string(span_count) + " spans");
    }
    site.after_span = static_cast<std::size_t>(after);
    if (j.contains("excess_work_fraction")) {
        site.model.excess_work_fraction =
            nonnegative(j.at("excess_work_fraction"), child(path, "excess_work_fraction"));
    }
    if (j.contains("target_occupancy")) {
        site.target_occupancy = positive(j.at("target_occupancy"), child(path, "target_occupancy"));
    }
    return site;
}

PlacementSection parse_placement(const json& j, const std::string& path) {
    require_object(j, path, {"total_length_km", "attenuation_db_per_km", "max_amplifiers"});
    for (const char* key : {"total_length_km", "attenuation_db_per_km"}) {
        if (!j.contains(key)) throw ConfigError(child(path, key), "required");
    }
    PlacementSection out;
    out.total_length_km = nonnegative(j.at("total_length_km"), child(path, "total_length_km"));
    out.attenuation_db_per_km =
        nonnegative(j.at("attenuation_db_per_km"), child(path, "attenuation_db_per_km"));
    if (j.contains("max_amplifiers")) {
        const auto m = unsigned_integer(j.at("max_amplifiers"), child(path, "max_amplifiers"));
        if (m < 1 || m > 4096) throw ConfigError(child(path, "max_amplifiers"), "must be in [1, 4096]");
        out.max_amplifiers = static_cast<std::size_t>(m);
    }
    return out;
}

}  // namespace

Document parse(std::string_view json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("/", std::string("malformed JSON: ") + e.what());
    }
    require_object(root, "",
                   {"units", "seed", "frequency_hz", "launch_occupancy", "min_occupancy",
                    "adiabatic_tolerance", "estimator_order", "file", "spans", "amplifiers",
                    "placement"});

    Document doc;
    auto& c = doc.simulation;
    if (root.contains("units")) {
        const auto& u = root.at("units");
        if (!u.is_string() || (u != "si" && u != "natural")) {
            throw ConfigError("/units", "expected \"si\" or \"natural\"");
        }
        c.units = parse_unit_system(u.get<std::string>());
    }
    if (root.contains("seed")) c.seed = unsigned_integer(root.at("seed"), "/seed");
    if (root.contains("frequency_hz")) c.frequency_hz = positive(root.at("frequency_hz"), "/frequency_hz");
    if (root.contains("launch_occupancy")) {
        c.launch_occupancy = positive(root.at("launch_occupancy"), "/launch_occupancy");
    }
    if (root.contains("min_occupancy")) {
        c.min_occupancy = nonnegative(root.at("min_occupancy"), "/min_occupancy");
    }
    if (root.contains("adiabatic_tolerance")) {
        c.adiabatic_tolerance = nonnegative(root.at("adiabatic_tolerance"), "/adiabatic_tolerance");
    }
    if (root.contains("estimator_order")) {
        const auto k = unsigned_integer(root.at("estimator_order"), "/estimator_order");
        if (k < 1 || k > static_cast<std::uint64_t>(kernels::kMaxBlockOrder)) {
            throw ConfigError("/estimator_order", "must be in [1, 64]");
        }
        c.estimator_order = static_cast<int>(k);
    }
    if (root.contains("file")) c.file = parse_file(root.at("file"), "/file");
    if (root.contains("spans")) {
        const auto& spans = root.at("spans");
        if (!spans.is_array()) throw ConfigError("/spans", "expected an array");
        doc.has_spans = true;
        for (std::size_t i = 0; i < spans.size(); ++i) {
            c.spans.push_back(parse_span(spans[i], child("/spans", i)));
        }
    }
    if (root.contains("amplifiers")) {
        const auto& amps = root.at("amplifiers");
        if (!amps.is_array()) throw ConfigError("/amplifiers", "expected an array");
        for (std::size_t i = 0; i < amps.size(); ++i) {
            c.amplifiers.push_back(parse_amplifier(amps[i], child("/amplifiers", i), c.spans.size()));
        }
    }
    if (root.contains("placement")) doc.placement = parse_placement(root.at("placement"), "/placement");

    try {
        c.validate();
    } catch (const DomainError& e) {
        throw ConfigError("/", e.what());
    }
    return doc;
}

Document load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("", "cannot read config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse(text.str());
}

link::PlacementProblem placement_problem(const Document& doc) {
    if (!doc.placement) throw ConfigError("/placement", "required for placement optimization");
    const auto& c = doc.simulation;
    link::PlacementProblem p;
    p.total_length_km = doc.placement->total_length_km;
    p.attenuation_db_per_km = doc.placement->attenuation_db_per_km;
    p.launch_occupancy = c.launch_occupancy;
    p.min_occupancy = c.min_occupancy;
    p.frequency_hz = c.frequency_hz;
    p.units = c.units;
    const PulseTrain train(link::make_file(c), c.frequency_hz, c.launch_occupancy);
    p.launch_energy = information::file_energy(train, c.units);
    return p;
}

}  // namespace photon_ledger::config
