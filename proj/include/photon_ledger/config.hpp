#pragma once

// JSON configuration documents. The accepted shape is described in
// schemas/link_config.schema.json; everything here enforces that schema and
// reports violations as ConfigError with a JSON-pointer path.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "photon_ledger/link_sim.hpp"

namespace photon_ledger::config {

struct PlacementSection {
    double total_length_km = 0.0;
    double attenuation_db_per_km = 0.0;
    std::size_t max_amplifiers = 64;  ///< length of the work-vs-N sweep
};

struct Document {
    link::SimulationConfig simulation;
    bool has_spans = false;
    std::optional<PlacementSection> placement;
};

/// Parses and validates a config document held in memory.
[[nodiscard]] Document parse(std::string_view json_text);

/// Reads `path` and parses it. Unreadable files raise ConfigError with path "".
[[nodiscard]] Document load(const std::string& path);

/// Placement problem for a document with a "placement" section; Q0 is the
/// launch energy of the document's file.
[[nodiscard]] link::PlacementProblem placement_problem(const Document& doc);

}  // namespace photon_ledger::config
