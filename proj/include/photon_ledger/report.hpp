#pragma once

// Machine-readable reports. Field order is fixed and numbers are written with
// full round-trip precision, so identical runs give byte-identical files.

#include <string>
#include <vector>

#include "photon_ledger/link_sim.hpp"

namespace photon_ledger::report {

/// 17 significant digits.
[[nodiscard]] std::string exact(double value);
/// 6 significant digits, for people.
[[nodiscard]] std::string human(double value);

[[nodiscard]] std::string ledger_json(const link::Ledger& ledger, const link::SimulationConfig& config);

/// Columns: stage,kind,Q_in,Q_out,W,T_C,T_H,dS_stage,dS_universe
[[nodiscard]] std::string stages_csv(const link::Ledger& ledger);

/// Columns: N,feasible,span_loss_db,span_transmission,min_occupancy,W_total,W_classical
[[nodiscard]] std::string sweep_csv(const std::vector<link::SweepRow>& rows);

[[nodiscard]] std::string placement_json(const link::PlacementResult& result,
                                         const link::PlacementProblem& problem);

}  // namespace photon_ledger::report
