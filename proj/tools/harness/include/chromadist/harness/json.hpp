#pragma once

#include <json.hpp>

#include "chromadist/exact_solver.hpp"
#include "chromadist/extremal/certificates.hpp"
#include "chromadist/lll/asymptotic.hpp"
#include "chromadist/lll/census.hpp"
#include "chromadist/lll/dense.hpp"
#include "chromadist/verify.hpp"
#include "chromadist/harness/run.hpp"

namespace chromadist::harness {

using nlohmann::json;

json to_json(const ConflictReport& report);
json to_json(const SolverResult& result);
json to_json(const ScanReport& report);
json to_json(const lll::ConstructionReport& report);
json to_json(const lll::ResampleStats& stats);
json to_json(const lll::DenseDiagnostics& diag);
json to_json(const lll::AsymptoticDiagnostics& diag);
json to_json(const lll::CensusRow& row);
json to_json(const extremal::Certificate& cert);
json to_json(const extremal::ThresholdSearch& search);
json to_json(const extremal::MarginCheck& check);
json to_json(const extremal::BinomialBounds& bounds);
json to_json(const extremal::Observation2Result& result);
json to_json(const RunConfig& config);

/// Exact rational as {"exact": "p/q", "approx": double}.
json rational_json(const extremal::Rational& q);

/// The common envelope: tool, version, command, config, seed, result.
json envelope(const RunConfig& config, json result);

}  // namespace chromadist::harness
