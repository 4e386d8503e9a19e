#include "chromadist/harness/json.hpp"

#include "chromadist/version.hpp"

namespace chromadist::harness {

namespace {

json counts_json(const lll::ResampleCounts& counts) {
  json out = json::object();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out[std::string(lll::to_string(static_cast<lll::EventKind>(i)))] = counts[i];
  }
  return out;
}

json inequality_json(const extremal::InequalityCheck& check) {
  return {
      {"verdict", extremal::to_string(check.verdict)},
      {"precisionBits", check.precision_bits},
      {"lhsLow", static_cast<double>(check.lhs.lo)},
      {"lhsHigh", static_cast<double>(check.lhs.hi)},
      {"rhs", rational_json(check.rhs)},
  };
}

}  // namespace

json rational_json(const extremal::Rational& q) { return {{"exact", q.str()}, {"approx", static_cast<double>(q)}}; }

json to_json(const ConflictReport& report) {
  json conflicts = json::array();
  for (const auto& c : report.conflicts) {
    conflicts.push_back({{"u", c.u}, {"v", c.v}, {"dist", c.dist}, {"palette", c.palette}});
  }
  json out = {
      {"proper", report.proper},
      {"rUsed", report.r},
      {"conflictCount", report.conflict_count},
      {"conflicts", conflicts},
      {"coloursUsed", report.colours_used},
      {"checkedPairs", report.checked_pairs},
      {"isolatedEdges", report.isolated_edges},
  };
  if (report.proper_violation) {
    out["properViolation"] = {report.proper_violation->first, report.proper_violation->second};
  }
  return out;
}

json to_json(const SolverResult& result) {
  return {
      {"status", to_string(result.status)},
      {"value", result.value},
      {"nodes", result.nodes_explored},
      {"kMax", result.k_max},
  };
}

json to_json(const ScanReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json row = {
        {"index", e.index},       {"n", e.n},         {"m", e.m},
        {"maxDegree", e.max_degree}, {"bound", e.bound}, {"excluded", e.excluded},
        {"violation", e.violation},
    };
    if (!e.error.empty()) row["error"] = e.error;
    if (e.result) row["result"] = to_json(*e.result);
    entries.push_back(std::move(row));
  }
  return {
      {"r", report.r},
      {"graphs", report.entries.size()},
      {"violations", report.violations},
      {"excluded", report.excluded},
      {"timeouts", report.timeouts},
      {"entries", entries},
  };
}

json to_json(const lll::ResampleStats& stats) {
  return {
      {"rounds", stats.rounds},
      {"resamples", stats.resamples},
      {"perKind", counts_json(stats.per_kind)},
      {"remainingEvents", stats.remaining_events},
      {"flagged", stats.flagged},
      {"degenerate", stats.degenerate},
  };
}

json to_json(const lll::ConstructionReport& report) {
  json repairs = json::array();
  for (const auto& rec : report.repairs) {
    repairs.push_back({{"pair", {rec.u, rec.v}}, {"edge", rec.edge}, {"oldColour", rec.old_colour},
                       {"extraColour", rec.new_colour}});
  }
  // Wall-clock time stays out so reruns are byte-identical.
  return {
      {"method", report.method},
      {"r", report.r},
      {"seed", report.seed},
      {"maxDegree", report.max_degree},
      {"minDegree", report.min_degree},
      {"coloursUsed", report.colours_used},
      {"coloursUsedPreRepair", report.colours_used_pre_repair},
      {"theoremBound", {{"value", report.theorem_bound}, {"respectedPreRepair", report.bound_respected_pre_repair}}},
      {"resampleCounts", counts_json(report.resample_counts)},
      {"repairsApplied", repairs},
      {"finalConflicts", report.final_conflicts},
      {"proper", report.proper},
      {"notes", report.notes},
  };
}

json to_json(const lll::DenseDiagnostics& d) {
  const auto& p = d.params;
  return {
      {"params",
       {
           {"r", p.r},
           {"epsilon", p.epsilon.str()},
           {"maxDegree", p.max_degree},
           {"pUncolour", p.p_uncolour},
           {"pClamped", p.p_clamped},
           {"recoverThreshold", p.recover_threshold},
           {"lowThreshold", p.low_threshold},
           {"stageTwoCount", p.stage_two_count},
           {"symDiffTarget", p.sym_diff_target},
           {"lDensityCap", std::to_string(p.l_density_num) + "/" + std::to_string(p.l_density_den)},
           {"maxResamples", p.max_resamples},
           {"freshBlock", p.fresh_block_size()},
       }},
      {"stageOne",
       {
           {"uncolouredEdges", d.u_edges},
           {"R", d.r_vertices},
           {"LU", d.lu_vertices},
           {"AR", d.ar_vertices},
           {"L", d.l_vertices},
           {"maxUncolouredAfterRecovery", d.max_uc_degree},
           {"recoveryCapHolds", d.invariants.recovery_cap},
           {"lInclusionHolds", d.invariants.l_inclusion},
           {"resampling", to_json(d.stage_one)},
       }},
      {"stageTwo",
       {
           {"uncolouredEdges", d.stage_two_edges},
           {"shortfallVertices", d.shortfall_vertices},
           {"resampling", to_json(d.stage_two)},
       }},
      {"maxUncolouredDegree", d.max_uncoloured_degree},
      {"freshBlockUsed", d.fresh_block},
  };
}

json to_json(const lll::AsymptoticDiagnostics& d) {
  const auto& p = d.plan;
  return {
      {"plan",
       {
           {"maxDegree", p.max_degree},
           {"lnDelta", p.ln_delta},
           {"t", p.t},
           {"cPrimeSize", p.c_prime_size},
           {"cDoublePrimeSize", p.c_double_prime_size},
           {"blockSize", p.block_size},
           {"uncolourProbability", p.uncolour_probability},
           {"clamped", p.clamped},
       }},
      {"classStage", to_json(d.q_stage)},
      {"uncolourStage", to_json(d.uncolour_stage)},
      {"maxClassDegree", d.max_class_degree},
      {"uncolouredEdges", d.uncoloured_edges},
      {"maxLeftoverDegree", d.max_leftover_degree},
      {"overflowColours", d.overflow_colours},
      {"classInvariantPreRepair", d.class_invariant_pre_repair},
      {"classInvariantFinal", d.class_invariant_final},
  };
}

json to_json(const lll::CensusRow& row) {
  return {
      {"kind", row.kind},           {"trials", row.trials},           {"instances", row.instances},
      {"violations", row.violations}, {"frequency", row.frequency},   {"targetBound", row.target_bound},
      {"boundFormula", row.bound_formula}, {"note", lll::kCensusBoundNote},
  };
}

json to_json(const extremal::Certificate& cert) {
  return {
      {"r", cert.r},
      {"N", cert.n_scale},
      {"C", cert.c},
      {"maxDegree", cert.max_degree.str()},
      {"lhs", cert.lhs.str()},
      {"rhs", cert.rhs.str()},
      {"verdict", cert.verdict},
      {"derivation", cert.derivation},
  };
}

json to_json(const extremal::ThresholdSearch& s) {
  json out = {
      {"r", s.r}, {"C", s.c}, {"confirm", s.confirm}, {"confirmed", s.confirmed}, {"reversals", s.reversals},
  };
  out["threshold"] = s.threshold ? json(*s.threshold) : json(nullptr);
  return out;
}

json to_json(const extremal::MarginCheck& m) {
  return {
      {"r", m.r},
      {"value", rational_json(m.value)},
      {"target", rational_json(m.target)},
      {"holds", m.holds},
      {"nextValue", rational_json(m.next_value)},
      {"increasing", m.increasing},
  };
}

json to_json(const extremal::BinomialBounds& b) {
  return {{"a", b.a}, {"b", b.b}, {"lower", b.lower}, {"middle", b.middle}, {"upper", b.upper}, {"all", b.all()}};
}

json to_json(const extremal::Observation2Result& o) {
  return {
      {"epsilon", rational_json(o.epsilon)},
      {"r", o.r},
      {"density", inequality_json(o.density)},
      {"tail", inequality_json(o.tail)},
      {"holds", o.holds()},
  };
}

json to_json(const RunConfig& c) {
  json out = {
      {"command", to_string(c.command)},
      {"inputs", c.inputs},
      {"format", to_string(c.format)},
      {"seed", c.seed},
      {"r", c.r},
      {"epsilon", c.epsilon},
      {"timeLimit", c.time_limit},
      {"threads", c.threads},
  };
  out["kmax"] = c.kmax ? json(*c.kmax) : json(nullptr);
  out["maxResamples"] = c.max_resamples ? json(*c.max_resamples) : json(nullptr);
  switch (c.command) {
    case Command::Gen:
      out["family"] = c.family;
      out["n"] = c.n;
      out["param"] = c.param ? json(*c.param) : json(nullptr);
      out["t"] = c.t;
      out["k"] = c.k;
      out["nScale"] = c.n_scale;
      break;
    case Command::Colour:
    case Command::Construct:
      out["method"] = c.method;
      break;
    case Command::Solve:
    case Command::Scan:
      out["edgeOrder"] = c.edge_order;
      out["symmetryBreak"] = c.symmetry_break;
      out["c"] = c.custom_c ? json(*c.custom_c) : json(nullptr);
      break;
    case Command::Certificate:
      out["kind"] = c.certificate_kind;
      out["nScale"] = c.n_scale;
      out["C"] = c.c;
      out["sweepN"] = c.sweep_n ? json(*c.sweep_n) : json(nullptr);
      out["a"] = c.a;
      out["b"] = c.b;
      break;
    case Command::Census:
      out["trials"] = c.trials;
      break;
    case Command::Bench:
      out["suite"] = c.suite;
      out["trials"] = c.trials;
      break;
    case Command::Verify:
      break;
  }
  return out;
}

json envelope(const RunConfig& config, json result) {
  return {
      {"tool", "chromadist"},
      {"version", kVersion},
      {"command", to_string(config.command)},
      {"seed", config.seed},
      {"config", to_json(config)},
      {"result", std::move(result)},
  };
}

}  // namespace chromadist::harness
