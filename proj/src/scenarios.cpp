#include "qsem/scenarios.hpp"

#include <cmath>
#include <stdexcept>

#include "qsem/errors.hpp"

namespace qsem {

ScenarioSpec coin_fixture() {
  const double isq2 = 1.0 / std::sqrt(2.0);
  Eigen::VectorXcd heads(2), tails(2), rest(2);
  heads << 1.0, 0.0;
  tails << 0.0, 1.0;
  rest << isq2, isq2;

  std::map<std::string, Projector> atoms;
  atoms.emplace("H", projector_onto(2, {Ket(heads)}));
  atoms.emplace("T", projector_onto(2, {Ket(tails)}));
  atoms.emplace("R", projector_onto(2, {Ket(rest)}));

  std::map<std::string, Ket> states;
  states.emplace("heads_up", Ket(heads));
  states.emplace("tails_up", Ket(tails));
  states.emplace("superposed", Ket(rest));

  return ScenarioSpec(2, std::move(atoms), std::move(states));
}

std::vector<std::pair<double, TruthValue>> run_timeline(
    const TimelineSpec& ts, const Formula& f, const ScenarioSpec* spec,
    Tolerance tol) {
  if (!(ts.t_rest < ts.t_observe)) {
    throw std::invalid_argument("timeline requires t_rest < t_observe");
  }
  if (ts.grid.empty()) {
    throw std::invalid_argument("timeline grid must be nonempty");
  }
  for (std::size_t i = 0; i < ts.grid.size(); ++i) {
    if (ts.grid[i] < ts.t_rest) {
      throw std::invalid_argument("grid point precedes t_rest");
    }
    if (i > 0 && ts.grid[i] < ts.grid[i - 1]) {
      throw std::invalid_argument("grid must be sorted ascending");
    }
  }

  EvalInput before, after;
  std::optional<Ket> state_before, state_after;
  if (is_assignment_driven(ts.mode)) {
    if (!ts.assign_before || !ts.assign_after) {
      throw EvalError("timeline in '" + to_string(ts.mode) +
                      "' mode needs before and after assignments");
    }
    before.assignment = &*ts.assign_before;
    after.assignment = &*ts.assign_after;
  } else {
    if (spec == nullptr) {
      throw EvalError("timeline in '" + to_string(ts.mode) +
                      "' mode needs a scenario");
    }
    state_before = spec->state(ts.state_before);
    state_after = spec->state(ts.state_after);
    before.state = &*state_before;
    after.state = &*state_after;
  }

  std::vector<std::pair<double, TruthValue>> series;
  series.reserve(ts.grid.size());
  for (double t : ts.grid) {
    const EvalInput& input = t < ts.t_observe ? before : after;
    series.emplace_back(t, evaluate(ts.mode, f, spec, input, tol));
  }
  return series;
}

CensusResult outcome_census(const std::vector<FormulaPtr>& formulas,
                            Semantics id, const ScenarioSpec* spec,
                            const EvalInput& input, Tolerance tol) {
  if (formulas.empty()) {
    throw std::invalid_argument("census needs at least one formula");
  }
  CensusResult result;
  result.values.reserve(formulas.size());
  bool all_bits = true;
  int trues = 0;
  for (const auto& f : formulas) {
    TruthValue v = evaluate(id, *f, spec, input, tol);
    if (v.is_bit()) {
      trues += v.bit_value();
    } else {
      // A non-bit entry has no cardinality, so no sum exists.
      all_bits = false;
    }
    result.values.push_back(v);
  }
  if (all_bits) {
    result.count = trues;
  }
  return result;
}

DefinitenessReport definiteness_check(const ScenarioSpec& spec,
                                      const Ket& state, Tolerance tol) {
  DefinitenessReport report;
  report.all_bivalent = true;
  for (const std::string& name : spec.atom_names()) {
    TruthValue v = eval_amr(*Formula::atom(name), spec, state, tol);
    if (!v.is_bit()) {
      report.all_bivalent = false;
    }
    report.atom_values.emplace_back(name, v);
  }
  return report;
}

}  // namespace qsem
