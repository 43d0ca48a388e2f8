#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsem/semantics.hpp"

namespace qsem {

/// The ideal coin: a two-sided macroscopic randomizing device in a
/// two-dimensional space. H and T project onto the coordinate rays, R onto
/// the balanced superposition ray; the three named states are the
/// corresponding unit vectors.
ScenarioSpec coin_fixture();

/// Valuation schedule around an observation at t_observe: grid points
/// before it evaluate with the "before" input, points from it onward with
/// the "after" input. No dynamics are simulated; time is a label.
struct TimelineSpec {
  double t_rest = 0.0;
  double t_observe = 1.0;
  std::vector<double> grid;  // ascending, all >= t_rest
  Semantics mode = Semantics::classical;
  // State-driven modes name scenario states; assignment-driven modes carry
  // explicit assignments.
  std::string state_before;
  std::string state_after;
  std::optional<Assignment> assign_before;
  std::optional<Assignment> assign_after;
};

/// spec may be null for the assignment-driven modes that do not consult a
/// scenario (classical, l3).
std::vector<std::pair<double, TruthValue>> run_timeline(
    const TimelineSpec& ts, const Formula& f, const ScenarioSpec* spec,
    Tolerance tol = {});

/// Values of a family of formulas plus their count of true ones. The count
/// exists only when every value is a bit: a Null or Undefined entry has no
/// cardinality, so the sum is undefined.
struct CensusResult {
  std::vector<TruthValue> values;
  std::optional<int> count;  // nullopt == sum undefined

  bool sum_defined() const { return count.has_value(); }
};

CensusResult outcome_census(const std::vector<FormulaPtr>& formulas,
                            Semantics id, const ScenarioSpec* spec,
                            const EvalInput& input, Tolerance tol = {});

/// Evaluates every registered atom under AMR in the given state. Bivalence
/// fails as soon as one atom has no truth value.
struct DefinitenessReport {
  std::vector<std::pair<std::string, TruthValue>> atom_values;  // sorted
  bool all_bivalent = false;
};

DefinitenessReport definiteness_check(const ScenarioSpec& spec,
                                      const Ket& state, Tolerance tol = {});

}  // namespace qsem
