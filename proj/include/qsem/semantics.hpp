#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "qsem/formula.hpp"
#include "qsem/statements.hpp"
#include "qsem/truth_value.hpp"

namespace qsem {

enum class Semantics { classical, quantum_nd, partial, l3, mvp, amr, amr_prob };

/// Declaration order is the stable column order of the CLI.
inline constexpr std::array<Semantics, 7> kAllSemantics = {
    Semantics::classical, Semantics::quantum_nd, Semantics::partial,
    Semantics::l3,        Semantics::mvp,        Semantics::amr,
    Semantics::amr_prob};

std::string to_string(Semantics id);
std::optional<Semantics> semantics_from_string(const std::string& name);

/// True for classical, quantum-nd, partial and l3; the other three take a
/// state instead of an atom assignment.
bool is_assignment_driven(Semantics id);

using Assignment = std::map<std::string, TruthValue>;

/// Bivalent truth-functional evaluation: negation 1-v, conjunction min,
/// disjunction max, implication max(1-l, r). Atoms must map to bits.
TruthValue eval_classical(const Formula& f, const Assignment& a);

/// Commutator-gated evaluation carrying (value, observable) pairs: a
/// conjunction of incompatible constituents is an arbitrary contradiction
/// (value 0, zero operator), a disjunction an arbitrary tautology (value 1,
/// identity). Compatible constituents combine classically with observables
/// PQ and P+Q-PQ. Distributivity fails here by design of the gates.
TruthValue eval_quantum_nd(const Formula& f, const ScenarioSpec& spec,
                           const Assignment& a, Tolerance tol = {});

/// Partial propositional functions: incompatible constituents make a
/// compound undefined rather than forcing a value, and undefined propagates
/// through min/max. A compound whose observable exists and equals the zero
/// operator (identity) is nevertheless false (true) even when its
/// constituents are undefined. Atoms may be assigned bits or Undefined.
TruthValue eval_partial(const Formula& f, const ScenarioSpec& spec,
                        const Assignment& a, Tolerance tol = {});

/// Lukasiewicz three-valued logic over {0, 1/2, 1}: conjunction
/// max(a+b-1,0), disjunction min(a+b,1), implication min(1-a+b,1).
TruthValue eval_l3(const Formula& f, const Assignment& a);

/// Multivalued predicate semantics: an atom takes the value <state|P|state>,
/// compounds combine with the Lukasiewicz functions when their observables
/// commute and are undefined otherwise; undefined absorbs upward.
TruthValue eval_mvp(const Formula& f, const ScenarioSpec& spec,
                    const Ket& state, Tolerance tol = {});

/// Alternative model of reasoning: the statement is true when the state
/// lies in the synonym subspace, false when it lies in the antonym, and
/// carries no truth value (Null) otherwise — also Null when the encoding
/// does not exist. Codomain is {0, 1, Null}, never Scalar or Undefined.
TruthValue eval_amr(const Formula& f, const ScenarioSpec& spec,
                    const Ket& state, Tolerance tol = {});

/// Probabilistic semantics over the same synonym/antonym pair: certainty 1
/// in the synonym, impossibility 0 in the antonym, otherwise the Born
/// expectation of the synonym projector, strictly inside (0,1); Null when
/// the encoding does not exist.
TruthValue eval_amr_prob(const Formula& f, const ScenarioSpec& spec,
                         const Ket& state, Tolerance tol = {});

/// Input for the uniform dispatcher; exactly the member matching the chosen
/// semantics' kind must be set.
struct EvalInput {
  const Assignment* assignment = nullptr;
  const Ket* state = nullptr;
};

/// Dispatches to the engine for id. spec may be null for classical and l3;
/// every other semantics requires it. Raises EvalError when the input kind
/// does not match the semantics.
TruthValue evaluate(Semantics id, const Formula& f, const ScenarioSpec* spec,
                    const EvalInput& input, Tolerance tol = {});

}  // namespace qsem
