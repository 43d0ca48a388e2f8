#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qsem/formula.hpp"
#include "qsem/linalg.hpp"

namespace qsem {

/// Registry binding atom names to projectors and state names to normalized
/// kets, all of one ambient dimension. Immutable once constructed.
class ScenarioSpec {
 public:
  ScenarioSpec(int dim, std::map<std::string, Projector> atoms,
               std::map<std::string, Ket> states, Tolerance tol = {});

  int dim() const { return dim_; }

  bool has_atom(const std::string& name) const;
  bool has_state(const std::string& name) const;

  /// Throws EvalError when the name is unbound.
  const Projector& atom(const std::string& name) const;
  const Ket& state(const std::string& name) const;

  /// Names in sorted order.
  std::vector<std::string> atom_names() const;
  std::vector<std::string> state_names() const;

 private:
  int dim_;
  std::map<std::string, Projector> atoms_;
  std::map<std::string, Ket> states_;
};

/// Builds a ScenarioSpec from the JSON scenario document
///   {"dimension": n,
///    "atoms":  [{"name": ..., "vector": [[re,im],...]} |
///               {"name": ..., "matrix": [[[re,im],...],...]}, ...],
///    "states": [{"name": ..., "amplitudes": [[re,im],...]}, ...]}
/// where a "vector" atom is the rank-1 projector onto that (normalized)
/// vector. All invariants are checked at load time; violations raise
/// ScenarioError.
ScenarioSpec register_scenario(const std::string& json_text,
                               Tolerance tol = {});
ScenarioSpec load_scenario(const std::filesystem::path& path,
                           Tolerance tol = {});

/// True iff every pair of distinct atom projectors occurring in f commutes
/// within tol. A single atom trivially satisfies this.
bool pairwise_commuting(const Formula& f, const ScenarioSpec& spec,
                        Tolerance tol = {});

/// Compound statement whose truth/falsity proofs exist: the synonym is the
/// subspace whose membership proves the statement true, the antonym (its
/// orthocomplement) the one proving it false.
struct StatementEncoding {
  Projector projector;
  Subspace synonym;
  Subspace antonym;
};

struct EncodingNonexistent {
  std::string reason;
};

using EncodingResult = std::variant<StatementEncoding, EncodingNonexistent>;

/// Builds the synonym subspace of f over the scenario: atoms map to their
/// projector ranges, negation to the orthocomplement, conjunction to the
/// intersection, disjunction to the span of the union, and implication to
/// the encoding of !left | right. When some pair of atom projectors in f
/// fails to commute, no subspace can be assigned irreplaceably and the
/// result is Nonexistent, naming the first offending pair.
EncodingResult encode(const Formula& f, const ScenarioSpec& spec,
                      Tolerance tol = {});

}  // namespace qsem
