#include "qsem/statements.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "qsem/errors.hpp"

namespace qsem {

namespace {

bool valid_identifier(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      return false;
    }
  }
  return true;
}

Complex complex_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw ScenarioError(where + ": complex numbers must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Eigen::VectorXcd vector_from_json(const nlohmann::json& j, int dim,
                                  const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw ScenarioError(where + ": expected " + std::to_string(dim) +
                        " complex entries");
  }
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) {
    v[i] = complex_from_json(j[i], where);
  }
  return v;
}

Eigen::MatrixXcd matrix_from_json(const nlohmann::json& j, int dim,
                                  const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw ScenarioError(where + ": expected a " + std::to_string(dim) + "x" +
                        std::to_string(dim) + " matrix");
  }
  Eigen::MatrixXcd m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    m.row(r) = vector_from_json(j[r], dim, where).transpose();
  }
  return m;
}

}  // namespace

ScenarioSpec::ScenarioSpec(int dim, std::map<std::string, Projector> atoms,
                           std::map<std::string, Ket> states, Tolerance tol)
    : dim_(dim), atoms_(std::move(atoms)), states_(std::move(states)) {
  if (dim_ <= 0) {
    throw ScenarioError("scenario dimension must be positive");
  }
  for (const auto& [name, p] : atoms_) {
    if (!valid_identifier(name)) {
      throw ScenarioError("atom name '" + name + "' is not an identifier");
    }
    if (p.dim() != dim_) {
      throw ScenarioError("atom '" + name + "' has dimension " +
                          std::to_string(p.dim()) + ", scenario has " +
                          std::to_string(dim_));
    }
  }
  for (const auto& [name, v] : states_) {
    if (!valid_identifier(name)) {
      throw ScenarioError("state name '" + name + "' is not an identifier");
    }
    if (v.dim() != dim_) {
      throw ScenarioError("state '" + name + "' has dimension " +
                          std::to_string(v.dim()) + ", scenario has " +
                          std::to_string(dim_));
    }
    if (!v.is_normalized(tol)) {
      throw ScenarioError("state '" + name + "' is not normalized (norm " +
                          std::to_string(v.norm()) + ")");
    }
  }
}

bool ScenarioSpec::has_atom(const std::string& name) const {
  return atoms_.count(name) != 0;
}

bool ScenarioSpec::has_state(const std::string& name) const {
  return states_.count(name) != 0;
}

const Projector& ScenarioSpec::atom(const std::string& name) const {
  auto it = atoms_.find(name);
  if (it == atoms_.end()) {
    throw EvalError("unbound atom '" + name + "'");
  }
  return it->second;
}

const Ket& ScenarioSpec::state(const std::string& name) const {
  auto it = states_.find(name);
  if (it == states_.end()) {
    throw EvalError("unknown state '" + name + "'");
  }
  return it->second;
}

std::vector<std::string> ScenarioSpec::atom_names() const {
  std::vector<std::string> names;
  names.reserve(atoms_.size());
  for (const auto& [name, _] : atoms_) names.push_back(name);
  return names;
}

std::vector<std::string> ScenarioSpec::state_names() const {
  std::vector<std::string> names;
  names.reserve(states_.size());
  for (const auto& [name, _] : states_) names.push_back(name);
  return names;
}

ScenarioSpec register_scenario(const std::string& json_text, Tolerance tol) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ScenarioError(std::string("scenario is not valid JSON: ") +
                        e.what());
  }
  if (!doc.is_object() || !doc.contains("dimension") ||
      !doc["dimension"].is_number_integer()) {
    throw ScenarioError("scenario must be an object with integer 'dimension'");
  }
  const int dim = doc["dimension"].get<int>();
  if (dim <= 0) {
    throw ScenarioError("scenario dimension must be positive");
  }

  std::map<std::string, Projector> atoms;
  for (const auto& entry : doc.value("atoms", nlohmann::json::array())) {
    if (!entry.is_object() || !entry.contains("name") ||
        !entry["name"].is_string()) {
      throw ScenarioError("each atom needs a string 'name'");
    }
    const std::string name = entry["name"].get<std::string>();
    const std::string where = "atom '" + name + "'";
    if (atoms.count(name)) {
      throw ScenarioError("duplicate atom name '" + name + "'");
    }
    try {
      if (entry.contains("vector") == entry.contains("matrix")) {
        throw ScenarioError(where +
                            ": exactly one of 'vector' or 'matrix' required");
      }
      if (entry.contains("vector")) {
        Eigen::VectorXcd v = vector_from_json(entry["vector"], dim, where);
        const double n = v.norm();
        if (n < tol.eps) {
          throw ScenarioError(where + ": vector must be nonzero");
        }
        v /= n;
        atoms.emplace(name,
                      projector_onto(dim, {Ket(std::move(v))}, tol));
      } else {
        atoms.emplace(name,
                      Projector(CMatrix(matrix_from_json(entry["matrix"], dim,
                                                         where)),
                                tol));
      }
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(where + ": " + e.what());
    }
  }

  std::map<std::string, Ket> states;
  for (const auto& entry : doc.value("states", nlohmann::json::array())) {
    if (!entry.is_object() || !entry.contains("name") ||
        !entry["name"].is_string() || !entry.contains("amplitudes")) {
      throw ScenarioError("each state needs a string 'name' and 'amplitudes'");
    }
    const std::string name = entry["name"].get<std::string>();
    if (states.count(name)) {
      throw ScenarioError("duplicate state name '" + name + "'");
    }
    states.emplace(name, Ket(vector_from_json(entry["amplitudes"], dim,
                                              "state '" + name + "'")));
  }

  return ScenarioSpec(dim, std::move(atoms), std::move(states), tol);
}

ScenarioSpec load_scenario(const std::filesystem::path& path, Tolerance tol) {
  std::ifstream in(path);
  if (!in) {
    throw ScenarioError("cannot open scenario file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return register_scenario(buffer.str(), tol);
}

bool pairwise_commuting(const Formula& f, const ScenarioSpec& spec,
                        Tolerance tol) {
  const std::vector<std::string> names = atoms_of(f);
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (!is_zero(commutator(spec.atom(names[i]).matrix(),
                              spec.atom(names[j]).matrix()),
                   tol)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

Subspace synonym_subspace(const Formula& f, const ScenarioSpec& spec,
                          Tolerance tol) {
  switch (f.kind()) {
    case Formula::Kind::atom:
      return range_of(spec.atom(f.name()), tol);
    case Formula::Kind::negation:
      return orthocomplement(synonym_subspace(*f.left(), spec, tol), tol);
    case Formula::Kind::conjunction:
      return intersect(synonym_subspace(*f.left(), spec, tol),
                       synonym_subspace(*f.right(), spec, tol), tol);
    case Formula::Kind::disjunction:
      return span_sum(synonym_subspace(*f.left(), spec, tol),
                      synonym_subspace(*f.right(), spec, tol), tol);
    case Formula::Kind::implication:
      // Same subspace as !left | right.
      return span_sum(
          orthocomplement(synonym_subspace(*f.left(), spec, tol), tol),
          synonym_subspace(*f.right(), spec, tol), tol);
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace

EncodingResult encode(const Formula& f, const ScenarioSpec& spec,
                      Tolerance tol) {
  const std::vector<std::string> names = atoms_of(f);
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (!is_zero(commutator(spec.atom(names[i]).matrix(),
                              spec.atom(names[j]).matrix()),
                   tol)) {
        return EncodingNonexistent{"atoms '" + names[i] + "' and '" +
                                   names[j] + "' do not commute"};
      }
    }
  }
  Subspace synonym = synonym_subspace(f, spec, tol);
  Subspace antonym = orthocomplement(synonym, tol);
  Projector projector = synonym.projector(tol);
  return StatementEncoding{std::move(projector), std::move(synonym),
                           std::move(antonym)};
}

}  // namespace qsem
