#include "qsem/semantics.hpp"

#include <algorithm>
#include <utility>

#include "qsem/errors.hpp"

namespace qsem {

std::string to_string(Semantics id) {
  switch (id) {
    case Semantics::classical:
      return "classical";
    case Semantics::quantum_nd:
      return "quantum-nd";
    case Semantics::partial:
      return "partial";
    case Semantics::l3:
      return "l3";
    case Semantics::mvp:
      return "mvp";
    case Semantics::amr:
      return "amr";
    case Semantics::amr_prob:
      return "amr-prob";
  }
  return "";
}

std::optional<Semantics> semantics_from_string(const std::string& name) {
  for (Semantics id : kAllSemantics) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

bool is_assignment_driven(Semantics id) {
  switch (id) {
    case Semantics::classical:
    case Semantics::quantum_nd:
    case Semantics::partial:
    case Semantics::l3:
      return true;
    default:
      return false;
  }
}

namespace {

const TruthValue& assigned(const Assignment& a, const std::string& name) {
  auto it = a.find(name);
  if (it == a.end()) {
    throw EvalError("unbound atom '" + name + "'");
  }
  return it->second;
}

int assigned_bit(const Assignment& a, const std::string& name) {
  const TruthValue& v = assigned(a, name);
  if (!v.is_bit()) {
    throw EvalError("atom '" + name + "' must be assigned 0 or 1");
  }
  return v.bit_value();
}

int classical_bit(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case Formula::Kind::atom:
      return assigned_bit(a, f.name());
    case Formula::Kind::negation:
      return 1 - classical_bit(*f.left(), a);
    case Formula::Kind::conjunction:
      return std::min(classical_bit(*f.left(), a),
                      classical_bit(*f.right(), a));
    case Formula::Kind::disjunction:
      return std::max(classical_bit(*f.left(), a),
                      classical_bit(*f.right(), a));
    case Formula::Kind::implication:
      return std::max(1 - classical_bit(*f.left(), a),
                      classical_bit(*f.right(), a));
  }
  throw std::logic_error("unreachable formula kind");
}

// --- quantum-nd ------------------------------------------------------------

struct QndNode {
  int value;
  CMatrix observable;
};

QndNode qnd_negate(QndNode node) {
  return {1 - node.value,
          CMatrix::identity(node.observable.dim()) - node.observable};
}

QndNode qnd_conjoin(const QndNode& l, const QndNode& r, Tolerance tol) {
  if (is_zero(commutator(l.observable, r.observable), tol)) {
    return {std::min(l.value, r.value), l.observable * r.observable};
  }
  // Incompatible constituents: an arbitrary contradiction.
  return {0, CMatrix::zero(l.observable.dim())};
}

QndNode qnd_disjoin(const QndNode& l, const QndNode& r, Tolerance tol) {
  if (is_zero(commutator(l.observable, r.observable), tol)) {
    return {std::max(l.value, r.value),
            l.observable + r.observable - l.observable * r.observable};
  }
  // Incompatible constituents: an arbitrary tautology.
  return {1, CMatrix::identity(l.observable.dim())};
}

QndNode qnd_eval(const Formula& f, const ScenarioSpec& spec,
                 const Assignment& a, Tolerance tol) {
  switch (f.kind()) {
    case Formula::Kind::atom:
      return {assigned_bit(a, f.name()), spec.atom(f.name()).matrix()};
    case Formula::Kind::negation:
      return qnd_negate(qnd_eval(*f.left(), spec, a, tol));
    case Formula::Kind::conjunction:
      return qnd_conjoin(qnd_eval(*f.left(), spec, a, tol),
                         qnd_eval(*f.right(), spec, a, tol), tol);
    case Formula::Kind::disjunction:
      return qnd_disjoin(qnd_eval(*f.left(), spec, a, tol),
                         qnd_eval(*f.right(), spec, a, tol), tol);
    case Formula::Kind::implication:
      return qnd_disjoin(qnd_negate(qnd_eval(*f.left(), spec, a, tol)),
                         qnd_eval(*f.right(), spec, a, tol), tol);
  }
  throw std::logic_error("unreachable formula kind");
}

// --- partial ---------------------------------------------------------------

struct PartialNode {
  TruthValue value;
  std::optional<CMatrix> observable;  // absent for incompatible compounds
};

/// A compound whose observable is the zero operator encodes an arbitrary
/// contradiction, the identity an arbitrary tautology; either forces a bit
/// on an otherwise undefined compound. Defined values stand as computed.
void partial_override(PartialNode& node, Tolerance tol) {
  if (!node.value.is_bit() && node.observable) {
    if (is_zero(*node.observable, tol)) {
      node.value = TruthValue::bit(0);
    } else if (is_identity(*node.observable, tol)) {
      node.value = TruthValue::bit(1);
    }
  }
}

PartialNode partial_negate(PartialNode node, Tolerance tol) {
  PartialNode out{node.value.is_bit()
                      ? TruthValue::bit(1 - node.value.bit_value())
                      : TruthValue::undefined(),
                  std::nullopt};
  if (node.observable) {
    out.observable =
        CMatrix::identity(node.observable->dim()) - *node.observable;
  }
  partial_override(out, tol);
  return out;
}

PartialNode partial_combine(const PartialNode& l, const PartialNode& r,
                            bool conjunction, Tolerance tol) {
  PartialNode out{TruthValue::undefined(), std::nullopt};
  if (l.observable && r.observable &&
      is_zero(commutator(*l.observable, *r.observable), tol)) {
    out.observable = conjunction
                         ? *l.observable * *r.observable
                         : *l.observable + *r.observable -
                               *l.observable * *r.observable;
    if (l.value.is_bit() && r.value.is_bit()) {
      const int combined =
          conjunction ? std::min(l.value.bit_value(), r.value.bit_value())
                      : std::max(l.value.bit_value(), r.value.bit_value());
      out.value = TruthValue::bit(combined);
    }
  }
  partial_override(out, tol);
  return out;
}

PartialNode partial_eval(const Formula& f, const ScenarioSpec& spec,
                         const Assignment& a, Tolerance tol) {
  switch (f.kind()) {
    case Formula::Kind::atom: {
      const TruthValue& v = assigned(a, f.name());
      if (!v.is_bit() && v.kind() != TruthValue::Kind::undefined) {
        throw EvalError("atom '" + f.name() +
                        "' must be assigned 0, 1 or undefined");
      }
      return {v, spec.atom(f.name()).matrix()};
    }
    case Formula::Kind::negation:
      return partial_negate(partial_eval(*f.left(), spec, a, tol), tol);
    case Formula::Kind::conjunction:
      return partial_combine(partial_eval(*f.left(), spec, a, tol),
                             partial_eval(*f.right(), spec, a, tol), true,
                             tol);
    case Formula::Kind::disjunction:
      return partial_combine(partial_eval(*f.left(), spec, a, tol),
                             partial_eval(*f.right(), spec, a, tol), false,
                             tol);
    case Formula::Kind::implication:
      return partial_combine(
          partial_negate(partial_eval(*f.left(), spec, a, tol), tol),
          partial_eval(*f.right(), spec, a, tol), false, tol);
  }
  throw std::logic_error("unreachable formula kind");
}

// --- l3 --------------------------------------------------------------------

double l3_value(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case Formula::Kind::atom: {
      const TruthValue& v = assigned(a, f.name());
      if (!v.is_numeric() ||
          (v.is_scalar() && v.number() != 0.5)) {
        throw EvalError("atom '" + f.name() +
                        "' must be assigned 0, 0.5 or 1");
      }
      return v.number();
    }
    case Formula::Kind::negation:
      return 1.0 - l3_value(*f.left(), a);
    case Formula::Kind::conjunction:
      return std::max(l3_value(*f.left(), a) + l3_value(*f.right(), a) - 1.0,
                      0.0);
    case Formula::Kind::disjunction:
      return std::min(l3_value(*f.left(), a) + l3_value(*f.right(), a), 1.0);
    case Formula::Kind::implication:
      return std::min(1.0 - l3_value(*f.left(), a) + l3_value(*f.right(), a),
                      1.0);
  }
  throw std::logic_error("unreachable formula kind");
}

// --- mvp -------------------------------------------------------------------

struct MvpNode {
  TruthValue value;
  std::optional<CMatrix> observable;
};

MvpNode mvp_negate(MvpNode node, Tolerance tol) {
  MvpNode out{TruthValue::undefined(), std::nullopt};
  if (node.observable) {
    out.observable =
        CMatrix::identity(node.observable->dim()) - *node.observable;
  }
  if (node.value.is_numeric()) {
    out.value = TruthValue::scalar(1.0 - node.value.number(), tol.eps);
  }
  return out;
}

MvpNode mvp_combine(const MvpNode& l, const MvpNode& r, bool conjunction,
                    Tolerance tol) {
  MvpNode out{TruthValue::undefined(), std::nullopt};
  if (l.observable && r.observable &&
      is_zero(commutator(*l.observable, *r.observable), tol)) {
    out.observable = conjunction
                         ? *l.observable * *r.observable
                         : *l.observable + *r.observable -
                               *l.observable * *r.observable;
    if (l.value.is_numeric() && r.value.is_numeric()) {
      const double sum = l.value.number() + r.value.number();
      out.value = TruthValue::scalar(
          conjunction ? std::max(sum - 1.0, 0.0) : std::min(sum, 1.0),
          tol.eps);
    }
  }
  return out;
}

MvpNode mvp_eval(const Formula& f, const ScenarioSpec& spec, const Ket& state,
                 Tolerance tol) {
  switch (f.kind()) {
    case Formula::Kind::atom: {
      const Projector& p = spec.atom(f.name());
      return {TruthValue::scalar(expectation(p, state), tol.eps), p.matrix()};
    }
    case Formula::Kind::negation:
      return mvp_negate(mvp_eval(*f.left(), spec, state, tol), tol);
    case Formula::Kind::conjunction:
      return mvp_combine(mvp_eval(*f.left(), spec, state, tol),
                         mvp_eval(*f.right(), spec, state, tol), true, tol);
    case Formula::Kind::disjunction:
      return mvp_combine(mvp_eval(*f.left(), spec, state, tol),
                         mvp_eval(*f.right(), spec, state, tol), false, tol);
    case Formula::Kind::implication:
      return mvp_combine(mvp_negate(mvp_eval(*f.left(), spec, state, tol),
                                    tol),
                         mvp_eval(*f.right(), spec, state, tol), false, tol);
  }
  throw std::logic_error("unreachable formula kind");
}

void require_state_dim(const ScenarioSpec& spec, const Ket& state) {
  if (state.dim() != spec.dim()) {
    throw EvalError("state dimension " + std::to_string(state.dim()) +
                    " does not match scenario dimension " +
                    std::to_string(spec.dim()));
  }
}

}  // namespace

TruthValue eval_classical(const Formula& f, const Assignment& a) {
  return TruthValue::bit(classical_bit(f, a));
}

TruthValue eval_quantum_nd(const Formula& f, const ScenarioSpec& spec,
                           const Assignment& a, Tolerance tol) {
  return TruthValue::bit(qnd_eval(f, spec, a, tol).value);
}

TruthValue eval_partial(const Formula& f, const ScenarioSpec& spec,
                        const Assignment& a, Tolerance tol) {
  return partial_eval(f, spec, a, tol).value;
}

TruthValue eval_l3(const Formula& f, const Assignment& a) {
  const double v = l3_value(f, a);
  return v == 0.5 ? TruthValue::scalar(0.5) : TruthValue::bit(v >= 1.0);
}

TruthValue eval_mvp(const Formula& f, const ScenarioSpec& spec,
                    const Ket& state, Tolerance tol) {
  require_state_dim(spec, state);
  return mvp_eval(f, spec, state, tol).value;
}

TruthValue eval_amr(const Formula& f, const ScenarioSpec& spec,
                    const Ket& state, Tolerance tol) {
  require_state_dim(spec, state);
  const EncodingResult enc = encode(f, spec, tol);
  if (std::holds_alternative<EncodingNonexistent>(enc)) {
    return TruthValue::null();
  }
  const auto& e = std::get<StatementEncoding>(enc);
  if (contains(e.synonym, state, tol)) return TruthValue::bit(1);
  if (contains(e.antonym, state, tol)) return TruthValue::bit(0);
  return TruthValue::null();
}

TruthValue eval_amr_prob(const Formula& f, const ScenarioSpec& spec,
                         const Ket& state, Tolerance tol) {
  require_state_dim(spec, state);
  const EncodingResult enc = encode(f, spec, tol);
  if (std::holds_alternative<EncodingNonexistent>(enc)) {
    return TruthValue::null();
  }
  const auto& e = std::get<StatementEncoding>(enc);
  if (contains(e.synonym, state, tol)) return TruthValue::bit(1);
  if (contains(e.antonym, state, tol)) return TruthValue::bit(0);
  return TruthValue::scalar(expectation(e.projector, state), tol.eps);
}

TruthValue evaluate(Semantics id, const Formula& f, const ScenarioSpec* spec,
                    const EvalInput& input, Tolerance tol) {
  if (is_assignment_driven(id)) {
    if (input.assignment == nullptr) {
      throw EvalError("semantics '" + to_string(id) +
                      "' requires an atom assignment");
    }
  } else if (input.state == nullptr) {
    throw EvalError("semantics '" + to_string(id) + "' requires a state");
  }
  const bool needs_spec = id != Semantics::classical && id != Semantics::l3;
  if (needs_spec && spec == nullptr) {
    throw EvalError("semantics '" + to_string(id) + "' requires a scenario");
  }
  switch (id) {
    case Semantics::classical:
      return eval_classical(f, *input.assignment);
    case Semantics::quantum_nd:
      return eval_quantum_nd(f, *spec, *input.assignment, tol);
    case Semantics::partial:
      return eval_partial(f, *spec, *input.assignment, tol);
    case Semantics::l3:
      return eval_l3(f, *input.assignment);
    case Semantics::mvp:
      return eval_mvp(f, *spec, *input.state, tol);
    case Semantics::amr:
      return eval_amr(f, *spec, *input.state, tol);
    case Semantics::amr_prob:
      return eval_amr_prob(f, *spec, *input.state, tol);
  }
  throw std::logic_error("unreachable semantics id");
}

}  // namespace qsem
