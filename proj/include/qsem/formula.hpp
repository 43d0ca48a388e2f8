#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qsem {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable AST over named atoms with negation, conjunction, disjunction
/// and implication. Implication is a first-class node: some semantics give
/// it its own construction, so desugaring is each engine's job.
class Formula {
 public:
  enum class Kind { atom, negation, conjunction, disjunction, implication };

  static FormulaPtr atom(std::string name);
  static FormulaPtr negation(FormulaPtr child);
  static FormulaPtr conjunction(FormulaPtr left, FormulaPtr right);
  static FormulaPtr disjunction(FormulaPtr left, FormulaPtr right);
  static FormulaPtr implication(FormulaPtr left, FormulaPtr right);

  Kind kind() const { return kind_; }
  bool is_binary() const {
    return kind_ == Kind::conjunction || kind_ == Kind::disjunction ||
           kind_ == Kind::implication;
  }

  /// Atom name; empty for non-atoms.
  const std::string& name() const { return name_; }

  /// Left operand of a binary node, or the negated child.
  const FormulaPtr& left() const { return left_; }
  const FormulaPtr& right() const { return right_; }

  bool equals(const Formula& other) const;

 private:
  Formula(Kind kind, std::string name, FormulaPtr left, FormulaPtr right)
      : kind_(kind), name_(std::move(name)), left_(std::move(left)),
        right_(std::move(right)) {}

  Kind kind_;
  std::string name_;
  FormulaPtr left_;
  FormulaPtr right_;
};

struct ParseError {
  std::size_t position;  // character offset into the input
  std::string message;
};

using ParseResult = std::variant<FormulaPtr, ParseError>;

/// Parses the ASCII surface syntax: atoms [A-Za-z][A-Za-z0-9_]*, prefix `!`
/// (tightest), infix `&`, infix `|` (looser), infix `->` (loosest,
/// right-associative); `&` and `|` left-associative; parentheses override;
/// whitespace ignored. The glyphs U+00AC, U+2293, U+2294 and U+2192 are
/// accepted as aliases for `!`, `&`, `|` and `->`.
ParseResult parse(std::string_view input);

/// Minimal-parenthesis canonical text; parse(render(f)) is structurally
/// equal to f.
std::string render(const Formula& f);

/// Distinct atom names in first-occurrence order.
std::vector<std::string> atoms_of(const Formula& f);

}  // namespace qsem
