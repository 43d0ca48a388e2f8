#pragma once

#include <string>

namespace qsem {

/// Codomain of every semantics: a bit, a scalar in (0,1), or one of the two
/// distinct non-values. "undefined" means a truth value has not been given
/// (incompatible constituents); "null" means no truth value exists at all.
/// The two never coerce into each other.
class TruthValue {
 public:
  enum class Kind { bit, scalar, undefined, null };

  static TruthValue bit(int b);

  /// Clamps r into [0,1], then classifies: values within eps of 0 or 1
  /// (and exact 0/1 regardless of eps) normalize to a bit.
  static TruthValue scalar(double r, double eps = 0.0);

  static TruthValue undefined() { return TruthValue(Kind::undefined, 0.0); }
  static TruthValue null() { return TruthValue(Kind::null, 0.0); }

  Kind kind() const { return kind_; }
  bool is_bit() const { return kind_ == Kind::bit; }
  bool is_scalar() const { return kind_ == Kind::scalar; }
  bool is_numeric() const { return is_bit() || is_scalar(); }

  /// Bit payload (0 or 1); throws unless is_bit().
  int bit_value() const;

  /// Numeric payload: the bit as 0.0/1.0 or the scalar; throws unless
  /// is_numeric().
  double number() const;

  bool operator==(const TruthValue& other) const;
  bool operator!=(const TruthValue& other) const { return !(*this == other); }

  /// "1", "0", a decimal with 12 significant digits, "undefined", "null".
  std::string to_string() const;

 private:
  TruthValue(Kind kind, double value) : kind_(kind), value_(value) {}

  Kind kind_;
  double value_;
};

}  // namespace qsem
