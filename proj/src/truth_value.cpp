#include "qsem/truth_value.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qsem {

TruthValue TruthValue::bit(int b) {
  if (b != 0 && b != 1) {
    throw std::invalid_argument("bit must be 0 or 1");
  }
  return TruthValue(Kind::bit, static_cast<double>(b));
}

TruthValue TruthValue::scalar(double r, double eps) {
  if (!std::isfinite(r)) {
    throw std::invalid_argument("scalar truth value must be finite");
  }
  if (r < 0.0) r = 0.0;
  if (r > 1.0) r = 1.0;
  if (r <= eps) return bit(0);
  if (r >= 1.0 - eps) return bit(1);
  return TruthValue(Kind::scalar, r);
}

int TruthValue::bit_value() const {
  if (!is_bit()) {
    throw std::logic_error("truth value is not a bit");
  }
  return value_ == 1.0 ? 1 : 0;
}

double TruthValue::number() const {
  if (!is_numeric()) {
    throw std::logic_error("truth value has no numeric payload");
  }
  return value_;
}

bool TruthValue::operator==(const TruthValue& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::bit || kind_ == Kind::scalar) {
    return value_ == other.value_;
  }
  return true;
}

std::string TruthValue::to_string() const {
  switch (kind_) {
    case Kind::bit:
      return value_ == 1.0 ? "1" : "0";
    case Kind::scalar: {
      // 12 significant digits, trailing zeros kept: output stays byte-stable.
      // The payload is in (0,1), so the significant digits start right after
      // the leading zeros and the needed decimal count follows the exponent.
      const int exponent = static_cast<int>(std::floor(std::log10(value_)));
      const int decimals = 11 - exponent;
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.*f", decimals, value_);
      return buf;
    }
    case Kind::undefined:
      return "undefined";
    case Kind::null:
      return "null";
  }
  return "";
}

}  // namespace qsem
