#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace stablenorm {

/// A natural number or infinity. Addition absorbs infinity and infinity is
/// the maximum of the total order.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t value) : value_(value) {}  // NOLINT(implicit)

  static constexpr ExtNat infinity() {
    ExtNat result;
    result.value_ = kInfinity;
    return result;
  }

  constexpr bool is_finite() const { return value_ != kInfinity; }
  constexpr bool is_infinite() const { return value_ == kInfinity; }

  /// Throws std::domain_error when infinite.
  std::uint64_t value() const;

  friend constexpr auto operator<=>(ExtNat, ExtNat) = default;
  friend constexpr bool operator==(ExtNat, ExtNat) = default;

  friend ExtNat operator+(ExtNat lhs, ExtNat rhs);
  ExtNat& operator+=(ExtNat rhs) { return *this = *this + rhs; }

  /// "inf" or the decimal value.
  std::string to_string() const;

  /// Inverse of to_string.
  static ExtNat parse(const std::string& text);

 private:
  static constexpr std::uint64_t kInfinity =
      std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, ExtNat value);

inline ExtNat min(ExtNat a, ExtNat b) { return b < a ? b : a; }

/// Rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t numerator() const { return numerator_; }
  std::int64_t denominator() const { return denominator_; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend Rational operator*(const Rational& lhs, const Rational& rhs);

  /// "d" for integers, "d/m" otherwise.
  std::string to_string() const;
  static Rational parse(const std::string& text);

 private:
  std::int64_t numerator_ = 0;
  std::int64_t denominator_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace stablenorm
