#include "stablenorm/ext_nat.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace stablenorm {

std::uint64_t ExtNat::value() const {
  if (is_infinite()) {
    throw std::domain_error("ExtNat: value() of infinity");
  }
  return value_;
}

ExtNat operator+(ExtNat lhs, ExtNat rhs) {
  if (lhs.is_infinite() || rhs.is_infinite()) {
    return ExtNat::infinity();
  }
  if (lhs.value_ > ExtNat::kInfinity - 1 - rhs.value_) {
    throw std::overflow_error("ExtNat: addition overflow");
  }
  return ExtNat(lhs.value_ + rhs.value_);
}

std::string ExtNat::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(value_);
}

ExtNat ExtNat::parse(const std::string& text) {
  if (text == "inf") {
    return infinity();
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == kInfinity) {
    throw std::invalid_argument("ExtNat: cannot parse '" + text + "'");
  }
  return ExtNat(value);
}

std::ostream& operator<<(std::ostream& os, ExtNat value) {
  return os << value.to_string();
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  numerator_ = numerator / g;
  denominator_ = denominator / g;
}

Rational operator*(const Rational& lhs, const Rational& rhs) {
  return Rational(lhs.numerator_ * rhs.numerator_,
                  lhs.denominator_ * rhs.denominator_);
}

std::string Rational::to_string() const {
  if (denominator_ == 1) {
    return std::to_string(numerator_);
  }
  return std::to_string(numerator_) + "/" + std::to_string(denominator_);
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view part) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
    return value;
  };
  const std::string_view view(text);
  if (slash == std::string::npos) {
    return Rational(parse_int(view));
  }
  return Rational(parse_int(view.substr(0, slash)), parse_int(view.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace stablenorm
