#include "cyclo/alpha.hpp"

#include <ostream>


#include "cyclo/error.hpp"

namespace cyclo {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_parameter: return "invalid-parameter";
    case Errc::invalid_presentation: return "invalid-presentation";
    case Errc::invalid_element: return "invalid-element";
    case Errc::not_a_subgroup: return "not-a-subgroup";
    case Errc::not_normal: return "not-normal";
    case Errc::cap_exceeded: return "cap-exceeded";
    case Errc::internal_inconsistency: return "internal-inconsistency";
    case Errc::syntax_error: return "syntax-error";
    case Errc::unknown_atom: return "unknown-atom";
    case Errc::malformed_parameter: return "malformed-parameter";
  }
  return "unknown";
}

AlphaValue::AlphaValue(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ <= 0) {
    throw Error(Errc::invalid_parameter, "alpha denominator must be positive");
  }
  if (num_ < 0) {
    throw Error(Errc::invalid_parameter, "alpha numerator must be nonnegative");
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string AlphaValue::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

AlphaValue AlphaValue::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) {
      throw Error(Errc::invalid_parameter,
                  "not a rational literal: '" + std::string(text) + "'");
    }
    return BigInt(std::string(s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_int(text), 1};
  return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

AlphaValue operator*(const AlphaValue& a, const AlphaValue& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

AlphaValue operator-(const AlphaValue& a, const AlphaValue& b) {
  BigInt n = a.num_ * b.den_ - b.num_ * a.den_;
  if (n < 0) {
    throw Error(Errc::invalid_parameter, "negative rational difference");
  }
  return {n, a.den_ * b.den_};
}

std::strong_ordering operator<=>(const AlphaValue& a, const AlphaValue& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

AlphaValue abs_diff(const AlphaValue& a, const AlphaValue& b) {
  return a < b ? b - a : a - b;
}

std::ostream& operator<<(std::ostream& os, const AlphaValue& a) {
  return os << a.str();
}

}  // namespace cyclo
