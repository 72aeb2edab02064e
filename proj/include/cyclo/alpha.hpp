#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclo {

using BigInt = boost::multiprecision::cpp_int;

/// Exact nonnegative rational kept in lowest terms. Used for alpha values
/// and for thresholds such as 3/4 and 1/2.
class AlphaValue {
 public:
  AlphaValue() : num_(0), den_(1) {}
  AlphaValue(BigInt numerator, BigInt denominator);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  std::string str() const;

  /// Parses "p/q" or a bare integer "p".
  static AlphaValue parse(std::string_view text);

  friend AlphaValue operator*(const AlphaValue& a, const AlphaValue& b);
  friend AlphaValue operator-(const AlphaValue& a, const AlphaValue& b);
  friend bool operator==(const AlphaValue& a, const AlphaValue& b) = default;
  friend std::strong_ordering operator<=>(const AlphaValue& a,
                                          const AlphaValue& b);

 private:
  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const AlphaValue& a);

/// |a - b| as an exact rational.
AlphaValue abs_diff(const AlphaValue& a, const AlphaValue& b);

inline const AlphaValue kThreeQuarters{3, 4};
inline const AlphaValue kOneHalf{1, 2};
inline const AlphaValue kOne{1, 1};

}  // namespace cyclo
