#include "cyclo/formulas.hpp"

#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclo/error.hpp"

namespace cyclo::formulas {

namespace {

using Rational = boost::multiprecision::cpp_rational;

BigInt exact_div(const BigInt& num, const BigInt& den, const char* where) {
  if (den == 0 || num % den != 0) {
    throw Error(Errc::internal_inconsistency,
                std::string("inexact division in ") + where);
  }
  return num / den;
}

}  // namespace

std::string_view family_name(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::modular: return "modular";
    case FamilyKind::dihedral: return "dihedral";
    case FamilyKind::generalized_quaternion: return "generalized-quaternion";
    case FamilyKind::quasi_dihedral: return "quasi-dihedral";
  }
  return "unknown";
}

unsigned family_min_n(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::modular:
    case FamilyKind::quasi_dihedral:
      return 4;
    case FamilyKind::dihedral:
    case FamilyKind::generalized_quaternion:
      return 3;
  }
  return 3;
}

BigInt ipow(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

BigInt h_value(const AbelianShape& shape, std::uint64_t i) {
  const auto& d = shape.partition;
  const std::size_t k = d.size();
  // Region j covers d_j <= i <= d_{j+1} (d_0 = 0), the last one i >= d_{k-1},
  // with value p^{(k-1-j) i + d_1 + ... + d_j}. Adjacent regions overlap at
  // breakpoints and must agree there.
  std::optional<BigInt> value;
  std::uint64_t prefix = 0;
  for (std::size_t j = 0; j < k; ++j) {
    const std::uint64_t lo = j == 0 ? 0 : d[j - 1];
    if (j > 0) prefix += d[j - 1];
    const bool last = j + 1 == k;
    const std::uint64_t hi = last ? 0 : d[j];
    if (i < lo || (!last && i > hi)) continue;
    BigInt v = ipow(shape.p, (k - 1 - j) * i + prefix);
    if (value && *value != v) {
      throw Error(Errc::internal_inconsistency,
                  "h regions disagree at breakpoint i=" + std::to_string(i));
    }
    value = std::move(v);
  }
  if (!value) {
    throw Error(Errc::internal_inconsistency, "no h region covers i=" + std::to_string(i));
  }
  return *value;
}

BigInt g_count(const AbelianShape& shape, std::uint64_t i) {
  if (i < 1 || i > shape.partition.back()) {
    throw Error(Errc::invalid_parameter,
                "g_count index " + std::to_string(i) + " out of range 1.." +
                    std::to_string(shape.partition.back()));
  }
  const BigInt pi = ipow(shape.p, i);
  const BigInt pi1 = ipow(shape.p, i - 1);
  return exact_div(pi * h_value(shape, i) - pi1 * h_value(shape, i - 1), pi - pi1,
                   "g_count");
}

BigInt l1_abelian_closed_form(const AbelianShape& shape) {
  const std::uint64_t p = shape.p;
  std::vector<std::uint64_t> d{0};
  d.insert(d.end(), shape.partition.begin(), shape.partition.end());
  const std::size_t k = shape.partition.size();

  Rational sum = 0;
  std::uint64_t prefix = 0;  // d_0 + ... + d_i
  for (std::size_t i = 0; i + 2 <= k; ++i) {
    prefix += d[i];
    const std::uint64_t r = k - i - 1;
    Rational term = Rational(ipow(p, prefix));
    term *= Rational(ipow(p, r + 1) - 1, ipow(p, r) - 1);
    term *= Rational(ipow(p, r * d[i + 1]) - ipow(p, r * d[i]));
    sum += term;
  }
  sum /= Rational(p - 1);
  std::uint64_t tail_prefix = 0;
  for (std::size_t i = 0; i < k; ++i) tail_prefix += d[i];
  Rational total = 1 + sum + Rational((d[k] - d[k - 1]) * ipow(p, tail_prefix));
  if (boost::multiprecision::denominator(total) != 1) {
    throw Error(Errc::internal_inconsistency,
                "closed form is not an integer for " + shape.str());
  }
  return boost::multiprecision::numerator(total);
}

BigInt l1_abelian(const AbelianShape& shape) {
  BigInt by_orders = 1;
  for (std::uint64_t i = 1; i <= shape.partition.back(); ++i) by_orders += g_count(shape, i);
  BigInt closed = l1_abelian_closed_form(shape);
  if (closed != by_orders) {
    throw Error(Errc::internal_inconsistency,
                "closed form " + closed.str() + " disagrees with per-order sum " +
                    by_orders.str() + " for " + shape.str());
  }
  return closed;
}

BigInt l1_maximal_cyclic(FamilyKind kind, unsigned n) {
  if (n < family_min_n(kind)) {
    throw Error(Errc::invalid_parameter, std::string(family_name(kind)) +
                                             " needs n >= " +
                                             std::to_string(family_min_n(kind)));
  }
  switch (kind) {
    case FamilyKind::modular: return BigInt(2 * n);
    case FamilyKind::dihedral: return ipow(2, n - 1) + n;
    case FamilyKind::generalized_quaternion: return ipow(2, n - 2) + n;
    case FamilyKind::quasi_dihedral: return 3 * ipow(2, n - 3) + n;
  }
  throw Error(Errc::invalid_parameter, "unknown family");
}

CentralProductCounts central_product_counts(unsigned n, const BigInt& n2_of_g1) {
  if (n < 4 || n2_of_g1 < 0) {
    throw Error(Errc::invalid_parameter, "central product counts need n >= 4");
  }
  return {ipow(2, n - 2) + 2 * n2_of_g1 + 1, 3 * ipow(2, n - 3) - n2_of_g1 - 1};
}

BigInt l1_dicyclic(const BigInt& l1_a, unsigned n) {
  if (l1_a <= 0 || n < 2) {
    throw Error(Errc::invalid_parameter, "dicyclic count needs l1 > 0 and n >= 2");
  }
  return l1_a + ipow(2, n - 2);
}

BigInt l1_gen_dihedral(const BigInt& l1_g, const BigInt& order_g) {
  if (l1_g <= 0 || order_g <= 0) {
    throw Error(Errc::invalid_parameter, "generalized dihedral count needs positive inputs");
  }
  return l1_g + order_g;
}

SpecialProfile special_profile_n2_n8(unsigned n, unsigned a, unsigned b) {
  if (a + b == 0) {
    throw Error(Errc::invalid_parameter, "at least one of a, b must be positive");
  }
  return {ipow(2, n + a + b) - 1, ipow(2, n + 2 * a + 2 * b - 2) * (ipow(2, b) - 1)};
}

AlphaValue alpha_of(const BigInt& l1, const BigInt& order) {
  if (order <= 0) throw Error(Errc::invalid_parameter, "alpha needs a positive order");
  return AlphaValue(l1, order);
}

AlphaValue alpha_product(std::span<const AlphaValue> values) {
  AlphaValue result = kOne;
  for (const auto& v : values) result = result * v;
  return result;
}

}  // namespace cyclo::formulas
