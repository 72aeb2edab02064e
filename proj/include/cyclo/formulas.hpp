#pragma once

// Closed-form cyclic-subgroup counts, evaluated in exact integer arithmetic.

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>

#include "cyclo/alpha.hpp"
#include "cyclo/group.hpp"

namespace cyclo::formulas {

enum class FamilyKind { modular, dihedral, generalized_quaternion, quasi_dihedral };

std::string_view family_name(FamilyKind kind) noexcept;

/// Least n for which the family is defined (order 2^n).
unsigned family_min_n(FamilyKind kind) noexcept;

/// Number of elements of order dividing p^i in Z_{p^d1} x ... x Z_{p^d(k-1)}
/// (all factors except the largest), evaluated region by region.
BigInt h_value(const AbelianShape& shape, std::uint64_t i);

/// Number of cyclic subgroups of order p^i, for 1 <= i <= d_k.
BigInt g_count(const AbelianShape& shape, std::uint64_t i);

/// Total number of cyclic subgroups of an abelian p-group. Evaluates the
/// double-sum closed form and cross-checks it against 1 + sum_i g_count.
BigInt l1_abelian(const AbelianShape& shape);

/// The double-sum closed form alone.
BigInt l1_abelian_closed_form(const AbelianShape& shape);

BigInt l1_maximal_cyclic(FamilyKind kind, unsigned n);

struct CentralProductCounts {
  BigInt n2;
  BigInt n4;
  friend bool operator==(const CentralProductCounts&, const CentralProductCounts&) = default;
};

/// (n_2, n_4) of D8 * G1 of order 2^n, given n_2(G1).
CentralProductCounts central_product_counts(unsigned n, const BigInt& n2_of_g1);

/// |L1(Dic(A))| for Dic(A) of order 2^n.
BigInt l1_dicyclic(const BigInt& l1_a, unsigned n);

/// |L1(D(G))| = |L1(G)| + |G|.
BigInt l1_gen_dihedral(const BigInt& l1_g, const BigInt& order_g);

struct SpecialProfile {
  BigInt n2;
  BigInt n8;
  friend bool operator==(const SpecialProfile&, const SpecialProfile&) = default;
};

/// (n_2, n_8) of Z_2^n x Z_4^a x Z_8^b, with a + b >= 1.
SpecialProfile special_profile_n2_n8(unsigned n, unsigned a, unsigned b);

AlphaValue alpha_of(const BigInt& l1, const BigInt& order);
AlphaValue alpha_product(std::span<const AlphaValue> values);

BigInt ipow(std::uint64_t base, std::uint64_t exp);

}  // namespace cyclo::formulas
