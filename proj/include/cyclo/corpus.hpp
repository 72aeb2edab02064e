#pragma once

// Descriptor lists used by campaigns, scans, and the property suite.

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/group.hpp"

namespace cyclo::corpus {

/// Partitions of n as nondecreasing part lists, in lexicographic order.
std::vector<std::vector<std::uint32_t>> partitions(unsigned n);

/// "Z2^2 x Z8" style descriptor for an abelian p-group shape.
std::string abelian_descriptor(const AbelianShape& shape);

/// All abelian p-group shapes with order p^n <= cap (n >= 1).
std::vector<AbelianShape> abelian_shapes(std::uint64_t p, std::uint64_t cap);

/// True for shapes (1,...,1,top), i.e. Z_p^m x Z_{p^top}.
bool is_elementary_plus(const AbelianShape& shape, std::uint32_t top);

/// Mixed corpus: abelian p-groups (p = 2, 3, 5), the maximal-cyclic families,
/// (almost) extraspecial groups, generalized dihedral/dicyclic groups, direct
/// products with Z_2^k, a few coprime products, and non-nilpotent
/// dihedralizations of odd-order groups.
std::vector<std::string> standard_corpus(std::uint64_t abelian_cap, std::uint64_t family_cap);

}  // namespace cyclo::corpus
