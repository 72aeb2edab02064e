#pragma once

// Group-expression DSL.
//
//   expr    := term ("x" term)*            direct product
//   term    := factor ("*" factor)*        central product (binds tighter)
//   factor  := primary ("^" INT)?          repeated direct factor
//   primary := atom | "(" expr ")"
//   atom    := Z INT | D INT | Q INT | SD INT | M INT
//            | ES+ (INT) | ES- (INT) | AES (INT)
//            | Dih(expr) | Dic(expr [, INT])
//
// Atom names are case-insensitive, whitespace is ignored, and family
// parameters give the total group order (D16 is the dihedral group of order 16).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclo/group.hpp"

namespace cyclo {

enum class DescriptorKind {
  cyclic,           // Z m
  cyclic_power,     // Z m ^ k
  dihedral,         // D n
  quaternion,       // Q n
  quasi_dihedral,   // SD n
  modular,          // M n
  extraspecial_plus,
  extraspecial_minus,
  almost_extraspecial,
  gen_dihedral,     // Dih(expr)
  gen_dicyclic,     // Dic(expr [, z-index])
  direct,
  central,
};

struct GroupDescriptor {
  DescriptorKind kind = DescriptorKind::cyclic;
  std::uint64_t param = 1;     // modulus or total order
  std::uint64_t exponent = 1;  // repetition count for cyclic_power
  std::optional<std::uint64_t> z_index;
  std::vector<GroupDescriptor> children;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

GroupDescriptor parse_descriptor(std::string_view text);

/// Flattens nested direct products and left-nested central products,
/// normalizes Z m ^ 1 to Z m, and sorts direct-product operands.
GroupDescriptor canonicalize(const GroupDescriptor& d);

/// Printed form of `d` as given (no reordering).
std::string to_string(const GroupDescriptor& d);

/// to_string(canonicalize(parse_descriptor(text))).
std::string canonical_string(std::string_view text);

/// Group order implied by the descriptor, without building it.
/// Raises cap_exceeded past order_cap().
std::uint64_t predicted_order(const GroupDescriptor& d);

/// Builds the group. Direct products take the designated involution of the
/// last operand that has one; central products associate to the left.
Group build_from_descriptor(const GroupDescriptor& d);
Group build_from_descriptor(std::string_view text);

}  // namespace cyclo
