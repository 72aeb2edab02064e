#pragma once

// Finite groups built from construction parameters. Elements are canonical
// residue tuples; multiplication is computed on demand, never tabulated.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace cyclo {

/// Canonical encoding of one group element: residues per cyclic coordinate
/// plus twist bits. Equal elements have identical encodings.
class Element {
 public:
  using value_type = std::uint32_t;
  using storage = boost::container::small_vector<value_type, 16>;

  Element() = default;
  Element(std::initializer_list<value_type> code) : code_(code) {}
  explicit Element(storage code) : code_(std::move(code)) {}

  std::span<const value_type> code() const noexcept {
    return {code_.data(), code_.size()};
  }
  std::size_t size() const noexcept { return code_.size(); }
  value_type operator[](std::size_t i) const { return code_[i]; }

  std::string str() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.code_ == b.code_;
  }
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    return std::lexicographical_compare_three_way(
        a.code_.begin(), a.code_.end(), b.code_.begin(), b.code_.end());
  }

 private:
  storage code_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

enum class GroupKind {
  abelian,
  metacyclic2,
  gen_dihedral,
  gen_dicyclic,
  direct_product,
  central_quotient,
  quotient,
};

std::string_view kind_name(GroupKind kind) noexcept;

/// Decomposition of an abelian p-group: Z_{p^d1} x ... x Z_{p^dk}, d1 <= ... <= dk.
struct AbelianShape {
  std::uint64_t p = 2;
  std::vector<std::uint32_t> partition;

  /// Validates primality and a nonempty nondecreasing partition of positive parts.
  static AbelianShape make(std::uint64_t p, std::vector<std::uint32_t> partition);

  std::uint32_t total() const;  // n, so the group has order p^n
  std::vector<std::uint64_t> moduli() const;
  std::string str() const;

  friend bool operator==(const AbelianShape&, const AbelianShape&) = default;
};

bool is_prime(std::uint64_t n) noexcept;

/// Hard ceiling on the order of any constructed group. Defaults to 2^14.
std::uint64_t order_cap() noexcept;
void set_order_cap(std::uint64_t cap) noexcept;

namespace detail {
class GroupImpl;
}

/// Immutable finite group value. Copies share the underlying construction.
class Group {
 public:
  std::uint64_t order() const noexcept;
  GroupKind kind() const noexcept;

  Element identity() const;
  Element multiply(const Element& a, const Element& b) const;
  Element invert(const Element& a) const;
  Element power(const Element& a, std::uint64_t k) const;
  Element commutator(const Element& a, const Element& b) const;  // a^-1 b^-1 a b

  /// True iff `e` is a well-formed canonical encoding of an element of this group.
  bool contains(const Element& e) const;

  /// All elements in increasing encoding order.
  std::vector<Element> elements() const;

  /// Range of each encoding coordinate (residue i lies in [0, radices()[i])).
  std::span<const std::uint32_t> radices() const noexcept;

  const std::optional<Element>& designated_involution() const noexcept {
    return involution_;
  }
  Group with_designated_involution(std::optional<Element> z) const;

  /// Exhaustive commutativity test (constant time for the abelian kind).
  bool is_abelian() const;

  explicit Group(std::shared_ptr<const detail::GroupImpl> impl,
                 std::optional<Element> involution = std::nullopt);

 private:
  std::shared_ptr<const detail::GroupImpl> impl_;
  std::optional<Element> involution_;
};

Group build_cyclic(std::uint64_t m);
Group build_abelian(std::span<const std::uint64_t> moduli);
Group build_abelian(std::initializer_list<std::uint64_t> moduli);
Group build_abelian(const AbelianShape& shape);
Group direct_product(const Group& g, const Group& h);

/// <x, y | x^m = 1, y^2 = x^s, y^-1 x y = x^t>; requires t^2 = 1 and s t = s (mod m).
Group build_metacyclic2(std::uint64_t m, std::uint64_t s, std::uint64_t t);

// The four 2-groups of order 2^n with a cyclic maximal subgroup.
Group dihedral(unsigned n);             // D_{2^n}, n >= 3
Group generalized_quaternion(unsigned n);  // Q_{2^n}, n >= 3
Group quasi_dihedral(unsigned n);       // S_{2^n}, n >= 4
Group modular(unsigned n);              // M(2^n), n >= 4

Group build_generalized_dihedral(const Group& a);
Group build_generalized_dicyclic(const Group& a, const Element& z);

/// Involution lying in a cyclic subgroup of maximal order of abelian `a`
/// (the one generated by the least element of maximal order).
Element default_dicyclic_involution(const Group& a);

/// (G x H) / <(z_G, z_H)> using the designated central involutions.
Group central_product(const Group& g, const Group& h);

/// G / N for a normal subgroup N given by its elements.
Group quotient(const Group& g, std::span<const Element> normal_subgroup);

std::uint64_t element_order(const Group& g, const Element& e);

namespace detail {

class GroupImpl {
 public:
  virtual ~GroupImpl() = default;

  virtual GroupKind kind() const noexcept = 0;
  virtual std::uint64_t order() const noexcept = 0;
  virtual Element identity() const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;
  virtual Element invert(const Element& a) const = 0;
  virtual bool is_canonical(const Element&) const { return true; }
  virtual bool known_abelian() const noexcept { return false; }
  /// Sorted element list when the implementation keeps one.
  virtual const std::vector<Element>* enumerated() const { return nullptr; }

  const std::vector<std::uint32_t>& radices() const noexcept { return radices_; }
  bool well_formed(const Element& e) const;

 protected:
  std::vector<std::uint32_t> radices_;
};

}  // namespace detail

}  // namespace cyclo
