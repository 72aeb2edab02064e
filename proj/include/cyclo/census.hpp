#pragma once

// Brute-force structural analysis of constructed groups.

#include <cstdint>
#include <map>
#include <vector>

#include "cyclo/alpha.hpp"
#include "cyclo/group.hpp"

namespace cyclo {

/// Enumeration limits. Exceeding one raises Errc::cap_exceeded.
struct CensusLimits {
  std::uint64_t census_cap = std::uint64_t{1} << 12;
  std::uint64_t bruteforce_cap = std::uint64_t{1} << 10;
  std::uint64_t exhaustive_assoc_cap = std::uint64_t{1} << 8;
};

struct OrderProfile {
  std::map<std::uint64_t, std::uint64_t> counts;  // d -> #{g : ord(g) = d}
  std::uint64_t exponent = 1;
  std::uint64_t involutions = 0;

  std::uint64_t total() const;
  friend bool operator==(const OrderProfile&, const OrderProfile&) = default;
};

struct CyclicCensus {
  std::map<std::uint64_t, std::uint64_t> counts;  // d -> number of cyclic subgroups of order d
  std::uint64_t l1 = 0;
  AlphaValue alpha;

  std::uint64_t count(std::uint64_t d) const;
  friend bool operator==(const CyclicCensus&, const CyclicCensus&) = default;
};

/// Sorted set of canonical element encodings.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<Element> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(const Element& e) const;
  const std::vector<Element>& elements() const noexcept { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<Element> elements_;
};

std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

OrderProfile order_profile(const Group& g, const CensusLimits& limits = {});

/// n_d = c_d / phi(d) from the order profile.
CyclicCensus cyclic_census(const Group& g, const CensusLimits& limits = {});

/// Independent oracle: materializes <g> for every g and deduplicates.
CyclicCensus cyclic_census_bruteforce(const Group& g, const CensusLimits& limits = {});

ElementSet generated_subgroup(const Group& g, std::span<const Element> gens);
ElementSet commutator_subgroup(const Group& g, const CensusLimits& limits = {});

/// Phi(G) = G' G^p, valid for p-groups only.
ElementSet frattini_pgroup(const Group& g, std::uint64_t p, const CensusLimits& limits = {});

ElementSet center(const Group& g, const CensusLimits& limits = {});
bool is_nilpotent(const Group& g, const CensusLimits& limits = {});

/// Elements of order 2, in increasing encoding order.
std::vector<Element> involutions(const Group& g);

/// Invariant-factor partition for every prime dividing |A|.
std::map<std::uint64_t, AbelianShape> abelian_invariants(const Group& a,
                                                         const CensusLimits& limits = {});

/// Every element squares to the identity (which forces commutativity).
bool is_elementary_abelian(const Group& g, const ElementSet& subset);
bool is_elementary_abelian_2group(const Group& g);

/// Exhaustive group-law check (identity, inverse, and associativity on all
/// triples when |G| <= exhaustive_assoc_cap, otherwise on `samples` random
/// triples). Returns an empty string on success, else a description.
std::string check_group_axioms(const Group& g, const CensusLimits& limits = {},
                               std::uint64_t samples = 10000, std::uint64_t seed = 1);

}  // namespace cyclo
