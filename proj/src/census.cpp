#include "cyclo/census.hpp"

#include <algorithm>
#include <numeric>
#include <deque>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cyclo/error.hpp"

namespace cyclo {

namespace {

void require_cap(const Group& g, std::uint64_t cap, const char* what) {
  if (g.order() > cap) {
    throw Error(Errc::cap_exceeded, std::string(what) + ": group of order " +
                                        std::to_string(g.order()) +
                                        " exceeds the cap of " + std::to_string(cap));
  }
}

// Dense indexing of the elements of a group for membership bitmaps.
class Indexed {
 public:
  explicit Indexed(const Group& g) : elements_(g.elements()) {
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  }

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t index(const Element& e) const { return index_.at(e); }

 private:
  std::vector<Element> elements_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
};

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n > 1 && n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

std::uint64_t OrderProfile::total() const {
  std::uint64_t t = 0;
  for (const auto& [d, c] : counts) t += c;
  return t;
}

std::uint64_t CyclicCensus::count(std::uint64_t d) const {
  auto it = counts.find(d);
  return it == counts.end() ? 0 : it->second;
}

ElementSet::ElementSet(std::vector<Element> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool ElementSet::contains(const Element& e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw Error(Errc::invalid_parameter, "phi(0) is undefined");
  std::uint64_t result = n;
  for (auto p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

OrderProfile order_profile(const Group& g, const CensusLimits& limits) {
  require_cap(g, limits.census_cap, "order profile");
  OrderProfile profile;
  // Each unvisited element's power sequence fixes the orders of all its powers.
  const auto elements = g.elements();
  const Element id = g.identity();
  std::vector<std::uint64_t> orders(elements.size(), 0);
  auto index_of = [&](const Element& e) {
    return static_cast<std::size_t>(
        std::lower_bound(elements.begin(), elements.end(), e) - elements.begin());
  };
  std::vector<std::size_t> powers;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (orders[i] != 0) continue;
    powers.assign(1, i);
    for (Element x = elements[i]; x != id;) {
      x = g.multiply(x, elements[i]);
      powers.push_back(index_of(x));
      if (powers.size() > elements.size()) {
        throw Error(Errc::internal_inconsistency, "element order exceeds group order");
      }
    }
    const std::uint64_t k = powers.size();
    for (std::uint64_t j = 1; j <= k; ++j) orders[powers[j - 1]] = k / std::gcd(j, k);
  }
  for (auto o : orders) ++profile.counts[o];
  profile.exponent = profile.counts.rbegin()->first;
  if (auto it = profile.counts.find(2); it != profile.counts.end()) {
    profile.involutions = it->second;
  }
  return profile;
}

namespace {

CyclicCensus finish_census(std::map<std::uint64_t, std::uint64_t> counts,
                           std::uint64_t order) {
  CyclicCensus census;
  census.counts = std::move(counts);
  for (const auto& [d, n] : census.counts) census.l1 += n;
  census.alpha = AlphaValue(census.l1, order);
  return census;
}

}  // namespace

CyclicCensus cyclic_census(const Group& g, const CensusLimits& limits) {
  auto profile = order_profile(g, limits);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const auto& [d, c] : profile.counts) {
    auto phi = euler_phi(d);
    if (c % phi != 0) {
      throw Error(Errc::internal_inconsistency,
                  "phi(" + std::to_string(d) + ") does not divide c_d");
    }
    counts[d] = c / phi;
  }
  return finish_census(std::move(counts), g.order());
}

CyclicCensus cyclic_census_bruteforce(const Group& g, const CensusLimits& limits) {
  require_cap(g, limits.bruteforce_cap, "brute-force census");
  std::set<std::vector<Element>> seen;
  const Element id = g.identity();
  for (const auto& e : g.elements()) {
    std::vector<Element> cyclic{id};
    for (Element x = e; x != id; x = g.multiply(x, e)) cyclic.push_back(x);
    std::sort(cyclic.begin(), cyclic.end());
    seen.insert(std::move(cyclic));
  }
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const auto& s : seen) ++counts[s.size()];
  return finish_census(std::move(counts), g.order());
}

ElementSet generated_subgroup(const Group& g, std::span<const Element> gens) {
  for (const auto& s : gens) {
    if (!g.contains(s)) {
      throw Error(Errc::invalid_element, s.str() + " is not an element of the group");
    }
  }
  std::unordered_set<Element, ElementHash> seen{g.identity()};
  std::deque<Element> work{g.identity()};
  while (!work.empty()) {
    Element x = std::move(work.front());
    work.pop_front();
    for (const auto& s : gens) {
      Element y = g.multiply(x, s);
      if (seen.insert(y).second) work.push_back(std::move(y));
    }
  }
  return ElementSet(std::vector<Element>(seen.begin(), seen.end()));
}

namespace {

/// Subgroup generated by `candidates`, closing only over those that are not
/// already inside the running subgroup.
ElementSet subgroup_from(const Group& g, std::span<const Element> candidates,
                         std::vector<Element>* chosen = nullptr) {
  std::vector<Element> gens;
  ElementSet h({g.identity()});
  for (const auto& c : candidates) {
    if (h.contains(c)) continue;
    gens.push_back(c);
    h = generated_subgroup(g, gens);
  }
  if (chosen) *chosen = std::move(gens);
  return h;
}

std::vector<Element> generating_set(const Group& g, const std::vector<Element>& elems) {
  std::vector<Element> gens;
  subgroup_from(g, elems, &gens);
  return gens;
}

/// Smallest normal subgroup of G containing `seed`.
ElementSet normal_closure(const Group& g, std::span<const Element> gens,
                          std::vector<Element> seed) {
  std::vector<Element> chosen;
  ElementSet n = subgroup_from(g, seed, &chosen);
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& s : gens) {
      const Element si = g.invert(s);
      for (const auto& x : n) {
        Element c = g.multiply(g.multiply(si, x), s);
        if (!n.contains(c)) {
          chosen.push_back(std::move(c));
          n = generated_subgroup(g, chosen);
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
  }
  return n;
}

}  // namespace

ElementSet commutator_subgroup(const Group& g, const CensusLimits& limits) {
  require_cap(g, limits.census_cap, "commutator subgroup");
  const auto gens = generating_set(g, g.elements());
  std::vector<Element> comms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      comms.push_back(g.commutator(gens[i], gens[j]));
    }
  }
  return normal_closure(g, gens, std::move(comms));
}

ElementSet frattini_pgroup(const Group& g, std::uint64_t p, const CensusLimits& limits) {
  if (!is_prime(p) || !is_power_of(g.order(), p)) {
    throw Error(Errc::invalid_parameter, "Frattini via G'G^p needs a p-group");
  }
  require_cap(g, limits.census_cap, "Frattini subgroup");
  const ElementSet derived = commutator_subgroup(g, limits);
  std::vector<Element> candidates(derived.begin(), derived.end());
  for (const auto& x : g.elements()) candidates.push_back(g.power(x, p));
  return subgroup_from(g, candidates);
}

ElementSet center(const Group& g, const CensusLimits& limits) {
  require_cap(g, limits.census_cap, "center");
  const auto elems = g.elements();
  const auto gens = generating_set(g, elems);
  std::vector<Element> z;
  for (const auto& x : elems) {
    bool central = std::all_of(gens.begin(), gens.end(), [&](const Element& y) {
      return g.multiply(x, y) == g.multiply(y, x);
    });
    if (central) z.push_back(x);
  }
  return ElementSet(std::move(z));
}

bool is_nilpotent(const Group& g, const CensusLimits& limits) {
  require_cap(g, limits.census_cap, "nilpotency");
  Indexed idx(g);
  const auto& elems = idx.elements();
  const auto gens = generating_set(g, elems);
  const std::size_t n = elems.size();
  // Upper central series: Z_{i+1} = { x : [x, s] in Z_i for every generator s }.
  std::vector<char> in_z(n, 0);
  in_z[idx.index(g.identity())] = 1;
  std::size_t size = 1;
  while (size < n) {
    std::vector<char> next = in_z;
    std::size_t next_size = size;
    for (std::size_t i = 0; i < n; ++i) {
      if (in_z[i]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < gens.size() && ok; ++j) {
        ok = in_z[idx.index(g.commutator(elems[i], gens[j]))];
      }
      if (ok) {
        next[i] = 1;
        ++next_size;
      }
    }
    if (next_size == size) return false;
    in_z = std::move(next);
    size = next_size;
  }
  return true;
}

std::vector<Element> involutions(const Group& g) {
  const Element id = g.identity();
  std::vector<Element> out;
  for (auto& x : g.elements()) {
    if (x != id && g.multiply(x, x) == id) out.push_back(std::move(x));
  }
  return out;
}

std::map<std::uint64_t, AbelianShape> abelian_invariants(const Group& a,
                                                         const CensusLimits& limits) {
  if (!a.is_abelian()) {
    throw Error(Errc::invalid_parameter, "abelian invariants need an abelian group");
  }
  auto profile = order_profile(a, limits);
  std::map<std::uint64_t, AbelianShape> out;
  for (auto p : prime_divisors(a.order())) {
    // s_i = #{g : g^{p^i} = 1}; e_i = log_p(s_i / s_{i-1}) = #{j : d_j >= i}.
    std::vector<std::uint32_t> e;
    std::uint64_t prev = 1;
    for (std::uint64_t pi = p;; pi *= p) {
      std::uint64_t s = 0;
      for (const auto& [d, c] : profile.counts) {
        if (pi % d == 0) s += c;
      }
      if (s == prev) break;
      if (s % prev != 0 || !is_power_of(s / prev, p)) {
        throw Error(Errc::internal_inconsistency, "s_i ratio is not a power of p");
      }
      std::uint32_t k = 0;
      for (std::uint64_t r = s / prev; r > 1; r /= p) ++k;
      e.push_back(k);
      prev = s;
    }
    std::vector<std::uint32_t> parts;
    for (std::size_t i = 0; i < e.size(); ++i) {
      std::uint32_t next = i + 1 < e.size() ? e[i + 1] : 0;
      for (std::uint32_t m = 0; m < e[i] - next; ++m) {
        parts.push_back(static_cast<std::uint32_t>(i + 1));
      }
    }
    out.emplace(p, AbelianShape::make(p, std::move(parts)));
  }
  return out;
}

bool is_elementary_abelian(const Group& g, const ElementSet& subset) {
  const Element id = g.identity();
  return std::all_of(subset.begin(), subset.end(),
                     [&](const Element& x) { return g.multiply(x, x) == id; });
}

bool is_elementary_abelian_2group(const Group& g) {
  return g.order() > 1 && is_elementary_abelian(g, ElementSet(g.elements()));
}

std::string check_group_axioms(const Group& g, const CensusLimits& limits,
                               std::uint64_t samples, std::uint64_t seed) {
  auto elems = g.elements();
  if (elems.size() != g.order()) return "element count differs from order";
  const Element id = g.identity();
  for (const auto& x : elems) {
    if (g.multiply(id, x) != x || g.multiply(x, id) != x) {
      return "identity law fails at " + x.str();
    }
    if (g.multiply(g.invert(x), x) != id || g.multiply(x, g.invert(x)) != id) {
      return "inverse law fails at " + x.str();
    }
    if (!g.contains(g.invert(x))) return "inverse leaves the group at " + x.str();
  }
  auto check = [&](const Element& a, const Element& b, const Element& c) {
    return g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c));
  };
  if (g.order() <= limits.exhaustive_assoc_cap) {
    for (const auto& a : elems)
      for (const auto& b : elems) {
        Element ab = g.multiply(a, b);
        if (!g.contains(ab)) return "product leaves the group";
        for (const auto& c : elems) {
          if (g.multiply(ab, c) != g.multiply(a, g.multiply(b, c))) {
            return "associativity fails at " + a.str() + b.str() + c.str();
          }
        }
      }
    return {};
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto& a = elems[pick(rng)];
    const auto& b = elems[pick(rng)];
    const auto& c = elems[pick(rng)];
    if (!check(a, b, c)) return "associativity fails at " + a.str() + b.str() + c.str();
  }
  return {};
}

}  // namespace cyclo
