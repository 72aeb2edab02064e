#include "cyclo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclo/corpus.hpp"
#include "cyclo/descriptor.hpp"
#include "cyclo/error.hpp"
#include "cyclo/parallel.hpp"

namespace cyclo::verify {

namespace {

using Clock = std::chrono::steady_clock;
using formulas::FamilyKind;

bool is_pow2(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

unsigned log2_exact(std::uint64_t n) {
  unsigned k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  return k;
}

std::uint64_t pow2(unsigned n) { return std::uint64_t{1} << n; }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string with_order(const char* prefix, std::uint64_t order, const char* suffix = "") {
  return prefix + std::to_string(order) + suffix;
}

/// Shape of an abelian p-group descriptor made only of Z / Z^k factors.
AbelianShape shape_from_descriptor(const GroupDescriptor& d) {
  std::vector<std::uint64_t> moduli;
  auto take = [&](const GroupDescriptor& c) {
    if (c.kind == DescriptorKind::cyclic) {
      moduli.push_back(c.param);
    } else if (c.kind == DescriptorKind::cyclic_power) {
      moduli.insert(moduli.end(), c.exponent, c.param);
    } else {
      throw Error(Errc::invalid_parameter, to_string(d) + " is not an abelian p-group descriptor");
    }
  };
  if (d.kind == DescriptorKind::direct) {
    for (const auto& c : d.children) take(c);
  } else {
    take(d);
  }
  auto primes = prime_divisors(std::accumulate(moduli.begin(), moduli.end(), std::uint64_t{1},
                                               std::multiplies<>()));
  if (primes.size() != 1) {
    throw Error(Errc::invalid_parameter, to_string(d) + " is not an abelian p-group descriptor");
  }
  const std::uint64_t p = primes.front();
  std::vector<std::uint32_t> parts;
  for (auto m : moduli) {
    std::uint32_t e = 0;
    while (m > 1) {
      if (m % p != 0) {
        throw Error(Errc::invalid_parameter, to_string(d) + " mixes primes");
      }
      m /= p;
      ++e;
    }
    parts.push_back(e);
  }
  std::sort(parts.begin(), parts.end());
  return AbelianShape::make(p, std::move(parts));
}

AbelianShape shape_from_descriptor(const std::string& text) {
  return shape_from_descriptor(canonicalize(parse_descriptor(text)));
}

/// Single 2-primary shape of an abelian 2-group, or nullopt.
std::optional<AbelianShape> two_group_shape(const Group& g) {
  if (!is_pow2(g.order()) || g.order() == 1 || !g.is_abelian()) return std::nullopt;
  auto inv = abelian_invariants(g);
  return inv.at(2);
}

bool census_equal(const Group& a, const Group& b) {
  return a.order() == b.order() && order_profile(a) == order_profile(b) &&
         cyclic_census(a) == cyclic_census(b);
}

}  // namespace

// ---------------------------------------------------------------------------

bool CampaignReport::check(std::string_view assertion, bool ok, const std::string& descriptor,
                           std::string detail) {
  auto it = std::find_if(assertions.begin(), assertions.end(),
                         [&](const AssertionTally& t) { return t.name == assertion; });
  if (it == assertions.end()) {
    assertions.push_back({std::string(assertion), 0, 0});
    it = std::prev(assertions.end());
  }
  ++it->checks;
  if (!ok) {
    ++it->failures;
    counterexamples.push_back({descriptor, std::string(assertion), std::move(detail)});
  }
  return ok;
}

void CampaignReport::merge(CampaignReport&& other) {
  groups_examined += other.groups_examined;
  for (auto& t : other.assertions) {
    auto it = std::find_if(assertions.begin(), assertions.end(),
                           [&](const AssertionTally& a) { return a.name == t.name; });
    if (it == assertions.end()) {
      assertions.push_back(std::move(t));
    } else {
      it->checks += t.checks;
      it->failures += t.failures;
    }
  }
  auto append = [](auto& into, auto& from) {
    into.insert(into.end(), std::make_move_iterator(from.begin()),
                std::make_move_iterator(from.end()));
  };
  append(counterexamples, other.counterexamples);
  append(members, other.members);
  append(notes, other.notes);
}

bool is_in_c(const Group& g, const CensusLimits& limits) {
  return cyclic_census(g, limits).alpha == kThreeQuarters && is_nilpotent(g, limits);
}

CampaignReport run_campaign(std::string id, const std::vector<std::string>& descriptors,
                            const MemberCheck& check, unsigned jobs) {
  const auto start = Clock::now();
  auto parts = parallel_map(descriptors.size(), jobs, [&](std::size_t i) {
    CampaignReport r;
    try {
      check(descriptors[i], r);
    } catch (const std::exception& e) {
      r.check("evaluation", false, descriptors[i], e.what());
    }
    return r;
  });
  CampaignReport report;
  report.id = std::move(id);
  for (auto& p : parts) report.merge(std::move(p));
  report.wall_seconds = seconds_since(start);
  return report;
}

std::vector<std::string> unreproduced(const CampaignReport& report, const MemberCheck& check) {
  std::vector<std::string> out;
  for (const auto& c : report.counterexamples) {
    CampaignReport again;
    try {
      check(c.descriptor, again);
    } catch (const std::exception& e) {
      again.check("evaluation", false, c.descriptor, e.what());
    }
    bool reproduced = std::any_of(again.counterexamples.begin(), again.counterexamples.end(),
                                  [&](const Counterexample& x) {
                                    return x.assertion == c.assertion;
                                  });
    if (!reproduced) out.push_back(c.descriptor);
  }
  return out;
}

// -- abelian classification ----------------------------------------------------

CampaignReport verify_abelian_classification(unsigned max_exponent,
                                             unsigned bruteforce_exponent, unsigned jobs) {
  if (max_exponent > 40) {
    throw Error(Errc::cap_exceeded, "abelian classification is limited to order 2^40");
  }
  std::vector<std::string> descriptors;
  std::size_t top = 0;
  for (unsigned n = 1; n <= max_exponent; ++n) {
    auto parts = corpus::partitions(n);
    if (n == max_exponent) top = parts.size();
    for (auto& p : parts) {
      descriptors.push_back(corpus::abelian_descriptor(AbelianShape::make(2, std::move(p))));
    }
  }
  MemberCheck check = [bruteforce_exponent](const std::string& desc, CampaignReport& r) {
    const AbelianShape shape = shape_from_descriptor(desc);
    const unsigned n = shape.total();
    ++r.groups_examined;
    const BigInt l1 = formulas::l1_abelian(shape);
    const AlphaValue alpha = formulas::alpha_of(l1, formulas::ipow(2, n));
    const bool three_q = corpus::is_elementary_plus(shape, 2);
    const bool half = corpus::is_elementary_plus(shape, 3);
    r.check("alpha = 3/4 iff Z2^m x Z4", (alpha == kThreeQuarters) == three_q, desc,
            "alpha=" + alpha.str());
    r.check("alpha = 1/2 iff Z2^m x Z8", (alpha == kOneHalf) == half, desc,
            "alpha=" + alpha.str());
    r.check("alpha = 1 iff elementary abelian", (alpha == kOne) == (shape.partition.back() == 1),
            desc, "alpha=" + alpha.str());
    if (n <= bruteforce_exponent) {
      auto census = cyclic_census(build_abelian(shape));
      r.check("closed form matches census", BigInt(census.l1) == l1, desc,
              "census " + std::to_string(census.l1) + " vs closed form " + l1.str());
    }
    if (alpha == kThreeQuarters) r.members.push_back(desc);
  };
  auto report = run_campaign("abelian", descriptors, check, jobs);
  report.parameters = {{"max_exponent", std::to_string(max_exponent)},
                       {"bruteforce_exponent", std::to_string(bruteforce_exponent)}};
  report.notes.push_back("partitions at order 2^" + std::to_string(max_exponent) + ": " +
                         std::to_string(top));
  return report;
}

// -- single-group checks ---------------------------------------------------------

CampaignReport check_commutator_structure(const Group& g, const std::string& desc) {
  if (!is_in_c(g)) {
    throw Error(Errc::invalid_parameter, desc + " is not in the class");
  }
  CampaignReport r;
  r.id = "commutator-structure";
  ++r.groups_examined;
  r.check("order is a power of 2", is_pow2(g.order()), desc);
  if (!is_pow2(g.order())) return r;
  const ElementSet derived = commutator_subgroup(g);
  const ElementSet frattini = frattini_pgroup(g, 2);
  const bool first = derived == frattini;
  bool second = false;
  std::string quotient_shape;
  if (derived.size() < g.order()) {
    Group q = quotient(g, derived.elements());
    auto inv = abelian_invariants(q);
    if (auto it = inv.find(2); it != inv.end()) {
      quotient_shape = it->second.str();
      second = inv.size() == 1 && corpus::is_elementary_plus(it->second, 2) &&
               is_elementary_abelian(g, derived);
    }
  }
  r.check("G' = Phi(G) or (G/G' ~ Z2^m x Z4 and G' elementary abelian)", first || second, desc,
          "|G'|=" + std::to_string(derived.size()) + " |Phi|=" + std::to_string(frattini.size()));
  r.notes.push_back(desc + ": " + (first ? "G' = Phi(G)" : "G/G' " + quotient_shape) +
                    (first && second ? " and G/G' " + quotient_shape : ""));
  return r;
}

void check_commutator_structure(const std::string& descriptor, CampaignReport& report) {
  report.merge(check_commutator_structure(build_from_descriptor(descriptor), descriptor));
}

CampaignReport check_involution_criterion(const Group& g, const std::string& desc) {
  if (!is_pow2(g.order()) || g.order() < 4) {
    throw Error(Errc::invalid_parameter, desc + " does not have order 2^n with n >= 2");
  }
  const OrderProfile profile = order_profile(g);
  if (profile.exponent != 4) {
    throw Error(Errc::invalid_parameter, desc + " does not have exponent 4");
  }
  CampaignReport r;
  r.id = "involution-criterion";
  ++r.groups_examined;
  const unsigned n = log2_exact(g.order());
  const CyclicCensus census = cyclic_census(g);
  const bool in_c = census.alpha == kThreeQuarters && is_nilpotent(g);
  const std::string detail = "I=" + std::to_string(profile.involutions) +
                             " n4=" + std::to_string(census.count(4)) +
                             " alpha=" + census.alpha.str();
  r.check("in C iff I(G) = 2^(n-1) - 1", in_c == (profile.involutions == pow2(n - 1) - 1), desc,
          detail);
  r.check("in C iff n4 = 2^(n-2)", in_c == (census.count(4) == pow2(n - 2)), desc, detail);
  r.check("2^n = 1 + n2 + 2 n4", g.order() == 1 + census.count(2) + 2 * census.count(4), desc,
          detail);
  if (in_c) r.members.push_back(desc);
  return r;
}

void check_involution_criterion(const std::string& descriptor, CampaignReport& report) {
  Group g = build_from_descriptor(descriptor);
  if (!is_pow2(g.order()) || g.order() < 4 || order_profile(g).exponent != 4) return;
  report.merge(check_involution_criterion(g, descriptor));
}

// -- family campaigns ------------------------------------------------------------

std::string_view family_id(Family f) noexcept {
  switch (f) {
    case Family::extraspecial: return "extraspecial";
    case Family::almost_extraspecial: return "almost-extraspecial";
    case Family::dicyclic: return "dicyclic";
    case Family::gen_dihedral: return "gen-dihedral";
    case Family::maximal_cyclic: return "maximal-cyclic";
  }
  return "unknown";
}

std::vector<std::string> family_members(Family f, std::uint64_t cap) {
  std::vector<std::string> out;
  switch (f) {
    case Family::extraspecial:
      for (std::uint64_t o = 8; o <= cap; o *= 4) {
        out.push_back(with_order("ES+(", o, ")"));
        out.push_back(with_order("ES-(", o, ")"));
      }
      break;
    case Family::almost_extraspecial:
      for (std::uint64_t o = 16; o <= cap; o *= 4) out.push_back(with_order("AES(", o, ")"));
      break;
    case Family::dicyclic:
      for (const auto& s : corpus::abelian_shapes(2, cap / 2)) {
        const auto a = corpus::abelian_descriptor(s);
        const std::uint64_t count = pow2(static_cast<unsigned>(s.partition.size())) - 1;
        for (std::uint64_t i = 0; i < count; ++i) {
          out.push_back("Dic(" + a + ", " + std::to_string(i) + ")");
        }
      }
      break;
    case Family::gen_dihedral:
      for (const auto& s : corpus::abelian_shapes(2, cap / 2)) {
        out.push_back("Dih(" + corpus::abelian_descriptor(s) + ")");
      }
      break;
    case Family::maximal_cyclic:
      for (std::uint64_t o = 8; o <= cap; o *= 2) {
        out.push_back(with_order("D", o));
        out.push_back(with_order("Q", o));
        if (o >= 16) {
          out.push_back(with_order("SD", o));
          out.push_back(with_order("M", o));
        }
        out.push_back(with_order("Z", o));
        out.push_back(with_order("Z2 x Z", o / 2));
      }
      break;
  }
  return out;
}

std::vector<unsigned> three_quarter_solutions(FamilyKind kind, unsigned n_max) {
  using Rational = boost::multiprecision::cpp_rational;
  std::vector<unsigned> out;
  for (unsigned n = 1; n <= n_max; ++n) {
    auto pow2r = [&](int e) {
      Rational r = 1;
      for (int i = 0; i < std::abs(e); ++i) r *= 2;
      return e < 0 ? Rational(1) / r : r;
    };
    const int ni = static_cast<int>(n);
    Rational l1;
    switch (kind) {
      case FamilyKind::modular: l1 = 2 * ni; break;
      case FamilyKind::dihedral: l1 = pow2r(ni - 1) + ni; break;
      case FamilyKind::generalized_quaternion: l1 = pow2r(ni - 2) + ni; break;
      case FamilyKind::quasi_dihedral: l1 = 3 * pow2r(ni - 3) + ni; break;
    }
    if (l1 / pow2r(ni) == Rational(3, 4)) out.push_back(n);
  }
  return out;
}

namespace {

void check_special(Family f, const std::string& desc, CampaignReport& r) {
  const auto d = canonicalize(parse_descriptor(desc));
  const Group g = build_from_descriptor(d);
  const unsigned n = log2_exact(g.order());
  ++r.groups_examined;
  const OrderProfile profile = order_profile(g);
  const CyclicCensus census = cyclic_census(g);
  const bool in_c = census.alpha == kThreeQuarters && is_nilpotent(g);
  const ElementSet z = center(g);
  const ElementSet derived = commutator_subgroup(g);
  const ElementSet frattini = frattini_pgroup(g, 2);
  r.notes.push_back(desc + ": alpha=" + census.alpha.str());
  r.check("exponent 4", profile.exponent == 4, desc,
          "exponent " + std::to_string(profile.exponent));

  if (f == Family::extraspecial) {
    r.check("not in C", !in_c, desc, "alpha=" + census.alpha.str());
    r.check("G' = Phi(G) = Z(G) of order 2",
            z.size() == 2 && derived == frattini && frattini == z, desc);
    r.check("I(G) != 2^(n-1) - 1", profile.involutions != pow2(n - 1) - 1, desc);
  } else {
    r.check("alpha = 3/4 exactly", census.alpha == kThreeQuarters, desc,
            "alpha=" + census.alpha.str());
    r.check("in C", in_c, desc);
    bool cyclic4 = z.size() == 4 && std::any_of(z.begin(), z.end(), [&](const Element& e) {
                     return element_order(g, e) == 4;
                   });
    r.check("Z(G) cyclic of order 4 and G' = Phi(G) of order 2",
            cyclic4 && derived == frattini && derived.size() == 2, desc);
    r.check("I(G) = 2^(n-1) - 1", profile.involutions == pow2(n - 1) - 1, desc);
    if (in_c) r.members.push_back(desc);
  }

  // D8 * G1 decomposition, G1 one step smaller in the same family.
  if (n >= 4 && !(f == Family::extraspecial && n < 5)) {
    std::string g1_desc;
    if (f == Family::almost_extraspecial) {
      g1_desc = n == 4 ? "Z4" : with_order("AES(", g.order() / 4, ")");
    } else {
      g1_desc = with_order(d.kind == DescriptorKind::extraspecial_plus ? "ES+(" : "ES-(",
                           g.order() / 4, ")");
    }
    const Group g1 = build_from_descriptor(g1_desc);
    const auto n2_g1 = cyclic_census(g1).count(2);
    const auto expected = formulas::central_product_counts(n, n2_g1);
    r.check("n2, n4 match central-product counts",
            BigInt(census.count(2)) == expected.n2 && BigInt(census.count(4)) == expected.n4,
            desc,
            "census (" + std::to_string(census.count(2)) + "," + std::to_string(census.count(4)) +
                ") vs (" + expected.n2.str() + "," + expected.n4.str() + ")");
    r.check("D8 * G1 census equals descriptor census",
            census_equal(central_product(dihedral(3), g1), g), desc, "G1=" + g1_desc);
  }
}

void check_dicyclic(const std::string& desc, CampaignReport& r) {
  const auto d = canonicalize(parse_descriptor(desc));
  const Group a = build_from_descriptor(d.children.at(0));
  const Group g = build_from_descriptor(d);
  const unsigned n = log2_exact(g.order());
  ++r.groups_examined;
  const auto census_a = cyclic_census(a);
  const auto census = cyclic_census(g);
  r.check("|L1(Dic(A))| = |L1(A)| + 2^(n-2)",
          BigInt(census.l1) == formulas::l1_dicyclic(census_a.l1, n), desc,
          "l1=" + std::to_string(census.l1) + " l1(A)=" + std::to_string(census_a.l1));
  bool twisted_order4 = true;
  for (const auto& e : g.elements()) {
    if (e[e.size() - 1] == 1 && element_order(g, e) != 4) twisted_order4 = false;
  }
  r.check("twisted elements have order 4", twisted_order4, desc);
  const bool in_c = census.alpha == kThreeQuarters && is_nilpotent(g);
  const bool elementary = is_elementary_abelian_2group(a);
  r.check("in C iff A elementary abelian", in_c == elementary, desc,
          "alpha=" + census.alpha.str());
  r.check("in C iff |L1(A)| = |A|", in_c == (census_a.l1 == a.order()), desc);
  if (in_c) {
    r.members.push_back(desc);
    auto shape = two_group_shape(g);
    r.check("member has invariants (1,...,1,2)",
            shape && corpus::is_elementary_plus(*shape, 2), desc,
            shape ? shape->str() : "non-abelian");
  }
}

void check_gen_dihedral(const std::string& desc, CampaignReport& r) {
  const auto d = canonicalize(parse_descriptor(desc));
  const Group a = build_from_descriptor(d.children.at(0));
  const Group g = build_from_descriptor(d);
  ++r.groups_examined;
  const auto census_a = cyclic_census(a);
  const auto census = cyclic_census(g);
  r.check("|L1(D(A))| = |L1(A)| + |A|",
          BigInt(census.l1) == formulas::l1_gen_dihedral(census_a.l1, a.order()), desc);
  const auto shape = two_group_shape(a);
  const bool half_shape = shape && corpus::is_elementary_plus(*shape, 3);
  r.check("alpha(A) = 1/2 iff A ~ Z2^m x Z8", (census_a.alpha == kOneHalf) == half_shape, desc,
          "alpha(A)=" + census_a.alpha.str());
  const bool in_c = census.alpha == kThreeQuarters && is_nilpotent(g);
  r.check("D(A) in C iff alpha(A) = 1/2", in_c == (census_a.alpha == kOneHalf), desc,
          "alpha=" + census.alpha.str());
  if (in_c) {
    r.members.push_back(desc);
    const std::size_t m = shape ? shape->partition.size() - 1 : 0;
    const std::string target = m == 0 ? "D16" : "Z2^" + std::to_string(m) + " x D16";
    r.check("member census-equals Z2^m x D16", census_equal(g, build_from_descriptor(target)),
            desc, "compared with " + target);
  }
}

void check_maximal_cyclic(const std::string& desc, CampaignReport& r,
                          std::uint64_t bruteforce_cap) {
  const auto d = canonicalize(parse_descriptor(desc));
  const unsigned n = log2_exact(predicted_order(d));
  ++r.groups_examined;
  std::optional<FamilyKind> kind;
  BigInt l1;
  switch (d.kind) {
    case DescriptorKind::modular: kind = FamilyKind::modular; break;
    case DescriptorKind::dihedral: kind = FamilyKind::dihedral; break;
    case DescriptorKind::quaternion: kind = FamilyKind::generalized_quaternion; break;
    case DescriptorKind::quasi_dihedral: kind = FamilyKind::quasi_dihedral; break;
    default: break;
  }
  if (kind) {
    l1 = formulas::l1_maximal_cyclic(*kind, n);
  } else {
    l1 = formulas::l1_abelian(shape_from_descriptor(d));
  }
  const AlphaValue alpha = formulas::alpha_of(l1, formulas::ipow(2, n));
  const bool in_c = alpha == kThreeQuarters;  // 2-groups are nilpotent
  if (kind) {
    r.check("in C iff D16", in_c == (*kind == FamilyKind::dihedral && n == 4), desc,
            "alpha=" + alpha.str());
    if (n == formulas::family_min_n(*kind)) {
      static const std::map<FamilyKind, std::vector<unsigned>> expected = {
          {FamilyKind::modular, {3}},
          {FamilyKind::dihedral, {4}},
          {FamilyKind::generalized_quaternion, {1, 2}},
          {FamilyKind::quasi_dihedral, {3}}};
      r.check("alpha = 3/4 solution set over positive n",
              three_quarter_solutions(*kind, 64) == expected.at(*kind), desc);
    }
  } else {
    const bool abelian_member =
        d.kind == DescriptorKind::direct && n == 3;  // Z2 x Z4
    r.check("abelian member in C iff Z2 x Z4", in_c == abelian_member, desc,
            "alpha=" + alpha.str());
  }
  if (pow2(n) <= bruteforce_cap) {
    const Group g = build_from_descriptor(d);
    const auto census = cyclic_census(g);
    r.check("closed form matches census", BigInt(census.l1) == l1, desc,
            "census " + std::to_string(census.l1) + " vs " + l1.str());
    r.check("brute-force membership agrees",
            (census.alpha == kThreeQuarters && is_nilpotent(g)) == in_c, desc);
  }
  if (in_c) r.members.push_back(desc);
}

}  // namespace

void check_family_member(Family f, const std::string& descriptor, CampaignReport& report,
                         std::uint64_t bruteforce_cap) {
  switch (f) {
    case Family::extraspecial:
    case Family::almost_extraspecial:
      check_special(f, descriptor, report);
      break;
    case Family::dicyclic: check_dicyclic(descriptor, report); break;
    case Family::gen_dihedral: check_gen_dihedral(descriptor, report); break;
    case Family::maximal_cyclic: check_maximal_cyclic(descriptor, report, bruteforce_cap); break;
  }
}

CampaignReport verify_family(Family f, std::uint64_t cap, unsigned jobs,
                             std::uint64_t bruteforce_cap) {
  MemberCheck check = [f, bruteforce_cap](const std::string& d, CampaignReport& r) {
    check_family_member(f, d, r, bruteforce_cap);
  };
  auto report = run_campaign(std::string(family_id(f)), family_members(f, cap), check, jobs);
  report.parameters = {{"cap", std::to_string(cap)},
                       {"bruteforce_cap", std::to_string(bruteforce_cap)}};
  return report;
}

CampaignReport verify_central_product_counts(unsigned jobs) {
  const std::vector<std::string> descriptors = {"D8*D8",       "D8*Q8",       "D8*Z4",
                                                "D8*(D8*D8)", "D8*(D8*Q8)", "D8*(D8*Z4)"};
  MemberCheck check = [](const std::string& desc, CampaignReport& r) {
    const auto d = canonicalize(parse_descriptor(desc));
    if (d.kind != DescriptorKind::central || d.children.size() != 2 ||
        d.children[0].kind != DescriptorKind::dihedral || d.children[0].param != 8) {
      throw Error(Errc::invalid_parameter, desc + " is not of the form D8 * G1");
    }
    ++r.groups_examined;
    const Group g = build_from_descriptor(d);
    const Group g1 = build_from_descriptor(d.children[1]);
    const unsigned n = log2_exact(g.order());
    const auto census = cyclic_census(g);
    const auto expected = formulas::central_product_counts(n, cyclic_census(g1).count(2));
    const std::string detail =
        "census (" + std::to_string(census.count(2)) + "," + std::to_string(census.count(4)) +
        ") vs (" + expected.n2.str() + "," + expected.n4.str() + ")";
    r.check("n2 = 2^(n-2) + 2 n2(G1) + 1", BigInt(census.count(2)) == expected.n2, desc, detail);
    r.check("n4 = 3 2^(n-3) - n2(G1) - 1", BigInt(census.count(4)) == expected.n4, desc, detail);
    r.notes.push_back(desc + ": n2=" + std::to_string(census.count(2)) +
                      " n4=" + std::to_string(census.count(4)));
    if (is_in_c(g)) r.members.push_back(desc);

    // Flattened left-associated form builds the same census.
    auto flat = d.children[1];
    if (flat.kind == DescriptorKind::central) {
      GroupDescriptor left{DescriptorKind::central, 1, 1, std::nullopt, {d.children[0]}};
      for (const auto& c : flat.children) left.children.push_back(c);
      r.check("left-associated build agrees", census_equal(build_from_descriptor(left), g), desc,
              to_string(left));
    }

    static const std::map<std::string, std::pair<int, int>> quoted = {
        {"D8*Q8", {-1, 10}}, {"D8*D8", {-1, 6}}, {"D8*Z4", {7, 4}}};
    if (auto it = quoted.find(to_string(d)); it != quoted.end()) {
      const auto [q2, q4] = it->second;
      r.check("quoted counts", (q2 < 0 || census.count(2) == std::uint64_t(q2)) &&
                                   census.count(4) == std::uint64_t(q4),
              desc, detail);
    }
  };
  return run_campaign("central-product-counts", descriptors, check, jobs);
}

// -- corpus campaigns ------------------------------------------------------------

CampaignReport verify_involution_criterion(std::uint64_t cap, unsigned jobs) {
  std::vector<std::string> descriptors;
  for (auto& d : corpus::standard_corpus(cap, cap)) {
    const auto order = predicted_order(parse_descriptor(d));
    if (is_pow2(order) && order >= 4 && order <= cap) descriptors.push_back(std::move(d));
  }
  MemberCheck check = [](const std::string& d, CampaignReport& r) {
    check_involution_criterion(d, r);
  };
  auto report = run_campaign("involution-criterion", descriptors, check, jobs);
  report.parameters = {{"cap", std::to_string(cap)}};
  return report;
}

CampaignReport verify_commutator_structure(const std::vector<std::string>& members,
                                           unsigned jobs) {
  MemberCheck check = [](const std::string& d, CampaignReport& r) {
    check_commutator_structure(d, r);
  };
  return run_campaign("commutator-structure", members, check, jobs);
}

namespace {

std::vector<ElementSet> sample_normal_subgroups(const Group& g) {
  std::vector<ElementSet> out;
  auto add = [&](ElementSet s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  };
  add(ElementSet({g.identity()}));
  add(ElementSet(g.elements()));
  const ElementSet z = center(g);
  add(z);
  add(commutator_subgroup(g));
  auto primes = prime_divisors(g.order());
  if (primes.size() == 1) add(frattini_pgroup(g, primes.front()));
  // Cyclic subgroups of the center are normal.
  std::size_t taken = 0;
  for (const auto& e : z) {
    if (taken >= 6) break;
    const Element gens[] = {e};
    const std::size_t before = out.size();
    add(generated_subgroup(g, gens));
    taken += out.size() - before;
  }
  return out;
}

}  // namespace

CampaignReport verify_alpha_properties(std::uint64_t cap, unsigned jobs) {
  MemberCheck check = [](const std::string& desc, CampaignReport& r) {
    const Group g = build_from_descriptor(desc);
    ++r.groups_examined;
    const auto census = cyclic_census(g);
    const AlphaValue alpha = census.alpha;
    r.check("0 < alpha <= 1", alpha > AlphaValue(0, 1) && alpha <= kOne, desc, alpha.str());
    r.check("alpha = 1 iff elementary abelian 2-group",
            (alpha == kOne) == is_elementary_abelian_2group(g), desc, alpha.str());

    for (unsigned k = 1; k <= 4 && g.order() * pow2(k) <= CensusLimits{}.census_cap; ++k) {
      std::vector<std::uint64_t> twos(k, 2);
      const Group gk = direct_product(g, build_abelian(std::span<const std::uint64_t>(twos)));
      r.check("alpha(G x Z2^k) = alpha(G)", cyclic_census(gk).alpha == alpha, desc,
              "k=" + std::to_string(k));
    }

    static const char* coprime[] = {"Z3", "Z5", "Z7", "Z9", "Z3^2", "Dih(Z3)", "Dih(Z5)"};
    for (const char* h_desc : coprime) {
      const Group h = build_from_descriptor(h_desc);
      if (std::gcd(g.order(), h.order()) != 1 ||
          g.order() * h.order() > CensusLimits{}.census_cap) {
        continue;
      }
      const AlphaValue product = cyclic_census(direct_product(g, h)).alpha;
      r.check("alpha multiplicative over coprime orders",
              product == alpha * cyclic_census(h).alpha, desc, std::string("H=") + h_desc);
    }

    for (const auto& n : sample_normal_subgroups(g)) {
      const Group q = quotient(g, n.elements());
      const AlphaValue aq = cyclic_census(q).alpha;
      const std::string detail = "|N|=" + std::to_string(n.size()) + " alpha(G/N)=" + aq.str();
      r.check("alpha(G) <= alpha(G/N)", alpha <= aq, desc, detail);
      if (alpha == aq) {
        r.check("equality only for elementary abelian 2-group N",
                n.size() == 1 || (is_pow2(n.size()) && is_elementary_abelian(g, n)), desc,
                detail);
      }
    }

    if (g.is_abelian()) {
      auto primes = prime_divisors(g.order());
      if (primes.size() == 1) {
        const std::uint64_t p = primes.front();
        unsigned n = 0;
        for (std::uint64_t o = g.order(); o > 1; o /= p) ++n;
        const BigInt pn = formulas::ipow(p, n);
        const AlphaValue elementary = formulas::alpha_of(1 + (pn - 1) / (p - 1), pn);
        r.check("alpha(G) <= alpha(Z_p^n)", alpha <= elementary, desc);
        if (p != 2) r.check("alpha(G) < 3/4 for odd p", alpha < kThreeQuarters, desc);
      }
    }
  };
  auto report = run_campaign("alpha-properties", corpus::standard_corpus(cap, cap), check, jobs);
  report.parameters = {{"cap", std::to_string(cap)}};
  return report;
}

// -- scans -----------------------------------------------------------------------

CampaignReport scan_alpha_injectivity(std::uint64_t p, unsigned n, unsigned bruteforce_max_n) {
  if (!is_prime(p)) throw Error(Errc::invalid_parameter, std::to_string(p) + " is not prime");
  if (n == 0) throw Error(Errc::invalid_parameter, "n must be positive");
  if (n > 40) throw Error(Errc::cap_exceeded, "injectivity scan is limited to n <= 40");
  const auto start = Clock::now();
  std::map<BigInt, std::vector<std::string>> by_l1;
  std::vector<std::pair<std::string, BigInt>> rows;
  for (auto& part : corpus::partitions(n)) {
    const auto shape = AbelianShape::make(p, std::move(part));
    const auto desc = corpus::abelian_descriptor(shape);
    BigInt l1 = formulas::l1_abelian(shape);
    by_l1[l1].push_back(desc);
    rows.emplace_back(desc, std::move(l1));
  }
  MemberCheck check = [&by_l1, &rows, p, n, bruteforce_max_n](const std::string& desc,
                                                                CampaignReport& r) {
    ++r.groups_examined;
    const auto it = std::find_if(rows.begin(), rows.end(),
                                 [&](const auto& row) { return row.first == desc; });
    const BigInt& l1 = it->second;
    const auto& bucket = by_l1.at(l1);
    std::string others;
    for (const auto& o : bucket) {
      if (o != desc) others += (others.empty() ? "" : ", ") + o;
    }
    r.check("|L1| distinct among partitions", bucket.size() == 1, desc,
            "same |L1| = " + l1.str() + " as " + others);
    const BigInt order = formulas::ipow(p, n);
    if (n <= bruteforce_max_n && order <= CensusLimits{}.census_cap) {
      const auto census = cyclic_census(build_from_descriptor(desc));
      r.check("closed form matches census", BigInt(census.l1) == l1, desc);
    }
  };
  std::vector<std::string> descriptors;
  for (const auto& row : rows) descriptors.push_back(row.first);
  auto report = run_campaign("injectivity", descriptors, check, 1);
  report.parameters = {{"p", std::to_string(p)}, {"n", std::to_string(n)}};
  report.notes.push_back(std::to_string(rows.size()) + " partitions, " +
                         std::to_string(by_l1.size()) + " distinct |L1| values");
  report.wall_seconds = seconds_since(start);
  return report;
}

std::vector<SpectrumRecord> alpha_spectrum(const SpectrumCaps& caps, unsigned jobs) {
  const auto descriptors = corpus::standard_corpus(caps.abelian, caps.families);
  return parallel_map(descriptors.size(), jobs, [&](std::size_t i) {
    const Group g = build_from_descriptor(descriptors[i]);
    SpectrumRecord rec;
    rec.descriptor = descriptors[i];
    rec.order = g.order();
    rec.alpha = cyclic_census(g).alpha;
    rec.in_c = rec.alpha == kThreeQuarters && is_nilpotent(g);
    return rec;
  });
}

SpectrumSummary summarize_spectrum(std::vector<SpectrumRecord> records, const AlphaValue& eps) {
  SpectrumSummary s;
  s.eps = eps;
  std::map<AlphaValue, std::uint64_t> counts;
  for (const auto& r : records) {
    ++counts[r.alpha];
    if (abs_diff(r.alpha, kThreeQuarters) <= eps) ++s.near_three_quarters;
  }
  s.distinct.assign(counts.begin(), counts.end());
  s.records = std::move(records);
  return s;
}

}  // namespace cyclo::verify
