// Acceptance gate: every criterion prints one PASS/FAIL line with its
// runtime and budget; the exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cyclo/cache.hpp"
#include "cyclo/census.hpp"
#include "cyclo/corpus.hpp"
#include "cyclo/descriptor.hpp"
#include "cyclo/formulas.hpp"
#include "cyclo/verify.hpp"
#include "random_descriptor.hpp"

using namespace cyclo;
using namespace cyclo::verify;

namespace {

// Collects failure messages for one criterion.
struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void absorb(const CampaignReport& r) {
    for (const auto& c : r.counterexamples) {
      failures.push_back(r.id + ": " + c.descriptor + " [" + c.assertion + "] " + c.detail);
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<void(Outcome&)> body;
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// Members of the class found by criteria 4-8, for the structural check.
std::vector<std::string> g_members;

void add_members(const CampaignReport& r) {
  for (const auto& m : r.members) {
    const auto key = canonical_string(m);
    if (std::find(g_members.begin(), g_members.end(), key) == g_members.end()) {
      g_members.push_back(key);
    }
  }
}

AlphaValue alpha(const std::string& d) { return cyclic_census(build_from_descriptor(d)).alpha; }

void golden_alpha(Outcome& o) {
  const std::pair<const char*, AlphaValue> golden[] = {
      {"Z4", kThreeQuarters}, {"Z4 x Z4", AlphaValue(5, 8)}, {"Z8", kOneHalf},
      {"D16", kThreeQuarters}, {"Q8", AlphaValue(5, 8)},     {"D8*Z4", kThreeQuarters}};
  for (const auto& [d, expected] : golden) {
    const Group g = build_from_descriptor(d);
    o.expect(cyclic_census(g).alpha == expected, std::string("alpha(") + d + ") != " + expected.str());
    o.expect(cyclic_census_bruteforce(g).alpha == expected,
             std::string("brute-force alpha(") + d + ") != " + expected.str());
  }
  for (unsigned n = 1; n <= 10; ++n) {
    const std::string d = "Z2^" + std::to_string(n);
    o.expect(alpha(d) == kOne, "alpha(" + d + ") != 1");
  }
}

void closed_form_vs_bruteforce(Outcome& o) {
  const std::pair<std::uint64_t, std::uint64_t> bounds[] = {{2, 1024}, {3, 729}, {5, 625}};
  std::size_t shapes = 0;
  for (const auto& [p, cap] : bounds) {
    for (const auto& s : corpus::abelian_shapes(p, cap)) {
      ++shapes;
      const auto closed = formulas::l1_abelian_closed_form(s);
      const auto brute = cyclic_census_bruteforce(build_abelian(s)).l1;
      o.expect(closed == brute, s.str() + ": closed form " + closed.str() + " vs brute force " +
                                    std::to_string(brute));
    }
  }
  o.notes.push_back(std::to_string(shapes) + " shapes");
}

void central_products(Outcome& o) {
  o.absorb(verify_central_product_counts(jobs()));
  const auto d8q8 = cyclic_census_bruteforce(build_from_descriptor("D8*Q8"));
  const auto d8d8 = cyclic_census_bruteforce(build_from_descriptor("D8*D8"));
  const auto d8z4 = cyclic_census_bruteforce(build_from_descriptor("D8*Z4"));
  o.expect(d8q8.count(4) == 10, "n4(D8*Q8) != 10");
  o.expect(d8d8.count(4) == 6, "n4(D8*D8) != 6");
  o.expect(d8z4.count(2) == 7, "n2(D8*Z4) != 7");
  o.expect(d8z4.count(4) == 4, "n4(D8*Z4) != 4");
}

void special_groups(Outcome& o) {
  const auto es = verify_family(Family::extraspecial, 128, jobs());
  const auto aes = verify_family(Family::almost_extraspecial, 256, jobs());
  o.absorb(es);
  o.absorb(aes);
  for (const auto& d : family_members(Family::extraspecial, 128)) {
    o.expect(alpha(d) != kThreeQuarters, d + " has alpha 3/4");
  }
  for (const auto& d : family_members(Family::almost_extraspecial, 256)) {
    o.expect(alpha(d) == kThreeQuarters, d + " does not have alpha 3/4");
  }
  o.expect(es.groups_examined == 6 && aes.groups_examined == 3, "unexpected family sizes");
  add_members(aes);
}

void dicyclic(Outcome& o) {
  const auto r = verify_family(Family::dicyclic, 128, jobs());
  o.absorb(r);
  // Every A of order <= 64 with each of its involutions.
  std::size_t expected = 0;
  for (const auto& s : corpus::abelian_shapes(2, 64)) expected += (1u << s.partition.size()) - 1;
  o.expect(r.groups_examined == expected, "dicyclic family size mismatch");
  o.notes.push_back(std::to_string(r.groups_examined) + " groups, " +
                    std::to_string(r.members.size()) + " in C");
  add_members(r);
}

void gen_dihedral(Outcome& o) {
  const auto r = verify_family(Family::gen_dihedral, 256, jobs());
  o.absorb(r);
  o.expect(r.groups_examined == corpus::abelian_shapes(2, 128).size(),
           "generalized dihedral family size mismatch");
  for (const auto& m : r.members) {
    const auto shape = canonicalize(parse_descriptor(m)).children.at(0);
    o.expect(alpha(to_string(shape)) == kOneHalf, m + " base does not have alpha 1/2");
  }
  o.notes.push_back(std::to_string(r.members.size()) + " in C");
  add_members(r);
}

void maximal_cyclic(Outcome& o) {
  const auto r = verify_family(Family::maximal_cyclic, 4096, jobs(), 256);
  o.absorb(r);
  std::vector<std::string> non_abelian;
  for (const auto& m : r.members) {
    if (!build_from_descriptor(m).is_abelian()) non_abelian.push_back(m);
  }
  o.expect(non_abelian == std::vector<std::string>{"D16"}, "non-abelian members other than D16");
  using formulas::FamilyKind;
  o.expect(three_quarter_solutions(FamilyKind::modular, 64) == std::vector<unsigned>{3}, "M");
  o.expect(three_quarter_solutions(FamilyKind::dihedral, 64) == std::vector<unsigned>{4}, "D");
  o.expect(three_quarter_solutions(FamilyKind::generalized_quaternion, 64) ==
               std::vector<unsigned>{1, 2},
           "Q");
  o.expect(three_quarter_solutions(FamilyKind::quasi_dihedral, 64) == std::vector<unsigned>{3},
           "SD");
  add_members(r);
}

void involution_criterion(Outcome& o) {
  const auto r = verify_involution_criterion(256, jobs());
  o.absorb(r);
  o.expect(r.groups_examined > 0, "no exponent-4 groups examined");
  o.notes.push_back(std::to_string(r.groups_examined) + " exponent-4 groups");
  add_members(r);
}

void commutator_structure(Outcome& o) {
  const auto r = verify_commutator_structure(g_members, jobs());
  o.absorb(r);
  o.expect(r.groups_examined == g_members.size(), "not every member was examined");
  o.notes.push_back(std::to_string(g_members.size()) + " members");
}

void injectivity(Outcome& o) {
  std::size_t collisions = 0;
  for (unsigned n = 1; n <= 20; ++n) {
    const auto r = scan_alpha_injectivity(2, n, 10);
    for (const auto& c : r.counterexamples) {
      if (c.assertion == "|L1| distinct among partitions") {
        ++collisions;
        o.notes.push_back("collision: " + c.descriptor + " " + c.detail);
      } else {
        o.failures.push_back(c.descriptor + " [" + c.assertion + "]");
      }
    }
  }
  o.notes.push_back(collisions == 0 ? "no collisions for n <= 20"
                                    : std::to_string(collisions) + " collisions (report only)");
}

void alpha_properties(Outcome& o) {
  const auto r = verify_alpha_properties(256, jobs());
  o.absorb(r);
  o.notes.push_back(std::to_string(r.groups_examined) + " groups");
}

void parser_and_cache(Outcome& o) {
  testing::RandomDescriptor gen(12);
  for (int i = 0; i < 10000; ++i) {
    const auto d = canonicalize(gen());
    const auto text = to_string(d);
    if (parse_descriptor(text) != d || canonical_string(text) != text) {
      o.failures.push_back("round trip: " + text);
    }
  }
  std::random_device rd;
  const auto path = std::filesystem::temp_directory_path() /
                    ("cyclo-acceptance-" + std::to_string(rd()) + ".jsonl");
  {
    Cache cache(path);
    for (const auto& d : corpus::standard_corpus(256, 128)) cache.lookup(d);
    Cache reopened(path);
    o.expect(reopened.size() == cache.size(), "cache did not persist every record");
    for (const auto& key : reopened.keys()) {
      bool hit = false;
      const auto rec = reopened.lookup(key, &hit);
      o.expect(hit, "cache miss after reload: " + key);
      o.expect(rec == compute_record(key), "cached record differs from recomputation: " + key);
    }
    const auto r = revalidate(reopened, 0.05, 7, jobs());
    o.expect(r.sampled > 0, "empty revalidation sample");
    for (const auto& m : r.mismatches) o.failures.push_back("cache mismatch: " + m);
    o.notes.push_back(std::to_string(r.sampled) + "/" + std::to_string(r.total) +
                      " records revalidated");
  }
  std::filesystem::remove(path);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden alpha values", 1, golden_alpha},
      {2, "closed-form |L1| equals brute force for abelian p-groups", 60,
       closed_form_vs_bruteforce},
      {3, "central product counts D8 * G1", 10, central_products},
      {4, "extraspecial groups outside C, almost extraspecial inside", 30, special_groups},
      {5, "generalized dicyclic membership", 60, dicyclic},
      {6, "alpha 1/2 abelian groups and generalized dihedral membership", 60, gen_dihedral},
      {7, "maximal cyclic subgroup families", 30, maximal_cyclic},
      {8, "involution count criterion", 30, involution_criterion},
      {9, "commutator structure of discovered members", 30, commutator_structure},
      {10, "|L1| injectivity over partitions, p = 2, n <= 20", 60, injectivity},
      {11, "alpha properties over the corpus", 60, alpha_properties},
      {12, "descriptor round trip and cache revalidation", 30, parser_and_cache},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      std::ostringstream msg;
      msg << "over time budget (" << c.budget_seconds << " s)";
      o.failures.push_back(msg.str());
    }
    const bool ok = o.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << ". " << c.name
              << "  [" << std::fixed << std::setprecision(2) << secs << " s / "
              << std::setprecision(0) << c.budget_seconds << " s]";
    for (const auto& n : o.notes) std::cout << "  " << n << ";";
    std::cout << '\n';
    for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i) {
      std::cout << "        " << o.failures[i] << '\n';
    }
    if (o.failures.size() > 10) {
      std::cout << "        ... " << o.failures.size() - 10 << " more\n";
    }
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
