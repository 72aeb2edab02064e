#include <doctest.h>

#include "cyclo/census.hpp"
#include "cyclo/corpus.hpp"
#include "cyclo/descriptor.hpp"
#include "cyclo/error.hpp"
#include "cyclo/formulas.hpp"
#include "oracle.hpp"

using namespace cyclo;
using namespace cyclo::formulas;

namespace {

AbelianShape shape(std::uint64_t p, std::vector<std::uint32_t> parts) {
  return AbelianShape::make(p, std::move(parts));
}

bool throws_code(auto&& f, Errc code) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_SUITE("formulas") {
  TEST_CASE("h values") {
    CHECK(h_value(shape(2, {1, 2}), 0) == 1);
    CHECK(h_value(shape(2, {1, 2}), 1) == 2);
    CHECK(h_value(shape(2, {2, 2}), 2) == 4);
  }

  TEST_CASE("g counts") {
    CHECK(g_count(shape(2, {1, 2}), 1) == 3);
    CHECK(g_count(shape(2, {1, 2}), 2) == 2);
    CHECK(g_count(shape(2, {1, 1, 1}), 1) == 7);
    CHECK(throws_code([] { g_count(shape(2, {1, 2}), 0); }, Errc::invalid_parameter));
    CHECK(throws_code([] { g_count(shape(2, {1, 2}), 3); }, Errc::invalid_parameter));
  }

  TEST_CASE("g counts match the independent per-order oracle") {
    for (std::uint64_t p : {2, 3, 5, 7}) {
      for (unsigned n = 1; n <= 8; ++n) {
        for (const auto& parts : corpus::partitions(n)) {
          const auto counts = oracle::abelian_cyclic_counts(p, parts);
          const auto s = shape(p, parts);
          for (std::uint32_t i = 1; i <= parts.back(); ++i) {
            CHECK(g_count(s, i) == counts.at(oracle::ipow(p, i)));
          }
        }
      }
    }
  }

  TEST_CASE("closed-form l1 values") {
    CHECK(l1_abelian(shape(2, {1, 2})) == 6);
    CHECK(alpha_of(l1_abelian(shape(2, {1, 2})), 8) == kThreeQuarters);
    CHECK(l1_abelian(shape(2, {2, 2})) == 10);
    CHECK(alpha_of(10, 16) == AlphaValue(5, 8));
    for (std::uint64_t p : {2, 3, 5}) {
      for (unsigned n = 1; n <= 9; ++n) {
        std::vector<std::uint32_t> ones(n, 1);
        CHECK(l1_abelian(shape(p, ones)) == 1 + (ipow(p, n) - 1) / (p - 1));
      }
    }
    // One cyclic factor: the tail term alone with d0 = 0.
    for (std::uint64_t p : {2, 3, 5}) {
      for (std::uint32_t d = 1; d <= 12; ++d) CHECK(l1_abelian_closed_form(shape(p, {d})) == d + 1);
    }
  }

  TEST_CASE("closed form equals g-sum and the oracle for large shapes") {
    for (std::uint64_t p : {2, 3, 5}) {
      const unsigned top = p == 2 ? 16 : 10;
      for (unsigned n = 1; n <= top; ++n) {
        for (const auto& parts : corpus::partitions(n)) {
          const auto s = shape(p, parts);
          const auto closed = l1_abelian_closed_form(s);
          BigInt sum = 1;
          for (std::uint32_t i = 1; i <= parts.back(); ++i) sum += g_count(s, i);
          CHECK(closed == sum);
          if (p == 2 || n <= 8) CHECK(closed == oracle::abelian_l1(p, parts));
        }
      }
    }
  }

  TEST_CASE("closed form equals brute force on constructed abelian groups") {
    const std::pair<std::uint64_t, std::uint64_t> bounds[] = {{2, 1024}, {3, 729}, {5, 625}};
    for (const auto& [p, cap] : bounds) {
      for (const auto& s : corpus::abelian_shapes(p, cap)) {
        CAPTURE(s.str());
        const Group g = build_abelian(s);
        CHECK(l1_abelian(s) == cyclic_census(g).l1);
        if (g.order() <= 256) CHECK(l1_abelian(s) == cyclic_census_bruteforce(g).l1);
      }
    }
  }

  TEST_CASE("alpha of cyclic p-groups strictly decreases") {
    for (std::uint64_t p : {2, 3, 5, 7}) {
      AlphaValue prev = AlphaValue::parse("2");
      for (std::uint32_t n = 1; n <= 12; ++n) {
        const AlphaValue a = alpha_of(l1_abelian(shape(p, {n})), ipow(p, n));
        CHECK(a < prev);
        prev = a;
      }
    }
  }

  TEST_CASE("maximal cyclic families") {
    CHECK(l1_maximal_cyclic(FamilyKind::dihedral, 4) == 12);
    CHECK(alpha_of(12, 16) == kThreeQuarters);
    CHECK(l1_maximal_cyclic(FamilyKind::quasi_dihedral, 4) == 10);
    CHECK(l1_maximal_cyclic(FamilyKind::generalized_quaternion, 3) == 5);
    CHECK(l1_maximal_cyclic(FamilyKind::modular, 4) == 8);
    CHECK(throws_code([] { l1_maximal_cyclic(FamilyKind::modular, 3); }, Errc::invalid_parameter));
    CHECK(throws_code([] { l1_maximal_cyclic(FamilyKind::dihedral, 2); }, Errc::invalid_parameter));
    for (unsigned n = 3; n <= 8; ++n) {
      CHECK(l1_maximal_cyclic(FamilyKind::dihedral, n) == cyclic_census_bruteforce(dihedral(n)).l1);
      CHECK(l1_maximal_cyclic(FamilyKind::generalized_quaternion, n) ==
            cyclic_census_bruteforce(generalized_quaternion(n)).l1);
      if (n >= 4) {
        CHECK(l1_maximal_cyclic(FamilyKind::quasi_dihedral, n) ==
              cyclic_census_bruteforce(quasi_dihedral(n)).l1);
        CHECK(l1_maximal_cyclic(FamilyKind::modular, n) ==
              cyclic_census_bruteforce(modular(n)).l1);
      }
    }
  }

  TEST_CASE("central product counts") {
    CHECK(central_product_counts(5, 1) == CentralProductCounts{11, 10});
    CHECK(central_product_counts(5, 5) == CentralProductCounts{19, 6});
    CHECK(central_product_counts(4, 1) == CentralProductCounts{7, 4});
    CHECK(throws_code([] { central_product_counts(3, 1); }, Errc::invalid_parameter));
    CHECK(throws_code([] { central_product_counts(5, -1); }, Errc::invalid_parameter));
    const char* g1s[] = {"D8", "Q8", "Z4", "D8*D8", "D8*Q8", "D8*Z4"};
    for (const char* g1 : g1s) {
      CAPTURE(g1);
      const Group h = build_from_descriptor(g1);
      const Group g = central_product(dihedral(3), h);
      const unsigned n = g.order() == 16 ? 4 : g.order() == 32 ? 5 : g.order() == 64 ? 6 : 7;
      const auto c = cyclic_census_bruteforce(g);
      const auto expected = central_product_counts(n, cyclic_census(h).count(2));
      CHECK(BigInt(c.count(2)) == expected.n2);
      CHECK(BigInt(c.count(4)) == expected.n4);
    }
  }

  TEST_CASE("dicyclic and generalized dihedral counts") {
    CHECK(l1_dicyclic(8, 4) == 12);
    CHECK(l1_gen_dihedral(4, 8) == 12);
    for (unsigned n = 1; n <= 8; ++n) {
      CHECK(l1_gen_dihedral(ipow(2, n), ipow(2, n)) == 2 * ipow(2, n));
    }
    CHECK(throws_code([] { l1_dicyclic(0, 4); }, Errc::invalid_parameter));
    CHECK(throws_code([] { l1_gen_dihedral(3, 0); }, Errc::invalid_parameter));
  }

  TEST_CASE("special profile counts") {
    CHECK(special_profile_n2_n8(0, 0, 1) == SpecialProfile{1, 1});
    CHECK(special_profile_n2_n8(1, 0, 1) == SpecialProfile{3, 2});
    // Z4 x Z8 has exactly three involutions.
    CHECK(special_profile_n2_n8(0, 1, 1) == SpecialProfile{3, 4});
    CHECK(throws_code([] { special_profile_n2_n8(2, 0, 0); }, Errc::invalid_parameter));
    for (unsigned n = 0; n <= 2; ++n) {
      for (unsigned a = 0; a <= 2; ++a) {
        for (unsigned b = 0; b <= 2; ++b) {
          if (a + b == 0 || n + 2 * a + 3 * b > 10) continue;
          std::vector<std::uint64_t> moduli;
          moduli.insert(moduli.end(), n, 2);
          moduli.insert(moduli.end(), a, 4);
          moduli.insert(moduli.end(), b, 8);
          const auto counts = oracle::enumerate_cyclic(moduli);
          const auto sp = special_profile_n2_n8(n, a, b);
          CHECK(sp.n2 == counts.at(2));
          CHECK(sp.n8 == (b > 0 ? counts.at(8) : 0));
        }
      }
    }
  }

  TEST_CASE("alpha helpers") {
    CHECK(alpha_of(12, 16) == kThreeQuarters);
    CHECK(alpha_of(4, 8) == kOneHalf);
    const AlphaValue parts[] = {kThreeQuarters, AlphaValue(2, 3)};
    CHECK(alpha_product(parts) == kOneHalf);
    CHECK(throws_code([] { alpha_of(1, 0); }, Errc::invalid_parameter));
  }
}
