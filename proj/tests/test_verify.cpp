#include <doctest.h>

#include <atomic>

#include "cyclo/descriptor.hpp"
#include "cyclo/error.hpp"
#include "cyclo/verify.hpp"

using namespace cyclo;
using namespace cyclo::verify;

namespace {

bool has_note(const CampaignReport& r, const std::string& needle) {
  for (const auto& n : r.notes) {
    if (n.find(needle) != std::string::npos) return true;
  }
  return false;
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

TEST_SUITE("verify") {
  TEST_CASE("class membership") {
    CHECK(is_in_c(build_from_descriptor("Z2^3 x Z4")));
    CHECK_FALSE(is_in_c(build_from_descriptor("Q8")));
    CHECK(is_in_c(build_from_descriptor("D8*Z4")));
    CHECK_FALSE(is_in_c(build_from_descriptor("D8")));
    CHECK(is_in_c(build_from_descriptor("Z2 x D16")));
  }

  TEST_CASE("abelian classification") {
    const auto r = verify_abelian_classification(10);
    CHECK(r.passed());
    CHECK(has_note(r, "partitions at order 2^10: 42"));
    CHECK(std::find(r.members.begin(), r.members.end(), "Z2 x Z4") != r.members.end());
    CHECK(std::find(r.members.begin(), r.members.end(), "Z4^2") == r.members.end());
    CHECK(r.members.size() == 9);  // Z2^m x Z4 for m = 0..8
  }

  TEST_CASE("commutator structure") {
    auto r = check_commutator_structure(build_from_descriptor("D16"), "D16");
    CHECK(r.passed());
    CHECK(has_note(r, "G' = Phi(G)"));
    r = check_commutator_structure(build_from_descriptor("Z2^2 x Z4"), "Z2^2 x Z4");
    CHECK(r.passed());
    CHECK(has_note(r, "G/G' p=2 (1,1,2)"));
    r = check_commutator_structure(build_from_descriptor("D8*Z4"), "D8*Z4");
    CHECK(r.passed());
    CHECK(throws_code([] { check_commutator_structure(build_from_descriptor("Q8"), "Q8"); },
                      Errc::invalid_parameter));
  }

  TEST_CASE("involution criterion") {
    auto r = check_involution_criterion(build_from_descriptor("D8*Z4"), "D8*Z4");
    CHECK(r.passed());
    CHECK(r.members == std::vector<std::string>{"D8*Z4"});
    r = check_involution_criterion(build_from_descriptor("D8*D8"), "D8*D8");
    CHECK(r.passed());
    CHECK(r.members.empty());
    r = check_involution_criterion(build_from_descriptor("Z4 x Z4"), "Z4 x Z4");
    CHECK(r.passed());
    CHECK(r.members.empty());
    CHECK(throws_code([] { check_involution_criterion(build_from_descriptor("D16"), "D16"); },
                      Errc::invalid_parameter));
  }

  TEST_CASE("family campaigns at small caps") {
    auto r = verify_family(Family::extraspecial, 128);
    CHECK(r.passed());
    CHECK(r.groups_examined == 6);
    CHECK(r.members.empty());
    CHECK(has_note(r, "ES+(32): alpha=13/16"));
    r = verify_family(Family::almost_extraspecial, 64);
    CHECK(r.passed());
    CHECK(r.members.size() == 2);
    r = verify_family(Family::gen_dihedral, 64);
    CHECK(r.passed());
    auto members = r.members;
    std::sort(members.begin(), members.end());
    CHECK(members == std::vector<std::string>{"Dih(Z2 x Z8)", "Dih(Z2^2 x Z8)", "Dih(Z8)"});
    r = verify_family(Family::maximal_cyclic, 4096);
    CHECK(r.passed());
    CHECK(r.members == std::vector<std::string>{"Z2 x Z4", "D16"});
  }

  TEST_CASE("dicyclic campaign covers every involution") {
    const auto members = family_members(Family::dicyclic, 32);
    // A of order <= 16: Z2 (1), Z4 (1), Z2^2 (3), Z8 (1), Z2 x Z4 (3), Z2^3 (7),
    // Z16 (1), Z2 x Z8 (3), Z4^2 (3), Z2^2 x Z4 (7), Z2^4 (15).
    CHECK(members.size() == 45);
    const auto r = verify_family(Family::dicyclic, 32);
    CHECK(r.passed());
    CHECK(r.members.size() == 1 + 3 + 7 + 15);
  }

  TEST_CASE("three-quarter solution sets") {
    using formulas::FamilyKind;
    CHECK(three_quarter_solutions(FamilyKind::modular, 64) == std::vector<unsigned>{3});
    CHECK(three_quarter_solutions(FamilyKind::dihedral, 64) == std::vector<unsigned>{4});
    CHECK(three_quarter_solutions(FamilyKind::generalized_quaternion, 64) ==
          std::vector<unsigned>{1, 2});
    CHECK(three_quarter_solutions(FamilyKind::quasi_dihedral, 64) == std::vector<unsigned>{3});
  }

  TEST_CASE("injectivity scan") {
    auto r = scan_alpha_injectivity(2, 6);
    CHECK(r.passed());
    CHECK(r.groups_examined == 11);
    r = scan_alpha_injectivity(2, 1);
    CHECK(r.passed());
    CHECK(r.groups_examined == 1);
    CHECK(throws_code([] { scan_alpha_injectivity(2, 41); }, Errc::cap_exceeded));
    CHECK(throws_code([] { scan_alpha_injectivity(4, 3); }, Errc::invalid_parameter));
  }

  TEST_CASE("alpha spectrum") {
    const auto records = alpha_spectrum({256, 64});
    const auto s = summarize_spectrum(records, AlphaValue(1, 100));
    std::vector<AlphaValue> values;
    for (const auto& [a, n] : s.distinct) values.push_back(a);
    for (const auto& v : {kOne, kThreeQuarters, AlphaValue(5, 8), kOneHalf}) {
      CHECK(std::find(values.begin(), values.end(), v) != values.end());
    }
    CHECK(std::is_sorted(values.begin(), values.end()));
    for (const auto& r : records) {
      CHECK(r.alpha > AlphaValue(0, 1));
      CHECK(r.alpha <= kOne);
      CHECK(r.in_c == is_in_c(build_from_descriptor(r.descriptor)));
    }
    CHECK(s.near_three_quarters > 0);
  }

  TEST_CASE("counterexamples reproduce when rerun alone") {
    const std::vector<std::string> groups = {"Z4", "D8", "Q8", "ES+(32)", "Z2^5", "Dic(Z2^4)"};
    // A deliberately wrong claim: every group of order 32 has alpha 3/4.
    MemberCheck buggy = [](const std::string& d, CampaignReport& r) {
      const Group g = build_from_descriptor(d);
      ++r.groups_examined;
      if (g.order() == 32) {
        r.check("order-32 groups have alpha 3/4", cyclic_census(g).alpha == kThreeQuarters, d);
      }
    };
    const auto r = run_campaign("buggy", groups, buggy, 3);
    CHECK_FALSE(r.passed());
    CHECK(r.counterexamples.size() == 2);
    CHECK(unreproduced(r, buggy).empty());

    std::atomic<int> calls{0};
    MemberCheck flaky = [&](const std::string& d, CampaignReport& r) {
      r.check("first call fails", calls++ > 0, d);
    };
    const auto f = run_campaign("flaky", {"Z4"}, flaky);
    CHECK(unreproduced(f, flaky) == std::vector<std::string>{"Z4"});

    MemberCheck throwing = [](const std::string& d, CampaignReport&) { build_from_descriptor(d); };
    const auto t = run_campaign("throwing", {"Z4", "Q6"}, throwing);
    REQUIRE(t.counterexamples.size() == 1);
    CHECK(t.counterexamples[0].descriptor == "Q6");
    CHECK(t.counterexamples[0].assertion == "evaluation");
  }

  TEST_CASE("parallel and serial campaigns agree") {
    const auto a = verify_family(Family::gen_dihedral, 128, 1);
    const auto b = verify_family(Family::gen_dihedral, 128, 4);
    CHECK(a.members == b.members);
    CHECK(a.groups_examined == b.groups_examined);
    REQUIRE(a.assertions.size() == b.assertions.size());
    for (std::size_t i = 0; i < a.assertions.size(); ++i) {
      CHECK(a.assertions[i].name == b.assertions[i].name);
      CHECK(a.assertions[i].checks == b.assertions[i].checks);
    }
  }
}
