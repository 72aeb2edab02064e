#pragma once

// Verification campaigns over constructed groups. Every campaign records its
// failures as group descriptors so each one can be rebuilt and rechecked on
// its own.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclo/alpha.hpp"
#include "cyclo/census.hpp"
#include "cyclo/formulas.hpp"
#include "cyclo/group.hpp"

namespace cyclo::verify {

struct AssertionTally {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
};

struct Counterexample {
  std::string descriptor;
  std::string assertion;
  std::string detail;
};

struct CampaignReport {
  std::string id;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t groups_examined = 0;
  std::vector<AssertionTally> assertions;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> members;  // descriptors of groups found in the class
  std::vector<std::string> notes;
  double wall_seconds = 0;

  bool passed() const noexcept { return counterexamples.empty(); }

  /// Tallies one assertion; a failure records `descriptor` as a counterexample.
  bool check(std::string_view assertion, bool ok, const std::string& descriptor,
             std::string detail = {});

  void merge(CampaignReport&& other);
};

/// alpha(G) = 3/4 and G nilpotent.
bool is_in_c(const Group& g, const CensusLimits& limits = {});

using MemberCheck = std::function<void(const std::string& descriptor, CampaignReport&)>;

/// Runs `check` over every descriptor (in parallel when jobs > 1), merging the
/// per-descriptor reports in input order. Exceptions thrown for a descriptor
/// become counterexamples of the "evaluation" assertion.
CampaignReport run_campaign(std::string id, const std::vector<std::string>& descriptors,
                            const MemberCheck& check, unsigned jobs = 1);

/// Re-runs `check` on each counterexample descriptor alone; returns the
/// descriptors whose failure did NOT reproduce.
std::vector<std::string> unreproduced(const CampaignReport& report, const MemberCheck& check);

// -- abelian classification ---------------------------------------------------

/// All abelian 2-groups of order <= 2^max_exponent via the closed form:
/// alpha = 3/4 exactly for shapes (1,...,1,2) and alpha = 1/2 exactly for
/// (1,...,1,3). Orders <= 2^bruteforce_exponent are also censused.
CampaignReport verify_abelian_classification(unsigned max_exponent,
                                             unsigned bruteforce_exponent = 10,
                                             unsigned jobs = 1);

// -- single-group checks -------------------------------------------------------

/// For G in C: |G| is a power of 2 and either G' = Phi(G), or G/G' has
/// invariants (1,...,1,2) with G' elementary abelian.
void check_commutator_structure(const std::string& descriptor, CampaignReport& report);
CampaignReport check_commutator_structure(const Group& g, const std::string& descriptor);

/// For a group of order 2^n (n >= 2) and exponent 4: G in C iff there are
/// 2^(n-1) - 1 involutions iff n_4 = 2^(n-2).
void check_involution_criterion(const std::string& descriptor, CampaignReport& report);
CampaignReport check_involution_criterion(const Group& g, const std::string& descriptor);

// -- family campaigns -----------------------------------------------------------

enum class Family {
  extraspecial,
  almost_extraspecial,
  dicyclic,
  gen_dihedral,
  maximal_cyclic,
};

std::string_view family_id(Family f) noexcept;

/// Descriptors a family campaign examines for groups of order <= cap.
std::vector<std::string> family_members(Family f, std::uint64_t cap);

/// Checks one family member; the building block of verify_family.
void check_family_member(Family f, const std::string& descriptor, CampaignReport& report,
                         std::uint64_t bruteforce_cap = 256);

CampaignReport verify_family(Family f, std::uint64_t cap, unsigned jobs = 1,
                             std::uint64_t bruteforce_cap = 256);

/// Solutions n in [1, n_max] of alpha = 3/4 for the closed-form |L1| of a
/// maximal-cyclic family, ignoring the family's range restriction.
std::vector<unsigned> three_quarter_solutions(formulas::FamilyKind kind, unsigned n_max);

/// n_2 and n_4 of D8 * G1 against the closed-form counts, for G1 in
/// {D8, Q8, Z4, D8*D8, D8*Q8, D8*Z4}.
CampaignReport verify_central_product_counts(unsigned jobs = 1);

// -- corpus campaigns -----------------------------------------------------------

CampaignReport verify_involution_criterion(std::uint64_t cap, unsigned jobs = 1);
CampaignReport verify_commutator_structure(const std::vector<std::string>& members,
                                           unsigned jobs = 1);

/// Coprime multiplicativity, invariance under x Z_2^n, and alpha(G) <= alpha(G/N)
/// (equality only for elementary abelian N) over the corpus.
CampaignReport verify_alpha_properties(std::uint64_t cap, unsigned jobs = 1);

// -- scans ---------------------------------------------------------------------

/// Looks for two partitions of n with equal |L1| for abelian p-groups of
/// order p^n. Collisions are reported as counterexamples.
CampaignReport scan_alpha_injectivity(std::uint64_t p, unsigned n,
                                      unsigned bruteforce_max_n = 10);

struct SpectrumRecord {
  std::string descriptor;
  std::uint64_t order = 0;
  AlphaValue alpha;
  bool in_c = false;
};

struct SpectrumCaps {
  std::uint64_t abelian = 256;
  std::uint64_t families = 256;
};

struct SpectrumSummary {
  std::vector<SpectrumRecord> records;
  std::vector<std::pair<AlphaValue, std::uint64_t>> distinct;  // ascending alpha
  AlphaValue eps;
  std::uint64_t near_three_quarters = 0;  // |alpha - 3/4| <= eps
};

std::vector<SpectrumRecord> alpha_spectrum(const SpectrumCaps& caps, unsigned jobs = 1);
SpectrumSummary summarize_spectrum(std::vector<SpectrumRecord> records,
                                   const AlphaValue& eps);

}  // namespace cyclo::verify
