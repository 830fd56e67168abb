#include <gtest/gtest.h>

#include "acmwild/cohomology.hpp"
#include "acmwild/errors.hpp"
#include "acmwild/restriction.hpp"
#include "acmwild/variety.hpp"
#include "support.hpp"

namespace acmwild {
namespace {

ACMVarietyDescriptor sampled_ci(int n, std::vector<int> degrees, std::uint64_t seed) {
  SeededRng rng(seed, 1ULL << 40);
  return make_ci_variety(n, std::move(degrees), &rng, prime_field());
}

TEST(VanishingCertificate, QuadricSurfaceChain) {
  const auto x = make_ci_variety(3, {2}, nullptr, prime_field());
  const auto traces = restriction_vanishing_certificate(x, 3, 1);
  ASSERT_EQ(traces.size(), 1u);
  const auto& trace = traces[0];
  EXPECT_TRUE(trace.certified);
  EXPECT_EQ(trace.target_index, 1);
  EXPECT_EQ(trace.excluded_twists, (std::vector<int>{-2, -1}));
  ASSERT_EQ(trace.chain.size(), 2u);
  EXPECT_EQ(trace.chain[0], (ChaseEntry{0, 1, {0}, Justification::h1_outside_exceptional}));
  EXPECT_EQ(trace.chain[1], (ChaseEntry{1, 2, {-2}, Justification::intermediate_row}));
}

TEST(VanishingCertificate, ProjectiveSpaceUsesTheBundleDirectly) {
  const auto traces = restriction_vanishing_certificate(projective_space(4), 4, 2);
  ASSERT_EQ(traces.size(), 3u);
  for (const auto& trace : traces) {
    EXPECT_TRUE(trace.certified);
    ASSERT_EQ(trace.chain.size(), 1u);
    EXPECT_EQ(trace.chain[0].index, trace.target_index);
  }
  EXPECT_EQ(traces[0].excluded_twists, (std::vector<int>{-2, -1}));
  EXPECT_TRUE(traces[1].excluded_twists.empty());
  EXPECT_EQ(traces[1].chain[0].justification, Justification::intermediate_row);
}

TEST(VanishingCertificate, SurfaceInP4HasChainOfLengthThree) {
  const auto x = make_ci_variety(4, {2, 3}, nullptr, prime_field());
  const auto traces = restriction_vanishing_certificate(x, 4, 1);
  ASSERT_EQ(traces.size(), 1u);
  const auto& chain = traces[0].chain;
  ASSERT_EQ(chain.size(), 3u);
  EXPECT_EQ(chain[0].index, 1);
  EXPECT_EQ(chain[1].index, 2);
  EXPECT_EQ(chain[1].twist_offsets, (std::vector<int>{-2, -3}));
  EXPECT_EQ(chain[2].index, 3);
  EXPECT_EQ(chain[2].twist_offsets, (std::vector<int>{-5}));
  for (const auto& e : chain) EXPECT_LE(e.index, 3);
  EXPECT_TRUE(traces[0].certified);
}

TEST(VanishingCertificate, DegreeDataOnlyVariety) {
  // Twisted-cubic-like Betti shape on a threefold in P^5.
  const auto x = ACMVarietyDescriptor::from_degree_data({5, {{2, 2, 2}, {3, 3}}});
  const auto traces = restriction_vanishing_certificate(x, 5, 2);
  ASSERT_EQ(traces.size(), 2u);
  for (const auto& trace : traces) {
    EXPECT_TRUE(trace.certified);
    EXPECT_TRUE(confirm_with_closed_form(trace, 5, 2, {-20, 10}));
  }
}

TEST(VanishingCertificate, EveryChainConfirmedByClosedForm) {
  const std::vector<std::pair<int, std::vector<int>>> cases{
      {3, {2}}, {3, {3}}, {4, {2}}, {4, {2, 2}}, {5, {2, 3}}, {5, {3}}, {6, {2, 2, 2}}};
  for (const auto& [n, degrees] : cases) {
    const auto x = make_ci_variety(n, degrees, nullptr, prime_field());
    for (int a = 1; a <= 3; ++a)
      for (const auto& trace : restriction_vanishing_certificate(x, n, a))
        EXPECT_TRUE(confirm_with_closed_form(trace, n, a, {-n - 12, 8})) << n;
  }
}

TEST(VanishingCertificate, Preconditions) {
  EXPECT_THROW(restriction_vanishing_certificate(projective_space(3), 4, 1), ShapeError);
  const auto curve = ACMVarietyDescriptor::from_degree_data({3, {{2, 2}, {4}}});
  EXPECT_THROW(restriction_vanishing_certificate(curve, 3, 1), PreconditionError);
}

TEST(VanishingCertificate, UncertifiedTraceIsRejectedByClosedForm) {
  VanishingChaseTrace bogus;
  bogus.target_index = 1;
  bogus.chain.push_back({0, 1, {0}, Justification::uncertified});
  EXPECT_FALSE(confirm_with_closed_form(bogus, 3, 1, {-5, 5}));
  bogus.certified = true;
  bogus.excluded_twists = {};
  // Without the exceptional twists excluded the h^1 cells at -1, -2 are hit.
  EXPECT_FALSE(confirm_with_closed_form(bogus, 3, 1, {-5, 5}));
}

TEST(AuditCertificateExact, AgreesWithTheExactEngine) {
  const auto x = make_ci_variety(4, {2}, nullptr, prime_field());
  const auto built = testing::accepted_bundle(4, 1, 2);
  const auto traces = restriction_vanishing_certificate(x, 4, 1);
  EXPECT_TRUE(audit_certificate_exact(built.bundle, traces, default_window(4)).empty());
}

TEST(AuditCertificateExact, ReportsNonzeroCells) {
  const auto built = testing::accepted_bundle(3, 1, 2);
  VanishingChaseTrace bogus;
  bogus.target_index = 1;
  bogus.certified = true;
  bogus.chain.push_back({0, 1, {0}, Justification::h1_outside_exceptional});
  const auto failures = audit_certificate_exact(built.bundle, std::span(&bogus, 1), {-3, 0});
  ASSERT_EQ(failures.size(), 2u);
  EXPECT_EQ(failures[0].twist, -2);
  EXPECT_EQ(failures[0].value, 2);
  EXPECT_EQ(failures[1].twist, -1);
  EXPECT_EQ(failures[1].value, 3);
}

TEST(RestrictedTable, QuadricSurfaceVanishingAndLowTwists) {
  const auto x = sampled_ci(3, {2}, 1);
  for (int a = 1; a <= 2; ++a) {
    const auto built = testing::accepted_bundle(3, a, 1);
    const auto table = restricted_cohomology_table(built.bundle, x, {-6, 4});
    EXPECT_EQ(table.dim, 2);
    for (int t = -6; t <= 4; ++t) {
      if (t != -1 && t != -2) EXPECT_EQ(table.at(1, t), 0) << t;
      if (t < 0) EXPECT_EQ(table.at(0, t), 0) << t;
    }
    // 0 -> H^0(E) -> H^0(E_X) -> H^1(E(-2)) -> H^1(E) = 0 on P^3.
    EXPECT_EQ(table.at(0, 0), closed_form_cell(3, a, 1, -2));
    // 0 = H^1(E(-3)) -> H^1(E(-1)) -> H^1(E_X(-1)) -> H^2(E(-3)) = 0.
    EXPECT_EQ(table.at(1, -1), closed_form_cell(3, a, 1, -1));
  }
}

TEST(RestrictedTable, HypersurfaceHZeroFollowsTheRestrictionSequence) {
  // For t >= 1, H^0(E_X(t)) = H^0(E(t)) - H^0(E(t-e)) since H^1(E(t-e)) = 0
  // once t - e is not -1 or -2.
  const auto x = sampled_ci(3, {3}, 2);
  const auto built = testing::accepted_bundle(3, 1, 4);
  const auto table = restricted_cohomology_table(built.bundle, x, {-7, 4});
  for (int t = 3; t <= 4; ++t) {
    EXPECT_EQ(table.at(0, t), closed_form_cell(3, 1, 0, t) - closed_form_cell(3, 1, 0, t - 3));
  }
  EXPECT_EQ(table.at(0, 0), 0);
  // At t = 1, 2 the twist t - 3 is exceptional and H^1(E(t-3)) adds on.
  EXPECT_EQ(table.at(0, 1), closed_form_cell(3, 1, 0, 1) + closed_form_cell(3, 1, 1, -2));
  EXPECT_EQ(table.at(0, 2), closed_form_cell(3, 1, 0, 2) + closed_form_cell(3, 1, 1, -1));
}

TEST(RestrictedTable, ProjectiveSpaceMatchesAmbientTable) {
  const auto built = testing::accepted_bundle(3, 2, 5);
  const auto on_x = restricted_cohomology_table(built.bundle, projective_space(3), default_window(3));
  const auto ambient = cohomology_table_exact(built.bundle, default_window(3));
  EXPECT_EQ(on_x.cells, ambient.cells);
}

TEST(RestrictedTable, QuadricThreefoldMiddleRowCertified) {
  const auto x = sampled_ci(4, {2}, 3);
  const auto built = testing::accepted_bundle(4, 1, 3);
  const auto table = restricted_cohomology_table(built.bundle, x, default_window(4));
  EXPECT_EQ(table.dim, 3);
  for (int t = -8; t <= 4; ++t) {
    EXPECT_EQ(table.source(2, t), Provenance::certified_vanishing);
    EXPECT_EQ(table.at(2, t), 0);
    EXPECT_GE(table.at(3, t), 0);
  }
}

TEST(RestrictedTable, RequiresExactMode) {
  const auto built = testing::accepted_bundle(3, 1, 1);
  EXPECT_THROW(restricted_cohomology_table(
                   built.bundle, make_ci_variety(3, {2}, nullptr, prime_field()), {-2, 2}),
               ExactModeUnavailable);
  EXPECT_THROW(restricted_cohomology_table(built.bundle, projective_space(2), {-2, 2}),
               ShapeError);
}

TEST(StructureSheafTable, QuadricSurfaceSerreDuality) {
  const auto x = make_ci_variety(3, {2}, nullptr, prime_field());
  const auto table = structure_sheaf_table(x, {-8, 6});
  for (int t = -8; t <= 6; ++t) {
    EXPECT_EQ(table.at(1, t), 0);
    // omega_X = O_X(-2).
    EXPECT_EQ(table.at(2, t), hilbert_RX(x.resolution(), -t - 2)) << t;
  }
}

TEST(StructureSheafTable, MiddleRowsVanishForCompleteIntersections) {
  for (const auto& degrees : std::vector<std::vector<int>>{{3}, {2, 2}, {2, 3}}) {
    const auto x = make_ci_variety(5, degrees, nullptr, prime_field());
    const auto table = structure_sheaf_table(x, {-12, 6});
    for (int i = 1; i < x.dimension(); ++i)
      for (int t = -12; t <= 6; ++t) EXPECT_EQ(table.at(i, t), 0);
  }
}

TEST(AcmVerdict, PlaneWithSmallPolarizations) {
  const auto built = testing::accepted_bundle(2, 1, 1);
  const auto table = cohomology_table_exact(built.bundle, default_window(2));
  const auto traces = restriction_vanishing_certificate(projective_space(2), 2, 1);

  const auto s1 = acm_with_respect_to_s(table, 1, traces);
  EXPECT_EQ(s1.status, AcmVerdict::Status::not_acm);
  ASSERT_FALSE(s1.witnesses.empty());
  EXPECT_EQ(s1.witnesses.front(), (CellRef{1, -1, 2}));

  const auto s2 = acm_with_respect_to_s(table, 2, traces);
  EXPECT_EQ(s2.status, AcmVerdict::Status::not_acm);
  ASSERT_EQ(s2.witnesses.size(), 1u);
  EXPECT_EQ(s2.witnesses.front(), (CellRef{1, -2, 2}));

  for (int s = 3; s <= 6; ++s) EXPECT_TRUE(acm_with_respect_to_s(table, s, traces).holds());
}

TEST(AcmVerdict, WindowTooSmallIsInconclusive) {
  const auto built = testing::accepted_bundle(2, 1, 1);
  const auto table = cohomology_table_exact(built.bundle, {0, 4});
  const auto traces = restriction_vanishing_certificate(projective_space(2), 2, 1);
  const auto s1 = acm_with_respect_to_s(table, 1, traces);
  EXPECT_EQ(s1.status, AcmVerdict::Status::inconclusive);
  EXPECT_EQ(s1.missing, (std::vector<MissingCell>{{1, -2}, {1, -1}}));
  const auto s2 = acm_with_respect_to_s(table, 2, traces);
  EXPECT_EQ(s2.missing, (std::vector<MissingCell>{{1, -2}}));
  EXPECT_TRUE(acm_with_respect_to_s(table, 3, traces).holds());
}

TEST(AcmVerdict, MissingTraceIsInconclusive) {
  const auto built = testing::accepted_bundle(2, 1, 1);
  const auto table = cohomology_table_exact(built.bundle, {0, 4});
  const auto verdict = acm_with_respect_to_s(table, 3, {});
  EXPECT_EQ(verdict.status, AcmVerdict::Status::inconclusive);
  EXPECT_EQ(verdict.missing, (std::vector<MissingCell>{{1, std::nullopt}}));
  EXPECT_THROW(acm_with_respect_to_s(table, 0, {}), PreconditionError);
}

TEST(AcmVerdict, EnlargingTheWindowKeepsTrueVerdicts) {
  const auto x = sampled_ci(3, {2}, 1);
  const auto built = testing::accepted_bundle(3, 1, 1);
  const auto traces = restriction_vanishing_certificate(x, 3, 1);
  for (const TwistWindow w : {TwistWindow{0, 2}, TwistWindow{-3, 3}, TwistWindow{-9, 6}}) {
    const auto table = restricted_cohomology_table(built.bundle, x, w);
    for (int s = 3; s <= 5; ++s) EXPECT_TRUE(acm_with_respect_to_s(table, s, traces).holds());
  }
}

TEST(AcmVerdict, StatusStrings) {
  for (auto s : {AcmVerdict::Status::acm, AcmVerdict::Status::not_acm,
                 AcmVerdict::Status::inconclusive})
    EXPECT_EQ(acm_status_from_string(to_string(s)), s);
  for (auto j : {Justification::h1_outside_exceptional, Justification::intermediate_row,
                 Justification::uncertified})
    EXPECT_EQ(justification_from_string(to_string(j)), j);
  EXPECT_THROW(acm_status_from_string("maybe"), ParseError);
}

}  // namespace
}  // namespace acmwild
