#include <gtest/gtest.h>

#include <map>

#include "acmwild/errors.hpp"
#include "acmwild/matrix.hpp"
#include "acmwild/monomials.hpp"
#include "acmwild/resolution.hpp"
#include "acmwild/rng.hpp"
#include "acmwild/variety.hpp"

namespace acmwild {
namespace {

// All exponent vectors of n+1 variables with total degree d, by plain
// enumeration of every tuple with entries <= d.
std::vector<Exponent> brute_monomials(int n, int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  Exponent e(static_cast<std::size_t>(n + 1), 0);
  while (true) {
    int sum = 0;
    for (int v : e) sum += v;
    if (sum == d) out.push_back(e);
    std::size_t pos = 0;
    while (pos < e.size() && e[pos] == d) e[pos++] = 0;
    if (pos == e.size()) break;
    ++e[pos];
  }
  return out;
}

// dim (R/(f_1..f_c))_k = #monomials - rank of the span of {f_i * mu}.
std::int64_t brute_force_hilbert(const std::vector<HomogeneousForm>& forms, int n, int k) {
  const PrimeField f;
  const auto target = brute_monomials(n, k);
  std::map<Exponent, std::size_t> column;
  for (std::size_t i = 0; i < target.size(); ++i) column[target[i]] = i;

  std::vector<std::vector<PrimeField::Element>> rows;
  for (const auto& form : forms) {
    const auto form_monomials = monomial_basis(n, form.degree);
    for (const auto& mu : brute_monomials(n, k - form.degree)) {
      std::vector<PrimeField::Element> row(target.size(), 0);
      for (std::size_t t = 0; t < form_monomials.size(); ++t) {
        Exponent e = form_monomials[t];
        for (std::size_t v = 0; v < e.size(); ++v) e[v] += mu[v];
        row[column.at(e)] = f.add(row[column.at(e)], form.coeffs[t]);
      }
      rows.push_back(row);
    }
  }
  ModMatrix m(f, rows.size(), target.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < target.size(); ++c) m.set(r, c, rows[r][c]);
  return static_cast<std::int64_t>(target.size()) - static_cast<std::int64_t>(rank(m));
}

TEST(KoszulDegreeData, SubMultisetSums) {
  const std::vector<int> one{2};
  EXPECT_EQ(koszul_degree_data(3, one).twists, (std::vector<std::vector<int>>{{2}}));
  const std::vector<int> two{2, 3};
  EXPECT_EQ(koszul_degree_data(4, two).twists, (std::vector<std::vector<int>>{{2, 3}, {5}}));
  const std::vector<int> three{1, 2, 2};
  EXPECT_EQ(koszul_degree_data(6, three).twists,
            (std::vector<std::vector<int>>{{1, 2, 2}, {3, 3, 4}, {5}}));
  EXPECT_TRUE(koszul_degree_data(3, std::span<const int>{}).twists.empty());
}

TEST(ResolutionDegreeData, Validation) {
  EXPECT_THROW((ResolutionDegreeData{0, {}}).validate(), PreconditionError);
  EXPECT_THROW((ResolutionDegreeData{3, {{0}}}).validate(), PreconditionError);
  EXPECT_THROW((ResolutionDegreeData{1, {{1}, {2}}}).validate(), PreconditionError);
  EXPECT_THROW((ResolutionDegreeData{3, {{}}}).validate(), PreconditionError);
  EXPECT_NO_THROW((ResolutionDegreeData{4, {{2, 2, 2}, {3, 3}}}).validate());
}

TEST(HilbertRX, QuadricSurfaceInDegreeThree) {
  const std::vector<int> q{2};
  const auto res = koszul_degree_data(3, q);
  EXPECT_EQ(hilbert_RX(res, 3), 16);
  EXPECT_EQ(hilbert_RX(res, 0), 1);
  EXPECT_EQ(hilbert_RX(res, 2), 9);
  EXPECT_EQ(hilbert_RX(res, -1), 0);
}

TEST(HilbertRX, ProjectiveSpaceIsPlainBinomial) {
  for (int n = 1; n <= 5; ++n) {
    const ResolutionDegreeData res{n, {}};
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(hilbert_RX(res, k), binomial(n + k, n));
  }
}

TEST(HilbertRX, AgreesWithBruteForceNormalFormCount) {
  const std::vector<std::vector<int>> degree_lists{{2}, {3}, {1}, {2, 2}, {1, 3}, {2, 3}};
  std::uint64_t seed = 300;
  for (int n = 2; n <= 3; ++n) {
    for (const auto& degrees : degree_lists) {
      if (static_cast<int>(degrees.size()) > n) continue;
      SeededRng rng(seed++);
      std::vector<HomogeneousForm> forms;
      for (int e : degrees) forms.push_back(sample_form(n, e, rng, prime_field()));
      const auto res = koszul_degree_data(n, degrees);
      for (int k = 0; k <= 5; ++k) {
        EXPECT_EQ(hilbert_RX(res, k), brute_force_hilbert(forms, n, k))
            << "n=" << n << " k=" << k << " first degree " << degrees[0];
      }
    }
  }
}

TEST(HilbertPolynomialRX, MatchesHilbertFunctionInHighDegree) {
  const std::vector<int> degrees{2, 3};
  const auto res = koszul_degree_data(4, degrees);
  for (int k = 5; k < 12; ++k) EXPECT_EQ(hilbert_polynomial_RX(res, k), hilbert_RX(res, k));
  // Quadric surface: P(k) = (k+1)^2, so P(-1) = 0 and P(-3) = 4.
  const std::vector<int> q{2};
  const auto quadric = koszul_degree_data(3, q);
  EXPECT_EQ(hilbert_polynomial_RX(quadric, -1), 0);
  EXPECT_EQ(hilbert_polynomial_RX(quadric, -3), 4);
}

TEST(MakeCiVariety, ShapesAndDimensionGuard) {
  const auto quadric = make_ci_variety(3, {2}, nullptr, prime_field());
  EXPECT_EQ(quadric.dimension(), 2);
  EXPECT_EQ(quadric.resolution().twists, (std::vector<std::vector<int>>{{2}}));
  EXPECT_FALSE(quadric.exact_mode());

  const auto surface = make_ci_variety(4, {2, 3}, nullptr, prime_field());
  EXPECT_EQ(surface.dimension(), 2);
  EXPECT_EQ(surface.resolution().twists, (std::vector<std::vector<int>>{{2, 3}, {5}}));

  EXPECT_THROW(make_ci_variety(3, {2, 2}, nullptr, prime_field()), PreconditionError);
  EXPECT_THROW(make_ci_variety(3, {0}, nullptr, prime_field()), PreconditionError);
}

TEST(MakeCiVariety, SampledFormsGiveExactMode) {
  SeededRng rng(11);
  const auto x = make_ci_variety(4, {2, 2}, &rng, prime_field());
  EXPECT_TRUE(x.exact_mode());
  ASSERT_EQ(x.forms().size(), 2u);
  EXPECT_EQ(x.forms()[0].coeffs.size(), 15u);
  EXPECT_TRUE(projective_space(3).exact_mode());
  EXPECT_THROW(make_ci_variety(3, {2}, &rng, rationals()), UnsupportedSampling);
}

TEST(ACMVarietyDescriptor, DegreeDataModeIsNotExact) {
  const auto x = ACMVarietyDescriptor::from_degree_data({5, {{2, 2, 2}, {3, 3}}});
  EXPECT_EQ(x.mode(), ACMVarietyDescriptor::Mode::degree_data);
  EXPECT_EQ(x.dimension(), 3);
  EXPECT_FALSE(x.exact_mode());
}

}  // namespace
}  // namespace acmwild
