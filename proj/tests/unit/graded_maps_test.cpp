#include <gtest/gtest.h>

#include "acmwild/errors.hpp"
#include "acmwild/graded_maps.hpp"
#include "acmwild/presentation.hpp"
#include "acmwild/rng.hpp"
#include "acmwild/variety.hpp"

namespace acmwild {
namespace {

TEST(MultMap, PresentationShapeDimensions) {
  SeededRng rng(3);
  const auto phi = sample_phi(2, 2, 4, rng, prime_field());
  const auto m = mult_map(phi, 1);
  EXPECT_EQ(m.rows(), 12u);
  EXPECT_EQ(m.cols(), 12u);
}

TEST(MultMap, NegativeDegreeHasNoColumns) {
  SeededRng rng(3);
  const auto phi = sample_phi(2, 2, 4, rng, prime_field());
  const auto m = mult_map(phi, -1);
  EXPECT_EQ(m.cols(), 0u);
  EXPECT_EQ(m.rows(), 2u);  // degree-0 target: one constant per row block
  EXPECT_EQ(mult_map(phi, -2).rows(), 0u);
}

TEST(MultMap, MultiplicationByX0OnTheLine) {
  LinearFormMatrix phi(PrimeField(), 1, 1, 1);
  phi.set_coeff(0, 0, 0, 1);
  // <x0, x1> -> <x0^2, x0x1, x1^2>: x0 |-> x0^2, x1 |-> x0x1.
  const std::vector<std::int64_t> expected{1, 0, 0, 1, 0, 0};
  EXPECT_EQ(mult_map(phi, 1), ModMatrix::from_integers(PrimeField(), 3, 2, expected));
}

// Entries that are single variables: every column of the assembled matrix
// must have its one nonzero exactly at the product monomial.
TEST(MultMap, VariableEntriesAgreeWithMonomialMultiplication) {
  const int n = 3;
  LinearFormMatrix phi(PrimeField(), n, 2, 3);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 3; ++c) phi.set_coeff(r, c, (r + 2 * c) % (n + 1), 1);

  for (int m = 0; m <= 3; ++m) {
    const auto src = monomial_basis(n, m);
    const auto dst = monomial_basis(n, m + 1);
    const auto mat = mult_map(phi, m);
    for (std::size_t c = 0; c < 3; ++c) {
      for (std::size_t s = 0; s < src.size(); ++s) {
        for (std::size_t r = 0; r < 2; ++r) {
          Exponent e = src[s];
          ++e[(r + 2 * c) % (n + 1)];
          const auto hit = *dst.index_of(e);
          for (std::size_t t = 0; t < dst.size(); ++t) {
            EXPECT_EQ(mat(r * dst.size() + t, c * src.size() + s), t == hit ? 1u : 0u);
          }
        }
      }
    }
  }
}

TEST(QuotientPiece, RequiresForms) {
  const auto x = make_ci_variety(3, {2}, nullptr, prime_field());
  EXPECT_THROW(quotient_piece(x, PrimeField(), 2), ExactModeUnavailable);
  const auto dd = ACMVarietyDescriptor::from_degree_data({3, {{2}}});
  EXPECT_THROW(quotient_piece(dd, PrimeField(), 2), ExactModeUnavailable);
}

TEST(QuotientPiece, DetectsFormsThatAreNotACompleteIntersection) {
  // x0^2 and x0*x1 share the factor x0.
  HomogeneousForm f{3, 2, std::vector<PrimeField::Element>(10, 0)};
  HomogeneousForm g = f;
  f.coeffs[0] = 1;  // x0^2
  g.coeffs[1] = 1;  // x0 x1
  const auto x = ACMVarietyDescriptor::complete_intersection(3, {f, g}, PrimeField());
  EXPECT_NO_THROW(quotient_piece(x, PrimeField(), 2));
  EXPECT_THROW(quotient_piece(x, PrimeField(), 3), GenericityFailure);
}

TEST(QuotientPiece, NormalFormsKillTheIdeal) {
  SeededRng rng(21);
  const auto x = make_ci_variety(3, {2}, &rng, prime_field());
  const PrimeField f;
  for (int k = 0; k <= 4; ++k) {
    const auto piece = quotient_piece(x, f, k);
    EXPECT_EQ(static_cast<std::int64_t>(piece.size()), hilbert_RX(x.resolution(), k));
    // The quadric times each multiplier must reduce to zero.
    const auto& q = x.forms()[0];
    const auto qbasis = monomial_basis(3, 2);
    for (const auto& mu : monomial_basis(3, k - 2)) {
      std::vector<PrimeField::Element> reduced(piece.size(), 0);
      for (std::size_t t = 0; t < qbasis.size(); ++t) {
        Exponent e = qbasis[t];
        for (std::size_t v = 0; v < e.size(); ++v) e[v] += mu[v];
        const auto nf = piece.normal_forms.row(*piece.ambient.index_of(e));
        for (std::size_t s = 0; s < nf.size(); ++s)
          reduced[s] = f.add(reduced[s], f.mul(q.coeffs[t], nf[s]));
      }
      for (auto v : reduced) EXPECT_EQ(v, 0u);
    }
  }
}

// Projection R_k^b -> (R_X)_k^b, block diagonal with normal-form matrices.
ModMatrix projection(const QuotientPiece& piece, std::size_t blocks) {
  const PrimeField f;
  ModMatrix p(f, blocks * piece.size(), blocks * piece.ambient.size());
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t u = 0; u < piece.ambient.size(); ++u)
      for (std::size_t s = 0; s < piece.size(); ++s)
        p.set(b * piece.size() + s, b * piece.ambient.size() + u, piece.normal_forms(u, s));
  return p;
}

TEST(MultMapOnX, CommutesWithProjectionToRX) {
  SeededRng rng(8);
  const auto x = make_ci_variety(4, {2, 2}, &rng, prime_field());
  SeededRng phi_rng(9);
  const auto phi = sample_phi(4, 2, 6, phi_rng, prime_field());
  for (int m = 0; m <= 3; ++m) {
    const auto src = quotient_piece(x, PrimeField(), m);
    const auto dst = quotient_piece(x, PrimeField(), m + 1);
    const auto lhs = projection(dst, 2) * mult_map(phi, m);
    const auto rhs = mult_map_on_X(phi, m, x) * projection(src, 6);
    EXPECT_EQ(lhs, rhs) << "m=" << m;
  }
}

TEST(MultMapOnX, QuadricSurfaceShape) {
  SeededRng rng(4);
  const auto x = make_ci_variety(3, {2}, &rng, prime_field());
  SeededRng phi_rng(5);
  const auto phi = sample_phi(3, 2, 5, phi_rng, prime_field());
  const auto m = mult_map_on_X(phi, 1, x);
  EXPECT_EQ(m.rows(), 2u * 9u);
  EXPECT_EQ(m.cols(), 5u * 4u);
  EXPECT_TRUE(mult_map_on_X(phi, -2, x).empty());
}

TEST(MultMapOnX, ProjectiveSpaceReducesToMultMap) {
  SeededRng rng(6);
  const auto phi = sample_phi(2, 2, 4, rng, prime_field());
  for (int m = -1; m <= 3; ++m) EXPECT_EQ(mult_map_on_X(phi, m, projective_space(2)), mult_map(phi, m));
}

TEST(MultMapOnX, RejectsMismatchedAmbientSpace) {
  SeededRng rng(6);
  const auto phi = sample_phi(2, 2, 4, rng, prime_field());
  EXPECT_THROW(mult_map_on_X(phi, 1, projective_space(3)), ShapeError);
}

}  // namespace
}  // namespace acmwild
