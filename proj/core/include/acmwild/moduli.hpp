#pragma once

#include <cstddef>
#include <cstdint>

#include "acmwild/linear_forms.hpp"
#include "acmwild/matrix.hpp"
#include "acmwild/variety.hpp"

namespace acmwild {

/// (2a)^2 + ((n+2)a)^2 - 2a (n+1) (n+2) a, the Tits form of the dimension
/// vector (2a, (n+2)a) on the Kronecker quiver with n+1 arrows.
std::int64_t kac_discriminant(int n, int a);

struct StabilizerReport {
  std::size_t stab_dimension = 0;
  std::int64_t kac_value = 0;
  bool simple = false;
  std::size_t equations = 0;
  std::size_t unknowns = 0;

  friend bool operator==(const StabilizerReport&, const StabilizerReport&) = default;
};

/// Linear system AC = BA in the unknowns (B, C), B of size (n+2)a square and
/// C of size 2a square, for A a (n+2)a x 2a matrix of linear forms. Columns
/// list B row-major, then C row-major. The equation for the coefficient of
/// x_k in entry (r, c) of AC - BA is row (k * rows(A) + r) * cols(A) + c.
ModMatrix stabilizer_system(const LinearFormMatrix& a_matrix);

/// Dimension of the intertwiner space {(B, C) : AC = BA}; simple iff it is 1.
/// Throws ShapeError unless A is (n+2)a x 2a for some a >= 1.
StabilizerReport stabilizer_dimension(const LinearFormMatrix& a_matrix);

/// a^2 (n^2 + 2n - 4) + 1; checked against the orbit count below.
std::int64_t family_dimension(int n, int a);

/// dim M - dim GL((n+2)a) - dim GL(2a) + 1
///   = 2a^2 (n+2)(n+1) - a^2 (n+2)^2 - 4a^2 + 1.
std::int64_t family_dimension_by_orbit_count(int n, int a);

/// C(n+3, 3) - 1, the target dimension of the 3-uple Veronese embedding.
std::int64_t veronese_bound(int n);

/// h^0(O_X(s)) - 1.
std::int64_t embedding_dimension(const ACMVarietyDescriptor& x, int s);

}  // namespace acmwild
