#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace acmwild {

/// Twists of a graded minimal free resolution
///   0 -> F_c -> ... -> F_1 -> R -> R_X -> 0,  F_i = sum_j R(-twists[i-1][j]).
struct ResolutionDegreeData {
  int n = 0;
  std::vector<std::vector<int>> twists;

  int codimension() const noexcept { return static_cast<int>(twists.size()); }
  int dimension() const noexcept { return n - codimension(); }

  // Throws PreconditionError unless n >= 1, every twist >= 1 and c <= n.
  void validate() const;

  friend bool operator==(const ResolutionDegreeData&, const ResolutionDegreeData&) = default;
};

/// Koszul degree data of a complete intersection: the twists at homological
/// index i are the sums of the i-element sub-multisets of `degrees`, sorted.
ResolutionDegreeData koszul_degree_data(int n, std::span<const int> degrees);

/// dim (R_X)_k from the resolution: C(n+k,n) - sum_i (-1)^{i+1} sum_j C(n+k-n_j^i, n),
/// with C(m, n) = 0 for m < n.
std::int64_t hilbert_RX(const ResolutionDegreeData& res, int k);

/// The same alternating sum with binomials extended polynomially; this is
/// chi(O_X(k)) for every integer k.
std::int64_t hilbert_polynomial_RX(const ResolutionDegreeData& res, int k);

}  // namespace acmwild
