#pragma once

#include <cstddef>
#include <vector>

#include "acmwild/linear_forms.hpp"
#include "acmwild/matrix.hpp"
#include "acmwild/monomials.hpp"
#include "acmwild/variety.hpp"

namespace acmwild {

/// Degree-m piece of the module map R(m)^{cols} -> R(m+1)^{rows} given by
/// phi, i.e. H^0(O(m))^{cols} -> H^0(O(m+1))^{rows}. Row block i holds
/// monomial_basis(n, m+1), column block j holds monomial_basis(n, m).
ModMatrix mult_map(const LinearFormMatrix& phi, int m);

/// The graded piece (R_X)_k of a complete intersection, presented by
/// normal-form monomials: the monomials that are not pivots of the reduced
/// echelon form of (I_X)_k in the grevlex monomial basis.
struct QuotientPiece {
  int degree = 0;
  MonomialBasis ambient{1, -1};
  std::vector<std::size_t> standard;  // ambient indices of the normal-form monomials
  ModMatrix normal_forms{PrimeField(), 0, 0};  // ambient.size() x standard.size()

  std::size_t size() const noexcept { return standard.size(); }
};

/// Throws ExactModeUnavailable when X carries no explicit forms and
/// GenericityFailure when the forms do not cut out a complete intersection
/// in degree k (the count disagrees with the Koszul Hilbert function).
QuotientPiece quotient_piece(const ACMVarietyDescriptor& x, const PrimeField& field, int k);

/// Degree-m piece (R_X)_m^{cols} -> (R_X)_{m+1}^{rows} of phi restricted to X,
/// in normal-form monomial bases.
ModMatrix mult_map_on_X(const LinearFormMatrix& phi, int m, const ACMVarietyDescriptor& x);

}  // namespace acmwild
