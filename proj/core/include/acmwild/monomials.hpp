#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "acmwild/field.hpp"

namespace acmwild {

// Exponent vector of a monomial in x_0..x_n.
using Exponent = std::vector<int>;

/// C(m, k) for the counting convention: 0 whenever m < k, k < 0 or m < 0.
std::int64_t binomial(std::int64_t m, std::int64_t k);

/// m(m-1)...(m-k+1)/k!, the binomial coefficient as a polynomial in m, so
/// binomial_polynomial(n + t, n) is chi(O_{P^n}(t)) for every integer t.
std::int64_t binomial_polynomial(std::int64_t m, std::int64_t k);

/// Graded reverse lexicographic comparison with x_0 > x_1 > ... > x_n.
/// True when `a` is strictly greater than `b`.
bool grevlex_greater(const Exponent& a, const Exponent& b);

/// Monomials of degree d in n+1 variables, listed in decreasing grevlex
/// order. This order is part of every serialized artifact; do not change it.
class MonomialBasis {
 public:
  MonomialBasis(int n, int degree);

  int n() const noexcept { return n_; }
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  bool empty() const noexcept { return monomials_.empty(); }

  const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
  auto begin() const noexcept { return monomials_.begin(); }
  auto end() const noexcept { return monomials_.end(); }

  std::optional<std::size_t> index_of(const Exponent& e) const;

 private:
  int n_;
  int degree_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t> index_;
};

MonomialBasis monomial_basis(int n, int degree);

/// Homogeneous polynomial of a fixed degree over F_p, stored as coefficients
/// against monomial_basis(n, degree).
struct HomogeneousForm {
  int n = 0;
  int degree = 0;
  std::vector<PrimeField::Element> coeffs;

  friend bool operator==(const HomogeneousForm&, const HomogeneousForm&) = default;
};

}  // namespace acmwild
