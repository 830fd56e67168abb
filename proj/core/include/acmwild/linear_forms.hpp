#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "acmwild/field.hpp"

namespace acmwild {

/// A rows x cols matrix whose entries are linear forms in x_0..x_n over F_p,
/// i.e. an element of Hom(B, A (x) V) with dim A = rows, dim B = cols and
/// V = H^0(O(1)). Coefficients are stored entry-major: the coefficient of
/// x_k in entry (r, c) sits at ((r * cols) + c) * (n + 1) + k.
class LinearFormMatrix {
 public:
  using Element = PrimeField::Element;

  LinearFormMatrix(PrimeField field, int n, std::size_t rows, std::size_t cols);
  LinearFormMatrix(PrimeField field, int n, std::size_t rows, std::size_t cols,
                   std::vector<Element> coeffs);

  const PrimeField& field() const noexcept { return field_; }
  int n() const noexcept { return n_; }
  std::size_t variables() const noexcept { return static_cast<std::size_t>(n_) + 1; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element coeff(std::size_t r, std::size_t c, std::size_t var) const {
    return coeffs_[offset(r, c) + var];
  }
  void set_coeff(std::size_t r, std::size_t c, std::size_t var, Element v);

  std::span<const Element> entry(std::size_t r, std::size_t c) const {
    return {coeffs_.data() + offset(r, c), variables()};
  }

  const std::vector<Element>& coefficients() const noexcept { return coeffs_; }

  // The cols x rows matrix of the dual map.
  LinearFormMatrix transpose() const;

  bool is_zero() const noexcept;

  friend bool operator==(const LinearFormMatrix&, const LinearFormMatrix&) = default;

 private:
  std::size_t offset(std::size_t r, std::size_t c) const noexcept {
    return (r * cols_ + c) * variables();
  }

  PrimeField field_;
  int n_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> coeffs_;
};

}  // namespace acmwild
