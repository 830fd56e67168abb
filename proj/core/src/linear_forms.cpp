#include "acmwild/linear_forms.hpp"

#include <algorithm>
#include <string>

#include "acmwild/errors.hpp"

namespace acmwild {

LinearFormMatrix::LinearFormMatrix(PrimeField field, int n, std::size_t rows,
                                   std::size_t cols)
    : field_(field), n_(n), rows_(rows), cols_(cols) {
  if (n < 1) throw PreconditionError("linear form matrix: n must be >= 1");
  coeffs_.assign(rows * cols * variables(), 0);
}

LinearFormMatrix::LinearFormMatrix(PrimeField field, int n, std::size_t rows,
                                   std::size_t cols, std::vector<Element> coeffs)
    : LinearFormMatrix(field, n, rows, cols) {
  if (coeffs.size() != coeffs_.size()) {
    throw ShapeError("linear form matrix: expected " + std::to_string(coeffs_.size()) +
                     " coefficients, got " + std::to_string(coeffs.size()));
  }
  for (auto& c : coeffs) {
    if (c >= field_.characteristic()) c %= field_.characteristic();
  }
  coeffs_ = std::move(coeffs);
}

void LinearFormMatrix::set_coeff(std::size_t r, std::size_t c, std::size_t var, Element v) {
  if (r >= rows_ || c >= cols_ || var >= variables()) {
    throw ShapeError("linear form matrix: index out of range");
  }
  coeffs_[offset(r, c) + var] = v % field_.characteristic();
}

LinearFormMatrix LinearFormMatrix::transpose() const {
  LinearFormMatrix t(field_, n_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      for (std::size_t k = 0; k < variables(); ++k) t.set_coeff(c, r, k, coeff(r, c, k));
  return t;
}

bool LinearFormMatrix::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Element e) { return e == 0; });
}

}  // namespace acmwild
