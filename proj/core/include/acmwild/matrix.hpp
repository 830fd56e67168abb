#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "acmwild/errors.hpp"
#include "acmwild/field.hpp"

namespace acmwild {

/// Dense row-major matrix over a field. Entries are always kept in the
/// field's canonical form.
template <class Field>
class DenseMatrix {
 public:
  using Element = typename Field::Element;

  DenseMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        entries_(rows * cols, field_.zero()) {}

  static DenseMatrix identity(Field field, std::size_t n) {
    DenseMatrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, m.field_.one());
    return m;
  }

  // Row-major integer data, reduced into the field.
  static DenseMatrix from_integers(Field field, std::size_t rows, std::size_t cols,
                                   std::span<const std::int64_t> values) {
    if (values.size() != rows * cols) {
      throw ShapeError("from_integers: expected " + std::to_string(rows * cols) +
                       " values, got " + std::to_string(values.size()));
    }
    DenseMatrix m(std::move(field), rows, cols);
    for (std::size_t k = 0; k < values.size(); ++k) {
      m.entries_[k] = m.field_.from_int(values[k]);
    }
    return m;
  }

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  const Element& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, Element v) {
    entries_[r * cols_ + c] = std::move(v);
  }
  void add_to(std::size_t r, std::size_t c, const Element& v) {
    auto& e = entries_[r * cols_ + c];
    e = field_.add(e, v);
  }

  std::span<const Element> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<Element> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }

  const std::vector<Element>& entries() const noexcept { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [this](const Element& e) { return field_.is_zero(e); });
  }

  DenseMatrix transpose() const {
    DenseMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
    return t;
  }

  DenseMatrix operator*(const DenseMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ShapeError("matrix product: inner dimensions differ");
    DenseMatrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Element& a = (*this)(i, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          out.set(i, j, field_.add(out(i, j), field_.mul(a, rhs(k, j))));
        }
      }
    }
    return out;
  }

  friend bool operator==(const DenseMatrix& x, const DenseMatrix& y) {
    return x.field_ == y.field_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ &&
           x.entries_ == y.entries_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

using ModMatrix = DenseMatrix<PrimeField>;
using QMatrix = DenseMatrix<RationalField>;

template <class Field>
struct EchelonForm {
  DenseMatrix<Field> reduced;       // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

namespace detail {

// Gaussian elimination in place. With `reduce_above` the result is the
// reduced row echelon form, which is unique for a given matrix, so kernel
// bases read off it are canonical. Returns pivot columns.
template <class Field>
std::vector<std::size_t> eliminate(DenseMatrix<Field>& m, bool reduce_above) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = m.rows();
    for (std::size_t r = pivot_row; r < m.rows(); ++r) {
      if (!f.is_zero(m(r, col))) {
        found = r;
        break;
      }
    }
    if (found == m.rows()) continue;
    if (found != pivot_row) {
      auto a = m.row(found);
      auto b = m.row(pivot_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(pivot_row);
    const auto scale = f.inv(prow[col]);
    for (std::size_t c = col; c < m.cols(); ++c) prow[c] = f.mul(prow[c], scale);

    const std::size_t first = reduce_above ? 0 : pivot_row + 1;
    for (std::size_t r = first; r < m.rows(); ++r) {
      if (r == pivot_row) continue;
      auto target = m.row(r);
      const auto factor = target[col];
      if (f.is_zero(factor)) continue;
      for (std::size_t c = col; c < m.cols(); ++c) {
        target[c] = f.sub_mul(target[c], factor, prow[c]);
      }
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

}  // namespace detail

template <class Field>
EchelonForm<Field> row_reduce(DenseMatrix<Field> m) {
  auto pivots = detail::eliminate(m, /*reduce_above=*/true);
  return {std::move(m), std::move(pivots)};
}

template <class Field>
std::size_t rank(const DenseMatrix<Field>& m) {
  if (m.empty()) return 0;
  // Eliminate along the shorter side.
  if (m.rows() > m.cols()) {
    auto t = m.transpose();
    return detail::eliminate(t, false).size();
  }
  auto work = m;
  return detail::eliminate(work, false).size();
}

template <class Field>
std::size_t nullity(const DenseMatrix<Field>& m) {
  return m.cols() - rank(m);
}

/// Basis of the right null space, one column per free variable of the
/// reduced row echelon form (free variable set to 1, other free variables 0),
/// in increasing order of the free column.
template <class Field>
DenseMatrix<Field> kernel_basis(const DenseMatrix<Field>& m) {
  const Field& f = m.field();
  auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  DenseMatrix<Field> basis(f, m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    basis.set(fc, k, f.one());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      basis.set(ech.pivots[r], k, f.neg(ech.reduced(r, fc)));
    }
  }
  return basis;
}

}  // namespace acmwild
