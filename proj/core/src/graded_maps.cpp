#include "acmwild/graded_maps.hpp"

#include <string>

#include "acmwild/errors.hpp"
#include "acmwild/resolution.hpp"

namespace acmwild {

ModMatrix mult_map(const LinearFormMatrix& phi, int m) {
  const PrimeField& f = phi.field();
  const MonomialBasis src(phi.n(), m);
  const MonomialBasis dst(phi.n(), m + 1);
  ModMatrix out(f, phi.rows() * dst.size(), phi.cols() * src.size());
  if (out.empty()) return out;

  // Position of mu * x_k in dst, for every source monomial and variable.
  std::vector<std::size_t> shifted(src.size() * phi.variables());
  for (std::size_t s = 0; s < src.size(); ++s) {
    Exponent e = src[s];
    for (std::size_t k = 0; k < phi.variables(); ++k) {
      ++e[k];
      shifted[s * phi.variables() + k] = *dst.index_of(e);
      --e[k];
    }
  }

  for (std::size_t i = 0; i < phi.rows(); ++i) {
    for (std::size_t j = 0; j < phi.cols(); ++j) {
      const auto entry = phi.entry(i, j);
      for (std::size_t s = 0; s < src.size(); ++s) {
        for (std::size_t k = 0; k < entry.size(); ++k) {
          if (entry[k] == 0) continue;
          out.add_to(i * dst.size() + shifted[s * phi.variables() + k], j * src.size() + s,
                     entry[k]);
        }
      }
    }
  }
  return out;
}

namespace {

// Coefficients of f * mu in monomial_basis(n, deg f + deg mu).
void add_product_row(const HomogeneousForm& form, const MonomialBasis& form_basis,
                     const Exponent& mu, const MonomialBasis& target, ModMatrix& rows,
                     std::size_t row) {
  for (std::size_t t = 0; t < form_basis.size(); ++t) {
    if (form.coeffs[t] == 0) continue;
    Exponent e = form_basis[t];
    for (std::size_t v = 0; v < e.size(); ++v) e[v] += mu[v];
    rows.add_to(row, *target.index_of(e), form.coeffs[t]);
  }
}

}  // namespace

QuotientPiece quotient_piece(const ACMVarietyDescriptor& x, const PrimeField& field, int k) {
  if (!x.exact_mode()) {
    throw ExactModeUnavailable(
        "graded pieces of R_X need a complete intersection with explicit forms");
  }
  if (x.field() && !(*x.field() == field)) {
    throw ShapeError("variety forms live over " + x.field()->name() + ", not " + field.name());
  }

  QuotientPiece piece;
  piece.degree = k;
  piece.ambient = MonomialBasis(x.n(), k);
  const std::size_t dim = piece.ambient.size();

  // Spanning set {f_i * mu} of (I_X)_k.
  std::size_t span_rows = 0;
  std::vector<MonomialBasis> multipliers;
  std::vector<MonomialBasis> form_bases;
  for (const auto& form : x.forms()) {
    multipliers.emplace_back(x.n(), k - form.degree);
    form_bases.emplace_back(x.n(), form.degree);
    span_rows += multipliers.back().size();
  }
  ModMatrix ideal(field, span_rows, dim);
  std::size_t row = 0;
  for (std::size_t i = 0; i < x.forms().size(); ++i) {
    for (const auto& mu : multipliers[i]) {
      add_product_row(x.forms()[i], form_bases[i], mu, piece.ambient, ideal, row++);
    }
  }

  auto ech = row_reduce(std::move(ideal));
  std::vector<long> pivot_row_of(dim, -1);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    pivot_row_of[ech.pivots[r]] = static_cast<long>(r);
  }
  std::vector<long> standard_pos(dim, -1);
  for (std::size_t u = 0; u < dim; ++u) {
    if (pivot_row_of[u] < 0) {
      standard_pos[u] = static_cast<long>(piece.standard.size());
      piece.standard.push_back(u);
    }
  }

  const auto expected = hilbert_RX(x.resolution(), k);
  if (static_cast<std::int64_t>(piece.standard.size()) != expected) {
    throw GenericityFailure("forms are not a complete intersection: dim (R_X)_" +
                            std::to_string(k) + " = " + std::to_string(piece.standard.size()) +
                            ", Koszul count " + std::to_string(expected));
  }

  piece.normal_forms = ModMatrix(field, dim, piece.standard.size());
  for (std::size_t u = 0; u < dim; ++u) {
    if (standard_pos[u] >= 0) {
      piece.normal_forms.set(u, static_cast<std::size_t>(standard_pos[u]), field.one());
      continue;
    }
    const auto r = static_cast<std::size_t>(pivot_row_of[u]);
    for (std::size_t s = 0; s < piece.standard.size(); ++s) {
      piece.normal_forms.set(u, s, field.neg(ech.reduced(r, piece.standard[s])));
    }
  }
  return piece;
}

ModMatrix mult_map_on_X(const LinearFormMatrix& phi, int m, const ACMVarietyDescriptor& x) {
  if (x.n() != phi.n()) throw ShapeError("mult_map_on_X: phi and X live in different P^n");
  const PrimeField& f = phi.field();
  const QuotientPiece src = quotient_piece(x, f, m);
  const QuotientPiece dst = quotient_piece(x, f, m + 1);

  ModMatrix out(f, phi.rows() * dst.size(), phi.cols() * src.size());
  if (out.empty()) return out;

  for (std::size_t i = 0; i < phi.rows(); ++i) {
    for (std::size_t j = 0; j < phi.cols(); ++j) {
      const auto entry = phi.entry(i, j);
      for (std::size_t s = 0; s < src.size(); ++s) {
        Exponent e = src.ambient[src.standard[s]];
        const std::size_t col = j * src.size() + s;
        for (std::size_t k = 0; k < entry.size(); ++k) {
          if (entry[k] == 0) continue;
          ++e[k];
          const auto nf = dst.normal_forms.row(*dst.ambient.index_of(e));
          --e[k];
          for (std::size_t t = 0; t < nf.size(); ++t) {
            if (nf[t] == 0) continue;
            out.add_to(i * dst.size() + t, col, f.mul(entry[k], nf[t]));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace acmwild
