#include "acmwild/moduli.hpp"

#include <stdexcept>
#include <string>

#include "acmwild/errors.hpp"
#include "acmwild/monomials.hpp"
#include "acmwild/resolution.hpp"

namespace acmwild {

std::int64_t kac_discriminant(int n, int a) {
  if (n < 2 || a < 1) throw PreconditionError("kac_discriminant needs n >= 2, a >= 1");
  const std::int64_t small = 2LL * a;
  const std::int64_t large = static_cast<std::int64_t>(n + 2) * a;
  return small * small + large * large - small * (n + 1) * large;
}

namespace {

// a with A of shape (n+2)a x 2a, or ShapeError.
int family_parameter(const LinearFormMatrix& a_matrix) {
  const auto rows = a_matrix.rows();
  const auto cols = a_matrix.cols();
  const auto n = static_cast<std::size_t>(a_matrix.n());
  if (cols < 2 || cols % 2 != 0 || rows != (n + 2) * (cols / 2)) {
    throw ShapeError("stabilizer: expected a (n+2)a x 2a matrix, got " + std::to_string(rows) +
                     " x " + std::to_string(cols) + " on P^" + std::to_string(n));
  }
  return static_cast<int>(cols / 2);
}

}  // namespace

ModMatrix stabilizer_system(const LinearFormMatrix& a_matrix) {
  family_parameter(a_matrix);
  const PrimeField& f = a_matrix.field();
  const std::size_t big = a_matrix.rows();
  const std::size_t small = a_matrix.cols();
  const std::size_t vars = a_matrix.variables();
  const std::size_t c_base = big * big;

  ModMatrix system(f, vars * big * small, big * big + small * small);
  for (std::size_t k = 0; k < vars; ++k) {
    for (std::size_t r = 0; r < big; ++r) {
      for (std::size_t c = 0; c < small; ++c) {
        const std::size_t eq = (k * big + r) * small + c;
        // (A_k C)[r, c] = sum_l A_k[r, l] C[l, c]
        for (std::size_t l = 0; l < small; ++l) {
          system.add_to(eq, c_base + l * small + c, a_matrix.coeff(r, l, k));
        }
        // -(B A_k)[r, c] = -sum_l B[r, l] A_k[l, c]
        for (std::size_t l = 0; l < big; ++l) {
          system.add_to(eq, r * big + l, f.neg(a_matrix.coeff(l, c, k)));
        }
      }
    }
  }
  return system;
}

StabilizerReport stabilizer_dimension(const LinearFormMatrix& a_matrix) {
  const int a = family_parameter(a_matrix);
  const ModMatrix system = stabilizer_system(a_matrix);
  StabilizerReport report;
  report.equations = system.rows();
  report.unknowns = system.cols();
  report.stab_dimension = nullity(system);
  report.kac_value = kac_discriminant(a_matrix.n(), a);
  report.simple = report.stab_dimension == 1;
  return report;
}

std::int64_t family_dimension_by_orbit_count(int n, int a) {
  const std::int64_t a2 = static_cast<std::int64_t>(a) * a;
  return 2 * a2 * (n + 2) * (n + 1) - a2 * (n + 2) * (n + 2) - 4 * a2 + 1;
}

std::int64_t family_dimension(int n, int a) {
  if (n < 2 || a < 1) throw PreconditionError("family_dimension needs n >= 2, a >= 1");
  const std::int64_t a2 = static_cast<std::int64_t>(a) * a;
  const std::int64_t value = a2 * (static_cast<std::int64_t>(n) * n + 2 * n - 4) + 1;
  if (value != family_dimension_by_orbit_count(n, a)) {
    throw std::logic_error("family dimension formulas disagree");
  }
  return value;
}

std::int64_t veronese_bound(int n) {
  if (n < 2) throw PreconditionError("veronese_bound needs n >= 2");
  return binomial(n + 3, 3) - 1;
}

std::int64_t embedding_dimension(const ACMVarietyDescriptor& x, int s) {
  if (s < 0) throw PreconditionError("embedding_dimension needs s >= 0");
  return hilbert_RX(x.resolution(), s) - 1;
}

}  // namespace acmwild
