#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "acmwild/presentation.hpp"

namespace acmwild {

enum class Provenance { exact_rank, certified_vanishing, closed_form };

std::string_view to_string(Provenance p) noexcept;
Provenance provenance_from_string(std::string_view s);

/// Inclusive range of twists. min > max denotes the empty window.
struct TwistWindow {
  int min = 0;
  int max = -1;

  std::size_t size() const noexcept {
    return max < min ? 0 : static_cast<std::size_t>(max - min + 1);
  }
  bool contains(int t) const noexcept { return min <= t && t <= max; }

  friend bool operator==(const TwistWindow&, const TwistWindow&) = default;
};

/// [-n-4, 4]: every nonzero h^1 cell, the first nonzero h^0 and h^n cells and
/// vanishing margins on both sides.
inline TwistWindow default_window(int n) { return {-n - 4, 4}; }

/// Dimensions h^i(F(t)) for 0 <= i <= dim over a twist window.
///
/// `top_cokernel[t]` is the cokernel dimension of the top-degree map
/// H^dim(O(1+t))^b -> H^dim(O(2+t))^{2a} of the presentation, i.e. the
/// degree dim+1 hypercohomology of the two-term complex. It vanishes whenever
/// phi is surjective as a sheaf map, and keeps the Euler identity exact for
/// arbitrary phi.
struct CohomologyTable {
  int dim = 0;
  TwistWindow window;
  std::vector<std::vector<std::int64_t>> cells;    // [i][t - window.min]
  std::vector<std::vector<Provenance>> provenance;  // same shape as cells
  std::vector<std::int64_t> top_cokernel;           // [t - window.min]

  static CohomologyTable zeros(int dim, TwistWindow window, Provenance p);

  std::int64_t at(int i, int t) const { return cells.at(i).at(offset(t)); }
  Provenance source(int i, int t) const { return provenance.at(i).at(offset(t)); }
  void set(int i, int t, std::int64_t v, Provenance p) {
    cells.at(i).at(offset(t)) = v;
    provenance.at(i).at(offset(t)) = p;
  }

  std::size_t offset(int t) const { return static_cast<std::size_t>(t - window.min); }

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

/// h^i(P^n, O(t)).
std::int64_t h_line(int n, int i, int t);

/// chi(O_{P^n}(t)) = C(n+t, n) extended polynomially to negative t.
std::int64_t chi_line(int n, int t);

/// chi(E_{n,a}(t)) = (n+2)a chi(O(1+t)) - 2a chi(O(2+t)).
std::int64_t euler_characteristic(int n, int a, int t);

/// h^i(P^n, E_{n,a}(t)) for phi in the generic open set: zero below twist 1
/// and a((n+2)C(n+t+1,n) - 2C(n+t+2,n)) above for h^0, an at t=-1 and 2a at
/// t=-2 for h^1, zero for 2 <= i <= n-1, zero for t >= -n-1 for h^n. The
/// remaining h^n cells follow from the Euler characteristic.
std::int64_t closed_form_cell(int n, int a, int i, int t);

CohomologyTable closed_form_table(int n, int a, TwistWindow window);

struct CohomologyOptions {
  unsigned threads = 1;
  // Compute the LES-forced zero rows from the sandwich instead of marking
  // them certified.
  bool audit_vanishing = false;
};

/// Exact table on P^n from the long exact sequence of
///   0 -> E(t) -> O(1+t)^b -> O(2+t)^{2a} -> 0:
/// h^0 and h^1 are the kernel and cokernel of mult_map(phi, 1+t), rows
/// 2..n-1 vanish, and h^n is b h^n(O(1+t)) minus the rank of the Serre-dual
/// map H^0(O(-t-n-3))^{2a} -> H^0(O(-t-n-2))^b given by phi transposed.
CohomologyTable cohomology_table_exact(const KernelBundlePresentation& kb, TwistWindow window,
                                       const CohomologyOptions& options = {});

/// sum_i (-1)^i h^i(t) + (-1)^{dim+1} top_cokernel(t).
std::int64_t alternating_sum(const CohomologyTable& table, int t);

/// (-1)^dim (chi - sum_{i<dim} (-1)^i h^i(t)): the top row forced by the
/// Euler characteristic and the lower rows.
std::int64_t forced_top_cell(const CohomologyTable& table, int t, std::int64_t chi);

}  // namespace acmwild
