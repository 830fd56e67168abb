#pragma once

#include <cstdint>
#include <optional>

#include "acmwild/field.hpp"
#include "acmwild/linear_forms.hpp"
#include "acmwild/rng.hpp"

namespace acmwild {

/// a_tgt >= 1, b_src >= a_tgt + n and 2 b_src >= (n + 2) a_tgt: the range in
/// which general matrices of linear forms are surjective as sheaf maps with
/// H^0(phi(1)) surjective.
bool check_generic_conditions(std::int64_t a_tgt, std::int64_t b_src, std::int64_t n);

/// Independent uniform coefficients, drawn in storage order of
/// LinearFormMatrix (entry-major, variable fastest).
LinearFormMatrix sample_phi(int n, std::size_t a_tgt, std::size_t b_src, SeededRng& rng,
                            const FieldSpec& field);

struct SurjectivityCertificate {
  // Smallest t in [-1, searched_up_to] whose cokernel piece vanishes.
  std::optional<int> surjective_at_degree;
  int searched_up_to = 0;
  bool h0_phi1_iso = false;

  friend bool operator==(const SurjectivityCertificate&,
                         const SurjectivityCertificate&) = default;
};

/// Searches t = -1..t_max for the first degree where mult_map(phi, t) has
/// full row rank. The cokernel module is generated in degree -1, so one
/// vanishing piece kills all later ones and the sheaf map is surjective.
/// Not finding one is inconclusive, never a proof of non-surjectivity.
SurjectivityCertificate sheaf_surjectivity_certificate(const LinearFormMatrix& phi, int t_max);

/// E_{n,a} = ker(O(1)^{(n+2)a} -> O(2)^{2a}) given by a 2a x (n+2)a matrix
/// of linear forms.
class KernelBundlePresentation {
 public:
  // Throws PreconditionError unless n >= 2 and a >= 1, ShapeError unless phi
  // has the 2a x (n+2)a shape over P^n.
  KernelBundlePresentation(int n, int a, LinearFormMatrix phi);

  int n() const noexcept { return n_; }
  int a() const noexcept { return a_; }
  const LinearFormMatrix& phi() const noexcept { return phi_; }

  int rank() const noexcept { return n_ * a_; }
  std::size_t source_rank() const noexcept { return static_cast<std::size_t>((n_ + 2) * a_); }
  std::size_t target_rank() const noexcept { return static_cast<std::size_t>(2 * a_); }

  friend bool operator==(const KernelBundlePresentation&,
                         const KernelBundlePresentation&) = default;

 private:
  int n_;
  int a_;
  LinearFormMatrix phi_;
};

/// H^0(phi(1)): H^0(O(1))^{(n+2)a} -> H^0(O(2))^{2a} is square of size
/// a(n+1)(n+2); true iff it has full rank.
bool h0_phi1_is_isomorphism(const KernelBundlePresentation& kb);

inline constexpr int kDefaultMaxResample = 8;
inline int default_certificate_search_bound(int n) { return n + 2; }

struct BuildResult {
  KernelBundlePresentation bundle;
  SurjectivityCertificate certificate;
  std::uint64_t accepted_seed = 0;
  int attempts = 0;
};

/// Attempt k (0-based) samples phi from SeededRng(rng.seed() + k, rng.counter()),
/// so the accepted phi is reproducible from (accepted_seed, n, a). A sample is
/// accepted when both the sheaf surjectivity certificate and the H^0(phi(1))
/// isomorphism hold. Throws GenericityFailure after max_resample failures.
BuildResult build_kernel_bundle(int n, int a, const SeededRng& rng, const FieldSpec& field,
                                int max_resample = kDefaultMaxResample,
                                std::optional<int> t_max = std::nullopt);

}  // namespace acmwild
