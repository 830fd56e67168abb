#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acmwild/cohomology.hpp"
#include "acmwild/linear_forms.hpp"
#include "acmwild/moduli.hpp"
#include "acmwild/presentation.hpp"
#include "acmwild/restriction.hpp"
#include "acmwild/variety.hpp"

namespace acmwild {

struct WildnessChecks {
  bool genericity = false;
  bool h0_iso = false;
  bool simplicity = false;
  bool vanishing_certificate = false;
  bool acm_wrt_s = false;

  bool all() const noexcept {
    return genericity && h0_iso && simplicity && vanishing_certificate && acm_wrt_s;
  }

  friend bool operator==(const WildnessChecks&, const WildnessChecks&) = default;
};

/// Everything needed to re-verify that E_{n,a} restricted to X is a simple,
/// ACM-for-O_X(s) bundle in a family of dimension a^2(n^2+2n-4)+1.
struct WildnessReport {
  std::string tool_version;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::uint64_t accepted_seed = 0;
  int attempts = 0;

  int n = 0;
  int a = 0;
  int s = 0;
  ACMVarietyDescriptor variety = projective_space(2);

  int rank = 0;
  std::int64_t family_dimension = 0;
  std::int64_t veronese_bound = 0;
  std::int64_t ambient_dim_for_s = 0;

  WildnessChecks checks;
  SurjectivityCertificate surjectivity;
  StabilizerReport stabilizer;
  std::vector<VanishingChaseTrace> vanishing_certificate;
  std::optional<CohomologyTable> restricted_table;
  AcmVerdict acm;
  LinearFormMatrix phi{PrimeField(), 1, 0, 0};

  bool verdict = false;

  friend bool operator==(const WildnessReport&, const WildnessReport&) = default;
};

struct WildnessOptions {
  std::optional<TwistWindow> window;  // default_window(n)
  CohomologyOptions cohomology;
  int max_resample = kDefaultMaxResample;
};

/// Builds E_{n,a} on the P^n containing X, restricts it, and runs every
/// check. Exact-mode varieties additionally get the restricted table and an
/// exact audit of the chase certificate. Throws PreconditionError for s < 3
/// (twists -1 and -2 keep h^1 alive and s in {1, 2} reaches them), dim X < 2
/// or a < 1; GenericityFailure propagates from build_kernel_bundle.
WildnessReport wildness_certificate(const ACMVarietyDescriptor& x, int s, int a,
                                    const SeededRng& rng, const FieldSpec& field,
                                    const WildnessOptions& options = {});

}  // namespace acmwild
