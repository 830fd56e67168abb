#include "acmwild/presentation.hpp"

#include <string>

#include "acmwild/errors.hpp"
#include "acmwild/graded_maps.hpp"
#include "acmwild/matrix.hpp"
#include "acmwild/monomials.hpp"

namespace acmwild {

bool check_generic_conditions(std::int64_t a_tgt, std::int64_t b_src, std::int64_t n) {
  return a_tgt >= 1 && b_src >= a_tgt + n && 2 * b_src >= (n + 2) * a_tgt;
}

LinearFormMatrix sample_phi(int n, std::size_t a_tgt, std::size_t b_src, SeededRng& rng,
                            const FieldSpec& field) {
  const PrimeField& pf = sampling_field(field);
  std::vector<PrimeField::Element> coeffs(a_tgt * b_src * (static_cast<std::size_t>(n) + 1));
  for (auto& c : coeffs) c = random_field_element(rng, field);
  return LinearFormMatrix(pf, n, a_tgt, b_src, std::move(coeffs));
}

SurjectivityCertificate sheaf_surjectivity_certificate(const LinearFormMatrix& phi, int t_max) {
  if (t_max < 1) throw PreconditionError("surjectivity certificate: t_max must be >= 1");
  SurjectivityCertificate cert;
  cert.searched_up_to = t_max;
  for (int t = -1; t <= t_max; ++t) {
    const auto target = static_cast<std::size_t>(phi.rows()) *
                        static_cast<std::size_t>(binomial(phi.n() + t + 1, phi.n()));
    const ModMatrix m = mult_map(phi, t);
    const auto r = rank(m);
    if (t == 1) cert.h0_phi1_iso = (m.rows() == m.cols() && r == m.rows());
    if (!cert.surjective_at_degree && r == target) cert.surjective_at_degree = t;
    if (cert.surjective_at_degree && t >= 1) break;
  }
  return cert;
}

KernelBundlePresentation::KernelBundlePresentation(int n, int a, LinearFormMatrix phi)
    : n_(n), a_(a), phi_(std::move(phi)) {
  if (n < 2 || a < 1) {
    throw PreconditionError("kernel bundle E_{n,a} needs n >= 2 and a >= 1, got n=" +
                            std::to_string(n) + " a=" + std::to_string(a));
  }
  if (phi_.n() != n || phi_.rows() != target_rank() || phi_.cols() != source_rank()) {
    throw ShapeError("kernel bundle E_{" + std::to_string(n) + "," + std::to_string(a) +
                     "} needs a " + std::to_string(target_rank()) + " x " +
                     std::to_string(source_rank()) + " matrix of linear forms on P^" +
                     std::to_string(n));
  }
}

bool h0_phi1_is_isomorphism(const KernelBundlePresentation& kb) {
  const ModMatrix m = mult_map(kb.phi(), 1);
  return m.rows() == m.cols() && rank(m) == m.rows();
}

BuildResult build_kernel_bundle(int n, int a, const SeededRng& rng, const FieldSpec& field,
                                int max_resample, std::optional<int> t_max) {
  if (n < 2 || a < 1) {
    throw PreconditionError("build_kernel_bundle needs n >= 2 and a >= 1, got n=" +
                            std::to_string(n) + " a=" + std::to_string(a));
  }
  sampling_field(field);
  const int bound = t_max.value_or(default_certificate_search_bound(n));
  const auto a_tgt = static_cast<std::size_t>(2 * a);
  const auto b_src = static_cast<std::size_t>((n + 2) * a);

  for (int attempt = 0; attempt < max_resample; ++attempt) {
    const std::uint64_t seed = rng.seed() + static_cast<std::uint64_t>(attempt);
    SeededRng stream(seed, rng.counter());
    auto phi = sample_phi(n, a_tgt, b_src, stream, field);
    auto cert = sheaf_surjectivity_certificate(phi, bound);
    if (cert.surjective_at_degree && cert.h0_phi1_iso) {
      return BuildResult{KernelBundlePresentation(n, a, std::move(phi)), cert, seed,
                         attempt + 1};
    }
  }
  throw GenericityFailure("no generic presentation for E_{" + std::to_string(n) + "," +
                          std::to_string(a) + "} after " + std::to_string(max_resample) +
                          " samples; the field may be too small");
}

}  // namespace acmwild
