#include "acmwild/wildness.hpp"

#include <string>

#include "acmwild/errors.hpp"
#include "acmwild/version.hpp"

namespace acmwild {

WildnessReport wildness_certificate(const ACMVarietyDescriptor& x, int s, int a,
                                    const SeededRng& rng, const FieldSpec& field,
                                    const WildnessOptions& options) {
  if (s < 3) {
    throw PreconditionError(
        "wildness certificate needs s >= 3: h^1(E(t)) survives at t = -1 and t = -2, "
        "which O_X(" + std::to_string(s) + ") reaches");
  }
  if (x.dimension() < 2) {
    throw PreconditionError("wildness certificate needs dim X >= 2, got " +
                            std::to_string(x.dimension()));
  }
  if (a < 1) throw PreconditionError("wildness certificate needs a >= 1");

  const int n = x.n();
  const PrimeField& pf = sampling_field(field);
  const TwistWindow window = options.window.value_or(default_window(n));

  WildnessReport report;
  report.tool_version = kToolVersion;
  report.prime = pf.characteristic();
  report.seed = rng.seed();
  report.n = n;
  report.a = a;
  report.s = s;
  report.variety = x;

  const BuildResult built = build_kernel_bundle(n, a, rng, field, options.max_resample);
  const KernelBundlePresentation& kb = built.bundle;
  report.accepted_seed = built.accepted_seed;
  report.attempts = built.attempts;
  report.surjectivity = built.certificate;
  report.phi = kb.phi();

  report.rank = kb.rank();
  report.family_dimension = family_dimension(n, a);
  report.veronese_bound = veronese_bound(n);
  report.ambient_dim_for_s = embedding_dimension(x, s);

  report.checks.genericity =
      check_generic_conditions(static_cast<std::int64_t>(kb.target_rank()),
                               static_cast<std::int64_t>(kb.source_rank()), n) &&
      built.certificate.surjective_at_degree.has_value();
  report.checks.h0_iso = h0_phi1_is_isomorphism(kb);

  report.stabilizer = stabilizer_dimension(kb.phi().transpose());
  report.checks.simplicity = report.stabilizer.simple;

  report.vanishing_certificate = restriction_vanishing_certificate(x, n, a);
  bool vanishing = true;
  for (const auto& trace : report.vanishing_certificate) {
    vanishing = vanishing && confirm_with_closed_form(trace, n, a, window);
  }

  CohomologyTable table = CohomologyTable::zeros(x.dimension(), TwistWindow{}, Provenance::exact_rank);
  if (x.exact_mode()) {
    table = restricted_cohomology_table(kb, x, window, options.cohomology);
    for (int t = window.min; t <= window.max; ++t) {
      if (t != -1 && t != -2 && table.at(1, t) != 0) vanishing = false;
    }
    const auto failures =
        audit_certificate_exact(kb, report.vanishing_certificate, window, options.cohomology);
    vanishing = vanishing && failures.empty();
    report.restricted_table = table;
  }
  report.checks.vanishing_certificate = vanishing;

  report.acm = acm_with_respect_to_s(table, s, report.vanishing_certificate);
  report.checks.acm_wrt_s = report.acm.holds();

  report.verdict = report.checks.all() && s >= 3 && x.dimension() >= 2;
  return report;
}

}  // namespace acmwild
