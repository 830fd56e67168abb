#include "acmwild/restriction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "acmwild/errors.hpp"
#include "acmwild/graded_maps.hpp"
#include "acmwild/matrix.hpp"
#include "acmwild/parallel.hpp"

namespace acmwild {

std::string_view to_string(Justification j) noexcept {
  switch (j) {
    case Justification::h1_outside_exceptional:
      return "h1-outside-exceptional";
    case Justification::intermediate_row:
      return "intermediate-row";
    case Justification::uncertified:
      return "uncertified";
  }
  return "unknown";
}

Justification justification_from_string(std::string_view s) {
  if (s == "h1-outside-exceptional") return Justification::h1_outside_exceptional;
  if (s == "intermediate-row") return Justification::intermediate_row;
  if (s == "uncertified") return Justification::uncertified;
  throw ParseError("unknown justification '" + std::string(s) + "'");
}

std::string_view to_string(AcmVerdict::Status s) noexcept {
  switch (s) {
    case AcmVerdict::Status::acm:
      return "acm";
    case AcmVerdict::Status::not_acm:
      return "not-acm";
    case AcmVerdict::Status::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

AcmVerdict::Status acm_status_from_string(std::string_view s) {
  if (s == "acm") return AcmVerdict::Status::acm;
  if (s == "not-acm") return AcmVerdict::Status::not_acm;
  if (s == "inconclusive") return AcmVerdict::Status::inconclusive;
  throw ParseError("unknown verdict status '" + std::string(s) + "'");
}

namespace {

// Exceptional twists of h^1(P^n, E_{n,a}(u)).
constexpr int kExceptionalTwists[] = {-2, -1};

// Twists of the step-th term of the resolution; step 0 is R itself.
std::vector<int> step_twists(const ResolutionDegreeData& res, int step) {
  if (step == 0) return {0};
  return res.twists[static_cast<std::size_t>(step - 1)];
}

}  // namespace

std::vector<VanishingChaseTrace> restriction_vanishing_certificate(
    const ACMVarietyDescriptor& x, int n, int a) {
  if (x.n() != n) throw ShapeError("vanishing certificate: X does not live in P^n");
  if (n < 2 || a < 1) throw PreconditionError("vanishing certificate needs n >= 2, a >= 1");
  const int d = x.dimension();
  const int c = x.codimension();
  if (d < 2) {
    throw PreconditionError("vanishing certificate needs dim X >= 2, got " + std::to_string(d));
  }

  std::vector<VanishingChaseTrace> traces;
  for (int i = 1; i <= d - 1; ++i) {
    VanishingChaseTrace trace;
    trace.target_index = i;
    trace.certified = true;
    for (int k = 0; k <= c; ++k) {
      ChaseEntry entry;
      entry.step = k;
      entry.index = i + k;
      for (int twist : step_twists(x.resolution(), k)) entry.twist_offsets.push_back(-twist);
      if (entry.index >= 2 && entry.index <= n - 1) {
        entry.justification = Justification::intermediate_row;
      } else if (entry.index == 1) {
        entry.justification = Justification::h1_outside_exceptional;
        for (int off : entry.twist_offsets)
          for (int e : kExceptionalTwists) trace.excluded_twists.push_back(e - off);
      } else {
        entry.justification = Justification::uncertified;
        trace.certified = false;
      }
      trace.chain.push_back(std::move(entry));
    }
    std::sort(trace.excluded_twists.begin(), trace.excluded_twists.end());
    trace.excluded_twists.erase(
        std::unique(trace.excluded_twists.begin(), trace.excluded_twists.end()),
        trace.excluded_twists.end());
    traces.push_back(std::move(trace));
  }
  return traces;
}

namespace {

bool excluded(const VanishingChaseTrace& trace, int t) {
  return std::binary_search(trace.excluded_twists.begin(), trace.excluded_twists.end(), t);
}

}  // namespace

bool confirm_with_closed_form(const VanishingChaseTrace& trace, int n, int a,
                              TwistWindow window) {
  if (!trace.certified) return false;
  for (int t = window.min; t <= window.max; ++t) {
    if (excluded(trace, t)) continue;
    for (const auto& entry : trace.chain) {
      for (int off : entry.twist_offsets) {
        if (closed_form_cell(n, a, entry.index, t + off) != 0) return false;
      }
    }
  }
  return true;
}

std::vector<ChaseAuditFailure> audit_certificate_exact(
    const KernelBundlePresentation& kb, std::span<const VanishingChaseTrace> traces,
    TwistWindow window, const CohomologyOptions& options) {
  std::vector<ChaseAuditFailure> failures;
  if (window.size() == 0) return failures;
  int lowest_offset = 0;
  for (const auto& trace : traces)
    for (const auto& entry : trace.chain)
      for (int off : entry.twist_offsets) lowest_offset = std::min(lowest_offset, off);

  CohomologyOptions audit = options;
  audit.audit_vanishing = true;
  const TwistWindow span{window.min + lowest_offset, window.max};
  const CohomologyTable ambient = cohomology_table_exact(kb, span, audit);

  for (const auto& trace : traces) {
    for (int t = window.min; t <= window.max; ++t) {
      if (excluded(trace, t)) continue;
      for (const auto& entry : trace.chain) {
        if (entry.index > ambient.dim) {
          failures.push_back({trace.target_index, t, entry.index, t, -1});
          continue;
        }
        for (int off : entry.twist_offsets) {
          const auto v = ambient.at(entry.index, t + off);
          if (v != 0) failures.push_back({trace.target_index, t, entry.index, t + off, v});
        }
      }
    }
  }
  return failures;
}

std::int64_t restricted_euler_characteristic(const ACMVarietyDescriptor& x, int a, int t) {
  const std::int64_t b = static_cast<std::int64_t>(x.n() + 2) * a;
  return b * hilbert_polynomial_RX(x.resolution(), 1 + t) -
         static_cast<std::int64_t>(2) * a * hilbert_polynomial_RX(x.resolution(), 2 + t);
}

CohomologyTable restricted_cohomology_table(const KernelBundlePresentation& kb,
                                            const ACMVarietyDescriptor& x, TwistWindow window,
                                            const CohomologyOptions& options) {
  if (!x.exact_mode()) {
    throw ExactModeUnavailable(
        "restricted tables need a complete intersection with explicit forms; only the "
        "vanishing certificate applies to degree data");
  }
  if (x.n() != kb.n()) throw ShapeError("restricted table: X does not live in P^n");
  const int d = x.dimension();
  const auto traces = restriction_vanishing_certificate(x, kb.n(), kb.a());
  for (const auto& trace : traces) {
    if (!trace.certified) {
      throw std::logic_error("vanishing chase failed for h^" +
                             std::to_string(trace.target_index) + " on a dim >= 2 ACM variety");
    }
  }

  auto table = CohomologyTable::zeros(d, window, Provenance::exact_rank);
  detail::parallel_for(window.size(), options.threads, [&](std::size_t col) {
    const int t = window.min + static_cast<int>(col);
    const ModMatrix m = mult_map_on_X(kb.phi(), 1 + t, x);
    const auto r = static_cast<std::int64_t>(rank(m));
    table.cells[0][col] = static_cast<std::int64_t>(m.cols()) - r;
    table.cells[1][col] = static_cast<std::int64_t>(m.rows()) - r;
    for (int i = 2; i < d; ++i) {
      table.provenance[static_cast<std::size_t>(i)][col] = Provenance::certified_vanishing;
    }
  });
  for (int t = window.min; t <= window.max; ++t) {
    table.cells[static_cast<std::size_t>(d)][table.offset(t)] =
        forced_top_cell(table, t, restricted_euler_characteristic(x, kb.a(), t));
  }
  return table;
}

CohomologyTable structure_sheaf_table(const ACMVarietyDescriptor& x, TwistWindow window) {
  const int d = x.dimension();
  const int n = x.n();
  if (d < 1) throw PreconditionError("structure_sheaf_table needs dim X >= 1");
  auto table = CohomologyTable::zeros(d, window, Provenance::closed_form);
  for (int t = window.min; t <= window.max; ++t) {
    table.set(0, t, hilbert_RX(x.resolution(), t), Provenance::closed_form);
    for (int i = 1; i <= d - 1; ++i) {
      for (int k = 0; k <= x.codimension(); ++k) {
        for (int twist : step_twists(x.resolution(), k)) {
          if (h_line(n, i + k, t - twist) != 0) {
            throw std::logic_error("line-bundle chase does not vanish for h^" +
                                   std::to_string(i) + "(O_X(" + std::to_string(t) + "))");
          }
        }
      }
      table.set(i, t, 0, Provenance::certified_vanishing);
    }
    table.set(d, t, forced_top_cell(table, t, hilbert_polynomial_RX(x.resolution(), t)),
              Provenance::closed_form);
  }
  return table;
}

AcmVerdict acm_with_respect_to_s(const CohomologyTable& table, int s,
                                 std::span<const VanishingChaseTrace> certificate) {
  if (s < 1) throw PreconditionError("acm_with_respect_to_s needs s >= 1");
  AcmVerdict verdict;
  verdict.s = s;
  const int d = table.dim;

  for (int t = table.window.max; t >= table.window.min; --t) {
    if (t % s != 0) continue;
    for (int i = 1; i <= d - 1; ++i) {
      const auto v = table.at(i, t);
      if (v != 0) verdict.witnesses.push_back({i, t, v});
    }
  }

  for (int i = 1; i <= d - 1; ++i) {
    auto it = std::find_if(certificate.begin(), certificate.end(), [i](const auto& trace) {
      return trace.target_index == i && trace.certified;
    });
    if (it == certificate.end()) {
      verdict.missing.push_back({i, std::nullopt});
      continue;
    }
    for (int e : it->excluded_twists) {
      if (!table.window.contains(e) && e % s == 0) verdict.missing.push_back({i, e});
    }
  }

  if (!verdict.witnesses.empty()) {
    verdict.status = AcmVerdict::Status::not_acm;
  } else if (!verdict.missing.empty()) {
    verdict.status = AcmVerdict::Status::inconclusive;
  } else {
    verdict.status = AcmVerdict::Status::acm;
  }
  return verdict;
}

}  // namespace acmwild
