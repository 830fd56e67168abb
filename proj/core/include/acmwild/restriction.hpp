#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "acmwild/cohomology.hpp"
#include "acmwild/presentation.hpp"
#include "acmwild/variety.hpp"

namespace acmwild {

enum class Justification {
  // h^1(P^n, E_{n,a}(u)) = 0 for u outside {-1, -2}.
  h1_outside_exceptional,
  // h^i(P^n, E_{n,a}(u)) = 0 for every u when 2 <= i <= n-1.
  intermediate_row,
  uncertified,
};

std::string_view to_string(Justification j) noexcept;
Justification justification_from_string(std::string_view s);

/// One group H^index(P^n, sum_j E_{n,a}(t + offset_j)) of the chase, taken
/// from the step-th term of the resolution tensored with E_{n,a}.
struct ChaseEntry {
  int step = 0;
  int index = 0;
  std::vector<int> twist_offsets;
  Justification justification = Justification::uncertified;

  friend bool operator==(const ChaseEntry&, const ChaseEntry&) = default;
};

/// Why h^{target_index}(X, E(t)) vanishes for every t outside
/// `excluded_twists`: it embeds, step by step through the kernels of the
/// resolution tensored with E_{n,a}, into groups on P^n that all vanish.
struct VanishingChaseTrace {
  int target_index = 0;
  std::vector<int> excluded_twists;
  std::vector<ChaseEntry> chain;
  bool certified = false;

  friend bool operator==(const VanishingChaseTrace&, const VanishingChaseTrace&) = default;
};

/// One trace per target index 1..d-1 of X. Uses only the resolution twists,
/// so it applies to every ACM X and to all t at once. A trace with an
/// uncertified entry is returned as a diagnostic with certified = false.
std::vector<VanishingChaseTrace> restriction_vanishing_certificate(
    const ACMVarietyDescriptor& x, int n, int a);

/// Re-evaluates every chain entry with closed_form_cell on the window.
bool confirm_with_closed_form(const VanishingChaseTrace& trace, int n, int a,
                              TwistWindow window);

struct ChaseAuditFailure {
  int target_index = 0;
  int t = 0;
  int index = 0;
  int twist = 0;
  std::int64_t value = 0;
};

/// Recomputes every P^n cell consulted by the traces with the exact
/// cohomology engine (middle rows audited, not certified) for the target
/// twists in `window`, and lists the cells that are not zero.
std::vector<ChaseAuditFailure> audit_certificate_exact(
    const KernelBundlePresentation& kb, std::span<const VanishingChaseTrace> traces,
    TwistWindow window, const CohomologyOptions& options = {});

/// Exact table of E = E_{n,a} (x) O_X, rows 0..d. h^0 and h^1 come from
/// mult_map_on_X(phi, 1+t); rows 2..d-1 are certified zero by the chase;
/// h^d is forced by chi(E(t)) = b P_X(1+t) - 2a P_X(2+t). Throws
/// ExactModeUnavailable for degree-data descriptors.
CohomologyTable restricted_cohomology_table(const KernelBundlePresentation& kb,
                                            const ACMVarietyDescriptor& x, TwistWindow window,
                                            const CohomologyOptions& options = {});

/// chi(X, E_{n,a}(t)) from the Hilbert polynomial of X.
std::int64_t restricted_euler_characteristic(const ACMVarietyDescriptor& x, int a, int t);

/// Table of O_X: h^0 from the Hilbert function, rows 1..d-1 checked against
/// the line-bundle chase through the resolution, h^d forced by the Hilbert
/// polynomial. Throws if a middle row fails the chase.
CohomologyTable structure_sheaf_table(const ACMVarietyDescriptor& x, TwistWindow window);

struct CellRef {
  int i = 0;
  int t = 0;
  std::int64_t value = 0;

  friend bool operator==(const CellRef&, const CellRef&) = default;
};

// A cell the window does not contain and the certificate does not cover;
// t = nullopt means every twist outside the window.
struct MissingCell {
  int i = 0;
  std::optional<int> t;

  friend bool operator==(const MissingCell&, const MissingCell&) = default;
};

struct AcmVerdict {
  enum class Status { acm, not_acm, inconclusive };

  Status status = Status::inconclusive;
  int s = 1;
  std::vector<CellRef> witnesses;  // nonzero cells, twist descending
  std::vector<MissingCell> missing;

  bool holds() const noexcept { return status == Status::acm; }

  friend bool operator==(const AcmVerdict&, const AcmVerdict&) = default;
};

std::string_view to_string(AcmVerdict::Status s) noexcept;
AcmVerdict::Status acm_status_from_string(std::string_view s);

/// Whether E is ACM for O_X(s): h^i(E(s u)) = 0 for 1 <= i <= d-1 and all u.
/// Cells inside the table window are read off the table; the rest must be
/// covered by the certificate, whose only exceptions are twists that s u
/// has to hit for them to matter.
AcmVerdict acm_with_respect_to_s(const CohomologyTable& table, int s,
                                 std::span<const VanishingChaseTrace> certificate);

}  // namespace acmwild
