#pragma once

#include <optional>
#include <vector>

#include "acmwild/field.hpp"
#include "acmwild/monomials.hpp"
#include "acmwild/resolution.hpp"
#include "acmwild/rng.hpp"

namespace acmwild {

/// An ACM subvariety X of P^n. Complete intersections carry Koszul degree
/// data and, when sampled or supplied, the explicit forms needed for exact
/// graded computations; general ACM varieties are known only by the twists
/// of their minimal free resolution.
class ACMVarietyDescriptor {
 public:
  enum class Mode { complete_intersection, degree_data };

  static ACMVarietyDescriptor complete_intersection(int n, std::vector<int> degrees);
  static ACMVarietyDescriptor complete_intersection(int n, std::vector<HomogeneousForm> forms,
                                                    PrimeField field);
  static ACMVarietyDescriptor from_degree_data(ResolutionDegreeData res);

  Mode mode() const noexcept { return mode_; }
  int n() const noexcept { return res_.n; }
  int codimension() const noexcept { return res_.codimension(); }
  int dimension() const noexcept { return res_.dimension(); }
  const ResolutionDegreeData& resolution() const noexcept { return res_; }

  // Empty for degree-data descriptors.
  const std::vector<int>& ci_degrees() const noexcept { return degrees_; }
  const std::vector<HomogeneousForm>& forms() const noexcept { return forms_; }
  const std::optional<PrimeField>& field() const noexcept { return field_; }

  /// True when graded pieces of R_X can be computed: a complete
  /// intersection with its forms (P^n itself needs none).
  bool exact_mode() const noexcept {
    return mode_ == Mode::complete_intersection &&
           (degrees_.empty() || forms_.size() == degrees_.size());
  }

  friend bool operator==(const ACMVarietyDescriptor&, const ACMVarietyDescriptor&) = default;

 private:
  ACMVarietyDescriptor() = default;

  Mode mode_ = Mode::degree_data;
  ResolutionDegreeData res_;
  std::vector<int> degrees_;
  std::vector<HomogeneousForm> forms_;
  std::optional<PrimeField> field_;
};

/// Complete intersection of the given degrees in P^n. With an rng the forms
/// are sampled with independent uniform coefficients, giving an exact-mode
/// descriptor. Requires degrees >= 1 and dimension n - c >= 2.
ACMVarietyDescriptor make_ci_variety(int n, std::vector<int> degrees, SeededRng* rng,
                                     const FieldSpec& field);

inline ACMVarietyDescriptor projective_space(int n) {
  return ACMVarietyDescriptor::complete_intersection(n, std::vector<int>{});
}

HomogeneousForm sample_form(int n, int degree, SeededRng& rng, const FieldSpec& field);

}  // namespace acmwild
