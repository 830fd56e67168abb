#include "acmwild/variety.hpp"

#include <string>

#include "acmwild/errors.hpp"

namespace acmwild {

ACMVarietyDescriptor ACMVarietyDescriptor::complete_intersection(int n,
                                                                 std::vector<int> degrees) {
  for (int e : degrees) {
    if (e < 1) throw PreconditionError("complete intersection: degrees must be >= 1");
  }
  ACMVarietyDescriptor x;
  x.mode_ = Mode::complete_intersection;
  x.res_ = koszul_degree_data(n, degrees);
  x.degrees_ = std::move(degrees);
  return x;
}

ACMVarietyDescriptor ACMVarietyDescriptor::complete_intersection(
    int n, std::vector<HomogeneousForm> forms, PrimeField field) {
  std::vector<int> degrees;
  for (const auto& f : forms) {
    if (f.n != n) throw ShapeError("complete intersection: form lives in the wrong ring");
    if (f.coeffs.size() != monomial_basis(n, f.degree).size()) {
      throw ShapeError("complete intersection: form of degree " + std::to_string(f.degree) +
                       " has the wrong number of coefficients");
    }
    degrees.push_back(f.degree);
  }
  auto x = complete_intersection(n, std::move(degrees));
  x.forms_ = std::move(forms);
  x.field_ = field;
  return x;
}

ACMVarietyDescriptor ACMVarietyDescriptor::from_degree_data(ResolutionDegreeData res) {
  res.validate();
  ACMVarietyDescriptor x;
  x.mode_ = Mode::degree_data;
  x.res_ = std::move(res);
  return x;
}

HomogeneousForm sample_form(int n, int degree, SeededRng& rng, const FieldSpec& field) {
  HomogeneousForm f;
  f.n = n;
  f.degree = degree;
  const auto size = monomial_basis(n, degree).size();
  f.coeffs.reserve(size);
  for (std::size_t i = 0; i < size; ++i) f.coeffs.push_back(random_field_element(rng, field));
  return f;
}

ACMVarietyDescriptor make_ci_variety(int n, std::vector<int> degrees, SeededRng* rng,
                                     const FieldSpec& field) {
  const int c = static_cast<int>(degrees.size());
  if (n - c < 2) {
    throw PreconditionError("make_ci_variety: dimension n - c = " + std::to_string(n - c) +
                            " is below 2");
  }
  for (int e : degrees) {
    if (e < 1) throw PreconditionError("make_ci_variety: degrees must be >= 1");
  }
  if (rng == nullptr) return ACMVarietyDescriptor::complete_intersection(n, std::move(degrees));

  const PrimeField& pf = sampling_field(field);
  std::vector<HomogeneousForm> forms;
  for (int e : degrees) forms.push_back(sample_form(n, e, *rng, field));
  return ACMVarietyDescriptor::complete_intersection(n, std::move(forms), pf);
}

}  // namespace acmwild
