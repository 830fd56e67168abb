#include "acmwild/resolution.hpp"

#include <algorithm>
#include <string>

#include "acmwild/errors.hpp"
#include "acmwild/monomials.hpp"

namespace acmwild {

void ResolutionDegreeData::validate() const {
  if (n < 1) throw PreconditionError("resolution: ambient dimension must be >= 1");
  if (codimension() > n) throw PreconditionError("resolution: codimension exceeds n");
  for (std::size_t i = 0; i < twists.size(); ++i) {
    if (twists[i].empty()) {
      throw PreconditionError("resolution: F_" + std::to_string(i + 1) + " is empty");
    }
    for (int t : twists[i]) {
      if (t < 1) throw PreconditionError("resolution: twists must be >= 1");
    }
  }
}

ResolutionDegreeData koszul_degree_data(int n, std::span<const int> degrees) {
  ResolutionDegreeData res;
  res.n = n;
  const std::size_t c = degrees.size();
  if (c >= 32) throw PreconditionError("koszul_degree_data: too many forms");
  res.twists.assign(c, {});
  for (std::uint32_t mask = 1; mask < (1u << c); ++mask) {
    int sum = 0;
    int size = 0;
    for (std::size_t j = 0; j < c; ++j) {
      if (mask & (1u << j)) {
        sum += degrees[j];
        ++size;
      }
    }
    res.twists[static_cast<std::size_t>(size - 1)].push_back(sum);
  }
  for (auto& row : res.twists) std::sort(row.begin(), row.end());
  res.validate();
  return res;
}

namespace {

template <class Binom>
std::int64_t alternating_sum(const ResolutionDegreeData& res, int k, Binom binom) {
  std::int64_t value = binom(res.n + k, res.n);
  for (std::size_t i = 0; i < res.twists.size(); ++i) {
    const std::int64_t sign = (i % 2 == 0) ? -1 : 1;  // F_1 subtracts, F_2 adds, ...
    for (int twist : res.twists[i]) {
      value += sign * binom(res.n + k - twist, res.n);
    }
  }
  return value;
}

}  // namespace

std::int64_t hilbert_RX(const ResolutionDegreeData& res, int k) {
  return alternating_sum(res, k, [](std::int64_t m, std::int64_t n) { return binomial(m, n); });
}

std::int64_t hilbert_polynomial_RX(const ResolutionDegreeData& res, int k) {
  return alternating_sum(res, k, [](std::int64_t m, std::int64_t n) {
    return binomial_polynomial(m, n);
  });
}

}  // namespace acmwild
