#include "acmwild/monomials.hpp"

#include <algorithm>

#include "acmwild/errors.hpp"

namespace acmwild {

std::int64_t binomial(std::int64_t m, std::int64_t k) {
  if (k < 0 || m < 0 || m < k) return 0;
  k = std::min(k, m - k);
  __extension__ __int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * (m - k + i) / i;
  }
  return static_cast<std::int64_t>(acc);
}

std::int64_t binomial_polynomial(std::int64_t m, std::int64_t k) {
  if (k < 0) return 0;
  if (m >= 0) return binomial(m, k);
  // (-1)^k C(k - m - 1, k)
  const std::int64_t v = binomial(k - m - 1, k);
  return (k % 2 == 0) ? v : -v;
}

bool grevlex_greater(const Exponent& a, const Exponent& b) {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

void compositions(int remaining, std::size_t slot, Exponent& current,
                  std::vector<Exponent>& out) {
  if (slot + 1 == current.size()) {
    current[slot] = remaining;
    out.push_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[slot] = e;
    compositions(remaining - e, slot + 1, current, out);
  }
}

}  // namespace

MonomialBasis::MonomialBasis(int n, int degree) : n_(n), degree_(degree) {
  if (n < 0) throw PreconditionError("monomial_basis: n must be non-negative");
  if (degree < 0) return;
  Exponent current(static_cast<std::size_t>(n) + 1, 0);
  compositions(degree, 0, current, monomials_);
  std::sort(monomials_.begin(), monomials_.end(), grevlex_greater);
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> MonomialBasis::index_of(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

MonomialBasis monomial_basis(int n, int degree) { return MonomialBasis(n, degree); }

}  // namespace acmwild
