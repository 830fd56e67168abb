#include "acmwild/field.hpp"

#include <limits>

#include "acmwild/errors.hpp"

namespace acmwild {

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t d = 3; d * d <= value; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw PreconditionError("field characteristic must be a prime below 2^31, got " +
                            std::to_string(p));
  }
  barrett_ = std::numeric_limits<std::uint64_t>::max() / p;
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  // Extended Euclid on (p, a).
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (s0 < 0) s0 += p_;
  return static_cast<Element>(s0);
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

std::string PrimeField::name() const { return "GF(" + std::to_string(p_) + ")"; }

RationalField::Element RationalField::inv(const Element& a) const {
  if (a == 0) throw std::domain_error("inverse of zero in QQ");
  return 1 / a;
}

}  // namespace acmwild
