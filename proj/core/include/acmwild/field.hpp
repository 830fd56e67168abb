#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace acmwild {

using Rational = boost::multiprecision::cpp_rational;

bool is_prime(std::uint64_t value);

/// Arithmetic in F_p for a prime p < 2^31. Elements are stored as their
/// canonical representative in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  static constexpr std::uint32_t kDefaultPrime = 32003;
  // Smallest characteristic accepted for generic sampling.
  static constexpr std::uint32_t kMinSamplingPrime = 101;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const noexcept { return p_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  bool is_zero(Element a) const noexcept { return a == 0; }

  Element add(Element a, Element b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  // a - f * b, the inner step of elimination.
  Element sub_mul(Element a, Element f, Element b) const noexcept {
    return reduce(a + static_cast<std::uint64_t>(p_ - f) * b);
  }
  Element inv(Element a) const;
  Element from_int(std::int64_t v) const noexcept;

  // Representative in (-p/2, p/2].
  std::int64_t to_signed(Element a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  std::string name() const;

  friend bool operator==(const PrimeField& x, const PrimeField& y) noexcept {
    return x.p_ == y.p_;
  }

 private:
  __extension__ using uint128 = unsigned __int128;

  // Barrett reduction, valid for x < 2^63.
  Element reduce(std::uint64_t x) const noexcept {
    auto q = static_cast<std::uint64_t>(
        (static_cast<uint128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return static_cast<Element>(r);
  }

  std::uint32_t p_;
  std::uint64_t barrett_;
};

/// The rationals, with normalized fractions.
class RationalField {
 public:
  using Element = Rational;

  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  bool is_zero(const Element& a) const { return a == 0; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element sub_mul(const Element& a, const Element& f, const Element& b) const {
    return a - f * b;
  }
  Element inv(const Element& a) const;
  Element from_int(std::int64_t v) const { return Rational(v); }

  std::string name() const { return "QQ"; }

  friend bool operator==(const RationalField&, const RationalField&) noexcept {
    return true;
  }
};

using FieldSpec = std::variant<PrimeField, RationalField>;

inline FieldSpec prime_field(std::uint32_t p = PrimeField::kDefaultPrime) {
  return PrimeField(p);
}
inline FieldSpec rationals() { return RationalField{}; }

}  // namespace acmwild
