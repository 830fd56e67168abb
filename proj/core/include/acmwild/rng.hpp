#pragma once

#include <cstdint>

#include "acmwild/field.hpp"

namespace acmwild {

/// Counter-based SplitMix64 stream. The k-th output (k = counter before the
/// call) is mix(seed + (k + 1) * 0x9E3779B97F4A7C15), where mix is the
/// SplitMix64 finalizer
///
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z =  z ^ (z >> 31)
///
/// so a stream position is fully described by (seed, counter) and is the
/// same on every platform.
class SeededRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SeededRng(std::uint64_t seed, std::uint64_t counter = 0) noexcept
      : seed_(seed), counter_(counter) {}

  std::uint64_t next_u64() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t counter() const noexcept { return counter_; }

  friend bool operator==(const SeededRng&, const SeededRng&) = default;

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

/// Element of F_p drawn from exactly one 64-bit output x as floor(x * p / 2^64);
/// the counter advances by 1. The deviation from uniform is below p / 2^64.
/// Throws UnsupportedSampling for the rationals and PreconditionError when
/// p < PrimeField::kMinSamplingPrime.
PrimeField::Element random_field_element(SeededRng& rng, const FieldSpec& field);

// Prime field a sampling routine may use; throws as random_field_element does.
const PrimeField& sampling_field(const FieldSpec& field);

}  // namespace acmwild
