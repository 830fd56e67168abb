#include "acmwild/rng.hpp"

#include "acmwild/errors.hpp"

namespace acmwild {

__extension__ using uint128 = unsigned __int128;

std::uint64_t SeededRng::next_u64() noexcept {
  std::uint64_t z = seed_ + (counter_ + 1) * kGamma;
  ++counter_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

const PrimeField& sampling_field(const FieldSpec& field) {
  const auto* pf = std::get_if<PrimeField>(&field);
  if (pf == nullptr) {
    throw UnsupportedSampling("random sampling is only defined over prime fields");
  }
  if (pf->characteristic() < PrimeField::kMinSamplingPrime) {
    throw PreconditionError("generic sampling needs p >= " +
                            std::to_string(PrimeField::kMinSamplingPrime) + ", got " +
                            std::to_string(pf->characteristic()));
  }
  return *pf;
}

PrimeField::Element random_field_element(SeededRng& rng, const FieldSpec& field) {
  const PrimeField& pf = sampling_field(field);
  const std::uint64_t x = rng.next_u64();
  return static_cast<PrimeField::Element>(
      (static_cast<uint128>(x) * pf.characteristic()) >> 64);
}

}  // namespace acmwild
