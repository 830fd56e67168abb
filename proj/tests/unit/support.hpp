#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "acmwild/presentation.hpp"
#include "acmwild/rng.hpp"
#include "report_io.hpp"

namespace acmwild::testing {

inline io::Json load_test_vectors() {
  std::ifstream in(std::string(ACMWILD_TEST_DATA_DIR) + "/test_vectors.json");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return io::parse(buffer.str());
}

inline BuildResult accepted_bundle(int n, int a, std::uint64_t seed) {
  return build_kernel_bundle(n, a, SeededRng(seed), prime_field());
}

// phi with every coefficient zero, in the 2a x (n+2)a shape.
inline LinearFormMatrix zero_phi(int n, int a) {
  return LinearFormMatrix(PrimeField(), n, static_cast<std::size_t>(2 * a),
                          static_cast<std::size_t>((n + 2) * a));
}

}  // namespace acmwild::testing
