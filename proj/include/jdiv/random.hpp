#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jdiv/classical.hpp"
#include "jdiv/quantum.hpp"

namespace jdiv {

/// Seeded source of random test objects. Same seed, same sequence (for a
/// given standard library implementation).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on the simplex (flat Dirichlet).
  Distribution distribution(std::size_t n);
  /// Ginibre ensemble: G G^dagger / Tr(G G^dagger), G with i.i.d. standard
  /// complex Gaussian entries.
  DensityMatrix mixed_state(Eigen::Index dim);
  /// |psi><psi| with psi a normalised complex Gaussian vector.
  DensityMatrix pure_state(Eigen::Index dim);
  /// Haar-random unitary (QR of a Ginibre matrix with phase correction).
  ComplexMatrix unitary(Eigen::Index dim);

  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols);

  std::mt19937_64 engine_;
};

}  // namespace jdiv
