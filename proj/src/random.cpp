#include "jdiv/random.hpp"

#include <Eigen/QR>
#include <cmath>

#include "jdiv/error.hpp"

namespace jdiv {

ComplexMatrix Sampler::ginibre(Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(engine_);
      const double im = normal(engine_);
      g(i, j) = {re, im};
    }
  }
  return g;
}

Distribution Sampler::distribution(std::size_t n) {
  if (n == 0) throw ValidationError("distribution size must be >= 1");
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    x = expo(engine_);
    total += x;
  }
  for (double& x : w) x /= total;
  return Distribution(std::move(w));
}

DensityMatrix Sampler::mixed_state(Eigen::Index dim) {
  if (dim < 1) throw ValidationError("dimension must be >= 1");
  const ComplexMatrix g = ginibre(dim, dim);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return validate_density(rho);
}

DensityMatrix Sampler::pure_state(Eigen::Index dim) {
  if (dim < 1) throw ValidationError("dimension must be >= 1");
  return DensityMatrix::pure(ginibre(dim, 1).col(0));
}

ComplexMatrix Sampler::unitary(Eigen::Index dim) {
  if (dim < 1) throw ValidationError("dimension must be >= 1");
  const ComplexMatrix g = ginibre(dim, dim);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const auto d = r(k, k);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(k) *= d / mag;
  }
  return q;
}

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

int Sampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

}  // namespace jdiv
