#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>

#include "jdiv/classical.hpp"

namespace jdiv {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Hermitian, positive semidefinite, unit-trace matrix. Only obtainable
/// through validate_density() or the named constructors, so every instance
/// satisfies the invariants up to the documented tolerances.
class DensityMatrix {
 public:
  /// |psi><psi| for a nonzero vector (normalised internally).
  static DensityMatrix pure(const ComplexVector& psi);
  /// diag(p_1, ..., p_n).
  static DensityMatrix diagonal(const Distribution& p);
  static DensityMatrix maximally_mixed(Eigen::Index dim);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }

  /// U rho U^dagger for a unitary U.
  DensityMatrix conjugated(const ComplexMatrix& unitary) const;

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}

  friend DensityMatrix validate_density(const ComplexMatrix& raw);
  friend DensityMatrix mixture(std::span<const DensityMatrix> members, const Distribution& weights);

  ComplexMatrix m_;
};

/// Validates a raw complex matrix as a density matrix. Asymmetry up to 1e-10
/// is symmetrised away; trace deviations above 1e-9 and eigenvalues below
/// -1e-8 are rejected with ValidationError.
DensityMatrix validate_density(const ComplexMatrix& raw);

/// Eigen-decomposition with eigenvalues sorted in descending order.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  std::optional<ComplexMatrix> eigenvectors;  // columns match eigenvalues
};

Spectrum spectrum(const DensityMatrix& rho, bool with_eigenvectors = false);

/// Descending eigenvalues of an arbitrary Hermitian matrix.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& h);

/// Spectrum with float-noise negatives clipped to zero; the mass vector that
/// entropic functionals consume.
std::vector<double> clipped_spectrum(const DensityMatrix& rho);

double von_neumann_entropy(const DensityMatrix& rho);
double alpha_entropy(const DensityMatrix& rho, Alpha alpha);

/// Umegaki relative entropy S(rho||sigma); +inf when supp(rho) is not
/// contained in supp(sigma).
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// ||rho - sigma||_1 = sum of |eigenvalues of the difference|, range [0, 2].
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Tr (rho - sigma)^2, the squared Hilbert-Schmidt distance.
double hs_distance_sq(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Tr rho^2.
double purity(const DensityMatrix& rho);

/// True when the largest eigenvalue is at least 1 - 1e-9.
bool is_pure(const DensityMatrix& rho);

struct EigenvaluePair {
  double plus;
  double minus;
};

/// Closed-form qubit eigenvalues 1/2 +- sqrt(2 Tr rho^2 - 1) / 2.
EigenvaluePair qubit_mixture_eigenvalues(const DensityMatrix& rho);

/// The two nonzero eigenvalues of (rho1 + rho2)/2 for pure states:
/// 1/2 +- sqrt(Tr rho1 rho2) / 2.
EigenvaluePair pure_overlap_eigenvalues(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// Tr exp(-t rho) = 2 e^{-t/2} cosh((t/2) sqrt(2 Tr rho^2 - 1)) for a qubit.
double trace_exp_qubit(const DensityMatrix& rho, double t);

/// Tr exp(-t rho) through the spectrum, any dimension.
double trace_exp(const DensityMatrix& rho, double t);

DensityMatrix mixture(std::span<const DensityMatrix> members, const Distribution& weights);

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace jdiv
