#include "jdiv/quantum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "jdiv/error.hpp"

namespace jdiv {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-9;
constexpr double kNegativeEigTol = 1e-8;
constexpr double kPurityTol = 1e-9;
// Eigenvalues at or below this are treated as outside the support.
constexpr double kSupportTol = 1e-10;

Eigen::SelfAdjointEigenSolver<ComplexMatrix> solve(const ComplexMatrix& h, bool vectors) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      h, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("Hermitian eigensolver did not converge");
  return solver;
}

}  // namespace

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (psi.size() == 0 || !(norm > 0.0) || !std::isfinite(norm)) {
    throw ValidationError("pure state needs a nonzero finite vector");
  }
  const ComplexVector unit = psi / norm;
  return DensityMatrix(unit * unit.adjoint());
}

DensityMatrix DensityMatrix::diagonal(const Distribution& p) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(p.size()),
                                        static_cast<Eigen::Index>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = p[i];
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  if (dim < 1) throw ValidationError("dimension must be >= 1");
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::conjugated(const ComplexMatrix& unitary) const {
  if (unitary.rows() != dim() || unitary.cols() != dim()) {
    throw DimensionError("unitary does not match the state dimension");
  }
  ComplexMatrix out = unitary * m_ * unitary.adjoint();
  out = (0.5 * (out + out.adjoint())).eval();
  return DensityMatrix(std::move(out));
}

DensityMatrix validate_density(const ComplexMatrix& raw) {
  if (raw.rows() != raw.cols()) {
    throw ValidationError("density matrix must be square, got " + std::to_string(raw.rows()) +
                          "x" + std::to_string(raw.cols()));
  }
  if (raw.rows() == 0) throw ValidationError("density matrix must have dimension >= 1");
  if (!raw.allFinite()) throw ValidationError("density matrix has non-finite entries");

  const double asymmetry = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
  if (asymmetry > kHermitianTol) {
    throw ValidationError("matrix is not Hermitian (max |A - A^dagger| = " +
                          std::to_string(asymmetry) + ")");
  }
  ComplexMatrix m = 0.5 * (raw + raw.adjoint());

  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol) {
    throw ValidationError("density matrix trace is " + std::to_string(trace) + ", not 1");
  }
  const double min_eig = solve(m, false).eigenvalues().minCoeff();
  if (min_eig < -kNegativeEigTol) {
    throw ValidationError("density matrix is not positive semidefinite (eigenvalue " +
                          std::to_string(min_eig) + ")");
  }
  return DensityMatrix(std::move(m));
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& h) {
  return solve(h, false).eigenvalues().reverse();
}

Spectrum spectrum(const DensityMatrix& rho, bool with_eigenvectors) {
  auto solver = solve(rho.matrix(), with_eigenvectors);
  Spectrum out;
  out.eigenvalues = solver.eigenvalues().reverse();
  if (with_eigenvectors) out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

std::vector<double> clipped_spectrum(const DensityMatrix& rho) {
  const Eigen::VectorXd ev = hermitian_eigenvalues(rho.matrix());
  std::vector<double> out(static_cast<std::size_t>(ev.size()));
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    out[static_cast<std::size_t>(i)] = std::max(ev(i), 0.0);
  }
  return out;
}

double von_neumann_entropy(const DensityMatrix& rho) { return alpha_entropy(rho, Alpha(1.0)); }

double alpha_entropy(const DensityMatrix& rho, Alpha alpha) {
  const std::vector<double> masses = clipped_spectrum(rho);
  return alpha_entropy(std::span<const double>(masses), alpha);
}

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("density matrices have different dimensions: " +
                         std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  const auto rs = solve(rho.matrix(), true);
  const auto ss = solve(sigma.matrix(), true);
  const Eigen::VectorXd& lam = rs.eigenvalues();
  const Eigen::VectorXd& mu = ss.eigenvalues();
  // overlap(i, j) = |<u_i|v_j>|^2
  const Eigen::MatrixXd overlap = (rs.eigenvectors().adjoint() * ss.eigenvectors()).cwiseAbs2();

  double value = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    const double li = std::max(lam(i), 0.0);
    if (li <= 0.0) continue;
    double cross = 0.0;
    double null_mass = 0.0;
    for (Eigen::Index j = 0; j < mu.size(); ++j) {
      if (mu(j) <= kSupportTol) {
        null_mass += overlap(i, j);
      } else {
        cross += overlap(i, j) * std::log(mu(j));
      }
    }
    if (li > kSupportTol && null_mass > kSupportTol) {
      return std::numeric_limits<double>::infinity();
    }
    value += li * (std::log(li) - cross);
  }
  return value > 0.0 ? value : 0.0;
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  return hermitian_eigenvalues(rho.matrix() - sigma.matrix()).cwiseAbs().sum();
}

double hs_distance_sq(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  return (rho.matrix() - sigma.matrix()).squaredNorm();
}

double purity(const DensityMatrix& rho) { return rho.matrix().squaredNorm(); }

bool is_pure(const DensityMatrix& rho) {
  return hermitian_eigenvalues(rho.matrix())(0) >= 1.0 - kPurityTol;
}

EigenvaluePair qubit_mixture_eigenvalues(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionError("qubit formula needs a 2x2 state");
  const double root = std::sqrt(std::max(2.0 * purity(rho) - 1.0, 0.0));
  return {0.5 + 0.5 * root, 0.5 - 0.5 * root};
}

EigenvaluePair pure_overlap_eigenvalues(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  require_same_dim(rho1, rho2);
  if (!is_pure(rho1) || !is_pure(rho2)) {
    throw ValidationError("pure_overlap_eigenvalues needs two pure states");
  }
  const double fidelity =
      std::clamp((rho1.matrix() * rho2.matrix()).trace().real(), 0.0, 1.0);
  const double root = std::sqrt(fidelity);
  return {0.5 + 0.5 * root, 0.5 - 0.5 * root};
}

double trace_exp_qubit(const DensityMatrix& rho, double t) {
  if (rho.dim() != 2) throw DimensionError("qubit formula needs a 2x2 state");
  if (!(t >= 0.0)) throw DomainError("t must be nonnegative");
  const double root = std::sqrt(std::max(2.0 * purity(rho) - 1.0, 0.0));
  return 2.0 * std::exp(-0.5 * t) * std::cosh(0.5 * t * root);
}

double trace_exp(const DensityMatrix& rho, double t) {
  double total = 0.0;
  for (double lam : clipped_spectrum(rho)) total += std::exp(-t * lam);
  return total;
}

DensityMatrix mixture(std::span<const DensityMatrix> members, const Distribution& weights) {
  if (members.empty()) throw ValidationError("mixture of an empty family");
  if (members.size() != weights.size()) {
    throw DimensionError("mixture has " + std::to_string(members.size()) + " members but " +
                         std::to_string(weights.size()) + " weights");
  }
  const Eigen::Index d = members.front().dim();
  ComplexMatrix mixed = ComplexMatrix::Zero(d, d);
  for (std::size_t k = 0; k < members.size(); ++k) {
    require_same_dim(members[k], members.front());
    mixed += weights[k] * members[k].matrix();
  }
  return DensityMatrix(std::move(mixed));
}

}  // namespace jdiv
