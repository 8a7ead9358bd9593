#include "jdiv/geometry.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <cmath>
#include <numbers>
#include <string>

#include "jdiv/error.hpp"
#include "jdiv/jensen.hpp"
#include "jdiv/tolerance.hpp"

namespace jdiv {

namespace {

constexpr double kMatrixTol = 1e-12;
constexpr double kCertifyRelTol = 1e-9;
constexpr double kEmbedRankRelTol = 1e-10;

// Orthonormal basis of the sum-zero subspace of R^n (Helmert contrasts), n x (n-1).
Eigen::MatrixXd sum_zero_basis(Eigen::Index n) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double norm = std::sqrt(kk * (kk + 1.0));
    for (Eigen::Index i = 0; i < k; ++i) b(i, k - 1) = 1.0 / norm;
    b(k, k - 1) = -kk / norm;
  }
  return b;
}

DefinitenessReport certify(const Eigen::MatrixXd& form, const Eigen::MatrixXd* basis,
                           double tolerance) {
  const Eigen::MatrixXd reduced = basis ? Eigen::MatrixXd(basis->transpose() * form * *basis)
                                        : form;
  if (reduced.rows() == 0) return {true, 0.0, tolerance, std::nullopt};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(reduced);
  if (solver.info() != Eigen::Success) throw Error("symmetric eigensolver did not converge");
  const double min_eig = solver.eigenvalues()(0);
  DefinitenessReport report{min_eig >= -tolerance, min_eig, tolerance, std::nullopt};
  if (!report.certified) {
    Eigen::VectorXd c = solver.eigenvectors().col(0);
    if (basis) c = *basis * c;
    report.witness = c / c.norm();
  }
  return report;
}

long double binary_entropy_ld(long double x, long double a) {
  auto xlogx = [](long double v) { return v > 0.0L ? v * std::log(v) : 0.0L; };
  if (a == 1.0L) return -xlogx(x) - xlogx(1.0L - x);
  return (1.0L - std::pow(x, a) - std::pow(1.0L - x, a)) / (a - 1.0L);
}

// a (a-2)(a-3)...(a-2n+1), i.e. the falling factorial (a)_{2n} divided by (a-1).
double reduced_falling_factorial(double a, int n) {
  double f = a;
  for (int k = 2; k < 2 * n; ++k) f *= (a - k);
  return f;
}

}  // namespace

DistanceMatrix::DistanceMatrix(Eigen::MatrixXd d, std::vector<std::string> labels)
    : d_(std::move(d)), labels_(std::move(labels)) {
  if (d_.rows() != d_.cols()) throw ValidationError("distance matrix must be square");
  if (!labels_.empty() && static_cast<Eigen::Index>(labels_.size()) != d_.rows()) {
    throw ValidationError("distance matrix label count does not match its size");
  }
  if (!d_.allFinite()) throw ValidationError("distance matrix has non-finite entries");
  if (d_.size() == 0) return;
  if ((d_ - d_.transpose()).cwiseAbs().maxCoeff() > kMatrixTol) {
    throw ValidationError("distance matrix is not symmetric");
  }
  if (d_.diagonal().cwiseAbs().maxCoeff() > kMatrixTol) {
    throw ValidationError("distance matrix has a nonzero diagonal");
  }
  if (d_.minCoeff() < -kMatrixTol) throw ValidationError("distance matrix has negative entries");
  d_ = (0.5 * (d_ + d_.transpose())).eval();
  d_.diagonal().setZero();
}

DistanceMatrix DistanceMatrix::subset(std::span<const Eigen::Index> indices) const {
  const auto m = static_cast<Eigen::Index>(indices.size());
  Eigen::MatrixXd sub(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) sub(i, j) = d_(indices[i], indices[j]);
  }
  return DistanceMatrix(std::move(sub));
}

template <class Point, class Divergence>
static DistanceMatrix build_matrix(std::span<const Point> points, Divergence&& div) {
  if (points.size() < 2) throw ValidationError("divergence matrix needs at least two points");
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = div(points[i], points[j]);
      d(i, j) = v;
      d(j, i) = v;
    }
  }
  return DistanceMatrix(std::move(d));
}

DistanceMatrix divergence_matrix(std::span<const Distribution> points, Alpha alpha) {
  for (const auto& p : points) require_same_length(p, points.front());
  return build_matrix(points, [alpha](const Distribution& p, const Distribution& q) {
    return jd_alpha(p, q, alpha).value;
  });
}

DistanceMatrix divergence_matrix(std::span<const DensityMatrix> points, Alpha alpha) {
  for (const auto& p : points) require_same_dim(p, points.front());
  return build_matrix(points, [alpha](const DensityMatrix& p, const DensityMatrix& q) {
    return qjd_alpha(p, q, alpha).value;
  });
}

double default_negative_type_tolerance(const DistanceMatrix& d) {
  return kCertifyRelTol * static_cast<double>(d.size()) * d.max_abs() * tolerance_scale();
}

Eigen::MatrixXd centered_gram(const DistanceMatrix& d) {
  const Eigen::Index n = d.size();
  const Eigen::MatrixXd j =
      Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
  return -0.5 * j * d.matrix() * j;
}

NegativeTypeReport negative_type_check(const DistanceMatrix& d, std::optional<double> tolerance) {
  const double tol = tolerance.value_or(default_negative_type_tolerance(d));
  const Eigen::MatrixXd basis = sum_zero_basis(d.size());
  // On sum-zero vectors -J D J / 2 and -D / 2 define the same quadratic form.
  return certify(-0.5 * d.matrix(), &basis, tol);
}

double cayley_menger_det(const DistanceMatrix& d) {
  const Eigen::Index n = d.size();
  Eigen::MatrixXd cm = Eigen::MatrixXd::Ones(n + 1, n + 1);
  cm.topLeftCorner(n, n) = d.matrix();
  cm(n, n) = 0.0;
  return cm.partialPivLu().determinant();
}

bool menger_embeddability(const DistanceMatrix& d) {
  const Eigen::Index n = d.size();
  if (n > kMaxMengerPoints) {
    throw SizeError("Menger subset enumeration is limited to " +
                    std::to_string(kMaxMengerPoints) + " points, got " + std::to_string(n));
  }
  std::vector<Eigen::Index> members;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    members.clear();
    for (Eigen::Index i = 0; i < n; ++i) {
      if (mask & (1u << i)) members.push_back(i);
    }
    const auto m = static_cast<Eigen::Index>(members.size());
    if (m < 2) continue;
    const DistanceMatrix sub = d.subset(members);
    const double scale = sub.max_abs();
    if (scale == 0.0) continue;  // coincident points
    // Uniform rescaling multiplies det CM by scale^{-(m-1)} > 0, so the sign
    // is unchanged; compare against the Hadamard bound of the rescaled matrix.
    const double det = cayley_menger_det(DistanceMatrix(sub.matrix() / scale));
    const double hadamard = std::pow(static_cast<double>(m + 1), 0.5 * static_cast<double>(m + 1));
    const double signed_det = (m % 2 == 0) ? det : -det;
    if (signed_det < -kCertifyRelTol * hadamard * tolerance_scale()) return false;
  }
  return true;
}

double reconstruction_error(const Eigen::MatrixXd& coords, const DistanceMatrix& d) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    for (Eigen::Index j = i + 1; j < d.size(); ++j) {
      const double sq = (coords.row(i) - coords.row(j)).squaredNorm();
      worst = std::max(worst, std::abs(sq - d(i, j)));
    }
  }
  return worst;
}

Embedding embed(const DistanceMatrix& d) {
  const NegativeTypeReport report = negative_type_check(d);
  if (!report.certified) {
    const Eigen::VectorXd& c = *report.witness;
    throw NotNegativeTypeError("distance matrix is not of negative type (min eigenvalue " +
                                   std::to_string(report.min_eigenvalue) + ")",
                               std::vector<double>(c.data(), c.data() + c.size()),
                               report.min_eigenvalue);
  }
  const Eigen::Index n = d.size();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(centered_gram(d));
  if (solver.info() != Eigen::Success) throw Error("symmetric eigensolver did not converge");
  const double cutoff = kEmbedRankRelTol * static_cast<double>(n) * d.max_abs();

  std::vector<Eigen::Index> kept;
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    if (solver.eigenvalues()(k) > cutoff) kept.push_back(k);
  }
  Eigen::MatrixXd coords(n, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t c = 0; c < kept.size(); ++c) {
    const Eigen::Index k = kept[c];
    coords.col(static_cast<Eigen::Index>(c)) =
        solver.eigenvectors().col(k) * std::sqrt(solver.eigenvalues()(k));
  }
  return {coords, reconstruction_error(coords, d)};
}

double triangle_gap(const DistanceMatrix& d, Eigen::Index i, Eigen::Index j, Eigen::Index k) {
  const Eigen::Index n = d.size();
  if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n) {
    throw ValidationError("triangle_gap index out of range");
  }
  if (i == j || j == k || i == k) throw ValidationError("triangle_gap needs distinct indices");
  auto root = [&](Eigen::Index a, Eigen::Index b) { return std::sqrt(std::max(d(a, b), 0.0)); };
  return root(i, j) + root(j, k) - root(i, k);
}

std::vector<Distribution> counterexample_triple() {
  return {Distribution({0.0, 1.0}), Distribution({0.5, 0.5}), Distribution({1.0, 0.0})};
}

double counterexample_numerator(Alpha alpha) {
  const double a = alpha.value();
  return 4.0 * std::pow(0.25, a) + 4.0 * std::pow(0.75, a) - 6.0 * std::pow(0.5, a) - 1.0;
}

double counterexample_energy(Alpha alpha) {
  if (alpha.is_shannon()) {
    const auto t = counterexample_triple();
    return jd_alpha(t[0], t[2], alpha).value - 2.0 * jd_alpha(t[0], t[1], alpha).value -
           2.0 * jd_alpha(t[1], t[2], alpha).value;
  }
  return counterexample_numerator(alpha) / (alpha.value() - 1.0);
}

std::vector<Distribution> quadruple_points(double eps) {
  if (!(eps > 0.0 && eps < 1.0 / 6.0)) {
    throw DomainError("quadruple construction needs 0 < eps < 1/6, got " + std::to_string(eps));
  }
  std::vector<Distribution> out;
  for (int k : {-3, -1, 1, 3}) {
    const double x = 0.5 + k * eps;
    out.emplace_back(std::vector<double>{x, 1.0 - x});
  }
  return out;
}

double quadruple_cm_determinant(Alpha alpha, double eps) {
  quadruple_points(eps);  // validates eps
  using MatrixLd = Eigen::Matrix<long double, 5, 5>;
  const long double a = alpha.value();
  const long double e = eps;
  const long double xs[4] = {0.5L - 3 * e, 0.5L - e, 0.5L + e, 0.5L + 3 * e};
  const long double inv_scale = 1.0L / (e * e);

  MatrixLd cm = MatrixLd::Ones();
  cm(4, 4) = 0.0L;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) {
        cm(i, j) = 0.0L;
        continue;
      }
      const long double jd = binary_entropy_ld(0.5L * (xs[i] + xs[j]), a) -
                             0.5L * (binary_entropy_ld(xs[i], a) + binary_entropy_ld(xs[j], a));
      cm(i, j) = jd * inv_scale;
    }
  }
  // det CM(c D) = c^3 det CM(D) for four points.
  const long double det = cm.determinant();
  return static_cast<double>(det * e * e * e * e * e * e);
}

double cm_leading_sign(Alpha alpha) {
  const double a = alpha.value();
  return 4.0 * a * (a - 1.0) * (a - 2.0) * (a - 3.0) * (a - 3.5);
}

double s_alpha_even_derivative(int n, Alpha alpha, double x) {
  if (n < 1) throw DomainError("derivative order index n must be >= 1");
  if (!(x > 0.0 && x < 1.0)) throw DomainError("derivative point must lie in (0, 1)");
  const double a = alpha.value();
  const double p = a - 2.0 * n;
  return -reduced_falling_factorial(a, n) * (std::pow(x, p) + std::pow(1.0 - x, p));
}

double cm_leading_coefficient(Alpha alpha) {
  const double s2 = s_alpha_even_derivative(1, alpha);
  const double s4 = s_alpha_even_derivative(2, alpha);
  const double s6 = s_alpha_even_derivative(3, alpha);
  return s4 * (s4 * s4 - s2 * s6);
}

DefinitenessReport positive_definite_check(const Eigen::MatrixXd& kernel, Restriction restriction,
                                           std::optional<double> tolerance) {
  if (kernel.rows() != kernel.cols()) throw ValidationError("kernel matrix must be square");
  if (!kernel.allFinite()) throw ValidationError("kernel matrix has non-finite entries");
  const Eigen::Index n = kernel.rows();
  const double scale = n == 0 ? 0.0 : kernel.cwiseAbs().maxCoeff();
  const double tol = tolerance.value_or(kCertifyRelTol * static_cast<double>(n) * scale *
                                        tolerance_scale());
  const Eigen::MatrixXd sym = 0.5 * (kernel + kernel.transpose());
  if (restriction == Restriction::sum_zero) {
    const Eigen::MatrixXd basis = sum_zero_basis(n);
    return certify(sym, &basis, tol);
  }
  return certify(sym, nullptr, tol);
}

Eigen::MatrixXd midpoint_kernel(const std::function<double(double)>& phi,
                                std::span<const double> samples) {
  if (samples.size() < 2) throw ValidationError("kernel check needs at least two samples");
  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      k(i, j) = k(j, i) = phi(0.5 * (samples[i] + samples[j]));
    }
  }
  return k;
}

Eigen::MatrixXd midpoint_kernel(const std::function<double(const DensityMatrix&)>& phi,
                                std::span<const DensityMatrix> samples) {
  if (samples.size() < 2) throw ValidationError("kernel check needs at least two samples");
  const auto n = static_cast<Eigen::Index>(samples.size());
  const Distribution even({0.5, 0.5});
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const DensityMatrix pair[2] = {samples[i], samples[j]};
      k(i, j) = k(j, i) = phi(mixture(std::span<const DensityMatrix>(pair), even));
    }
  }
  return k;
}

DefinitenessReport exp_convexity_check(const std::function<double(double)>& phi,
                                       std::span<const double> samples, Restriction restriction,
                                       std::optional<double> tolerance) {
  return positive_definite_check(midpoint_kernel(phi, samples), restriction, tolerance);
}

DefinitenessReport exp_convexity_check(const std::function<double(const DensityMatrix&)>& phi,
                                       std::span<const DensityMatrix> samples,
                                       Restriction restriction, std::optional<double> tolerance) {
  return positive_definite_check(midpoint_kernel(phi, samples), restriction, tolerance);
}

}  // namespace jdiv
