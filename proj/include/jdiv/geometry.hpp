#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jdiv/classical.hpp"
#include "jdiv/quantum.hpp"

namespace jdiv {

/// Symmetric matrix of squared-distance candidates (divergence values) with
/// zero diagonal. Validation: symmetric within 1e-12, diagonal zero within
/// 1e-12, entries >= -1e-12. The stored matrix is exactly symmetrised.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(Eigen::MatrixXd d, std::vector<std::string> labels = {});

  const Eigen::MatrixXd& matrix() const noexcept { return d_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Eigen::Index size() const noexcept { return d_.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return d_(i, j); }
  double max_abs() const { return d_.size() == 0 ? 0.0 : d_.cwiseAbs().maxCoeff(); }

  /// Principal submatrix on the given point indices.
  DistanceMatrix subset(std::span<const Eigen::Index> indices) const;

 private:
  Eigen::MatrixXd d_;
  std::vector<std::string> labels_;
};

/// D_ij = JD_alpha(P_i, P_j).
DistanceMatrix divergence_matrix(std::span<const Distribution> points, Alpha alpha);
/// D_ij = QJD_alpha(rho_i, rho_j).
DistanceMatrix divergence_matrix(std::span<const DensityMatrix> points, Alpha alpha);

/// Outcome of a (conditional) positive-definiteness certification.
///
/// For negative type the certified quadratic form is c^T (-D/2) c over
/// sum-zero c, i.e. the doubly centred matrix G = -J D J / 2 on the sum-zero
/// subspace. When certification fails, `witness` holds a unit vector c
/// (sum-zero for negative type) with c^T G c = min_eigenvalue < -tolerance.
struct DefinitenessReport {
  bool certified;
  double min_eigenvalue;
  double tolerance;
  std::optional<Eigen::VectorXd> witness;
};

using NegativeTypeReport = DefinitenessReport;

/// Default tolerance 1e-9 * n * max|D| (times the global tolerance scale).
double default_negative_type_tolerance(const DistanceMatrix& d);

NegativeTypeReport negative_type_check(const DistanceMatrix& d,
                                       std::optional<double> tolerance = std::nullopt);

/// Doubly centred Gram matrix -J D J / 2.
Eigen::MatrixXd centered_gram(const DistanceMatrix& d);

/// Determinant of the bordered matrix [[D, e], [e^T, 0]].
double cayley_menger_det(const DistanceMatrix& d);

/// Menger's criterion: (-1)^|Y| det CM(Y) >= 0 for every subset Y with
/// |Y| >= 2. Exponential in n; throws SizeError for n > 12.
bool menger_embeddability(const DistanceMatrix& d);

inline constexpr Eigen::Index kMaxMengerPoints = 12;

struct Embedding {
  Eigen::MatrixXd coords;  // n x m
  double reconstruction_error;
};

/// Classical-scaling embedding of sqrt(D) into R^m. Throws
/// NotNegativeTypeError (with witness) if D is not of negative type.
Embedding embed(const DistanceMatrix& d);

/// max_{i,j} | ||x_i - x_j||^2 - D_ij |.
double reconstruction_error(const Eigen::MatrixXd& coords, const DistanceMatrix& d);

/// sqrt(D_ij) + sqrt(D_jk) - sqrt(D_ik); negative means the root-distance
/// triangle inequality fails on this triple.
double triangle_gap(const DistanceMatrix& d, Eigen::Index i, Eigen::Index j, Eigen::Index k);

/// The three-point family P = (0,1), Q = (1/2,1/2), R = (1,0).
std::vector<Distribution> counterexample_triple();

/// 4(1/4)^a + 4(3/4)^a - 6(1/2)^a - 1.
double counterexample_numerator(Alpha alpha);

/// E(alpha) = JD(P,R) - 2 JD(P,Q) - 2 JD(Q,R) on the triple; for alpha != 1
/// this is counterexample_numerator / (alpha - 1). E > 0 means the triangle
/// inequality for sqrt(JD_alpha) fails on the triple.
double counterexample_energy(Alpha alpha);

/// The four two-point distributions (1/2 + k eps, 1/2 - k eps), k = -3,-1,1,3.
std::vector<Distribution> quadruple_points(double eps);

/// Raw Cayley-Menger determinant of the JD_alpha matrix on quadruple_points.
/// Evaluated in extended precision on an eps^-2 rescaled matrix.
double quadruple_cm_determinant(Alpha alpha, double eps);

/// 4 a(a-1)(a-2)(a-3)(a-7/2): the leading-order sign polynomial for the
/// quadruple; embeddability of the quadruple is predicted iff it is <= 0.
double cm_leading_sign(Alpha alpha);

/// d^{2n}/dx^{2n} s_alpha(x) = -(a)_{2n} / (a - 1) * (x^{a-2n} + (1-x)^{a-2n}),
/// with (a)_{2n}/(a-1) = a (a-2)(a-3)...(a-2n+1) so alpha = 1 is regular.
double s_alpha_even_derivative(int n, Alpha alpha, double x = 0.5);

/// Leading eps^12 coefficient of the quadruple determinant,
/// s''''((s'''')^2 - s'' s^(6)) at 1/2, from s_alpha_even_derivative.
double cm_leading_coefficient(Alpha alpha);

/// Which quadratic forms a kernel check certifies.
enum class Restriction { full, sum_zero };

/// Certifies that a symmetric kernel matrix is positive semidefinite (on the
/// full space or on sum-zero vectors). Default tolerance 1e-9 * n * max|K|.
DefinitenessReport positive_definite_check(const Eigen::MatrixXd& kernel,
                                           Restriction restriction = Restriction::full,
                                           std::optional<double> tolerance = std::nullopt);

/// K_ij = phi((x_i + x_j) / 2).
Eigen::MatrixXd midpoint_kernel(const std::function<double(double)>& phi,
                                std::span<const double> samples);
Eigen::MatrixXd midpoint_kernel(const std::function<double(const DensityMatrix&)>& phi,
                                std::span<const DensityMatrix> samples);

/// Exponential convexity test of phi on the samples: PSD check of the
/// midpoint kernel.
DefinitenessReport exp_convexity_check(const std::function<double(double)>& phi,
                                       std::span<const double> samples,
                                       Restriction restriction = Restriction::full,
                                       std::optional<double> tolerance = std::nullopt);
DefinitenessReport exp_convexity_check(const std::function<double(const DensityMatrix&)>& phi,
                                       std::span<const DensityMatrix> samples,
                                       Restriction restriction = Restriction::full,
                                       std::optional<double> tolerance = std::nullopt);

/// x^alpha through the Gamma-function integral representation, alpha in
/// (0,1) or (1,2); |result - x^alpha| <= 1e-6 for x in [0, 2].
double power_integral(double x, Alpha alpha);

}  // namespace jdiv
