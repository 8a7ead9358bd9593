#pragma once

#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "jdiv/classical.hpp"
#include "jdiv/quantum.hpp"

#define CHECK_NEAR(actual, expected, tol)                                      \
  do {                                                                         \
    const double check_near_a_ = (actual);                                     \
    const double check_near_e_ = (expected);                                   \
    INFO("actual = " << check_near_a_ << ", expected = " << check_near_e_);    \
    CHECK(std::abs(check_near_a_ - check_near_e_) <= (tol));                   \
  } while (false)

// Reference implementations that share no code with the library.
namespace oracle {

inline double shannon(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

inline double tsallis(const std::vector<double>& p, double a) {
  if (a == 1.0) return shannon(p);
  double s = 0.0;
  for (double x : p) {
    if (x > 0.0) s += std::pow(x, a);
  }
  return (1.0 - s) / (a - 1.0);
}

inline double kl(const std::vector<double>& p, const std::vector<double>& q) {
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return INFINITY;
    d += p[i] * std::log(p[i] / q[i]);
  }
  return d;
}

inline std::vector<double> midpoint(const std::vector<double>& p, const std::vector<double>& q) {
  std::vector<double> m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m[i] = 0.5 * (p[i] + q[i]);
  return m;
}

inline double jd(const std::vector<double>& p, const std::vector<double>& q, double a) {
  return tsallis(midpoint(p, q), a) - 0.5 * (tsallis(p, a) + tsallis(q, a));
}

inline std::vector<double> to_vector(const jdiv::Distribution& p) {
  return {p.probs().begin(), p.probs().end()};
}

// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, descending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    }
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i][i];
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Eigenvalues of a complex Hermitian matrix H = A + iB through the real
// symmetric embedding [[A, -B], [B, A]], whose spectrum doubles that of H.
inline std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& h) {
  const auto n = static_cast<std::size_t>(h.rows());
  std::vector<std::vector<double>> big(2 * n, std::vector<double>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto z = h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      big[i][j] = z.real();
      big[i + n][j + n] = z.real();
      big[i][j + n] = -z.imag();
      big[i + n][j] = z.imag();
    }
  }
  const auto doubled = jacobi_eigenvalues(big);
  std::vector<double> out;
  for (std::size_t i = 0; i < doubled.size(); i += 2) out.push_back(doubled[i]);
  return out;
}

// Roots of the characteristic polynomial of a 3x3 Hermitian matrix
// (trigonometric solution of the depressed cubic), descending.
inline std::vector<double> cubic_eigenvalues(const Eigen::Matrix3cd& h) {
  const double c2 = h.trace().real();
  const double c1 = (h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0) + h(0, 0) * h(2, 2) - h(0, 2) * h(2, 0) +
                     h(1, 1) * h(2, 2) - h(1, 2) * h(2, 1))
                        .real();
  const double c0 = h.determinant().real();
  // lambda^3 - c2 lambda^2 + c1 lambda - c0 = 0, lambda = y + c2/3.
  const double p = c1 - c2 * c2 / 3.0;
  const double q = -2.0 * c2 * c2 * c2 / 27.0 + c2 * c1 / 3.0 - c0;
  std::vector<double> roots;
  if (std::abs(p) < 1e-300) {
    roots.assign(3, c2 / 3.0 + std::cbrt(-q));
  } else {
    const double r = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * r), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) {
      roots.push_back(c2 / 3.0 + r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0));
    }
  }
  std::sort(roots.rbegin(), roots.rend());
  return roots;
}

}  // namespace oracle
