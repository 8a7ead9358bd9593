#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "jdiv/classical.hpp"
#include "jdiv/quantum.hpp"

namespace jdiv {

/// Lower bound L(v) = s_alpha(1/2) - s_alpha(1/2 + v/4), v in [0, 2].
double lower_L(double v, Alpha alpha);

/// (1/2 - 2^{-alpha}) / (alpha - 1), with the exact limit ln 2 / 2 at alpha = 1.
double upper_Un_coefficient(Alpha alpha);

/// U_n(P, Q) = upper_Un_coefficient(alpha) * sum |p_i - q_i|^alpha.
double upper_Un(const Distribution& p, const Distribution& q, Alpha alpha);

/// Two-letter upper bound U_2(v) = s_alpha(v/4) - s_alpha(v/2)/2.
double upper_U2(double v, Alpha alpha);

/// Pair ((1/2+v/4, 1/2-v/4), (1/2-v/4, 1/2+v/4)) attaining lower_L(v).
std::pair<Distribution, Distribution> lower_witness(double v);

/// Pair ((v/2, 1-v/2), (0, 1)) attaining upper_U2(v).
std::pair<Distribution, Distribution> upper_U2_witness(double v);

/// The 3n-letter split (P~, Q~) of (P, Q): shared mass min(p_i, q_i), the
/// excess of P on a private letter and the excess of Q on another. Has the
/// same total variation as (P, Q) and JD_alpha(P~, Q~) = U_n(P, Q).
std::pair<Distribution, Distribution> upper_Un_witness(const Distribution& p,
                                                       const Distribution& q);

enum class UpperKind { Un, U2, trace_norm };

std::string_view to_string(UpperKind kind);

struct BoundReport {
  double lower;
  double value;
  double upper;
  double v;  // total variation, or trace distance for states
  double alpha;
  UpperKind upper_kind;
  std::optional<std::pair<Distribution, Distribution>> tight_lower_witness;
  std::optional<std::pair<Distribution, Distribution>> tight_upper_witness;

  /// lower - tol <= value <= upper + tol (tol scaled globally). False when a
  /// bound is not defined (NaN).
  bool holds(double tol = 1e-10) const;
};

/// Classical sandwich: L <= JD_alpha <= U, with U = U_2 for two letters and
/// U_n otherwise.
BoundReport bound_report(const Distribution& p, const Distribution& q, Alpha alpha);

/// Quantum sandwich with T = ||rho1 - rho2||_1:
///   s_alpha(1/2) - s_alpha(1/2 + T/2) <= QJD_alpha <= (ln 2 / 2) T.
/// The lower bound is NaN when 1/2 + T/2 leaves [0, 1].
BoundReport q_bound_report(const DensityMatrix& rho1, const DensityMatrix& rho2, Alpha alpha);

/// The lower expression of q_bound_report as a function of T.
double q_lower_bound(double trace_norm, Alpha alpha);

/// Chain of bounds for alpha in [1, 2]:
///   V^2/8 <= a 2^{1-a} V^2/8 <= JD_a <= U_n <= (ln 2 / 2) V.
struct ChainValues {
  double v_squared_over_8;
  double series_first_term;
  double jd;
  double un;
  double linear_tv;

  std::vector<double> as_vector() const {
    return {v_squared_over_8, series_first_term, jd, un, linear_tv};
  }
  bool monotone(double tol = 1e-10) const;
};

ChainValues chain_check(const Distribution& p, const Distribution& q, Alpha alpha);

struct CurvePoint {
  double v;
  double jd;
};

struct HomotopySample {
  double t;
  double v;  // V(P_t, Q_t)
  double jd;
};

/// Samples of the (V, JD_alpha) joint range boundary and of the homotopy
/// (P_t, Q_t) deforming the lower curve into the upper one.
struct DiagramPoints {
  std::vector<CurvePoint> curve_lower;
  std::vector<CurvePoint> curve_upper;
  std::vector<HomotopySample> homotopy_samples;
};

/// Upper boundary curve for alphabet size n: U_2(v) for n = 2, otherwise
/// U_n on the 3-letter family, coefficient * 2 (v/2)^alpha.
double upper_curve(double v, Alpha alpha, int n);

/// grid points in v over [0, 2] and grid points in t over [0, 1].
DiagramPoints diagram(Alpha alpha, int n, int grid);

/// The homotopy pair (P_t, Q_t) at parameter v for alphabet size n.
std::pair<Distribution, Distribution> homotopy_pair(double t, double v, int n);

}  // namespace jdiv
