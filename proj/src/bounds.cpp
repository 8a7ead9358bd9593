#include "jdiv/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "jdiv/error.hpp"
#include "jdiv/jensen.hpp"
#include "jdiv/tolerance.hpp"

namespace jdiv {

namespace {

void require_v(double v) {
  if (!(v >= 0.0 && v <= 2.0)) {
    throw DomainError("total variation must lie in [0, 2], got " + std::to_string(v));
  }
}

// Endpoints computed as 1 - x can land a few ulps outside [0, 1].
double clamp_unit(double x) { return std::min(std::max(x, 0.0), 1.0); }

Distribution two_point(double x) {
  x = clamp_unit(x);
  return Distribution({x, 1.0 - x});
}

}  // namespace

double lower_L(double v, Alpha alpha) {
  require_v(v);
  return binary_alpha_entropy(0.5, alpha) - binary_alpha_entropy(clamp_unit(0.5 + 0.25 * v), alpha);
}

double upper_Un_coefficient(Alpha alpha) {
  if (alpha.is_shannon()) return 0.5 * std::numbers::ln2;
  const double a = alpha.value();
  return (0.5 - std::pow(2.0, -a)) / (a - 1.0);
}

double upper_Un(const Distribution& p, const Distribution& q, Alpha alpha) {
  return upper_Un_coefficient(alpha) * alpha_norm_power(p, q, alpha);
}

double upper_U2(double v, Alpha alpha) {
  require_v(v);
  return binary_alpha_entropy(clamp_unit(0.25 * v), alpha) -
         0.5 * binary_alpha_entropy(clamp_unit(0.5 * v), alpha);
}

std::pair<Distribution, Distribution> lower_witness(double v) {
  require_v(v);
  return {two_point(0.5 + 0.25 * v), two_point(0.5 - 0.25 * v)};
}

std::pair<Distribution, Distribution> upper_U2_witness(double v) {
  require_v(v);
  return {two_point(0.5 * v), Distribution({0.0, 1.0})};
}

std::pair<Distribution, Distribution> upper_Un_witness(const Distribution& p,
                                                       const Distribution& q) {
  require_same_length(p, q);
  std::vector<double> pt(3 * p.size(), 0.0);
  std::vector<double> qt(3 * p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double shared = std::min(p[i], q[i]);
    pt[3 * i] = shared;
    qt[3 * i] = shared;
    if (p[i] > q[i]) pt[3 * i + 1] = p[i] - q[i];
    if (q[i] > p[i]) qt[3 * i + 2] = q[i] - p[i];
  }
  return {Distribution(std::move(pt)), Distribution(std::move(qt))};
}

std::string_view to_string(UpperKind kind) {
  switch (kind) {
    case UpperKind::Un:
      return "U_n";
    case UpperKind::U2:
      return "U_2";
    case UpperKind::trace_norm:
      return "trace_norm";
  }
  return "unknown";
}

bool BoundReport::holds(double tol) const {
  const double t = tol * tolerance_scale();
  return lower - t <= value && value <= upper + t;
}

BoundReport bound_report(const Distribution& p, const Distribution& q, Alpha alpha) {
  require_same_length(p, q);
  const double v = std::min(total_variation(p, q), 2.0);
  BoundReport r{};
  r.v = v;
  r.alpha = alpha.value();
  r.value = jd_alpha(p, q, alpha).value;
  r.lower = lower_L(v, alpha);
  r.tight_lower_witness = lower_witness(v);
  if (p.size() == 2) {
    r.upper = upper_U2(v, alpha);
    r.upper_kind = UpperKind::U2;
    r.tight_upper_witness = upper_U2_witness(v);
  } else {
    r.upper = upper_Un(p, q, alpha);
    r.upper_kind = UpperKind::Un;
    r.tight_upper_witness = upper_Un_witness(p, q);
  }
  return r;
}

double q_lower_bound(double trace_norm, Alpha alpha) {
  const double x = 0.5 + 0.5 * trace_norm;
  if (!(x >= 0.0 && x <= 1.0)) return std::numeric_limits<double>::quiet_NaN();
  return binary_alpha_entropy(0.5, alpha) - binary_alpha_entropy(x, alpha);
}

BoundReport q_bound_report(const DensityMatrix& rho1, const DensityMatrix& rho2, Alpha alpha) {
  require_same_dim(rho1, rho2);
  const double t = trace_distance(rho1, rho2);
  BoundReport r{};
  r.v = t;
  r.alpha = alpha.value();
  r.value = qjd_alpha(rho1, rho2, alpha).value;
  r.lower = q_lower_bound(t, alpha);
  r.upper = 0.5 * std::numbers::ln2 * t;
  r.upper_kind = UpperKind::trace_norm;
  return r;
}

bool ChainValues::monotone(double tol) const {
  const auto values = as_vector();
  const double t = tol * tolerance_scale();
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i - 1] <= values[i] + t)) return false;
  }
  return true;
}

ChainValues chain_check(const Distribution& p, const Distribution& q, Alpha alpha) {
  const double a = alpha.value();
  if (!(a >= 1.0 && a <= 2.0)) {
    throw DomainError("chain_check needs alpha in [1, 2], got " + std::to_string(a));
  }
  const double v = total_variation(p, q);
  ChainValues c{};
  c.v_squared_over_8 = v * v / 8.0;
  c.series_first_term = a * std::pow(2.0, 1.0 - a) * v * v / 8.0;
  c.jd = jd_alpha(p, q, alpha).value;
  c.un = upper_Un(p, q, alpha);
  c.linear_tv = 0.5 * std::numbers::ln2 * v;
  return c;
}

double upper_curve(double v, Alpha alpha, int n) {
  require_v(v);
  if (n < 2) throw DomainError("alphabet size must be >= 2");
  if (n == 2) return upper_U2(v, alpha);
  return upper_Un_coefficient(alpha) * 2.0 * std::pow(0.5 * v, alpha.value());
}

std::pair<Distribution, Distribution> homotopy_pair(double t, double v, int n) {
  require_v(v);
  if (n < 2) throw DomainError("alphabet size must be >= 2");
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("homotopy parameter must lie in [0, 1]");
  const auto size = static_cast<std::size_t>(n);
  std::vector<double> lower_p(size, 0.0), lower_q(size, 0.0);
  std::vector<double> upper_p(size, 0.0), upper_q(size, 0.0);
  lower_p[0] = 0.5 + 0.25 * v;
  lower_p[1] = 0.5 - 0.25 * v;
  lower_q[0] = 0.5 - 0.25 * v;
  lower_q[1] = 0.5 + 0.25 * v;
  if (n == 2) {
    upper_p[0] = 0.5 * v;
    upper_p[1] = 1.0 - 0.5 * v;
    upper_q[1] = 1.0;
  } else {
    upper_p[0] = 1.0 - 0.5 * v;
    upper_p[1] = 0.5 * v;
    upper_q[0] = 1.0 - 0.5 * v;
    upper_q[2] = 0.5 * v;
  }
  std::vector<double> p(size), q(size);
  for (std::size_t i = 0; i < size; ++i) {
    p[i] = std::max((1.0 - t) * lower_p[i] + t * upper_p[i], 0.0);
    q[i] = std::max((1.0 - t) * lower_q[i] + t * upper_q[i], 0.0);
  }
  return {Distribution(std::move(p)), Distribution(std::move(q))};
}

DiagramPoints diagram(Alpha alpha, int n, int grid) {
  if (grid < 2) throw DomainError("diagram grid must be >= 2");
  if (n < 2) throw DomainError("alphabet size must be >= 2");
  DiagramPoints out;
  const double step = 1.0 / static_cast<double>(grid - 1);
  for (int i = 0; i < grid; ++i) {
    const double v = i == grid - 1 ? 2.0 : 2.0 * i * step;
    out.curve_lower.push_back({v, lower_L(v, alpha)});
    out.curve_upper.push_back({v, upper_curve(v, alpha, n)});
  }
  for (int j = 0; j < grid; ++j) {
    const double t = j == grid - 1 ? 1.0 : j * step;
    for (int i = 0; i < grid; ++i) {
      const double v = i == grid - 1 ? 2.0 : 2.0 * i * step;
      const auto [p, q] = homotopy_pair(t, v, n);
      out.homotopy_samples.push_back({t, total_variation(p, q), jd_alpha(p, q, alpha).value});
    }
  }
  return out;
}

}  // namespace jdiv
