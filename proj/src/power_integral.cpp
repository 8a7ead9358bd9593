#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <string>

#include "jdiv/error.hpp"
#include "jdiv/geometry.hpp"

namespace jdiv {

namespace {

// The exponential factor is below e^{-50} beyond x * t = 50.
constexpr double kDecayHorizon = 50.0;
constexpr double kQuadratureTol = 1e-10;

// (e^{-y} - 1) / y, regular at 0.
double first_order_kernel(double y) {
  if (y < 1e-8) return -1.0 + 0.5 * y;
  return std::expm1(-y) / y;
}

// (e^{-y} - 1 + y) / y^2, regular at 0.
double second_order_kernel(double y) {
  if (y < 1e-3) return 0.5 - y / 6.0 + y * y / 24.0 - y * y * y / 120.0;
  return (std::expm1(-y) + y) / (y * y);
}

}  // namespace

double power_integral(double x, Alpha alpha) {
  const double a = alpha.value();
  const bool below_one = a > 0.0 && a < 1.0;
  const bool between_one_two = a > 1.0 && a < 2.0;
  if (!below_one && !between_one_two) {
    throw DomainError("power_integral needs alpha in (0,1) or (1,2), got " + std::to_string(a));
  }
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("power_integral needs finite x >= 0");
  if (x == 0.0) return 0.0;

  const double horizon = kDecayHorizon / x;
  boost::math::quadrature::tanh_sinh<double> integrator;

  double head = 0.0;
  double tail = 0.0;
  if (below_one) {
    // (e^{-xt} - 1) / t^{a+1} = x t^{-a} (e^{-xt} - 1)/(xt)
    auto f = [x, a](double t) { return x * std::pow(t, -a) * first_order_kernel(x * t); };
    head = integrator.integrate(f, 0.0, horizon, kQuadratureTol);
    // The -1 term integrates in closed form beyond the horizon.
    tail = -std::pow(horizon, -a) / a;
  } else {
    // (e^{-xt} - 1 + xt) / t^{a+1} = x^2 t^{1-a} (e^{-xt} - 1 + xt)/(xt)^2
    auto f = [x, a](double t) {
      return x * x * std::pow(t, 1.0 - a) * second_order_kernel(x * t);
    };
    head = integrator.integrate(f, 0.0, horizon, kQuadratureTol);
    tail = -std::pow(horizon, -a) / a + x * std::pow(horizon, 1.0 - a) / (a - 1.0);
  }
  return (head + tail) / std::tgamma(-a);
}

}  // namespace jdiv
