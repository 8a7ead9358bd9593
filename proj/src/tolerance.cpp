#include "jdiv/tolerance.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>

#include "jdiv/error.hpp"

namespace jdiv {
namespace {

double scale_from_env() {
  const char* raw = std::getenv("JG_TOLERANCE_SCALE");
  if (raw == nullptr || *raw == '\0') return 1.0;
  try {
    std::size_t used = 0;
    const double value = std::stod(raw, &used);
    if (used != std::string(raw).size() || !std::isfinite(value) || value <= 0.0) {
      throw DomainError("JG_TOLERANCE_SCALE must be a positive number");
    }
    return value;
  } catch (const std::logic_error&) {
    throw DomainError("JG_TOLERANCE_SCALE must be a positive number");
  }
}

std::atomic<double>& scale_slot() {
  static std::atomic<double> slot{scale_from_env()};
  return slot;
}

}  // namespace

double tolerance_scale() { return scale_slot().load(std::memory_order_relaxed); }

void set_tolerance_scale(double scale) {
  if (!std::isfinite(scale) || scale <= 0.0) {
    throw DomainError("tolerance scale must be positive");
  }
  scale_slot().store(scale, std::memory_order_relaxed);
}

}  // namespace jdiv
