#include "jdiv/classical.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "jdiv/error.hpp"

namespace jdiv {

namespace {

constexpr double kClipWindow = 1e-12;
constexpr double kRenormWindow = 1e-9;

double plogp(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

}  // namespace

Alpha::Alpha(double value) : value_(value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError("alpha must be a finite positive number, got " + std::to_string(value));
  }
}

Distribution::Distribution(std::vector<double> probs, std::vector<std::string> labels)
    : probs_(std::move(probs)), labels_(std::move(labels)) {
  if (probs_.empty()) throw ValidationError("distribution must have at least one entry");
  if (!labels_.empty() && labels_.size() != probs_.size()) {
    throw ValidationError("distribution has " + std::to_string(probs_.size()) +
                          " probabilities but " + std::to_string(labels_.size()) + " labels");
  }
  for (double& p : probs_) {
    if (!std::isfinite(p)) throw ValidationError("distribution entry is not finite");
    if (p < 0.0) {
      if (p <= -kClipWindow) {
        throw ValidationError("distribution entry is negative: " + std::to_string(p));
      }
      p = 0.0;
    }
  }
  const double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
  if (std::abs(total - 1.0) > kRenormWindow) {
    throw ValidationError("distribution sums to " + std::to_string(total) + ", not 1");
  }
  if (total != 1.0) {
    for (double& p : probs_) p /= total;
  }
}

Distribution Distribution::uniform(std::size_t n) {
  if (n == 0) throw ValidationError("uniform distribution needs n >= 1");
  return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Distribution Distribution::point_mass(std::size_t n, std::size_t index) {
  if (index >= n) throw ValidationError("point mass index out of range");
  std::vector<double> probs(n, 0.0);
  probs[index] = 1.0;
  return Distribution(std::move(probs));
}

void require_same_length(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw DimensionError("distributions have different lengths: " + std::to_string(p.size()) +
                         " vs " + std::to_string(q.size()));
  }
}

double alpha_entropy(std::span<const double> masses, Alpha alpha) {
  if (alpha.is_shannon()) {
    double h = 0.0;
    for (double m : masses) h -= plogp(m);
    return h;
  }
  const double a = alpha.value();
  double power_sum = 0.0;
  for (double m : masses) {
    if (m > 0.0) power_sum += std::pow(m, a);
  }
  return (1.0 - power_sum) / (a - 1.0);
}

double shannon_entropy(const Distribution& p) { return alpha_entropy(p.probs(), Alpha(1.0)); }

double alpha_entropy(const Distribution& p, Alpha alpha) { return alpha_entropy(p.probs(), alpha); }

double binary_alpha_entropy(double x, Alpha alpha) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("binary entropy argument must lie in [0, 1], got " + std::to_string(x));
  }
  const double masses[2] = {x, 1.0 - x};
  return alpha_entropy(std::span<const double>(masses), alpha);
}

double kl_divergence(const Distribution& p, const Distribution& q) {
  require_same_length(p, q);
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return std::numeric_limits<double>::infinity();
    d += p[i] * std::log(p[i] / q[i]);
  }
  // Rounding can leave a tiny negative value for P ~ Q.
  return d > 0.0 ? d : 0.0;
}

double total_variation(const Distribution& p, const Distribution& q) {
  require_same_length(p, q);
  double v = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) v += std::abs(p[i] - q[i]);
  return v;
}

double alpha_norm_power(const Distribution& p, const Distribution& q, Alpha alpha) {
  require_same_length(p, q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = std::abs(p[i] - q[i]);
    if (d > 0.0) s += std::pow(d, alpha.value());
  }
  return s;
}

Distribution mixture(std::span<const Distribution> members, const Distribution& weights) {
  if (members.empty()) throw ValidationError("mixture of an empty family");
  if (members.size() != weights.size()) {
    throw DimensionError("mixture has " + std::to_string(members.size()) + " members but " +
                         std::to_string(weights.size()) + " weights");
  }
  const std::size_t n = members.front().size();
  std::vector<double> mixed(n, 0.0);
  for (std::size_t k = 0; k < members.size(); ++k) {
    require_same_length(members[k], members.front());
    for (std::size_t i = 0; i < n; ++i) mixed[i] += weights[k] * members[k][i];
  }
  return Distribution(std::move(mixed));
}

Distribution permute(const Distribution& p, std::span<const std::size_t> perm) {
  if (perm.size() != p.size()) throw DimensionError("permutation length mismatch");
  std::vector<double> out(p.size());
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= p.size() || seen[perm[i]]) throw ValidationError("not a permutation");
    seen[perm[i]] = true;
    out[i] = p[perm[i]];
  }
  return Distribution(std::move(out));
}

}  // namespace jdiv
