#include "jdiv/jensen.hpp"

#include <cmath>
#include <string>

#include "jdiv/error.hpp"
#include "jdiv/tolerance.hpp"

namespace jdiv {

namespace {

constexpr double kClassicalAgreement = 1e-10;
constexpr double kQuantumAgreement = 1e-9;

void check_members(const std::vector<Distribution>& members) {
  for (const auto& m : members) require_same_length(m, members.front());
}

void check_members(const std::vector<DensityMatrix>& members) {
  for (const auto& m : members) require_same_dim(m, members.front());
}

double divergence(const Distribution& p, const Distribution& q) { return kl_divergence(p, q); }

double divergence(const DensityMatrix& p, const DensityMatrix& q) {
  return relative_entropy(p, q);
}

template <class Member>
double entropy_difference(const WeightedFamily<Member>& family, Alpha alpha) {
  const double mixed = alpha_entropy(family.barycenter(), alpha);
  double averaged = 0.0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    averaged += family.weights()[i] * alpha_entropy(family.members()[i], alpha);
  }
  return mixed - averaged;
}

template <class Member>
double kl_average(const WeightedFamily<Member>& family, const Member& reference) {
  double total = 0.0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const double w = family.weights()[i];
    if (w == 0.0) continue;
    total += w * divergence(family.members()[i], reference);
  }
  return total;
}

template <class Member>
DivergenceResult dual_formula(const WeightedFamily<Member>& family, double agreement) {
  const double by_entropy = entropy_difference(family, Alpha(1.0));
  const double by_kl = kl_average(family, family.barycenter());
  const double tol = agreement * tolerance_scale();
  if (!(std::abs(by_entropy - by_kl) <= tol)) {
    throw ConsistencyError("entropy-difference and KL-average forms disagree: " +
                           std::to_string(by_entropy) + " vs " + std::to_string(by_kl));
  }
  return {by_entropy, 1.0, Via::entropy_difference};
}

template <class Member>
double residual(const WeightedFamily<Member>& family, const Member& reference) {
  const Member bar = family.barycenter();
  const double r = kl_average(family, reference);
  const double around_bar = kl_average(family, bar);
  const double bar_to_ref = divergence(bar, reference);
  if (!std::isfinite(r) || !std::isfinite(around_bar) || !std::isfinite(bar_to_ref)) {
    throw InfiniteTermError("identity needs finite divergences; the reference does not cover "
                            "the support of the family");
  }
  return std::abs(r - around_bar - bar_to_ref);
}

}  // namespace

template <class Member>
WeightedFamily<Member>::WeightedFamily(std::vector<Member> members, Distribution weights)
    : members_(std::move(members)), weights_(std::move(weights)) {
  if (members_.empty()) throw ValidationError("family needs at least one member");
  if (members_.size() != weights_.size()) {
    throw DimensionError("family has " + std::to_string(members_.size()) + " members but " +
                         std::to_string(weights_.size()) + " weights");
  }
  check_members(members_);
}

template class WeightedFamily<Distribution>;
template class WeightedFamily<DensityMatrix>;

std::string_view to_string(Via via) {
  switch (via) {
    case Via::entropy_difference:
      return "entropy_difference";
    case Via::kl_average:
      return "kl_average";
  }
  return "unknown";
}

DivergenceResult jd_general(const ClassicalFamily& family) {
  return dual_formula(family, kClassicalAgreement);
}

DivergenceResult jd_alpha_general(const ClassicalFamily& family, Alpha alpha) {
  if (alpha.is_shannon()) return jd_general(family);
  return {entropy_difference(family, alpha), alpha.value(), Via::entropy_difference};
}

DivergenceResult jd_alpha(const Distribution& p, const Distribution& q, Alpha alpha) {
  require_same_length(p, q);
  return jd_alpha_general(ClassicalFamily({p, q}, Distribution({0.5, 0.5})), alpha);
}

DivergenceResult qjd_general(const QuantumFamily& family) {
  return dual_formula(family, kQuantumAgreement);
}

DivergenceResult qjd_alpha_general(const QuantumFamily& family, Alpha alpha) {
  if (alpha.is_shannon()) return qjd_general(family);
  return {entropy_difference(family, alpha), alpha.value(), Via::entropy_difference};
}

DivergenceResult qjd_alpha(const DensityMatrix& rho, const DensityMatrix& sigma, Alpha alpha) {
  require_same_dim(rho, sigma);
  return qjd_alpha_general(QuantumFamily({rho, sigma}, Distribution({0.5, 0.5})), alpha);
}

double redundancy(const ClassicalFamily& family, const Distribution& q) {
  require_same_length(family.members().front(), q);
  return kl_average(family, q);
}

double compensation_residual(const ClassicalFamily& family, const Distribution& q) {
  require_same_length(family.members().front(), q);
  return residual(family, q);
}

double q_redundancy(const QuantumFamily& family, const DensityMatrix& sigma) {
  require_same_dim(family.members().front(), sigma);
  return kl_average(family, sigma);
}

double donald_residual(const QuantumFamily& family, const DensityMatrix& sigma) {
  require_same_dim(family.members().front(), sigma);
  return residual(family, sigma);
}

double holevo_bound(const QuantumFamily& family) { return qjd_general(family).value; }

}  // namespace jdiv
