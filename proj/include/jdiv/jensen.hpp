#pragma once

#include <string_view>
#include <vector>

#include "jdiv/classical.hpp"
#include "jdiv/quantum.hpp"

namespace jdiv {

/// k members of one kind with mixing weights pi. Members share a length
/// (classical) or a dimension (quantum); the weight vector has length k.
template <class Member>
class WeightedFamily {
 public:
  WeightedFamily(std::vector<Member> members, Distribution weights);

  const std::vector<Member>& members() const noexcept { return members_; }
  const Distribution& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return members_.size(); }

  /// The barycenter sum_i pi_i * member_i.
  Member barycenter() const { return mixture(std::span<const Member>(members_), weights_); }

 private:
  std::vector<Member> members_;
  Distribution weights_;
};

using ClassicalFamily = WeightedFamily<Distribution>;
using QuantumFamily = WeightedFamily<DensityMatrix>;

extern template class WeightedFamily<Distribution>;
extern template class WeightedFamily<DensityMatrix>;

/// Which formula produced a divergence value.
enum class Via { entropy_difference, kl_average };

std::string_view to_string(Via via);

struct DivergenceResult {
  double value;
  double alpha;
  Via via;
};

/// Jensen-Shannon divergence of a weighted family. Evaluates both
/// H(sum pi P) - sum pi H(P) and sum pi D(P || Pbar); throws ConsistencyError
/// if they differ by more than 1e-10 and returns the entropy difference.
DivergenceResult jd_general(const ClassicalFamily& family);

/// S_alpha(sum pi P) - sum pi S_alpha(P).
DivergenceResult jd_alpha_general(const ClassicalFamily& family, Alpha alpha);

/// Even-weight two-member case.
DivergenceResult jd_alpha(const Distribution& p, const Distribution& q, Alpha alpha);

/// Quantum counterpart of jd_general; cross-check tolerance 1e-9.
DivergenceResult qjd_general(const QuantumFamily& family);
DivergenceResult qjd_alpha_general(const QuantumFamily& family, Alpha alpha);
DivergenceResult qjd_alpha(const DensityMatrix& rho, const DensityMatrix& sigma, Alpha alpha);

/// Mean redundancy sum pi_i D(P_i || Q) of coding the family with Q. May be +inf.
double redundancy(const ClassicalFamily& family, const Distribution& q);

/// |R(Q) - sum pi D(P_i || Pbar) - D(Pbar || Q)|. Throws InfiniteTermError if
/// any of the divergences is infinite.
double compensation_residual(const ClassicalFamily& family, const Distribution& q);

/// sum pi_i S(rho_i || sigma). May be +inf.
double q_redundancy(const QuantumFamily& family, const DensityMatrix& sigma);

/// |R(sigma) - sum pi S(rho_i || rhobar) - S(rhobar || sigma)|. Throws
/// InfiniteTermError on support violations.
double donald_residual(const QuantumFamily& family, const DensityMatrix& sigma);

/// Holevo quantity of an ensemble; identical to qjd_general(family).value.
double holevo_bound(const QuantumFamily& family);

}  // namespace jdiv
