#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace jdiv {

/// Order parameter of the entropy family. Strictly positive; the value 1
/// selects the Shannon / von Neumann branch exactly (no epsilon window).
class Alpha {
 public:
  explicit Alpha(double value);

  double value() const noexcept { return value_; }
  bool is_shannon() const noexcept { return value_ == 1.0; }

 private:
  double value_;
};

/// Finite probability vector over an optionally labelled alphabet.
///
/// Construction validates and normalises: entries in (-1e-12, 0) are clipped
/// to zero and a total within 1e-9 of one is renormalised. Anything worse
/// (negative mass, NaN, a total further from one, empty vector, label count
/// mismatch) raises ValidationError.
class Distribution {
 public:
  explicit Distribution(std::vector<double> probs, std::vector<std::string> labels = {});

  static Distribution uniform(std::size_t n);
  static Distribution point_mass(std::size_t n, std::size_t index);

  std::span<const double> probs() const noexcept { return probs_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<double> probs_;
  std::vector<std::string> labels_;
};

/// Shannon entropy in nats, with 0 ln 0 = 0.
double shannon_entropy(const Distribution& p);

/// Entropy of order alpha, (1 - sum p_i^alpha) / (alpha - 1); Shannon at alpha = 1.
double alpha_entropy(const Distribution& p, Alpha alpha);

/// Same quantity on an unvalidated nonnegative mass vector (spectra, mixtures).
/// Negative entries are treated as zero.
double alpha_entropy(std::span<const double> masses, Alpha alpha);

/// Binary entropy of order alpha, s_alpha(x) = S_alpha(x, 1 - x) for x in [0, 1].
double binary_alpha_entropy(double x, Alpha alpha);

/// Kullback-Leibler divergence D(P||Q) in nats; +inf when P is not
/// absolutely continuous with respect to Q.
double kl_divergence(const Distribution& p, const Distribution& q);

/// V(P, Q) = sum |p_i - q_i|, range [0, 2].
double total_variation(const Distribution& p, const Distribution& q);

/// sum |p_i - q_i|^alpha.
double alpha_norm_power(const Distribution& p, const Distribution& q, Alpha alpha);

/// Convex combination sum_i weights_i * members_i. Members must share a length.
Distribution mixture(std::span<const Distribution> members, const Distribution& weights);

/// Applies the same alphabet permutation to a distribution: result[i] = p[perm[i]].
Distribution permute(const Distribution& p, std::span<const std::size_t> perm);

void require_same_length(const Distribution& p, const Distribution& q);

}  // namespace jdiv
