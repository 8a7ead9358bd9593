#include <numeric>
#include <random>

#include "jdiv/error.hpp"
#include "jdiv/random.hpp"
#include "support.hpp"

using namespace jdiv;

namespace {
constexpr double kLn2 = std::numbers::ln2;
// -(1/4) ln(1/4) - (3/4) ln(3/4), 20 digits.
constexpr double kH14 = 0.56233514461880835029;
}  // namespace

TEST_SUITE("classical") {
  TEST_CASE("alpha must be finite and positive") {
    CHECK_THROWS_AS(Alpha(0.0), DomainError);
    CHECK_THROWS_AS(Alpha(-1.0), DomainError);
    CHECK_THROWS_AS(Alpha{INFINITY}, DomainError);
    CHECK_THROWS_AS(Alpha{NAN}, DomainError);
    CHECK(Alpha(1.0).is_shannon());
    CHECK_FALSE(Alpha(std::nextafter(1.0, 2.0)).is_shannon());
  }

  TEST_CASE("distribution validation") {
    CHECK_THROWS_AS(Distribution({}), ValidationError);
    CHECK_THROWS_AS(Distribution({0.5, 0.4}), ValidationError);
    CHECK_THROWS_AS(Distribution({1.1, -0.1}), ValidationError);
    CHECK_THROWS_AS(Distribution({NAN, 1.0}), ValidationError);
    CHECK_THROWS_AS(Distribution({0.5, 0.5}, {"a"}), ValidationError);

    const Distribution clipped({1.0, -1e-13});
    CHECK(clipped[1] == 0.0);
    const Distribution renorm({0.5, 0.5 + 5e-10});
    CHECK_NEAR(renorm[0] + renorm[1], 1.0, 1e-16);
    CHECK(renorm[0] < 0.5);

    const Distribution labelled({0.25, 0.75}, {"x", "y"});
    CHECK(labelled.labels() == std::vector<std::string>{"x", "y"});
  }

  TEST_CASE("shannon entropy examples") {
    CHECK(shannon_entropy(Distribution({1.0, 0.0})) == 0.0);
    CHECK_NEAR(shannon_entropy(Distribution({0.5, 0.5})), kLn2, 1e-15);
    CHECK_NEAR(shannon_entropy(Distribution({0.25, 0.75})), kH14, 1e-15);
  }

  TEST_CASE("alpha entropy examples") {
    CHECK_NEAR(alpha_entropy(Distribution({0.5, 0.5}), Alpha(2.0)), 0.5, 1e-15);
    for (double a : {0.3, 1.0, 2.0, 5.0}) {
      CHECK(alpha_entropy(Distribution({1.0, 0.0}), Alpha(a)) == 0.0);
    }
    const Distribution p({0.25, 0.75});
    CHECK(std::abs(alpha_entropy(p, Alpha(1.000001)) - alpha_entropy(p, Alpha(1.0))) <= 1e-5);
    CHECK(alpha_entropy(p, Alpha(1.0)) == shannon_entropy(p));
  }

  TEST_CASE("alpha entropy is continuous at one") {
    Sampler s(11);
    for (int i = 0; i < 50; ++i) {
      const auto p = s.distribution(5);
      const double h = shannon_entropy(p);
      for (double d : {1e-4, 1e-6}) {
        // |S_{1+d} - H| = O(d); the constant is bounded by the second moment of ln p.
        CHECK(std::abs(alpha_entropy(p, Alpha(1.0 + d)) - h) <= 10.0 * d);
        CHECK(std::abs(alpha_entropy(p, Alpha(1.0 - d)) - h) <= 10.0 * d);
      }
    }
  }

  TEST_CASE("entropies match independent evaluation") {
    Sampler s(12);
    for (int i = 0; i < 100; ++i) {
      const auto p = s.distribution(static_cast<std::size_t>(s.integer(1, 8)));
      const auto v = oracle::to_vector(p);
      CHECK_NEAR(shannon_entropy(p), oracle::shannon(v), 1e-14);
      for (double a : {0.25, 0.5, 1.5, 2.0, 3.7}) {
        CHECK_NEAR(alpha_entropy(p, Alpha(a)), oracle::tsallis(v, a), 1e-13);
      }
    }
  }

  TEST_CASE("binary alpha entropy") {
    CHECK_NEAR(binary_alpha_entropy(0.5, Alpha(1.0)), kLn2, 1e-15);
    CHECK(binary_alpha_entropy(0.0, Alpha(2.0)) == 0.0);
    CHECK(binary_alpha_entropy(1.0, Alpha(1.0)) == 0.0);
    CHECK_NEAR(binary_alpha_entropy(0.75, Alpha(2.0)), 0.375, 1e-15);
    CHECK_THROWS_AS(binary_alpha_entropy(1.5, Alpha(2.0)), DomainError);
    CHECK_THROWS_AS(binary_alpha_entropy(-0.1, Alpha(2.0)), DomainError);
  }

  TEST_CASE("entropies are permutation invariant") {
    Sampler s(13);
    std::vector<std::size_t> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < 50; ++i) {
      const auto p = s.distribution(6);
      std::shuffle(perm.begin(), perm.end(), s.engine());
      const auto pp = permute(p, perm);
      CHECK_NEAR(shannon_entropy(pp), shannon_entropy(p), 1e-14);
      CHECK_NEAR(alpha_entropy(pp, Alpha(1.7)), alpha_entropy(p, Alpha(1.7)), 1e-14);
    }
  }

  TEST_CASE("kl divergence examples") {
    const Distribution p({0.3, 0.7});
    CHECK(kl_divergence(p, p) == 0.0);
    CHECK_NEAR(kl_divergence(Distribution({1.0, 0.0}), Distribution({0.5, 0.5})), kLn2, 1e-15);
    CHECK(std::isinf(kl_divergence(Distribution({1.0, 0.0}), Distribution({0.0, 1.0}))));
    CHECK_THROWS_AS(kl_divergence(p, Distribution({0.2, 0.3, 0.5})), DimensionError);
  }

  TEST_CASE("kl divergence is nonnegative, zero only at equality") {
    Sampler s(14);
    for (int i = 0; i < 500; ++i) {
      const auto p = s.distribution(4);
      const auto q = s.distribution(4);
      const double d = kl_divergence(p, q);
      CHECK(d >= 0.0);
      CHECK_NEAR(d, oracle::kl(oracle::to_vector(p), oracle::to_vector(q)), 1e-13);
      double gap = 0.0;
      for (std::size_t k = 0; k < 4; ++k) gap = std::max(gap, std::abs(p[k] - q[k]));
      CHECK((d == 0.0) == (gap <= 1e-12));
    }
  }

  TEST_CASE("total variation examples") {
    const Distribution p({0.2, 0.8});
    CHECK(total_variation(p, p) == 0.0);
    CHECK(total_variation(Distribution({1.0, 0.0}), Distribution({0.0, 1.0})) == 2.0);
    CHECK_NEAR(total_variation(Distribution({0.6, 0.4}), Distribution({0.4, 0.6})), 0.4, 1e-15);
  }

  TEST_CASE("total variation is a metric") {
    Sampler s(15);
    for (int i = 0; i < 500; ++i) {
      const auto p = s.distribution(5), q = s.distribution(5), r = s.distribution(5);
      CHECK(total_variation(p, q) == total_variation(q, p));
      CHECK(total_variation(p, p) == 0.0);
      CHECK(total_variation(p, r) <= total_variation(p, q) + total_variation(q, r) + 1e-15);
      CHECK(total_variation(p, q) <= 2.0);
    }
  }

  TEST_CASE("alpha norm power") {
    const Distribution p({0.2, 0.8}), q({0.5, 0.5});
    CHECK(alpha_norm_power(p, p, Alpha(1.5)) == 0.0);
    CHECK_NEAR(alpha_norm_power(Distribution({1.0, 0.0}), Distribution({0.0, 1.0}), Alpha(2.0)), 2.0, 1e-15);
    CHECK_NEAR(alpha_norm_power(p, q, Alpha(1.5)), 2.0 * std::pow(0.3, 1.5), 1e-15);
  }

  TEST_CASE("mixture and permute") {
    const std::vector<Distribution> members{Distribution({1.0, 0.0}), Distribution({0.0, 1.0})};
    const auto m = mixture(members, Distribution({0.25, 0.75}));
    CHECK_NEAR(m[0], 0.25, 1e-16);
    CHECK_NEAR(m[1], 0.75, 1e-16);
    CHECK_THROWS_AS(mixture(members, Distribution({1.0})), ValidationError);
    const std::vector<std::size_t> perm{1, 0};
    CHECK(permute(Distribution({0.1, 0.9}), perm) == Distribution({0.9, 0.1}));
    const std::vector<std::size_t> bad{0, 0};
    CHECK_THROWS_AS(permute(Distribution({0.1, 0.9}), bad), ValidationError);
  }
}
