// Copyright 2026 The gf2learn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gf2learn/bounds.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <string>

namespace gf2learn::bounds {
namespace {

long double H2(long double x) {
  if (x <= 0 || x >= 1) return 0;
  return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

// Independent minimization: a fine uniform grid in eta followed by a local
// uniform grid around the best point.
long double ReferenceGamma(long double beta) {
  auto objective = [beta](long double eta) {
    const long double k = 1 + 1 / eta;
    return (eta + 1) / (beta + 1) + k * H2(1 / (k * (beta + 1)));
  };
  long double best = std::numeric_limits<long double>::infinity();
  long double best_eta = 1;
  for (int i = 1; i <= 100000; ++i) {
    const long double eta = i / 100000.0L;
    const long double v = objective(eta);
    if (v < best) {
      best = v;
      best_eta = eta;
    }
  }
  for (int i = -1000; i <= 1000; ++i) {
    const long double eta = best_eta + i * 1e-8L;
    if (eta <= 0 || eta > 1) continue;
    best = std::min(best, objective(eta));
  }
  return best;
}

long double ReferenceGammaPrime(long double beta) {
  const long double x = 1 / (beta + 1);
  return std::max<long double>(1, x + H2(std::min<long double>(x, 0.5L)));
}

TEST(BinaryEntropyTest, KnownValues) {
  EXPECT_DOUBLE_EQ(binary_entropy(0), 0);
  EXPECT_DOUBLE_EQ(binary_entropy(1), 0);
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1);
  EXPECT_NEAR(binary_entropy(0.11), 0.4999, 1e-4);
  EXPECT_THROW(binary_entropy(1.5), std::domain_error);
}

TEST(GammaTest, MatchesReferenceTable) {
  const double expected[] = {2.617, 1.961, 1.582, 1.336, 1.157, 1.025, 0.921};
  for (int beta = 1; beta <= 7; ++beta) {
    EXPECT_NEAR(gamma(beta).value, expected[beta - 1], 0.005) << beta;
  }
}

TEST(GammaTest, MatchesIndependentMinimization) {
  for (double beta : {0.5, 1.0, 2.5, 6.64, 12.0, 40.0}) {
    EXPECT_NEAR(gamma(beta).value, ReferenceGamma(beta), 1e-7) << beta;
  }
  EXPECT_TRUE(gamma(0.5).extended);
  EXPECT_FALSE(gamma(1.0).extended);
  EXPECT_THROW(gamma(0), std::domain_error);
}

TEST(GammaTest, OptimalEtaNearReferenceValue) {
  EXPECT_NEAR(optimal_eta(6.64), 0.818, 0.002);
}

TEST(GammaTest, MonotoneAndAtMostFour) {
  double previous = 5;
  for (double beta = 1; beta <= 50; beta += 0.25) {
    const double g = gamma(beta).value;
    EXPECT_LE(g, 4.0);
    EXPECT_LE(g, previous + 1e-12) << beta;
    previous = g;
  }
}

TEST(GammaTest, LargeBetaExpansion) {
  // The remainder gamma - log2(beta)/beta - 4.413/beta vanishes faster than
  // 1/beta; on [20, 200] it is of order log(beta)/beta^2.
  double previous = std::numeric_limits<double>::infinity();
  for (double beta = 20; beta <= 200; beta += 10) {
    const double rem = gamma(beta).value - std::log2(beta) / beta - 4.413 / beta;
    const double scaled = std::abs(beta * rem);
    EXPECT_LT(scaled, previous) << beta;
    previous = scaled;
    EXPECT_LE(std::abs(rem) * beta * beta / std::log2(beta), 3.0) << beta;
  }
  EXPECT_LT(previous, 0.06);
}

TEST(GammaPrimeTest, MatchesDirectEvaluation) {
  for (double beta = 0.25; beta <= 12; beta += 0.25) {
    EXPECT_NEAR(gamma_prime(beta), ReferenceGammaPrime(beta), 1e-5) << beta;
  }
}

TEST(GammaPrimeTest, AtLeastOneWithEqualityPastThreshold) {
  const double t = beta_threshold(Threshold::kGammaPrimeEqualsOne);
  for (double beta = 0.1; beta <= 30; beta += 0.05) {
    EXPECT_GE(gamma_prime(beta), 1.0);
    if (beta >= t + 1e-5) {
      EXPECT_EQ(gamma_prime(beta), 1.0) << beta;
    } else if (beta <= t - 1e-5) {
      EXPECT_GT(gamma_prime(beta), 1.0) << beta;
    }
  }
}

TEST(ThresholdTest, ReproducesReferenceValues) {
  EXPECT_NEAR(beta_threshold(Threshold::kGammaPrimeEqualsOne), 3.404, 0.01);
  EXPECT_NEAR(beta_threshold(Threshold::kGammaLessThanOne), 6.219, 0.02);
  // gamma' is 1 past its threshold, so the crossover is where gamma hits 1.
  EXPECT_NEAR(beta_threshold(Threshold::kCrossover),
              beta_threshold(Threshold::kGammaLessThanOne), 1e-5);
}

TEST(ReferenceTableTest, FlagsGammaPrimeMismatches) {
  const auto notes = reference_mismatches();
  ASSERT_EQ(notes.size(), 2u);
  EXPECT_NE(notes[0].find("gamma_prime(2)"), std::string::npos);
  EXPECT_NE(notes[1].find("gamma_prime(3)"), std::string::npos);
  EXPECT_EQ(reference_table().size(), 10u);
}

TEST(LowerExponentTest, Values) {
  EXPECT_NEAR(lower_exponent(2), 2 * 1.0 / 3, 1e-12);
  EXPECT_NEAR(lower_exponent(4), 4 * H2(0.25) / 5, 1e-12);
}

TEST(PredictionTest, Shapes) {
  const double s = 8;
  const double eps = 1.0 / 64;
  const double n = 1024;
  const double beta = beta_of(s, eps);
  EXPECT_DOUBLE_EQ(beta, 2);
  const double additive = s * 6 * 10;
  EXPECT_NEAR(predicted_queries(s, eps, n, Algorithm::kMain).value,
              std::pow(s / eps, gamma(beta).value) + additive, 1e-6);
  EXPECT_NEAR(predicted_queries(s, eps, n, Algorithm::kSmallBeta).value,
              std::pow(s / eps, gamma_prime(beta)) + additive, 1e-6);
  EXPECT_NEAR(predicted_queries(s, eps, n, Algorithm::kTester).value,
              std::pow(s / eps, std::min(gamma(beta).value, gamma_prime(beta))) +
                  s / eps,
              1e-6);
  const Prediction degenerate = predicted_queries(1, eps, n, Algorithm::kMain);
  EXPECT_TRUE(degenerate.degenerate_beta);
  EXPECT_TRUE(std::isnan(beta_of(1, eps)));
}

TEST(ProfileTest, CollectsEverything) {
  const BoundsProfile p = profile(8, 1e-6, 65536);
  EXPECT_NEAR(p.beta, std::log2(1e6) / 3, 1e-12);
  EXPECT_DOUBLE_EQ(p.gamma, gamma(p.beta).value);
  EXPECT_NEAR(p.threshold_gamma_prime_eq_1, 3.4035, 1e-3);
  EXPECT_GE(p.notes.size(), 2u);
}

}  // namespace
}  // namespace gf2learn::bounds
