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

#ifndef GF2LEARN_BOUNDS_H_
#define GF2LEARN_BOUNDS_H_

#include <string>
#include <vector>

namespace gf2learn::bounds {

// H2(x) = -x log2 x - (1-x) log2(1-x), with H2(0) = H2(1) = 0.
double binary_entropy(double x);

struct GammaResult {
  double value = 0;
  double eta = 0;     // minimizer
  bool extended = false;  // beta < 1, outside the range the bound targets
};

// min over eta in (1e-6, 1] of
//   (eta+1)/(beta+1) + (1+1/eta) * H2(1 / ((1+1/eta)(beta+1))).
GammaResult gamma(double beta);
double optimal_eta(double beta);

// max(1, 1/(beta+1) + H2(min(1/(beta+1), 1/2))).
double gamma_prime(double beta);

// Lower-bound exponent beta * H2(min(1/beta, 1/2)) / (beta+1).
double lower_exponent(double beta);

enum class Algorithm { kMain, kSmallBeta, kLower, kTester };
const char* to_string(Algorithm a);

struct Prediction {
  double value = 0;
  // s == 1 leaves beta undefined; only the additive term is reported.
  bool degenerate_beta = false;
};

// Query-count shape with every hidden constant and polylog set to 1:
//   main        (s/eps)^gamma  + s log2(1/eps) log2 n
//   small_beta  (s/eps)^gamma' + s log2(1/eps) log2 n
//   lower       (s/eps)^lower_exponent + s log2(1/eps) log2 n
//   tester      (s/eps)^min(gamma, gamma') + s/eps
Prediction predicted_queries(double s, double epsilon, double n,
                             Algorithm algorithm);

enum class Threshold { kGammaLessThanOne, kGammaPrimeEqualsOne, kCrossover };
const char* to_string(Threshold t);

// Bisection to 1e-6 in beta.
double beta_threshold(Threshold which);

// beta = log2(1/eps) / log2(s); NaN when s == 1.
double beta_of(double s, double epsilon);

struct TableRow {
  double beta;
  double gamma;
  double gamma_prime;
};

// Reference values of gamma and gamma' at beta = 1..10.
const std::vector<TableRow>& reference_table();

// One note per reference value that disagrees with the implemented formula
// (gamma beyond 0.005, gamma' beyond 1e-4).
std::vector<std::string> reference_mismatches();

struct BoundsProfile {
  double s = 0;
  double epsilon = 0;
  double n = 0;
  double beta = 0;
  bool degenerate_beta = false;
  double gamma = 0;
  double gamma_prime = 0;
  double optimal_eta = 0;
  double q_upper_main = 0;
  double q_upper_small_beta = 0;
  double q_lower = 0;
  double q_tester = 0;
  double threshold_gamma_lt_1 = 0;
  double threshold_gamma_prime_eq_1 = 0;
  double threshold_crossover = 0;
  std::vector<std::string> notes;
};

BoundsProfile profile(double s, double epsilon, double n);

}  // namespace gf2learn::bounds

#endif  // GF2LEARN_BOUNDS_H_
