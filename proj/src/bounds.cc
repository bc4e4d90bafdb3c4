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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gf2learn::bounds {
namespace {

constexpr double kEtaMin = 1e-6;
constexpr int kGridPoints = 4000;

double gamma_objective(double beta, double eta) {
  const double k = 1.0 + 1.0 / eta;
  return (eta + 1.0) / (beta + 1.0) +
         k * binary_entropy(1.0 / (k * (beta + 1.0)));
}

template <class Fn>
double bisect(Fn&& fn, double lo, double hi, double tol) {
  double f_lo = fn(lo);
  if (f_lo * fn(hi) > 0) {
    throw std::logic_error("bisection bracket does not contain a root");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = fn(mid);
    if ((f_mid > 0) == (f_lo > 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::string fixed(double v, int digits) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << v;
  return out.str();
}

}  // namespace

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("binary entropy argument must lie in [0,1]");
  }
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

GammaResult gamma(double beta) {
  if (!(beta > 0)) throw std::domain_error("gamma requires beta > 0");
  // Dense grid, uniform in log(eta), then golden-section refinement around
  // the best grid point.
  const double log_lo = std::log(kEtaMin);
  const double step = -log_lo / kGridPoints;
  int best = kGridPoints;
  double best_value = gamma_objective(beta, 1.0);
  for (int i = 0; i < kGridPoints; ++i) {
    const double v = gamma_objective(beta, std::exp(log_lo + i * step));
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  double a = std::exp(log_lo + std::max(best - 1, 0) * step);
  double b = std::exp(log_lo + std::min(best + 1, kGridPoints) * step);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = gamma_objective(beta, c);
  double fd = gamma_objective(beta, d);
  while (b - a > 1e-10) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = gamma_objective(beta, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = gamma_objective(beta, d);
    }
  }
  GammaResult r;
  r.eta = 0.5 * (a + b);
  r.value = gamma_objective(beta, r.eta);
  if (best_value < r.value) {
    r.value = best_value;
    r.eta = std::exp(log_lo + best * step);
  }
  r.extended = beta < 1.0;
  return r;
}

double optimal_eta(double beta) { return gamma(beta).eta; }

double gamma_prime(double beta) {
  if (!(beta > 0)) throw std::domain_error("gamma' requires beta > 0");
  const double x = 1.0 / (beta + 1.0);
  return std::max(1.0, x + binary_entropy(std::min(x, 0.5)));
}

double lower_exponent(double beta) {
  if (!(beta > 0)) throw std::domain_error("lower exponent requires beta > 0");
  return beta * binary_entropy(std::min(1.0 / beta, 0.5)) / (beta + 1.0);
}

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kMain:
      return "main";
    case Algorithm::kSmallBeta:
      return "small_beta";
    case Algorithm::kLower:
      return "lower";
    case Algorithm::kTester:
      return "tester";
  }
  return "unknown";
}

double beta_of(double s, double epsilon) {
  if (s <= 1.0) return std::numeric_limits<double>::quiet_NaN();
  return std::log2(1.0 / epsilon) / std::log2(s);
}

Prediction predicted_queries(double s, double epsilon, double n,
                             Algorithm algorithm) {
  if (!(s >= 1) || !(epsilon > 0 && epsilon < 1) || !(n >= 1)) {
    throw std::invalid_argument(
        "predicted_queries needs s >= 1, 0 < epsilon < 1, n >= 1");
  }
  const double ratio = s / epsilon;
  const double additive = algorithm == Algorithm::kTester
                              ? ratio
                              : s * std::log2(1.0 / epsilon) * std::log2(n);
  Prediction p;
  if (s <= 1.0) {
    p.degenerate_beta = true;
    p.value = additive;
    return p;
  }
  const double beta = beta_of(s, epsilon);
  double exponent = 0;
  switch (algorithm) {
    case Algorithm::kMain:
      exponent = gamma(beta).value;
      break;
    case Algorithm::kSmallBeta:
      exponent = gamma_prime(beta);
      break;
    case Algorithm::kLower:
      exponent = lower_exponent(beta);
      break;
    case Algorithm::kTester:
      exponent = std::min(gamma(beta).value, gamma_prime(beta));
      break;
  }
  p.value = std::pow(ratio, exponent) + additive;
  return p;
}

const char* to_string(Threshold t) {
  switch (t) {
    case Threshold::kGammaLessThanOne:
      return "gamma_lt_1";
    case Threshold::kGammaPrimeEqualsOne:
      return "gamma_prime_eq_1";
    case Threshold::kCrossover:
      return "crossover";
  }
  return "unknown";
}

double beta_threshold(Threshold which) {
  constexpr double kTol = 1e-6;
  switch (which) {
    case Threshold::kGammaPrimeEqualsOne: {
      // x + H2(x) = 1 with x = 1/(beta+1) in (0, 1/2).
      const double x = bisect(
          [](double x) { return x + binary_entropy(x) - 1.0; }, 1e-9, 0.5,
          1e-12);
      return 1.0 / x - 1.0;
    }
    case Threshold::kGammaLessThanOne:
      return bisect([](double b) { return gamma(b).value - 1.0; }, 1.0, 50.0,
                    kTol);
    case Threshold::kCrossover:
      return bisect(
          [](double b) { return gamma(b).value - gamma_prime(b); }, 1.0, 50.0,
          kTol);
  }
  throw std::invalid_argument("unknown threshold");
}

const std::vector<TableRow>& reference_table() {
  static const std::vector<TableRow> kTable = {
      {1, 2.617, 1.5}, {2, 1.961, 1.1252}, {3, 1.582, 1.1061},
      {4, 1.336, 1},   {5, 1.157, 1},      {6, 1.025, 1},
      {7, 0.921, 1},   {8, 0.839, 1},      {9, 0.77, 1},
      {10, 0.713, 1},
  };
  return kTable;
}

std::vector<std::string> reference_mismatches() {
  std::vector<std::string> notes;
  for (const TableRow& row : reference_table()) {
    const double g = gamma(row.beta).value;
    if (std::abs(g - row.gamma) > 0.005) {
      notes.push_back("gamma(" + fixed(row.beta, 0) + "): tabulated " +
                      fixed(row.gamma, 4) + ", formula gives " + fixed(g, 6));
    }
    const double gp = gamma_prime(row.beta);
    if (std::abs(gp - row.gamma_prime) > 1e-4) {
      notes.push_back("gamma_prime(" + fixed(row.beta, 0) + "): tabulated " +
                      fixed(row.gamma_prime, 4) + ", formula gives " +
                      fixed(gp, 6));
    }
  }
  return notes;
}

BoundsProfile profile(double s, double epsilon, double n) {
  BoundsProfile p;
  p.s = s;
  p.epsilon = epsilon;
  p.n = n;
  p.q_upper_main =
      predicted_queries(s, epsilon, n, Algorithm::kMain).value;
  p.q_upper_small_beta =
      predicted_queries(s, epsilon, n, Algorithm::kSmallBeta).value;
  p.q_lower = predicted_queries(s, epsilon, n, Algorithm::kLower).value;
  p.q_tester = predicted_queries(s, epsilon, n, Algorithm::kTester).value;
  p.degenerate_beta = s <= 1.0;
  if (!p.degenerate_beta) {
    p.beta = beta_of(s, epsilon);
    const GammaResult g = gamma(p.beta);
    p.gamma = g.value;
    p.optimal_eta = g.eta;
    p.gamma_prime = gamma_prime(p.beta);
    if (g.extended) {
      p.notes.push_back("beta < 1: gamma evaluated outside its target range");
    }
  } else {
    p.beta = std::numeric_limits<double>::quiet_NaN();
    p.notes.push_back(
        "s = 1 leaves beta undefined; q values are the additive term only");
  }
  p.threshold_gamma_lt_1 = beta_threshold(Threshold::kGammaLessThanOne);
  p.threshold_gamma_prime_eq_1 =
      beta_threshold(Threshold::kGammaPrimeEqualsOne);
  p.threshold_crossover = beta_threshold(Threshold::kCrossover);
  for (std::string& note : reference_mismatches()) {
    p.notes.push_back(std::move(note));
  }
  p.notes.push_back(
      "q values are shapes up to unstated constants and polylog factors");
  return p;
}

}  // namespace gf2learn::bounds
