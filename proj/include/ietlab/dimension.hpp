#pragma once

#include <cstddef>
#include <vector>

#include "ietlab/measure.hpp"

namespace ietlab {

struct DimensionPoint {
  int k = 0;
  Rational lambda_i;  // lambda_i(I_i^(k))
  Rational lambda_j;  // lambda_j(I_i^(k))
  BigInt b;           // b_{k,i}
  long double lower = 0;
  long double upper = 0;
  long double gap_bound = 0;
};

/// Log-ratio series of the pair (i, j) for k = 0..K, plus the exact bracket
/// checks, each decided by rational comparison.
struct DimensionSeries {
  int n = 0;
  int i = 0;
  int j = 0;
  std::vector<DimensionPoint> points;

  std::vector<long double> lower() const;
  std::vector<long double> upper() const;
  std::vector<long double> gap_bounds() const;

  // upper_k <= 1 for every k.
  bool upper_at_most_one() const;
  // upper_k <= lower_k <= upper_k + g_k for every k.
  bool bracket_holds() const;
  // g_k strictly decreasing in k.
  bool gap_strictly_decreasing() const;
};

DimensionSeries dimension_series(const ProductColumn& pc_i, const ProductColumn& pc_j, const ReturnTimes& rt, int K);
std::vector<long double> lower_series(const ProductColumn& pc_i, const ProductColumn& pc_j, const ReturnTimes& rt,
                                      int K);
std::vector<long double> upper_series(const ProductColumn& pc_j, const ReturnTimes& rt, int i, int K);

// Minimum over the last `window` entries.
long double liminf_estimate(const std::vector<long double>& series, std::size_t window);
// ceil(K/3), at least 1.
std::size_t default_window(int K);

struct FrostmanVerdict {
  bool holds = true;
  std::size_t instances = 0;
  int k = -1;  // first violation, if any
  int t = -1;
};

// Checks lambda_a(I_t^(k)) <= C * lambda_b(I_t^(k))^alpha for all t, k <= K.
FrostmanVerdict frostman_check(const ProductColumn& pc_a, const ProductColumn& pc_b, const Rational& alpha,
                               const Rational& C, int K);
// A rational upper bound on max over t, k <= K of lambda_a / lambda_b^alpha.
Rational frostman_constant(const ProductColumn& pc_a, const ProductColumn& pc_b, const Rational& alpha, int K);

// Label t minimising log lambda_i(I_t^(k)) / log lambda_j(I_t^(k)); exact ties
// resolve to the smaller label.
int argmin_interval(const ProductColumn& pc_i, const ProductColumn& pc_j, int k);

}  // namespace ietlab
