#pragma once

#include <cstddef>
#include <vector>

#include "ietlab/family.hpp"

namespace ietlab {

/// Theta_1 ... Theta_m e_j with every intermediate tail kept:
/// tails[k] = Theta_{k+1} ... Theta_m e_j, so tails[m] = e_j and tails[0] = v.
struct ProductColumn {
  int n = 0;
  int j = 0;
  int m = 0;
  std::vector<IntVector> tails;
  BigInt total;  // |v|

  const IntVector& v() const { return tails.front(); }
  const IntVector& tail(int k) const;
};

ProductColumn compute_product_column(const ParameterSchedule& s, int j, int m);
// One column per seed j = 1..n, computed concurrently through the kernels.
std::vector<ProductColumn> compute_all_columns(const ParameterSchedule& s, int m);

// lambda_j(I_i^(k)) = t_k[i] / |v|.
Rational measure_of_interval(const ProductColumn& pc, int k, int i);
// lambda_j(I^(k)) = |t_k| / |v|.
Rational level_total(const ProductColumn& pc, int k);
// Sum of lambda_j(I_i^(k)) over 2 <= i <= n-1, i != exclude.
Rational middle_mass(const ProductColumn& pc, int k, int exclude);

RationalVector normalized_limit(const ParameterSchedule& s, int j, int m);
Rational pairwise_l1(const ParameterSchedule& s, int j1, int j2, int m);

/// b[k][i-1] = |Theta_1 ... Theta_k e_i| for k = 0..K.
struct ReturnTimes {
  int n = 0;
  int K = 0;
  std::vector<IntVector> b;
  const BigInt& at(int k, int i) const;
};

ReturnTimes return_times(const ParameterSchedule& s, int K);

// b_{k,i} * lambda_j(I_i^(k)) with j = pc.j.
Rational orbit_mass(const ProductColumn& pc, const ReturnTimes& rt, int k, int i);

/// Visit counts of the orbit of the midpoint of I_i^(k) until its first return
/// to I^(k), on the level-m truncation. I^(k) is located by k cycles of
/// accelerated induction, each checked against the schedule's cycle word.
IntVector visit_count_column(const ParameterSchedule& s, int m, int k, int i,
                             std::size_t budget = 5'000'000);

}  // namespace ietlab
