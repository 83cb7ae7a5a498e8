#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ietlab/iet.hpp"
#include "ietlab/matrix.hpp"
#include "ietlab/rauzy.hpp"

namespace ietlab {

// Even n: top row identity, bottom row (n, 3, 2, 5, 4, ..., n-1, n-2, 1).
// Odd n: top row (1, n-1, 2, 3, ..., n-2, n),
//        bottom row (n, n-1, 3, 2, 5, 4, ..., n-2, n-3, 1).
Permutation base_permutation(int n);

// 1^{n-1-k} 0^a 1 0^2, for 2 <= k <= n-2.
RunWord loop_word(int k, const BigInt& a, int n);

// Even n: 0 . loop(n-2) . loop(n-4) ... loop(2) . 1^{c(n-1)}.
// Odd n:  0 . loop(n-2) . loop(n-4) ... loop(3) . 0 . 1^{c(n-1)}.
// Both close at base_permutation(n).
RunWord cycle_word(const BigInt& a, const BigInt& c, int n);

TransitionMatrix theta_closed_form(const BigInt& a, const BigInt& c, int n);

// Labels with a band pair (2i, 2i+1), i = 1..floor(n/2)-1.
std::vector<int> odd_interior_labels(int n);
std::vector<int> even_interior_labels(int n);
// Seeds of the distinct measures: odd interior labels followed by n.
std::vector<int> measure_labels(int n);

/// c_i = c_1 p^{2(i-1)}, a_i = p c_i, defined for every i >= 1; m is the
/// truncation the schedule was built for.
class ParameterSchedule {
 public:
  ParameterSchedule(int n, BigInt p, BigInt c1, int m);

  int n() const { return n_; }
  const BigInt& p() const { return p_; }
  const BigInt& c1() const { return c1_; }
  int m() const { return m_; }

  BigInt c(int i) const;
  BigInt a(int i) const;
  TransitionMatrix theta(int i) const;
  // Theta_1 .. Theta_count.
  std::vector<TransitionMatrix> thetas(int count) const;
  // Concatenated cycle words of levels 1..count.
  RunWord word(int count) const;
  // Truncated family IET: permutation pi, lengths Theta_1...Theta_m (1,...,1).
  Iet truncation(int m) const;

 private:
  int n_;
  BigInt p_;
  BigInt c1_;
  int m_;
};

// Validating constructor; throws std::invalid_argument naming the violated
// inequality.
ParameterSchedule schedule(int n, const BigInt& p, const BigInt& c1, int m);
// Default c_1 = p^2.
BigInt default_c1(const BigInt& p);

struct EntryMismatch {
  int row;
  int col;
  BigInt closed_form;
  BigInt path;
};

struct FamilyValidation {
  int n;
  BigInt a;
  BigInt c;
  Permutation start;
  Permutation end;
  TransitionMatrix closed_form;
  TransitionMatrix path_product;
  bool closes = false;
  std::optional<EntryMismatch> first_mismatch;
  bool ok() const { return closes && !first_mismatch; }
};

// Compares the closed form against letter-by-letter multiplication along the
// cycle word (small a, c only).
FamilyValidation validate_family(int n, const BigInt& a, const BigInt& c);

}  // namespace ietlab
