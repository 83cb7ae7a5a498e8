#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ietlab/numeric.hpp"

namespace ietlab {

/// Labeled two-row combinatorial datum of an IET.
///
/// The top row lists interval labels in the order they occur in the domain,
/// the bottom row in the order their images occur in the range. Labels are
/// 1..n. With the top row equal to the identity this is the usual two-line
/// notation; images() then returns tau(1..n).
class Permutation {
 public:
  Permutation() = default;

  static Permutation from_rows(std::vector<int> top, std::vector<int> bottom);
  // Top row identity; interval i is sent to range position images[i-1].
  static Permutation from_images(const std::vector<int>& images);
  // Top row identity, bottom row given as labels.
  static Permutation from_bottom(std::vector<int> bottom);

  std::size_t size() const { return top_.size(); }
  const std::vector<int>& top() const { return top_; }
  const std::vector<int>& bottom() const { return bottom_; }

  int top_last() const { return top_.back(); }
  int bottom_last() const { return bottom_.back(); }
  // 1-based positions of a label in each row.
  int top_position(int label) const { return top_pos_[static_cast<std::size_t>(label - 1)]; }
  int bottom_position(int label) const {
    return bottom_pos_[static_cast<std::size_t>(label - 1)];
  }

  // tau(i) = range position of the interval at domain position i.
  std::vector<int> images() const;

  bool irreducible() const;

  std::string to_string() const;

  bool operator==(const Permutation& other) const {
    return top_ == other.top_ && bottom_ == other.bottom_;
  }

 private:
  Permutation(std::vector<int> top, std::vector<int> bottom);

  std::vector<int> top_;
  std::vector<int> bottom_;
  std::vector<int> top_pos_;
  std::vector<int> bottom_pos_;
};

/// Strictly positive exact interval lengths, indexed by label.
class LengthVector {
 public:
  LengthVector() = default;
  explicit LengthVector(RationalVector entries);
  static LengthVector from_integers(const IntVector& entries);

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](int label) const {
    return entries_[static_cast<std::size_t>(label - 1)];
  }
  const RationalVector& entries() const { return entries_; }
  Rational total() const;
  LengthVector normalized() const;

 private:
  RationalVector entries_;
};

/// An interval exchange on [0, total), half-open subintervals, exact.
class Iet {
 public:
  Iet(Permutation perm, LengthVector lengths);

  const Permutation& permutation() const { return perm_; }
  const LengthVector& lengths() const { return lengths_; }
  std::size_t size() const { return perm_.size(); }
  const Rational& total() const { return breakpoints_.back(); }

  // beta_0..beta_n in domain order.
  const RationalVector& breakpoints() const { return breakpoints_; }
  // beta^tau_0..beta^tau_n in range order.
  const RationalVector& range_breakpoints() const { return range_breakpoints_; }
  // alpha^tau: lengths listed in range order.
  RationalVector range_lengths() const;

  // Domain position i (1-based) with beta_{i-1} <= x < beta_i.
  int locate(const Rational& x) const;
  int label_at(const Rational& x) const { return perm_.top()[static_cast<std::size_t>(locate(x) - 1)]; }

  Rational evaluate(const Rational& x) const;
  // Translation amount applied on the subinterval at domain position i.
  Rational shift(int position) const;

 private:
  void check_domain(const Rational& x) const;

  Permutation perm_;
  LengthVector lengths_;
  RationalVector breakpoints_;
  RationalVector range_breakpoints_;
  RationalVector shifts_;
};

Iet build_iet(const Permutation& perm, const LengthVector& lengths);

// Visits per interval label over T^0(x)..T^{steps-1}(x).
IntVector orbit_counts(const Iet& iet, const Rational& x, std::size_t steps);

// True iff no T^t(beta_i), 1 <= t <= steps, 1 <= i <= n-1, equals an
// interior breakpoint beta_j (j >= 1).
bool keane_prefix_check(const Iet& iet, std::size_t steps);

}  // namespace ietlab
