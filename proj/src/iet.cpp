#include "ietlab/iet.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ietlab {

namespace {

std::vector<int> positions_of(const std::vector<int>& row, std::size_t n, const char* which) {
  std::vector<int> pos(n, 0);
  for (std::size_t i = 0; i < row.size(); ++i) {
    const int label = row[i];
    if (label < 1 || static_cast<std::size_t>(label) > n) {
      throw std::invalid_argument(std::string(which) + " row has label out of range: " +
                                  std::to_string(label));
    }
    if (pos[static_cast<std::size_t>(label - 1)] != 0) {
      throw std::invalid_argument(std::string(which) + " row is not a bijection (label " +
                                  std::to_string(label) + " repeated)");
    }
    pos[static_cast<std::size_t>(label - 1)] = static_cast<int>(i + 1);
  }
  return pos;
}

std::vector<int> identity_row(std::size_t n) {
  std::vector<int> row(n);
  for (std::size_t i = 0; i < n; ++i) row[i] = static_cast<int>(i + 1);
  return row;
}

}  // namespace

Permutation::Permutation(std::vector<int> top, std::vector<int> bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
  if (top_.size() != bottom_.size()) throw std::invalid_argument("permutation rows differ in length");
  if (top_.size() < 2) throw std::invalid_argument("permutation needs n >= 2");
  top_pos_ = positions_of(top_, top_.size(), "top");
  bottom_pos_ = positions_of(bottom_, bottom_.size(), "bottom");
}

Permutation Permutation::from_rows(std::vector<int> top, std::vector<int> bottom) {
  return Permutation(std::move(top), std::move(bottom));
}

Permutation Permutation::from_bottom(std::vector<int> bottom) {
  auto top = identity_row(bottom.size());
  return Permutation(std::move(top), std::move(bottom));
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  const std::size_t n = images.size();
  auto check = positions_of(images, n, "image");
  (void)check;
  std::vector<int> bottom(n);
  for (std::size_t i = 0; i < n; ++i) bottom[static_cast<std::size_t>(images[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(identity_row(n), std::move(bottom));
}

std::vector<int> Permutation::images() const {
  std::vector<int> tau(size());
  for (std::size_t i = 0; i < size(); ++i) tau[i] = bottom_position(top_[i]);
  return tau;
}

bool Permutation::irreducible() const {
  // The first k labels of both rows form the same set iff the largest
  // bottom position among the first k top labels equals k.
  int reach = 0;
  for (std::size_t k = 1; k < size(); ++k) {
    reach = std::max(reach, bottom_position(top_[k - 1]));
    if (reach == static_cast<int>(k)) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  auto row = [&out](const std::vector<int>& r) {
    out << '(';
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
    out << ')';
  };
  row(top_);
  out << '/';
  row(bottom_);
  return out.str();
}

LengthVector::LengthVector(RationalVector entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("empty length vector");
  for (auto& e : entries_) {
    e.canonicalize();
    if (e <= 0) throw std::invalid_argument("interval lengths must be positive, got " + to_fraction_string(e));
  }
}

LengthVector LengthVector::from_integers(const IntVector& entries) {
  RationalVector q;
  q.reserve(entries.size());
  for (const auto& e : entries) q.emplace_back(e);
  return LengthVector(std::move(q));
}

Rational LengthVector::total() const {
  Rational t = 0;
  for (const auto& e : entries_) t += e;
  return t;
}

LengthVector LengthVector::normalized() const {
  const Rational t = total();
  RationalVector q = entries_;
  for (auto& e : q) e /= t;
  return LengthVector(std::move(q));
}

Iet::Iet(Permutation perm, LengthVector lengths) : perm_(std::move(perm)), lengths_(std::move(lengths)) {
  const std::size_t n = perm_.size();
  if (lengths_.size() != n) {
    throw std::invalid_argument("dimension mismatch: permutation has " + std::to_string(n) +
                                " intervals, length vector " + std::to_string(lengths_.size()));
  }
  breakpoints_.assign(n + 1, Rational(0));
  range_breakpoints_.assign(n + 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    breakpoints_[i + 1] = breakpoints_[i] + lengths_[perm_.top()[i]];
    range_breakpoints_[i + 1] = range_breakpoints_[i] + lengths_[perm_.bottom()[i]];
  }
  shifts_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int label = perm_.top()[i];
    shifts_[i] = range_breakpoints_[static_cast<std::size_t>(perm_.bottom_position(label) - 1)] -
                 breakpoints_[i];
  }
}

RationalVector Iet::range_lengths() const {
  RationalVector out;
  out.reserve(size());
  for (int label : perm_.bottom()) out.push_back(lengths_[label]);
  return out;
}

void Iet::check_domain(const Rational& x) const {
  if (x < 0 || x >= total()) {
    throw std::out_of_range("point " + to_fraction_string(x) + " outside [0, " +
                            to_fraction_string(total()) + ")");
  }
}

int Iet::locate(const Rational& x) const {
  check_domain(x);
  auto it = std::upper_bound(breakpoints_.begin() + 1, breakpoints_.end(), x);
  return static_cast<int>(it - breakpoints_.begin());
}

Rational Iet::shift(int position) const { return shifts_.at(static_cast<std::size_t>(position - 1)); }

Rational Iet::evaluate(const Rational& x) const {
  return x + shifts_[static_cast<std::size_t>(locate(x) - 1)];
}

Iet build_iet(const Permutation& perm, const LengthVector& lengths) { return Iet(perm, lengths); }

IntVector orbit_counts(const Iet& iet, const Rational& x, std::size_t steps) {
  if (steps == 0) throw std::invalid_argument("orbit_counts needs at least one step");
  IntVector counts(iet.size(), BigInt(0));
  std::vector<unsigned long> tally(iet.size(), 0);
  Rational point = x;
  for (std::size_t t = 0; t < steps; ++t) {
    const int pos = iet.locate(point);
    ++tally[static_cast<std::size_t>(iet.permutation().top()[static_cast<std::size_t>(pos - 1)] - 1)];
    if (t + 1 < steps) point += iet.shift(pos);
  }
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] = tally[i];
  return counts;
}

bool keane_prefix_check(const Iet& iet, std::size_t steps) {
  if (steps == 0) throw std::invalid_argument("keane_prefix_check needs at least one step");
  const auto& beta = iet.breakpoints();
  const std::size_t n = iet.size();
  std::set<Rational> interior;
  for (std::size_t j = 1; j < n; ++j) interior.insert(beta[j]);
  for (std::size_t i = 1; i < n; ++i) {
    Rational point = beta[i];
    for (std::size_t t = 1; t <= steps; ++t) {
      point = iet.evaluate(point);
      if (interior.count(point) != 0) return false;
    }
  }
  return true;
}

}  // namespace ietlab
