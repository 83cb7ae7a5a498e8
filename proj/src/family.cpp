#include "ietlab/family.hpp"

#include <stdexcept>

#include "ietlab/kernels.hpp"

namespace ietlab {

namespace {

void require_family_size(int n) {
  if (n < 4) throw std::invalid_argument("family needs n >= 4, got " + std::to_string(n));
}

void require_positive(const BigInt& value, const char* name) {
  if (value < 1) throw std::invalid_argument(std::string(name) + " must be >= 1, got " + to_decimal(value));
}

// Even-n band structure on the label set `labels` (ascending, first = 1,
// last = the right end label).
void fill_band(TransitionMatrix& m, const std::vector<int>& labels, const BigInt& a, const BigInt& c) {
  const int first = labels.front();
  const int last = labels.back();
  m(first, first) = 1;
  m(last, first) = 1;
  for (std::size_t idx = 1; idx < labels.size(); ++idx) {
    m(first, labels[idx]) = c;
    m(last, labels[idx]) = c + 1;
  }
  for (std::size_t idx = 1; idx + 2 < labels.size(); idx += 2) {
    const int even = labels[idx];
    const int odd = labels[idx + 1];
    for (std::size_t col = 1; col < labels.size(); ++col) m(even, labels[col]) = 1;
    m(even, even) = 2;
    m(even, odd) = 2;
    m(odd, even) = a;
    m(odd, odd) = a + 1;
  }
}

}  // namespace

Permutation base_permutation(int n) {
  require_family_size(n);
  std::vector<int> top;
  std::vector<int> bottom{n};
  if (n % 2 == 0) {
    for (int i = 1; i <= n; ++i) top.push_back(i);
    for (int i = 2; i < n - 1; i += 2) {
      bottom.push_back(i + 1);
      bottom.push_back(i);
    }
  } else {
    top = {1, n - 1};
    for (int i = 2; i <= n - 2; ++i) top.push_back(i);
    top.push_back(n);
    bottom.push_back(n - 1);
    for (int i = 2; i < n - 2; i += 2) {
      bottom.push_back(i + 1);
      bottom.push_back(i);
    }
  }
  bottom.push_back(1);
  return Permutation::from_rows(std::move(top), std::move(bottom));
}

RunWord loop_word(int k, const BigInt& a, int n) {
  require_family_size(n);
  if (k < 2 || k > n - 2) {
    throw std::invalid_argument("loop index k=" + std::to_string(k) + " outside [2, " + std::to_string(n - 2) + "]");
  }
  require_positive(a, "a");
  RunWord w;
  w.append(MoveType::One, static_cast<unsigned long>(n - 1 - k));
  w.append(MoveType::Zero, a);
  w.append(MoveType::One, 1UL);
  w.append(MoveType::Zero, 2UL);
  return w;
}

RunWord cycle_word(const BigInt& a, const BigInt& c, int n) {
  require_family_size(n);
  require_positive(a, "a");
  require_positive(c, "c");
  RunWord w;
  w.append(MoveType::Zero, 1UL);
  const int last_loop = n % 2 == 0 ? 2 : 3;
  for (int k = n - 2; k >= last_loop; k -= 2) w.append(loop_word(k, a, n));
  if (n % 2 == 1) w.append(MoveType::Zero, 1UL);
  w.append(MoveType::One, c * (n - 1));
  return w;
}

TransitionMatrix theta_closed_form(const BigInt& a, const BigInt& c, int n) {
  require_family_size(n);
  require_positive(a, "a");
  require_positive(c, "c");
  TransitionMatrix m(static_cast<std::size_t>(n));
  if (n % 2 == 0) {
    std::vector<int> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(i);
    fill_band(m, labels, a, c);
    return m;
  }
  // Odd n: even structure on {1..n-2, n}; label n-1 is a copy of n plus itself.
  std::vector<int> labels;
  for (int i = 1; i <= n - 2; ++i) labels.push_back(i);
  labels.push_back(n);
  fill_band(m, labels, a, c);
  for (int row = 1; row <= n; ++row) m(row, n - 1) = m(row, n);
  m(n - 1, n - 1) += 1;
  return m;
}

std::vector<int> odd_interior_labels(int n) {
  std::vector<int> out;
  for (int i = 3; i <= 2 * (n / 2) - 1; i += 2) out.push_back(i);
  return out;
}

std::vector<int> even_interior_labels(int n) {
  std::vector<int> out;
  for (int i = 2; i <= 2 * (n / 2) - 2; i += 2) out.push_back(i);
  return out;
}

std::vector<int> measure_labels(int n) {
  auto out = odd_interior_labels(n);
  out.push_back(n);
  return out;
}

ParameterSchedule::ParameterSchedule(int n, BigInt p, BigInt c1, int m)
    : n_(n), p_(std::move(p)), c1_(std::move(c1)), m_(m) {}

BigInt ParameterSchedule::c(int i) const {
  if (i < 1) throw std::out_of_range("schedule index must be >= 1");
  BigInt factor;
  mpz_pow_ui(factor.get_mpz_t(), p_.get_mpz_t(), 2UL * static_cast<unsigned long>(i - 1));
  return c1_ * factor;
}

BigInt ParameterSchedule::a(int i) const { return p_ * c(i); }

TransitionMatrix ParameterSchedule::theta(int i) const { return theta_closed_form(a(i), c(i), n_); }

std::vector<TransitionMatrix> ParameterSchedule::thetas(int count) const {
  std::vector<TransitionMatrix> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 1; i <= count; ++i) out.push_back(theta(i));
  return out;
}

RunWord ParameterSchedule::word(int count) const {
  RunWord out;
  for (int i = 1; i <= count; ++i) out.append(cycle_word(a(i), c(i), n_));
  return out;
}

Iet ParameterSchedule::truncation(int m) const {
  if (m < 0) throw std::invalid_argument("truncation depth must be >= 0");
  IntVector v = ones_vector(static_cast<std::size_t>(n_));
  for (int k = m; k >= 1; --k) v = kernels::apply(theta(k), v);
  return Iet(base_permutation(n_), LengthVector::from_integers(v));
}

ParameterSchedule schedule(int n, const BigInt& p, const BigInt& c1, int m) {
  require_family_size(n);
  if (p < n + 1) {
    throw std::invalid_argument("schedule violates p >= n+1 (p=" + to_decimal(p) + ", n=" + std::to_string(n) + ")");
  }
  if (c1 <= p) {
    throw std::invalid_argument("schedule violates c1 > p (c1=" + to_decimal(c1) + ", p=" + to_decimal(p) + ")");
  }
  if (m < 1) throw std::invalid_argument("schedule violates m >= 1 (m=" + std::to_string(m) + ")");
  return ParameterSchedule(n, p, c1, m);
}

BigInt default_c1(const BigInt& p) { return p * p; }

FamilyValidation validate_family(int n, const BigInt& a, const BigInt& c) {
  const auto start = base_permutation(n);
  const auto word = cycle_word(a, c, n);
  auto path = word_transition_letterwise(start, word);
  FamilyValidation out{n, a, c, start, path.perm, theta_closed_form(a, c, n), std::move(path.matrix), false,
                       std::nullopt};
  out.closes = out.end == start;
  for (int r = 1; r <= n && !out.first_mismatch; ++r) {
    for (int col = 1; col <= n; ++col) {
      if (out.closed_form(r, col) != out.path_product(r, col)) {
        out.first_mismatch = EntryMismatch{r, col, out.closed_form(r, col), out.path_product(r, col)};
        break;
      }
    }
  }
  return out;
}

}  // namespace ietlab
