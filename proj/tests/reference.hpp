#pragma once

// Small independent implementations used as oracles by the tests. Nothing
// here calls the library's Rauzy, family or kernel code.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace ref {

using Matrix = std::vector<std::vector<mpz_class>>;

struct Rows {
  std::vector<int> top;
  std::vector<int> bottom;
};

inline Matrix identity(int n) {
  Matrix m(static_cast<std::size_t>(n), std::vector<mpz_class>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// One letter of right Rauzy induction on label rows: 0 = top-last wins.
inline Rows step(const Rows& r, int letter, int& winner, int& loser) {
  Rows out = r;
  auto& won_row = letter == 0 ? out.top : out.bottom;
  auto& lost_row = letter == 0 ? out.bottom : out.top;
  winner = won_row.back();
  loser = lost_row.back();
  lost_row.pop_back();
  const auto it = std::find(lost_row.begin(), lost_row.end(), winner);
  lost_row.insert(it + 1, loser);
  return out;
}

// Follows a letter sequence and returns the product of I + E(winner, loser).
inline Matrix path_product(Rows& r, const std::vector<int>& letters) {
  const int n = static_cast<int>(r.top.size());
  Matrix m = identity(n);
  for (int letter : letters) {
    int w = 0;
    int l = 0;
    r = step(r, letter, w, l);
    Matrix e = identity(n);
    e[static_cast<std::size_t>(w - 1)][static_cast<std::size_t>(l - 1)] += 1;
    m = multiply(m, e);
  }
  return m;
}

inline void push_run(std::vector<int>& letters, int letter, long count) {
  for (long t = 0; t < count; ++t) letters.push_back(letter);
}

// Letters of the family cycle word, built from the run-level description.
inline std::vector<int> cycle_letters(int n, long a, long c) {
  std::vector<int> w{0};
  const int stop = n % 2 == 0 ? 2 : 3;
  for (int k = n - 2; k >= stop; k -= 2) {
    push_run(w, 1, n - 1 - k);
    push_run(w, 0, a);
    push_run(w, 1, 1);
    push_run(w, 0, 2);
  }
  if (n % 2 == 1) w.push_back(0);
  push_run(w, 1, c * (n - 1));
  return w;
}

inline Rows base_rows(int n) {
  Rows r;
  if (n % 2 == 0) {
    r.top.resize(static_cast<std::size_t>(n));
    std::iota(r.top.begin(), r.top.end(), 1);
    r.bottom.push_back(n);
    for (int k = 2; k + 1 <= n - 1; k += 2) {
      r.bottom.push_back(k + 1);
      r.bottom.push_back(k);
    }
    r.bottom.push_back(1);
  } else {
    r.top.push_back(1);
    r.top.push_back(n - 1);
    for (int k = 2; k <= n - 2; ++k) r.top.push_back(k);
    r.top.push_back(n);
    r.bottom.push_back(n);
    r.bottom.push_back(n - 1);
    for (int k = 2; k + 1 <= n - 2; k += 2) {
      r.bottom.push_back(k + 1);
      r.bottom.push_back(k);
    }
    r.bottom.push_back(1);
  }
  return r;
}

// Leibniz expansion; only for small n.
inline mpz_class determinant(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  mpz_class det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (sigma[i] > sigma[j]) ++inversions;
    mpz_class term = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m[i][sigma[i]];
    det += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return det;
}

// Irreducible iff no proper prefix of the top row has the same label set as
// the same-length prefix of the bottom row.
inline bool irreducible(const Rows& r) {
  std::set<int> a;
  std::set<int> b;
  for (std::size_t k = 0; k + 1 < r.top.size(); ++k) {
    a.insert(r.top[k]);
    b.insert(r.bottom[k]);
    if (a == b) return false;
  }
  return true;
}

inline Rows random_irreducible(int n, std::mt19937& rng) {
  Rows r;
  r.top.resize(static_cast<std::size_t>(n));
  std::iota(r.top.begin(), r.top.end(), 1);
  do {
    r.bottom = r.top;
    std::shuffle(r.bottom.begin(), r.bottom.end(), rng);
  } while (!irreducible(r));
  return r;
}

}  // namespace ref
