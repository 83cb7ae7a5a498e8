#include "ietlab/measure.hpp"

#include <stdexcept>

#include "ietlab/kernels.hpp"

namespace ietlab {

namespace {

void check_label(int n, int label) {
  if (label < 1 || label > n) {
    throw std::out_of_range("label " + std::to_string(label) + " outside 1.." + std::to_string(n));
  }
}

ProductColumn wrap(int n, int j, int m, std::vector<IntVector> tails) {
  ProductColumn pc{n, j, m, std::move(tails), BigInt(0)};
  pc.total = l1_norm(pc.v());
  return pc;
}

}  // namespace

const IntVector& ProductColumn::tail(int k) const {
  if (k < 0 || k > m) throw std::out_of_range("level " + std::to_string(k) + " outside 0.." + std::to_string(m));
  return tails[static_cast<std::size_t>(k)];
}

ProductColumn compute_product_column(const ParameterSchedule& s, int j, int m) {
  check_label(s.n(), j);
  if (m < 0) throw std::invalid_argument("truncation depth must be >= 0");
  const auto seed = unit_vector(static_cast<std::size_t>(s.n()), j);
  if (m == 0) return wrap(s.n(), j, 0, {seed});
  auto chains = kernels::suffix_chains(s.thetas(m), {seed});
  return wrap(s.n(), j, m, std::move(chains.front()));
}

std::vector<ProductColumn> compute_all_columns(const ParameterSchedule& s, int m) {
  if (m < 1) throw std::invalid_argument("compute_all_columns needs m >= 1");
  std::vector<IntVector> seeds;
  for (int j = 1; j <= s.n(); ++j) seeds.push_back(unit_vector(static_cast<std::size_t>(s.n()), j));
  auto chains = kernels::suffix_chains(s.thetas(m), seeds);
  std::vector<ProductColumn> out;
  for (int j = 1; j <= s.n(); ++j) out.push_back(wrap(s.n(), j, m, std::move(chains[static_cast<std::size_t>(j - 1)])));
  return out;
}

Rational measure_of_interval(const ProductColumn& pc, int k, int i) {
  check_label(pc.n, i);
  Rational q(pc.tail(k)[static_cast<std::size_t>(i - 1)], pc.total);
  q.canonicalize();
  return q;
}

Rational level_total(const ProductColumn& pc, int k) {
  Rational q(l1_norm(pc.tail(k)), pc.total);
  q.canonicalize();
  return q;
}

Rational middle_mass(const ProductColumn& pc, int k, int exclude) {
  const auto& t = pc.tail(k);
  BigInt sum = 0;
  for (int i = 2; i <= pc.n - 1; ++i) {
    if (i != exclude) sum += t[static_cast<std::size_t>(i - 1)];
  }
  Rational q(sum, pc.total);
  q.canonicalize();
  return q;
}

RationalVector normalized_limit(const ParameterSchedule& s, int j, int m) {
  const auto pc = compute_product_column(s, j, m);
  RationalVector out;
  for (int i = 1; i <= s.n(); ++i) out.push_back(measure_of_interval(pc, 0, i));
  return out;
}

Rational pairwise_l1(const ParameterSchedule& s, int j1, int j2, int m) {
  return l1_distance(normalized_limit(s, j1, m), normalized_limit(s, j2, m));
}

const BigInt& ReturnTimes::at(int k, int i) const {
  if (k < 0 || k > K) throw std::out_of_range("return-time level " + std::to_string(k) + " outside 0.." + std::to_string(K));
  check_label(n, i);
  return b[static_cast<std::size_t>(k)][static_cast<std::size_t>(i - 1)];
}

ReturnTimes return_times(const ParameterSchedule& s, int K) {
  if (K < 0) throw std::invalid_argument("return_times needs K >= 0");
  ReturnTimes rt{s.n(), K, {}};
  rt.b.push_back(ones_vector(static_cast<std::size_t>(s.n())));
  if (K == 0) return rt;
  const auto prefixes = kernels::prefix_products(s.thetas(K));
  for (int k = 1; k <= K; ++k) rt.b.push_back(prefixes[static_cast<std::size_t>(k)].column_sums());
  return rt;
}

Rational orbit_mass(const ProductColumn& pc, const ReturnTimes& rt, int k, int i) {
  return Rational(rt.at(k, i)) * measure_of_interval(pc, k, i);
}

IntVector visit_count_column(const ParameterSchedule& s, int m, int k, int i, std::size_t budget) {
  check_label(s.n(), i);
  if (k < 0 || k > m) throw std::invalid_argument("visit_count_column needs 0 <= k <= m");
  const Iet original = s.truncation(m);

  // Induce k cycles, run by run, insisting each realized run matches the word.
  Iet induced = original;
  for (int level = 1; level <= k; ++level) {
    const RunWord word = cycle_word(s.a(level), s.c(level), s.n());
    for (const auto& expected : word.runs()) {
      auto step = realized_step(induced);
      if (step.move.type != expected.type || step.multiplicity != expected.count) {
        throw std::runtime_error("realized induction left the cycle word at level " + std::to_string(level));
      }
      induced = std::move(step.iet);
    }
  }

  const auto& beta = induced.breakpoints();
  const int pos = induced.permutation().top_position(i);
  Rational x = (beta[static_cast<std::size_t>(pos - 1)] + beta[static_cast<std::size_t>(pos)]) / 2;
  const Rational& level_end = induced.total();

  std::vector<unsigned long> counts(static_cast<std::size_t>(s.n()), 0);
  for (std::size_t t = 0;; ++t) {
    if (t >= budget) throw std::runtime_error("visit_count_column: iteration budget exceeded");
    const int p = original.locate(x);
    ++counts[static_cast<std::size_t>(original.permutation().top()[static_cast<std::size_t>(p - 1)] - 1)];
    x += original.shift(p);
    if (x < level_end) break;
  }
  IntVector out(counts.size());
  for (std::size_t t = 0; t < counts.size(); ++t) out[t] = counts[t];
  return out;
}

}  // namespace ietlab
