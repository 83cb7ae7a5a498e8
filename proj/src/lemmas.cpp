#include "ietlab/lemmas.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <iterator>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ietlab {

namespace {

class Recorder {
 public:
  explicit Recorder(LemmaCheck& out) : out_(out) {}

  void expect(bool ok, int j, int k, int i, const Rational& lhs, const char* relation, const Rational& rhs) {
    ++out_.instances_checked;
    if (!ok) out_.failures.push_back({j, k, i, to_fraction_string(lhs), to_fraction_string(rhs), relation});
  }
  void less(int j, int k, int i, const Rational& lhs, const Rational& rhs) {
    expect(lhs < rhs, j, k, i, lhs, "<", rhs);
  }
  void less_equal(int j, int k, int i, const Rational& lhs, const Rational& rhs) {
    expect(lhs <= rhs, j, k, i, lhs, "<=", rhs);
  }
  void greater(int j, int k, int i, const Rational& lhs, const Rational& rhs) {
    expect(lhs > rhs, j, k, i, lhs, ">", rhs);
  }
  void equal(int j, int k, int i, const Rational& lhs, const Rational& rhs) {
    expect(lhs == rhs, j, k, i, lhs, "=", rhs);
  }

 private:
  LemmaCheck& out_;
};

Rational entry(const LemmaContext& ctx, int j, int k, int i) { return measure_of_interval(ctx.column(j), k, i); }

Rational ratio_to_level(const LemmaContext& ctx, int j, int k, const Rational& mass) {
  return mass / level_total(ctx.column(j), k);
}

BigInt product(const std::function<BigInt(int)>& f, int upto) {
  BigInt out = 1;
  for (int t = 1; t <= upto; ++t) out *= f(t);
  return out;
}

void lemma1(const LemmaContext& ctx, Recorder& rec) {
  const int n = ctx.schedule.n();
  for (int j : odd_interior_labels(n)) {
    for (int k = 0; k <= ctx.K; ++k) {
      const Rational ck(ctx.level_c(k));
      rec.greater(j, k, j, ratio_to_level(ctx, j, k, entry(ctx, j, k, j)), Rational(1, 2));
      Rational bound(n);
      bound /= 2 * ck;
      rec.less(j, k, 0, ratio_to_level(ctx, j, k, middle_mass(ctx.column(j), k, j)), bound);
    }
  }
}

void lemma2(const LemmaContext& ctx, Recorder& rec) {
  const int n = ctx.schedule.n();
  for (int k = 0; k <= ctx.K; ++k) {
    const Rational ends = entry(ctx, 1, k, 1) + entry(ctx, 1, k, n);
    rec.greater(1, k, 1, ratio_to_level(ctx, 1, k, ends), Rational(1, 2));
    Rational bound(n);
    bound /= Rational(ctx.level_c(k));
    rec.less(1, k, 0, ratio_to_level(ctx, 1, k, middle_mass(ctx.column(1), k, 0)), bound);
  }
}

void lemma3(const LemmaContext& ctx, Recorder& rec) {
  const auto& s = ctx.schedule;
  const int n = s.n();
  const int m = ctx.m;
  Rational bound(4);
  bound /= Rational(s.a(m));
  std::vector<std::pair<int, int>> pairs;
  for (int e : even_interior_labels(n)) pairs.emplace_back(e, e + 1);
  if (n % 2 == 1) pairs.emplace_back(n - 1, n);
  std::vector<RationalVector> limits;
  for (int j = 1; j <= n; ++j) {
    RationalVector v;
    for (int i = 1; i <= n; ++i) v.push_back(entry(ctx, j, 0, i));
    limits.push_back(std::move(v));
  }
  for (auto [j1, j2] : pairs) {
    rec.less_equal(j1, m, j2, l1_distance(limits[static_cast<std::size_t>(j1 - 1)], limits[static_cast<std::size_t>(j2 - 1)]), bound);
  }
  // The end pair only merges in the limit; require the distance to shrink
  // strictly with every extra level.
  Rational previous = -1;
  for (int depth = 2; depth <= m; ++depth) {
    const Rational d = pairwise_l1(s, 1, n, depth);
    if (depth > 2) rec.less(1, depth, n, d, previous);
    previous = d;
  }
}

void lemma4(const LemmaContext& ctx, Recorder& rec) {
  const int n = ctx.schedule.n();
  const auto odds = odd_interior_labels(n);
  const auto evens = even_interior_labels(n);
  auto same = [&](int j, int k, const std::vector<int>& labels, int skip) {
    int anchor = 0;
    for (int i : labels) {
      if (i == skip) continue;
      if (anchor == 0) {
        anchor = i;
        continue;
      }
      rec.equal(j, k, i, entry(ctx, j, k, i), entry(ctx, j, k, anchor));
    }
  };
  for (int k = 0; k <= ctx.K; ++k) {
    same(1, k, odds, 0);
    same(1, k, evens, 0);
    for (int j : odds) {
      same(j, k, odds, j);
      same(j, k, evens, j - 1);
    }
  }
}

void lemma5(const LemmaContext& ctx, Recorder& rec) {
  const int n = ctx.schedule.n();
  const Rational p(ctx.schedule.p());
  for (int k = 0; k <= ctx.K; ++k) {
    const Rational ck(ctx.level_c(k));
    for (int e : even_interior_labels(n)) {
      const Rational even = entry(ctx, 1, k, e);
      rec.less_equal(1, k, e + 1, entry(ctx, 1, k, e + 1), even / (p - 1));
      rec.less_equal(1, k, e, even, entry(ctx, 1, k, n) / ck);
      rec.less_equal(1, k, e, even, entry(ctx, 1, k, 1) / (ck - 1));
    }
  }
}

void lemma6(const LemmaContext& ctx, Recorder& rec) {
  const int n = ctx.schedule.n();
  for (int j : odd_interior_labels(n)) {
    for (int k = 0; k <= ctx.K; ++k) {
      for (int e : even_interior_labels(n)) {
        if (e == j - 1) continue;
        rec.greater(j, k, e, entry(ctx, j, k, e), entry(ctx, j, k, e + 1));
      }
    }
  }
}

// Groups of labels that must be equal, listed in strictly decreasing order.
using Chain = std::vector<std::vector<int>>;

Chain chain_for(int n, int j) {
  const auto odds = odd_interior_labels(n);
  const auto evens = even_interior_labels(n);
  if (j == 1) return {{n}, {1}, evens, odds};
  Chain chain{{j}, {n}, {1}, {j - 1}};
  std::vector<int> other_evens, other_odds;
  std::copy_if(evens.begin(), evens.end(), std::back_inserter(other_evens), [j](int e) { return e != j - 1; });
  std::copy_if(odds.begin(), odds.end(), std::back_inserter(other_odds), [j](int o) { return o != j; });
  if (!other_evens.empty()) chain.push_back(other_evens);
  if (!other_odds.empty()) chain.push_back(other_odds);
  return chain;
}

void lemma7(const LemmaContext& ctx, Recorder& rec) {
  const int n = ctx.schedule.n();
  std::vector<int> seeds{1};
  for (int j : odd_interior_labels(n)) seeds.push_back(j);
  const int top = std::min(ctx.K, ctx.m - 1);
  for (int j : seeds) {
    const Chain chain = chain_for(n, j);
    for (int k = 0; k <= top; ++k) {
      for (std::size_t g = 0; g < chain.size(); ++g) {
        const int head = chain[g].front();
        for (std::size_t t = 1; t < chain[g].size(); ++t) {
          rec.equal(j, k, chain[g][t], entry(ctx, j, k, chain[g][t]), entry(ctx, j, k, head));
        }
        if (g + 1 < chain.size()) {
          const int next = chain[g + 1].front();
          rec.greater(j, k, head, entry(ctx, j, k, head), entry(ctx, j, k, next));
        }
      }
    }
  }
}

void lemma8(const LemmaContext& ctx, Recorder& rec) {
  const int n = ctx.schedule.n();
  const auto odds = odd_interior_labels(n);
  const auto evens = even_interior_labels(n);
  for (int k = 1; k <= ctx.K; ++k) {
    auto b = [&](int i) { return Rational(ctx.times.at(k, i)); };
    rec.less(0, k, 1, b(1), b(n));
    rec.less(0, k, n, b(n), b(2));
    for (int e : evens) rec.equal(0, k, e, b(e), b(2));
    rec.less(0, k, 2, b(2), b(3));
    for (int o : odds) rec.equal(0, k, o, b(o), b(3));
  }
}

void lemma9(const LemmaContext& ctx, Recorder& rec) {
  const auto& s = ctx.schedule;
  const int n = s.n();
  for (int k = 1; k <= ctx.K; ++k) {
    const BigInt a_prod = product([&](int t) { return s.a(t); }, k);
    const BigInt upper = product([&](int t) { return BigInt(2 * s.a(t)); }, k);
    for (int i = 2; i <= n - 1; ++i) {
      // For odd n label n-1 copies column n and carries only the c-products.
      if (n % 2 == 1 && i == n - 1) continue;
      const Rational b(ctx.times.at(k, i));
      rec.less(0, k, i, Rational(a_prod), b);
      rec.less(0, k, i, b, Rational(upper));
    }
    const Rational b1(ctx.times.at(k, 1));
    const Rational bn(ctx.times.at(k, n));
    rec.less(0, k, 1, Rational(product([&](int t) { return s.c(t); }, k - 1)), b1);
    rec.less(0, k, 1, b1, Rational(upper));
    rec.less(0, k, n, Rational(product([&](int t) { return s.c(t); }, k)), bn);
    rec.less(0, k, n, bn, Rational(upper));
  }
}

void lemma10(const LemmaContext& ctx, Recorder& rec) {
  const int n = ctx.schedule.n();
  for (int i : measure_labels(n)) {
    for (int k = 0; k <= ctx.K; ++k) {
      rec.greater(i, k, i, orbit_mass(ctx.column(i), ctx.times, k, i), Rational(1, n));
    }
  }
}

void lemma11(const LemmaContext& ctx, Recorder& rec) {
  const int n = ctx.schedule.n();
  for (int j = 1; j <= n; ++j) {
    for (int k = 0; k <= ctx.K; ++k) {
      for (int i = 1; i <= n; ++i) {
        if (i == j) continue;
        rec.less_equal(j, k, i, entry(ctx, j, k, i), Rational(BigInt(1), ctx.times.at(k, i)));
      }
    }
  }
}

void lemma12(const LemmaContext& ctx, Recorder& rec) {
  const int n = ctx.schedule.n();
  for (int i : measure_labels(n)) {
    for (int k = 0; k <= ctx.K; ++k) {
      const BigInt& b = ctx.times.at(k, i);
      const Rational value = entry(ctx, i, k, i);
      rec.less_equal(i, k, i, Rational(BigInt(1), b * n), value);
      rec.less_equal(i, k, i, value, Rational(BigInt(1), b));
    }
  }
}

using LemmaFn = void (*)(const LemmaContext&, Recorder&);

const std::map<std::string, LemmaFn>& registry() {
  static const std::map<std::string, LemmaFn> table{
      {"L1", lemma1}, {"L2", lemma2},   {"L3", lemma3},   {"L4", lemma4},
      {"L5", lemma5}, {"L6", lemma6},   {"L7", lemma7},   {"L8", lemma8},
      {"L9", lemma9}, {"L10", lemma10}, {"L11", lemma11}, {"L12", lemma12}};
  return table;
}

std::string describe(const LemmaContext& ctx) {
  std::ostringstream out;
  out << "n=" << ctx.schedule.n() << " p=" << ctx.schedule.p() << " c1=" << ctx.schedule.c1() << " m=" << ctx.m
      << " K=" << ctx.K;
  return out.str();
}

}  // namespace

LemmaContext build_lemma_context(const ParameterSchedule& s, int m, int K) {
  if (m < 1) throw std::invalid_argument("lemma checks need m >= 1");
  if (K < 0 || K > m) throw std::invalid_argument("lemma checks need 0 <= K <= m");
  return LemmaContext{s, m, K, compute_all_columns(s, m), return_times(s, K)};
}

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{"L1", "L2", "L3", "L4",  "L5",  "L6",
                                            "L7", "L8", "L9", "L10", "L11", "L12"};
  return ids;
}

LemmaCheck run_lemma(const std::string& lemma_id, const LemmaContext& ctx) {
  const auto it = registry().find(lemma_id);
  if (it == registry().end()) throw std::invalid_argument("unknown lemma id: " + lemma_id);
  LemmaCheck out{lemma_id, describe(ctx), 0, {}};
  Recorder rec(out);
  it->second(ctx, rec);
  std::stable_sort(out.failures.begin(), out.failures.end(), [](const LemmaFailure& x, const LemmaFailure& y) {
    return std::tie(x.j, x.k, x.i) < std::tie(y.j, y.k, y.i);
  });
  return out;
}

LemmaCheck run_lemma(const std::string& lemma_id, const ParameterSchedule& s, int m, int K) {
  if (registry().find(lemma_id) == registry().end()) throw std::invalid_argument("unknown lemma id: " + lemma_id);
  return run_lemma(lemma_id, build_lemma_context(s, m, K));
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed(); });
}

SuiteReport run_all(const ParameterSchedule& s, int m, int K) {
  const auto ctx = build_lemma_context(s, m, K);
  const auto& ids = lemma_ids();
  SuiteReport report;
  report.checks.resize(ids.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < static_cast<int>(ids.size()); ++t) {
    try {
      report.checks[static_cast<std::size_t>(t)] = run_lemma(ids[static_cast<std::size_t>(t)], ctx);
    } catch (...) {
#pragma omp critical(ietlab_lemma_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  const int level = std::min(K, m - 1);
  report.observed_order[1] = observed_interval_order(ctx.column(1), level);
  for (int j : measure_labels(s.n())) report.observed_order[j] = observed_interval_order(ctx.column(j), level);
  return report;
}

EscalationReport escalation_sweep(int n, int m, int K) {
  EscalationReport out;
  for (int factor : {0, 2, 4, 8, 16}) out.p_values.push_back(factor == 0 ? BigInt(n + 1) : BigInt(factor * n));
  for (const auto& p : out.p_values) out.reports.push_back(run_all(schedule(n, p, default_c1(p), m), m, K));
  const auto& ids = lemma_ids();
  for (std::size_t t = 0; t < ids.size(); ++t) {
    std::optional<BigInt> minimal;
    for (std::size_t idx = out.reports.size(); idx > 0; --idx) {
      if (!out.reports[idx - 1].checks[t].passed()) break;
      minimal = out.p_values[idx - 1];
    }
    out.minimal_passing_p[ids[t]] = minimal;
  }
  return out;
}

std::string observed_interval_order(const ProductColumn& pc, int k) {
  const auto& t = pc.tail(k);
  std::vector<int> labels(t.size());
  std::iota(labels.begin(), labels.end(), 1);
  std::stable_sort(labels.begin(), labels.end(), [&t](int x, int y) {
    return t[static_cast<std::size_t>(x - 1)] > t[static_cast<std::size_t>(y - 1)];
  });
  std::string out = "I_" + std::to_string(labels.front());
  for (std::size_t idx = 1; idx < labels.size(); ++idx) {
    const bool tie = t[static_cast<std::size_t>(labels[idx] - 1)] == t[static_cast<std::size_t>(labels[idx - 1] - 1)];
    out += (tie ? " = I_" : " > I_") + std::to_string(labels[idx]);
  }
  return out;
}

}  // namespace ietlab
