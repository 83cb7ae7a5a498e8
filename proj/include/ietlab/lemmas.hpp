#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ietlab/measure.hpp"

namespace ietlab {

struct LemmaFailure {
  int j = 0;
  int k = 0;
  int i = 0;
  std::string lhs;  // "num/den"
  std::string rhs;
  std::string relation;
};

struct LemmaCheck {
  std::string lemma_id;
  std::string params;
  std::size_t instances_checked = 0;
  std::vector<LemmaFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Everything the checks read: all n product columns to depth m and return
/// times to depth K.
struct LemmaContext {
  ParameterSchedule schedule;
  int m;
  int K;
  std::vector<ProductColumn> columns;  // columns[j-1]
  ReturnTimes times;

  const ProductColumn& column(int j) const { return columns[static_cast<std::size_t>(j - 1)]; }
  // Constant of the matrix producing level k.
  BigInt level_c(int k) const { return schedule.c(k + 1); }
};

LemmaContext build_lemma_context(const ParameterSchedule& s, int m, int K);

const std::vector<std::string>& lemma_ids();

LemmaCheck run_lemma(const std::string& lemma_id, const LemmaContext& ctx);
LemmaCheck run_lemma(const std::string& lemma_id, const ParameterSchedule& s, int m, int K);

struct SuiteReport {
  std::vector<LemmaCheck> checks;  // in lemma_ids() order
  // Observed strict/equal order of the intervals per measure at level
  // min(K, m-1), e.g. "I_3 > I_6 > I_1 > I_2 > I_4 > I_5".
  std::map<int, std::string> observed_order;
  bool passed() const;
};

SuiteReport run_all(const ParameterSchedule& s, int m, int K);

struct EscalationReport {
  std::vector<BigInt> p_values;
  std::vector<SuiteReport> reports;
  // Smallest swept p from which the lemma passes at every larger swept p.
  std::map<std::string, std::optional<BigInt>> minimal_passing_p;
};

// Sweeps p over {n+1, 2n, 4n, 8n, 16n} with c_1 = p^2.
EscalationReport escalation_sweep(int n, int m, int K);

std::string observed_interval_order(const ProductColumn& pc, int k);

}  // namespace ietlab
