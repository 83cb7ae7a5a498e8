#include "ietlab/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ietlab/kernels.hpp"

namespace ietlab::report {

namespace {

BigInt parse_big(const std::string& text, const char* flag) {
  try {
    return parse_bigint(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("--") + flag + " expects a decimal integer, got '" + text + "'");
  }
}

void require_label(int n, const std::optional<int>& label, const char* flag) {
  if (label && (*label < 1 || *label > n)) {
    throw UsageError(std::string("--") + flag + " must lie in 1.." + std::to_string(n));
  }
}

void require_format(const RunConfig& config, bool csv_allowed) {
  if (config.format != "json" && config.format != "csv") throw UsageError("--format must be json or csv");
  if (config.format == "csv" && !csv_allowed) throw UsageError(config.command + " only emits json");
}

// Validated schedule for the config; m_floor lets `induce` accept m = 0.
ParameterSchedule config_schedule(const RunConfig& config, int m_floor = 1) {
  if (config.m < m_floor - 1) throw UsageError("--m must be >= " + std::to_string(m_floor - 1));
  const BigInt p = parse_big(config.p, "p");
  const BigInt c1 = config.c1 ? parse_big(*config.c1, "c1") : default_c1(p);
  try {
    return schedule(config.n, p, c1, std::max(config.m, 1));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string text_of(const Json& j) { return j.dump(2) + "\n"; }

Json rational(const Rational& q) { return to_fraction_string(q); }

Json run_json(const Run& r) { return {{"type", std::string(1, move_letter(r.type))}, {"count", to_decimal(r.count)}}; }

CommandOutput cmd_family(const RunConfig& config) {
  require_format(config, false);
  if (config.n < 4) throw UsageError("--n must be >= 4 for the family");
  const BigInt a = parse_big(config.a, "a");
  const BigInt c = parse_big(config.c, "c");
  if (a < 1 || c < 1) throw UsageError("--a and --c must be >= 1");
  FamilyValidation v = [&] {
    try {
      return validate_family(config.n, a, c);
    } catch (const std::length_error& e) {
      throw UsageError(std::string("literal oracle refused: ") + e.what());
    }
  }();
  Json results;
  results["permutation"] = to_json(v.start);
  const auto word = cycle_word(a, c, config.n);
  results["cycle_word"] = word.to_string();
  results["letters"] = to_decimal(word.total_letters());
  results["theta"] = to_json(v.closed_form);
  if (config.n % 2 == 1) {
    results["column_rule"] = "column " + std::to_string(config.n - 1) + " = Theta e_" + std::to_string(config.n) +
                             " + e_" + std::to_string(config.n - 1);
  }
  results["closes"] = v.closes;
  results["oracle"] = v.ok() ? "equal" : "mismatch";
  if (v.first_mismatch) {
    const auto& mm = *v.first_mismatch;
    results["first_mismatch"] = {{"row", mm.row}, {"col", mm.col}, {"closed_form", to_decimal(mm.closed_form)},
                                 {"path", to_decimal(mm.path)}};
  }
  return {text_of(envelope(config, std::move(results), v.ok())), v.ok() ? 0 : 1};
}

CommandOutput cmd_induce(const RunConfig& config) {
  require_format(config, false);
  const auto s = config_schedule(config, 0);
  const int m = config.m;
  const RunWord expected = m == 0 ? RunWord{} : s.word(m);
  const std::size_t max_runs = config.max_runs.value_or(expected.runs().size() + 8);
  const Iet iet = s.truncation(m);

  RunWord realized;
  Json stop;
  try {
    auto r = realize_word(iet, max_runs);
    realized = std::move(r.word);
    stop = {{"reason", "max_runs"}, {"runs", r.runs}};
  } catch (const KeaneViolation& tie) {
    realized = tie.partial();
    stop = {{"reason", "keane_violation"}, {"step_index", tie.step_index()}, {"detail", tie.what()}};
  }

  // Runs correspond one-to-one, so compare run by run.
  const auto& want = expected.runs();
  const auto& got = realized.runs();
  std::size_t matched = 0;
  while (matched < want.size() && matched < got.size() && want[matched] == got[matched]) ++matched;
  int cycles = 0;
  std::size_t boundary = 0;
  for (int level = 1; level <= m; ++level) {
    boundary += cycle_word(s.a(level), s.c(level), s.n()).runs().size();
    if (boundary <= matched) cycles = level;
  }
  const bool ok = matched == want.size();
  Json results;
  results["expected_runs"] = want.size();
  results["realized_runs"] = got.size();
  results["matched_runs"] = matched;
  results["cycles_matched"] = cycles;
  results["summary"] = ok ? "prefix match: " + std::to_string(m) + " cycles" : "divergence at run " + std::to_string(matched);
  if (!ok) {
    Json div;
    div["run_index"] = matched;
    div["expected"] = matched < want.size() ? run_json(want[matched]) : Json(nullptr);
    div["realized"] = matched < got.size() ? run_json(got[matched]) : Json(nullptr);
    results["first_divergence"] = div;
  }
  results["stop"] = stop;
  results["realized_word"] = realized.to_string();
  return {text_of(envelope(config, std::move(results), ok)), ok ? 0 : 1};
}

CommandOutput cmd_measures(const RunConfig& config) {
  require_format(config, true);
  const auto s = config_schedule(config);
  const int m = config.m;
  const int K = config.K.value_or(m);
  if (K < 0 || K > m) throw UsageError("--K must lie in 0..m");
  require_label(s.n(), config.i, "i");
  require_label(s.n(), config.j, "j");
  const auto columns = compute_all_columns(s, m);
  const auto times = return_times(s, K);
  const auto thetas = s.thetas(m);

  bool telescoping = true;
  bool unity = true;
  bool bound = true;
  for (const auto& pc : columns) {
    for (int k = 1; k <= m; ++k) telescoping &= kernels::serial::apply(thetas[static_cast<std::size_t>(k - 1)], pc.tail(k)) == pc.tail(k - 1);
    for (int k = 0; k <= K; ++k) {
      Rational sum = 0;
      for (int t = 1; t <= s.n(); ++t) {
        sum += orbit_mass(pc, times, k, t);
        if (t != pc.j) bound &= measure_of_interval(pc, k, t) * times.at(k, t) <= 1;
      }
      unity &= sum == 1;
    }
  }
  const bool ok = telescoping && unity && bound;
  if (config.format == "csv") return {measures_csv(columns, K), ok ? 0 : 1};

  Json results;
  results["schedule"] = to_json(s);
  Json per_j = Json::array();
  for (const auto& pc : columns) {
    Json entry;
    entry["j"] = pc.j;
    entry["total"] = to_decimal(pc.total);
    RationalVector limit;
    for (int t = 1; t <= s.n(); ++t) limit.push_back(measure_of_interval(pc, 0, t));
    entry["normalized_limit"] = to_json(limit);
    const Rational step = l1_distance(limit, normalized_limit(s, pc.j, m - 1));
    entry["convergence_l1"] = rational(step);
    entry["convergence_l1_decimal"] = format_decimal(static_cast<long double>(step.get_d()));
    Json levels = Json::array();
    for (int k = 0; k <= K; ++k) {
      Json row = Json::array();
      for (int t = 1; t <= s.n(); ++t) row.push_back(rational(measure_of_interval(pc, k, t)));
      levels.push_back({{"k", k}, {"lambda", row}, {"level_total", rational(level_total(pc, k))}});
    }
    entry["levels"] = levels;
    per_j.push_back(entry);
  }
  results["columns"] = per_j;
  Json times_json = Json::array();
  for (int k = 0; k <= K; ++k) times_json.push_back({{"k", k}, {"b", to_json(times.b[static_cast<std::size_t>(k)])}});
  results["return_times"] = times_json;
  Json distances = Json::array();
  auto add_distance = [&](int j1, int j2) {
    const Rational d = l1_distance(normalized_limit(s, j1, m), normalized_limit(s, j2, m));
    distances.push_back({{"j1", j1}, {"j2", j2}, {"l1", rational(d)}, {"decimal", format_decimal(static_cast<long double>(d.get_d()))}});
  };
  if (config.i && config.j) {
    add_distance(*config.i, *config.j);
  } else {
    for (int j1 = 1; j1 <= s.n(); ++j1)
      for (int j2 = j1; j2 <= s.n(); ++j2) add_distance(j1, j2);
  }
  results["distances"] = distances;
  results["checks"] = {{"telescoping", telescoping}, {"partition_of_unity", unity}, {"lambda_le_inverse_b", bound}};
  return {text_of(envelope(config, std::move(results), ok)), ok ? 0 : 1};
}

CommandOutput cmd_lemmas(const RunConfig& config) {
  require_format(config, false);
  const auto s = config_schedule(config);
  const int K = config.K.value_or(std::max(0, config.m - 2));
  if (K < 0 || K > config.m) throw UsageError("--K must lie in 0..m");
  const auto suite = run_all(s, config.m, K);
  Json results = to_json(suite);
  if (config.escalate) results["escalation"] = to_json(escalation_sweep(s.n(), config.m, K));
  return {text_of(envelope(config, std::move(results), suite.passed())), suite.passed() ? 0 : 1};
}

CommandOutput cmd_dimension(const RunConfig& config) {
  require_format(config, true);
  const auto s = config_schedule(config);
  if (!config.i || !config.j) throw UsageError("dimension needs --i and --j");
  require_label(s.n(), config.i, "i");
  require_label(s.n(), config.j, "j");
  const int m = config.m;
  const int K = config.K.value_or(m - 2);
  if (K < 0 || K > m - 2) throw UsageError("--K must lie in 0..m-2");
  const std::size_t window = config.window.value_or(default_window(K));
  if (window < 1 || window > static_cast<std::size_t>(K + 1)) throw UsageError("--window must lie in 1..K+1");

  const auto pc_i = compute_product_column(s, *config.i, m);
  const auto pc_j = compute_product_column(s, *config.j, m);
  const auto times = return_times(s, K);
  const auto series = dimension_series(pc_i, pc_j, times, K);
  const bool upper_ok = series.upper_at_most_one();
  const bool bracket_ok = series.bracket_holds();
  const bool gap_ok = series.gap_strictly_decreasing();
  bool argmin_ok = true;
  Json argmins = Json::array();
  for (int k = 0; k <= K; ++k) {
    const int t = argmin_interval(pc_i, pc_j, k);
    argmin_ok &= t == *config.i;
    argmins.push_back({{"k", k}, {"t", t}});
  }
  const bool ok = upper_ok && bracket_ok && gap_ok && argmin_ok;
  if (config.format == "csv") return {dimension_csv(series), ok ? 0 : 1};

  Json results;
  results["schedule"] = to_json(s);
  results["pair"] = {{"i", series.i}, {"j", series.j}};
  results["K"] = K;
  results["window"] = window;
  Json points = Json::array();
  for (const auto& p : series.points) {
    points.push_back({{"k", p.k},
                      {"lower", format_decimal(p.lower)},
                      {"upper", format_decimal(p.upper)},
                      {"gap_bound", format_decimal(p.gap_bound)},
                      {"lambda_i", rational(p.lambda_i)},
                      {"lambda_j", rational(p.lambda_j)},
                      {"b", to_decimal(p.b)}});
  }
  results["series"] = points;
  const long double tail_lower = liminf_estimate(series.lower(), window);
  const long double tail_upper = liminf_estimate(series.upper(), window);
  results["tailmin_lower"] = format_decimal(tail_lower);
  results["tailmin_upper"] = format_decimal(tail_upper);
  results["deficit"] = format_decimal(1.0L - tail_upper);
  results["argmin"] = argmins;
  results["checks"] = {{"upper_le_one", upper_ok},
                       {"bracket", bracket_ok},
                       {"gap_strictly_decreasing", gap_ok},
                       {"argmin_is_i", argmin_ok}};
  return {text_of(envelope(config, std::move(results), ok)), ok ? 0 : 1};
}

CommandOutput cmd_oracle(const RunConfig& config) {
  require_format(config, false);
  const auto s = config_schedule(config);
  const int K = config.K.value_or(1);
  if (K < 0 || K > config.m) throw UsageError("--K must lie in 0..m");
  require_label(s.n(), config.i, "i");
  const auto prefixes = K == 0 ? std::vector<TransitionMatrix>{TransitionMatrix::identity(static_cast<std::size_t>(s.n()))}
                               : kernels::prefix_products(s.thetas(K));
  bool ok = true;
  Json rows = Json::array();
  for (int k = 0; k <= K; ++k) {
    for (int i = 1; i <= s.n(); ++i) {
      if (config.i && *config.i != i) continue;
      const IntVector visits = visit_count_column(s, config.m, k, i);
      const IntVector column = prefixes[static_cast<std::size_t>(k)].column(i);
      ok &= visits == column;
      rows.push_back({{"k", k}, {"i", i}, {"visits", to_json(visits)}, {"matrix_column", to_json(column)}, {"equal", visits == column}});
    }
  }
  Json results;
  results["schedule"] = to_json(s);
  results["columns"] = rows;
  return {text_of(envelope(config, std::move(results), ok)), ok ? 0 : 1};
}

}  // namespace

Json to_json(const Permutation& perm) { return {{"top", perm.top()}, {"bottom", perm.bottom()}}; }

Json to_json(const TransitionMatrix& matrix) {
  Json rows = Json::array();
  const int n = static_cast<int>(matrix.size());
  for (int r = 1; r <= n; ++r) {
    Json row = Json::array();
    for (int c = 1; c <= n; ++c) row.push_back(to_decimal(matrix(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_decimal(x));
  return out;
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_fraction_string(x));
  return out;
}

Json to_json(const LemmaCheck& check) {
  Json failures = Json::array();
  for (const auto& f : check.failures) {
    failures.push_back({{"j", f.j}, {"k", f.k}, {"i", f.i}, {"lhs", f.lhs}, {"relation", f.relation}, {"rhs", f.rhs}});
  }
  return {{"lemma_id", check.lemma_id},
          {"params", check.params},
          {"instances_checked", check.instances_checked},
          {"failures", failures}};
}

Json to_json(const SuiteReport& report) {
  Json lemmas = Json::array();
  for (const auto& c : report.checks) lemmas.push_back(to_json(c));
  Json order = Json::object();
  for (const auto& [j, chain] : report.observed_order) order["lambda_" + std::to_string(j)] = chain;
  return {{"lemmas", lemmas}, {"observed_order", order}, {"passed", report.passed()}};
}

Json to_json(const EscalationReport& report) {
  Json sweep = Json::array();
  for (std::size_t t = 0; t < report.p_values.size(); ++t) {
    Json failing = Json::array();
    for (const auto& c : report.reports[t].checks)
      if (!c.passed()) failing.push_back(c.lemma_id);
    sweep.push_back({{"p", to_decimal(report.p_values[t])}, {"failing", failing}});
  }
  Json minimal = Json::object();
  for (const auto& id : lemma_ids()) {
    const auto& v = report.minimal_passing_p.at(id);
    minimal[id] = v ? Json(to_decimal(*v)) : Json(nullptr);
  }
  return {{"sweep", sweep}, {"minimal_passing_p", minimal}};
}

Json to_json(const ParameterSchedule& s) {
  Json a = Json::array();
  Json c = Json::array();
  for (int t = 1; t <= s.m(); ++t) {
    a.push_back(to_decimal(s.a(t)));
    c.push_back(to_decimal(s.c(t)));
  }
  return {{"n", s.n()}, {"p", to_decimal(s.p())}, {"c1", to_decimal(s.c1())}, {"m", s.m()}, {"a", a}, {"c", c}};
}

Json config_json(const RunConfig& config) {
  Json out;
  out["command"] = config.command;
  out["n"] = config.n;
  if (config.command == "family") {
    out["a"] = config.a;
    out["c"] = config.c;
  } else {
    out["p"] = config.p;
    out["c1"] = config.c1 ? *config.c1 : to_decimal(default_c1(parse_bigint(config.p)));
    out["m"] = config.m;
  }
  if (config.K) out["K"] = *config.K;
  if (config.i) out["i"] = *config.i;
  if (config.j) out["j"] = *config.j;
  if (config.window) out["window"] = *config.window;
  if (config.max_runs) out["max_runs"] = *config.max_runs;
  if (config.escalate) out["escalate"] = true;
  out["format"] = config.format;
  return out;
}

Json envelope(const RunConfig& config, Json results, bool verdict) {
  Json out;
  out["tool_version"] = kToolVersion;
  out["config"] = config_json(config);
  out["results"] = std::move(results);
  out["verdict"] = verdict ? "pass" : "fail";
  return out;
}

std::string measures_csv(const std::vector<ProductColumn>& columns, int K) {
  std::ostringstream out;
  out << "j,k,i,numerator,denominator\n";
  for (const auto& pc : columns) {
    for (int k = 0; k <= K; ++k) {
      for (int i = 1; i <= pc.n; ++i) {
        const Rational q = measure_of_interval(pc, k, i);
        out << pc.j << ',' << k << ',' << i << ',' << to_decimal(q.get_num()) << ',' << to_decimal(q.get_den()) << '\n';
      }
    }
  }
  return out.str();
}

std::string dimension_csv(const DimensionSeries& series) {
  std::ostringstream out;
  out << "k,lower,upper,gap_bound,lambda_i,lambda_j,b\n";
  for (const auto& p : series.points) {
    out << p.k << ',' << format_decimal(p.lower) << ',' << format_decimal(p.upper) << ',' << format_decimal(p.gap_bound)
        << ',' << to_fraction_string(p.lambda_i) << ',' << to_fraction_string(p.lambda_j) << ',' << to_decimal(p.b)
        << '\n';
  }
  return out.str();
}

CommandOutput run_command(const RunConfig& config) {
  if (config.command == "family") return cmd_family(config);
  if (config.command == "induce") return cmd_induce(config);
  if (config.command == "measures") return cmd_measures(config);
  if (config.command == "lemmas") return cmd_lemmas(config);
  if (config.command == "dimension") return cmd_dimension(config);
  if (config.command == "oracle") return cmd_oracle(config);
  throw UsageError("unknown command: " + config.command);
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace ietlab::report
