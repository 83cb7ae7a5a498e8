#pragma once

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "ietlab/dimension.hpp"
#include "ietlab/lemmas.hpp"

namespace ietlab::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

// Bad flags or values that violate a precondition; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  int n = 6;
  std::string p = "8";
  std::optional<std::string> c1;  // default p^2
  int m = 6;
  std::optional<int> K;
  std::optional<int> i;
  std::optional<int> j;
  std::string a = "1";
  std::string c = "1";
  std::string format = "json";
  std::string out;
  std::optional<std::size_t> window;
  std::optional<std::size_t> max_runs;
  bool escalate = false;
};

struct CommandOutput {
  std::string text;
  int exit_code = 0;  // 0 pass, 1 verified-property failure
};

Json to_json(const Permutation& perm);
Json to_json(const TransitionMatrix& matrix);
Json to_json(const IntVector& v);
Json to_json(const RationalVector& v);
Json to_json(const LemmaCheck& check);
Json to_json(const SuiteReport& report);
Json to_json(const EscalationReport& report);
Json to_json(const ParameterSchedule& s);
Json config_json(const RunConfig& config);
Json envelope(const RunConfig& config, Json results, bool verdict);

// CSV with header "j,k,i,numerator,denominator".
std::string measures_csv(const std::vector<ProductColumn>& columns, int K);
// CSV with header "k,lower,upper,gap_bound,lambda_i,lambda_j,b".
std::string dimension_csv(const DimensionSeries& series);

// Validates the config, runs the command and renders its output.
CommandOutput run_command(const RunConfig& config);

// Writes to path + ".tmp" then renames over path.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace ietlab::report
