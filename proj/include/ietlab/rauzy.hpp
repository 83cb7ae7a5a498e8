#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ietlab/iet.hpp"
#include "ietlab/matrix.hpp"

namespace ietlab {

// Zero: the top-last interval wins (bottom-last loses).
// One: the bottom-last interval wins (top-last loses).
enum class MoveType { Zero, One };

char move_letter(MoveType type);

struct RauzyMove {
  MoveType type = MoveType::Zero;
  int winner = 0;
  int loser = 0;
  bool operator==(const RauzyMove&) const = default;
};

struct Run {
  MoveType type = MoveType::Zero;
  BigInt count;
  bool operator==(const Run& other) const { return type == other.type && count == other.count; }
};

/// Run-length encoded word over {0,1}; adjacent equal runs are always merged,
/// so two words are equal iff they spell the same letter sequence.
class RunWord {
 public:
  RunWord() = default;

  // Text form: space-separated "0", "1", "0^k", "1^k".
  static RunWord parse(std::string_view text);

  void append(MoveType type, const BigInt& count);
  void append(MoveType type, unsigned long count) { append(type, BigInt(count)); }
  void append(const RunWord& other);

  const std::vector<Run>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }
  BigInt total_letters() const;
  // Letter-by-letter expansion; throws if longer than `limit`.
  std::vector<MoveType> letters(std::size_t limit) const;
  std::string to_string() const;

  bool operator==(const RunWord& other) const { return runs_ == other.runs_; }

 private:
  std::vector<Run> runs_;
};

RunWord concatenate(const std::vector<RunWord>& words);

class ReducibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when the two rightmost lengths tie, so induction is undefined.
/// Carries the number of completed accelerated runs and the word realized
/// up to that point.
class KeaneViolation : public std::runtime_error {
 public:
  KeaneViolation(const std::string& what, std::size_t step_index, RunWord partial)
      : std::runtime_error(what), step_index_(step_index), partial_(std::move(partial)) {}
  std::size_t step_index() const { return step_index_; }
  const RunWord& partial() const { return partial_; }

 private:
  std::size_t step_index_;
  RunWord partial_;
};

struct SymbolicStep {
  Permutation perm;
  RauzyMove move;
  TransitionMatrix matrix;
};

SymbolicStep symbolic_step(const Permutation& perm, MoveType type);

struct WordTransition {
  Permutation perm;
  TransitionMatrix matrix;
};

// Composition along a run word using the closed form of each run.
WordTransition word_transition(const Permutation& perm, const RunWord& word);
// Reference: one elementary factor per letter, multiplied through the kernels.
WordTransition word_transition_letterwise(const Permutation& perm, const RunWord& word,
                                          std::size_t letter_limit = 1'000'000);

struct RealizedStep {
  Iet iet;
  RauzyMove move;  // first move of the run; the winner is constant across it
  BigInt multiplicity;
  TransitionMatrix factor;  // lengths_before = factor * lengths_after
};

RealizedStep realized_step(const Iet& iet);

struct Realization {
  RunWord word;
  Iet final_iet;
  std::size_t runs = 0;
};

// Applies realized_step up to max_runs times. A tie raises KeaneViolation with
// the step index and the word realized so far.
Realization realize_word(const Iet& iet, std::size_t max_runs);

}  // namespace ietlab
