#include "ietlab/rauzy.hpp"

#include <sstream>

#include "ietlab/kernels.hpp"

namespace ietlab {

namespace {

void require_irreducible(const Permutation& perm) {
  if (!perm.irreducible()) throw ReducibleError("reducible permutation " + perm.to_string());
}

// Labels strictly after the winner in the row that gets rotated, plus the
// winner itself. The row is the bottom row for type Zero, the top row for One.
struct RunShape {
  int winner;
  std::vector<int> segment;
};

RunShape run_shape(const Permutation& perm, MoveType type) {
  const bool zero = type == MoveType::Zero;
  const auto& row = zero ? perm.bottom() : perm.top();
  const int winner = zero ? perm.top_last() : perm.bottom_last();
  const int pos = zero ? perm.bottom_position(winner) : perm.top_position(winner);
  RunShape shape{winner, std::vector<int>(row.begin() + pos, row.end())};
  if (shape.segment.empty()) throw ReducibleError("winner is last in both rows");
  return shape;
}

// The t-th loser (t = 0, 1, ...) of a run is segment[r - 1 - (t mod r)].
IntVector loser_multiplicities(const RunShape& shape, const BigInt& q, std::size_t n) {
  const BigInt r = static_cast<unsigned long>(shape.segment.size());
  BigInt full, extra;
  mpz_fdiv_qr(full.get_mpz_t(), extra.get_mpz_t(), q.get_mpz_t(), r.get_mpz_t());
  const std::size_t rem = extra.get_ui();
  IntVector u(n, BigInt(0));
  const std::size_t len = shape.segment.size();
  for (std::size_t idx = 0; idx < len; ++idx) {
    const int label = shape.segment[len - 1 - idx];
    u[static_cast<std::size_t>(label - 1)] = full + (idx < rem ? 1 : 0);
  }
  return u;
}

Permutation rotate_after_winner(const Permutation& perm, MoveType type, const RunShape& shape,
                                const BigInt& q) {
  const std::size_t r = shape.segment.size();
  const std::size_t shift = BigInt(q % static_cast<unsigned long>(r)).get_ui();
  std::vector<int> seg(r);
  for (std::size_t i = 0; i < r; ++i) seg[(i + shift) % r] = shape.segment[i];
  auto top = perm.top();
  auto bottom = perm.bottom();
  auto& row = type == MoveType::Zero ? bottom : top;
  std::copy(seg.begin(), seg.end(), row.end() - static_cast<std::ptrdiff_t>(r));
  return Permutation::from_rows(std::move(top), std::move(bottom));
}

// M <- M (I + e_w u^T): column l gains u_l copies of column w.
void absorb_run(TransitionMatrix& m, int winner, const IntVector& u) {
  const int n = static_cast<int>(m.size());
  for (int l = 1; l <= n; ++l) {
    const BigInt& ul = u[static_cast<std::size_t>(l - 1)];
    if (sgn(ul) == 0) continue;
    for (int row = 1; row <= n; ++row) {
      if (sgn(m(row, winner)) != 0) mpz_addmul(m(row, l).get_mpz_t(), m(row, winner).get_mpz_t(), ul.get_mpz_t());
    }
  }
}

TransitionMatrix run_factor(std::size_t n, int winner, const IntVector& u) {
  auto f = TransitionMatrix::identity(n);
  for (std::size_t l = 0; l < n; ++l) f(winner, static_cast<int>(l + 1)) += u[l];
  return f;
}

}  // namespace

char move_letter(MoveType type) { return type == MoveType::Zero ? '0' : '1'; }

RunWord RunWord::parse(std::string_view text) {
  RunWord word;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token[0] != '0' && token[0] != '1') throw std::invalid_argument("bad run token: " + token);
    const MoveType type = token[0] == '0' ? MoveType::Zero : MoveType::One;
    BigInt count = 1;
    if (token.size() > 1) {
      if (token[1] != '^' || token.size() < 3) throw std::invalid_argument("bad run token: " + token);
      count = parse_bigint(std::string_view(token).substr(2));
    }
    word.append(type, count);
  }
  return word;
}

void RunWord::append(MoveType type, const BigInt& count) {
  if (count < 0) throw std::invalid_argument("negative run multiplicity");
  if (sgn(count) == 0) return;
  if (!runs_.empty() && runs_.back().type == type) {
    runs_.back().count += count;
  } else {
    runs_.push_back({type, count});
  }
}

void RunWord::append(const RunWord& other) {
  for (const auto& run : other.runs_) append(run.type, run.count);
}

BigInt RunWord::total_letters() const {
  BigInt total = 0;
  for (const auto& run : runs_) total += run.count;
  return total;
}

std::vector<MoveType> RunWord::letters(std::size_t limit) const {
  if (total_letters() > static_cast<unsigned long>(limit)) {
    throw std::length_error("word has " + to_decimal(total_letters()) + " letters, limit " +
                            std::to_string(limit));
  }
  std::vector<MoveType> out;
  for (const auto& run : runs_) out.insert(out.end(), run.count.get_ui(), run.type);
  return out;
}

std::string RunWord::to_string() const {
  std::string out;
  for (const auto& run : runs_) {
    if (!out.empty()) out += ' ';
    out += move_letter(run.type);
    if (run.count != 1) out += "^" + to_decimal(run.count);
  }
  return out;
}

RunWord concatenate(const std::vector<RunWord>& words) {
  RunWord out;
  for (const auto& w : words) out.append(w);
  return out;
}

SymbolicStep symbolic_step(const Permutation& perm, MoveType type) {
  require_irreducible(perm);
  const auto shape = run_shape(perm, type);
  const int loser = shape.segment.back();
  auto next = rotate_after_winner(perm, type, shape, BigInt(1));
  return {std::move(next), RauzyMove{type, shape.winner, loser},
          TransitionMatrix::elementary(perm.size(), shape.winner, loser)};
}

WordTransition word_transition(const Permutation& perm, const RunWord& word) {
  WordTransition out{perm, TransitionMatrix::identity(perm.size())};
  for (const auto& run : word.runs()) {
    require_irreducible(out.perm);
    const auto shape = run_shape(out.perm, run.type);
    const auto u = loser_multiplicities(shape, run.count, perm.size());
    absorb_run(out.matrix, shape.winner, u);
    out.perm = rotate_after_winner(out.perm, run.type, shape, run.count);
  }
  return out;
}

WordTransition word_transition_letterwise(const Permutation& perm, const RunWord& word,
                                          std::size_t letter_limit) {
  WordTransition out{perm, TransitionMatrix::identity(perm.size())};
  for (MoveType t : word.letters(letter_limit)) {
    auto step = symbolic_step(out.perm, t);
    out.matrix = kernels::multiply(out.matrix, step.matrix);
    out.perm = std::move(step.perm);
  }
  return out;
}

RealizedStep realized_step(const Iet& iet) {
  const auto& perm = iet.permutation();
  require_irreducible(perm);
  const auto& len = iet.lengths();
  const Rational& top = len[perm.top_last()];
  const Rational& bottom = len[perm.bottom_last()];
  if (top == bottom) {
    throw KeaneViolation("tie between rightmost lengths " + to_fraction_string(top), 0, RunWord{});
  }
  const MoveType type = top > bottom ? MoveType::Zero : MoveType::One;
  const auto shape = run_shape(perm, type);
  const std::size_t r = shape.segment.size();
  const Rational& winner_len = len[shape.winner];

  // Losers cycle with period r; q counts prefix sums strictly below the
  // winner's length. Whole periods are skipped arithmetically.
  Rational period = 0;
  for (int l : shape.segment) period += len[l];
  const Rational ratio = winner_len / period;
  BigInt whole;
  mpz_fdiv_q(whole.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  BigInt q = 0;
  Rational consumed = 0;
  if (whole >= 2) {
    q = (whole - 1) * static_cast<unsigned long>(r);
    consumed = Rational(whole - 1) * period;
  }
  for (std::size_t t = 0;; ++t) {
    const int loser = shape.segment[r - 1 - (t % r)];
    if (consumed + len[loser] >= winner_len) break;
    consumed += len[loser];
    ++q;
  }

  const std::size_t n = perm.size();
  const auto u = loser_multiplicities(shape, q, n);
  RationalVector next = len.entries();
  next[static_cast<std::size_t>(shape.winner - 1)] -= consumed;
  RealizedStep out{Iet(rotate_after_winner(perm, type, shape, q), LengthVector(std::move(next))),
                   RauzyMove{type, shape.winner, shape.segment.back()}, q,
                   run_factor(n, shape.winner, u)};
  return out;
}

Realization realize_word(const Iet& iet, std::size_t max_runs) {
  Realization out{RunWord{}, iet, 0};
  while (out.runs < max_runs) {
    try {
      auto step = realized_step(out.final_iet);
      out.word.append(step.move.type, step.multiplicity);
      out.final_iet = std::move(step.iet);
      ++out.runs;
    } catch (const KeaneViolation& tie) {
      throw KeaneViolation(std::string(tie.what()) + " at run " + std::to_string(out.runs), out.runs,
                           out.word);
    }
  }
  return out;
}

}  // namespace ietlab
