#include "ietlab/dimension.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ietlab {

namespace {

constexpr mpfr_prec_t kStartPrecision = 128;
constexpr mpfr_prec_t kMaxPrecision = 4096;

class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(value_, prec); }
  ~Real() { mpfr_clear(value_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

 private:
  mpfr_t value_;
};

struct Interval {
  explicit Interval(mpfr_prec_t prec) : lo(prec), hi(prec) {}
  Real lo;
  Real hi;
};

// Enclosure of ln(q) for q > 0.
void log_enclosure(Interval& out, const Rational& q, mpfr_prec_t prec) {
  Real num_lo(prec), num_hi(prec), den_lo(prec), den_hi(prec);
  mpfr_set_z(num_lo.get(), q.get_num_mpz_t(), MPFR_RNDD);
  mpfr_set_z(num_hi.get(), q.get_num_mpz_t(), MPFR_RNDU);
  mpfr_set_z(den_lo.get(), q.get_den_mpz_t(), MPFR_RNDD);
  mpfr_set_z(den_hi.get(), q.get_den_mpz_t(), MPFR_RNDU);
  mpfr_log(num_lo.get(), num_lo.get(), MPFR_RNDD);
  mpfr_log(num_hi.get(), num_hi.get(), MPFR_RNDU);
  mpfr_log(den_lo.get(), den_lo.get(), MPFR_RNDD);
  mpfr_log(den_hi.get(), den_hi.get(), MPFR_RNDU);
  mpfr_sub(out.lo.get(), num_lo.get(), den_hi.get(), MPFR_RNDD);
  mpfr_sub(out.hi.get(), num_hi.get(), den_lo.get(), MPFR_RNDU);
}

// Enclosure of ln(x)/ln(y) for 0 < x <= 1, 0 < y < 1. Returns false when the
// denominator enclosure still touches zero at this precision.
bool ratio_enclosure(Interval& out, const Rational& x, const Rational& y, mpfr_prec_t prec) {
  Interval a(prec), b(prec);
  log_enclosure(a, x, prec);
  log_enclosure(b, y, prec);
  if (mpfr_sgn(b.hi.get()) >= 0) return false;
  // |ln x| in [-a.hi, -a.lo], |ln y| in [-b.hi, -b.lo].
  Real abs_a_lo(prec), abs_a_hi(prec), abs_b_lo(prec), abs_b_hi(prec);
  mpfr_neg(abs_a_lo.get(), a.hi.get(), MPFR_RNDD);
  if (mpfr_sgn(abs_a_lo.get()) < 0) mpfr_set_zero(abs_a_lo.get(), 1);
  mpfr_neg(abs_a_hi.get(), a.lo.get(), MPFR_RNDU);
  mpfr_neg(abs_b_lo.get(), b.hi.get(), MPFR_RNDD);
  mpfr_neg(abs_b_hi.get(), b.lo.get(), MPFR_RNDU);
  mpfr_div(out.lo.get(), abs_a_lo.get(), abs_b_hi.get(), MPFR_RNDD);
  mpfr_div(out.hi.get(), abs_a_hi.get(), abs_b_lo.get(), MPFR_RNDU);
  return true;
}

void require_open_unit(const Rational& y, int k, int t) {
  if (y <= 0 || y >= 1) {
    throw std::domain_error("log base lambda_j(I_" + std::to_string(t) + "^(" + std::to_string(k) +
                            ")) = " + to_fraction_string(y) + " is not in (0,1)");
  }
}

// Sign of ln(x1)/ln(y1) - ln(x2)/ln(y2); x = 0 gives +infinity.
int compare_log_ratios(const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2) {
  const bool inf1 = sgn(x1) == 0;
  const bool inf2 = sgn(x2) == 0;
  if (inf1 || inf2) return inf1 == inf2 ? 0 : (inf1 ? 1 : -1);
  if (x1 == x2 && y1 == y2) return 0;
  const bool zero1 = x1 == 1;
  const bool zero2 = x2 == 1;
  if (zero1 && zero2) return 0;
  for (mpfr_prec_t prec = kStartPrecision; prec <= kMaxPrecision; prec *= 2) {
    Interval r1(prec), r2(prec);
    if (!ratio_enclosure(r1, x1, y1, prec) || !ratio_enclosure(r2, x2, y2, prec)) continue;
    if (mpfr_less_p(r1.hi.get(), r2.lo.get())) return -1;
    if (mpfr_less_p(r2.hi.get(), r1.lo.get())) return 1;
  }
  throw std::runtime_error("log-ratio comparison undecided at " + std::to_string(kMaxPrecision) + " bits");
}

Rational power(const Rational& base, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return out;
}

constexpr unsigned long kExactDenominatorLimit = 256;

// Sign of ln(a) - (ln C + alpha ln b) for a, b, C > 0, alpha >= 0.
int compare_frostman(const Rational& a, const Rational& b, const Rational& alpha, const Rational& C) {
  if (mpz_cmp_ui(alpha.get_den_mpz_t(), kExactDenominatorLimit) <= 0 && mpz_fits_ulong_p(alpha.get_num_mpz_t())) {
    // a <= C b^(p/q)  <=>  (a/C)^q <= b^p
    const unsigned long p = mpz_get_ui(alpha.get_num_mpz_t());
    const unsigned long q = mpz_get_ui(alpha.get_den_mpz_t());
    const Rational lhs = power(a / C, q);
    const Rational rhs = power(b, p);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }
  for (mpfr_prec_t prec = kStartPrecision; prec <= kMaxPrecision; prec *= 2) {
    Interval la(prec), lb(prec), lc(prec);
    log_enclosure(la, a, prec);
    log_enclosure(lb, b, prec);
    log_enclosure(lc, C, prec);
    Real al_lo(prec), al_hi(prec);
    mpfr_set_q(al_lo.get(), alpha.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(al_hi.get(), alpha.get_mpq_t(), MPFR_RNDU);
    // alpha >= 0 and ln b <= 0: alpha * ln b in [alpha_hi * lb.lo, alpha_lo * lb.hi].
    Real rhs_lo(prec), rhs_hi(prec);
    mpfr_mul(rhs_lo.get(), al_hi.get(), lb.lo.get(), MPFR_RNDD);
    mpfr_mul(rhs_hi.get(), al_lo.get(), lb.hi.get(), MPFR_RNDU);
    mpfr_add(rhs_lo.get(), rhs_lo.get(), lc.lo.get(), MPFR_RNDD);
    mpfr_add(rhs_hi.get(), rhs_hi.get(), lc.hi.get(), MPFR_RNDU);
    if (mpfr_less_p(la.hi.get(), rhs_lo.get())) return -1;
    if (mpfr_greater_p(la.lo.get(), rhs_hi.get())) return 1;
  }
  throw std::runtime_error("Frostman comparison undecided at " + std::to_string(kMaxPrecision) + " bits");
}

void check_columns(const ProductColumn& a, const ProductColumn& b, int K) {
  if (a.n != b.n) throw std::invalid_argument("product columns come from different n");
  if (K < 0 || K > std::min(a.m, b.m) - 2) {
    throw std::invalid_argument("dimension series need 0 <= K <= m-2 (K=" + std::to_string(K) + ")");
  }
}

}  // namespace

std::vector<long double> DimensionSeries::lower() const {
  std::vector<long double> out;
  for (const auto& p : points) out.push_back(p.lower);
  return out;
}

std::vector<long double> DimensionSeries::upper() const {
  std::vector<long double> out;
  for (const auto& p : points) out.push_back(p.upper);
  return out;
}

std::vector<long double> DimensionSeries::gap_bounds() const {
  std::vector<long double> out;
  for (const auto& p : points) out.push_back(p.gap_bound);
  return out;
}

bool DimensionSeries::upper_at_most_one() const {
  return std::all_of(points.begin(), points.end(), [](const DimensionPoint& p) { return p.lambda_j * p.b <= 1; });
}

bool DimensionSeries::bracket_holds() const {
  return std::all_of(points.begin(), points.end(), [this](const DimensionPoint& p) {
    const Rational scaled = p.lambda_i * p.b;
    return scaled <= 1 && scaled * n >= 1;
  });
}

bool DimensionSeries::gap_strictly_decreasing() const {
  for (std::size_t k = 1; k < points.size(); ++k) {
    if (!(points[k].lambda_j < points[k - 1].lambda_j)) return false;
  }
  return true;
}

DimensionSeries dimension_series(const ProductColumn& pc_i, const ProductColumn& pc_j, const ReturnTimes& rt, int K) {
  check_columns(pc_i, pc_j, K);
  if (K > rt.K) throw std::invalid_argument("return times computed only to K=" + std::to_string(rt.K));
  const int i = pc_i.j;
  DimensionSeries out{pc_i.n, i, pc_j.j, {}};
  const long double ln_n = std::log(static_cast<long double>(pc_i.n));
  for (int k = 0; k <= K; ++k) {
    DimensionPoint pt;
    pt.k = k;
    pt.lambda_i = measure_of_interval(pc_i, k, i);
    pt.lambda_j = measure_of_interval(pc_j, k, i);
    pt.b = rt.at(k, i);
    require_open_unit(pt.lambda_j, k, i);
    if (sgn(pt.lambda_i) == 0) throw std::domain_error("zero tail entry lambda_i at k=" + std::to_string(k));
    const long double log_j = ln(pt.lambda_j);
    pt.lower = ln(pt.lambda_i) / log_j;
    pt.upper = -ln(pt.b) / log_j;
    pt.gap_bound = ln_n / std::fabs(log_j);
    out.points.push_back(std::move(pt));
  }
  return out;
}

std::vector<long double> lower_series(const ProductColumn& pc_i, const ProductColumn& pc_j, const ReturnTimes& rt,
                                      int K) {
  return dimension_series(pc_i, pc_j, rt, K).lower();
}

std::vector<long double> upper_series(const ProductColumn& pc_j, const ReturnTimes& rt, int i, int K) {
  if (K < 0 || K > pc_j.m - 2) throw std::invalid_argument("upper series needs 0 <= K <= m-2");
  std::vector<long double> out;
  for (int k = 0; k <= K; ++k) {
    const Rational y = measure_of_interval(pc_j, k, i);
    require_open_unit(y, k, i);
    out.push_back(-ln(rt.at(k, i)) / ln(y));
  }
  return out;
}

long double liminf_estimate(const std::vector<long double>& series, std::size_t window) {
  if (window == 0 || window > series.size()) {
    throw std::invalid_argument("liminf window " + std::to_string(window) + " invalid for series of length " +
                                std::to_string(series.size()));
  }
  return *std::min_element(series.end() - static_cast<std::ptrdiff_t>(window), series.end());
}

std::size_t default_window(int K) { return static_cast<std::size_t>(std::max(1, (K + 2) / 3)); }

FrostmanVerdict frostman_check(const ProductColumn& pc_a, const ProductColumn& pc_b, const Rational& alpha,
                               const Rational& C, int K) {
  if (alpha < 0) throw std::invalid_argument("Frostman exponent must be >= 0");
  if (C <= 0) throw std::invalid_argument("Frostman constant must be > 0");
  if (pc_a.n != pc_b.n) throw std::invalid_argument("product columns come from different n");
  if (K < 0 || K > std::min(pc_a.m, pc_b.m)) throw std::invalid_argument("Frostman check needs 0 <= K <= m");
  FrostmanVerdict out;
  for (int k = 0; k <= K && out.holds; ++k) {
    for (int t = 1; t <= pc_a.n; ++t) {
      ++out.instances;
      const Rational a = measure_of_interval(pc_a, k, t);
      const Rational b = measure_of_interval(pc_b, k, t);
      bool ok;
      if (sgn(a) == 0) {
        ok = true;
      } else if (sgn(alpha) == 0) {
        ok = a <= C;
      } else if (sgn(b) == 0) {
        ok = false;
      } else {
        ok = compare_frostman(a, b, alpha, C) <= 0;
      }
      if (!ok) {
        out = {false, out.instances, k, t};
        break;
      }
    }
  }
  return out;
}

Rational frostman_constant(const ProductColumn& pc_a, const ProductColumn& pc_b, const Rational& alpha, int K) {
  if (alpha < 0) throw std::invalid_argument("Frostman exponent must be >= 0");
  const mpfr_prec_t prec = kStartPrecision;
  Real best(prec);
  mpfr_set_zero(best.get(), 1);
  for (int k = 0; k <= K; ++k) {
    for (int t = 1; t <= pc_a.n; ++t) {
      const Rational a = measure_of_interval(pc_a, k, t);
      const Rational b = measure_of_interval(pc_b, k, t);
      if (sgn(a) == 0) continue;
      if (sgn(b) == 0) {
        if (sgn(alpha) == 0) continue;
        throw std::domain_error("no finite Frostman constant: lambda_b vanishes where lambda_a does not");
      }
      // Upper bound of exp(ln a - alpha ln b).
      Interval la(prec), lb(prec);
      log_enclosure(la, a, prec);
      log_enclosure(lb, b, prec);
      Real al(prec), v(prec);
      mpfr_set_q(al.get(), alpha.get_mpq_t(), MPFR_RNDU);
      mpfr_mul(v.get(), al.get(), lb.lo.get(), MPFR_RNDD);
      mpfr_sub(v.get(), la.hi.get(), v.get(), MPFR_RNDU);
      mpfr_exp(v.get(), v.get(), MPFR_RNDU);
      if (mpfr_greater_p(v.get(), best.get())) mpfr_set(best.get(), v.get(), MPFR_RNDU);
    }
  }
  Rational out;
  mpfr_get_q(out.get_mpq_t(), best.get());
  return out;
}

int argmin_interval(const ProductColumn& pc_i, const ProductColumn& pc_j, int k) {
  if (pc_i.n != pc_j.n) throw std::invalid_argument("product columns come from different n");
  if (k < 0 || k > std::min(pc_i.m, pc_j.m) - 2) throw std::invalid_argument("argmin needs 0 <= k <= m-2");
  int best = 1;
  Rational best_x = measure_of_interval(pc_i, k, 1);
  Rational best_y = measure_of_interval(pc_j, k, 1);
  require_open_unit(best_y, k, 1);
  for (int t = 2; t <= pc_i.n; ++t) {
    const Rational x = measure_of_interval(pc_i, k, t);
    const Rational y = measure_of_interval(pc_j, k, t);
    require_open_unit(y, k, t);
    if (compare_log_ratios(x, y, best_x, best_y) < 0) {
      best = t;
      best_x = x;
      best_y = y;
    }
  }
  return best;
}

}  // namespace ietlab
