#pragma once

// Lower and upper bounds for the unlabeled, left-set-labeled and set-labeled
// counts. Every bound is an exact rational. The functions evaluate their sums
// for any arguments the arithmetic allows; the documented preconditions say
// where the bound is claimed to hold.

#include <bipartite/core.hpp>
#include <bipartite/formulas.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace bipartite {

namespace detail {

/// C(top, bottom) / denom as an exact rational.
inline ExactRational binom_over(const Integer& top, long bottom, const Integer& denom) {
  return make_rational(binomial(top, bottom), denom);
}

inline Integer two_pow_plus(long e, long add) {
  return pow2_integer(static_cast<unsigned long>(e)) + add;
}

inline void require_at_least(long v, long min, const char* what) {
  if (v < min) throw DomainError(what);
}

}  // namespace detail

/// 1 + sum_{i=1}^n C(n,i) C(i + 2^r - 2, i) / r!. Claimed for n, r >= 3.
inline ExactRational lower_x(int n, int r) {
  detail::require_at_least(n, 1, "lower_x needs n >= 1");
  detail::require_at_least(r, 1, "lower_x needs r >= 1");
  const Integer rf = factorial(r);
  ExactRational total = 1;
  for (long i = 1; i <= n; ++i)
    total += ExactRational(binomial(n, i)) * detail::binom_over(detail::two_pow_plus(r, i - 2), i, rf);
  return total;
}

struct PeakTerm {
  ExactRational term;   // largest summand of lower_x
  int i_star;           // its index; ties go to the larger index
  double i_estimate;    // stationary point of the continuous relaxation
};

/// Largest summand of lower_x by direct scan, plus the real-valued estimate
/// (1/4)[sqrt(a^2 + 6an + n^2) - a - n] + n/2 with a = 2^r - 2.
inline PeakTerm lower_x_at_imax(int n, int r) {
  detail::require_at_least(n, 1, "lower_x_at_imax needs n >= 1");
  detail::require_at_least(r, 1, "lower_x_at_imax needs r >= 1");
  const Integer rf = factorial(r);
  PeakTerm best{ExactRational(-1), 0, 0.0};
  for (long i = 1; i <= n; ++i) {
    const ExactRational term =
        ExactRational(binomial(n, i)) * detail::binom_over(detail::two_pow_plus(r, i - 2), i, rf);
    if (term >= best.term) {
      best.term = term;
      best.i_star = static_cast<int>(i);
    }
  }
  const double a = std::ldexp(1.0, r) - 2.0;
  const double nd = n;
  best.i_estimate = 0.25 * (std::sqrt(a * a + 6.0 * a * nd + nd * nd) - a - nd) + nd / 2.0;
  return best;
}

/// Upper bound on |B_x(n, r)| for n < r, from the unlabeled sandwich.
inline ExactRational upper_x_small_n(int n, int r) {
  detail::require_at_least(n, 1, "upper_x_small_n needs n >= 1");
  if (n >= r) throw DomainError("upper_x_small_n needs n < r");
  ExactRational total = 1;
  for (long i = 1; i <= n; ++i) {
    const ExactRational bracket =
        2 * detail::binom_over(detail::two_pow_plus(i, r - 1), r, factorial(i)) -
        detail::binom_over(detail::two_pow_plus(i - 1, r - 1), r, factorial(i - 1));
    total += ExactRational(binomial(n, i)) * bracket;
  }
  return total;
}

/// Upper bound on |B_x(n, r)| for n, r >= 2, bounding each reduced count by the
/// unlabeled count and the diagonal term by U(r+1, r).
inline ExactRational upper_x_general(int n, int r) {
  if (n < 2 || r < 2) throw DomainError("upper_x_general needs n, r >= 2");
  const Integer rf = factorial(r);
  ExactRational sum = 0;
  for (long i = 1; i <= r - 1; ++i)
    sum += ExactRational(binomial(n, i)) *
           detail::binom_over(detail::two_pow_plus(i, r - 1), r, factorial(i));
  sum += ExactRational(binomial(n, r)) * detail::binom_over(detail::two_pow_plus(r, r), r + 1, rf);
  for (long i = r + 1; i <= n; ++i)
    sum += ExactRational(binomial(n, i)) * detail::binom_over(detail::two_pow_plus(r, i - 1), i, rf);
  return 1 + 2 * sum;
}

/// Which inequality bbar_x_interval applied.
enum class IntervalCase { ILessJ, JBelowIMinusOne, JEqualsIMinusOne, JEqualsI };

struct ReducedInterval {
  BoundInterval interval;
  IntervalCase which;
};

/// Interval for the left-reduced count Rx(i, j), from the unlabeled sandwich
/// applied to U(i, j) - U(i - 1, j). The lower end may be negative.
inline ReducedInterval bbar_x_interval(int i, int j) {
  if (i < 1 || j < 1) throw DomainError("bbar_x_interval needs i, j >= 1");
  using detail::binom_over;
  using detail::two_pow_plus;
  if (i < j) {
    const ExactRational hi = binom_over(two_pow_plus(i, j - 1), j, factorial(i));
    const ExactRational lo = binom_over(two_pow_plus(i - 1, j - 1), j, factorial(i - 1));
    return {{hi - 2 * lo, ExactRational(2 * hi - lo)}, IntervalCase::ILessJ};
  }
  if (j < i - 1) {
    const Integer jf = factorial(j);
    const ExactRational a = binom_over(two_pow_plus(j, i - 1), i, jf);
    const ExactRational b = binom_over(two_pow_plus(j, i - 2), i - 1, jf);
    return {{a - 2 * b, ExactRational(2 * a - b)}, IntervalCase::JBelowIMinusOne};
  }
  if (j == i - 1) {
    const Integer f2 = factorial(i - 2);
    const Integer f1 = factorial(i - 1);
    const ExactRational lower = binom_over(two_pow_plus(i - 2, i - 1), i, f2) -
                                2 * binom_over(two_pow_plus(i - 2, i - 2), i - 1, f2);
    const ExactRational upper = 2 * binom_over(two_pow_plus(i - 1, i - 1), i, f1) -
                                binom_over(two_pow_plus(i - 1, i - 2), i - 1, 2 * f1);
    return {{lower, upper}, IntervalCase::JEqualsIMinusOne};
  }
  const Integer f = factorial(i);
  const Integer f1 = factorial(i - 1);
  const ExactRational lower = binom_over(two_pow_plus(i, i - 2), i - 1, f) -
                              2 * binom_over(two_pow_plus(i - 1, i - 2), i - 1, f1);
  const ExactRational upper = 2 * binom_over(two_pow_plus(i, i), i + 1, f) -
                              binom_over(two_pow_plus(i - 1, i - 1), i, f1);
  return {{lower, upper}, IntervalCase::JEqualsI};
}

/// Lower bound on |B_{x,y}(n, r)|: each both-reduced count is written as a
/// difference of left-reduced counts and bounded by the interval ends; the
/// terms with j in {i-1, i, i+1} are dropped.
inline ExactRational lower_xy(int n, int r) {
  detail::require_at_least(n, 1, "lower_xy needs n >= 1");
  detail::require_at_least(r, 1, "lower_xy needs r >= 1");
  using detail::binom_over;
  using detail::two_pow_plus;
  ExactRational total = 1;
  for (long i = 1; i <= n; ++i) {
    ExactRational inner = 0;
    for (long j = 1; j <= i - 2; ++j) {
      const Integer jf = factorial(j);
      const Integer jf1 = factorial(j - 1);
      const ExactRational bracket = binom_over(two_pow_plus(j, i - 1), i, jf) -
                                    2 * binom_over(two_pow_plus(j, i - 2), i - 1, jf) -
                                    2 * binom_over(two_pow_plus(j - 1, i - 1), i, jf1) +
                                    binom_over(two_pow_plus(j - 1, i - 2), i - 1, jf1);
      inner += ExactRational(binomial(r, j)) * bracket;
    }
    const Integer f = factorial(i);
    const Integer f1 = factorial(i - 1);
    for (long j = i + 2; j <= r; ++j) {
      const ExactRational bracket = binom_over(two_pow_plus(i, j - 1), j, f) -
                                    2 * binom_over(two_pow_plus(i - 1, j - 1), j, f1) -
                                    2 * binom_over(two_pow_plus(i, j - 2), j - 1, f) +
                                    binom_over(two_pow_plus(i - 1, j - 2), j - 1, f1);
      inner += ExactRational(binomial(r, j)) * bracket;
    }
    total += ExactRational(binomial(n, i)) * inner;
  }
  return total;
}

/// Upper bound on |B_{x,y}(n, r)| via Rxy(i, j) <= U(i, j).
inline ExactRational upper_xy(int n, int r) {
  detail::require_at_least(n, 1, "upper_xy needs n >= 1");
  detail::require_at_least(r, 1, "upper_xy needs r >= 1");
  using detail::binom_over;
  using detail::two_pow_plus;
  ExactRational sum = 0;
  for (long i = 1; i <= n; ++i) {
    const Integer f = factorial(i);
    ExactRational inner = 0;
    for (long j = 1; j <= i - 1; ++j)
      inner += ExactRational(binomial(r, j)) * binom_over(two_pow_plus(j, i - 1), i, factorial(j));
    inner += ExactRational(binomial(r, i)) * binom_over(two_pow_plus(i, i), i + 1, f);
    for (long j = i + 1; j <= r; ++j)
      inner += ExactRational(binomial(r, j)) * binom_over(two_pow_plus(i, j - 1), j, f);
    sum += ExactRational(binomial(n, i)) * inner;
  }
  return 1 + 2 * sum;
}

/// Two-sided estimate of U(n, r) for n < r, and the diagonal estimate for n = r.
inline BoundInterval sandwich_u(int n, int r) {
  detail::require_at_least(n, 1, "sandwich_u needs n >= 1");
  if (n > r) throw DomainError("sandwich_u needs n <= r (swap the arguments)");
  const Integer nf = factorial(n);
  if (n < r) {
    const ExactRational base = detail::binom_over(detail::two_pow_plus(n, r - 1), r, nf);
    return {base, ExactRational(2 * base)};
  }
  return {detail::binom_over(detail::two_pow_plus(n, n - 1), n, 2 * nf),
          ExactRational(2 * detail::binom_over(detail::two_pow_plus(n, n), n + 1, nf))};
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// One named bound; an absent end means that side is not bounded by it.
struct BoundEntry {
  std::string id;
  std::optional<ExactRational> lower;
  std::optional<ExactRational> upper;
};

struct BoundReport {
  Family family;
  int n;
  int r;
  std::vector<BoundEntry> bounds;
  std::optional<Count> exact;
};

/// Every bound that applies to (family, n, r), plus the exact count.
inline BoundReport bound_report(Family family, int n, int r, const BurnsideOptions& opts = {}) {
  if (n < 1 || r < 1) throw DomainError("bounds need n, r >= 1");
  BoundReport report{family, n, r, {}, std::nullopt};
  switch (family) {
    case Family::U: {
      const BoundInterval iv = n <= r ? sandwich_u(n, r) : sandwich_u(r, n);
      report.bounds.push_back({n == r ? "unlabeled-diagonal" : "unlabeled-sandwich", iv.lower, iv.upper});
      break;
    }
    case Family::X: {
      report.bounds.push_back({"left-lower-sum", lower_x(n, r), std::nullopt});
      report.bounds.push_back({"left-lower-peak-term", lower_x_at_imax(n, r).term, std::nullopt});
      if (n < r) report.bounds.push_back({"left-upper-small-n", std::nullopt, upper_x_small_n(n, r)});
      if (n >= 2 && r >= 2)
        report.bounds.push_back({"left-upper-general", std::nullopt, upper_x_general(n, r)});
      break;
    }
    case Family::XY:
      report.bounds.push_back({"set-lower", lower_xy(n, r), std::nullopt});
      report.bounds.push_back({"set-upper", std::nullopt, upper_xy(n, r)});
      break;
    case Family::Y:
      throw DomainError("no bounds defined for family y");
  }
  try {
    report.exact = count(family, n, r, opts).count;
  } catch (const LimitExceeded&) {
  }
  return report;
}

}  // namespace bipartite
