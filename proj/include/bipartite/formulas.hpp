#pragma once

// Exact class counts for the four families.
//
//   unlabeled U(n, r)     closed forms for min(n, r) <= 3, Burnside otherwise
//   left-reduced          Rx(i, r)  = U(i, r) - U(i - 1, r)
//   left-set-labeled      X(n, r)   = 1 + sum_i C(n, i) Rx(i, r)
//   both-reduced          Rxy(i, j) = Rx(i, j) - Rx(i, j - 1)
//   set-labeled           XY(n, r)  = 1 + sum_{i,j} C(n, i) C(r, j) Rxy(i, j)
//   right-set-labeled     Y(n, r)   = X(r, n)
//
// Whenever a closed form covers the requested cell the recurrence result is
// checked against it and a disagreement throws FormulaMismatch.

#include <bipartite/core.hpp>
#include <bipartite/polya.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bipartite {

enum class Method { ClosedForm, Recurrence, Burnside, BruteForce };

constexpr std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::ClosedForm: return "closed-form";
    case Method::Recurrence: return "recurrence";
    case Method::Burnside: return "burnside";
    case Method::BruteForce: return "brute-force";
  }
  return "?";
}

struct CountResult {
  Count count;
  Method method;
};

// ---------------------------------------------------------------------------
// Closed forms. Each takes the free parameter and returns the exact rational
// value of the formula; callers convert with rational_to_count.
// ---------------------------------------------------------------------------
namespace closed_form {

namespace detail {

inline ExactRational q(long num, long den = 1) { return make_rational(num, den); }

inline void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace detail

inline ExactRational unlabeled_one(long r) { return ExactRational(r + 1); }

inline ExactRational unlabeled_two(long r) {
  using detail::q;
  const long s = neg_one_pow(r);
  return horner({q(45, 2) + q(3, 2) * s, q(34), q(15), q(2)}, q(r)) / 24;
}

/// Helper term shared by every three-vertex formula.
inline ExactRational unlabeled_three_base(long r) {
  using detail::q;
  const long s = neg_one_pow(r);
  const ExactRational quartic = horner({q(15 * s + 225), q(352), q(172), q(32), q(2)}, q(r));
  return ExactRational(binomial(r + 7, r)) + 3 * q(r + 4) * quartic / 960;
}

namespace detail {
// r^3 + 12 r^2 + b r + c, with (b, c) chosen by r mod 3.
inline ExactRational three_branch_cubic(long r) {
  static constexpr long lin[3] = {45, 45, 39};
  static constexpr long cst[3] = {54, 50, 28};
  const long m = r % 3;
  return horner({q(cst[m]), q(lin[m]), q(12), q(1)}, q(r));
}
}  // namespace detail

inline ExactRational unlabeled_three(long r) {
  return (unlabeled_three_base(r) + 2 * detail::three_branch_cubic(r) / 54) / 6;
}

inline ExactRational reduced_left_one(long /*i*/) { return ExactRational(1); }

inline ExactRational reduced_left_two(long i) {
  using detail::q;
  return horner({q(21 + 3 * neg_one_pow(i)), q(24), q(6)}, q(i)) / 24;
}

inline ExactRational reduced_left_three(long i) {
  using detail::q;
  detail::require(i >= 1, "reduced three-column form needs i >= 1");
  const long s = neg_one_pow(i);
  static constexpr long lin[3] = {54, 42, 30};
  static constexpr long cst[3] = {108, 60, 24};
  const long m = i % 3;
  const ExactRational quartic =
      horner({q(105 * s + 855), q(1330 + 30 * s), q(680), q(140), q(10)}, q(i)) / 320;
  const ExactRational quad = horner({q(cst[m]), q(lin[m]), q(6)}, q(i)) / 54;
  return (ExactRational(binomial(i + 6, 6)) + quartic + quad) / 6;
}

inline ExactRational left_one(long r) { return ExactRational(r + 1); }

inline ExactRational left_two(long r) {
  using detail::q;
  const long s = neg_one_pow(r);
  return horner({q(45, 2) + q(3, 2) * s, q(58), q(15), q(2)}, q(r)) / 24;
}

inline ExactRational left_three(long r) {
  using detail::q;
  const long s = neg_one_pow(r);
  return unlabeled_three(r) + horner({q(-3 + 3 * s), q(68), q(30), q(4)}, q(r)) / 24;
}

inline ExactRational left_by_one(long n) { return pow2(n); }

inline ExactRational left_by_two(long n) {
  detail::require(n >= 1, "two-column left-labeled form needs n >= 1");
  const ExactRational nn(n);
  return nn * (nn + 1) * pow2(n - 4) + nn * pow2(n - 1) + 7 * pow2(n - 3);
}

inline ExactRational left_by_three(long n) {
  detail::require(n >= 2, "three-column left-labeled form needs n >= 2");
  const Integer p = pow2_integer(static_cast<unsigned long>(n));
  const Integer nn = n;
  Integer head = 3 * p * nn * nn * nn * nn * nn * nn + 171 * p * nn * nn * nn * nn * nn +
                 3765 * p * nn * nn * nn * nn + 41265 * p * nn * nn * nn +
                 14787 * (p * 16) * nn * nn;
  Integer tail;
  switch (n % 3) {
    case 0: {
      const long s = neg_one_pow(n / 3);
      tail = 12 * (2560 * s + 55077 * p) * nn + 880 * (128 * s + 763 * p);
      break;
    }
    case 1: {
      const long s = neg_one_pow((n + 2) / 3);
      tail = 165231 * (p * 4) * nn - 80 * (1280 * s - 8393 * p);
      break;
    }
    default: {
      const long s = neg_one_pow((n + 1) / 3);
      tail = 12 * (2560 * s + 55077 * p) * nn + 80 * (128 * s + 8393 * p);
      break;
    }
  }
  return make_rational(head + tail, 829440);
}

inline ExactRational reduced_both_two(long i) {
  using detail::q;
  return horner({q(-3 + 3 * neg_one_pow(i)), q(24), q(6)}, q(i)) / 24;
}

inline ExactRational set_by_two(long n) {
  detail::require(n >= 1, "two-column set-labeled form needs n >= 1");
  const ExactRational nn(n);
  return detail::q(15, 8) * pow2(n) + pow2(n - 1) * nn + pow2(n - 4) * nn * (nn + 1) - 1;
}

inline ExactRational set_by_three(long n) {
  detail::require(n >= 2, "three-column set-labeled form needs n >= 2");
  const Integer p = pow2_integer(static_cast<unsigned long>(n));
  const Integer nn = n;
  Integer head = 3 * p * nn * nn * nn * nn * nn * nn + 171 * p * nn * nn * nn * nn * nn +
                 3765 * p * nn * nn * nn * nn + 41265 * p * nn * nn * nn +
                 21267 * (p * 16) * nn * nn;
  Integer tail;
  switch (n % 3) {
    case 0: {
      const long s = neg_one_pow(n / 3);
      tail = 12 * (2560 * s + 132837 * p) * nn + 80 * (1408 * s + 26537 * p - 20736);
      break;
    }
    case 1: {
      const long s = neg_one_pow((n + 2) / 3);
      tail = 398511 * (p * 4) * nn - 80 * (1280 * s - 26537 * p + 20736);
      break;
    }
    default: {
      const long s = neg_one_pow((n + 1) / 3);
      tail = 12 * (2560 * s + 132837 * p) * nn + 80 * (128 * s + 26537 * p - 20736);
      break;
    }
  }
  return make_rational(head + tail, 829440);
}

}  // namespace closed_form

/// Closed-form value for the family at (n, r), if one of the known formulas
/// covers that cell.
inline std::optional<ExactRational> closed_form_value(Family f, int n, int r) {
  namespace cf = closed_form;
  if (n < 0 || r < 0) throw DomainError("negative vertex count");
  if (n == 0 || r == 0) return ExactRational(1);
  switch (f) {
    case Family::U: {
      const int small = std::min(n, r);
      const int large = std::max(n, r);
      if (small == 1) return cf::unlabeled_one(large);
      if (small == 2) return cf::unlabeled_two(large);
      if (small == 3) return cf::unlabeled_three(large);
      return std::nullopt;
    }
    case Family::X:
      if (n == 1) return cf::left_one(r);
      if (n == 2) return cf::left_two(r);
      if (n == 3) return cf::left_three(r);
      if (r == 1) return cf::left_by_one(n);
      if (r == 2) return cf::left_by_two(n);
      if (r == 3) return cf::left_by_three(n);
      return std::nullopt;
    case Family::Y:
      return closed_form_value(Family::X, r, n);
    case Family::XY:
      if (r == 2) return cf::set_by_two(n);
      if (r == 3 && n >= 2) return cf::set_by_three(n);
      if (n == 2) return cf::set_by_two(r);
      if (n == 3 && r >= 2) return cf::set_by_three(r);
      return std::nullopt;
  }
  return std::nullopt;
}

inline std::optional<Count> closed_form_count(Family f, int n, int r) {
  auto v = closed_form_value(f, n, r);
  if (!v) return std::nullopt;
  return rational_to_count(*v);
}

/// Where unlabeled counts come from inside the recurrences.
enum class UnlabeledSource { Auto, BurnsideOnly };

namespace detail {

inline void require_nonnegative(int n, int r) {
  if (n < 0 || r < 0) throw DomainError("negative vertex count");
}

inline std::string cell(Family f, int n, int r) {
  return std::string(to_string(f)) + "(" + std::to_string(n) + "," + std::to_string(r) + ")";
}

inline void cross_check(const std::string& what, const Integer& recurrence,
                        const std::optional<ExactRational>& closed) {
  if (!closed) return;
  const Count expected = rational_to_count(*closed);
  if (expected.value() != recurrence)
    throw FormulaMismatch(what + ": closed form " + expected.str() + " != recurrence " +
                          recurrence.get_str());
}

inline Integer unlabeled(int n, int r, UnlabeledSource src, const BurnsideOptions& opts) {
  if (n == 0 || r == 0) return 1;
  if (src == UnlabeledSource::Auto && std::min(n, r) <= 3)
    return rational_to_count(*closed_form_value(Family::U, n, r)).value();
  return burnside_unlabeled(n, r, opts).value();
}

/// U(i, j) for 0 <= i <= n, 0 <= j <= r.
class UnlabeledGrid {
 public:
  UnlabeledGrid(int n, int r, UnlabeledSource src, const BurnsideOptions& opts)
      : r_(r), values_(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(r + 1)) {
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= r; ++j) {
        if (j <= n && i <= r && j < i) {
          values_[index(i, j)] = values_[index(j, i)];
        } else {
          values_[index(i, j)] = unlabeled(i, j, src, opts);
        }
      }
  }
  const Integer& operator()(int i, int j) const { return values_[index(i, j)]; }

  /// Rx(i, j); zero when j = 0 and i >= 1.
  Integer reduced_left(int i, int j) const { return (*this)(i, j) - (*this)(i - 1, j); }

  Integer reduced_both(int i, int j) const {
    return reduced_left(i, j) - reduced_left(i, j - 1);
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(r_ + 1) +
           static_cast<std::size_t>(j);
  }
  int r_;
  std::vector<Integer> values_;
};

inline Integer left_labeled(int n, int r, const UnlabeledGrid& grid) {
  Integer total = 1;
  for (int i = 1; i <= n; ++i) total += binomial(n, i) * grid.reduced_left(i, r);
  return total;
}

inline Integer set_labeled(int n, int r, const UnlabeledGrid& grid) {
  Integer total = 1;
  for (int i = 1; i <= n; ++i) {
    Integer row = 0;
    for (int j = 1; j <= r; ++j) row += binomial(r, j) * grid.reduced_both(i, j);
    total += binomial(n, i) * row;
  }
  return total;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public counting API
// ---------------------------------------------------------------------------

inline Count count_unlabeled(int n, int r, const BurnsideOptions& opts = {}) {
  detail::require_nonnegative(n, r);
  return Count(detail::unlabeled(n, r, UnlabeledSource::Auto, opts));
}

/// Unlabeled (i, r)-graphs in which every left vertex has positive degree.
inline Count reduced_left(int i, int r, const BurnsideOptions& opts = {}) {
  if (i < 1 || r < 0) throw DomainError("reduced_left needs i >= 1 and r >= 0");
  const Integer value = detail::unlabeled(i, r, UnlabeledSource::Auto, opts) -
                        detail::unlabeled(i - 1, r, UnlabeledSource::Auto, opts);
  namespace cf = closed_form;
  const std::string what = "reduced-left(" + std::to_string(i) + "," + std::to_string(r) + ")";
  if (r == 1) detail::cross_check(what, value, cf::reduced_left_one(i));
  if (r == 2) detail::cross_check(what, value, cf::reduced_left_two(i));
  if (r == 3) detail::cross_check(what, value, cf::reduced_left_three(i));
  return Count(value);
}

/// Unlabeled (i, j)-graphs without isolated vertices on either side.
inline Count reduced_both(int i, int j, const BurnsideOptions& opts = {}) {
  if (i < 1 || j < 1) throw DomainError("reduced_both needs i, j >= 1");
  const Integer prev = j == 1 ? Integer(0) : reduced_left(i, j - 1, opts).value();
  const Integer value = reduced_left(i, j, opts).value() - prev;
  const std::string what = "reduced-both(" + std::to_string(i) + "," + std::to_string(j) + ")";
  if (i == 1 || j == 1) detail::cross_check(what, value, ExactRational(1));
  if (j == 2) detail::cross_check(what, value, closed_form::reduced_both_two(i));
  if (i == 2) detail::cross_check(what, value, closed_form::reduced_both_two(j));
  return Count(value);
}

inline Count count_left_labeled(int n, int r, const BurnsideOptions& opts = {}) {
  detail::require_nonnegative(n, r);
  const detail::UnlabeledGrid grid(n, r, UnlabeledSource::Auto, opts);
  const Integer value = detail::left_labeled(n, r, grid);
  detail::cross_check(detail::cell(Family::X, n, r), value, closed_form_value(Family::X, n, r));
  return Count(value);
}

inline Count count_right_labeled(int n, int r, const BurnsideOptions& opts = {}) {
  return count_left_labeled(r, n, opts);
}

inline Count count_set_labeled(int n, int r, const BurnsideOptions& opts = {}) {
  detail::require_nonnegative(n, r);
  const detail::UnlabeledGrid grid(n, r, UnlabeledSource::Auto, opts);
  const Integer value = detail::set_labeled(n, r, grid);
  detail::cross_check(detail::cell(Family::XY, n, r), value,
                      closed_form_value(Family::XY, n, r));
  return Count(value);
}

/// Count for any family, recording which route produced it.
inline CountResult count(Family f, int n, int r, const BurnsideOptions& opts = {}) {
  detail::require_nonnegative(n, r);
  if (n == 0 || r == 0) return {Count(1ul), Method::ClosedForm};
  switch (f) {
    case Family::U:
      return {count_unlabeled(n, r, opts),
              std::min(n, r) <= 3 ? Method::ClosedForm : Method::Burnside};
    case Family::X: return {count_left_labeled(n, r, opts), Method::Recurrence};
    case Family::Y: return {count_right_labeled(n, r, opts), Method::Recurrence};
    case Family::XY: return {count_set_labeled(n, r, opts), Method::Recurrence};
  }
  throw DomainError("unknown family");
}

/// Same recurrences, but every unlabeled value comes from the Burnside sum and
/// no closed form is consulted.
inline Count count_via_burnside(Family f, int n, int r, const BurnsideOptions& opts = {}) {
  detail::require_nonnegative(n, r);
  if (f == Family::Y) std::swap(n, r);
  if (f == Family::U) return Count(detail::unlabeled(n, r, UnlabeledSource::BurnsideOnly, opts));
  const detail::UnlabeledGrid grid(n, r, UnlabeledSource::BurnsideOnly, opts);
  return Count(f == Family::XY ? detail::set_labeled(n, r, grid)
                               : detail::left_labeled(n, r, grid));
}

}  // namespace bipartite
