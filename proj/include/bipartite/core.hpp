#pragma once

// Exact arithmetic, domain types and small combinatorial primitives shared by
// every counting routine. Big integers and rationals are GMP values; nothing on
// a counting path touches floating point.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bipartite {

using Integer = mpz_class;
using ExactRational = mpq_class;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rational that was expected to be integral was not.
class NonIntegerResult : public error {
 public:
  using error::error;
};

/// An enumeration or summation budget would be exceeded.
class LimitExceeded : public error {
 public:
  using error::error;
};

/// Arguments outside the domain of an operation.
class DomainError : public error {
 public:
  using error::error;
};

/// Two independent evaluation routes disagreed. Always an internal bug.
class FormulaMismatch : public error {
 public:
  using error::error;
};

// ---------------------------------------------------------------------------
// Count
// ---------------------------------------------------------------------------

/// Non-negative arbitrary precision integer holding a class count.
class Count {
 public:
  Count() = default;
  explicit Count(Integer v) : value_(std::move(v)) {
    if (sgn(value_) < 0) throw DomainError("negative count " + value_.get_str());
  }
  explicit Count(unsigned long v) : value_(v) {}

  const Integer& value() const noexcept { return value_; }
  std::string str() const { return value_.get_str(); }

  friend bool operator==(const Count& a, const Count& b) { return a.value_ == b.value_; }
  friend std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.value_; }
  friend std::strong_ordering operator<=>(const Count& a, const Count& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  Integer value_{0};
};

// ---------------------------------------------------------------------------
// Family
// ---------------------------------------------------------------------------

/// Which equivalence relation identifies two biadjacency matrices.
enum class Family { U, X, Y, XY };

inline constexpr std::array<Family, 4> all_families{Family::U, Family::X, Family::Y,
                                                    Family::XY};

constexpr std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::U: return "u";
    case Family::X: return "x";
    case Family::Y: return "y";
    case Family::XY: return "xy";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  for (Family f : all_families)
    if (to_string(f) == s) return f;
  throw DomainError("unknown family '" + std::string(s) + "' (expected u|x|y|xy)");
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

inline ExactRational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DomainError("zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integral(const ExactRational& x) { return x.get_den() == 1; }

inline Count rational_to_count(const ExactRational& x) {
  if (!is_integral(x)) throw NonIntegerResult("non-integral value " + x.get_str());
  return Count(Integer(x.get_num()));
}

/// "p/q", or just "p" when the denominator is one.
inline std::string to_string(const ExactRational& x) { return x.get_str(); }

/// Closed bound interval; an absent upper end means unbounded above.
struct BoundInterval {
  ExactRational lower;
  std::optional<ExactRational> upper;

  bool contains(const ExactRational& v) const {
    return lower <= v && (!upper || v <= *upper);
  }
  bool contains(const Integer& v) const { return contains(ExactRational(v)); }
};

// ---------------------------------------------------------------------------
// Combinatorial primitives
// ---------------------------------------------------------------------------

inline Integer factorial(long k) {
  if (k < 0) throw DomainError("factorial of negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

/// C(a, b), zero when b < 0 or b > a.
inline Integer binomial(const Integer& a, long b) {
  if (sgn(a) < 0) throw DomainError("binomial with negative top " + a.get_str());
  if (b < 0 || cmp(a, b) < 0) return 0;
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
  return out;
}

inline Integer binomial(long a, long b) { return binomial(Integer(a), b); }

inline Integer pow2_integer(unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

/// 2^e for any integer e; negative exponents give 1/2^|e|.
inline ExactRational pow2(long e) {
  if (e >= 0) return ExactRational(pow2_integer(static_cast<unsigned long>(e)));
  return make_rational(1, pow2_integer(static_cast<unsigned long>(-e)));
}

constexpr long neg_one_pow(long e) noexcept { return (e % 2 == 0) ? 1 : -1; }

/// Sum of coeffs[k] * x^k evaluated Horner style.
inline ExactRational horner(std::initializer_list<ExactRational> coeffs, const ExactRational& x) {
  ExactRational acc = 0;
  for (auto it = std::rbegin(coeffs); it != std::rend(coeffs); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace bipartite
