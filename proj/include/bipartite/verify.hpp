#pragma once

// Self-verification sweep behind `bipcount verify`: every counting route is
// checked against every other one, and every bound against exact counts.

#include <bipartite/bounds.hpp>
#include <bipartite/core.hpp>
#include <bipartite/formulas.hpp>
#include <bipartite/oracle.hpp>
#include <bipartite/polya.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace bipartite {

struct Cell {
  Family family;
  int n;
  int r;
};

struct VerifyOptions {
  int max_bits = 16;           // oracle grid: n * r <= max_bits
  int max_side = 4;            // oracle grid: min(n, r) <= max_side
  unsigned workers = 0;        // oracle threads, 0 = hardware concurrency
  int property_cases = 2000;   // randomized canonical-form cases
  std::uint64_t seed = 0x5eed;
  std::optional<Cell> perturb; // add one to this cell of the recurrence counts
};

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

/// Counts as produced by the recurrence route, possibly perturbed.
using Counter = std::function<Integer(Family, int, int)>;

inline Counter make_counter(const std::optional<Cell>& perturb) {
  return [perturb](Family f, int n, int r) {
    Integer v = count(f, n, r).count.value();
    if (perturb && perturb->family == f && perturb->n == n && perturb->r == r) v += 1;
    return v;
  };
}

inline std::string format_cell(Family f, int n, int r) {
  return std::string(to_string(f)) + "(" + std::to_string(n) + "," + std::to_string(r) + ")";
}

namespace checks {

/// Each check returns an empty string on success or the first counterexample.
using Check = std::function<std::string()>;

inline std::string published_values(const Counter& counter, const OracleLimits& limits) {
  struct Expect {
    Family f;
    int n, r;
    long value;
  };
  static const Expect table[] = {
      {Family::X, 2, 1, 4},   {Family::X, 2, 2, 9},   {Family::X, 2, 3, 16}, {Family::X, 3, 2, 25},
      {Family::XY, 1, 2, 4},  {Family::XY, 2, 2, 12}, {Family::XY, 3, 2, 32},
  };
  for (const Expect& e : table) {
    const std::string where = format_cell(e.f, e.n, e.r);
    const Integer closed = rational_to_count(*closed_form_value(e.f, e.n, e.r)).value();
    if (closed != e.value) return where + ": closed form " + closed.get_str() + " != " + std::to_string(e.value);
    const Integer rec = counter(e.f, e.n, e.r);
    if (rec != e.value) return where + ": recurrence " + rec.get_str() + " != " + std::to_string(e.value);
    if (e.n * e.r <= limits.max_bits) {
      const Integer brute = enumerate_counts(e.n, e.r, e.f, limits).value();
      if (brute != e.value)
        return where + ": brute force " + brute.get_str() + " != " + std::to_string(e.value);
    }
  }
  return {};
}

inline std::string oracle_agreement(const Counter& counter, const VerifyOptions& opts,
                                    const OracleLimits& limits) {
  const int top = std::max(opts.max_bits, 1);
  for (int n = 0; n <= top; ++n)
    for (int r = 0; r <= top; ++r) {
      if (n * r > opts.max_bits || std::min(n, r) > opts.max_side) continue;
      Integer brute_x;
      for (Family f : all_families) {
        const Integer brute = enumerate_counts(n, r, f, limits).value();
        const Integer rec = counter(f, n, r);
        if (brute != rec)
          return format_cell(f, n, r) + ": recurrence " + rec.get_str() + " != brute force " +
                 brute.get_str();
        const Integer pure = count_via_burnside(f, n, r).value();
        if (brute != pure)
          return format_cell(f, n, r) + ": Burnside recurrence " + pure.get_str() +
                 " != brute force " + brute.get_str();
        if (f == Family::X) brute_x = brute;
      }
      const Integer brute_y_transposed = enumerate_counts(r, n, Family::Y, limits).value();
      if (brute_y_transposed != brute_x)
        return "brute force y(" + std::to_string(r) + "," + std::to_string(n) +
               ") != brute force " + format_cell(Family::X, n, r);
      if (n >= 1 && r >= 1) {
        const Integer left = enumerate_reduced(n, r, ReducedKind::LeftReduced, limits).value();
        if (left != reduced_left(n, r).value())
          return "reduced-left(" + std::to_string(n) + "," + std::to_string(r) + ") disagrees";
        const Integer both = enumerate_reduced(n, r, ReducedKind::BothReduced, limits).value();
        if (both != reduced_both(n, r).value())
          return "reduced-both(" + std::to_string(n) + "," + std::to_string(r) + ") disagrees";
      }
    }
  return {};
}

inline std::string closed_vs_recurrence() {
  auto compare = [](Family f, int n, int r, const ExactRational& closed) -> std::string {
    const Integer via_burnside = count_via_burnside(f, n, r).value();
    if (!is_integral(closed) || closed != via_burnside)
      return format_cell(f, n, r) + ": closed form " + to_string(closed) + " != " +
             via_burnside.get_str();
    return {};
  };
  std::map<std::string, std::array<int, 3>> branch_hits;
  std::string failure;
  auto run = [&](Family f, int n, int r, const ExactRational& closed, const char* branched,
                 int branch_var) {
    if (!failure.empty()) return;
    failure = compare(f, n, r, closed);
    if (branched) ++branch_hits[branched][static_cast<std::size_t>(branch_var % 3)];
  };
  namespace cf = closed_form;
  for (int r = 0; r <= 20; ++r) {
    run(Family::U, 1, r, cf::unlabeled_one(r), nullptr, 0);
    run(Family::U, 2, r, cf::unlabeled_two(r), nullptr, 0);
    run(Family::U, 3, r, cf::unlabeled_three(r), "unlabeled-three", r);
    run(Family::U, r, 3, cf::unlabeled_three(r), nullptr, 0);
  }
  for (int r = 0; r <= 12; ++r) {
    run(Family::X, 1, r, cf::left_one(r), nullptr, 0);
    run(Family::X, 2, r, cf::left_two(r), nullptr, 0);
    run(Family::X, 3, r, cf::left_three(r), "left-three", r);
    run(Family::Y, r, 3, cf::left_three(r), nullptr, 0);
  }
  // The three-column forms need n >= 2, so n runs to 13 to reach every
  // residue four times.
  for (int n = 1; n <= 13; ++n) {
    run(Family::X, n, 1, cf::left_by_one(n), nullptr, 0);
    run(Family::X, n, 2, cf::left_by_two(n), nullptr, 0);
    run(Family::XY, n, 2, cf::set_by_two(n), nullptr, 0);
    run(Family::XY, 2, n, cf::set_by_two(n), nullptr, 0);
    if (n >= 2) {
      run(Family::X, n, 3, cf::left_by_three(n), "left-by-three", n);
      run(Family::XY, n, 3, cf::set_by_three(n), "set-by-three", n);
      run(Family::XY, 3, n, cf::set_by_three(n), nullptr, 0);
    }
  }
  if (!failure.empty()) return failure;

  // Reduced forms against differences of Burnside values.
  for (int i = 1; i <= 13; ++i) {
    auto u = [](int a, int b) { return burnside_unlabeled(a, b).value(); };
    const Integer rx2 = u(i, 2) - u(i - 1, 2);
    const Integer rx3 = u(i, 3) - u(i - 1, 3);
    if (cf::reduced_left_two(i) != rx2) return "reduced-left(" + std::to_string(i) + ",2)";
    if (cf::reduced_left_three(i) != rx3) return "reduced-left(" + std::to_string(i) + ",3)";
    ++branch_hits["reduced-left-three"][static_cast<std::size_t>(i % 3)];
    const Integer rx1 = u(i, 1) - u(i - 1, 1);
    if (cf::reduced_both_two(i) != rx2 - rx1) return "reduced-both(" + std::to_string(i) + ",2)";
  }
  for (const auto& [name, hits] : branch_hits)
    for (int b = 0; b < 3; ++b)
      if (hits[static_cast<std::size_t>(b)] < 4)
        return name + ": residue " + std::to_string(b) + " exercised only " +
               std::to_string(hits[static_cast<std::size_t>(b)]) + " times";
  return {};
}

inline std::string unlabeled_sandwich() {
  for (int n = 1; n <= 12; ++n)
    for (int r = n + 1; r <= 12; ++r) {
      const Integer exact = count_unlabeled(n, r).value();
      if (!sandwich_u(n, r).contains(exact))
        return format_cell(Family::U, n, r) + ": " + exact.get_str() + " outside sandwich";
    }
  for (int n = 1; n <= 8; ++n) {
    const Integer exact = count_unlabeled(n, n).value();
    if (!(sandwich_u(n, n).lower <= exact))
      return format_cell(Family::U, n, n) + ": " + exact.get_str() + " below diagonal bound";
  }
  return {};
}

inline std::string bound_validity() {
  for (int n = 3; n <= 6; ++n)
    for (int r = 3; r <= 12; ++r) {
      const ExactRational exact(count_left_labeled(n, r).value());
      if (lower_x(n, r) > exact) return format_cell(Family::X, n, r) + ": lower sum exceeds count";
      if (n < r && upper_x_small_n(n, r) < exact)
        return format_cell(Family::X, n, r) + ": small-n upper below count";
    }
  for (int n = 2; n <= 6; ++n)
    for (int r = 2; r <= 12; ++r)
      if (upper_x_general(n, r) < ExactRational(count_left_labeled(n, r).value()))
        return format_cell(Family::X, n, r) + ": general upper below count";
  for (int n = 1; n <= 6; ++n)
    for (int r = 1; r <= 12; ++r) {
      const ExactRational exact(count_set_labeled(n, r).value());
      if (lower_xy(n, r) > exact || upper_xy(n, r) < exact)
        return format_cell(Family::XY, n, r) + ": count outside set-labeled bounds";
    }
  std::array<int, 4> cases{};
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      const ReducedInterval iv = bbar_x_interval(i, j);
      ++cases[static_cast<std::size_t>(iv.which)];
      if (!iv.interval.contains(reduced_left(i, j).value()))
        return "reduced-left(" + std::to_string(i) + "," + std::to_string(j) + ") outside interval";
    }
  for (int c : cases)
    if (c < 4) return "an interval case was exercised fewer than four times";
  return {};
}

inline std::string structural(const Counter& counter) {
  for (int n = 0; n <= 8; ++n)
    for (int r = 0; r <= 8; ++r) {
      const Integer u = counter(Family::U, n, r);
      const Integer x = counter(Family::X, n, r);
      const Integer y = counter(Family::Y, n, r);
      const Integer xy = counter(Family::XY, n, r);
      auto cell = [](Family f, int a, int b) { return format_cell(f, a, b); };
      auto differs = [&](Family f, Family g, int a, int b) {
        return cell(f, n, r) + " != " + cell(g, a, b);
      };
      if (!(u <= x && u <= y)) return cell(Family::U, n, r) + " exceeds a labeled count";
      if (!(x <= xy && y <= xy)) return cell(Family::XY, n, r) + " below a one-sided count";
      if (u != counter(Family::U, r, n)) return differs(Family::U, Family::U, r, n);
      if (xy != counter(Family::XY, r, n)) return differs(Family::XY, Family::XY, r, n);
      if (x != counter(Family::Y, r, n)) return differs(Family::X, Family::Y, r, n);
      for (Family f : all_families) {
        const Integer here = counter(f, n, r);
        if (n > 0 && counter(f, n - 1, r) > here) return format_cell(f, n, r) + " not monotone in n";
        if (r > 0 && counter(f, n, r - 1) > here) return format_cell(f, n, r) + " not monotone in r";
      }
    }
  return {};
}

inline std::string integrality(int max_side = 40) {
  namespace cf = closed_form;
  auto ok = [](const ExactRational& v) { return is_integral(v); };
  for (int k = 0; k <= max_side; ++k) {
    if (!ok(cf::unlabeled_two(k)) || !ok(cf::unlabeled_three(k)))
      return "unlabeled closed form at " + std::to_string(k);
    if (!ok(cf::left_two(k)) || !ok(cf::left_three(k))) return "left closed form at r=" + std::to_string(k);
    if (k >= 1) {
      if (!ok(cf::left_by_two(k)) || !ok(cf::set_by_two(k))) return "two-column form at n=" + std::to_string(k);
      if (!ok(cf::reduced_left_two(k)) || !ok(cf::reduced_left_three(k)) ||
          !ok(cf::reduced_both_two(k)))
        return "reduced form at i=" + std::to_string(k);
    }
    if (k >= 2 && (!ok(cf::left_by_three(k)) || !ok(cf::set_by_three(k))))
      return "three-column form at n=" + std::to_string(k);
  }
  return {};
}

/// Random row/column relabelings never change a canonical key, and canonical
/// forms are fixed points.
inline std::string canonical_invariance(int cases, std::uint64_t seed, const OracleLimits& limits) {
  std::mt19937_64 rng(seed);
  for (int c = 0; c < cases; ++c) {
    const int n = static_cast<int>(rng() % 4) + 1;
    const int r = static_cast<int>(rng() % 4) + 1;
    const Biadjacency m = Biadjacency::from_code(n, r, rng() & Biadjacency::row_mask(n * r));
    std::vector<int> alpha(static_cast<std::size_t>(n)), beta(static_cast<std::size_t>(r));
    std::iota(alpha.begin(), alpha.end(), 0);
    std::iota(beta.begin(), beta.end(), 0);
    std::shuffle(alpha.begin(), alpha.end(), rng);
    std::shuffle(beta.begin(), beta.end(), rng);
    const Biadjacency image = m.permuted(alpha, beta);
    const Biadjacency canon = canonical_form(m, limits);
    if (canonical_form(canon, limits) != canon) return "canonical form not idempotent for " + m.bit_string();
    if (canonical_form(image, limits) != canon) return "canonical form changed under relabeling of " + m.bit_string();
    // Relabelings that keep both supports fixed must keep every family key.
    const bool same_rows = image.row_support() == m.row_support();
    const bool same_cols = image.col_support() == m.col_support();
    for (Family f : all_families) {
      const bool must_match = f == Family::U || (f == Family::X && same_rows) ||
                              (f == Family::Y && same_cols) ||
                              (f == Family::XY && same_rows && same_cols);
      const bool match = classify(m, f, limits) == classify(image, f, limits);
      if (must_match != match)
        return std::string("family ") + std::string(to_string(f)) + " key mismatch for " + m.bit_string();
    }
  }
  return {};
}

}  // namespace checks

/// Runs every check, printing one PASS/FAIL line each. Returns true iff all pass.
inline bool run_verification(const VerifyOptions& opts, std::ostream& out,
                             std::vector<CheckResult>* results = nullptr) {
  const Counter counter = make_counter(opts.perturb);
  // The grid already caps min(n, r); the permutation limit only has to cover
  // the sizes the randomized check samples.
  const OracleLimits limits{opts.max_bits, std::max(opts.max_side, 4), opts.workers};
  const std::vector<std::pair<std::string, checks::Check>> plan = {
      {"published-values", [&] { return checks::published_values(counter, limits); }},
      {"oracle-agreement", [&] { return checks::oracle_agreement(counter, opts, limits); }},
      {"closed-form-vs-recurrence", [] { return checks::closed_vs_recurrence(); }},
      {"unlabeled-sandwich", [] { return checks::unlabeled_sandwich(); }},
      {"bound-validity", [] { return checks::bound_validity(); }},
      {"structural-invariants", [&] { return checks::structural(counter); }},
      {"closed-form-integrality", [] { return checks::integrality(); }},
      {"canonical-invariance",
       [&] { return checks::canonical_invariance(opts.property_cases, opts.seed, limits); }},
  };
  bool all = true;
  for (const auto& [name, check] : plan) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = check();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool passed = failure.empty();
    all = all && passed;
    std::ostringstream line;
    line << (passed ? "PASS " : "FAIL ") << name;
    if (!passed) line << ": " << failure;
    out << line.str() << '\n';
    if (results) results->push_back({name, passed, failure, secs});
  }
  out << (all ? "all checks passed" : "verification failed") << '\n';
  return all;
}

}  // namespace bipartite
