#pragma once

// Orbit counting for S_n x S_r acting on the n*r edge slots of a bipartite
// graph. A pair of permutations with cycle types (c_k) and (d_l) fixes exactly
// 2^(sum_{k,l} gcd(k,l) c_k d_l) edge sets, so the number of unlabeled graphs
// is the class-size weighted average of that over all cycle-type pairs.

#include <bipartite/core.hpp>

#include <algorithm>
#include <numeric>
#include <thread>
#include <utility>
#include <vector>

namespace bipartite {

/// Cycle type of a permutation of m points, with its conjugacy class size.
struct CycleType {
  std::vector<int> parts;               // nonincreasing
  std::vector<std::pair<int, int>> multiplicities;  // (k, c_k) for each distinct part k
  Integer class_size;

  int degree() const { return std::accumulate(parts.begin(), parts.end(), 0); }
};

namespace detail {

inline void build_partitions(int remaining, int max_part, std::vector<int>& current,
                             std::vector<CycleType>& out, int m) {
  if (remaining == 0) {
    CycleType t;
    t.parts = current;
    Integer denom = 1;
    for (std::size_t i = 0; i < current.size();) {
      std::size_t j = i;
      while (j < current.size() && current[j] == current[i]) ++j;
      const int k = current[i];
      const int c = static_cast<int>(j - i);
      t.multiplicities.emplace_back(k, c);
      Integer kc;
      mpz_ui_pow_ui(kc.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(c));
      denom *= kc * factorial(c);
      i = j;
    }
    t.class_size = factorial(m) / denom;
    out.push_back(std::move(t));
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    current.push_back(k);
    build_partitions(remaining - k, k, current, out, m);
    current.pop_back();
  }
}

}  // namespace detail

/// All integer partitions of m in reverse lexicographic order, starting with [m].
inline std::vector<CycleType> partitions(int m) {
  if (m < 0) throw DomainError("partitions of a negative number");
  std::vector<CycleType> out;
  std::vector<int> current;
  detail::build_partitions(m, m, current, out, m);
  return out;
}

struct BurnsideOptions {
  int partition_limit = 60;  // max n + r
  unsigned workers = 1;      // 0 = hardware concurrency
};

/// Exact number of unlabeled (n, r)-bipartite graphs.
inline Count burnside_unlabeled(int n, int r, const BurnsideOptions& opts = {}) {
  if (n < 0 || r < 0) throw DomainError("negative vertex count");
  if (n + r > opts.partition_limit)
    throw LimitExceeded("n + r = " + std::to_string(n + r) + " exceeds partition limit " +
                        std::to_string(opts.partition_limit));

  const std::vector<CycleType> left = partitions(n);
  const std::vector<CycleType> right = partitions(r);

  const int side = std::max(n, r) + 1;
  std::vector<int> gcd_table(static_cast<std::size_t>(side * side));
  for (int a = 0; a < side; ++a)
    for (int b = 0; b < side; ++b) gcd_table[static_cast<std::size_t>(a * side + b)] = std::gcd(a, b);

  auto partial_sum = [&](std::size_t begin, std::size_t end) {
    Integer total = 0;
    Integer inner;
    Integer term;
    for (std::size_t p = begin; p < end; ++p) {
      inner = 0;
      for (const CycleType& sigma : right) {
        unsigned long exponent = 0;
        for (auto [k, ck] : left[p].multiplicities)
          for (auto [l, dl] : sigma.multiplicities)
            exponent += static_cast<unsigned long>(gcd_table[static_cast<std::size_t>(k * side + l)]) *
                        static_cast<unsigned long>(ck) * static_cast<unsigned long>(dl);
        mpz_mul_2exp(term.get_mpz_t(), sigma.class_size.get_mpz_t(), exponent);
        inner += term;
      }
      total += left[p].class_size * inner;
    }
    return total;
  };

  unsigned workers = opts.workers == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                       : opts.workers;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, left.size()));

  Integer sum = 0;
  if (workers <= 1) {
    sum = partial_sum(0, left.size());
  } else {
    std::vector<Integer> partials(workers);
    {
      std::vector<std::jthread> threads;
      const std::size_t chunk = (left.size() + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        const std::size_t b = std::min(left.size(), w * chunk);
        const std::size_t e = std::min(left.size(), b + chunk);
        threads.emplace_back([&, w, b, e] { partials[w] = partial_sum(b, e); });
      }
    }
    for (const Integer& x : partials) sum += x;
  }

  const Integer group_order = factorial(n) * factorial(r);
  if (!mpz_divisible_p(sum.get_mpz_t(), group_order.get_mpz_t()))
    throw NonIntegerResult("fixed-point sum not divisible by group order at (" +
                           std::to_string(n) + "," + std::to_string(r) + ")");
  return Count(Integer(sum / group_order));
}

}  // namespace bipartite
