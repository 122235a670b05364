#pragma once

// Brute-force ground truth: enumerate every n x r biadjacency matrix, reduce
// each to a canonical key for the requested equivalence, and count distinct
// keys. Deliberately independent of formulas.hpp and polya.hpp.

#include <bipartite/biadjacency.hpp>
#include <bipartite/core.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace bipartite {

struct OracleLimits {
  int max_bits = 16;       // n * r, i.e. 2^(n r) matrices
  int max_perm_side = 6;   // largest side whose permutations are enumerated
  unsigned workers = 1;    // 0 = hardware concurrency
};

namespace detail {

inline std::uint64_t permute_row(std::uint64_t key, int width, const std::vector<int>& perm) {
  std::uint64_t out = 0;
  for (int j = 0; j < width; ++j) out = (out << 1) | ((key >> (width - 1 - perm[j])) & 1u);
  return out;
}

/// Minimum over column permutations of the row-sorted row keys.
inline std::vector<std::uint64_t> min_over_column_perms(std::span<const std::uint64_t> rows,
                                                        int width) {
  std::vector<int> perm(static_cast<std::size_t>(width));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> best(rows.begin(), rows.end());
  std::sort(best.begin(), best.end());
  std::vector<std::uint64_t> scratch(rows.size());
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (std::size_t i = 0; i < rows.size(); ++i) scratch[i] = permute_row(rows[i], width, perm);
    std::sort(scratch.begin(), scratch.end());
    if (scratch < best) best.swap(scratch);
  }
  return best;
}

}  // namespace detail

/// Canonical representative of a matrix under arbitrary row and column
/// permutations: the lexicographically least row-major bit string over all
/// column permutations with rows sorted. Permutations are taken on the smaller
/// side, so when r > n the result is the canonical form of the transpose (an
/// r x n matrix). Idempotent.
inline Biadjacency canonical_form(const Biadjacency& m, const OracleLimits& limits = {}) {
  if (m.cols() > m.rows()) return canonical_form(m.transposed(), limits);
  if (m.cols() > limits.max_perm_side)
    throw LimitExceeded("canonicalization needs " + std::to_string(m.cols()) +
                        "! permutations; permutation side limit is " +
                        std::to_string(limits.max_perm_side));
  const auto rows = detail::min_over_column_perms(m.row_keys(), m.cols());
  return Biadjacency::from_rows(m.cols(), rows);
}

/// Identity of an equivalence class. Supports are bitmasks over the original
/// vertex indices and are only populated for the families that fix them.
struct CanonicalKey {
  Family family = Family::U;
  std::uint64_t support_rows = 0;
  std::uint64_t support_cols = 0;
  int rows = 0;
  int cols = 0;
  std::vector<std::uint64_t> canon;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull ^ static_cast<std::uint64_t>(k.family);
    auto mix = [&h](std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(k.support_rows);
    mix(k.support_cols);
    mix(static_cast<std::uint64_t>(k.rows) << 32 | static_cast<std::uint64_t>(k.cols));
    for (std::uint64_t v : k.canon) mix(v);
    return static_cast<std::size_t>(h);
  }
};

inline CanonicalKey classify(const Biadjacency& m, Family family, const OracleLimits& limits = {}) {
  const std::uint64_t all_rows = Biadjacency::row_mask(m.rows());
  const std::uint64_t all_cols = Biadjacency::row_mask(m.cols());
  CanonicalKey key;
  key.family = family;
  const bool fix_rows = family == Family::X || family == Family::XY;
  const bool fix_cols = family == Family::Y || family == Family::XY;
  if (fix_rows) key.support_rows = m.row_support();
  if (fix_cols) key.support_cols = m.col_support();
  const Biadjacency sub = (fix_rows || fix_cols)
                              ? m.select(fix_rows ? key.support_rows : all_rows,
                                         fix_cols ? key.support_cols : all_cols)
                              : m;
  const Biadjacency canon = canonical_form(sub, limits);
  key.rows = canon.rows();
  key.cols = canon.cols();
  key.canon.assign(canon.row_keys().begin(), canon.row_keys().end());
  return key;
}

enum class ReducedKind { LeftReduced, BothReduced };

namespace detail {

inline void check_oracle_budget(int n, int r, const OracleLimits& limits) {
  if (n < 0 || r < 0) throw DomainError("negative vertex count");
  if (n * r > limits.max_bits || n * r > 62)
    throw LimitExceeded("2^" + std::to_string(n * r) + " matrices exceeds bit budget " +
                        std::to_string(limits.max_bits));
  if (std::min(n, r) > limits.max_perm_side)
    throw LimitExceeded("smaller side " + std::to_string(std::min(n, r)) +
                        " exceeds permutation side limit " +
                        std::to_string(limits.max_perm_side));
}

using ClassMap = std::unordered_map<CanonicalKey, std::uint64_t, CanonicalKeyHash>;

/// Classes over all matrices accepted by `keep`, each mapped to the smallest
/// matrix code in it. Identical for any worker count.
template <class Keep>
ClassMap enumerate_classes(int n, int r, Family family, const OracleLimits& limits, Keep keep) {
  check_oracle_budget(n, r, limits);
  const std::uint64_t total = std::uint64_t{1} << (n * r);
  unsigned workers = limits.workers == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                         : limits.workers;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

  auto scan = [&](std::uint64_t begin, std::uint64_t end, ClassMap& out) {
    for (std::uint64_t code = begin; code < end; ++code) {
      const Biadjacency m = Biadjacency::from_code(n, r, code);
      if (!keep(m)) continue;
      auto [it, inserted] = out.try_emplace(classify(m, family, limits), code);
      if (!inserted && code < it->second) it->second = code;
    }
  };

  std::vector<ClassMap> partial(workers);
  if (workers <= 1) {
    scan(0, total, partial[0]);
  } else {
    std::vector<std::jthread> threads;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t b = std::min(total, w * chunk);
      const std::uint64_t e = std::min(total, b + chunk);
      threads.emplace_back([&, w, b, e] { scan(b, e, partial[w]); });
    }
  }
  ClassMap merged = std::move(partial[0]);
  for (std::size_t w = 1; w < partial.size(); ++w)
    for (auto& [key, code] : partial[w]) {
      auto [it, inserted] = merged.try_emplace(key, code);
      if (!inserted && code < it->second) it->second = code;
    }
  return merged;
}

}  // namespace detail

/// Number of equivalence classes of n x r matrices under the family's relation.
inline Count enumerate_counts(int n, int r, Family family, const OracleLimits& limits = {}) {
  const auto classes =
      detail::enumerate_classes(n, r, family, limits, [](const Biadjacency&) { return true; });
  return Count(static_cast<unsigned long>(classes.size()));
}

/// Unlabeled classes of i x j matrices with no zero row (and, for BothReduced,
/// no zero column).
inline Count enumerate_reduced(int i, int j, ReducedKind kind, const OracleLimits& limits = {}) {
  const std::uint64_t full_rows = Biadjacency::row_mask(i);
  const std::uint64_t full_cols = Biadjacency::row_mask(j);
  const auto classes = detail::enumerate_classes(i, j, Family::U, limits, [&](const Biadjacency& m) {
    if (m.row_support() != full_rows) return false;
    return kind == ReducedKind::LeftReduced || m.col_support() == full_cols;
  });
  return Count(static_cast<unsigned long>(classes.size()));
}

/// One concrete member of a class: the member with the lexicographically
/// smallest row-major bit string.
struct ClassRepresentative {
  Family family;
  int n;
  int r;
  std::optional<std::vector<int>> support_rows;
  std::optional<std::vector<int>> support_cols;
  std::string bits;
};

inline std::vector<int> mask_to_indices(std::uint64_t mask) {
  std::vector<int> out;
  for (int b = 0; b < 64; ++b)
    if ((mask >> b) & 1u) out.push_back(b);
  return out;
}

/// Every class of n x r matrices under the family's relation, sorted by bits.
inline std::vector<ClassRepresentative> class_representatives(int n, int r, Family family,
                                                              const OracleLimits& limits = {}) {
  const auto classes =
      detail::enumerate_classes(n, r, family, limits, [](const Biadjacency&) { return true; });
  std::vector<std::uint64_t> codes;
  codes.reserve(classes.size());
  for (const auto& [key, code] : classes) codes.push_back(code);
  std::sort(codes.begin(), codes.end());

  std::vector<ClassRepresentative> out;
  out.reserve(codes.size());
  const bool fix_rows = family == Family::X || family == Family::XY;
  const bool fix_cols = family == Family::Y || family == Family::XY;
  for (std::uint64_t code : codes) {
    const Biadjacency m = Biadjacency::from_code(n, r, code);
    ClassRepresentative rep{family, n, r, std::nullopt, std::nullopt, m.bit_string()};
    if (fix_rows) rep.support_rows = mask_to_indices(m.row_support());
    if (fix_cols) rep.support_cols = mask_to_indices(m.col_support());
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace bipartite
