#pragma once

#include <bipartite/core.hpp>

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bipartite {

/// An n x r 0/1 matrix: row i is left vertex i, column j is right vertex j.
///
/// Each row is stored as a key with column 0 in the most significant of the
/// low r bits, so ordering rows as integers orders them lexicographically as
/// bit strings.
class Biadjacency {
 public:
  static constexpr int max_side = 64;

  Biadjacency() = default;
  Biadjacency(int n, int r) : n_(n), r_(r), rows_(check_shape(n, r), 0) {}

  /// Row-major '0'/'1' characters.
  static Biadjacency from_bits(int n, int r, std::string_view bits) {
    Biadjacency m(n, r);
    if (bits.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(r))
      throw DomainError("bit string length " + std::to_string(bits.size()) + " does not match " +
                        std::to_string(n) + "x" + std::to_string(r));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < r; ++j) {
        char c = bits[static_cast<std::size_t>(i * r + j)];
        if (c != '0' && c != '1') throw DomainError("bit string must contain only 0 and 1");
        m.set(i, j, c == '1');
      }
    return m;
  }

  /// Entry k = i*r + j is bit (n*r - 1 - k) of code; integer order of codes is
  /// lexicographic order of the row-major bit strings.
  static Biadjacency from_code(int n, int r, std::uint64_t code) {
    Biadjacency m(n, r);
    if (n * r > 64) throw LimitExceeded("matrix too large for a 64-bit code");
    const std::uint64_t mask = row_mask(r);
    for (int i = 0; i < n; ++i) m.rows_[i] = (code >> (r * (n - 1 - i))) & mask;
    return m;
  }

  /// Builds a matrix from row keys (column 0 most significant).
  static Biadjacency from_rows(int r, std::span<const std::uint64_t> keys) {
    Biadjacency m(static_cast<int>(keys.size()), r);
    const std::uint64_t mask = row_mask(r);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (keys[i] & ~mask) throw DomainError("row key wider than column count");
      m.rows_[i] = keys[i];
    }
    return m;
  }

  int rows() const noexcept { return n_; }
  int cols() const noexcept { return r_; }

  bool at(int i, int j) const { return (rows_[i] >> (r_ - 1 - j)) & 1u; }
  void set(int i, int j, bool v) {
    const std::uint64_t bit = std::uint64_t{1} << (r_ - 1 - j);
    rows_[i] = v ? (rows_[i] | bit) : (rows_[i] & ~bit);
  }

  std::uint64_t row_key(int i) const { return rows_[i]; }
  std::span<const std::uint64_t> row_keys() const noexcept { return rows_; }

  /// Bit i set iff left vertex i has nonzero degree.
  std::uint64_t row_support() const {
    std::uint64_t s = 0;
    for (int i = 0; i < n_; ++i)
      if (rows_[i] != 0) s |= std::uint64_t{1} << i;
    return s;
  }

  /// Bit j set iff right vertex j has nonzero degree.
  std::uint64_t col_support() const {
    std::uint64_t any = 0;
    for (std::uint64_t row : rows_) any |= row;
    std::uint64_t s = 0;
    for (int j = 0; j < r_; ++j)
      if ((any >> (r_ - 1 - j)) & 1u) s |= std::uint64_t{1} << j;
    return s;
  }

  std::uint64_t code() const {
    if (n_ * r_ > 64) throw LimitExceeded("matrix too large for a 64-bit code");
    std::uint64_t c = 0;
    for (int i = 0; i < n_; ++i) c = (r_ == 64 ? 0 : c << r_) | rows_[i];
    return c;
  }

  Biadjacency transposed() const {
    Biadjacency t(r_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < r_; ++j)
        if (at(i, j)) t.set(j, i, true);
    return t;
  }

  /// Image under the vertex bijections: edge (x, y) becomes
  /// (left_perm[x], right_perm[y]).
  Biadjacency permuted(std::span<const int> left_perm, std::span<const int> right_perm) const {
    if (left_perm.size() != static_cast<std::size_t>(n_) ||
        right_perm.size() != static_cast<std::size_t>(r_))
      throw DomainError("permutation size does not match matrix shape");
    Biadjacency out(n_, r_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < r_; ++j)
        if (at(i, j)) out.set(left_perm[i], right_perm[j], true);
    return out;
  }

  /// Submatrix on the rows and columns whose bits are set in the masks,
  /// keeping their relative order.
  Biadjacency select(std::uint64_t row_mask_bits, std::uint64_t col_mask_bits) const {
    const int nn = std::popcount(row_mask_bits & row_mask(n_));
    const int rr = std::popcount(col_mask_bits & row_mask(r_));
    Biadjacency out(nn, rr);
    int oi = 0;
    for (int i = 0; i < n_; ++i) {
      if (!((row_mask_bits >> i) & 1u)) continue;
      int oj = 0;
      for (int j = 0; j < r_; ++j) {
        if (!((col_mask_bits >> j) & 1u)) continue;
        if (at(i, j)) out.set(oi, oj, true);
        ++oj;
      }
      ++oi;
    }
    return out;
  }

  std::string bit_string() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(r_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < r_; ++j) s.push_back(at(i, j) ? '1' : '0');
    return s;
  }

  friend bool operator==(const Biadjacency&, const Biadjacency&) = default;

  static constexpr std::uint64_t row_mask(int width) noexcept {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  }

 private:
  static std::size_t check_shape(int n, int r) {
    if (n < 0 || r < 0 || n > max_side || r > max_side)
      throw DomainError("matrix shape " + std::to_string(n) + "x" + std::to_string(r) +
                        " outside 0.." + std::to_string(max_side));
    return static_cast<std::size_t>(n);
  }

  int n_ = 0;
  int r_ = 0;
  std::vector<std::uint64_t> rows_;
};

}  // namespace bipartite
