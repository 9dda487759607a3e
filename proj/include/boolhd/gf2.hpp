#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boolhd/error.hpp"

namespace boolhd::gf2 {

/// Packed bit vector; index 0 is the first (lexicographically most
/// significant) coordinate.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static BitVec from_string(std::string_view s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] == '1') v.set(i);
      else if (s[i] != '0') fail(ErrorKind::Parse, "not a bitstring");
    return v;
  }

  std::size_t size() const noexcept { return n_; }
  bool get(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool v = true) {
    if (v) w_[i / 64] |= std::uint64_t{1} << (i % 64);
    else w_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }
  void flip(std::size_t i) { w_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  int weight() const {
    int s = 0;
    for (auto x : w_) s += std::popcount(x);
    return s;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  bool dot(const BitVec& o) const {
    int s = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) s += std::popcount(w_[i] & o.w_[i]);
    return s & 1;
  }

  bool operator==(const BitVec& o) const = default;
  /// Lexicographic order over coordinates 0, 1, ...
  bool operator<(const BitVec& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (auto d = w_[i] ^ o.w_[i]) return !((w_[i] >> std::countr_zero(d)) & 1u);
    }
    return false;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Linear system A·x = b over GF(2).
struct Gf2System {
  std::size_t cols = 0;
  std::vector<BitVec> rows;
  std::vector<std::uint8_t> rhs;

  explicit Gf2System(std::size_t columns = 0) : cols(columns) {}

  void add(BitVec row, bool b) {
    if (row.size() != cols) fail(ErrorKind::LengthMismatch, "row length differs from column count");
    rows.push_back(std::move(row));
    rhs.push_back(b ? 1 : 0);
  }
  void add(std::string_view row, bool b) { add(BitVec::from_string(row), b); }
};

struct AffineSolution {
  BitVec particular;
  std::vector<BitVec> nullspace;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon elimination. Free variables are 0 in the particular
/// solution; the nullspace has one basis vector per free column.
inline std::optional<AffineSolution> solve_affine(const Gf2System& s) {
  std::vector<BitVec> rows = s.rows;
  std::vector<std::uint8_t> b = s.rhs;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < s.cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && !rows[sel].get(c)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    std::swap(b[r], b[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i].get(c)) {
        rows[i] ^= rows[r];
        b[i] ^= b[r];
      }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i)
    if (b[i]) return std::nullopt;
  AffineSolution out;
  out.rank = r;
  out.pivots = pivots;
  out.particular = BitVec(s.cols);
  for (std::size_t i = 0; i < r; ++i) out.particular.set(pivots[i], b[i]);
  std::vector<bool> is_pivot(s.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < s.cols; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(s.cols);
    v.set(f);
    for (std::size_t i = 0; i < r; ++i)
      if (rows[i].get(f)) v.set(pivots[i]);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

inline constexpr std::size_t kEnumerationCap = 24;

/// Minimum-weight nonzero vector of span(basis), lexicographically smallest
/// among ties.
inline std::optional<std::pair<int, BitVec>> min_weight_nonzero(const std::vector<BitVec>& basis,
                                                                 std::size_t cap = kEnumerationCap) {
  if (basis.empty()) return std::nullopt;
  if (basis.size() > cap) fail(ErrorKind::TooLarge, "code dimension " + std::to_string(basis.size()) + " exceeds cap");
  BitVec cur(basis[0].size());
  std::optional<std::pair<int, BitVec>> best;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t g = 1; g < total; ++g) {
    cur ^= basis[static_cast<std::size_t>(std::countr_zero(g))];
    const int w = cur.weight();
    if (!best || w < best->first || (w == best->first && cur < best->second)) best.emplace(w, cur);
  }
  return best;
}

/// Exact nearest codeword of the code generated by the rows of `gen` to `m`.
/// The message x has bit i for row i; ties go to the lexicographically
/// smallest message.
inline std::pair<int, BitVec> nearest_codeword(const std::vector<BitVec>& gen, const BitVec& m,
                                               std::size_t cap = kEnumerationCap) {
  const std::size_t k = gen.size();
  if (k > cap) fail(ErrorKind::TooLarge, "message space 2^" + std::to_string(k) + " exceeds cap");
  for (const auto& g : gen)
    if (g.size() != m.size()) fail(ErrorKind::LengthMismatch, "generator row length differs from target");
  BitVec word(m.size());
  int best_d = m.weight();
  std::uint64_t best_x = 0;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t g = 1; g < total; ++g) {
    const auto row = static_cast<std::size_t>(std::countr_zero(g));
    word ^= gen[row];
    // Gray code message; row i is the (k-1-i)-th bit so integer order is lexicographic
    const std::uint64_t gray = g ^ (g >> 1);
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < k; ++i)
      if ((gray >> i) & 1u) x |= std::uint64_t{1} << (k - 1 - i);
    const int d = (word ^ m).weight();
    if (d < best_d || (d == best_d && x < best_x)) {
      best_d = d;
      best_x = x;
    }
  }
  BitVec xv(k);
  for (std::size_t i = 0; i < k; ++i) xv.set(i, (best_x >> (k - 1 - i)) & 1u);
  return {best_d, xv};
}

}  // namespace boolhd::gf2
