#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "boolhd/error.hpp"

namespace boolhd {

// Tuples are encoded as integers whose binary digits spell the tuple with the
// first coordinate as the most significant digit.
using TupleCode = std::uint32_t;

inline int tuple_bit(TupleCode code, int coord, int arity) { return (code >> (arity - 1 - coord)) & 1u; }

inline TupleCode tuple_mask(int arity) { return arity >= 32 ? ~0u : ((TupleCode{1} << arity) - 1); }

inline std::string tuple_string(TupleCode code, int arity) {
  std::string s(static_cast<std::size_t>(arity), '0');
  for (int i = 0; i < arity; ++i) s[static_cast<std::size_t>(i)] = tuple_bit(code, i, arity) ? '1' : '0';
  return s;
}

struct PropertyFlags {
  bool zero_valid = false;
  bool one_valid = false;
  bool horn = false;
  bool dual_horn = false;
  bool monotone = false;
  bool bijunctive = false;
  bool affine = false;
  bool complementive = false;

  bool operator==(const PropertyFlags&) const = default;

  PropertyFlags operator&(const PropertyFlags& o) const {
    return {zero_valid && o.zero_valid, one_valid && o.one_valid, horn && o.horn,
            dual_horn && o.dual_horn,   monotone && o.monotone,   bijunctive && o.bijunctive,
            affine && o.affine,         complementive && o.complementive};
  }

  static PropertyFlags all() { return {true, true, true, true, true, true, true, true}; }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    if (zero_valid) out.emplace_back("zero_valid");
    if (one_valid) out.emplace_back("one_valid");
    if (horn) out.emplace_back("horn");
    if (dual_horn) out.emplace_back("dual_horn");
    if (monotone) out.emplace_back("monotone");
    if (bijunctive) out.emplace_back("bijunctive");
    if (affine) out.emplace_back("affine");
    if (complementive) out.emplace_back("complementive");
    return out;
  }
};

class Relation;
PropertyFlags property_flags(const Relation& r);

namespace detail {
struct RelationCache {
  std::once_flag once;
  PropertyFlags flags;
};
}  // namespace detail

/// A nonempty Boolean relation of arity 1..16 stored as a membership table.
class Relation {
 public:
  static constexpr int kMaxArity = 16;

  Relation(int arity, std::vector<TupleCode> tuples) : arity_(arity) {
    if (arity < 1 || arity > kMaxArity) fail(ErrorKind::Parse, "relation arity must be in 1..16");
    table_.assign((std::size_t{1} << arity) / 64 + 1, 0);
    for (TupleCode t : tuples) {
      if (t > tuple_mask(arity)) fail(ErrorKind::Parse, "tuple code out of range");
      table_[t / 64] |= std::uint64_t{1} << (t % 64);
    }
    for (TupleCode t = 0; t <= tuple_mask(arity); ++t)
      if (contains(t)) tuples_.push_back(t);
    if (tuples_.empty()) fail(ErrorKind::Parse, "empty relations are not supported");
    cache_ = std::make_shared<detail::RelationCache>();
  }

  template <class Pred>
  static Relation from_predicate(int arity, Pred&& pred) {
    std::vector<TupleCode> ts;
    for (TupleCode t = 0; t <= tuple_mask(arity); ++t)
      if (pred(t)) ts.push_back(t);
    return Relation(arity, std::move(ts));
  }

  int arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return tuples_.size(); }
  const std::vector<TupleCode>& tuples() const noexcept { return tuples_; }

  bool contains(TupleCode t) const noexcept { return (table_[t / 64] >> (t % 64)) & 1u; }

  bool contains_bits(std::span<const std::uint8_t> bits) const {
    TupleCode t = 0;
    for (auto b : bits) t = (t << 1) | (b & 1u);
    return contains(t);
  }

  const PropertyFlags& flags() const {
    std::call_once(cache_->once, [this] { cache_->flags = property_flags(*this); });
    return cache_->flags;
  }

  bool operator==(const Relation& o) const { return arity_ == o.arity_ && tuples_ == o.tuples_; }

 private:
  int arity_;
  std::vector<std::uint64_t> table_;
  std::vector<TupleCode> tuples_;
  std::shared_ptr<detail::RelationCache> cache_;
};

/// Boolean function of arity 1..8 given by its truth table (first argument is
/// the most significant index digit).
class BoolFunction {
 public:
  static constexpr int kMaxArity = 8;

  BoolFunction(int arity, std::vector<std::uint8_t> table) : arity_(arity), table_(std::move(table)) {
    if (arity < 1 || arity > kMaxArity) fail(ErrorKind::Parse, "function arity must be in 1..8");
    if (table_.size() != (std::size_t{1} << arity)) fail(ErrorKind::Parse, "truth table length must be 2^arity");
  }

  template <class F>
  static BoolFunction from(int arity, F&& f) {
    std::vector<std::uint8_t> t(std::size_t{1} << arity);
    for (TupleCode x = 0; x < t.size(); ++x) {
      std::vector<int> args(static_cast<std::size_t>(arity));
      for (int i = 0; i < arity; ++i) args[static_cast<std::size_t>(i)] = tuple_bit(x, i, arity);
      t[x] = f(std::span<const int>(args)) ? 1 : 0;
    }
    return BoolFunction(arity, std::move(t));
  }

  int arity() const noexcept { return arity_; }
  int operator()(TupleCode args) const { return table_[args]; }

 private:
  int arity_;
  std::vector<std::uint8_t> table_;
};

/// Symmetric threshold function: 1 iff at least `min_ones` of the arguments
/// are 1. Covers h_m (m of m+1) and dual(h_m) (2 of m+1) at any arity.
struct ThresholdFunction {
  int arity;
  int min_ones;
};

namespace fn {
inline BoolFunction identity() { return BoolFunction(1, {0, 1}); }
inline BoolFunction negation() { return BoolFunction(1, {1, 0}); }
inline BoolFunction constant0() { return BoolFunction(1, {0, 0}); }
inline BoolFunction constant1() { return BoolFunction(1, {1, 1}); }
inline BoolFunction conj() { return BoolFunction(2, {0, 0, 0, 1}); }
inline BoolFunction disj() { return BoolFunction(2, {0, 1, 1, 1}); }
inline BoolFunction xor2() { return BoolFunction(2, {0, 1, 1, 0}); }
inline BoolFunction equiv() { return BoolFunction(2, {1, 0, 0, 1}); }
inline BoolFunction implies() { return BoolFunction(2, {1, 1, 0, 1}); }
inline BoolFunction and_not() { return BoolFunction(2, {0, 0, 1, 0}); }

template <class F>
BoolFunction ternary(F&& f) {
  return BoolFunction::from(3, [&](std::span<const int> a) { return f(a[0], a[1], a[2]); });
}
inline BoolFunction majority() { return ternary([](int x, int y, int z) { return (x & y) | (y & z) | (x & z); }); }
inline BoolFunction xor3() { return ternary([](int x, int y, int z) { return x ^ y ^ z; }); }
inline BoolFunction xnor3() { return ternary([](int x, int y, int z) { return 1 ^ x ^ y ^ z; }); }
inline ThresholdFunction h(int m) { return {m + 1, m}; }
inline ThresholdFunction dual_h(int m) { return {m + 1, 2}; }
}  // namespace fn

inline bool is_polymorphism(const BoolFunction& f, const Relation& r) {
  const int k = f.arity();
  const int n = r.arity();
  const auto& ts = r.tuples();
  std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
  while (true) {
    TupleCode out = 0;
    for (int i = 0; i < n; ++i) {
      TupleCode args = 0;
      for (int j = 0; j < k; ++j) args = (args << 1) | static_cast<TupleCode>(tuple_bit(ts[pick[static_cast<std::size_t>(j)]], i, n));
      out = (out << 1) | static_cast<TupleCode>(f(args));
    }
    if (!r.contains(out)) return false;
    int pos = k - 1;
    while (pos >= 0 && ++pick[static_cast<std::size_t>(pos)] == ts.size()) pick[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) return true;
  }
}

/// Threshold polymorphism test by dynamic programming over per-coordinate
/// counts of the minority value, capped where the output is already decided.
inline bool is_polymorphism(const ThresholdFunction& f, const Relation& r) {
  const int n = r.arity();
  if (f.min_ones <= 0) return r.contains(tuple_mask(n));
  if (f.min_ones > f.arity) return r.contains(0);
  // Count ones capped at min_ones, or zeros capped at arity-min_ones+1.
  const bool count_ones = f.min_ones <= f.arity - f.min_ones + 1;
  const int cap = count_ones ? f.min_ones : f.arity - f.min_ones + 1;
  const int base = cap + 1;
  auto encode = [&](const std::vector<int>& c) {
    std::uint64_t v = 0;
    for (int x : c) v = v * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(x);
    return v;
  };
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::vector<int>> layer{std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (int step = 0; step < f.arity; ++step) {
    std::vector<std::vector<int>> next;
    seen.clear();
    for (const auto& s : layer) {
      for (TupleCode t : r.tuples()) {
        std::vector<int> c = s;
        for (int i = 0; i < n; ++i) {
          int bit = tuple_bit(t, i, n);
          if ((count_ones ? bit : 1 - bit) == 1) c[static_cast<std::size_t>(i)] = std::min(cap, c[static_cast<std::size_t>(i)] + 1);
        }
        if (seen.insert(encode(c)).second) next.push_back(std::move(c));
      }
    }
    layer = std::move(next);
  }
  for (const auto& s : layer) {
    TupleCode out = 0;
    for (int i = 0; i < n; ++i) {
      int v = s[static_cast<std::size_t>(i)];
      int bit = count_ones ? (v >= cap ? 1 : 0) : (v >= cap ? 0 : 1);
      out = (out << 1) | static_cast<TupleCode>(bit);
    }
    if (!r.contains(out)) return false;
  }
  return true;
}

inline bool is_complementive(const Relation& r) {
  const TupleCode mask = tuple_mask(r.arity());
  return std::all_of(r.tuples().begin(), r.tuples().end(), [&](TupleCode t) { return r.contains(t ^ mask); });
}

inline PropertyFlags property_flags(const Relation& r) {
  PropertyFlags f;
  f.zero_valid = r.contains(0);
  f.one_valid = r.contains(tuple_mask(r.arity()));
  f.horn = is_polymorphism(fn::conj(), r);
  f.dual_horn = is_polymorphism(fn::disj(), r);
  f.monotone = f.horn && f.dual_horn;
  f.bijunctive = is_polymorphism(fn::majority(), r);
  f.affine = is_polymorphism(fn::xor3(), r);
  f.complementive = is_complementive(r);
  return f;
}

inline Relation dualize(const Relation& r) {
  std::vector<TupleCode> ts;
  ts.reserve(r.size());
  for (TupleCode t : r.tuples()) ts.push_back(t ^ tuple_mask(r.arity()));
  return Relation(r.arity(), std::move(ts));
}

// ---------------------------------------------------------------------------
// Clauses and decompositions

enum class ClauseKind { Or, Impl, UnitPos, UnitNeg, Parity, General };

/// A CNF clause or a GF(2) equation. For Parity clauses `positives` holds the
/// variables of the equation and `parity` its right-hand side.
struct Clause {
  std::vector<int> positives;
  std::vector<int> negatives;
  bool parity = false;
  ClauseKind kind = ClauseKind::General;

  static Clause make(std::vector<int> pos, std::vector<int> neg) {
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    std::sort(neg.begin(), neg.end());
    neg.erase(std::unique(neg.begin(), neg.end()), neg.end());
    Clause c{std::move(pos), std::move(neg), false, ClauseKind::General};
    const auto p = c.positives.size(), q = c.negatives.size();
    if (p == 1 && q == 0) c.kind = ClauseKind::UnitPos;
    else if (p == 0 && q == 1) c.kind = ClauseKind::UnitNeg;
    else if (p == 1 && q == 1) c.kind = ClauseKind::Impl;
    else if (p >= 2 && q == 0) c.kind = ClauseKind::Or;
    return c;
  }

  static Clause equation(std::vector<int> vars, bool rhs) {
    std::sort(vars.begin(), vars.end());
    std::vector<int> odd;
    for (std::size_t i = 0; i < vars.size();) {
      std::size_t j = i;
      while (j < vars.size() && vars[j] == vars[i]) ++j;
      if ((j - i) % 2 == 1) odd.push_back(vars[i]);
      i = j;
    }
    return Clause{std::move(odd), {}, rhs, ClauseKind::Parity};
  }

  std::size_t width() const { return positives.size() + negatives.size(); }
  bool is_tautology() const {
    if (kind == ClauseKind::Parity) return false;
    for (int v : positives)
      if (std::binary_search(negatives.begin(), negatives.end(), v)) return true;
    return false;
  }

  template <class Value>
  bool satisfied_by(Value&& value) const {
    if (kind == ClauseKind::Parity) {
      int s = 0;
      for (int v : positives) s ^= value(v);
      return s == (parity ? 1 : 0);
    }
    for (int v : positives)
      if (value(v)) return true;
    for (int v : negatives)
      if (!value(v)) return true;
    return false;
  }

  auto operator<=>(const Clause& o) const {
    if (auto c = width() <=> o.width(); c != 0) return c;
    if (auto c = positives <=> o.positives; c != 0) return c;
    if (auto c = negatives <=> o.negatives; c != 0) return c;
    return parity <=> o.parity;
  }
  bool operator==(const Clause& o) const {
    return positives == o.positives && negatives == o.negatives && parity == o.parity && kind == o.kind;
  }
};

enum class Shape { Horn, DualHorn, Bijunctive, Monotone, IhsbPos, IhsbNeg, Parity };

struct ShapeSpec {
  Shape shape;
  int k = 0;  // clause-width bound for IhsbPos / IhsbNeg; 0 means unbounded
};

inline bool fits_shape(const Clause& c, ShapeSpec s) {
  const auto p = c.positives.size(), q = c.negatives.size();
  const auto bound = s.k > 0 ? static_cast<std::size_t>(s.k) : std::size_t{~0u};
  switch (s.shape) {
    case Shape::Horn: return p <= 1;
    case Shape::DualHorn: return q <= 1;
    case Shape::Bijunctive: return p + q <= 2;
    case Shape::Monotone: return (p == 1 && q == 1) || p + q == 1;
    case Shape::IhsbPos: return (q == 0 && p >= 1 && p <= bound) || (p == 1 && q == 1) || (p == 0 && q == 1);
    case Shape::IhsbNeg: return (p == 0 && q >= 1 && q <= bound) || (p == 1 && q == 1) || (p == 1 && q == 0);
    case Shape::Parity: return c.kind == ClauseKind::Parity;
  }
  return false;
}

/// All prime implicates of `r` by exhaustive subcube emptiness over the
/// 3^arity candidate clauses. Clause literals index coordinates 0..arity-1.
inline std::vector<Clause> prime_implicates(const Relation& r) {
  const int n = r.arity();
  if (n > 12) fail(ErrorKind::TooLarge, "prime implicate enumeration is limited to arity 12");
  std::vector<std::uint32_t> pow3(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) pow3[static_cast<std::size_t>(i)] = pow3[static_cast<std::size_t>(i) - 1] * 3;
  const std::uint32_t total = pow3[static_cast<std::size_t>(n)];
  // digit i: 0 = free, 1 = coordinate fixed to 0 (positive literal), 2 = fixed to 1 (negative literal)
  std::vector<std::uint8_t> nonempty(total, 0);
  for (std::uint32_t code = total; code-- > 0;) {
    std::uint32_t rest = code;
    int free_digit = -1;
    TupleCode t = 0;
    for (int i = 0; i < n; ++i) {
      std::uint32_t d = rest % 3;
      rest /= 3;
      if (d == 0 && free_digit < 0) free_digit = i;
      t |= static_cast<TupleCode>(d == 2) << (n - 1 - i);
    }
    if (free_digit < 0) nonempty[code] = r.contains(t) ? 1 : 0;
    else
      nonempty[code] = nonempty[code + pow3[static_cast<std::size_t>(free_digit)]] |
                       nonempty[code + 2 * pow3[static_cast<std::size_t>(free_digit)]];
  }
  std::vector<Clause> out;
  for (std::uint32_t code = 1; code < total; ++code) {
    if (nonempty[code]) continue;
    bool prime = true;
    std::vector<int> pos, neg;
    std::uint32_t rest = code;
    for (int i = 0; i < n && prime; ++i) {
      std::uint32_t d = rest % 3;
      rest /= 3;
      if (d == 0) continue;
      if (!nonempty[code - d * pow3[static_cast<std::size_t>(i)]]) prime = false;
      (d == 1 ? pos : neg).push_back(i);
    }
    if (prime) out.push_back(Clause::make(std::move(pos), std::move(neg)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Relation project(const Relation& r, std::span<const int> coords) {
  const int n = r.arity();
  const int k = static_cast<int>(coords.size());
  std::vector<TupleCode> ts;
  for (TupleCode t : r.tuples()) {
    TupleCode p = 0;
    for (int c : coords) p = (p << 1) | static_cast<TupleCode>(tuple_bit(t, c, n));
    ts.push_back(p);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return Relation(k, std::move(ts));
}

/// Models of a clause list over `arity` coordinates, as a sorted code list.
inline std::vector<TupleCode> clause_models(std::span<const Clause> clauses, int arity) {
  std::vector<TupleCode> out;
  for (TupleCode t = 0; t <= tuple_mask(arity); ++t) {
    auto val = [&](int v) { return tuple_bit(t, v, arity); };
    if (std::all_of(clauses.begin(), clauses.end(), [&](const Clause& c) { return c.satisfied_by(val); }))
      out.push_back(t);
  }
  return out;
}

namespace detail {

inline std::vector<Clause> parity_equations(const Relation& r) {
  const int n = r.arity();
  const TupleCode t0 = r.tuples().front();
  // Basis of the direction space, kept in reduced echelon form keyed by top bit.
  std::vector<TupleCode> basis;
  for (TupleCode t : r.tuples()) {
    TupleCode v = t ^ t0;
    for (TupleCode b : basis)
      if ((v ^ b) < v) v ^= b;
    if (v) {
      basis.push_back(v);
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  // Orthogonal complement: a with popcount(a & b) even for every basis b.
  // Solved by Gaussian elimination on the basis as constraint rows.
  std::vector<TupleCode> rows = basis;
  std::vector<int> pivot_bits;
  std::size_t rank = 0;
  for (int bit = n - 1; bit >= 0 && rank < rows.size(); --bit) {
    std::size_t sel = rank;
    while (sel < rows.size() && !((rows[sel] >> bit) & 1u)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && ((rows[i] >> bit) & 1u)) rows[i] ^= rows[rank];
    pivot_bits.push_back(bit);
    ++rank;
  }
  std::vector<TupleCode> complement;
  for (int bit = n - 1; bit >= 0; --bit) {
    if (std::find(pivot_bits.begin(), pivot_bits.end(), bit) != pivot_bits.end()) continue;
    TupleCode a = TupleCode{1} << bit;
    for (std::size_t i = 0; i < rank; ++i)
      if ((rows[i] >> bit) & 1u) a |= TupleCode{1} << pivot_bits[i];
    complement.push_back(a);
  }
  // Reduce the equation set to echelon form for a deterministic output.
  std::vector<TupleCode> eqs;
  for (TupleCode a : complement) {
    for (TupleCode e : eqs)
      if ((a ^ e) < a) a ^= e;
    if (a) {
      for (TupleCode& e : eqs)
        if ((e ^ a) < e) e ^= a;
      eqs.push_back(a);
      std::sort(eqs.rbegin(), eqs.rend());
    }
  }
  std::vector<Clause> out;
  for (TupleCode a : eqs) {
    std::vector<int> vars;
    for (int i = 0; i < n; ++i)
      if (tuple_bit(a, i, n)) vars.push_back(i);
    out.push_back(Clause::equation(std::move(vars), std::popcount(a & t0) % 2 == 1));
  }
  return out;
}

inline std::vector<Clause> binary_projection_clauses(const Relation& r) {
  const int n = r.arity();
  std::set<Clause> acc;
  auto add_from = [&](std::span<const int> coords) {
    for (const Clause& c : prime_implicates(project(r, coords))) {
      std::vector<int> pos, neg;
      for (int v : c.positives) pos.push_back(coords[static_cast<std::size_t>(v)]);
      for (int v : c.negatives) neg.push_back(coords[static_cast<std::size_t>(v)]);
      acc.insert(Clause::make(std::move(pos), std::move(neg)));
    }
  };
  if (n == 1) {
    int c[1] = {0};
    add_from(c);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int c[2] = {i, j};
      add_from(c);
    }
  // Drop clauses subsumed by a unit found on another pair.
  std::vector<Clause> out;
  for (const Clause& c : acc) {
    bool subsumed = false;
    if (c.width() == 2)
      for (int v : c.positives) subsumed |= acc.count(Clause::make({v}, {})) > 0;
    if (c.width() == 2)
      for (int v : c.negatives) subsumed |= acc.count(Clause::make({}, {v})) > 0;
    if (!subsumed) out.push_back(c);
  }
  return out;
}

}  // namespace detail

/// Clause list whose conjunction has exactly the models of `r` and whose
/// clauses all fit `target`. Throws ShapeUnavailable otherwise.
inline std::vector<Clause> cnf_decompose(const Relation& r, ShapeSpec target) {
  const auto& f = r.flags();
  auto unavailable = [] { fail(ErrorKind::ShapeUnavailable, "relation does not admit the requested clause shape"); };
  std::vector<Clause> out;
  switch (target.shape) {
    case Shape::Parity:
      if (!f.affine) unavailable();
      return detail::parity_equations(r);
    case Shape::Bijunctive:
      if (!f.bijunctive) unavailable();
      out = detail::binary_projection_clauses(r);
      break;
    case Shape::Horn:
      if (!f.horn) unavailable();
      out = prime_implicates(r);
      break;
    case Shape::DualHorn:
      if (!f.dual_horn) unavailable();
      out = prime_implicates(r);
      break;
    case Shape::Monotone:
      if (!f.monotone) unavailable();
      out = prime_implicates(r);
      break;
    case Shape::IhsbPos:
      if (!f.dual_horn) unavailable();
      out = prime_implicates(r);
      break;
    case Shape::IhsbNeg:
      if (!f.horn) unavailable();
      out = prime_implicates(r);
      break;
  }
  for (const Clause& c : out)
    if (!fits_shape(c, target)) unavailable();
  if (clause_models(out, r.arity()) != r.tuples()) unavailable();
  return out;
}

// ---------------------------------------------------------------------------
// Named relations

namespace rel {
inline Relation or_m(int m) { return Relation::from_predicate(m, [](TupleCode t) { return t != 0; }); }
inline Relation nand_m(int m) { return Relation::from_predicate(m, [m](TupleCode t) { return t != tuple_mask(m); }); }
inline Relation even_m(int m) { return Relation::from_predicate(m, [](TupleCode t) { return std::popcount(t) % 2 == 0; }); }
inline Relation odd_m(int m) { return Relation::from_predicate(m, [](TupleCode t) { return std::popcount(t) % 2 == 1; }); }
inline Relation t() { return Relation(1, {1}); }
inline Relation f() { return Relation(1, {0}); }
inline Relation impl() { return Relation(2, {0b00, 0b01, 0b11}); }
inline Relation xor2() { return Relation(2, {0b01, 0b10}); }
inline Relation eq() { return Relation(2, {0b00, 0b11}); }
inline Relation dup3() { return Relation::from_predicate(3, [](TupleCode t) { return t != 0b010 && t != 0b101; }); }
inline Relation nae3() { return Relation::from_predicate(3, [](TupleCode t) { return t != 0 && t != 0b111; }); }
inline Relation one_in_three() { return Relation(3, {0b001, 0b010, 0b100}); }
// x ∨ y ∨ ¬z and ¬x ∨ ¬y ∨ z
inline Relation dhorn3() { return Relation::from_predicate(3, [](TupleCode t) { return t != 0b001; }); }
inline Relation horn3() { return Relation::from_predicate(3, [](TupleCode t) { return t != 0b110; }); }
}  // namespace rel

}  // namespace boolhd
