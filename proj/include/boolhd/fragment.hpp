#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "boolhd/relations.hpp"

namespace boolhd {

namespace detail {

// A k-ary relation as a bitmask over its 2^k tuple codes.
using Mask = std::uint32_t;

inline Mask place(const Relation& r, const std::vector<int>& map, int width) {
  Mask m = 0;
  for (TupleCode t = 0; t < (TupleCode{1} << width); ++t) {
    TupleCode proj = 0;
    for (int c : map) proj = (proj << 1) | static_cast<TupleCode>(tuple_bit(t, c, width));
    if (r.contains(proj)) m |= Mask{1} << t;
  }
  return m;
}

inline void all_maps(int from, int to, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> map(static_cast<std::size_t>(from), 0);
  while (true) {
    f(map);
    int i = from - 1;
    while (i >= 0 && ++map[static_cast<std::size_t>(i)] == to) map[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
  }
}

}  // namespace detail

/// Relations of arity <= k that are pp-definable from `gamma`, computed as a
/// fixpoint over k-ary relations under intersection, coordinate permutation
/// and elimination of one extra variable. Generators of arity > k enter only
/// inside elimination steps, with their coordinates mapped into k+1
/// variables. Used as an independent check of the classifier.
inline std::vector<Relation> coclone_fragment(const std::vector<Relation>& gamma, int k) {
  using detail::Mask;
  if (k < 1 || k > 4) fail(ErrorKind::Parse, "fragment arity must be in 1..4");
  const int W = k + 1;
  const TupleCode ntup = TupleCode{1} << k;
  const Mask full = ntup == 32 ? ~Mask{0} : ((Mask{1} << ntup) - 1);
  const std::size_t universe = std::size_t{1} << ntup;  // number of k-ary relations incl. empty

  std::vector<Mask> list;
  std::unordered_set<Mask> seen;
  auto add = [&](Mask m) {
    if (seen.insert(m).second) list.push_back(m);
  };

  auto permute = [&](Mask m, const std::vector<int>& perm) {
    Mask out = 0;
    for (TupleCode t = 0; t < ntup; ++t) {
      if (!((m >> t) & 1u)) continue;
      TupleCode u = 0;
      for (int c = 0; c < k; ++c) u |= static_cast<TupleCode>(tuple_bit(t, c, k)) << (k - 1 - perm[static_cast<std::size_t>(c)]);
      out |= Mask{1} << u;
    }
    return out;
  };
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) p[static_cast<std::size_t>(i)] = i;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }

  add(full);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) add(detail::place(rel::eq(), {i, j}, k));
  std::vector<Mask> wide;  // (k+1)-ary placements of generators with arity > k
  {
    std::unordered_set<Mask> wide_seen;
    for (const auto& r : gamma) {
      if (r.arity() <= k)
        detail::all_maps(r.arity(), k, [&](const std::vector<int>& m) { add(detail::place(r, m, k)); });
      else
        detail::all_maps(r.arity(), W, [&](const std::vector<int>& m) {
          if (Mask x = detail::place(r, m, W); wide_seen.insert(x).second) wide.push_back(x);
        });
    }
  }
  wide.push_back(~Mask{0} >> (32 - (1u << W)));  // no wide conjunct

  // lift[j]: the relation with coordinate j replaced by the extra variable w,
  // as a (k+1)-ary mask with w as the last coordinate.
  auto lift = [&](Mask m, int j) {
    Mask out = 0;
    for (TupleCode t = 0; t < (TupleCode{1} << W); ++t) {
      TupleCode u = 0;
      for (int c = 0; c < k; ++c) u = (u << 1) | static_cast<TupleCode>(c == j ? (t & 1u) : tuple_bit(t, c, W));
      if ((m >> u) & 1u) out |= Mask{1} << t;
    }
    return out;
  };
  auto project_w = [&](Mask m) {
    Mask out = 0;
    for (TupleCode a = 0; a < ntup; ++a)
      if ((m >> (2 * a)) & 3u) out |= Mask{1} << a;
    return out;
  };

  std::vector<std::vector<Mask>> lifted(static_cast<std::size_t>(k));
  std::size_t done = 0;  // list[0..done) has been fully combined
  while (done < list.size() && list.size() < universe) {
    // Close the current list under permutation and intersection first.
    for (std::size_t i = 0; i < list.size() && list.size() < universe; ++i) {
      for (const auto& p : perms) add(permute(list[i], p));
      for (std::size_t j = 0; j < i; ++j) add(list[i] & list[j]);
    }
    const std::size_t old = done, cur = list.size();
    for (int j = 0; j < k; ++j)
      for (std::size_t i = lifted[static_cast<std::size_t>(j)].size(); i < cur; ++i)
        lifted[static_cast<std::size_t>(j)].push_back(lift(list[i], j));
    // Every combination with at least one member from [old, cur): position p
    // is the first such member.
    std::vector<std::size_t> idx(static_cast<std::size_t>(k));
    for (int p = 0; p < k && list.size() < universe; ++p) {
      auto rec = [&](auto& self, int pos, Mask acc) -> void {
        if (list.size() >= universe) return;
        if (pos == k) {
          for (Mask g : wide) add(project_w(acc & g));
          return;
        }
        std::size_t lo = 0, hi = cur;
        if (pos < p) hi = old;
        else if (pos == p) lo = old;
        for (std::size_t i = lo; i < hi; ++i) self(self, pos + 1, acc & lifted[static_cast<std::size_t>(pos)][i]);
      };
      rec(rec, 0, ~Mask{0});
    }
    done = cur;
  }

  std::vector<Relation> out;
  for (int a = 1; a <= k; ++a) {
    const TupleCode na = TupleCode{1} << a;
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << na); ++sub) {
      std::vector<TupleCode> ts;
      for (TupleCode t = 0; t < na; ++t)
        if ((sub >> t) & 1u) ts.push_back(t);
      Relation r(a, ts);
      std::vector<int> map;
      for (int i = 0; i < a; ++i) map.push_back(i);
      if (seen.count(detail::place(r, map, k))) out.push_back(std::move(r));
    }
  }
  return out;
}

inline bool fragment_contains(const std::vector<Relation>& fragment, const Relation& r) {
  return std::find(fragment.begin(), fragment.end(), r) != fragment.end();
}

}  // namespace boolhd
