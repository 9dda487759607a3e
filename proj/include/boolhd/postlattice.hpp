#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "boolhd/language.hpp"
#include "boolhd/relations.hpp"

namespace boolhd {

enum class Family : std::uint8_t {
  iBF, iR0, iR1, iR2, iM, iM0, iM1, iM2,
  iS0, iS02, iS01, iS00, iS1, iS12, iS11, iS10,
  iD, iD1, iD2, iL, iL0, iL1, iL2, iL3,
  iV, iV0, iV1, iV2, iE, iE0, iE1, iE2,
  iN, iN2, iI, iI0, iI1, BR,
};

inline constexpr std::array<std::string_view, 38> kFamilyNames = {
    "iBF", "iR0", "iR1", "iR2", "iM",  "iM0", "iM1", "iM2", "iS0", "iS02", "iS01", "iS00", "iS1",
    "iS12", "iS11", "iS10", "iD", "iD1", "iD2", "iL",  "iL0", "iL1", "iL2", "iL3", "iV",   "iV0",
    "iV1", "iV2", "iE",  "iE0", "iE1", "iE2", "iN",  "iN2", "iI",  "iI0", "iI1", "BR"};

inline constexpr bool is_parameterized(Family f) { return f >= Family::iS0 && f <= Family::iS10; }

struct CoCloneLabel {
  static constexpr int kMinParam = 2;
  static constexpr int kMaxParam = 17;

  Family family = Family::BR;
  int m = 0;

  CoCloneLabel() = default;
  CoCloneLabel(Family f, int param = 0) : family(f), m(is_parameterized(f) ? param : 0) {
    if (is_parameterized(f) && (param < kMinParam || param > kMaxParam))
      fail(ErrorKind::Internal, "co-clone parameter out of range");
  }

  std::string name() const {
    std::string s(kFamilyNames[static_cast<std::size_t>(family)]);
    if (m) s += "^" + std::to_string(m);
    return s;
  }

  static CoCloneLabel parse(std::string_view s) {
    auto caret = s.find('^');
    auto base = s.substr(0, caret);
    for (std::size_t i = 0; i < kFamilyNames.size(); ++i) {
      if (kFamilyNames[i] != base) continue;
      auto f = static_cast<Family>(i);
      if (is_parameterized(f) != (caret != std::string_view::npos)) break;
      return CoCloneLabel(f, caret == std::string_view::npos ? 0 : std::stoi(std::string(s.substr(caret + 1))));
    }
    fail(ErrorKind::Parse, "unknown co-clone label '" + std::string(s) + "'");
  }

  bool operator==(const CoCloneLabel&) const = default;
};

using CloneGenerator = std::variant<BoolFunction, ThresholdFunction>;

inline bool preserves(const CloneGenerator& g, const Relation& r) {
  return std::visit([&](const auto& f) { return is_polymorphism(f, r); }, g);
}

/// Static co-clone lattice: nodes with S-family parameters 2..17, covering
/// order, duality and the clone bases used for the Galois test.
class PostLattice {
 public:
  static const PostLattice& instance() {
    static const PostLattice l;
    return l;
  }

  std::size_t size() const noexcept { return nodes_.size(); }
  const CoCloneLabel& node(std::size_t i) const { return nodes_.at(i); }
  const std::vector<CoCloneLabel>& nodes() const noexcept { return nodes_; }

  std::size_t index(const CoCloneLabel& l) const {
    if (!is_parameterized(l.family)) return fixed_index_.at(static_cast<std::size_t>(l.family));
    const auto k = static_cast<std::size_t>(l.family) - static_cast<std::size_t>(Family::iS0);
    return s_start_ + k * kParams + static_cast<std::size_t>(l.m - CoCloneLabel::kMinParam);
  }

  bool leq(const CoCloneLabel& a, const CoCloneLabel& b) const { return leq_[index(a)][index(b)]; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }

  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept { return covers_; }

  CoCloneLabel dual(const CoCloneLabel& l) const { return CoCloneLabel(dual_family(l.family), l.m); }

  /// Clone generators (indices into generators()) whose invariants form the node.
  const std::vector<std::size_t>& base_of(std::size_t node) const { return bases_.at(node); }
  const std::vector<CloneGenerator>& generators() const noexcept { return generators_; }

  static Family dual_family(Family f) {
    using F = Family;
    switch (f) {
      case F::iR0: return F::iR1;
      case F::iR1: return F::iR0;
      case F::iM0: return F::iM1;
      case F::iM1: return F::iM0;
      case F::iS0: return F::iS1;
      case F::iS1: return F::iS0;
      case F::iS02: return F::iS12;
      case F::iS12: return F::iS02;
      case F::iS01: return F::iS11;
      case F::iS11: return F::iS01;
      case F::iS00: return F::iS10;
      case F::iS10: return F::iS00;
      case F::iL0: return F::iL1;
      case F::iL1: return F::iL0;
      case F::iV: return F::iE;
      case F::iE: return F::iV;
      case F::iV0: return F::iE1;
      case F::iE1: return F::iV0;
      case F::iV1: return F::iE0;
      case F::iE0: return F::iV1;
      case F::iV2: return F::iE2;
      case F::iE2: return F::iV2;
      case F::iI0: return F::iI1;
      case F::iI1: return F::iI0;
      default: return f;
    }
  }

 private:
  static constexpr std::size_t kParams = CoCloneLabel::kMaxParam - CoCloneLabel::kMinParam + 1;

  PostLattice() {
    fixed_index_.assign(kFamilyNames.size(), ~std::size_t{0});
    for (std::size_t i = 0; i < kFamilyNames.size(); ++i) {
      auto f = static_cast<Family>(i);
      if (is_parameterized(f)) continue;
      fixed_index_[i] = nodes_.size();
      nodes_.emplace_back(f);
    }
    s_start_ = nodes_.size();
    for (int k = 0; k < 8; ++k)
      for (int m = CoCloneLabel::kMinParam; m <= CoCloneLabel::kMaxParam; ++m)
        nodes_.emplace_back(static_cast<Family>(static_cast<int>(Family::iS0) + k), m);
    build_covers();
    build_closure();
    build_bases();
  }

  void cover(CoCloneLabel a, CoCloneLabel b) { covers_.emplace_back(index(a), index(b)); }

  void build_covers() {
    using F = Family;
    auto c = [&](F a, std::initializer_list<CoCloneLabel> bs) {
      for (auto b : bs) cover(CoCloneLabel(a), b);
    };
    const int M = CoCloneLabel::kMaxParam;
    c(F::iBF, {F::iR0, F::iR1, F::iM, F::iD, F::iL});
    c(F::iR0, {F::iR2, F::iM0, {F::iS1, 2}, F::iL0});
    c(F::iR1, {F::iR2, F::iM1, {F::iS0, 2}, F::iL1});
    c(F::iR2, {F::iM2, {F::iS02, 2}, {F::iS12, 2}, F::iD1});
    c(F::iM, {F::iM0, F::iM1, F::iV, F::iE});
    c(F::iM0, {F::iM2, {F::iS11, 2}, F::iV0});
    c(F::iM1, {F::iM2, {F::iS01, 2}, F::iE1});
    c(F::iM2, {{F::iS00, 2}, {F::iS10, 2}});
    for (int side = 0; side < 2; ++side) {
      const F s = side ? F::iS1 : F::iS0, s2 = side ? F::iS12 : F::iS02;
      const F s1 = side ? F::iS11 : F::iS01, s0 = side ? F::iS10 : F::iS00;
      for (int m = 2; m <= M; ++m) {
        cover({s, m}, {s2, m});
        cover({s, m}, {s1, m});
        cover({s2, m}, {s0, m});
        cover({s1, m}, {s0, m});
        if (m < M) {
          cover({s, m}, {s, m + 1});
          cover({s2, m}, {s2, m + 1});
          cover({s1, m}, {s1, m + 1});
          cover({s0, m}, {s0, m + 1});
        }
      }
      cover({s0, 2}, F::iD2);
    }
    cover({F::iS01, M}, F::iV1);
    cover({F::iS00, M}, F::iV2);
    cover({F::iS11, M}, F::iE0);
    cover({F::iS10, M}, F::iE2);
    c(F::iD, {F::iD1, F::iL3});
    c(F::iD1, {F::iD2, F::iL2});
    c(F::iD2, {F::BR});
    c(F::iL, {F::iL0, F::iL1, F::iL3, F::iN});
    c(F::iL0, {F::iL2, F::iI0});
    c(F::iL1, {F::iL2, F::iI1});
    c(F::iL2, {F::BR});
    c(F::iL3, {F::iL2, F::iN2});
    c(F::iV, {F::iV0, F::iV1, F::iI});
    c(F::iV0, {F::iV2, F::iI0});
    c(F::iV1, {F::iV2, F::iI1});
    c(F::iV2, {F::BR});
    c(F::iE, {F::iE0, F::iE1, F::iI});
    c(F::iE0, {F::iE2, F::iI0});
    c(F::iE1, {F::iE2, F::iI1});
    c(F::iE2, {F::BR});
    c(F::iN, {F::iN2, F::iI});
    c(F::iN2, {F::BR});
    c(F::iI, {F::iI0, F::iI1});
    c(F::iI0, {F::BR});
    c(F::iI1, {F::BR});
  }

  void build_closure() {
    const std::size_t n = nodes_.size();
    leq_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
    for (auto [a, b] : covers_) leq_[a][b] = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq_[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq_[k][j]) leq_[i][j] = true;
  }

  std::size_t gen(CloneGenerator g, const std::string& key) {
    if (auto it = generator_ids_.find(key); it != generator_ids_.end()) return it->second;
    generators_.push_back(std::move(g));
    return generator_ids_[key] = generators_.size() - 1;
  }

  void build_bases() {
    using F = Family;
    bases_.resize(nodes_.size());
    const auto id = gen(fn::identity(), "id"), neg = gen(fn::negation(), "not");
    const auto c0 = gen(fn::constant0(), "0"), c1 = gen(fn::constant1(), "1");
    const auto and_ = gen(fn::conj(), "and"), or_ = gen(fn::disj(), "or");
    const auto xr = gen(fn::xor2(), "xor"), eqv = gen(fn::equiv(), "eq");
    const auto imp = gen(fn::implies(), "impl"), andn = gen(fn::and_not(), "andnot");
    const auto maj = gen(fn::majority(), "maj");
    const auto x3 = gen(fn::xor3(), "xor3"), xn3 = gen(fn::xnor3(), "xnor3");
    auto t3 = [&](const char* key, auto f) { return gen(fn::ternary(f), key); };
    const auto r2f = t3("x&(y^z^1)", [](int x, int y, int z) { return x & (y ^ z ^ 1); });
    const auto majnn = t3("maj(x,~y,~z)", [](int x, int y, int z) { return (x & !y) | (!y & !z) | (x & !z); });
    const auto majn = t3("maj(x,y,~z)", [](int x, int y, int z) { return (x & y) | (y & !z) | (x & !z); });
    const auto s02f = t3("x|(y&~z)", [](int x, int y, int z) { return x | (y & !z); });
    const auto s00f = t3("x|(y&z)", [](int x, int y, int z) { return x | (y & z); });
    const auto s12f = t3("x&(y|~z)", [](int x, int y, int z) { return x & (y | !z); });
    const auto s10f = t3("x&(y|z)", [](int x, int y, int z) { return x & (y | z); });

    auto set = [&](CoCloneLabel l, std::initializer_list<std::size_t> g) { bases_[index(l)] = g; };
    set(F::iBF, {and_, neg});
    set(F::iR0, {and_, xr});
    set(F::iR1, {or_, eqv});
    set(F::iR2, {or_, r2f});
    set(F::iM, {and_, or_, c0, c1});
    set(F::iM0, {and_, or_, c0});
    set(F::iM1, {and_, or_, c1});
    set(F::iM2, {and_, or_});
    for (int m = CoCloneLabel::kMinParam; m <= CoCloneLabel::kMaxParam; ++m) {
      const auto h = gen(fn::h(m), "h" + std::to_string(m));
      const auto dh = gen(fn::dual_h(m), "dh" + std::to_string(m));
      set({F::iS0, m}, {imp, dh});
      set({F::iS02, m}, {s02f, dh});
      set({F::iS01, m}, {dh, c1});
      set({F::iS00, m}, {s00f, dh});
      set({F::iS1, m}, {andn, h});
      set({F::iS12, m}, {s12f, h});
      set({F::iS11, m}, {h, c0});
      set({F::iS10, m}, {s10f, h});
    }
    set(F::iD, {majnn});
    set(F::iD1, {majn});
    set(F::iD2, {maj});
    set(F::iL, {xr, c1});
    set(F::iL0, {xr});
    set(F::iL1, {eqv});
    set(F::iL2, {x3});
    set(F::iL3, {xn3});
    set(F::iV, {or_, c0, c1});
    set(F::iV0, {or_, c0});
    set(F::iV1, {or_, c1});
    set(F::iV2, {or_});
    set(F::iE, {and_, c0, c1});
    set(F::iE0, {and_, c0});
    set(F::iE1, {and_, c1});
    set(F::iE2, {and_});
    set(F::iN, {neg, c0});
    set(F::iN2, {neg});
    set(F::iI, {id, c0, c1});
    set(F::iI0, {id, c0});
    set(F::iI1, {id, c1});
    set(F::BR, {id});
  }

  std::vector<CoCloneLabel> nodes_;
  std::vector<std::size_t> fixed_index_;
  std::size_t s_start_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<std::size_t>> bases_;
  std::vector<CloneGenerator> generators_;
  std::map<std::string, std::size_t> generator_ids_;
};

inline CoCloneLabel dual(const CoCloneLabel& l) { return PostLattice::instance().dual(l); }
inline bool leq(const CoCloneLabel& a, const CoCloneLabel& b) { return PostLattice::instance().leq(a, b); }

namespace detail {
inline CoCloneLabel classify_uncached(const std::vector<Relation>& gamma) {
  const auto& L = PostLattice::instance();
  int max_arity = 0;
  for (const auto& r : gamma) max_arity = std::max(max_arity, r.arity());
  const int bound = std::min(CoCloneLabel::kMaxParam, max_arity + 1);
  std::vector<std::int8_t> gen_ok(L.generators().size(), -1);
  auto generator_ok = [&](std::size_t g) {
    if (gen_ok[g] < 0) {
      bool ok = true;
      for (const auto& r : gamma)
        if (!(ok = preserves(L.generators()[g], r))) break;
      gen_ok[g] = ok;
    }
    return gen_ok[g] == 1;
  };
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (L.node(i).m > bound) continue;
    bool ok = true;
    for (std::size_t g : L.base_of(i))
      if (!(ok = generator_ok(g))) break;
    if (ok) candidates.push_back(i);
  }
  std::optional<std::size_t> least;
  for (std::size_t c : candidates) {
    bool below_all = true;
    for (std::size_t d : candidates)
      if (!(below_all = L.leq(c, d))) break;
    if (below_all) {
      ensure(!least, "two least co-clones in classification");
      least = c;
    }
  }
  ensure(least.has_value(), "no least co-clone contains the language");
  return L.node(*least);
}
}  // namespace detail

/// The co-clone generated by `gamma`. An empty set generates iBF.
inline CoCloneLabel classify(const std::vector<Relation>& gamma) {
  using Key = std::vector<std::vector<TupleCode>>;
  static std::mutex mu;
  static std::map<Key, CoCloneLabel> memo;
  Key key;
  for (const auto& r : gamma) {
    std::vector<TupleCode> k{static_cast<TupleCode>(r.arity())};
    k.insert(k.end(), r.tuples().begin(), r.tuples().end());
    key.push_back(std::move(k));
  }
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  auto label = gamma.empty() ? CoCloneLabel(Family::iBF) : detail::classify_uncached(gamma);
  std::lock_guard lock(mu);
  memo.emplace(std::move(key), label);
  return label;
}

inline CoCloneLabel classify(const Language& lang) { return classify(lang.relations()); }

// ---------------------------------------------------------------------------
// Verdicts

enum class Problem { NSOL, XSOL, MSD, SAT, ANOTHERSAT, TSSAT };
enum class Complexity { PO, APX_complete, NCW_complete, MinDist_complete, MinHD_complete, pAPX, pAPX_complete, NPO_complete, P, NP_complete };

inline constexpr std::string_view to_string(Problem p) {
  constexpr std::array<std::string_view, 6> n = {"NSOL", "XSOL", "MSD", "SAT", "ANOTHERSAT", "TSSAT"};
  return n[static_cast<std::size_t>(p)];
}

inline constexpr std::string_view to_string(Complexity c) {
  constexpr std::array<std::string_view, 10> n = {"PO",     "APX_complete",  "NCW_complete", "MinDist_complete", "MinHD_complete",
                                                  "pAPX",   "pAPX_complete", "NPO_complete", "P",                "NP_complete"};
  return n[static_cast<std::size_t>(c)];
}

struct Verdict {
  Problem problem;
  Complexity complexity;
  std::string tag;
  CoCloneLabel label;
};

inline Verdict verdict(const CoCloneLabel& l, Problem p) {
  using F = Family;
  auto under = [&](F f) { return leq(l, CoCloneLabel(f)); };
  auto fam_in = [&](std::initializer_list<F> fs) { return std::find(fs.begin(), fs.end(), l.family) != fs.end(); };
  const bool s_family = is_parameterized(l.family);
  const bool affine_exact = fam_in({F::iL, F::iL0, F::iL1, F::iL2, F::iL3});
  const bool horn_exact = fam_in({F::iE, F::iE0, F::iE1, F::iE2, F::iV, F::iV0, F::iV1, F::iV2});
  auto v = [&](Complexity c, std::string tag) { return Verdict{p, c, std::move(tag), l}; };
  switch (p) {
    case Problem::NSOL:
      if (under(F::iM2)) return v(Complexity::PO, "monotone_mincut");
      if (under(F::iD1)) return v(Complexity::PO, "2affine_exact");
      if (s_family || l.family == F::iD2)
        return v(Complexity::APX_complete, under(F::iD2) ? "bijunctive_2approx" : "ihsb_rounding");
      if (affine_exact) return v(Complexity::NCW_complete, "affine_exact");
      if (horn_exact) return v(Complexity::MinHD_complete, "feasible_napprox");
      if (fam_in({F::iN, F::iI, F::iI0, F::iI1})) return v(Complexity::pAPX_complete, "feasible_napprox");
      return v(Complexity::NPO_complete, "exhaustive_fallback");
    case Problem::XSOL:
      if (s_family) return v(Complexity::PO, "ihsb_closure");
      if (under(F::iD2)) return v(Complexity::PO, "bijunctive_flip");
      if (affine_exact) return v(Complexity::MinDist_complete, "affine_mindist");
      if (horn_exact) return v(Complexity::MinHD_complete, "horn_turing");
      if (fam_in({F::iI, F::iN, F::iN2})) return v(Complexity::pAPX, "anothersat_napprox");
      return v(Complexity::NPO_complete, "exhaustive_fallback");
    case Problem::MSD:
      if (under(F::iE2)) return v(Complexity::PO, "horn_hyperres");
      if (under(F::iV2)) return v(Complexity::PO, "dual_horn_hyperres");
      if (under(F::iD2)) return v(Complexity::PO, "bijunctive_closure");
      if (affine_exact) return v(Complexity::MinDist_complete, "affine_mindist");
      if (fam_in({F::iN, F::iI})) return v(Complexity::pAPX, "tssat_napprox");
      return v(Complexity::NPO_complete, "exhaustive_fallback");
    case Problem::SAT:
      if (under(F::iI0)) return v(Complexity::P, "constant_zero");
      if (under(F::iI1)) return v(Complexity::P, "constant_one");
      if (under(F::iE2)) return v(Complexity::P, "horn_propagation");
      if (under(F::iV2)) return v(Complexity::P, "dual_horn_propagation");
      if (under(F::iD2)) return v(Complexity::P, "two_sat");
      if (under(F::iL2)) return v(Complexity::P, "gf2_elimination");
      return v(Complexity::NP_complete, "exhaustive_search");
    case Problem::ANOTHERSAT:
      if (under(F::iI) || under(F::iN2)) return v(Complexity::P, "complement_or_constants");
      if (under(F::iE2) || under(F::iV2) || under(F::iD2) || under(F::iL2)) return v(Complexity::P, "flip_resolve");
      return v(Complexity::NP_complete, "exhaustive_search");
    case Problem::TSSAT:
      if (under(F::iE2) || under(F::iV2) || under(F::iD2) || under(F::iL2) || under(F::iI))
        return v(Complexity::P, "sat_then_anothersat");
      return v(Complexity::NP_complete, "exhaustive_search");
  }
  fail(ErrorKind::Internal, "unknown problem");
}

inline Verdict verdict(const Language& lang, Problem p) { return verdict(classify(lang), p); }

inline constexpr std::array<Problem, 6> kAllProblems = {Problem::NSOL, Problem::XSOL, Problem::MSD,
                                                         Problem::SAT,  Problem::ANOTHERSAT, Problem::TSSAT};

}  // namespace boolhd
