#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boolhd/postlattice.hpp"

namespace boolhd {

/// Bit vector over the variables of a formula; index i is variable x_{i+1}.
using Assignment = std::vector<std::uint8_t>;

enum class GuaranteeKind { Exact, Ratio, NApprox };

struct Guarantee {
  GuaranteeKind kind = GuaranteeKind::Exact;
  std::int64_t num = 1;
  std::int64_t den = 1;

  static Guarantee exact() { return {}; }
  static Guarantee ratio(std::int64_t n, std::int64_t d = 1) { return {GuaranteeKind::Ratio, n, d}; }
  static Guarantee n_approx() { return {GuaranteeKind::NApprox, 0, 1}; }

  std::string to_string() const {
    switch (kind) {
      case GuaranteeKind::Exact: return "exact";
      case GuaranteeKind::NApprox: return "n_approx";
      case GuaranteeKind::Ratio:
        return "ratio(" + std::to_string(num) + (den == 1 ? "" : "/" + std::to_string(den)) + ")";
    }
    return "unknown";
  }

  /// Weaker of two guarantees, used when a result combines several routines.
  static Guarantee worst(const Guarantee& a, const Guarantee& b) {
    auto rank = [](const Guarantee& g) { return static_cast<int>(g.kind); };
    if (rank(a) != rank(b)) return rank(a) > rank(b) ? a : b;
    if (a.kind == GuaranteeKind::Ratio && a.num * b.den < b.num * a.den) return b;
    return a;
  }

  bool operator==(const Guarantee&) const = default;
};

enum class Mode { Auto, Exact, Approx };

inline Mode parse_mode(const std::string& s) {
  if (s == "auto") return Mode::Auto;
  if (s == "exact") return Mode::Exact;
  if (s == "approx") return Mode::Approx;
  fail(ErrorKind::Parse, "unknown mode '" + s + "'");
}

struct SolverOptions {
  Mode mode = Mode::Auto;
  int cap = 24;  // variable count above which exponential routines refuse
};

struct SolveOutcome {
  int value = 0;
  Assignment witness;
  std::optional<Assignment> witness2;  // second model for MSD
  Guarantee guarantee;
  std::optional<Verdict> verdict;
  std::string route;
};

}  // namespace boolhd
