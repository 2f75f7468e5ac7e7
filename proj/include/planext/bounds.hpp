#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace planext {

// A proven upper bound on ex(n,H), valid for n >= min_n.
struct ClosedFormBound {
  std::string formula;
  int min_n = 0;
  Rational value;
};

inline Rational bound_c3(int n) { return Rational(2 * n - 4); }
inline Rational bound_k4(int n) { return Rational(3 * n - 6); }
inline Rational bound_c4(int n) { return Rational(15 * (n - 2), 7); }
inline Rational bound_c5(int n) { return Rational(12 * (n - 2), 5); }
inline Rational bound_c5_large(int n) { return Rational(12 * n - 33, 5); }

// Bounds in force for (pattern, n). Pattern keys: "c3", "c4", "c5", "k4"; "k3" aliases "c3".
// Entries whose validity threshold exceeds n are returned with value unset via `pending`.
struct BoundReport {
  std::vector<ClosedFormBound> applicable;
  std::vector<ClosedFormBound> pending;  // formula known, n below its range
  int min_n = 0;                         // validity threshold of the weakest bound
};

inline std::optional<BoundReport> bounds_for(const std::string& pattern, int n) {
  BoundReport r;
  auto add = [&](std::string f, int min_n, Rational (*fn)(int)) {
    ClosedFormBound b{std::move(f), min_n, min_n <= n ? fn(n) : Rational(0)};
    (min_n <= n ? r.applicable : r.pending).push_back(b);
  };
  if (pattern == "c3" || pattern == "k3") {
    r.min_n = 3;
    add("2n-4", 3, bound_c3);
  } else if (pattern == "k4") {
    r.min_n = 3;
    add("3n-6", 3, bound_k4);
  } else if (pattern == "c4") {
    r.min_n = 4;
    add("15(n-2)/7", 4, bound_c4);
  } else if (pattern == "c5") {
    r.min_n = 5;
    add("12(n-2)/5", 5, bound_c5);
    add("(12n-33)/5", 11, bound_c5_large);
  } else {
    return std::nullopt;
  }
  return r;
}

// Smallest floor over every proven bound for the pattern, always including planarity.
inline std::optional<long long> edge_ceiling(const std::string& pattern, int n) {
  std::optional<long long> best;
  auto take = [&](long long v) {
    if (!best || v < *best) best = v;
  };
  if (n >= 3) take(3LL * n - 6);
  if (n <= 2) take(static_cast<long long>(n) * (n - 1) / 2);
  if (auto r = bounds_for(pattern, n))
    for (const auto& b : r->applicable) take(b.value.floor());
  return best;
}

}  // namespace planext
