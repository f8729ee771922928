#pragma once

// Shared helpers for the seeded property tests: a deterministic RNG, random
// integer data, and brute-force box oracles that share no search code with
// the library.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "logcone/matrix.hpp"
#include "logcone/monoid.hpp"
#include "logcone/vec.hpp"

namespace testutil {

using logcone::Int;
using logcone::Mat;
using logcone::Vec;

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(rng);
}

inline Vec rand_vec(Rng& rng, size_t n, int lo, int hi) {
  Vec v(n, Int(0));
  for (size_t i = 0; i < n; ++i) v[i] = rand_int(rng, lo, hi);
  return v;
}

inline Mat rand_mat(Rng& rng, size_t rows, size_t cols, int lo, int hi) {
  Mat m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m.data[i][j] = rand_int(rng, lo, hi);
  return m;
}

using Point = std::vector<std::int64_t>;

inline Point to_point(const Vec& v) {
  Point p;
  p.reserve(v.size());
  for (const Int& x : v) p.push_back(x.convert_to<std::int64_t>());
  return p;
}

inline Vec to_vec(const Point& p) {
  Vec v;
  v.reserve(p.size());
  for (std::int64_t x : p) v.push_back(Int(x));
  return v;
}

// All sums of the generators that stay inside [lo, hi]^n, zero included.
// Independent of the library's membership search.
inline std::set<Point> reachable_in_box(const std::vector<Vec>& gens, size_t n,
                                        std::int64_t lo, std::int64_t hi) {
  std::set<Point> seen;
  std::vector<Point> frontier;
  Point zero(n, 0);
  seen.insert(zero);
  frontier.push_back(zero);
  std::vector<Point> gs;
  for (const Vec& g : gens) gs.push_back(to_point(g));
  while (!frontier.empty()) {
    Point p = frontier.back();
    frontier.pop_back();
    for (const Point& g : gs) {
      Point q(n);
      bool inside = true;
      for (size_t i = 0; i < n; ++i) {
        q[i] = p[i] + g[i];
        inside = inside && lo <= q[i] && q[i] <= hi;
      }
      if (inside && seen.insert(q).second) frontier.push_back(q);
    }
  }
  return seen;
}

inline std::vector<Point> box_points(size_t n, std::int64_t lo,
                                     std::int64_t hi) {
  std::vector<Point> out;
  Point p(n, lo);
  for (;;) {
    out.push_back(p);
    size_t i = 0;
    while (i < n && p[i] == hi) p[i++] = lo;
    if (i == n) return out;
    ++p[i];
  }
}

inline std::int64_t det3(const Point& a, const Point& b, const Point& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) -
         a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// q = x a with x >= 0 rational.
inline bool on_ray(const Point& a, const Point& q) {
  size_t n = a.size();
  size_t k = n;
  for (size_t i = 0; i < n; ++i)
    if (a[i] != 0) k = i;
  if (k == n) {
    for (std::int64_t qi : q)
      if (qi != 0) return false;
    return true;
  }
  if (q[k] * a[k] < 0) return false;
  for (size_t i = 0; i < n; ++i)
    if (q[i] * a[k] != a[i] * q[k]) return false;
  return true;
}

// q = x a + y b with x, y >= 0 rational; a, b of any common dimension.
inline bool in_pair_cone(const Point& a, const Point& b, const Point& q) {
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      std::int64_t d = a[i] * b[j] - a[j] * b[i];
      if (d == 0) continue;
      // Cramer in coordinates (i, j), then consistency of the rest.
      std::int64_t xn = q[i] * b[j] - q[j] * b[i];
      std::int64_t yn = a[i] * q[j] - a[j] * q[i];
      if (d < 0) {
        d = -d;
        xn = -xn;
        yn = -yn;
      }
      if (xn < 0 || yn < 0) return false;
      for (size_t k = 0; k < n; ++k)
        if (q[k] * d != a[k] * xn + b[k] * yn) return false;
      return true;
    }
  }
  return on_ray(a, q);
}

// q in the cone of a full-rank triple, by signs of the Cramer numerators.
inline bool in_triple_cone(const Point& a, const Point& b, const Point& c,
                           const Point& q) {
  std::int64_t d = det3(a, b, c);
  if (d == 0) return false;
  std::int64_t xn = det3(q, b, c);
  std::int64_t yn = det3(a, q, c);
  std::int64_t zn = det3(a, b, q);
  if (d < 0) {
    xn = -xn;
    yn = -yn;
    zn = -zn;
  }
  return xn >= 0 && yn >= 0 && zn >= 0;
}

// Membership in the cone of an arbitrary generator list via Caratheodory:
// some subset of at most dim generators already contains q.
inline bool cone_member(const std::vector<Point>& gens, const Point& q) {
  bool zero = true;
  for (std::int64_t qi : q) zero = zero && qi == 0;
  if (zero) return true;
  for (const Point& a : gens)
    if (on_ray(a, q)) return true;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (in_pair_cone(gens[i], gens[j], q)) return true;
  if (!gens.empty() && gens[0].size() >= 3) {
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j)
        for (size_t k = j + 1; k < gens.size(); ++k)
          if (in_triple_cone(gens[i], gens[j], gens[k], q)) return true;
  }
  return false;
}

}  // namespace testutil
