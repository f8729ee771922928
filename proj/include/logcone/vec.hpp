#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace logcone {

// Unbounded integers everywhere; intermediate polyhedral data grows past any
// fixed width even when inputs are small.
using Int = boost::multiprecision::cpp_int;

// A lattice vector is a column of Ints.
using Vec = std::vector<Int>;

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline int int_sign(const Int& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

inline Int int_gcd(Int a, Int b) {
  a = int_abs(a);
  b = int_abs(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Floor division valid for negative numerators.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec vec_scale(const Int& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Vec vec_neg(const Vec& a) { return vec_scale(Int(-1), a); }

inline Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const Vec& a) {
  for (const Int& x : a) {
    if (x != 0) return false;
  }
  return true;
}

inline Vec zero_vec(size_t n) { return Vec(n, Int(0)); }

inline Vec unit_vec(size_t n, size_t i) {
  Vec v(n, Int(0));
  v[i] = 1;
  return v;
}

inline Int vec_gcd(const Vec& a) {
  Int g = 0;
  for (const Int& x : a) g = int_gcd(g, x);
  return g;
}

// Divides out the gcd; the zero vector is returned unchanged.
inline Vec primitive(Vec a) {
  Int g = vec_gcd(a);
  if (g > 1) {
    for (Int& x : a) x /= g;
  }
  return a;
}

// Primitive form whose first nonzero entry is positive; canonical generator of
// the line through a.
inline Vec primitive_signed(Vec a) {
  a = primitive(std::move(a));
  for (const Int& x : a) {
    if (x != 0) {
      if (x < 0) a = vec_neg(a);
      break;
    }
  }
  return a;
}

inline bool lex_less(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

inline Int l1_norm(const Vec& a) {
  Int s = 0;
  for (const Int& x : a) s += int_abs(x);
  return s;
}

inline std::string vec_to_string(const Vec& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].str();
  }
  s += ")";
  return s;
}

}  // namespace logcone
