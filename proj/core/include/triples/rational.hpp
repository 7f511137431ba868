#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdio>
#include <string>

namespace triples {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign(const Rat& q) { return q.sign(); }
inline int sign(const Int& n) { return n.sign(); }

// Exact conversion; every double is a dyadic rational.
inline Rat rat_from_double(double x) { return Rat(x); }

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

inline Int floor_rat(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int f = n / d;
  if (f * d != n && n < 0) --f;
  return f;
}

// Canonical "p/q" with the denominator always present.
inline std::string rat_str(const Rat& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

// Compact form: integers without the "/1".
inline std::string rat_str_compact(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return rat_str(q);
}

std::string real_str(double x);  // 12 significant digits, deterministic

// Exact complex value of a central charge on a class.
struct QC {
  Rat re, im;

  QC() = default;
  QC(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  QC operator+(const QC& o) const { return {re + o.re, im + o.im}; }
  QC operator-(const QC& o) const { return {re - o.re, im - o.im}; }
  QC operator-() const { return {-re, -im}; }
  bool operator==(const QC& o) const { return re == o.re && im == o.im; }
};

// Order of phases in (0,1] for values in the semi-closed upper half plane
// (im > 0, or im == 0 and re < 0).  Returns -1/0/+1 as phase(a) <,=,> phase(b).
inline int phase_cmp(const QC& a, const QC& b) {
  const bool a_axis = (a.im == 0);  // phase exactly 1
  const bool b_axis = (b.im == 0);
  if (a_axis && b_axis) return 0;
  if (a_axis) return 1;
  if (b_axis) return -1;
  Rat cross = a.re * b.im - a.im * b.re;  // > 0  <=>  phase(a) < phase(b)
  return -sign(cross);
}

inline std::string qc_str(const QC& z) {
  std::string s = rat_str_compact(z.re);
  s += (sign(z.im) < 0 ? "-" : "+");
  Rat a = z.im < 0 ? Rat(-z.im) : z.im;
  s += rat_str_compact(a) + "i";
  return s;
}

inline double phase_of(const QC& z);  // defined after real helpers

}  // namespace triples

#include <cmath>

namespace triples {

inline std::string real_str(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  // normalize "-0" to "0" for byte-identical output
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

// Phase in (0,1] for a value in the semi-closed upper half plane; the zero
// value has no phase and maps to NaN.
inline double phase_of(const QC& z) {
  if (z.is_zero()) return std::nan("");
  if (z.im == 0) return 1.0;
  return std::atan2(to_double(z.im), to_double(z.re)) / M_PI;
}

}  // namespace triples
