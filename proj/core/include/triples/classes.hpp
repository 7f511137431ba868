#pragma once

#include <cstdint>
#include <stdexcept>

// Numerical Grothendieck classes of a genus-g curve and of holomorphic
// triples over it, the class maps of the three embeddings, and the Euler
// pairing.  Everything here is exact integer arithmetic.

namespace triples {

struct CurveClass {
  long long r = 0;  // rank
  long long d = 0;  // degree

  bool operator==(const CurveClass&) const = default;
};

// A class is effective when it can be realized by a sheaf: nonnegative rank,
// and torsion classes (r = 0) need nonnegative degree.
inline bool is_effective(const CurveClass& x) {
  if (x.r < 0) return false;
  if (x.r == 0 && x.d < 0) return false;
  return true;
}

struct TripleClass {
  long long r1 = 0, d1 = 0, r2 = 0, d2 = 0;

  bool operator==(const TripleClass&) const = default;
  bool is_zero() const { return r1 == 0 && d1 == 0 && r2 == 0 && d2 == 0; }

  TripleClass operator+(const TripleClass& o) const {
    return {r1 + o.r1, d1 + o.d1, r2 + o.r2, d2 + o.d2};
  }
  TripleClass operator-(const TripleClass& o) const {
    return {r1 - o.r1, d1 - o.d1, r2 - o.r2, d2 - o.d2};
  }
  TripleClass operator-() const { return {-r1, -d1, -r2, -d2}; }

  CurveClass first() const { return {r1, d1}; }
  CurveClass second() const { return {r2, d2}; }
};

struct Genus {
  int g;
  explicit Genus(int genus) : g(genus) {
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
  }
};

enum class Embedding { i, j, l };
enum class Projection { istar, jshriek, ishriek, jstar };

inline TripleClass embed(Embedding which, const CurveClass& x) {
  switch (which) {
    case Embedding::i: return {x.r, x.d, 0, 0};
    case Embedding::j: return {0, 0, x.r, x.d};
    case Embedding::l: return {x.r, x.d, x.r, x.d};
  }
  return {};
}

// Class maps of the SOD adjoints.  ishriek and jstar are cone classes:
// [C(phi)] = [E2] - [E1], with the [-1] shift negating for ishriek.
inline CurveClass project(Projection which, const TripleClass& e) {
  switch (which) {
    case Projection::istar: return {e.r1, e.d1};
    case Projection::jshriek: return {e.r2, e.d2};
    case Projection::ishriek: return {e.r1 - e.r2, e.d1 - e.d2};
    case Projection::jstar: return {e.r2 - e.r1, e.d2 - e.d1};
  }
  return {};
}

// Euler pairing on the curve: chi((r,d),(r',d')) = rd' - dr' + (1-g) rr'.
inline long long euler_pair_curve(const Genus& g, const CurveClass& x,
                                  const CurveClass& y) {
  return x.r * y.d - x.d * y.r +
         static_cast<long long>(1 - g.g) * x.r * y.r;
}

// Euler pairing on triple classes.  The bilinear form is pinned by three
// requirements: it restricts to the curve pairing on the i- and j-blocks,
// and it vanishes on chi(j-class, i-class) because of the semiorthogonal
// decomposition.  The remaining cross block chi(i-class, j-class) is forced
// by the diagonal identity -chi(e,e) = d2 r1 - d1 r2 at g = 1.
inline long long euler_pair(const Genus& g, const TripleClass& e,
                            const TripleClass& f) {
  return euler_pair_curve(g, e.first(), f.first()) +
         euler_pair_curve(g, e.second(), f.second()) -
         euler_pair_curve(g, e.first(), f.second());
}

}  // namespace triples
