#pragma once

#include "triples/cover.hpp"

#include <cmath>
#include <random>

namespace triples::test {

inline Matrix2 rotation(double angle) {
  return Matrix2::from_doubles(std::cos(angle), -std::sin(angle),
                               std::sin(angle), std::cos(angle));
}

inline Matrix2 shear(const Rat& x) { return {1, x, 0, 1}; }

inline Matrix2 diag(const Rat& a, const Rat& d) { return {a, 0, 0, d}; }

struct RatGen {
  std::mt19937_64 rng;
  std::uniform_int_distribution<int> num{-10, 10};
  std::uniform_int_distribution<int> den{1, 6};

  explicit RatGen(unsigned seed) : rng(seed) {}
  Rat operator()() { return Rat(num(rng), den(rng)); }
};

// Random matrix with det > 0.
inline Matrix2 random_posdet(RatGen& gen) {
  for (;;) {
    Matrix2 m{gen(), gen(), gen(), gen()};
    if (m.det() > 0) return m;
  }
}

inline long long random_entry(std::mt19937_64& rng, long long bound) {
  std::uniform_int_distribution<long long> d(-bound, bound);
  return d(rng);
}

inline TripleClass random_class(std::mt19937_64& rng, long long bound) {
  return {random_entry(rng, bound), random_entry(rng, bound),
          random_entry(rng, bound), random_entry(rng, bound)};
}

}  // namespace triples::test
