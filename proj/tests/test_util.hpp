#pragma once

#include <cmath>

#include "entbasis/linalg.hpp"
#include "entbasis/rng.hpp"

namespace entbasis::testutil {

inline Complex random_complex(SplitMix64& rng) {
  return {2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0};
}

inline Mat2 random_mat2(SplitMix64& rng) {
  Mat2 m;
  m << random_complex(rng), random_complex(rng), random_complex(rng),
      random_complex(rng);
  return m;
}

inline Vec2 random_qubit(SplitMix64& rng) {
  Vec2 v;
  v << random_complex(rng), random_complex(rng);
  return v.normalized();
}

inline Vec4 random_two_qubit(SplitMix64& rng) {
  Vec4 v;
  for (int i = 0; i < 4; ++i) v(i) = random_complex(rng);
  return v.normalized();
}

// Generic U(2) element from four angles.
inline Mat2 random_unitary(SplitMix64& rng) {
  const double alpha = 6.283185307179586 * rng.next_double();
  const double beta = 6.283185307179586 * rng.next_double();
  const double gamma = 6.283185307179586 * rng.next_double();
  const double t = 1.5707963267948966 * rng.next_double();
  const double c = std::cos(t), s = std::sin(t);
  Mat2 u;
  u << std::polar(c, beta), std::polar(s, gamma),
      -std::polar(s, -gamma), std::polar(c, -beta);
  return std::polar(1.0, alpha) * u;
}

template <typename A, typename B>
double max_abs_diff(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace entbasis::testutil
