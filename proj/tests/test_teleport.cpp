#include <doctest.h>

#include <cmath>

#include "entbasis/teleport.hpp"
#include "test_util.hpp"

using namespace entbasis;
using namespace entbasis::testutil;

namespace {

const double kSqrt2 = std::sqrt(2.0);

Mat2 m2(Complex a, Complex b, Complex c, Complex d) {
  Mat2 m;
  m << a, b, c, d;
  return m;
}

Vec2 v2(Complex a, Complex b) {
  Vec2 v;
  v << a, b;
  return v;
}

// Branch map for outcome k when the pair is prepared on basis matrix i:
// the transposed product of conj(matrix_k) with matrix_i.
Mat2 branch_map(const EntangledBasis& basis, int k, int i) {
  return (basis.matrices[k].conjugate() * basis.matrices[i]).transpose();
}

}  // namespace

TEST_CASE("fidelity") {
  const Vec2 zero = v2(1, 0), one = v2(0, 1);
  CHECK(fidelity(zero, zero) == doctest::Approx(1.0));
  CHECK(fidelity(zero, one) == doctest::Approx(0.0));
  CHECK(fidelity(zero, v2(1 / kSqrt2, 1 / kSqrt2)) == doctest::Approx(0.5));
  // Global phase is irrelevant.
  CHECK(fidelity(zero, v2(Complex(0, 1), 0)) == doctest::Approx(1.0));
}

TEST_CASE("decompose on the standard maximally entangled basis") {
  const auto bell = builtin_basis(Family::bell);
  const Vec2 psi = v2(Complex(0.6, 0.0), Complex(0.0, 0.8));
  const Complex a = psi(0), b = psi(1);
  const auto branches = decompose(psi, 0, bell);

  const Vec2 expected[4] = {
      v2(a, b) / 2.0,
      v2(a, -b) / 2.0,
      v2(b, a) / 2.0,
      v2(-b, a) / 2.0,
  };
  for (int k = 0; k < 4; ++k) {
    CHECK(branches[k].k == k);
    CHECK(max_abs_diff(branches[k].gamma_prime, expected[k]) < 1e-15);
    CHECK(branches[k].probability == doctest::Approx(0.25));
  }
}

TEST_CASE("decompose phase-family cross branch") {
  const double theta = 0.9;
  const auto basis = builtin_basis(Family::phase, theta);
  const Vec2 psi = v2(Complex(0.6, 0.0), Complex(0.0, 0.8));
  const auto branches = decompose(psi, 0, basis);
  // Outcome on the third basis vector while sending on the first.
  const Vec2 expected =
      v2(-std::polar(1.0, theta) * psi(1), psi(0)) / 2.0;
  CHECK(max_abs_diff(branches[2].gamma_prime, expected) < 1e-13);

  double total = 0;
  for (const auto& br : branches) total += br.probability;
  CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("decompose rejects unnormalized input") {
  const auto bell = builtin_basis(Family::bell);
  CHECK_THROWS_AS(decompose(v2(1, 1), 0, bell), UnnormalizedInput);
}

TEST_CASE("corrections on the standard basis are the usual gates") {
  const auto bell = builtin_basis(Family::bell);
  const Mat2 expected_unitary[4] = {
      Mat2::Identity(),
      m2(1, 0, 0, -1),
      m2(0, 1, 1, 0),
      m2(0, 1, -1, 0),
  };
  for (int k = 0; k < 4; ++k) {
    const CorrectionMap corr = correction(k, 0, bell);
    CHECK(max_abs_diff(corr.unitary, expected_unitary[k]) < 1e-12);
    // Exact correction inverts the branch map outright.
    CHECK(max_abs_diff((corr.exact * branch_map(bell, k, 0)).eval(),
                       Mat2::Identity()) < 1e-12);
  }
}

TEST_CASE("hyperbolic diagonal branch correction") {
  const double theta = 1.0;
  const auto basis = builtin_basis(Family::hyperbolic, theta);
  const double t2 = std::tanh(2.0 * theta);

  const Mat2 map = branch_map(basis, 0, 0);
  CHECK(max_abs_diff(map, m2(1, t2, t2, 1) / 2.0) < 1e-13);

  const CorrectionMap corr = correction(0, 0, basis);
  CHECK(max_abs_diff((corr.exact * map).eval(), Mat2::Identity()) < 1e-12);
  // The map is positive hermitian, so its unitary part is the identity.
  CHECK(max_abs_diff(corr.unitary, Mat2::Identity()) < 1e-12);
}

TEST_CASE("correction rejects bases with singular members") {
  // Orthonormal but singular matrices describe product states; validation
  // rejects them before the branch map is ever inverted.
  EntangledBasis basis;
  basis.name = "custom";
  basis.matrices = {m2(1, 0, 0, 0), m2(0, 1, 0, 0), m2(0, 0, 1, 0),
                    m2(0, 0, 0, 1)};
  CHECK_THROWS_AS(correction(0, 0, basis), InvalidBasis);
  CHECK_THROWS_AS(decompose(v2(1, 0), 0, basis), InvalidBasis);
}

TEST_CASE("run on the standard basis: unit fidelity everywhere") {
  const auto bell = builtin_basis(Family::bell);
  const Vec2 psi = v2(Complex(0.6, 0.0), Complex(0.0, 0.8));
  const TeleportRun run0 =
      run(psi, 0, bell, 0, 1, CorrectionMode::exact);
  CHECK(run0.shots == 0);
  for (int k = 0; k < 4; ++k) {
    CHECK(run0.branches[k].probability == doctest::Approx(0.25));
    CHECK(run0.fidelity_exact[k] == doctest::Approx(1.0));
    CHECK(run0.fidelity_unitary[k] == doctest::Approx(1.0));
    CHECK(run0.counts[k] == 0);
  }
}

TEST_CASE("run hyperbolic: unitary-mode fidelity oracle") {
  const double theta = 1.0;
  const auto basis = builtin_basis(Family::hyperbolic, theta);
  const Vec2 psi = v2(1, 0);
  const TeleportRun r = run(psi, 0, basis, 0, 1, CorrectionMode::unitary);

  // Outcome 0 leaves (1, tanh2θ)/norm on Bob's side; the identity
  // correction then overlaps |0> with probability 1/(1+tanh²2θ).
  const double t2 = std::tanh(2.0 * theta);
  CHECK(r.fidelity_unitary[0] == doctest::Approx(1.0 / (1.0 + t2 * t2)));
  CHECK(r.fidelity_exact[0] == doctest::Approx(1.0));

  // Exact mode always renormalizes back to the payload.
  for (int k = 0; k < 4; ++k) {
    CHECK(r.fidelity_exact[k] == doctest::Approx(1.0));
  }
}

TEST_CASE("run sampling is deterministic and unbiased") {
  const auto bell = builtin_basis(Family::bell);
  SplitMix64 rng(7);
  const Vec2 psi = random_qubit(rng);

  const TeleportRun a = run(psi, 0, bell, 20000, 42);
  const TeleportRun b = run(psi, 0, bell, 20000, 42);
  for (int k = 0; k < 4; ++k) CHECK(a.counts[k] == b.counts[k]);

  long total = 0;
  for (int k = 0; k < 4; ++k) {
    total += a.counts[k];
    // 4-sigma band around 5000 for p = 1/4, n = 20000.
    const double sigma = std::sqrt(20000 * 0.25 * 0.75);
    CHECK(std::abs(a.counts[k] - 5000.0) < 4.0 * sigma);
  }
  CHECK(total == 20000);

  const TeleportRun c = run(psi, 0, bell, 20000, 43);
  bool any_diff = false;
  for (int k = 0; k < 4; ++k) any_diff |= (a.counts[k] != c.counts[k]);
  CHECK(any_diff);
}

TEST_CASE("exact corrections recover the payload for every family") {
  SplitMix64 rng(19);
  const std::pair<Family, double> cases[] = {
      {Family::bell, 0.0},      {Family::phase, 0.7},
      {Family::rotation, 1.1},  {Family::hyperbolic, 0.9},
      {Family::scale, 2.0},
  };
  for (const auto& [family, param] : cases) {
    const auto basis = builtin_basis(family, param);
    for (int sender = 0; sender < 4; ++sender) {
      const Vec2 psi = random_qubit(rng);
      const auto branches = decompose(psi, sender, basis);
      for (int k = 0; k < 4; ++k) {
        const CorrectionMap corr = correction(k, sender, basis);
        const Vec2 restored =
            (corr.exact * branches[k].gamma_prime).normalized();
        CHECK(fidelity(restored, psi) == doctest::Approx(1.0));
      }
    }
  }
}

// Frozen outcome-product tables: entry [k][i] is branch_map(basis, k, i).
TEST_CASE("phase-family branch maps match the closed forms") {
  const double theta = 0.65;
  const auto basis = builtin_basis(Family::phase, theta);
  const Complex e = std::polar(1.0, theta);
  const Complex ec = std::conj(e);

  const Mat2 table[4][4] = {
      // k = 0
      {m2(1, 0, 0, 1), m2(ec, 0, 0, -ec), m2(0, -1, ec, 0), m2(0, 1, ec, 0)},
      // k = 1
      {m2(e, 0, 0, -e), m2(1, 0, 0, 1), m2(0, e, 1, 0), m2(0, -e, 1, 0)},
      // k = 2
      {m2(0, -e, 1, 0), m2(0, -1, -ec, 0), m2(-1, 0, 0, -1),
       m2(1, 0, 0, -1)},
      // k = 3
      {m2(0, e, 1, 0), m2(0, 1, -ec, 0), m2(-1, 0, 0, 1), m2(1, 0, 0, 1)},
  };
  for (int k = 0; k < 4; ++k) {
    for (int i = 0; i < 4; ++i) {
      CHECK(max_abs_diff(branch_map(basis, k, i),
                         (table[k][i] / 2.0).eval()) < 1e-13);
    }
  }
}

TEST_CASE("rotation-family branch maps match the closed forms") {
  const double theta = 0.65;
  const auto basis = builtin_basis(Family::rotation, theta);
  const double c = std::cos(theta), s = std::sin(theta);
  const double c2 = std::cos(2 * theta), s2 = std::sin(2 * theta);

  const Mat2 table[4][4] = {
      {m2(c2, s2, -s2, c2), m2(-s2, c2, -c2, -s2), m2(c, s, s, -c),
       m2(-s, c, c, s)},
      {m2(-s2, c2, -c2, -s2), m2(-c2, -s2, s2, -c2), m2(-s, c, c, s),
       m2(-c, -s, -s, c)},
      {m2(c, -s, -s, -c), m2(-s, -c, -c, s), m2(1, 0, 0, 1),
       m2(0, -1, 1, 0)},
      {m2(s, c, c, -s), m2(c, -s, -s, -c), m2(0, 1, -1, 0), m2(1, 0, 0, 1)},
  };
  for (int k = 0; k < 4; ++k) {
    for (int i = 0; i < 4; ++i) {
      CHECK(max_abs_diff(branch_map(basis, k, i),
                         (table[k][i] / 2.0).eval()) < 1e-13);
    }
  }
}

TEST_CASE("hyperbolic-family branch maps match the closed forms") {
  const double theta = 0.65;
  const auto basis = builtin_basis(Family::hyperbolic, theta);
  const double ch = std::cosh(theta), sh = std::sinh(theta);
  const double t2 = std::tanh(2 * theta);
  const double c2 = std::cosh(2 * theta);
  const double r = 1.0 / (2.0 * std::sqrt(c2));

  struct Entry {
    Mat2 m;
    double scale;
  };
  const Entry table[4][4] = {
      {{m2(1, t2, t2, 1), 0.5},
       {m2(0, -1, -1, 0), 0.5 / c2},
       {m2(ch, sh, -sh, -ch), r},
       {m2(-sh, -ch, ch, sh), r}},
      {{m2(0, -1, -1, 0), 0.5 / c2},
       {m2(1, -t2, -t2, 1), 0.5},
       {m2(sh, -ch, ch, -sh), r},
       {m2(ch, -sh, sh, -ch), r}},
      {{m2(ch, -sh, sh, -ch), r},
       {m2(sh, ch, -ch, -sh), r},
       {m2(1, 0, 0, 1), 0.5},
       {m2(0, 1, 1, 0), 0.5}},
      {{m2(sh, -ch, ch, -sh), r},
       {m2(-ch, -sh, sh, ch), r},
       {m2(0, -1, -1, 0), 0.5},
       {m2(-1, 0, 0, -1), 0.5}},
  };
  for (int k = 0; k < 4; ++k) {
    for (int i = 0; i < 4; ++i) {
      CHECK(max_abs_diff(branch_map(basis, k, i),
                         (table[k][i].scale * table[k][i].m).eval()) < 1e-13);
    }
  }
}

TEST_CASE("scale-family branch maps match the closed forms") {
  const double lambda = 2.0;
  const auto basis = builtin_basis(Family::scale, lambda);
  const double n2 = 1.0 / (1.0 + lambda * lambda);
  const double r = 1.0 / std::sqrt(2.0 * (1.0 + lambda * lambda));

  struct Entry {
    Mat2 m;
    double scale;
  };
  const Entry table[4][4] = {
      {{m2(lambda * lambda, 0, 0, 1), n2},
       {m2(lambda, 0, 0, -lambda), n2},
       {m2(0, -1, lambda, 0), r},
       {m2(0, 1, lambda, 0), r}},
      {{m2(lambda, 0, 0, -lambda), n2},
       {m2(1, 0, 0, lambda * lambda), n2},
       {m2(0, lambda, 1, 0), r},
       {m2(0, -lambda, 1, 0), r}},
      {{m2(0, -lambda, 1, 0), r},
       {m2(0, -1, -lambda, 0), r},
       {m2(-1, 0, 0, -1), 0.5},
       {m2(1, 0, 0, -1), 0.5}},
      {{m2(0, lambda, 1, 0), r},
       {m2(0, 1, -lambda, 0), r},
       {m2(-1, 0, 0, 1), 0.5},
       {m2(1, 0, 0, 1), 0.5}},
  };
  for (int k = 0; k < 4; ++k) {
    for (int i = 0; i < 4; ++i) {
      CHECK(max_abs_diff(branch_map(basis, k, i),
                         (table[k][i].scale * table[k][i].m).eval()) < 1e-13);
    }
  }
}
