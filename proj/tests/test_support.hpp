#pragma once

// Shared helpers for the test suites: an independent 3x3 matrix realization
// (used as the oracle for structure constants and complexification
// isomorphisms) and deterministic random generators over exact rationals.

#include <array>
#include <random>
#include <vector>

#include "plab/algebra.hpp"
#include "plab/cochain.hpp"
#include "plab/quadric.hpp"

namespace plab::testing {

struct M3 {
  ExactScalar e[3][3];
  static M3 unit(int i, int j, ExactScalar v = ExactScalar(1)) {
    M3 m;
    m.e[i][j] = v;
    return m;
  }
  static M3 diag(ExactScalar a, ExactScalar b, ExactScalar c) {
    M3 m;
    m.e[0][0] = a; m.e[1][1] = b; m.e[2][2] = c;
    return m;
  }
  friend M3 operator*(const M3& a, const M3& b) {
    M3 r;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) r.e[i][j] += a.e[i][k] * b.e[k][j];
    return r;
  }
  friend M3 operator-(const M3& a, const M3& b) {
    M3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.e[i][j] = a.e[i][j] - b.e[i][j];
    return r;
  }
  M3 comm(const M3& o) const { return (*this) * o - o * (*this); }
  M3 times_i() const {
    M3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.e[i][j] = ExactScalar::I() * e[i][j];
    return r;
  }
  M3 conj() const {
    M3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.e[i][j] = e[i][j].conj();
    return r;
  }
};

using Pair3 = std::array<M3, 2>;

// su(2,1) basis for H = antidiag(1,1,1), in the same order and scale as the
// production builder documents: q, v1, v2, E, T, w1, w2, p.
inline std::vector<M3> su21_basis() {
  ExactScalar one(1), i = ExactScalar::I();
  return {
      M3::unit(2, 0, i),
      M3::unit(1, 0, one) - M3::unit(2, 1, one),
      M3::unit(1, 0, i) - M3::unit(2, 1, ExactScalar(Rat(0), Rat(-1))),
      M3::diag(one, ExactScalar(0), ExactScalar(Rat(-1))),
      M3::diag(i, ExactScalar(Rat(0), Rat(-2)), i),
      M3::unit(0, 1, one) - M3::unit(1, 2, one),
      M3::unit(0, 1, i) - M3::unit(1, 2, ExactScalar(Rat(0), Rat(-1))),
      M3::unit(0, 2, i),
  };
}

// Realified sl(3,C) basis: lines x,y,z,h1,h2,a,b,c each contributing (m, im).
inline std::vector<M3> sl3_real_basis() {
  ExactScalar one(1);
  std::vector<M3> lines = {
      M3::unit(2, 0, one), M3::unit(1, 0, one), M3::unit(2, 1, one),
      M3::diag(one, ExactScalar(Rat(-1)), ExactScalar(0)),
      M3::diag(ExactScalar(0), one, ExactScalar(Rat(-1))),
      M3::unit(0, 1, one), M3::unit(1, 2, one), M3::unit(0, 2, one),
  };
  std::vector<M3> out;
  for (const auto& m : lines) {
    out.push_back(m);
    out.push_back(m.times_i());
  }
  return out;
}

inline Vec flatten_pair(const Pair3& p) {
  Vec v;
  for (const auto& blk : p)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        v.push_back(blk.e[i][j].re);
        v.push_back(blk.e[i][j].im);
      }
  return v;
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  Rat rational(int num_range = 9, int den_range = 7) {
    std::uniform_int_distribution<int> num(-num_range, num_range), den(1, den_range);
    return rat(num(gen), den(gen));
  }
  Rat nonzero_rational() {
    Rat r = rational();
    return is_zero(r) ? Rat(1) : r;
  }
  ExactScalar scalar() { return {rational(), rational()}; }
  ExactScalar nonzero_scalar() {
    ExactScalar s = scalar();
    return s.zero() ? ExactScalar(1) : s;
  }
  int index(int n) {
    std::uniform_int_distribution<int> d(0, n - 1);
    return d(gen);
  }
};

// Random sparse exact cochain of the given degree.
inline Cochain random_cochain(Rng& rng, const CochainEngine& eng, int degree, int entries = 5) {
  const GradedAlgebra& g = eng.algebra();
  auto neg = g.negative_indices();
  Cochain c(g.kind, degree);
  for (int t = 0; t < entries; ++t) {
    std::vector<int> args;
    for (int i = 0; i < degree; ++i) args.push_back(neg[rng.index(int(neg.size()))]);
    c.add(args, rng.index(g.dim), rng.rational());
  }
  return c;
}

inline QuadricPoint random_on_quadric(Rng& rng, QuadricKind k) {
  ExactScalar z1 = rng.scalar(), z2 = rng.scalar();
  if (k == QuadricKind::Hyperbolic)
    return {k, z1, z2, ExactScalar(rng.rational(), z1.norm2()),
            ExactScalar(rng.rational(), z2.norm2())};
  ExactScalar w1 = rng.scalar();
  ExactScalar w2 = (w1 - two_i() * z1 * z2.conj()).conj();
  return {k, z1, z2, w1, w2};
}

inline IsotropicAutomorphism random_automorphism(Rng& rng, QuadricKind k) {
  std::array<ExactScalar, 2> C{rng.nonzero_scalar(), rng.nonzero_scalar()};
  std::array<ExactScalar, 2> A{rng.scalar(), rng.scalar()};
  std::array<ExactScalar, 2> R;
  if (k == QuadricKind::Hyperbolic) {
    R = {ExactScalar(rng.rational()), ExactScalar(rng.rational())};
  } else {
    ExactScalar r = rng.scalar();
    R = {r, r.conj()};
  }
  return IsotropicAutomorphism(k, C, A, R, rng.index(2) == 0);
}

}  // namespace plab::testing
