#pragma once

#include <array>
#include <string>
#include <vector>

#include "plab/scalar.hpp"

namespace plab {

enum class QuadricKind { Hyperbolic, Elliptic };
std::string quadric_kind_name(QuadricKind k);

// A point of C^4. Hyperbolic: Im w_j = |z_j|^2. Elliptic points are stored
// in the sharp coordinates w1# = w1 + i w2, w2# = w1 - i w2, where the
// defining equation reads (w1 - conj(w2))/(2i) = z1 conj(z2).
struct QuadricPoint {
  QuadricKind kind;
  ExactScalar z1, z2, w1, w2;

  static QuadricPoint origin(QuadricKind k) { return {k, {}, {}, {}, {}}; }
  friend bool operator==(const QuadricPoint& a, const QuadricPoint& b) {
    return a.kind == b.kind && a.z1 == b.z1 && a.z2 == b.z2 && a.w1 == b.w1 && a.w2 == b.w2;
  }
  std::string str() const;
};

bool on_quadric(const QuadricPoint& p);

// Conversion between original and sharp elliptic coordinates.
std::array<ExactScalar, 2> to_sharp(const ExactScalar& w1, const ExactScalar& w2);
std::array<ExactScalar, 2> from_sharp(const ExactScalar& w1s, const ExactScalar& w2s);

// Kind-dependent conjugation on coordinate pairs: entrywise for hyperbolic,
// entrywise combined with the 1 <-> 2 swap for elliptic.
std::array<ExactScalar, 2> kind_conj(QuadricKind k, const std::array<ExactScalar, 2>& a);

// The C^2-valued hermitian form <z, p> entering the Heisenberg translation.
std::array<ExactScalar, 2> hermitian_form(QuadricKind k, const std::array<ExactScalar, 2>& z,
                                          const std::array<ExactScalar, 2>& p);

// Translation z* = z + p, w* = w + q + 2i<z,p>; (p, q) must be on-quadric.
QuadricPoint heisenberg_translate(const std::array<ExactScalar, 2>& p,
                                  const std::array<ExactScalar, 2>& q, const QuadricPoint& x);

// Origin-fixing automorphism in the Poincare form: Z* = C(Z+AW) D^{-1},
// W* = C conj(C) W D^{-1}, D = 1 - 2i conj(A) Z - (R + i A conj(A)) W,
// everything diagonal; optional factor swap applied afterwards.
struct IsotropicAutomorphism {
  QuadricKind kind;
  std::array<ExactScalar, 2> C, A, R;
  bool swap = false;

  // validates C invertible and the kind's reality constraint on R
  IsotropicAutomorphism(QuadricKind k, std::array<ExactScalar, 2> c, std::array<ExactScalar, 2> a,
                        std::array<ExactScalar, 2> r, bool do_swap);
  static IsotropicAutomorphism identity(QuadricKind k);
};

struct ChartEscape : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Applies the automorphism; raw version works on arbitrary points of C^4
// (used for parameter fitting), apply_automorphism checks quadric membership
// is preserved. Throws ChartEscape on a singular denominator.
QuadricPoint apply_automorphism_raw(const IsotropicAutomorphism& a, const QuadricPoint& x);
QuadricPoint apply_automorphism(const IsotropicAutomorphism& a, const QuadricPoint& x);

// Standard 2-chain mu_0 = {z = 0, v = 0} resp. {z = 0, V = 0}: points
// parametrized by real (u1, u2).
QuadricPoint mu0_point(QuadricKind k, const Rat& u1, const Rat& u2);
bool in_mu0(const QuadricPoint& p);

// Exact rational point on the unit circle from the tangent-half-angle t:
// (sin, cos) = (2t/(1+t^2), (1-t^2)/(1+t^2)).
std::array<Rat, 2> pythagorean_direction(const Rat& t);

// 1-chain families inside mu_0. Hyperbolic: u1 = alpha u2 / (1 - beta u2),
// sampled at u2 = k/(n+1). Elliptic: beta(u1^2+u2^2) + sin u1 - cos u2 = 0
// with (sin, cos) an exact unit pair; sampled along rational directions.
std::vector<QuadricPoint> one_chain_hyperbolic(const Rat& alpha, const Rat& beta, int samples);
std::vector<QuadricPoint> one_chain_elliptic(const std::array<Rat, 2>& sincos, const Rat& beta,
                                             int samples);

// x on the quadric and Z = A W at x ("matrix line" membership).
bool two_chain_membership(QuadricKind k, const std::array<ExactScalar, 2>& A,
                          const QuadricPoint& x);

std::string point_json(const QuadricPoint& p);
QuadricPoint point_from_json(QuadricKind k, const std::string& json_text);

}  // namespace plab
