#pragma once

#include <array>
#include <string>
#include <vector>

#include "plab/algebra.hpp"

namespace plab {

// Integer weight in fundamental-weight coordinates over the A2 diagram.
struct Weight {
  long a = 0, b = 0;
  friend bool operator==(const Weight& x, const Weight& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator<(const Weight& x, const Weight& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
  bool g_dominant() const { return a >= 0 && b >= 0; }
  // p-dominance for the Borel: every node is crossed, no constraint.
  bool p_dominant() const { return true; }
  long e_eigenvalue() const { return a + b; }          // action of E = diag(1,0,-1)
  Rat f_eigenvalue() const { return rat(a - b, 3); }   // one third of the coefficient difference
  std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

// Element of the Weyl group of A2 as a reduced word over {s1, s2}.
struct WeylElement {
  std::vector<int> word;  // entries 1 or 2; applied right to left
  int length() const { return int(word.size()); }
};

// The six elements: e, s1, s2, s1s2, s2s1, s1s2s1.
const std::vector<WeylElement>& weyl_group_a2();

Weight simple_reflection(int s, const Weight& w);
// w.lambda = w(lambda + rho) - rho with rho = (1,1).
Weight affine_action(const WeylElement& w, const Weight& lambda);

// Kostant: highest weights of H^p(p_+, V_lambda) = {w.lambda : |w| = p},
// multiplicity one; lambda must be g-dominant.
std::vector<Weight> kostant_cohomology(const Weight& lambda, int p);

enum class A2Module { Trivial, Adjoint };  // C and sl(3,C)
Weight module_highest_weight(A2Module m);

struct RootRef {
  Factor factor;
  RootSpace root;
  friend bool operator==(const RootRef& x, const RootRef& y) {
    return x.factor == y.factor && x.root == y.root;
  }
  std::string str() const;
};

struct CochainShape {
  RootRef arg1, arg2, target;
  std::string str() const;
};

// One irreducible component of H^2(p_+^L + p_+^R, coefficients).
struct CohomologyComponent {
  int degree = 2;
  Factor coefficient_side;  // which copy of sl3 the coefficients live in
  Weight weight_left, weight_right;
  long total_homogeneity = 0;
  std::array<Rat, 4> eigenvalues;  // E_L, E_R, F_L, F_R
  CochainShape shape;
};

// All components of H^2 with coefficients g^side (x) C via the Kunneth
// formula, shapes identified by exhaustive eigenvalue matching.
std::vector<CohomologyComponent> kunneth_h2(Factor side);

// Both halves: the 8 components for g^L coefficients plus the mirrored 8.
std::vector<CohomologyComponent> kunneth_h2_full();

// The bilinear signature whose (E_L, E_R, F_L, F_R) eigenvalues match the
// component; throws std::runtime_error unless the match is unique.
CochainShape identify_cochain_shape(const CohomologyComponent& comp);

// Number of components of H^p(p_+ of the complexification, g (x) C) with
// total homogeneity -ell; this equals the expected cohomology_dim up to the
// kind's realification factor.
int kostant_count(AlgebraKind kind, int p, int ell);
// The factor relating kostant_count to the direct cochain computation.
int realification_factor(AlgebraKind kind);

std::string table3_json();
std::string table4_json();

}  // namespace plab
