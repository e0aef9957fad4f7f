#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "plab/algebra.hpp"

namespace plab {

// A degree-p alternating multilinear map g_-^p -> g with exact coefficients
// over the canonical basis {dual wedge of g_- basis covectors (x) g basis
// vector}. Keys store strictly increasing argument index tuples (alternation
// is encoded by ordering).
struct Cochain {
  AlgebraKind kind;
  int degree = 0;
  std::map<std::pair<std::vector<int>, int>, Rat> coeff;

  Cochain(AlgebraKind k, int p) : kind(k), degree(p) {}

  // Adds c . (args (x) e_value); args need not be sorted, alternation signs
  // are applied; repeated arguments contribute nothing.
  void add(std::vector<int> args, int value, const Rat& c);

  bool is_zero() const;
  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  friend Cochain operator*(const Rat& s, const Cochain& c);

  // Value on basis arguments (any order); returns a coefficient vector in g.
  Vec evaluate(const std::vector<int>& args, const GradedAlgebra& g) const;

  // Homogeneity of a basis key: grade(value) - sum of argument grades.
  static int key_homogeneity(const GradedAlgebra& g, const std::vector<int>& args, int value);
};

// Per-kind chain complex of Lambda^p g_-* (x) g with homogeneity slices.
// Real kinds use the full real cochain spaces; complex kinds additionally
// carry the complex-multilinear subcomplex, which is what their cohomology
// dimensions refer to (real dimension = 2 x complex dimension).
class CochainEngine {
 public:
  static const CochainEngine& get(AlgebraKind kind);
  static constexpr int kMaxDegree = 3;  // differentials built for p = 0..3

  const GradedAlgebra& algebra() const { return g_; }

  Cochain differential(const Cochain& c) const;
  Cochain codifferential(const Cochain& c) const;  // inner-product adjoint of d
  Cochain g0_action(int g0_basis_index, const Cochain& c) const;
  Cochain j_value_action(const Cochain& c) const;  // postcompose values with J

  // Inner product on cochains induced by the compact inner product of g.
  Rat cochain_inner(const Cochain& a, const Cochain& b) const;

  // dim ker d - dim im d on the (p, ell) slice, by exact rank. For complex
  // kinds this is the real dimension of the complex-linear subcomplex
  // cohomology.
  int cohomology_dim(int p, int ell) const;
  // Independent route: dim(ker d  ∩ ker d*) on the slice.
  int harmonic_dim(int p, int ell) const;
  std::vector<Cochain> harmonic_basis(int p, int ell) const;

  struct Hodge {
    Cochain exact, coexact, harmonic;
  };
  Hodge hodge_decompose(const Cochain& c) const;

  bool is_normal(const Cochain& c) const;   // d* c = 0
  bool is_regular(const Cochain& c) const;  // slices of homogeneity <= 0 vanish

  // Slice bookkeeping (ambient basis) -------------------------------------
  std::vector<int> slice_homogeneities(int p) const;
  int ambient_slice_dim(int p, int ell) const;
  int mode_slice_dim(int p, int ell) const;  // subcomplex dim for complex kinds
  const std::vector<std::pair<std::vector<int>, int>>& slice_elems(int p, int ell) const;

  // Matrix of [d ; d*] on the ambient (p, ell) slice, used by the
  // real-form classifier for signature-restricted harmonic spaces.
  Mat harmonic_system(int p, int ell) const;

  Cochain cochain_from_slice_vector(int p, int ell, const Vec& v) const;
  Vec slice_vector_of(const Cochain& c, int p, int ell) const;

  bool complex_mode() const { return sub_mode_; }
  // Exact check that c is complex-multilinear (arguments and values).
  bool is_complex_linear(const Cochain& c) const;

 private:
  explicit CochainEngine(AlgebraKind kind);

  struct Level {
    std::vector<std::vector<int>> combos;          // strictly increasing tuples of neg indices
    std::map<std::vector<int>, int> combo_id;
    // elem = (combo_id, value); flattened id = combo_id * dim + value
    std::map<int, std::vector<int>> slices;        // ell -> elem ids, basis order
    std::map<int, int> elem_slice_pos;             // elem id -> position inside its slice
    std::map<int, std::vector<std::pair<std::vector<int>, int>>> slice_keys;
  };

  struct SliceMatrices {
    Mat d;      // slice (p, ell) -> slice (p+1, ell)
    Mat gram;   // inner product on the slice
  };

  int elem_id(int combo, int value) const { return combo * g_.dim + value; }
  int elem_homogeneity(int p, int combo, int value) const;
  Vec eval_differential_at(const Cochain& c, const std::vector<int>& target) const;
  std::vector<std::vector<int>> diff_candidates(int p, const std::vector<int>& args) const;

  const Mat& ambient_d(int p, int ell) const;
  const Mat& ambient_gram(int p, int ell) const;
  const Mat& mode_d(int p, int ell) const;
  const Mat& mode_gram(int p, int ell) const;
  Mat mode_dstar(int p, int ell) const;
  const Mat& sub_basis(int p, int ell) const;  // columns = subcomplex basis over ambient slice

  Vec sub_to_ambient(int p, int ell, const Vec& v) const;

  Mat slice_d_matrix(int p, int ell) const;
  Mat slice_gram_matrix(int p, int ell) const;

  const GradedAlgebra& g_;
  bool sub_mode_;
  std::vector<int> neg_;          // g_- basis indices
  std::map<int, int> neg_pos_;    // basis index -> position in neg_
  Mat gneg_inv_;                  // inverse Gram of g_- (dual-basis Gram)
  std::vector<Level> levels_;     // p = 0..kMaxDegree+1
  // bracket_pairs_into_[m] = pairs (a < b) of neg indices with [e_a,e_b] hitting e_m
  std::map<int, std::vector<std::pair<int, int>>> bracket_pairs_into_;

  mutable std::map<std::pair<int, int>, Mat> d_cache_, gram_cache_, sub_basis_cache_,
      sub_d_cache_, sub_gram_cache_;
  mutable std::mutex mu_;
};

}  // namespace plab
