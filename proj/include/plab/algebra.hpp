#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plab/matrix.hpp"
#include "plab/scalar.hpp"

namespace plab {

enum class AlgebraKind { HyperbolicReal, EllipticReal, Sl3Complex, Sl3Sl3Complex };

enum class Factor { Left, Right, Single };

// Fine-root spaces in the block picture of sl(3,C):
//   ( g0    g_{1,0}  g_2    )
//   ( g_{-1,0}  g0   g_{0,1})
//   ( g_{-2} g_{0,-1}  g0   )
enum class RootSpace { M2, M10, M01, Cartan, P10, P01, P2 };

int root_grade(RootSpace r);
// ad(F) eigenvalue on the root space, F = diag(-1/3, 2/3, -1/3).
Rat root_f_eigenvalue(RootSpace r);
std::string root_name(RootSpace r);

std::string kind_name(AlgebraKind k);
std::optional<AlgebraKind> kind_from_name(const std::string& s);
std::string factor_name(Factor f);

struct BasisLabel {
  std::string name;
  Factor factor = Factor::Single;
  int grade = 0;
  std::optional<RootSpace> fine_root;   // set when the element spans a single root line
  std::optional<int> cartan_index;
};

struct DistinguishedElement {
  char which;    // 'E' or 'F'
  Factor factor;
  Vec element;   // coefficient vector over the basis
};

// A finite-dimensional real Lie algebra with exact structure constants, a
// |2|-grading, factor / fine-root labels and complex-structure data. The
// complex kinds are stored as real algebras of doubled dimension with an
// explicit J operator.
class GradedAlgebra {
 public:
  AlgebraKind kind;
  int dim = 0;
  std::vector<BasisLabel> basis;

  // bracket_table[i][j] = [e_i, e_j] as a sparse coefficient list.
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> bracket_table;

  Mat gram;  // <x,y> = Re trace(x . conj-transpose(y)) in the matrix realization

  std::vector<int> j_designated;  // basis indices where J is defined
  Mat j_mat;                      // column i = J(e_i) for designated i, zero otherwise

  std::vector<DistinguishedElement> distinguished;  // E per factor, F where it exists
  Vec grading_element;                              // sum of the per-factor E's

  Vec bracket(const Vec& x, const Vec& y) const;
  Rat inner(const Vec& x, const Vec& y) const;

  // J on the designated subspace; throws std::domain_error outside it.
  Vec complex_structure(const Vec& x) const;
  bool j_defined_on(int basis_index) const;

  Vec basis_vector(int i) const;
  std::vector<int> indices_of_grade(int grade) const;
  std::vector<int> negative_indices() const;  // grades -2, -1, in basis order

  bool has_full_j() const;  // J defined on the whole algebra (complex kinds)

  std::string dump_json() const;  // {kind, dim, basis[], structure_constants[]}
};

const GradedAlgebra& build_algebra(AlgebraKind kind);

// Formal complexification g (x) C as a real algebra of doubled dimension:
// basis {e_k, i.e_k}, brackets extended C-bilinearly, J = the formal i.
GradedAlgebra complexify(const GradedAlgebra& g);

}  // namespace plab
