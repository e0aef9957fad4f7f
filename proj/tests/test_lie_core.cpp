#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "test_support.hpp"

using namespace plab;
using namespace plab::testing;

namespace {

const std::vector<AlgebraKind> kAllKinds = {
    AlgebraKind::HyperbolicReal, AlgebraKind::EllipticReal, AlgebraKind::Sl3Complex,
    AlgebraKind::Sl3Sl3Complex};

int real_dim_of_grade(const GradedAlgebra& g, int grade) {
  return int(g.indices_of_grade(grade).size());
}

}  // namespace

TEST_CASE("dimensions and graded pieces") {
  const auto& hyp = build_algebra(AlgebraKind::HyperbolicReal);
  CHECK(hyp.dim == 16);
  CHECK(real_dim_of_grade(hyp, -2) == 2);
  CHECK(real_dim_of_grade(hyp, -1) == 4);

  const auto& ell = build_algebra(AlgebraKind::EllipticReal);
  CHECK(ell.dim == 16);

  const auto& sl3 = build_algebra(AlgebraKind::Sl3Complex);
  CHECK(sl3.dim == 16);  // 8 complex, stored as 16 real
  // g_-1 = g_{-1,0} + g_{0,-1}, each a complex line (2 real dims with J)
  int m10 = 0, m01 = 0;
  for (int i = 0; i < sl3.dim; ++i) {
    if (sl3.basis[i].fine_root == RootSpace::M10) ++m10;
    if (sl3.basis[i].fine_root == RootSpace::M01) ++m01;
  }
  CHECK(m10 == 2);
  CHECK(m01 == 2);

  CHECK(build_algebra(AlgebraKind::Sl3Sl3Complex).dim == 32);
}

TEST_CASE("antisymmetry and Jacobi hold exactly on all basis triples") {
  for (auto kind : kAllKinds) {
    const auto& g = build_algebra(kind);
    for (int i = 0; i < g.dim; ++i)
      for (int j = 0; j < g.dim; ++j) {
        Vec xy = g.bracket(g.basis_vector(i), g.basis_vector(j));
        Vec yx = g.bracket(g.basis_vector(j), g.basis_vector(i));
        for (int m = 0; m < g.dim; ++m) REQUIRE(xy[m] == -yx[m]);
      }
    for (int i = 0; i < g.dim; ++i) {
      Vec xx = g.bracket(g.basis_vector(i), g.basis_vector(i));
      REQUIRE(vec_is_zero(xx));
      for (int j = 0; j < g.dim; ++j)
        for (int k = 0; k < g.dim; ++k) {
          Vec a = g.bracket(g.bracket(g.basis_vector(i), g.basis_vector(j)), g.basis_vector(k));
          Vec b = g.bracket(g.bracket(g.basis_vector(j), g.basis_vector(k)), g.basis_vector(i));
          Vec c = g.bracket(g.bracket(g.basis_vector(k), g.basis_vector(i)), g.basis_vector(j));
          for (int m = 0; m < g.dim; ++m) REQUIRE(is_zero(a[m] + b[m] + c[m]));
        }
    }
  }
}

TEST_CASE("grading compatibility: [g_i, g_j] inside g_{i+j}") {
  for (auto kind : kAllKinds) {
    const auto& g = build_algebra(kind);
    for (int i = 0; i < g.dim; ++i)
      for (int j = 0; j < g.dim; ++j) {
        Vec w = g.bracket(g.basis_vector(i), g.basis_vector(j));
        int tg = g.basis[i].grade + g.basis[j].grade;
        for (int m = 0; m < g.dim; ++m)
          if (!is_zero(w[m])) REQUIRE(g.basis[m].grade == tg);
      }
  }
}

TEST_CASE("bracket of g_2 with g_2 vanishes in every kind") {
  for (auto kind : kAllKinds) {
    const auto& g = build_algebra(kind);
    for (int i : g.indices_of_grade(2))
      for (int j : g.indices_of_grade(2))
        CHECK(vec_is_zero(g.bracket(g.basis_vector(i), g.basis_vector(j))));
  }
}

TEST_CASE("ad(E) acts on g_i with eigenvalue exactly i") {
  for (auto kind : kAllKinds) {
    const auto& g = build_algebra(kind);
    for (int i = 0; i < g.dim; ++i) {
      Vec v = g.bracket(g.grading_element, g.basis_vector(i));
      for (int m = 0; m < g.dim; ++m)
        REQUIRE(v[m] == (m == i ? Rat(g.basis[i].grade) : Rat(0)));
    }
  }
}

TEST_CASE("ad(F) eigenvalues on fine-root spaces") {
  // F = diag(-1/3, 2/3, -1/3): 0 on g_{+-2}, +1 on g_{-1,0}, -1 on g_{0,-1},
  // -1 on g_{1,0}, +1 on g_{0,1}
  for (auto kind : {AlgebraKind::EllipticReal, AlgebraKind::Sl3Complex,
                    AlgebraKind::Sl3Sl3Complex}) {
    const auto& g = build_algebra(kind);
    int f_count = 0;
    for (const auto& d : g.distinguished) {
      if (d.which != 'F') continue;
      ++f_count;
      for (int i = 0; i < g.dim; ++i) {
        if (!g.basis[i].fine_root || *g.basis[i].fine_root == RootSpace::Cartan) continue;
        // F of one factor acts only on that factor
        if (kind == AlgebraKind::Sl3Sl3Complex && g.basis[i].factor != d.factor) {
          Vec v = g.bracket(d.element, g.basis_vector(i));
          REQUIRE(vec_is_zero(v));
          continue;
        }
        Rat expect = root_f_eigenvalue(*g.basis[i].fine_root);
        Vec v = g.bracket(d.element, g.basis_vector(i));
        for (int m = 0; m < g.dim; ++m)
          REQUIRE(v[m] == (m == i ? expect : Rat(0)));
      }
    }
    CHECK(f_count == (kind == AlgebraKind::Sl3Sl3Complex ? 2 : 1));
  }
}

TEST_CASE("left and right factors commute") {
  for (auto kind : {AlgebraKind::HyperbolicReal, AlgebraKind::Sl3Sl3Complex}) {
    const auto& g = build_algebra(kind);
    for (int i = 0; i < g.dim; ++i)
      for (int j = 0; j < g.dim; ++j) {
        if (g.basis[i].factor == g.basis[j].factor) continue;
        if (g.basis[i].factor == Factor::Single || g.basis[j].factor == Factor::Single) continue;
        CHECK(vec_is_zero(g.bracket(g.basis_vector(i), g.basis_vector(j))));
      }
  }
}

TEST_CASE("compact inner product: symmetric, positive definite, graded-orthogonal") {
  for (auto kind : kAllKinds) {
    const auto& g = build_algebra(kind);
    REQUIRE(g.gram == g.gram.transpose());
    REQUIRE(g.gram.is_positive_definite());
    for (int i = 0; i < g.dim; ++i) {
      CHECK(sgn(g.inner(g.basis_vector(i), g.basis_vector(i))) > 0);
      for (int j = 0; j < g.dim; ++j)
        if (g.basis[i].grade != g.basis[j].grade)
          CHECK(is_zero(g.gram(i, j)));
    }
  }
}

TEST_CASE("<E,E> = 2 in each factor") {
  for (auto kind : kAllKinds) {
    const auto& g = build_algebra(kind);
    for (const auto& d : g.distinguished)
      if (d.which == 'E') CHECK(g.inner(d.element, d.element) == Rat(2));
  }
}

TEST_CASE("complex structure: J^2 = -1 on the designated subspace") {
  for (auto kind : kAllKinds) {
    const auto& g = build_algebra(kind);
    for (int i : g.j_designated) {
      Vec ji = g.complex_structure(g.basis_vector(i));
      Vec jji = g.complex_structure(ji);
      for (int m = 0; m < g.dim; ++m) REQUIRE(jji[m] == (m == i ? Rat(-1) : Rat(0)));
    }
  }
}

TEST_CASE("complex structure rejects elements outside the designated subspace") {
  const auto& g = build_algebra(AlgebraKind::HyperbolicReal);
  for (int i : g.indices_of_grade(-2))
    CHECK_THROWS_AS(g.complex_structure(g.basis_vector(i)), std::domain_error);
  // elliptic J is defined on the whole algebra
  const auto& e = build_algebra(AlgebraKind::EllipticReal);
  CHECK(e.has_full_j());
  for (int i = 0; i < e.dim; ++i) CHECK_NOTHROW(e.complex_structure(e.basis_vector(i)));
}

TEST_CASE("elliptic J is multiplication by i: bracket is complex-bilinear") {
  const auto& g = build_algebra(AlgebraKind::EllipticReal);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) {
      Vec lhs = g.bracket(g.complex_structure(g.basis_vector(i)), g.basis_vector(j));
      Vec rhs = g.complex_structure(g.bracket(g.basis_vector(i), g.basis_vector(j)));
      REQUIRE(lhs == rhs);
    }
}

TEST_CASE("J is g0-equivariant on the designated subspace") {
  for (auto kind : kAllKinds) {
    const auto& g = build_algebra(kind);
    for (int a : g.indices_of_grade(0))
      for (int x : g.j_designated) {
        Vec ax = g.bracket(g.basis_vector(a), g.basis_vector(x));
        // [a, x] keeps the grade of x, hence stays J-designated
        Vec lhs = g.complex_structure(ax);
        Vec rhs = g.bracket(g.basis_vector(a), g.complex_structure(g.basis_vector(x)));
        REQUIRE(lhs == rhs);
      }
  }
}

TEST_CASE("hyperbolic: {X, JX} spans g_{-2} of the same factor") {
  const auto& g = build_algebra(AlgebraKind::HyperbolicReal);
  for (Factor f : {Factor::Left, Factor::Right}) {
    for (int x = 0; x < g.dim; ++x) {
      if (g.basis[x].grade != -1 || g.basis[x].factor != f) continue;
      Vec b = g.bracket(g.basis_vector(x), g.complex_structure(g.basis_vector(x)));
      REQUIRE(!vec_is_zero(b));
      for (int m = 0; m < g.dim; ++m)
        if (!is_zero(b[m])) {
          CHECK(g.basis[m].grade == -2);
          CHECK(g.basis[m].factor == f);
        }
    }
  }
}

TEST_CASE("cross-factor brackets of g_{-1} vanish in HyperbolicReal") {
  const auto& g = build_algebra(AlgebraKind::HyperbolicReal);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) {
      if (g.basis[i].grade != -1 || g.basis[j].grade != -1) continue;
      if (g.basis[i].factor == g.basis[j].factor) continue;
      CHECK(vec_is_zero(g.bracket(g.basis_vector(i), g.basis_vector(j))));
    }
}

TEST_CASE("bracket rejects mismatched algebra dimensions") {
  const auto& hyp = build_algebra(AlgebraKind::HyperbolicReal);
  Vec wrong(32, Rat(0));
  CHECK_THROWS_AS(hyp.bracket(hyp.basis_vector(0), wrong), std::invalid_argument);
}

namespace {

// Verifies that phi (columns over `target` coordinates, one per basis
// element of `src`) is a Lie algebra isomorphism by exact structure-constant
// comparison.
void check_isomorphism(const GradedAlgebra& src, const GradedAlgebra& target, const Mat& phi) {
  REQUIRE(phi.rows() == target.dim);
  REQUIRE(phi.cols() == src.dim);
  REQUIRE(phi.rank() == src.dim);
  for (int i = 0; i < src.dim; ++i)
    for (int j = 0; j < src.dim; ++j) {
      Vec lhs = target.bracket(phi.column(i), phi.column(j));
      Vec rhs = phi.apply(src.bracket(src.basis_vector(i), src.basis_vector(j)));
      REQUIRE(lhs == rhs);
    }
}

// Expands a pair of 3x3 matrices over the sl3(+)sl3 realified basis.
Vec sl3sl3_coords(const Mat& basis_flat, const Pair3& p) {
  auto x = basis_flat.solve(flatten_pair(p));
  REQUIRE(x.has_value());
  return *x;
}

Mat sl3sl3_basis_flat() {
  std::vector<Vec> cols;
  auto lines = sl3_real_basis();
  for (int blk = 0; blk < 2; ++blk)
    for (const auto& m : lines) {
      Pair3 p;
      p[blk] = m;
      cols.push_back(flatten_pair(p));
    }
  return Mat::from_columns(cols);
}

}  // namespace

TEST_CASE("complexification of HyperbolicReal is isomorphic to Sl3Sl3Complex") {
  const auto& hyp = build_algebra(AlgebraKind::HyperbolicReal);
  const auto& cpx = build_algebra(AlgebraKind::Sl3Sl3Complex);
  GradedAlgebra hc = complexify(hyp);
  REQUIRE(hc.dim == cpx.dim);

  // su(2,1) (x) C = sl(3,C) factorwise: b (x) 1 -> b, b (x) i -> i b
  auto su = su21_basis();
  Mat basis_flat = sl3sl3_basis_flat();
  Mat phi(cpx.dim, hc.dim);
  for (int k = 0; k < hyp.dim; ++k) {
    int blk = hyp.basis[k].factor == Factor::Left ? 0 : 1;
    const M3& m = su[k % 8];
    Pair3 p1, pi;
    p1[blk] = m;
    pi[blk] = m.times_i();
    Vec c1 = sl3sl3_coords(basis_flat, p1), ci = sl3sl3_coords(basis_flat, pi);
    for (int r = 0; r < cpx.dim; ++r) {
      phi(r, 2 * k) = c1[r];
      phi(r, 2 * k + 1) = ci[r];
    }
  }
  check_isomorphism(hc, cpx, phi);
}

TEST_CASE("complexification of EllipticReal is isomorphic to Sl3Sl3Complex") {
  const auto& ell = build_algebra(AlgebraKind::EllipticReal);
  const auto& cpx = build_algebra(AlgebraKind::Sl3Sl3Complex);
  GradedAlgebra ec = complexify(ell);
  REQUIRE(ec.dim == cpx.dim);

  // sl(3,C)_R (x) C = sl3 (+) conj(sl3): x (x) 1 -> (x, conj x),
  // x (x) i -> (ix, conj(ix))
  auto lines = sl3_real_basis();
  Mat basis_flat = sl3sl3_basis_flat();
  Mat phi(cpx.dim, ec.dim);
  for (int k = 0; k < ell.dim; ++k) {
    const M3& m = lines[k];
    Pair3 p1{m, m.conj()};
    Pair3 pi{m.times_i(), m.conj().times_i()};
    Vec c1 = sl3sl3_coords(basis_flat, p1), ci = sl3sl3_coords(basis_flat, pi);
    for (int r = 0; r < cpx.dim; ++r) {
      phi(r, 2 * k) = c1[r];
      phi(r, 2 * k + 1) = ci[r];
    }
  }
  check_isomorphism(ec, cpx, phi);
}

TEST_CASE("algebra JSON dump structure") {
  for (auto kind : kAllKinds) {
    const auto& g = build_algebra(kind);
    auto j = nlohmann::json::parse(g.dump_json());
    CHECK(j["schema_version"] == 1);
    CHECK(j["kind"] == kind_name(kind));
    CHECK(j["dim"] == g.dim);
    CHECK(int(j["basis"].size()) == g.dim);
    CHECK(j["structure_constants"].size() > 0);
    // sparse triples index into the basis and parse as exact rationals
    for (const auto& t : j["structure_constants"]) {
      CHECK(t[0].get<int>() < g.dim);
      CHECK_NOTHROW(rat_parse(t[3].get<std::string>()));
    }
  }
}
