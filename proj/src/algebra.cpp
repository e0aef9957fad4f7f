#include "plab/algebra.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace plab {

int root_grade(RootSpace r) {
  switch (r) {
    case RootSpace::M2: return -2;
    case RootSpace::M10: case RootSpace::M01: return -1;
    case RootSpace::Cartan: return 0;
    case RootSpace::P10: case RootSpace::P01: return 1;
    case RootSpace::P2: return 2;
  }
  return 0;
}

Rat root_f_eigenvalue(RootSpace r) {
  switch (r) {
    case RootSpace::M10: return Rat(1);
    case RootSpace::M01: return Rat(-1);
    case RootSpace::P10: return Rat(-1);
    case RootSpace::P01: return Rat(1);
    default: return Rat(0);
  }
}

std::string root_name(RootSpace r) {
  switch (r) {
    case RootSpace::M2: return "g_{-2}";
    case RootSpace::M10: return "g_{-1,0}";
    case RootSpace::M01: return "g_{0,-1}";
    case RootSpace::Cartan: return "g_0";
    case RootSpace::P10: return "g_{1,0}";
    case RootSpace::P01: return "g_{0,1}";
    case RootSpace::P2: return "g_2";
  }
  return "?";
}

std::string kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::HyperbolicReal: return "hyperbolic";
    case AlgebraKind::EllipticReal: return "elliptic";
    case AlgebraKind::Sl3Complex: return "sl3";
    case AlgebraKind::Sl3Sl3Complex: return "sl3sl3";
  }
  return "?";
}

std::optional<AlgebraKind> kind_from_name(const std::string& s) {
  if (s == "hyperbolic") return AlgebraKind::HyperbolicReal;
  if (s == "elliptic") return AlgebraKind::EllipticReal;
  if (s == "sl3") return AlgebraKind::Sl3Complex;
  if (s == "sl3sl3") return AlgebraKind::Sl3Sl3Complex;
  return std::nullopt;
}

std::string factor_name(Factor f) {
  switch (f) {
    case Factor::Left: return "L";
    case Factor::Right: return "R";
    case Factor::Single: return "single";
  }
  return "?";
}

namespace {

// 3x3 matrix over the Gaussian rationals; an algebra element is one such
// block per simple factor.
struct MatC {
  ExactScalar e[3][3];
  static MatC unit(int i, int j, ExactScalar v = ExactScalar(1)) {
    MatC m;
    m.e[i][j] = v;
    return m;
  }
  static MatC diag(ExactScalar a, ExactScalar b, ExactScalar c) {
    MatC m;
    m.e[0][0] = a; m.e[1][1] = b; m.e[2][2] = c;
    return m;
  }
  MatC operator*(const MatC& o) const {
    MatC r;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) {
        if (e[i][k].zero()) continue;
        for (int j = 0; j < 3; ++j) r.e[i][j] += e[i][k] * o.e[k][j];
      }
    return r;
  }
  MatC operator-(const MatC& o) const {
    MatC r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.e[i][j] = e[i][j] - o.e[i][j];
    return r;
  }
  MatC commutator(const MatC& o) const { return (*this) * o - o * (*this); }
  MatC times_i() const {
    MatC r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.e[i][j] = ExactScalar::I() * e[i][j];
    return r;
  }
};

using Element = std::vector<MatC>;  // one block per factor

Element commutator(const Element& a, const Element& b) {
  Element r(a.size());
  for (size_t f = 0; f < a.size(); ++f) r[f] = a[f].commutator(b[f]);
  return r;
}

// Re trace(x . conj-transpose(y)), summed over blocks.
Rat block_inner(const Element& a, const Element& b) {
  Rat s(0);
  for (size_t f = 0; f < a.size(); ++f)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const ExactScalar &x = a[f].e[i][j], &y = b[f].e[i][j];
        s += x.re * y.re + x.im * y.im;  // Re(x * conj(y))
      }
  return s;
}

Vec flatten(const Element& a) {
  Vec v;
  v.reserve(a.size() * 18);
  for (const auto& blk : a)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        v.push_back(blk.e[i][j].re);
        v.push_back(blk.e[i][j].im);
      }
  return v;
}

struct RealizedBasis {
  std::vector<Element> mats;
  std::vector<BasisLabel> labels;
  // J on the matrix side, defined for designated indices only.
  std::vector<int> j_designated;
  std::vector<Element> j_images;  // parallel to j_designated
};

// su(2,1) with hermitian form H = antidiag(1,1,1): condition
// X_{ij} = -conj(X_{4-j,4-i}) in 1-based indices, trace zero.
// Basis per grade; V(z) = z E21 - conj(z) E32, W(z) = z E12 - conj(z) E23.
void append_su21(RealizedBasis& rb, Factor fac, const std::string& tag, int block, int nblocks) {
  auto put = [&](MatC m, const std::string& nm, int grade,
                 std::optional<RootSpace> root, std::optional<int> cartan) {
    Element e(nblocks);
    e[block] = m;
    rb.mats.push_back(e);
    rb.labels.push_back({nm + tag, fac, grade, root, cartan});
  };
  const ExactScalar one(1), i = ExactScalar::I();
  put(MatC::unit(2, 0, i), "q", -2, RootSpace::M2, std::nullopt);
  put(MatC::unit(1, 0, one) - MatC::unit(2, 1, one), "v1", -1, std::nullopt, std::nullopt);
  put(MatC::unit(1, 0, i) - MatC::unit(2, 1, -i), "v2", -1, std::nullopt, std::nullopt);
  put(MatC::diag(one, ExactScalar(0), -one), "E", 0, std::nullopt, 0);
  put(MatC::diag(i, ExactScalar(0, -2), i), "T", 0, std::nullopt, 1);
  put(MatC::unit(0, 1, one) - MatC::unit(1, 2, one), "w1", 1, std::nullopt, std::nullopt);
  put(MatC::unit(0, 1, i) - MatC::unit(1, 2, -i), "w2", 1, std::nullopt, std::nullopt);
  put(MatC::unit(0, 2, i), "p", 2, RootSpace::P2, std::nullopt);

  // J(V(z)) = V(iz): v1 -> v2 -> -v1; same on grade +1.
  int base = int(rb.mats.size()) - 8;
  auto pair_j = [&](int lo) {
    rb.j_designated.push_back(base + lo);
    rb.j_images.push_back(rb.mats[base + lo + 1]);
    rb.j_designated.push_back(base + lo + 1);
    Element neg(nblocks);
    neg[block] = MatC() - rb.mats[base + lo][block];
    rb.j_images.push_back(neg);
  };
  pair_j(1);  // v1, v2
  pair_j(5);  // w1, w2
}

// Realified sl(3,C): complex root-space basis, each line contributing
// (b, i b). Factor labels per root line are supplied by the caller.
void append_sl3_real(RealizedBasis& rb, const std::string& tag, int block, int nblocks,
                     Factor line_factor(RootSpace), Factor cartan_factor) {
  struct Line { MatC m; std::string nm; RootSpace root; };
  const ExactScalar one(1);
  std::vector<Line> lines = {
      {MatC::unit(2, 0, one), "x", RootSpace::M2},
      {MatC::unit(1, 0, one), "y", RootSpace::M10},
      {MatC::unit(2, 1, one), "z", RootSpace::M01},
      {MatC::diag(one, -one, ExactScalar(0)), "h1", RootSpace::Cartan},
      {MatC::diag(ExactScalar(0), one, -one), "h2", RootSpace::Cartan},
      {MatC::unit(0, 1, one), "a", RootSpace::P10},
      {MatC::unit(1, 2, one), "b", RootSpace::P01},
      {MatC::unit(0, 2, one), "c", RootSpace::P2},
  };
  int cartan_count = 0;
  for (const auto& ln : lines) {
    Factor fac = ln.root == RootSpace::Cartan ? cartan_factor : line_factor(ln.root);
    std::optional<int> cidx;
    if (ln.root == RootSpace::Cartan) cidx = cartan_count++;
    int base = int(rb.mats.size());
    for (int part = 0; part < 2; ++part) {
      Element e(nblocks);
      e[block] = part == 0 ? ln.m : ln.m.times_i();
      rb.mats.push_back(e);
      rb.labels.push_back({(part == 0 ? "" : "i") + ln.nm + tag, fac, root_grade(ln.root),
                           ln.root, cidx});
    }
    // J: b -> ib -> -b.
    rb.j_designated.push_back(base);
    rb.j_images.push_back(rb.mats[base + 1]);
    rb.j_designated.push_back(base + 1);
    Element neg(nblocks);
    neg[block] = MatC() - rb.mats[base][block];
    rb.j_images.push_back(neg);
  }
}

GradedAlgebra realize(AlgebraKind kind, const RealizedBasis& rb,
                      const std::vector<std::pair<Factor, Element>>& e_elems,
                      const std::vector<std::pair<Factor, Element>>& f_elems) {
  GradedAlgebra g;
  g.kind = kind;
  g.dim = int(rb.mats.size());
  g.basis = rb.labels;

  // Coordinates of arbitrary elements via exact solves against the
  // flattened basis matrix; all commutators are expanded in one batch.
  Mat basis_flat = Mat::from_columns([&] {
    std::vector<Vec> cols;
    for (const auto& m : rb.mats) cols.push_back(flatten(m));
    return cols;
  }());
  auto coords = [&](const Element& m) {
    auto x = basis_flat.solve(flatten(m));
    if (!x) throw std::logic_error("element outside algebra span");
    return *x;
  };

  std::vector<Vec> comm_cols;
  comm_cols.reserve(size_t(g.dim) * g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      comm_cols.push_back(flatten(commutator(rb.mats[i], rb.mats[j])));
  auto batch = basis_flat.solve(Mat::from_columns(comm_cols));
  if (!batch) throw std::logic_error("commutator outside algebra span");

  g.bracket_table.assign(g.dim, std::vector<std::vector<std::pair<int, Rat>>>(g.dim));
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (int k = 0; k < g.dim; ++k) {
        const Rat& c = (*batch)(k, i * g.dim + j);
        if (!is_zero(c)) g.bracket_table[i][j].push_back({k, c});
      }

  g.gram = Mat(g.dim, g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) g.gram(i, j) = block_inner(rb.mats[i], rb.mats[j]);

  g.j_designated = rb.j_designated;
  g.j_mat = Mat(g.dim, g.dim);
  for (size_t t = 0; t < rb.j_designated.size(); ++t) {
    Vec c = coords(rb.j_images[t]);
    for (int k = 0; k < g.dim; ++k) g.j_mat(k, rb.j_designated[t]) = c[k];
  }

  g.grading_element.assign(g.dim, Rat(0));
  for (const auto& [fac, el] : e_elems) {
    Vec c = coords(el);
    g.distinguished.push_back({'E', fac, c});
    for (int k = 0; k < g.dim; ++k) g.grading_element[k] += c[k];
  }
  for (const auto& [fac, el] : f_elems) g.distinguished.push_back({'F', fac, coords(el)});
  return g;
}

Element block_element(MatC m, int block, int nblocks) {
  Element e(nblocks);
  e[block] = m;
  return e;
}

GradedAlgebra build_hyperbolic() {
  RealizedBasis rb;
  append_su21(rb, Factor::Left, "L", 0, 2);
  append_su21(rb, Factor::Right, "R", 1, 2);
  const ExactScalar one(1);
  MatC E = MatC::diag(one, ExactScalar(0), -one);
  return realize(AlgebraKind::HyperbolicReal, rb,
                 {{Factor::Left, block_element(E, 0, 2)}, {Factor::Right, block_element(E, 1, 2)}},
                 {});
}

Factor elliptic_line_factor(RootSpace r) {
  switch (r) {
    case RootSpace::M10: case RootSpace::P10: return Factor::Left;
    case RootSpace::M01: case RootSpace::P01: return Factor::Right;
    default: return Factor::Single;
  }
}

Factor single_line_factor(RootSpace) { return Factor::Single; }

MatC f_matrix() {
  // diag(-1/3, 2/3, -1/3): acts by 0 on g_2, +1 on g_{-1,0}, -1 on g_{0,-1}.
  return MatC::diag(ExactScalar(Rat(-1, 3)), ExactScalar(Rat(2, 3)), ExactScalar(Rat(-1, 3)));
}

GradedAlgebra build_sl3_based(AlgebraKind kind) {
  RealizedBasis rb;
  const ExactScalar one(1);
  MatC E = MatC::diag(one, ExactScalar(0), -one);
  if (kind == AlgebraKind::Sl3Sl3Complex) {
    append_sl3_real(rb, "L", 0, 2, single_line_factor, Factor::Left);
    append_sl3_real(rb, "R", 1, 2, single_line_factor, Factor::Right);
    // Root lines carry the per-copy factor.
    for (auto& lbl : rb.labels)
      if (lbl.fine_root && *lbl.fine_root != RootSpace::Cartan)
        lbl.factor = lbl.name.back() == 'L' ? Factor::Left : Factor::Right;
    return realize(kind, rb,
                   {{Factor::Left, block_element(E, 0, 2)}, {Factor::Right, block_element(E, 1, 2)}},
                   {{Factor::Left, block_element(f_matrix(), 0, 2)},
                    {Factor::Right, block_element(f_matrix(), 1, 2)}});
  }
  auto line_factor =
      kind == AlgebraKind::EllipticReal ? elliptic_line_factor : single_line_factor;
  append_sl3_real(rb, "", 0, 1, line_factor, Factor::Single);
  return realize(kind, rb, {{Factor::Single, block_element(E, 0, 1)}},
                 {{Factor::Single, block_element(f_matrix(), 0, 1)}});
}

}  // namespace

Vec GradedAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (int(x.size()) != dim || int(y.size()) != dim)
    throw std::invalid_argument("bracket: mismatched algebra dimensions");
  Vec r(dim, Rat(0));
  for (int i = 0; i < dim; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim; ++j) {
      if (is_zero(y[j])) continue;
      Rat c = x[i] * y[j];
      for (const auto& [k, s] : bracket_table[i][j]) r[k] += c * s;
    }
  }
  return r;
}

Rat GradedAlgebra::inner(const Vec& x, const Vec& y) const {
  Rat s(0);
  for (int i = 0; i < dim; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim; ++j)
      if (!is_zero(y[j]) && !is_zero(gram(i, j))) s += x[i] * gram(i, j) * y[j];
  }
  return s;
}

bool GradedAlgebra::j_defined_on(int basis_index) const {
  for (int k : j_designated)
    if (k == basis_index) return true;
  return false;
}

Vec GradedAlgebra::complex_structure(const Vec& x) const {
  for (int i = 0; i < dim; ++i)
    if (!is_zero(x[i]) && !j_defined_on(i))
      throw std::domain_error("complex_structure: element outside the J-designated subspace");
  return j_mat.apply(x);
}

Vec GradedAlgebra::basis_vector(int i) const {
  Vec v(dim, Rat(0));
  v[i] = 1;
  return v;
}

std::vector<int> GradedAlgebra::indices_of_grade(int grade) const {
  std::vector<int> r;
  for (int i = 0; i < dim; ++i)
    if (basis[i].grade == grade) r.push_back(i);
  return r;
}

std::vector<int> GradedAlgebra::negative_indices() const {
  std::vector<int> r;
  for (int i = 0; i < dim; ++i)
    if (basis[i].grade < 0) r.push_back(i);
  return r;
}

bool GradedAlgebra::has_full_j() const { return int(j_designated.size()) == dim; }

std::string GradedAlgebra::dump_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["kind"] = kind_name(kind);
  j["dim"] = dim;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& b : basis) {
    nlohmann::ordered_json e;
    e["label"] = b.name;
    e["factor"] = factor_name(b.factor);
    e["grade"] = b.grade;
    if (b.fine_root) e["fine_root"] = root_name(*b.fine_root);
    if (b.cartan_index) e["cartan_index"] = *b.cartan_index;
    arr.push_back(e);
  }
  j["basis"] = arr;
  auto sc = nlohmann::ordered_json::array();
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (const auto& [k, v] : bracket_table[a][b])
        sc.push_back({a, b, k, rat_str(v)});
  j["structure_constants"] = sc;
  return j.dump(2);
}

const GradedAlgebra& build_algebra(AlgebraKind kind) {
  static std::mutex mu;
  static std::map<AlgebraKind, GradedAlgebra> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(kind);
  if (it != cache.end()) return it->second;
  GradedAlgebra g = kind == AlgebraKind::HyperbolicReal ? build_hyperbolic()
                                                        : build_sl3_based(kind);
  return cache.emplace(kind, std::move(g)).first->second;
}

GradedAlgebra complexify(const GradedAlgebra& g) {
  GradedAlgebra c;
  c.kind = g.kind;  // tag retained; the result is only used for iso checks
  c.dim = 2 * g.dim;
  c.basis.resize(c.dim);
  for (int i = 0; i < g.dim; ++i) {
    c.basis[2 * i] = g.basis[i];
    c.basis[2 * i + 1] = g.basis[i];
    c.basis[2 * i + 1].name = "i*" + g.basis[i].name;
  }
  c.bracket_table.assign(c.dim, std::vector<std::vector<std::pair<int, Rat>>>(c.dim));
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (const auto& [k, v] : g.bracket_table[i][j]) {
        // [x (x) a, y (x) b] = [x,y] (x) ab for a, b in {1, i}
        c.bracket_table[2 * i][2 * j].push_back({2 * k, v});
        c.bracket_table[2 * i][2 * j + 1].push_back({2 * k + 1, v});
        c.bracket_table[2 * i + 1][2 * j].push_back({2 * k + 1, v});
        c.bracket_table[2 * i + 1][2 * j + 1].push_back({2 * k, -v});
      }
  c.j_mat = Mat(c.dim, c.dim);
  for (int i = 0; i < g.dim; ++i) {
    c.j_designated.push_back(2 * i);
    c.j_designated.push_back(2 * i + 1);
    c.j_mat(2 * i + 1, 2 * i) = 1;
    c.j_mat(2 * i, 2 * i + 1) = -1;
  }
  c.gram = Mat(c.dim, c.dim);  // not meaningful for the formal complexification
  c.grading_element.assign(c.dim, Rat(0));
  for (int i = 0; i < g.dim; ++i) c.grading_element[2 * i] = g.grading_element[i];
  return c;
}

}  // namespace plab
