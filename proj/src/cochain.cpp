#include "plab/cochain.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <stdexcept>

namespace plab {

namespace {

// Sorts idx ascending; returns 0 on a repeated index, else the sign of the
// sorting permutation.
int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i)
    for (size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

Rat small_det(const std::vector<std::vector<Rat>>& m) {
  size_t n = m.size();
  if (n == 0) return Rat(1);
  if (n == 1) return m[0][0];
  Rat d(0);
  std::vector<std::vector<Rat>> sub(n - 1, std::vector<Rat>(n - 1));
  for (size_t c = 0; c < n; ++c) {
    if (is_zero(m[0][c])) continue;
    for (size_t i = 1; i < n; ++i) {
      size_t jj = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        sub[i - 1][jj++] = m[i][j];
      }
    }
    Rat term = m[0][c] * small_det(sub);
    if (c % 2) d -= term; else d += term;
  }
  return d;
}

}  // namespace

void Cochain::add(std::vector<int> args, int value, const Rat& c) {
  if (plab::is_zero(c)) return;
  int s = sort_sign(args);
  if (s == 0) return;
  auto key = std::make_pair(std::move(args), value);
  auto it = coeff.find(key);
  Rat v = (s > 0 ? c : Rat(-c));
  if (it == coeff.end()) {
    coeff.emplace(std::move(key), std::move(v));
  } else {
    it->second += v;
    if (plab::is_zero(it->second)) coeff.erase(it);
  }
}

bool Cochain::is_zero() const {
  for (const auto& [k, v] : coeff)
    if (!plab::is_zero(v)) return false;
  return true;
}

Cochain Cochain::operator+(const Cochain& o) const {
  Cochain r = *this;
  for (const auto& [k, v] : o.coeff) r.add(k.first, k.second, v);
  return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
  Cochain r = *this;
  for (const auto& [k, v] : o.coeff) r.add(k.first, k.second, -v);
  return r;
}

Cochain operator*(const Rat& s, const Cochain& c) {
  Cochain r(c.kind, c.degree);
  if (is_zero(s)) return r;
  for (const auto& [k, v] : c.coeff) r.coeff[k] = s * v;
  return r;
}

Vec Cochain::evaluate(const std::vector<int>& args, const GradedAlgebra& g) const {
  Vec out(g.dim, Rat(0));
  std::vector<int> sorted = args;
  int s = sort_sign(sorted);
  if (s == 0) return out;
  auto lo = coeff.lower_bound({sorted, 0});
  for (auto it = lo; it != coeff.end() && it->first.first == sorted; ++it)
    out[it->first.second] += (s > 0 ? it->second : Rat(-it->second));
  return out;
}

int Cochain::key_homogeneity(const GradedAlgebra& g, const std::vector<int>& args, int value) {
  int h = g.basis[value].grade;
  for (int a : args) h -= g.basis[a].grade;
  return h;
}

// ---------------------------------------------------------------------------

CochainEngine::CochainEngine(AlgebraKind kind) : g_(build_algebra(kind)) {
  // The complex kinds compute cohomology of the complex-multilinear
  // subcomplex; the real kinds (elliptic also carries a full J) use the
  // whole real cochain complex.
  sub_mode_ = kind == AlgebraKind::Sl3Complex || kind == AlgebraKind::Sl3Sl3Complex;
  neg_ = g_.negative_indices();
  for (size_t i = 0; i < neg_.size(); ++i) neg_pos_[neg_[i]] = int(i);

  Mat gneg(int(neg_.size()), int(neg_.size()));
  for (size_t i = 0; i < neg_.size(); ++i)
    for (size_t j = 0; j < neg_.size(); ++j) gneg(int(i), int(j)) = g_.gram(neg_[i], neg_[j]);
  gneg_inv_ = gneg.inverse();

  for (int a : neg_)
    for (int b : neg_) {
      if (a >= b) continue;
      for (const auto& [m, v] : g_.bracket_table[a][b]) {
        (void)v;
        bracket_pairs_into_[m].push_back({a, b});
      }
    }

  levels_.resize(kMaxDegree + 2);
  for (int p = 0; p <= kMaxDegree + 1; ++p) {
    Level& lv = levels_[p];
    std::vector<int> combo;
    // enumerate strictly increasing p-tuples over neg_
    std::function<void(size_t)> rec = [&](size_t start) {
      if (int(combo.size()) == p) {
        lv.combo_id[combo] = int(lv.combos.size());
        lv.combos.push_back(combo);
        return;
      }
      for (size_t i = start; i < neg_.size(); ++i) {
        combo.push_back(neg_[i]);
        rec(i + 1);
        combo.pop_back();
      }
    };
    rec(0);
    for (int c = 0; c < int(lv.combos.size()); ++c)
      for (int v = 0; v < g_.dim; ++v) {
        int ell = elem_homogeneity(p, c, v);
        int id = elem_id(c, v);
        lv.elem_slice_pos[id] = int(lv.slices[ell].size());
        lv.slices[ell].push_back(id);
        lv.slice_keys[ell].push_back({lv.combos[c], v});
      }
  }
}

const CochainEngine& CochainEngine::get(AlgebraKind kind) {
  static std::mutex mu;
  static std::map<AlgebraKind, const CochainEngine*> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(kind);
  if (it == cache.end())
    it = cache.emplace(kind, new CochainEngine(kind)).first;
  return *it->second;
}

int CochainEngine::elem_homogeneity(int p, int combo, int value) const {
  return Cochain::key_homogeneity(g_, levels_[p].combos[combo], value);
}

// Evaluates (d c) on a strictly increasing argument tuple, straight from the
// Chevalley-Eilenberg formula with the adjoint module action.
Vec CochainEngine::eval_differential_at(const Cochain& c, const std::vector<int>& target) const {
  Vec val(g_.dim, Rat(0));
  int k = int(target.size()) - 1;
  std::vector<int> sub;
  for (int r = 0; r <= k; ++r) {
    sub.clear();
    for (int t = 0; t <= k; ++t)
      if (t != r) sub.push_back(target[t]);
    Vec inner = c.evaluate(sub, g_);
    if (!vec_is_zero(inner)) {
      Vec b = g_.bracket(g_.basis_vector(target[r]), inner);
      for (int m = 0; m < g_.dim; ++m) {
        if (is_zero(b[m])) continue;
        if (r % 2) val[m] -= b[m]; else val[m] += b[m];
      }
    }
  }
  std::vector<int> tup;
  for (int r = 0; r <= k; ++r)
    for (int s = r + 1; s <= k; ++s) {
      const auto& br = g_.bracket_table[target[r]][target[s]];
      if (br.empty()) continue;
      for (const auto& [m, coefm] : br) {
        tup.clear();
        tup.push_back(m);
        for (int t = 0; t <= k; ++t)
          if (t != r && t != s) tup.push_back(target[t]);
        Vec inner = c.evaluate(tup, g_);
        if (vec_is_zero(inner)) continue;
        int sign = (r + s) % 2 ? -1 : 1;
        for (int q = 0; q < g_.dim; ++q) {
          if (is_zero(inner[q])) continue;
          Rat add = coefm * inner[q];
          if (sign < 0) val[q] -= add; else val[q] += add;
        }
      }
    }
  return val;
}

std::vector<std::vector<int>> CochainEngine::diff_candidates(int, const std::vector<int>& args) const {
  std::set<std::vector<int>> cands;
  for (int j : neg_) {
    if (std::binary_search(args.begin(), args.end(), j)) continue;
    std::vector<int> t = args;
    t.push_back(j);
    std::sort(t.begin(), t.end());
    cands.insert(std::move(t));
  }
  for (int m : args) {
    auto it = bracket_pairs_into_.find(m);
    if (it == bracket_pairs_into_.end()) continue;
    std::vector<int> rest;
    for (int a : args)
      if (a != m) rest.push_back(a);
    for (const auto& [a, b] : it->second) {
      if (std::binary_search(rest.begin(), rest.end(), a) ||
          std::binary_search(rest.begin(), rest.end(), b))
        continue;
      std::vector<int> t = rest;
      t.push_back(a);
      t.push_back(b);
      std::sort(t.begin(), t.end());
      cands.insert(std::move(t));
    }
  }
  return {cands.begin(), cands.end()};
}

Cochain CochainEngine::differential(const Cochain& c) const {
  if (c.kind != g_.kind)
    throw std::invalid_argument("differential: cochain belongs to a different algebra kind");
  if (c.degree > kMaxDegree)
    throw std::invalid_argument("differential: degree out of supported range");
  Cochain out(g_.kind, c.degree + 1);
  std::set<std::vector<int>> targets;
  for (const auto& [key, v] : c.coeff) {
    (void)v;
    for (auto& t : diff_candidates(c.degree, key.first)) targets.insert(std::move(t));
  }
  for (const auto& t : targets) {
    Vec val = eval_differential_at(c, t);
    for (int m = 0; m < g_.dim; ++m)
      if (!is_zero(val[m])) out.add(t, m, val[m]);
  }
  return out;
}

Mat CochainEngine::slice_d_matrix(int p, int ell) const {
  const Level& src = levels_[p];
  const Level& dst = levels_[p + 1];
  auto sit = src.slices.find(ell);
  int ncols = sit == src.slices.end() ? 0 : int(sit->second.size());
  auto dit = dst.slices.find(ell);
  int nrows = dit == dst.slices.end() ? 0 : int(dit->second.size());
  Mat m(nrows, ncols);
  if (nrows == 0 || ncols == 0) return m;
  for (int col = 0; col < ncols; ++col) {
    int id = sit->second[col];
    int combo = id / g_.dim, value = id % g_.dim;
    Cochain e(g_.kind, p);
    e.coeff[{src.combos[combo], value}] = 1;
    for (const auto& t : diff_candidates(p, src.combos[combo])) {
      Vec val = eval_differential_at(e, t);
      auto cid = dst.combo_id.find(t);
      assert(cid != dst.combo_id.end());
      for (int q = 0; q < g_.dim; ++q) {
        if (is_zero(val[q])) continue;
        int did = cid->second * g_.dim + q;
        auto pos = dst.elem_slice_pos.find(did);
        assert(pos != dst.elem_slice_pos.end());
        assert(elem_homogeneity(p + 1, cid->second, q) == ell);
        m(pos->second, col) = val[q];
      }
    }
  }
  return m;
}

Mat CochainEngine::slice_gram_matrix(int p, int ell) const {
  const Level& lv = levels_[p];
  auto it = lv.slices.find(ell);
  int n = it == lv.slices.end() ? 0 : int(it->second.size());
  Mat gm(n, n);
  std::vector<std::vector<Rat>> minor(p, std::vector<Rat>(p));
  for (int i = 0; i < n; ++i) {
    int ci = it->second[i] / g_.dim, vi = it->second[i] % g_.dim;
    for (int j = i; j < n; ++j) {
      int cj = it->second[j] / g_.dim, vj = it->second[j] % g_.dim;
      const Rat& gv = g_.gram(vi, vj);
      if (is_zero(gv)) continue;
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
          minor[a][b] = gneg_inv_(neg_pos_.at(lv.combos[ci][a]), neg_pos_.at(lv.combos[cj][b]));
      Rat lam = small_det(minor);
      if (is_zero(lam)) continue;
      gm(i, j) = lam * gv;
      gm(j, i) = gm(i, j);
    }
  }
  return gm;
}

const Mat& CochainEngine::ambient_d(int p, int ell) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(p, ell);
  auto it = d_cache_.find(key);
  if (it == d_cache_.end()) it = d_cache_.emplace(key, slice_d_matrix(p, ell)).first;
  return it->second;
}

const Mat& CochainEngine::ambient_gram(int p, int ell) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(p, ell);
  auto it = gram_cache_.find(key);
  if (it == gram_cache_.end()) it = gram_cache_.emplace(key, slice_gram_matrix(p, ell)).first;
  return it->second;
}

// Complex-multilinear generators: for each p-tuple of complex lines of g_-,
// each value line w and alpha in {1, i}, the real cochain expanding
// alpha . det(z-coordinates) (x) w. Lines are the (b, i b) basis pairs of the
// realified complex algebra.
const Mat& CochainEngine::sub_basis(int p, int ell) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(p, ell);
  auto it = sub_basis_cache_.find(key);
  if (it != sub_basis_cache_.end()) return it->second;

  const Level& lv = levels_[p];
  auto sit = lv.slices.find(ell);
  int ambient_dim = sit == lv.slices.end() ? 0 : int(sit->second.size());

  std::vector<int> neg_lines;  // base index of each g_- line
  for (int i : neg_)
    if (i % 2 == 0) neg_lines.push_back(i);
  std::vector<int> value_lines;
  for (int v = 0; v < g_.dim; v += 2) value_lines.push_back(v);

  std::vector<Vec> cols;
  std::vector<int> chosen;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (int(chosen.size()) == p) {
      for (int w : value_lines) {
        int h = g_.basis[w].grade;
        for (int b : chosen) h -= g_.basis[b].grade;
        if (h != ell) continue;
        for (int alpha = 0; alpha < 2; ++alpha) {
          Vec col(ambient_dim, Rat(0));
          for (int mask = 0; mask < (1 << p); ++mask) {
            std::vector<int> combo;
            int popcnt = 0;
            for (int a = 0; a < p; ++a) {
              int bit = (mask >> a) & 1;
              popcnt += bit;
              combo.push_back(chosen[a] + bit);
            }
            int ipow = (popcnt + alpha) % 4;
            // i^ipow = (re, im)
            Rat re(0), im(0);
            switch (ipow) {
              case 0: re = 1; break;
              case 1: im = 1; break;
              case 2: re = -1; break;
              case 3: im = -1; break;
            }
            auto cid = lv.combo_id.find(combo);
            assert(cid != lv.combo_id.end());
            if (!is_zero(re))
              col[lv.elem_slice_pos.at(elem_id(cid->second, w))] += re;
            if (!is_zero(im))
              col[lv.elem_slice_pos.at(elem_id(cid->second, w + 1))] += im;
          }
          cols.push_back(std::move(col));
        }
      }
      return;
    }
    for (size_t i = start; i < neg_lines.size(); ++i) {
      chosen.push_back(neg_lines[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);

  Mat b = cols.empty() ? Mat(ambient_dim, 0) : Mat::from_columns(cols);
  return sub_basis_cache_.emplace(key, std::move(b)).first->second;
}

Vec CochainEngine::sub_to_ambient(int p, int ell, const Vec& v) const {
  const Mat& b = sub_basis(p, ell);
  return b.apply(v);
}

const Mat& CochainEngine::mode_d(int p, int ell) const {
  if (!sub_mode_) return ambient_d(p, ell);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = sub_d_cache_.find({p, ell});
    if (it != sub_d_cache_.end()) return it->second;
  }
  const Mat& bsrc = sub_basis(p, ell);
  const Mat& bdst = sub_basis(p + 1, ell);
  Mat ambient = ambient_d(p, ell);
  Mat image(ambient.rows(), bsrc.cols());
  if (bsrc.cols() > 0 && ambient.rows() > 0) image = ambient * bsrc;
  Mat result(bdst.cols(), bsrc.cols());
  if (bdst.cols() == 0) {
    // The subcomplex target is empty; d must vanish on the subcomplex.
    assert(image.is_zero());
  } else if (bsrc.cols() > 0) {
    auto x = bdst.solve(image);
    assert(x.has_value());  // d preserves complex-multilinearity
    result = *x;
  }
  std::lock_guard<std::mutex> lock(mu_);
  return sub_d_cache_.emplace(std::make_pair(p, ell), std::move(result)).first->second;
}

const Mat& CochainEngine::mode_gram(int p, int ell) const {
  if (!sub_mode_) return ambient_gram(p, ell);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = sub_gram_cache_.find({p, ell});
    if (it != sub_gram_cache_.end()) return it->second;
  }
  const Mat& b = sub_basis(p, ell);
  Mat gm = b.transpose() * ambient_gram(p, ell) * b;
  std::lock_guard<std::mutex> lock(mu_);
  return sub_gram_cache_.emplace(std::make_pair(p, ell), std::move(gm)).first->second;
}

Mat CochainEngine::mode_dstar(int p, int ell) const {
  // adjoint of d_{p-1}: slice p -> slice p-1
  const Mat& d = mode_d(p - 1, ell);
  const Mat& gsrc = mode_gram(p, ell);
  const Mat& gdst = mode_gram(p - 1, ell);
  if (d.rows() == 0 || d.cols() == 0) return Mat(d.cols(), d.rows());
  return gdst.inverse() * d.transpose() * gsrc;
}

int CochainEngine::cohomology_dim(int p, int ell) const {
  if (p < 0 || p > kMaxDegree) throw std::invalid_argument("cohomology_dim: degree out of range");
  int dim = mode_slice_dim(p, ell);
  if (dim == 0) return 0;
  int rank_out = mode_d(p, ell).rank();
  int rank_in = p == 0 ? 0 : mode_d(p - 1, ell).rank();
  return dim - rank_out - rank_in;
}

int CochainEngine::harmonic_dim(int p, int ell) const {
  int dim = mode_slice_dim(p, ell);
  if (dim == 0) return 0;
  Mat sys = mode_d(p, ell);
  if (p > 0) sys = vstack(sys, mode_dstar(p, ell));
  return dim - sys.rank();
}

std::vector<Cochain> CochainEngine::harmonic_basis(int p, int ell) const {
  std::vector<Cochain> out;
  int dim = mode_slice_dim(p, ell);
  if (dim == 0) return out;
  Mat sys = mode_d(p, ell);
  if (p > 0) sys = vstack(sys, mode_dstar(p, ell));
  for (auto& v : sys.nullspace()) {
    Vec ambient = sub_mode_ ? sub_to_ambient(p, ell, v) : v;
    out.push_back(cochain_from_slice_vector(p, ell, ambient));
  }
  return out;
}

Cochain CochainEngine::codifferential(const Cochain& c) const {
  if (c.kind != g_.kind)
    throw std::invalid_argument("codifferential: cochain belongs to a different algebra kind");
  if (c.degree < 1) throw std::invalid_argument("codifferential: degree must be >= 1");
  if (c.degree > kMaxDegree + 1) throw std::invalid_argument("codifferential: degree out of range");
  Cochain out(g_.kind, c.degree - 1);
  // split into slices, apply the slice adjoint matrices
  std::map<int, bool> ells;
  for (const auto& [k, v] : c.coeff) {
    (void)v;
    ells[Cochain::key_homogeneity(g_, k.first, k.second)] = true;
  }
  const Level& dst = levels_[c.degree - 1];
  for (const auto& [ell, unused] : ells) {
    (void)unused;
    Vec v = slice_vector_of(c, c.degree, ell);
    const Mat& d = ambient_d(c.degree - 1, ell);
    if (d.rows() == 0 || d.cols() == 0) continue;
    Mat dstar = ambient_gram(c.degree - 1, ell).inverse() * d.transpose() *
                ambient_gram(c.degree, ell);
    Vec w = dstar.apply(v);
    auto dit = dst.slices.find(ell);
    for (size_t i = 0; i < w.size(); ++i) {
      if (is_zero(w[i])) continue;
      int id = dit->second[i];
      out.add(dst.combos[id / g_.dim], id % g_.dim, w[i]);
    }
  }
  return out;
}

CochainEngine::Hodge CochainEngine::hodge_decompose(const Cochain& c) const {
  int p = c.degree;
  Hodge h{Cochain(g_.kind, p), Cochain(g_.kind, p), Cochain(g_.kind, p)};
  std::map<int, bool> ells;
  for (const auto& [k, v] : c.coeff) {
    (void)v;
    ells[Cochain::key_homogeneity(g_, k.first, k.second)] = true;
  }
  for (const auto& [ell, unused] : ells) {
    (void)unused;
    Vec v = slice_vector_of(c, p, ell);
    int n = int(v.size());
    // columns: image of d_{p-1}, image of d* from level p+1, harmonic basis
    std::vector<Vec> cols;
    std::vector<int> part;  // 0 exact, 1 coexact, 2 harmonic
    if (p > 0) {
      const Mat& din = ambient_d(p - 1, ell);
      for (int j = 0; j < din.cols(); ++j) {
        cols.push_back(din.column(j));
        part.push_back(0);
      }
    }
    const Mat& dout = ambient_d(p, ell);
    if (dout.rows() > 0 && dout.cols() > 0) {
      Mat dstar_up = ambient_gram(p, ell).inverse() * dout.transpose() *
                     ambient_gram(p + 1, ell);
      for (int j = 0; j < dstar_up.cols(); ++j) {
        cols.push_back(dstar_up.column(j));
        part.push_back(1);
      }
    }
    Mat sys = dout;
    if (p > 0) {
      const Mat& din = ambient_d(p - 1, ell);
      Mat dstar = ambient_gram(p - 1, ell).inverse() * din.transpose() * ambient_gram(p, ell);
      sys = vstack(sys, dstar);
    }
    for (auto& hv : sys.nullspace()) {
      cols.push_back(hv);
      part.push_back(2);
    }
    if (cols.empty()) continue;
    Mat basis = Mat::from_columns(cols);
    auto x = basis.solve(v);
    if (!x) throw std::logic_error("hodge_decompose: decomposition failed");
    Vec pieces[3] = {Vec(n, Rat(0)), Vec(n, Rat(0)), Vec(n, Rat(0))};
    for (size_t j = 0; j < cols.size(); ++j) {
      if (is_zero((*x)[j])) continue;
      for (int i = 0; i < n; ++i) pieces[part[j]][i] += (*x)[j] * cols[j][i];
    }
    Cochain* outs[3] = {&h.exact, &h.coexact, &h.harmonic};
    for (int t = 0; t < 3; ++t) {
      Cochain piece = cochain_from_slice_vector(p, ell, pieces[t]);
      for (const auto& [k, val] : piece.coeff) outs[t]->add(k.first, k.second, val);
    }
  }
  return h;
}

Rat CochainEngine::cochain_inner(const Cochain& a, const Cochain& b) const {
  if (a.degree != b.degree)
    throw std::invalid_argument("cochain_inner: mismatched degrees");
  Rat s(0);
  std::map<int, bool> ells;
  for (const auto& [k, v] : a.coeff) {
    (void)v;
    ells[Cochain::key_homogeneity(g_, k.first, k.second)] = true;
  }
  for (const auto& [ell, unused] : ells) {
    (void)unused;
    Vec va = slice_vector_of(a, a.degree, ell);
    Vec vb = slice_vector_of(b, b.degree, ell);
    Vec gb = ambient_gram(a.degree, ell).apply(vb);
    for (size_t i = 0; i < va.size(); ++i)
      if (!is_zero(va[i]) && !is_zero(gb[i])) s += va[i] * gb[i];
  }
  return s;
}

bool CochainEngine::is_normal(const Cochain& c) const { return codifferential(c).is_zero(); }

bool CochainEngine::is_regular(const Cochain& c) const {
  for (const auto& [k, v] : c.coeff)
    if (!is_zero(v) && Cochain::key_homogeneity(g_, k.first, k.second) <= 0) return false;
  return true;
}

Cochain CochainEngine::g0_action(int g0_basis_index, const Cochain& c) const {
  if (g_.basis[g0_basis_index].grade != 0)
    throw std::invalid_argument("g0_action: not a grade-0 basis element");
  Cochain out(g_.kind, c.degree);
  const Level& lv = levels_[c.degree];
  Vec a = g_.basis_vector(g0_basis_index);
  for (const auto& combo : lv.combos) {
    Vec val = g_.bracket(a, c.evaluate(combo, g_));
    // minus sum over arguments of c(..., [a, x_i], ...)
    for (size_t i = 0; i < combo.size(); ++i) {
      for (const auto& [m, coefm] : g_.bracket_table[g0_basis_index][combo[i]]) {
        std::vector<int> args = combo;
        args[i] = m;
        Vec inner = c.evaluate(args, g_);
        for (int q = 0; q < g_.dim; ++q)
          if (!is_zero(inner[q])) val[q] -= coefm * inner[q];
      }
    }
    for (int q = 0; q < g_.dim; ++q)
      if (!is_zero(val[q])) out.add(combo, q, val[q]);
  }
  return out;
}

Cochain CochainEngine::j_value_action(const Cochain& c) const {
  Cochain out(g_.kind, c.degree);
  for (const auto& [k, v] : c.coeff) {
    for (int q = 0; q < g_.dim; ++q) {
      const Rat& jq = g_.j_mat(q, k.second);
      if (!is_zero(jq)) out.add(k.first, q, v * jq);
    }
  }
  return out;
}

std::vector<int> CochainEngine::slice_homogeneities(int p) const {
  std::vector<int> out;
  for (const auto& [ell, elems] : levels_[p].slices) {
    (void)elems;
    out.push_back(ell);
  }
  return out;
}

int CochainEngine::ambient_slice_dim(int p, int ell) const {
  auto it = levels_[p].slices.find(ell);
  return it == levels_[p].slices.end() ? 0 : int(it->second.size());
}

int CochainEngine::mode_slice_dim(int p, int ell) const {
  if (!sub_mode_) return ambient_slice_dim(p, ell);
  return sub_basis(p, ell).cols();
}

const std::vector<std::pair<std::vector<int>, int>>& CochainEngine::slice_elems(int p, int ell) const {
  static const std::vector<std::pair<std::vector<int>, int>> empty;
  auto it = levels_[p].slice_keys.find(ell);
  return it == levels_[p].slice_keys.end() ? empty : it->second;
}

Mat CochainEngine::harmonic_system(int p, int ell) const {
  Mat sys = ambient_d(p, ell);
  if (p > 0) {
    const Mat& din = ambient_d(p - 1, ell);
    Mat dstar(din.cols(), sys.cols());
    if (din.rows() > 0 && din.cols() > 0)
      dstar = ambient_gram(p - 1, ell).inverse() * din.transpose() * ambient_gram(p, ell);
    sys = vstack(sys, dstar);
  }
  return sys;
}

Cochain CochainEngine::cochain_from_slice_vector(int p, int ell, const Vec& v) const {
  Cochain c(g_.kind, p);
  const auto& keys = slice_elems(p, ell);
  assert(v.size() == keys.size());
  for (size_t i = 0; i < keys.size(); ++i)
    if (!is_zero(v[i])) c.coeff[keys[i]] = v[i];
  return c;
}

Vec CochainEngine::slice_vector_of(const Cochain& c, int p, int ell) const {
  const auto& keys = slice_elems(p, ell);
  Vec v(keys.size(), Rat(0));
  for (size_t i = 0; i < keys.size(); ++i) {
    auto it = c.coeff.find(keys[i]);
    if (it != c.coeff.end()) v[i] = it->second;
  }
  return v;
}

bool CochainEngine::is_complex_linear(const Cochain& c) const {
  if (!g_.has_full_j()) return false;
  if (c.degree == 0) return true;
  const Level& rest_level = levels_[c.degree - 1];
  for (const auto& rest : rest_level.combos) {
    for (int a : neg_) {
      // c(J e_a, rest) vs J c(e_a, rest)
      std::vector<int> args;
      args.push_back(a);
      for (int r : rest) args.push_back(r);
      Vec lhs(g_.dim, Rat(0));
      for (int q = 0; q < g_.dim; ++q) {
        const Rat& jq = g_.j_mat(q, a);
        if (is_zero(jq)) continue;
        std::vector<int> jargs = args;
        jargs[0] = q;
        Vec e = c.evaluate(jargs, g_);
        for (int m = 0; m < g_.dim; ++m) lhs[m] += jq * e[m];
      }
      Vec rhs = g_.j_mat.apply(c.evaluate(args, g_));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace plab
