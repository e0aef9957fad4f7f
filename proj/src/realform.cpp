#include "plab/realform.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace plab {

std::string SpaceRef::str() const {
  std::string s = "g";
  if (factor != Factor::Single) s += "^" + factor_name(factor);
  s += "_{" + std::to_string(grade) + "}";
  return s;
}

std::string slot_verdict_name(SlotVerdict v) {
  switch (v) {
    case SlotVerdict::Linear: return "complex-linear";
    case SlotVerdict::Antilinear: return "antilinear";
    case SlotVerdict::Real: return "real";
    case SlotVerdict::Mixed: return "mixed";
  }
  return "?";
}

SpaceRef space_of(const GradedAlgebra& g, int basis_index) {
  const BasisLabel& b = g.basis[basis_index];
  if (g.kind == AlgebraKind::HyperbolicReal) return {b.factor, b.grade};
  // elliptic: only the grade +-1 root lines carry a factor
  if (b.grade == 1 || b.grade == -1) return {b.factor, b.grade};
  return {Factor::Single, b.grade};
}

namespace {

struct Signature {
  SpaceRef a, b;  // unordered, stored sorted
  SpaceRef target;
  friend bool operator<(const Signature& x, const Signature& y) {
    if (!(x.a == y.a)) return x.a < y.a;
    if (!(x.b == y.b)) return x.b < y.b;
    return x.target < y.target;
  }
  friend bool operator==(const Signature& x, const Signature& y) {
    return x.a == y.a && x.b == y.b && x.target == y.target;
  }
};

struct Block {
  Signature sig;
  std::vector<Vec> vectors;  // ambient slice coordinates
};

std::vector<int> space_basis(const GradedAlgebra& g, const SpaceRef& s) {
  std::vector<int> out;
  for (int i = 0; i < g.dim; ++i)
    if (space_of(g, i) == s) out.push_back(i);
  return out;
}

bool space_has_j(const GradedAlgebra& g, const SpaceRef& s) {
  for (int i : space_basis(g, s))
    if (!g.j_defined_on(i)) return false;
  return true;
}

// c(J x, y) as a vector in g, for basis arguments x, y.
Vec eval_jx(const GradedAlgebra& g, const Cochain& c, int x, int y) {
  Vec out(g.dim, Rat(0));
  for (int q = 0; q < g.dim; ++q) {
    const Rat& jq = g.j_mat(q, x);
    if (is_zero(jq)) continue;
    Vec e = c.evaluate({q, y}, g);
    for (int m = 0; m < g.dim; ++m) out[m] += jq * e[m];
  }
  return out;
}

Vec apply_j(const GradedAlgebra& g, const Vec& v) { return g.j_mat.apply(v); }

// Verdict for the argument slot ranging over space S, the other slot over T.
// Tests c(Jx, y) = +-J c(x, y) for all x in S, y in T and all block members;
// by antisymmetry the same comparison decides the S-slot whichever position
// S occupies (both sides flip sign together under a swap). The target space
// must carry J for the test to apply.
SlotVerdict slot_test(const GradedAlgebra& g, const std::vector<Cochain>& cs,
                      const SpaceRef& S, const SpaceRef& T, const SpaceRef& target) {
  if (!space_has_j(g, S) || !space_has_j(g, target)) return SlotVerdict::Real;
  bool lin = true, anti = true;
  for (const auto& c : cs)
    for (int x : space_basis(g, S))
      for (int y : space_basis(g, T)) {
        if (x == y) continue;
        Vec lhs = eval_jx(g, c, x, y);                  // c(Jx, y)
        Vec rhs = apply_j(g, c.evaluate({x, y}, g));    // J c(x, y)
        for (int m = 0; m < g.dim; ++m) {
          if (lhs[m] != rhs[m]) lin = false;
          if (!is_zero(lhs[m] + rhs[m])) anti = false;
        }
        if (!lin && !anti) return SlotVerdict::Mixed;
      }
  if (lin && anti) return SlotVerdict::Linear;  // zero block only
  return lin ? SlotVerdict::Linear : SlotVerdict::Antilinear;
}

// c(Jx, Jy) == c(x,y) exactly on all pairs from (A, B)?
bool pair_invariant(const GradedAlgebra& g, const std::vector<Cochain>& cs,
                    const SpaceRef& A, const SpaceRef& B) {
  if (!space_has_j(g, A) || !space_has_j(g, B)) return false;
  for (const auto& c : cs)
    for (int x : space_basis(g, A))
      for (int y : space_basis(g, B)) {
        // c(Jx, Jy)
        Vec lhs(g.dim, Rat(0));
        for (int q = 0; q < g.dim; ++q) {
          const Rat& jq = g.j_mat(q, x);
          if (is_zero(jq)) continue;
          for (int r = 0; r < g.dim; ++r) {
            const Rat& jr = g.j_mat(r, y);
            if (is_zero(jr)) continue;
            Vec e = c.evaluate({q, r}, g);
            for (int m = 0; m < g.dim; ++m) lhs[m] += jq * jr * e[m];
          }
        }
        Vec rhs = c.evaluate({x, y}, g);
        for (int m = 0; m < g.dim; ++m)
          if (lhs[m] != rhs[m]) return false;
      }
  return true;
}

}  // namespace

std::string torsion_classify(AlgebraKind kind, const ComponentRow& row) {
  auto is_grade = [&](const SpaceRef& s, int gr) { return s.grade == gr; };
  if (kind == AlgebraKind::HyperbolicReal) {
    if (row.homogeneity == 4) return "curvature-homog-4";
    if (is_grade(row.dom1, -2) || is_grade(row.dom2, -2)) {
      Factor f = is_grade(row.dom1, -2) ? row.dom1.factor : row.dom2.factor;
      return f == Factor::Left ? "product-obstruction-L" : "product-obstruction-R";
    }
    if (row.linearity.aggregate == "antilinear-both") return "nijenhuis-J";
    if (row.linearity.aggregate.rfind("sesquilinear", 0) == 0)
      return row.target.factor == Factor::Left ? "S_L" : "S_R";
  } else if (kind == AlgebraKind::EllipticReal) {
    if (row.homogeneity == 4) return "curvature-homog-4";
    if (is_grade(row.dom1, -2) || is_grade(row.dom2, -2)) {
      Factor f = is_grade(row.dom1, -2) ? row.dom2.factor : row.dom1.factor;
      return f == Factor::Left ? "elliptic-J-obstruction-1" : "elliptic-J-obstruction-2";
    }
    if (row.dom1.factor == row.dom2.factor)
      return row.dom1.factor == Factor::Left ? "elliptic-product-L" : "elliptic-product-R";
    return row.target.factor == Factor::Left ? "elliptic-mixed-1" : "elliptic-mixed-2";
  }
  throw std::invalid_argument("torsion_classify: unknown row shape " + row.dom1.str() + " x " +
                              row.dom2.str() + " -> " + row.target.str() + " homog " +
                              std::to_string(row.homogeneity) + " aggregate " +
                              row.linearity.aggregate);
}

namespace {

LinearityType classify_block(const GradedAlgebra& g, const Block& blk,
                             std::vector<Cochain>& cochains, bool hyperbolic) {
  LinearityType lt;
  const SpaceRef &A = blk.sig.a, &B = blk.sig.b;
  lt.slot1 = slot_test(g, cochains, A, B, blk.sig.target);
  lt.slot2 = slot_test(g, cochains, B, A, blk.sig.target);
  lt.pair_invariant = pair_invariant(g, cochains, A, B);

  auto v1 = lt.slot1, v2 = lt.slot2;
  if (v1 == SlotVerdict::Real && v2 == SlotVerdict::Real) {
    lt.aggregate = "real-bilinear";
    lt.comment = "real linear in both arguments";
  } else if (v1 == SlotVerdict::Linear && v2 == SlotVerdict::Linear) {
    lt.aggregate = "linear";
    lt.comment = "complex linear in both arguments";
  } else if (v1 == SlotVerdict::Antilinear && v2 == SlotVerdict::Antilinear) {
    lt.aggregate = "antilinear-both";
    lt.comment = "antilinear in both arguments";
  } else if ((v1 == SlotVerdict::Linear && v2 == SlotVerdict::Antilinear) ||
             (v1 == SlotVerdict::Antilinear && v2 == SlotVerdict::Linear)) {
    lt.aggregate = v1 == SlotVerdict::Antilinear ? "sesquilinear(1st-anti)" : "sesquilinear(2nd-anti)";
    lt.comment = "sesquilinear";
  } else if ((v1 == SlotVerdict::Real && v2 == SlotVerdict::Linear) ||
             (v1 == SlotVerdict::Linear && v2 == SlotVerdict::Real)) {
    lt.aggregate = "linear";
    lt.comment = hyperbolic ? "real and complex linear" : "complex linear in both arguments";
  } else if (v1 == SlotVerdict::Mixed && v2 == SlotVerdict::Mixed && lt.pair_invariant) {
    // alternation of a sesquilinear form on a single complex line: neither
    // slot identity can hold, the pair identity pins the type
    lt.aggregate = "sesquilinear(slots-unresolved)";
    lt.comment = "sesquilinear";
  } else {
    lt.aggregate = "not-complex-compatible";
    lt.comment = "not complex compatible";
  }
  return lt;
}

// Splits a harmonic signature block into irreducible components using the
// g_0 torus action (which preserves harmonic spaces by equivariance). A
// single torus element rotates every complex line at the same speed, so
// linear combinations are tried; squared action matrices have integer
// eigenvalues -m^2 whose kernels give the invariant summands.
std::vector<Block> split_block(const CochainEngine& eng, int ell, const Block& blk) {
  const GradedAlgebra& g = eng.algebra();
  Mat b = Mat::from_columns(blk.vectors);
  int k = b.cols();

  std::vector<Mat> actions;  // block-coordinate matrices of the grade-0 basis
  for (int a = 0; a < g.dim; ++a) {
    if (g.basis[a].grade != 0) continue;
    std::vector<Vec> acted;
    for (const auto& v : blk.vectors) {
      Cochain c = eng.cochain_from_slice_vector(2, ell, v);
      acted.push_back(eng.slice_vector_of(eng.g0_action(a, c), 2, ell));
    }
    auto m_opt = b.solve(Mat::from_columns(acted));
    if (!m_opt)
      throw std::runtime_error("component split: g0 action does not preserve the block");
    actions.push_back(*m_opt);
  }

  std::vector<Mat> candidates = actions;
  for (size_t i = 0; i < actions.size(); ++i)
    for (size_t j = i + 1; j < actions.size(); ++j) {
      candidates.push_back(actions[i] + actions[j]);
      candidates.push_back(actions[i] - actions[j]);
    }

  for (const Mat& m : candidates) {
    Mat m2 = m * m;
    std::set<Rat> lambdas;
    for (int i = 0; i < k; ++i) lambdas.insert(m2(i, i));
    lambdas.insert(Rat(0));
    std::vector<Block> subs;
    std::set<Rat> tested;
    int total = 0;
    auto try_lambda = [&](const Rat& lam) {
      if (total >= k || !tested.insert(lam).second) return;
      Mat shifted = m2;
      for (int i = 0; i < k; ++i) shifted(i, i) -= lam;
      auto null = shifted.nullspace();
      if (null.empty()) return;
      Block sub{blk.sig, {}};
      for (const auto& t : null) sub.vectors.push_back(b.apply(t));
      total += int(null.size());
      subs.push_back(std::move(sub));
    };
    for (const Rat& lam : lambdas) try_lambda(lam);
    for (long lam = -1; lam >= -2500 && total < k; --lam) try_lambda(Rat(lam));
    if (total == k && subs.size() > 1) return subs;
  }
  return {blk};
}

std::vector<ComponentRow> rows_for_slice(const CochainEngine& eng, int ell) {
  const GradedAlgebra& g = eng.algebra();
  int hd = eng.harmonic_dim(2, ell);
  std::vector<ComponentRow> rows;
  if (hd == 0) return rows;
  const auto& keys = eng.slice_elems(2, ell);
  Mat sys = eng.harmonic_system(2, ell);

  // group slice columns by signature
  std::map<Signature, std::vector<int>> sig_cols;
  for (size_t i = 0; i < keys.size(); ++i) {
    SpaceRef sa = space_of(g, keys[i].first[0]);
    SpaceRef sb = space_of(g, keys[i].first[1]);
    if (sb < sa) std::swap(sa, sb);
    sig_cols[{sa, sb, space_of(g, keys[i].second)}].push_back(int(i));
  }

  int total = 0;
  std::vector<Block> blocks;
  for (const auto& [sig, cols] : sig_cols) {
    Mat restricted(sys.rows(), int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j)
      for (int i = 0; i < sys.rows(); ++i) restricted(i, j) = sys(i, cols[j]);
    auto null = restricted.nullspace();
    if (null.empty()) continue;
    Block blk{sig, {}};
    for (const auto& t : null) {
      Vec full(keys.size(), Rat(0));
      for (int j = 0; j < int(cols.size()); ++j) full[cols[j]] = t[j];
      blk.vectors.push_back(std::move(full));
    }
    total += int(blk.vectors.size());
    blocks.push_back(std::move(blk));
  }
  if (total != hd)
    throw std::runtime_error(
        "harmonic space does not decompose along fine signatures (dim mismatch)");

  // classify, splitting mixed blocks until verdicts are definite
  std::vector<Block> queue = std::move(blocks);
  bool hyper = g.kind == AlgebraKind::HyperbolicReal;
  while (!queue.empty()) {
    Block blk = std::move(queue.back());
    queue.pop_back();
    std::vector<Cochain> cs;
    for (const auto& v : blk.vectors) cs.push_back(eng.cochain_from_slice_vector(2, ell, v));
    LinearityType lt = classify_block(g, blk, cs, hyper);
    if (lt.aggregate == "not-complex-compatible" && !(blk.sig.a == blk.sig.b) &&
        blk.vectors.size() > 1) {
      auto subs = split_block(eng, ell, blk);
      if (subs.size() > 1) {
        for (auto& s : subs) queue.push_back(std::move(s));
        continue;
      }
    }
    ComponentRow row;
    row.homogeneity = ell;
    row.real_dim = int(blk.vectors.size());
    row.basis = std::move(cs);
    // display order: lower grade first; on (-1,-1) mixed pairs lead with
    // the target factor for antilinear rows and with the other factor for
    // sesquilinear rows
    SpaceRef d1 = blk.sig.a, d2 = blk.sig.b, tgt = blk.sig.target;
    bool swapped = false;
    if (d1.grade == d2.grade && !(d1.factor == d2.factor) && tgt.grade == -1) {
      bool anti = lt.aggregate == "antilinear-both";
      SpaceRef lead = anti ? tgt : SpaceRef{tgt.factor == Factor::Left ? Factor::Right : Factor::Left, -1};
      if (!(d1 == lead)) {
        std::swap(d1, d2);
        swapped = true;
      }
    }
    if (swapped) {
      std::swap(lt.slot1, lt.slot2);
      if (lt.aggregate == "sesquilinear(1st-anti)") lt.aggregate = "sesquilinear(2nd-anti)";
      else if (lt.aggregate == "sesquilinear(2nd-anti)") lt.aggregate = "sesquilinear(1st-anti)";
    }
    row.linearity = lt;
    row.dom1 = d1;
    row.dom2 = d2;
    row.target = tgt;
    row.torsion_label = torsion_classify(g.kind, row);
    row.embedded_vanishing = d1.grade == -1 && d2.grade == -1 && tgt.grade == -1;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const ComponentRow& x, const ComponentRow& y) {
    if (!(x.dom1 == y.dom1)) return x.dom1 < y.dom1;
    if (!(x.dom2 == y.dom2)) return x.dom2 < y.dom2;
    return x.target < y.target;
  });
  return rows;
}

}  // namespace

std::vector<ComponentRow> component_table(AlgebraKind kind) {
  if (kind != AlgebraKind::HyperbolicReal && kind != AlgebraKind::EllipticReal)
    throw std::invalid_argument("component_table: real kinds only");
  const CochainEngine& eng = CochainEngine::get(kind);
  std::vector<ComponentRow> rows;
  for (int ell : eng.slice_homogeneities(2)) {
    auto slice_rows = rows_for_slice(eng, ell);
    rows.insert(rows.end(), slice_rows.begin(), slice_rows.end());
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ComponentRow& x, const ComponentRow& y) {
    return x.homogeneity < y.homogeneity;
  });
  return rows;
}

EmbeddedVanishingReport check_embedded_vanishing(AlgebraKind kind) {
  EmbeddedVanishingReport rep;
  for (auto& row : component_table(kind)) {
    if (row.embedded_vanishing) rep.flagged.push_back(row);
    else rep.remaining.push_back(row);
  }
  return rep;
}

std::vector<std::pair<std::pair<SpaceRef, SpaceRef>, SpaceRef>> realified_kostant_signatures(
    AlgebraKind kind) {
  const GradedAlgebra& g = build_algebra(kind);
  auto dual_root = [](RootSpace r) {
    switch (r) {
      case RootSpace::M2: return RootSpace::P2;
      case RootSpace::P2: return RootSpace::M2;
      case RootSpace::M10: return RootSpace::P10;
      case RootSpace::P10: return RootSpace::M10;
      case RootSpace::M01: return RootSpace::P01;
      case RootSpace::P01: return RootSpace::M01;
      default: return RootSpace::Cartan;
    }
  };
  auto realify = [&](const RootRef& r) -> SpaceRef {
    RootSpace d = dual_root(r.root);
    int gr = root_grade(d);
    if (kind == AlgebraKind::HyperbolicReal) return {r.factor, gr};
    // elliptic: +-1 lines keep an L/R label by the root pairing, the rest is single
    if (gr == 1 || gr == -1) {
      Factor f = (d == RootSpace::M10 || d == RootSpace::P10) ? Factor::Left : Factor::Right;
      return {f, gr};
    }
    return {Factor::Single, gr};
  };
  (void)g;
  std::vector<std::pair<std::pair<SpaceRef, SpaceRef>, SpaceRef>> out;
  for (const auto& comp : kunneth_h2_full()) {
    SpaceRef a = realify(comp.shape.arg1), b = realify(comp.shape.arg2);
    if (b < a) std::swap(a, b);
    out.push_back({{a, b}, realify(comp.shape.target)});
  }
  return out;
}

namespace {

nlohmann::ordered_json row_json(const ComponentRow& row) {
  nlohmann::ordered_json r;
  r["homogeneity"] = row.homogeneity;
  r["domain"] = {row.dom1.str(), row.dom2.str()};
  r["target"] = row.target.str();
  r["real_dim"] = row.real_dim;
  r["linearity"] = {{"slot1", slot_verdict_name(row.linearity.slot1)},
                    {"slot2", slot_verdict_name(row.linearity.slot2)},
                    {"aggregate", row.linearity.aggregate},
                    {"comment", row.linearity.comment}};
  r["torsion_label"] = row.torsion_label;
  r["embedded_vanishing"] = row.embedded_vanishing;
  return r;
}

}  // namespace

std::string classify_json(AlgebraKind kind) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["kind"] = kind_name(kind);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : component_table(kind)) arr.push_back(row_json(row));
  j["components"] = arr;
  return j.dump(2);
}

std::string table12_json(int which) {
  AlgebraKind kind = which == 1 ? AlgebraKind::HyperbolicReal : AlgebraKind::EllipticReal;
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["table"] = which;
  j["kind"] = kind_name(kind);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : component_table(kind)) arr.push_back(row_json(row));
  j["rows"] = arr;
  return j.dump(2);
}

}  // namespace plab
