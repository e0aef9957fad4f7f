#include "plab/kostant.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace plab {

namespace {
const Weight kRho{1, 1};
const Weight kAdjointHW{1, 1};
const Weight kTrivialHW{0, 0};
}  // namespace

const std::vector<WeylElement>& weyl_group_a2() {
  static const std::vector<WeylElement> w = {
      {{}}, {{1}}, {{2}}, {{1, 2}}, {{2, 1}}, {{1, 2, 1}},
  };
  return w;
}

Weight simple_reflection(int s, const Weight& w) {
  if (s == 1) return {-w.a, w.a + w.b};
  if (s == 2) return {w.a + w.b, -w.b};
  throw std::invalid_argument("simple_reflection: generator must be 1 or 2");
}

Weight affine_action(const WeylElement& w, const Weight& lambda) {
  Weight x{lambda.a + kRho.a, lambda.b + kRho.b};
  // the word acts right to left: w = s1 s2 applies s2 first
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) x = simple_reflection(*it, x);
  return {x.a - kRho.a, x.b - kRho.b};
}

std::vector<Weight> kostant_cohomology(const Weight& lambda, int p) {
  if (!lambda.g_dominant())
    throw std::invalid_argument("kostant_cohomology: weight is not g-dominant");
  std::vector<Weight> out;
  for (const auto& w : weyl_group_a2()) {
    if (w.length() != p) continue;
    Weight mu = affine_action(w, lambda);
    if (mu.p_dominant()) out.push_back(mu);  // no-op filter for the Borel
  }
  std::sort(out.begin(), out.end());
  return out;
}

Weight module_highest_weight(A2Module m) {
  return m == A2Module::Adjoint ? kAdjointHW : kTrivialHW;
}

std::string RootRef::str() const {
  std::string base = root_name(root);
  if (factor == Factor::Single) return base;
  // "g_{-1,0}" -> "g^L_{-1,0}"
  return "g^" + factor_name(factor) + base.substr(1);
}

std::string CochainShape::str() const {
  return arg1.str() + " x " + arg2.str() + " -> " + target.str();
}

namespace {

Rat e_part(const RootRef& r, Factor f) {
  if (r.factor != f) return Rat(0);
  return Rat(root_grade(r.root));
}
Rat f_part(const RootRef& r, Factor f) {
  if (r.factor != f) return Rat(0);
  return root_f_eigenvalue(r.root);
}

// (E_L, E_R, F_L, F_R) acting on a bilinear cochain p_A x p_B -> g_C:
// target eigenvalue minus the argument eigenvalues.
std::array<Rat, 4> shape_eigenvalues(const CochainShape& s) {
  std::array<Rat, 4> ev;
  ev[0] = e_part(s.target, Factor::Left) - e_part(s.arg1, Factor::Left) - e_part(s.arg2, Factor::Left);
  ev[1] = e_part(s.target, Factor::Right) - e_part(s.arg1, Factor::Right) - e_part(s.arg2, Factor::Right);
  ev[2] = f_part(s.target, Factor::Left) - f_part(s.arg1, Factor::Left) - f_part(s.arg2, Factor::Left);
  ev[3] = f_part(s.target, Factor::Right) - f_part(s.arg1, Factor::Right) - f_part(s.arg2, Factor::Right);
  return ev;
}

// Display/order convention matching Table 4: higher grade first, then left
// before right, then root enumeration order.
bool arg_before(const RootRef& x, const RootRef& y) {
  int gx = root_grade(x.root), gy = root_grade(y.root);
  if (gx != gy) return gx > gy;
  if (x.factor != y.factor) return x.factor == Factor::Left;
  return int(x.root) < int(y.root);
}

}  // namespace

CochainShape identify_cochain_shape(const CohomologyComponent& comp) {
  if (comp.degree != 2)
    throw std::invalid_argument("identify_cochain_shape: degree-2 components only");
  const std::vector<RootSpace> p_plus = {RootSpace::P10, RootSpace::P01, RootSpace::P2};
  const std::vector<RootSpace> all = {RootSpace::M2,  RootSpace::M10, RootSpace::M01,
                                      RootSpace::Cartan, RootSpace::P10, RootSpace::P01,
                                      RootSpace::P2};
  std::vector<RootRef> args;
  for (Factor f : {Factor::Left, Factor::Right})
    for (RootSpace r : p_plus) args.push_back({f, r});
  std::vector<RootRef> targets;
  for (Factor f : {Factor::Left, Factor::Right})
    for (RootSpace r : all) targets.push_back({f, r});

  std::vector<CochainShape> matches;
  for (size_t i = 0; i < args.size(); ++i)
    for (size_t j = i + 1; j < args.size(); ++j)
      for (const auto& t : targets) {
        CochainShape s{args[i], args[j], t};
        if (!arg_before(s.arg1, s.arg2)) std::swap(s.arg1, s.arg2);
        if (shape_eigenvalues(s) == comp.eigenvalues) matches.push_back(s);
      }
  if (matches.size() != 1)
    throw std::runtime_error("identify_cochain_shape: expected a unique match, found " +
                             std::to_string(matches.size()) + " for weights " +
                             comp.weight_left.str() + "x" + comp.weight_right.str());
  return matches[0];
}

std::vector<CohomologyComponent> kunneth_h2(Factor side) {
  if (side == Factor::Single)
    throw std::invalid_argument("kunneth_h2: side must be Left or Right");
  std::vector<CohomologyComponent> out;
  for (int i = 0; i <= 2; ++i) {
    int j = 2 - i;
    Weight lam_l = side == Factor::Left ? kAdjointHW : kTrivialHW;
    Weight lam_r = side == Factor::Left ? kTrivialHW : kAdjointHW;
    for (const Weight& wl : kostant_cohomology(lam_l, i))
      for (const Weight& wr : kostant_cohomology(lam_r, j)) {
        CohomologyComponent c;
        c.degree = 2;
        c.coefficient_side = side;
        c.weight_left = wl;
        c.weight_right = wr;
        c.total_homogeneity = wl.e_eigenvalue() + wr.e_eigenvalue();
        c.eigenvalues = {Rat(wl.e_eigenvalue()), Rat(wr.e_eigenvalue()),
                         wl.f_eigenvalue(), wr.f_eigenvalue()};
        c.shape = identify_cochain_shape(c);
        out.push_back(c);
      }
  }
  // canonical order: homogeneity closest to zero first, then weights
  std::sort(out.begin(), out.end(), [](const CohomologyComponent& x, const CohomologyComponent& y) {
    if (x.total_homogeneity != y.total_homogeneity)
      return x.total_homogeneity > y.total_homogeneity;
    if (!(x.weight_left == y.weight_left)) return y.weight_left < x.weight_left;
    return y.weight_right < x.weight_right;
  });
  return out;
}

std::vector<CohomologyComponent> kunneth_h2_full() {
  auto out = kunneth_h2(Factor::Left);
  auto right = kunneth_h2(Factor::Right);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

namespace {

// Components of H^p(p_+^L + p_+^R, sl3 (x) C  +  C (x) sl3) at total
// homogeneity h, over the full Kunneth sum.
int pair_count(int p, long h) {
  int n = 0;
  for (Factor side : {Factor::Left, Factor::Right})
    for (int i = 0; i <= p; ++i) {
      int j = p - i;
      if (j < 0 || j > 3 || i > 3) continue;
      Weight lam_l = side == Factor::Left ? kAdjointHW : kTrivialHW;
      Weight lam_r = side == Factor::Left ? kTrivialHW : kAdjointHW;
      for (const Weight& wl : kostant_cohomology(lam_l, i))
        for (const Weight& wr : kostant_cohomology(lam_r, j))
          if (wl.e_eigenvalue() + wr.e_eigenvalue() == h) ++n;
    }
  return n;
}

}  // namespace

int kostant_count(AlgebraKind kind, int p, int ell) {
  // H^p_ell(g_-, g) is identified with H^p_{-ell}(p_+, g).
  long h = -long(ell);
  if (kind == AlgebraKind::Sl3Complex) {
    int n = 0;
    for (const Weight& w : kostant_cohomology(kAdjointHW, p))
      if (w.e_eigenvalue() == h) ++n;
    return n;
  }
  return pair_count(p, h);
}

int realification_factor(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Sl3Complex:
    case AlgebraKind::Sl3Sl3Complex:
      return 2;
    default:
      return 1;
  }
}

std::string table3_json() {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["table"] = 3;
  auto arr = nlohmann::ordered_json::array();
  for (auto mod : {A2Module::Trivial, A2Module::Adjoint})
    for (int p = 0; p <= 2; ++p) {
      nlohmann::ordered_json row;
      row["module"] = mod == A2Module::Trivial ? "C" : "sl3";
      row["degree"] = p;
      auto ws = nlohmann::ordered_json::array();
      for (const Weight& w : kostant_cohomology(module_highest_weight(mod), p))
        ws.push_back({w.a, w.b});
      row["weights"] = ws;
      arr.push_back(row);
    }
  j["entries"] = arr;
  return j.dump(2);
}

std::string table4_json() {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["table"] = 4;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : kunneth_h2_full()) {
    nlohmann::ordered_json row;
    row["degree"] = c.degree;
    row["side"] = factor_name(c.coefficient_side);
    row["weights"] = {{"left", {c.weight_left.a, c.weight_left.b}},
                      {"right", {c.weight_right.a, c.weight_right.b}}};
    row["homogeneity"] = c.total_homogeneity;
    auto ev = nlohmann::ordered_json::array();
    for (const Rat& e : c.eigenvalues) ev.push_back(rat_str(e));
    row["eigenvalues"] = ev;  // order: E_L, E_R, F_L, F_R
    row["cochain_shape"] = c.shape.str();
    arr.push_back(row);
  }
  j["components"] = arr;
  return j.dump(2);
}

}  // namespace plab
