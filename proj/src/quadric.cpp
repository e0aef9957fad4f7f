#include "plab/quadric.hpp"

#include <stdexcept>

#include "json.hpp"

namespace plab {

std::string quadric_kind_name(QuadricKind k) {
  return k == QuadricKind::Hyperbolic ? "hyperbolic" : "elliptic";
}

std::string QuadricPoint::str() const {
  return "(" + z1.str() + ", " + z2.str() + ", " + w1.str() + ", " + w2.str() + ")";
}

bool on_quadric(const QuadricPoint& p) {
  if (p.kind == QuadricKind::Hyperbolic) {
    // Im w_j = |z_j|^2, two real equations
    return p.w1.im == p.z1.norm2() && p.w2.im == p.z2.norm2();
  }
  // (w1 - conj(w2)) / (2i) = z1 conj(z2), one complex equation
  ExactScalar lhs = (p.w1 - p.w2.conj()) / two_i();
  return lhs == p.z1 * p.z2.conj();
}

std::array<ExactScalar, 2> to_sharp(const ExactScalar& w1, const ExactScalar& w2) {
  ExactScalar i = ExactScalar::I();
  return {w1 + i * w2, w1 - i * w2};
}

std::array<ExactScalar, 2> from_sharp(const ExactScalar& w1s, const ExactScalar& w2s) {
  ExactScalar half(Rat(1, 2));
  return {half * (w1s + w2s), (w1s - w2s) / two_i()};
}

std::array<ExactScalar, 2> kind_conj(QuadricKind k, const std::array<ExactScalar, 2>& a) {
  if (k == QuadricKind::Hyperbolic) return {a[0].conj(), a[1].conj()};
  return {a[1].conj(), a[0].conj()};
}

std::array<ExactScalar, 2> hermitian_form(QuadricKind k, const std::array<ExactScalar, 2>& z,
                                          const std::array<ExactScalar, 2>& p) {
  auto pc = kind_conj(k, p);
  return {z[0] * pc[0], z[1] * pc[1]};
}

QuadricPoint heisenberg_translate(const std::array<ExactScalar, 2>& p,
                                  const std::array<ExactScalar, 2>& q, const QuadricPoint& x) {
  QuadricPoint param{x.kind, p[0], p[1], q[0], q[1]};
  if (!on_quadric(param))
    throw std::invalid_argument("heisenberg_translate: (p,q) is not on the quadric");
  auto h = hermitian_form(x.kind, {x.z1, x.z2}, p);
  ExactScalar ti = two_i();
  return {x.kind, x.z1 + p[0], x.z2 + p[1], x.w1 + q[0] + ti * h[0], x.w2 + q[1] + ti * h[1]};
}

IsotropicAutomorphism::IsotropicAutomorphism(QuadricKind k, std::array<ExactScalar, 2> c,
                                             std::array<ExactScalar, 2> a,
                                             std::array<ExactScalar, 2> r, bool do_swap)
    : kind(k), C(std::move(c)), A(std::move(a)), R(std::move(r)), swap(do_swap) {
  if (C[0].zero() || C[1].zero())
    throw std::invalid_argument("IsotropicAutomorphism: C must be invertible");
  // R "real": entrywise real (hyperbolic) / mutually conjugate (elliptic)
  auto rc = kind_conj(kind, R);
  if (!(rc[0] == R[0] && rc[1] == R[1]))
    throw std::invalid_argument("IsotropicAutomorphism: R violates the reality constraint");
}

IsotropicAutomorphism IsotropicAutomorphism::identity(QuadricKind k) {
  return IsotropicAutomorphism(k, {ExactScalar(1), ExactScalar(1)}, {}, {}, false);
}

QuadricPoint apply_automorphism_raw(const IsotropicAutomorphism& a, const QuadricPoint& x) {
  if (a.kind != x.kind) throw std::invalid_argument("apply_automorphism: kind mismatch");
  std::array<ExactScalar, 2> Z{x.z1, x.z2}, W{x.w1, x.w2};
  auto Ab = kind_conj(a.kind, a.A);
  auto Cb = kind_conj(a.kind, a.C);
  ExactScalar ti = two_i(), i = ExactScalar::I();
  std::array<ExactScalar, 2> Zs, Ws;
  for (int j = 0; j < 2; ++j) {
    ExactScalar denom = ExactScalar(1) - ti * Ab[j] * Z[j] - (a.R[j] + i * a.A[j] * Ab[j]) * W[j];
    if (denom.zero()) throw ChartEscape("point escapes chart: singular denominator");
    Zs[j] = a.C[j] * (Z[j] + a.A[j] * W[j]) / denom;
    Ws[j] = a.C[j] * Cb[j] * W[j] / denom;
  }
  QuadricPoint out{x.kind, Zs[0], Zs[1], Ws[0], Ws[1]};
  if (a.swap) {
    std::swap(out.z1, out.z2);
    std::swap(out.w1, out.w2);
  }
  return out;
}

QuadricPoint apply_automorphism(const IsotropicAutomorphism& a, const QuadricPoint& x) {
  if (!on_quadric(x)) throw std::invalid_argument("apply_automorphism: point not on quadric");
  return apply_automorphism_raw(a, x);
}

QuadricPoint mu0_point(QuadricKind k, const Rat& u1, const Rat& u2) {
  if (k == QuadricKind::Hyperbolic) return {k, {}, {}, ExactScalar(u1), ExactScalar(u2)};
  // sharp coordinates: U = u1 + i u2, V = 0 means w1 = U, w2 = conj(U)
  ExactScalar u(u1, u2);
  return {k, {}, {}, u, u.conj()};
}

bool in_mu0(const QuadricPoint& p) {
  if (!p.z1.zero() || !p.z2.zero()) return false;
  if (p.kind == QuadricKind::Hyperbolic) return is_zero(p.w1.im) && is_zero(p.w2.im);
  return p.w2 == p.w1.conj();
}

std::array<Rat, 2> pythagorean_direction(const Rat& t) {
  Rat d = 1 + t * t;
  return {2 * t / d, (1 - t * t) / d};
}

std::vector<QuadricPoint> one_chain_hyperbolic(const Rat& alpha, const Rat& beta, int samples) {
  std::vector<QuadricPoint> out;
  for (int k = 1; k <= samples; ++k) {
    Rat u2 = rat(k, samples + 1);
    Rat denom = 1 - beta * u2;
    if (is_zero(denom)) throw std::domain_error("one_chain: beta pole hit at u2 = " + rat_str(u2));
    out.push_back(mu0_point(QuadricKind::Hyperbolic, alpha * u2 / denom, u2));
  }
  return out;
}

std::vector<QuadricPoint> one_chain_elliptic(const std::array<Rat, 2>& sincos, const Rat& beta,
                                             int samples) {
  const Rat &s = sincos[0], &c = sincos[1];
  if (s * s + c * c != 1)
    throw std::invalid_argument("one_chain: (sin,cos) is not an exact unit direction pair");
  std::vector<QuadricPoint> out;
  for (int k = 1; k <= samples; ++k) {
    Rat t = rat(k, samples + 1);
    if (is_zero(beta)) {
      // straight line through the origin in direction (cos, sin)
      out.push_back(mu0_point(QuadricKind::Elliptic, t * c, t * s));
      continue;
    }
    // intersect the circle beta(u1^2+u2^2) + s u1 - c u2 = 0 with the line
    // u = lambda (1, t)
    Rat d1(1), d2 = t;
    Rat lambda = (c * d2 - s * d1) / (beta * (d1 * d1 + d2 * d2));
    out.push_back(mu0_point(QuadricKind::Elliptic, lambda * d1, lambda * d2));
  }
  return out;
}

bool two_chain_membership(QuadricKind k, const std::array<ExactScalar, 2>& A,
                          const QuadricPoint& x) {
  if (x.kind != k) return false;
  if (!on_quadric(x)) return false;
  return x.z1 == A[0] * x.w1 && x.z2 == A[1] * x.w2;
}

namespace {

nlohmann::ordered_json scalar_json(const ExactScalar& s) {
  return nlohmann::ordered_json::array({rat_str(s.re), rat_str(s.im)});
}

ExactScalar scalar_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("point json: coordinate must be [re, im]");
  return {rat_parse(j[0].get<std::string>()), rat_parse(j[1].get<std::string>())};
}

}  // namespace

std::string point_json(const QuadricPoint& p) {
  nlohmann::ordered_json j;
  j["kind"] = quadric_kind_name(p.kind);
  j["z1"] = scalar_json(p.z1);
  j["z2"] = scalar_json(p.z2);
  j["w1"] = scalar_json(p.w1);
  j["w2"] = scalar_json(p.w2);
  return j.dump();
}

QuadricPoint point_from_json(QuadricKind k, const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  QuadricPoint p{k, {}, {}, {}, {}};
  p.z1 = scalar_from_json(j.at("z1"));
  p.z2 = scalar_from_json(j.at("z2"));
  p.w1 = scalar_from_json(j.at("w1"));
  p.w2 = scalar_from_json(j.at("w2"));
  return p;
}

}  // namespace plab
