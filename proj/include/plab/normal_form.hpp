#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "plab/quadric.hpp"

namespace plab {

// Monomial exponents. Hyperbolic variables: z1 z2 zb1 zb2 u1 u2;
// elliptic: z1 z2 zb1 zb2 U Ub.
using Monomial = std::array<int, 6>;
using Poly = std::map<Monomial, ExactScalar>;

int z_degree(const Monomial& m);   // k = deg in (z1, z2)
int zb_degree(const Monomial& m);  // l = deg in (zb1, zb2)

Poly poly_derivative(const Poly& p, int var, int order);
// Substitute variable := 0 (drop monomials with a positive exponent there).
Poly poly_restrict(const Poly& p, int var);
bool poly_is_zero(const Poly& p);

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// Truncated defining series of a normalized manifold: the quadric plus the
// N_{kl} perturbation terms.
struct NFSeries {
  QuadricKind kind;
  std::vector<Poly> components;  // hyperbolic: {N1, N2}; elliptic: {N}
  int truncation_order = 0;      // max total degree seen while parsing

  const Poly& N(int j) const { return components.at(j); }
  // Terms of component j belonging to the (k, l) block.
  Poly block(int j, int k, int l) const;
  std::vector<std::pair<int, int>> block_indices(int j) const;
};

// Grammar: component headers "N1:"/"N2:" (hyperbolic) or "N:" (elliptic);
// each component is 0 or a +-separated sum of terms
//   coef * z1^a z2^b zb1^c zb2^d u1^e u2^f      (hyperbolic)
//   coef * z1^a z2^b zb1^c zb2^d U^e Ub^f       (elliptic)
// coef is a Gaussian rational "p/q", "p/qi" or "(p/q+r/si)"; a bare monomial
// has coefficient 1. Whitespace-insensitive. Enforces the support rule
// min(k,l) > 0, max(k,l) > 1 and, for hyperbolic series, the reality
// condition N^j_{kl} = conj(N^j_{lk}).
NFSeries parse_series(QuadricKind kind, const std::string& text);

struct NFViolation {
  std::string condition_id;               // e.g. "d^2 N1_{21} / dz1 dz2"
  std::vector<std::string> offending_terms;
};

// Evaluates every normal-form derivative condition (12 hyperbolic,
// 9 elliptic) by exact formal differentiation; empty result means the series
// is in normal form up to the truncation order.
std::vector<NFViolation> check_normal_form(const NFSeries& s);

// Support test: hyperbolic N^j uses only (z_j, zb_j, u_j); elliptic N uses
// only (z1, zb2, U).
std::vector<bool> is_torsion_free(const NFSeries& s);

// {violations: [...], torsion_free: {...}} plus the eta-bar interpretation
// note for elliptic reports.
std::string normal_form_report_json(const NFSeries& s);
std::string normal_form_report_text(const NFSeries& s);

// The elliptic restriction "|_{eta-bar = 0}" is interpreted as substituting
// conj(U) = 0; kept as one configuration point and flagged in reports.
inline constexpr int kEllipticEtaBarVariable = 5;  // Ub

}  // namespace plab
