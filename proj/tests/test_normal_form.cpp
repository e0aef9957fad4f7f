#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "json.hpp"
#include "test_support.hpp"
#include "plab/normal_form.hpp"

using namespace plab;
using namespace plab::testing;

namespace {

std::set<std::string> violated_ids(const NFSeries& s) {
  std::set<std::string> out;
  for (const auto& v : check_normal_form(s)) out.insert(v.condition_id);
  return out;
}

}  // namespace

TEST_CASE("the zero series is the quadric: no violations, torsion-free") {
  auto h = parse_series(QuadricKind::Hyperbolic, "N1: 0 N2: 0");
  CHECK(check_normal_form(h).empty());
  auto tf = is_torsion_free(h);
  CHECK(tf[0]);
  CHECK(tf[1]);
  auto e = parse_series(QuadricKind::Elliptic, "N: 0");
  CHECK(check_normal_form(e).empty());
  CHECK(is_torsion_free(e)[0]);
}

TEST_CASE("crafted violation N1_21 = z1 z2 zb2 trips exactly one condition") {
  auto s = parse_series(QuadricKind::Hyperbolic, "N1: z1 z2 zb2 + z2 zb1 zb2 N2: 0");
  auto viol = check_normal_form(s);
  REQUIRE(viol.size() == 1);
  CHECK(viol[0].condition_id == "d^2 N1_{21} / dz1 dz2");
  REQUIRE(viol[0].offending_terms.size() == 1);
  CHECK(viol[0].offending_terms[0].find("z1 z2 zb2") != std::string::npos);
  auto tf = is_torsion_free(s);
  CHECK(!tf[0]);
  CHECK(tf[1]);
}

TEST_CASE("crafted torsion-free series passes every condition") {
  auto s = parse_series(QuadricKind::Hyperbolic, "N1: z1^4 zb1^2 + z1^2 zb1^4 N2: 0");
  CHECK(check_normal_form(s).empty());
  auto tf = is_torsion_free(s);
  CHECK(tf[0]);
  CHECK(tf[1]);
}

TEST_CASE("hyperbolic reality is enforced at parse time") {
  CHECK_THROWS_AS(parse_series(QuadricKind::Hyperbolic, "N1: 1*z1^2 zb1^1 N2: 0"), ParseError);
  // with the conjugate partner present the same terms parse
  CHECK_NOTHROW(parse_series(QuadricKind::Hyperbolic, "N1: z1^2 zb1 + z1 zb1^2 N2: 0"));
  // complex coefficients must conjugate across the partner
  CHECK_NOTHROW(parse_series(QuadricKind::Hyperbolic,
                             "N1: (0+1i)*z1^2 zb1 + (0-1i)*z1 zb1^2 N2: 0"));
  CHECK_THROWS_AS(parse_series(QuadricKind::Hyperbolic,
                               "N1: (0+1i)*z1^2 zb1 + (0+1i)*z1 zb1^2 N2: 0"),
                  ParseError);
}

TEST_CASE("elliptic series carry no reality condition") {
  auto s = parse_series(QuadricKind::Elliptic, "N: (0+1i)*z1^2 zb2^1");
  REQUIRE(s.components[0].size() == 1);
  CHECK(s.components[0].begin()->second == ExactScalar(Rat(0), Rat(1)));
}

TEST_CASE("forbidden (k,l) support is rejected") {
  // (k,l) = (1,1) is part of the quadric, not the series
  CHECK_THROWS_AS(parse_series(QuadricKind::Hyperbolic, "N1: z1 zb1 N2: 0"), ParseError);
  // l = 0 violates min(k,l) > 0
  CHECK_THROWS_AS(parse_series(QuadricKind::Hyperbolic, "N1: z1^2 z2 N2: 0"), ParseError);
  CHECK_THROWS_AS(parse_series(QuadricKind::Elliptic, "N: zb1^3 zb2"), ParseError);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_series(QuadricKind::Hyperbolic, "N1: z1^2 $ N2: 0");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position > 0);
    CHECK(std::string(e.what()).find("offset") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_series(QuadricKind::Hyperbolic, "N2: 0"), ParseError);
  CHECK_THROWS_AS(parse_series(QuadricKind::Elliptic, "N: zb7^2 z1"), ParseError);
}

TEST_CASE("elliptic torsion-free support: z1, zb2, U only") {
  CHECK(is_torsion_free(parse_series(QuadricKind::Elliptic, "N: z1^2 zb2 U"))[0]);
  CHECK(!is_torsion_free(parse_series(QuadricKind::Elliptic, "N: z1^2 zb2 Ub"))[0]);
  CHECK(!is_torsion_free(parse_series(QuadricKind::Elliptic, "N: z1 z2 zb2^2"))[0]);
}

TEST_CASE("the eta-bar restriction drops conj(U) terms before testing") {
  // d^4/dz1^2 dzb2^2 of z1^2 zb2^2 Ub is a multiple of Ub, killed by the
  // restriction; the same term with U survives and violates
  auto with_ub = parse_series(QuadricKind::Elliptic, "N: z1^2 zb2^2 Ub");
  CHECK(violated_ids(with_ub).count("d^4 N_{22} / dz1^2 dzb2^2 |_{eta-bar=0}") == 0);
  auto with_u = parse_series(QuadricKind::Elliptic, "N: z1^2 zb2^2 U");
  CHECK(violated_ids(with_u).count("d^4 N_{22} / dz1^2 dzb2^2 |_{eta-bar=0}") == 1);
}

TEST_CASE("formal differentiation is exact and commutes") {
  Rng rng(103);
  for (int t = 0; t < 30; ++t) {
    Poly p;
    for (int terms = 0; terms < 6; ++terms) {
      Monomial m;
      for (int v = 0; v < 6; ++v) m[v] = rng.index(4);
      p[m] = rng.scalar();
    }
    Poly d12 = poly_derivative(poly_derivative(p, 0, 1), 1, 1);
    Poly d21 = poly_derivative(poly_derivative(p, 1, 1), 0, 1);
    CHECK(d12 == d21);
    // second derivatives through repeated single derivatives
    CHECK(poly_derivative(p, 2, 2) == poly_derivative(poly_derivative(p, 2, 1), 2, 1));
  }
  // power rule on a known monomial: d^2(z1^3)/dz1^2 = 6 z1
  Poly q;
  q[{3, 0, 0, 0, 0, 0}] = ExactScalar(1);
  Poly d = poly_derivative(q, 0, 2);
  REQUIRE(d.size() == 1);
  CHECK(d.begin()->first == Monomial{1, 0, 0, 0, 0, 0});
  CHECK(d.begin()->second == ExactScalar(Rat(6)));
}

TEST_CASE("condition checking is linear in the series") {
  // violations of s1 + s2 are contained in violations(s1) union violations(s2)
  std::string t1 = "N1: z1 z2 zb2 + z2 zb1 zb2 N2: 0";
  std::string t2 = "N1: z1^4 zb1^2 + z1^2 zb1^4 N2: z2^2 zb2^3 + z2^3 zb2^2";
  auto s1 = parse_series(QuadricKind::Hyperbolic, t1);
  auto s2 = parse_series(QuadricKind::Hyperbolic, t2);
  std::string sum = "N1: z1 z2 zb2 + z2 zb1 zb2 + z1^4 zb1^2 + z1^2 zb1^4 "
                    "N2: z2^2 zb2^3 + z2^3 zb2^2";
  auto s12 = parse_series(QuadricKind::Hyperbolic, sum);
  auto v1 = violated_ids(s1), v2 = violated_ids(s2), v12 = violated_ids(s12);
  for (const auto& id : v12) CHECK((v1.count(id) || v2.count(id)));
}

TEST_CASE("real series give conjugate-paired condition residuals") {
  // for the z <-> zb symmetric conditions on self-paired blocks the residual
  // polynomial is itself real: coeff(m) = conj(coeff(m with z and zb swapped))
  auto s = parse_series(QuadricKind::Hyperbolic,
                        "N1: (1/2+1/3i)*z1^2 zb1 z2 zb2 + (1/2-1/3i)*z1 zb1^2 z2 zb2 N2: 0");
  Poly block = s.block(0, 2, 2);
  Poly r = poly_derivative(block, 0, 1);
  r = poly_derivative(r, 1, 1);
  r = poly_derivative(r, 2, 1);
  r = poly_derivative(r, 3, 1);
  for (const auto& [m, c] : r) {
    Monomial sw{m[2], m[3], m[0], m[1], m[4], m[5]};
    auto it = r.find(sw);
    REQUIRE(it != r.end());
    CHECK(it->second == c.conj());
  }
}

TEST_CASE("torsion-free series satisfy the cross-variable conditions automatically") {
  // random torsion-free supports: N^j in (z_j, zb_j, u_j) with reality;
  // the conditions mixing z1 and z2 can never fire
  Rng rng(113);
  const std::set<std::string> cross = {
      "d^2 N1_{21} / dz1 dz2", "d^2 N2_{21} / dz1 dz2",
      "d^4 N1_{22} / dz1 dz2 dzb1 dzb2", "d^4 N2_{22} / dz1 dz2 dzb1 dzb2"};
  for (int t = 0; t < 30; ++t) {
    std::string text;
    for (int j = 0; j < 2; ++j) {
      text += j == 0 ? "N1:" : " N2:";
      bool any = false;
      for (int terms = 0; terms < 3; ++terms) {
        int k = rng.index(3) + 1, l = rng.index(3) + 1, e = rng.index(2);
        if (std::max(k, l) < 2) k += 2;
        std::string z = j == 0 ? "z1" : "z2", zb = j == 0 ? "zb1" : "zb2",
                    u = j == 0 ? "u1" : "u2";
        Rat re = rng.rational(), im = rng.rational();
        auto term = [&](int kk, int ll, const Rat& r, const Rat& i) {
          Rat ai = i < 0 ? Rat(-i) : i;
          std::string sign = i < 0 ? "-" : "+";
          return " + (" + rat_str(r) + sign + rat_str(ai) + "i)*" + z + "^" +
                 std::to_string(kk) + " " + zb + "^" + std::to_string(ll) + (e ? " " + u : "");
        };
        text += term(k, l, re, im) + term(l, k, re, -im);
        any = true;
      }
      if (!any) text += " 0";
    }
    auto s = parse_series(QuadricKind::Hyperbolic, text);
    auto tf = is_torsion_free(s);
    REQUIRE(tf[0]);
    REQUIRE(tf[1]);
    for (const auto& v : check_normal_form(s)) CHECK(cross.count(v.condition_id) == 0);
  }
}

TEST_CASE("reports carry the eta-bar note and torsion flags") {
  // (2,3) block in z1, zb2, U only: in normal form and torsion-free
  auto s = parse_series(QuadricKind::Elliptic, "N: z1^2 zb2^3 U");
  auto j = nlohmann::json::parse(normal_form_report_json(s));
  CHECK(j["violations"].empty());
  CHECK(j["torsion_free"]["N"] == true);
  CHECK(j["in_normal_form"] == true);
  CHECK(j.contains("eta_bar_interpretation"));
  // a torsion-free series need not be in normal form: any (k,1) block in
  // zb2 trips the dN_{k1}/dzb2 family
  auto s21 = parse_series(QuadricKind::Elliptic, "N: z1^2 zb2 U");
  CHECK(is_torsion_free(s21)[0]);
  CHECK(!check_normal_form(s21).empty());
  auto h = parse_series(QuadricKind::Hyperbolic, "N1: z1 z2 zb2 + z2 zb1 zb2 N2: 0");
  auto jh = nlohmann::json::parse(normal_form_report_json(h));
  CHECK(jh["violations"].size() == 1);
  CHECK(jh["torsion_free"]["N1"] == false);
  CHECK(jh["torsion_free"]["N2"] == true);
  std::string text = normal_form_report_text(h);
  CHECK(text.find("VIOLATED") != std::string::npos);
}
