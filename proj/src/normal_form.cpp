#include "plab/normal_form.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace plab {

int z_degree(const Monomial& m) { return m[0] + m[1]; }
int zb_degree(const Monomial& m) { return m[2] + m[3]; }

Poly poly_derivative(const Poly& p, int var, int order) {
  Poly out = p;
  for (int it = 0; it < order; ++it) {
    Poly next;
    for (const auto& [m, c] : out) {
      if (m[var] == 0) continue;
      Monomial d = m;
      d[var] -= 1;
      ExactScalar scaled = Rat(m[var]) * c;
      auto f = next.find(d);
      if (f == next.end()) next[d] = scaled;
      else f->second += scaled;
    }
    out = std::move(next);
  }
  return out;
}

Poly poly_restrict(const Poly& p, int var) {
  Poly out;
  for (const auto& [m, c] : p)
    if (m[var] == 0) out[m] = c;
  return out;
}

bool poly_is_zero(const Poly& p) {
  for (const auto& [m, c] : p) {
    (void)m;
    if (!c.zero()) return false;
  }
  return true;
}

Poly NFSeries::block(int j, int k, int l) const {
  Poly out;
  for (const auto& [m, c] : components.at(j))
    if (z_degree(m) == k && zb_degree(m) == l) out[m] = c;
  return out;
}

std::vector<std::pair<int, int>> NFSeries::block_indices(int j) const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [m, c] : components.at(j)) {
    (void)c;
    std::pair<int, int> kl{z_degree(m), zb_degree(m)};
    if (std::find(out.begin(), out.end(), kl) == out.end()) out.push_back(kl);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

const char* kHypVars[6] = {"z1", "z2", "zb1", "zb2", "u1", "u2"};
const char* kEllVars[6] = {"z1", "z2", "zb1", "zb2", "U", "Ub"};

std::string monomial_str(QuadricKind kind, const Monomial& m) {
  const char** vars = kind == QuadricKind::Hyperbolic ? kHypVars : kEllVars;
  std::string s;
  for (int v = 0; v < 6; ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += " ";
    s += vars[v];
    if (m[v] > 1) s += "^" + std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

std::string term_str(QuadricKind kind, const Monomial& m, const ExactScalar& c) {
  return "(" + c.str() + ")*" + monomial_str(kind, m);
}

struct Parser {
  const std::string& text;
  QuadricKind kind;
  size_t pos = 0;

  explicit Parser(QuadricKind k, const std::string& t) : text(t), kind(k) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool consume_word(const std::string& w) {
    skip_ws();
    if (text.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos, msg); }

  Rat parse_rational() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos, ++digits;
    if (digits == 0) fail("expected a number");
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      size_t den_digits = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos, ++den_digits;
      if (den_digits == 0) fail("expected a denominator");
    }
    return rat_parse(text.substr(start, pos - start));
  }

  // "p/q", "p/qi", "(p/q+r/si)", "i"
  ExactScalar parse_coef() {
    skip_ws();
    if (consume('(')) {
      Rat re = parse_rational();
      ExactScalar out(re);
      skip_ws();
      if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        Rat im = parse_rational();
        if (!consume('i')) fail("expected 'i' after the imaginary part");
        out.im = im;
      } else if (consume('i')) {
        out = ExactScalar(Rat(0), re);
      }
      if (!consume(')')) fail("expected ')'");
      return out;
    }
    if (consume('i')) return ExactScalar(Rat(0), Rat(1));
    Rat v = parse_rational();
    if (consume('i')) return ExactScalar(Rat(0), v);
    return ExactScalar(v);
  }

  int var_index(const std::string& name) {
    const char** vars = kind == QuadricKind::Hyperbolic ? kHypVars : kEllVars;
    for (int v = 0; v < 6; ++v)
      if (name == vars[v]) return v;
    fail("unknown variable '" + name + "'");
  }

  bool parse_var_power(Monomial& m) {
    skip_ws();
    size_t start = pos;
    std::string name;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])))) {
      name += text[pos];
      ++pos;
      // variable names are at most 3 chars (zb1); cut greedily but correctly:
      // accept the longest prefix that is a variable and stop before digits
      // that belong to the next token only when '^' follows
    }
    if (name.empty()) {
      pos = start;
      return false;
    }
    int v = var_index(name);
    int e = 1;
    if (consume('^')) {
      skip_ws();
      size_t ds = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (ds == pos) fail("expected an exponent");
      e = std::stoi(text.substr(ds, pos - ds));
    }
    m[v] += e;
    return true;
  }

  // term := [sign] (coef ['*' monomial] | monomial)
  void parse_term(Poly& into, int sign) {
    skip_ws();
    ExactScalar coef{Rat(sign)};
    bool have_coef = false;
    if (peek_is('(') || (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                               text[pos] == 'i'))) {
      // leading 'i' could also start a variable name? none of ours do
      coef = Rat(sign) * parse_coef();
      have_coef = true;
    }
    Monomial m{0, 0, 0, 0, 0, 0};
    bool any_var = false;
    if (!have_coef || consume('*') || true) {
      // monomial factors separated by whitespace (or absent entirely)
      while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        char c = text[pos];
        if (!std::isalpha(static_cast<unsigned char>(c)) || c == 'N') break;
        if (!parse_var_power(m)) break;
        any_var = true;
      }
    }
    if (!have_coef && !any_var) fail("expected a term");
    auto it = into.find(m);
    if (it == into.end()) into[m] = coef;
    else it->second += coef;
  }

  // component := '0' | term (('+'|'-') term)*
  void parse_component(Poly& into) {
    skip_ws();
    if (pos < text.size() && text[pos] == '0') {
      size_t save = pos;
      ++pos;
      skip_ws();
      // a lone zero only; "0" followed by a variable would be odd input
      if (at_end() || text[pos] == 'N') return;
      pos = save;  // fall through: e.g. "0 + z1..." is not supported
    }
    int sign = 1;
    if (consume('-')) sign = -1;
    else consume('+');
    parse_term(into, sign);
    while (!at_end()) {
      skip_ws();
      if (text[pos] == 'N') return;
      if (consume('+')) parse_term(into, 1);
      else if (consume('-')) parse_term(into, -1);
      else fail("expected '+', '-' or a component header");
    }
  }
};

void strip_zeros(Poly& p) {
  for (auto it = p.begin(); it != p.end();) {
    if (it->second.zero()) it = p.erase(it);
    else ++it;
  }
}

}  // namespace

NFSeries parse_series(QuadricKind kind, const std::string& text) {
  NFSeries s;
  s.kind = kind;
  int ncomp = kind == QuadricKind::Hyperbolic ? 2 : 1;
  s.components.assign(ncomp, Poly{});
  Parser p(kind, text);
  for (int j = 0; j < ncomp; ++j) {
    std::string header = kind == QuadricKind::Hyperbolic ? "N" + std::to_string(j + 1) : "N";
    if (!p.consume_word(header + ":")) p.fail("expected component header '" + header + ":'");
    p.parse_component(s.components[j]);
    strip_zeros(s.components[j]);
  }
  p.skip_ws();
  if (!p.at_end()) p.fail("trailing input");

  // support rule: min(k,l) > 0 and max(k,l) > 1 for every stored term
  for (int j = 0; j < ncomp; ++j)
    for (const auto& [m, c] : s.components[j]) {
      (void)c;
      int k = z_degree(m), l = zb_degree(m);
      if (std::min(k, l) < 1 || std::max(k, l) < 2)
        throw ParseError(0, "forbidden (k,l) support: term " + monomial_str(kind, m) +
                                " has (k,l) = (" + std::to_string(k) + "," + std::to_string(l) + ")");
      s.truncation_order = std::max(s.truncation_order, m[0] + m[1] + m[2] + m[3] + m[4] + m[5]);
    }

  // hyperbolic reality: coefficient at (a,b,c,d,e,f) = conj of the one at
  // (c,d,a,b,e,f)
  if (kind == QuadricKind::Hyperbolic) {
    for (int j = 0; j < 2; ++j)
      for (const auto& [m, c] : s.components[j]) {
        Monomial conj_m{m[2], m[3], m[0], m[1], m[4], m[5]};
        auto it = s.components[j].find(conj_m);
        ExactScalar partner = it == s.components[j].end() ? ExactScalar() : it->second;
        if (!(partner == c.conj()))
          throw ParseError(0, "reality violation: N" + std::to_string(j + 1) + " term " +
                                  term_str(kind, m, c) + " requires the conjugate term " +
                                  term_str(kind, conj_m, c.conj()));
      }
  }
  return s;
}

namespace {

struct Condition {
  int component;                  // 0-based
  int k, l;                       // block; k = -1 means "all k >= 2" family
  Monomial deriv;                 // derivative orders per variable
  int restrict_var;               // -1 = none
  std::string label;
};

std::vector<Condition> conditions_for(QuadricKind kind) {
  // variable order: z1 z2 zb1 zb2 u1/U u2/Ub
  if (kind == QuadricKind::Hyperbolic)
    return {
        {0, -1, 1, {0, 0, 1, 0, 0, 0}, -1, "d N1_{k1} / dzb1 (k>=2)"},
        {1, -1, 1, {0, 0, 0, 1, 0, 0}, -1, "d N2_{k1} / dzb2 (k>=2)"},
        {0, 2, 1, {1, 1, 0, 0, 0, 0}, -1, "d^2 N1_{21} / dz1 dz2"},
        {1, 2, 1, {1, 1, 0, 0, 0, 0}, -1, "d^2 N2_{21} / dz1 dz2"},
        {0, 2, 2, {1, 1, 1, 1, 0, 0}, -1, "d^4 N1_{22} / dz1 dz2 dzb1 dzb2"},
        {1, 2, 2, {1, 1, 1, 1, 0, 0}, -1, "d^4 N2_{22} / dz1 dz2 dzb1 dzb2"},
        {0, 2, 2, {2, 0, 2, 0, 0, 0}, 5, "d^4 N1_{22} / dz1^2 dzb1^2 |_{u2=0}"},
        {1, 2, 2, {0, 2, 0, 2, 0, 0}, 4, "d^4 N2_{22} / dz2^2 dzb2^2 |_{u1=0}"},
        {0, 3, 2, {3, 0, 2, 0, 0, 0}, 5, "d^5 N1_{32} / dz1^3 dzb1^2 |_{u2=0}"},
        {1, 3, 2, {0, 3, 0, 2, 0, 0}, 4, "d^5 N2_{32} / dz2^3 dzb2^2 |_{u1=0}"},
        {0, 3, 3, {3, 0, 3, 0, 0, 0}, 5, "d^6 N1_{33} / dz1^3 dzb1^3 |_{u2=0}"},
        {1, 3, 3, {0, 3, 0, 3, 0, 0}, 4, "d^6 N2_{33} / dz2^3 dzb2^3 |_{u1=0}"},
    };
  return {
      {0, -1, 1, {0, 0, 0, 1, 0, 0}, -1, "d N_{k1} / dzb2 (k>=2)"},
      {0, -2, 1, {1, 0, 0, 0, 0, 0}, -1, "d N_{1k} / dz1 (k>=2)"},  // k = -2: all (1,l), l>=2
      {0, 2, 1, {1, 1, 1, 0, 0, 0}, -1, "d^3 N_{21} / dz1 dzb1 dz2"},
      {0, 1, 2, {0, 1, 1, 1, 0, 0}, -1, "d^3 N_{12} / dzb2 dzb1 dz2"},
      {0, 2, 2, {1, 1, 1, 1, 0, 0}, -1, "d^4 N_{22} / dz1 dz2 dzb1 dzb2"},
      {0, 2, 2, {2, 0, 0, 2, 0, 0}, kEllipticEtaBarVariable, "d^4 N_{22} / dz1^2 dzb2^2 |_{eta-bar=0}"},
      {0, 3, 2, {3, 0, 0, 2, 0, 0}, kEllipticEtaBarVariable, "d^5 N_{32} / dz1^3 dzb2^2 |_{eta-bar=0}"},
      {0, 2, 3, {2, 0, 1, 2, 0, 0}, kEllipticEtaBarVariable, "d^5 N_{23} / dz1^2 dzb1 dzb2^2 |_{eta-bar=0}"},
      {0, 3, 3, {3, 0, 0, 3, 0, 0}, kEllipticEtaBarVariable, "d^6 N_{33} / dz1^3 dzb2^3 |_{eta-bar=0}"},
  };
}

std::string label_with_k(const std::string& base, int k) {
  auto p = base.find("{k1}");
  if (p != std::string::npos) return base.substr(0, p) + "{" + std::to_string(k) + "1}" + base.substr(p + 4);
  p = base.find("{1k}");
  if (p != std::string::npos) return base.substr(0, p) + "{1" + std::to_string(k) + "}" + base.substr(p + 4);
  return base;
}

}  // namespace

std::vector<NFViolation> check_normal_form(const NFSeries& s) {
  std::vector<NFViolation> out;
  for (const auto& cond : conditions_for(s.kind)) {
    std::vector<std::pair<int, int>> blocks;
    if (cond.k == -1) {  // family over all (k, 1), k >= 2
      for (auto [k, l] : s.block_indices(cond.component))
        if (l == 1 && k >= 2) blocks.push_back({k, l});
    } else if (cond.k == -2) {  // family over all (1, l), l >= 2
      for (auto [k, l] : s.block_indices(cond.component))
        if (k == 1 && l >= 2) blocks.push_back({k, l});
    } else {
      blocks.push_back({cond.k, cond.l});
    }
    for (auto [k, l] : blocks) {
      Poly p = s.block(cond.component, k, l);
      for (int v = 0; v < 6; ++v)
        if (cond.deriv[v] > 0) p = poly_derivative(p, v, cond.deriv[v]);
      if (cond.restrict_var >= 0) p = poly_restrict(p, cond.restrict_var);
      strip_zeros(p);
      if (poly_is_zero(p)) continue;
      NFViolation v;
      v.condition_id = cond.k < 0 ? label_with_k(cond.label, cond.k == -1 ? k : l) : cond.label;
      // report the offending source terms of the block whose derivative survives
      for (const auto& [m, c] : s.block(cond.component, k, l)) {
        Monomial d = m;
        bool contributes = true;
        for (int var = 0; var < 6 && contributes; ++var) {
          if (cond.deriv[var] > d[var]) contributes = false;
          else d[var] -= cond.deriv[var];
        }
        if (contributes && cond.restrict_var >= 0 && d[cond.restrict_var] != 0) contributes = false;
        if (contributes) v.offending_terms.push_back(term_str(s.kind, m, c));
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<bool> is_torsion_free(const NFSeries& s) {
  std::vector<bool> out;
  if (s.kind == QuadricKind::Hyperbolic) {
    // component j depends only on z_j, zb_j, u_j
    for (int j = 0; j < 2; ++j) {
      bool tf = true;
      for (const auto& [m, c] : s.components[j]) {
        (void)c;
        int other = 1 - j;
        if (m[other] != 0 || m[2 + other] != 0 || m[4 + other] != 0) tf = false;
      }
      out.push_back(tf);
    }
  } else {
    // N = N(z1, zb2, U): no z2, zb1, Ub
    bool tf = true;
    for (const auto& [m, c] : s.components[0]) {
      (void)c;
      if (m[1] != 0 || m[2] != 0 || m[5] != 0) tf = false;
    }
    out.push_back(tf);
  }
  return out;
}

namespace {

nlohmann::ordered_json report_json_obj(const NFSeries& s) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["kind"] = quadric_kind_name(s.kind);
  j["truncation_order"] = s.truncation_order;
  j["note"] = "conditions tested up to the truncation order of the parsed series";
  if (s.kind == QuadricKind::Elliptic)
    j["eta_bar_interpretation"] = "restriction |_{eta-bar=0} substitutes conj(U) = 0";
  auto viol = nlohmann::ordered_json::array();
  for (const auto& v : check_normal_form(s)) {
    nlohmann::ordered_json e;
    e["condition"] = v.condition_id;
    e["terms"] = v.offending_terms;
    viol.push_back(e);
  }
  j["violations"] = viol;
  auto tf = is_torsion_free(s);
  if (s.kind == QuadricKind::Hyperbolic)
    j["torsion_free"] = {{"N1", bool(tf[0])}, {"N2", bool(tf[1])}};
  else
    j["torsion_free"] = {{"N", bool(tf[0])}};
  j["in_normal_form"] = check_normal_form(s).empty();
  return j;
}

}  // namespace

std::string normal_form_report_json(const NFSeries& s) { return report_json_obj(s).dump(2); }

std::string normal_form_report_text(const NFSeries& s) {
  std::ostringstream os;
  os << "normal-form report (" << quadric_kind_name(s.kind) << ", truncation order "
     << s.truncation_order << ")\n";
  if (s.kind == QuadricKind::Elliptic)
    os << "  note: |_{eta-bar=0} is interpreted as substituting conj(U) = 0\n";
  auto viol = check_normal_form(s);
  if (viol.empty()) {
    os << "  all normal-form conditions hold\n";
  } else {
    for (const auto& v : viol) {
      os << "  VIOLATED: " << v.condition_id << "\n";
      for (const auto& t : v.offending_terms) os << "    term " << t << "\n";
    }
  }
  auto tf = is_torsion_free(s);
  if (s.kind == QuadricKind::Hyperbolic)
    os << "  torsion-free: N1=" << (tf[0] ? "yes" : "no") << " N2=" << (tf[1] ? "yes" : "no")
       << "\n";
  else
    os << "  torsion-free: N=" << (tf[0] ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace plab
