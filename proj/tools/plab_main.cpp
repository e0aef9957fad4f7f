#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "plab/cochain.hpp"
#include "plab/kostant.hpp"
#include "plab/normal_form.hpp"
#include "plab/quadric.hpp"
#include "plab/realform.hpp"

namespace {

using namespace plab;

constexpr int kExitDisagreement = 1;
constexpr int kExitInputError = 2;

AlgebraKind parse_kind(const std::string& s) {
  auto k = kind_from_name(s);
  if (!k) throw CLI::ValidationError("--kind", "unknown kind '" + s + "'");
  return *k;
}

QuadricKind parse_quadric_kind(const std::string& s) {
  if (s == "hyperbolic") return QuadricKind::Hyperbolic;
  if (s == "elliptic") return QuadricKind::Elliptic;
  throw CLI::ValidationError("--kind", "quadric kind must be hyperbolic or elliptic");
}

int csv_precision() {
  const char* env = std::getenv("PARABOLIC_LAB_PRECISION");
  if (!env) return 12;
  int p = std::atoi(env);
  return p > 0 && p <= 50 ? p : 12;
}

nlohmann::ordered_json basis_json(const GradedAlgebra& g, const std::vector<Cochain>& basis) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : basis) {
    auto entries = nlohmann::ordered_json::array();
    for (const auto& [key, v] : c.coeff) {
      nlohmann::ordered_json e;
      auto args = nlohmann::ordered_json::array();
      for (int a : key.first) args.push_back(g.basis[a].name);
      e["args"] = args;
      e["value"] = g.basis[key.second].name;
      e["coeff"] = rat_str(v);
      entries.push_back(e);
    }
    arr.push_back(entries);
  }
  return arr;
}

int run_cohomology(const std::string& kind_s, int degree, std::optional<int> homog,
                   const std::string& method, bool json, bool verbose) {
  AlgebraKind kind = parse_kind(kind_s);
  const CochainEngine& eng = CochainEngine::get(kind);
  std::vector<int> ells;
  if (homog) ells.push_back(*homog);
  else ells = eng.slice_homogeneities(degree);

  nlohmann::ordered_json out;
  out["schema_version"] = 1;
  out["kind"] = kind_s;
  out["degree"] = degree;
  out["method"] = method;
  auto rows = nlohmann::ordered_json::array();
  bool disagree = false;
  for (int ell : ells) {
    nlohmann::ordered_json row;
    row["homogeneity"] = ell;
    std::optional<int> direct, kost;
    if (method == "direct" || method == "both") direct = eng.cohomology_dim(degree, ell);
    if (method == "kostant" || method == "both")
      kost = kostant_count(kind, degree, ell) * realification_factor(kind);
    if (direct) row["direct_dim"] = *direct;
    if (kost) row["kostant_dim"] = *kost;
    if (direct && kost && *direct != *kost) {
      disagree = true;
      row["agree"] = false;
    } else if (direct && kost) {
      row["agree"] = true;
    }
    if (verbose && (method == "direct" || method == "both")) {
      row["harmonic_dim"] = eng.harmonic_dim(degree, ell);
      row["harmonic_basis"] = basis_json(eng.algebra(), eng.harmonic_basis(degree, ell));
    }
    rows.push_back(row);
  }
  out["slices"] = rows;
  if (json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "H^" << degree << "(g_-, g) for kind " << kind_s << " (method " << method
              << ")\n";
    for (const auto& row : rows) {
      std::cout << "  homogeneity " << row["homogeneity"].get<int>() << ": ";
      if (row.contains("direct_dim")) std::cout << "direct " << row["direct_dim"].get<int>() << " ";
      if (row.contains("kostant_dim"))
        std::cout << "kostant " << row["kostant_dim"].get<int>() << " ";
      if (row.contains("agree") && !row["agree"].get<bool>()) std::cout << "  << DISAGREE";
      std::cout << "\n";
      if (verbose && row.contains("harmonic_dim"))
        std::cout << "    harmonic dim " << row["harmonic_dim"].get<int>() << "\n";
    }
  }
  if (disagree) {
    std::cerr << "error: direct and Kostant dimensions disagree\n";
    return kExitDisagreement;
  }
  return 0;
}

int run_tables(int which, bool json) {
  std::string payload;
  switch (which) {
    case 1: payload = table12_json(1); break;
    case 2: payload = table12_json(2); break;
    case 3: payload = table3_json(); break;
    case 4: payload = table4_json(); break;
    default: throw CLI::ValidationError("--which", "table must be 1, 2, 3 or 4");
  }
  if (json) {
    std::cout << payload << "\n";
    return 0;
  }
  auto j = nlohmann::json::parse(payload);
  if (which == 3) {
    for (const auto& e : j["entries"]) {
      std::cout << "H^" << e["degree"].get<int>() << "(p_+, " << e["module"].get<std::string>()
                << "): ";
      for (const auto& w : e["weights"])
        std::cout << "(" << w[0].get<long>() << "," << w[1].get<long>() << ") ";
      std::cout << "\n";
    }
  } else if (which == 4) {
    for (const auto& r : j["components"]) {
      std::cout << "side " << r["side"].get<std::string>() << "  homog "
                << r["homogeneity"].get<long>() << "  (" << r["weights"]["left"][0].get<long>()
                << "," << r["weights"]["left"][1].get<long>() << ")x("
                << r["weights"]["right"][0].get<long>() << ","
                << r["weights"]["right"][1].get<long>() << ")  E/F: [";
      for (const auto& e : r["eigenvalues"]) std::cout << e.get<std::string>() << " ";
      std::cout << "]  " << r["cochain_shape"].get<std::string>() << "\n";
    }
  } else {
    for (const auto& r : j["rows"]) {
      std::cout << "homog " << r["homogeneity"].get<int>() << "  " << r["domain"][0].get<std::string>()
                << " x " << r["domain"][1].get<std::string>() << " -> "
                << r["target"].get<std::string>() << "  dim " << r["real_dim"].get<int>() << "  ["
                << r["linearity"]["comment"].get<std::string>() << "]  "
                << r["torsion_label"].get<std::string>()
                << (r["embedded_vanishing"].get<bool>() ? "  [embedded-vanishing]" : "") << "\n";
    }
  }
  return 0;
}

int run_classify(const std::string& kind_s, bool json) {
  AlgebraKind kind = parse_kind(kind_s);
  if (kind != AlgebraKind::HyperbolicReal && kind != AlgebraKind::EllipticReal)
    throw CLI::ValidationError("--kind", "classify works on the real kinds");
  if (json) {
    std::cout << classify_json(kind) << "\n";
    return 0;
  }
  return run_tables(kind == AlgebraKind::HyperbolicReal ? 1 : 2, false);
}

int run_kostant(long a, long b, int degree, bool json) {
  Weight lambda{a, b};
  auto ws = kostant_cohomology(lambda, degree);
  if (json) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["lambda"] = {a, b};
    j["degree"] = degree;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& w : ws) arr.push_back({w.a, w.b});
    j["weights"] = arr;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "H^" << degree << "(p_+, V_" << lambda.str() << "): ";
    for (const auto& w : ws) std::cout << w.str() << " ";
    std::cout << "\n";
  }
  return 0;
}

int run_quadric(const std::string& kind_s, const std::string& point_text, bool json) {
  QuadricKind kind = parse_quadric_kind(kind_s);
  QuadricPoint p = point_from_json(kind, point_text);
  bool on = on_quadric(p);
  if (json) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = kind_s;
    j["point"] = nlohmann::ordered_json::parse(point_json(p));
    j["on_quadric"] = on;
    j["in_mu0"] = in_mu0(p);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "point " << p.str() << (on ? " is" : " is NOT") << " on the " << kind_s
              << " quadric" << (in_mu0(p) ? " (inside mu_0)" : "") << "\n";
  }
  return 0;
}

int run_chain(const std::string& kind_s, const std::string& alpha_s, const std::string& beta_s,
              int samples, bool csv, bool json) {
  QuadricKind kind = parse_quadric_kind(kind_s);
  Rat alpha = rat_parse(alpha_s), beta = rat_parse(beta_s);
  std::vector<QuadricPoint> pts;
  std::array<Rat, 2> sincos{Rat(0), Rat(1)};
  if (kind == QuadricKind::Hyperbolic) {
    pts = one_chain_hyperbolic(alpha, beta, samples);
  } else {
    // alpha is the Pythagorean tangent-half-angle parameter of the direction
    sincos = pythagorean_direction(alpha);
    pts = one_chain_elliptic(sincos, beta, samples);
  }
  if (csv) {
    int prec = csv_precision();
    std::cout.precision(prec);
    std::cout << "u1,u2\n";
    for (const auto& p : pts) {
      // hyperbolic: u = (Re w1, Re w2); elliptic: u = (Re U, Im U) with U = w1
      Rat u1 = p.w1.re;
      Rat u2 = kind == QuadricKind::Hyperbolic ? p.w2.re : p.w1.im;
      std::cout << u1.get_d() << "," << u2.get_d() << "\n";
    }
    return 0;
  }
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["kind"] = kind_s;
  j["alpha"] = rat_str(alpha);
  if (kind == QuadricKind::Elliptic)
    j["direction"] = {{"sin", rat_str(sincos[0])}, {"cos", rat_str(sincos[1])}};
  j["beta"] = rat_str(beta);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& p : pts) arr.push_back(nlohmann::ordered_json::parse(point_json(p)));
  j["points"] = arr;
  if (json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& p : pts) std::cout << p.str() << "\n";
  }
  return 0;
}

int run_normalform(const std::string& kind_s, const std::string& file, bool json) {
  QuadricKind kind = parse_quadric_kind(kind_s);
  std::ifstream in(file);
  if (!in) throw CLI::ValidationError("--file", "cannot open '" + file + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  NFSeries s = parse_series(kind, ss.str());
  std::cout << (json ? normal_form_report_json(s) : normal_form_report_text(s)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for hyperbolic/elliptic codimension-two CR quadrics"};
  app.require_subcommand(1);

  std::string kind = "hyperbolic", method = "direct", point_text, file, alpha = "0", beta = "0";
  int degree = 2, which = 3, samples = 5;
  long wa = 1, wb = 1;
  std::optional<int> homog;
  bool json = false, verbose = false, csv = false;

  auto* coh = app.add_subcommand("cohomology", "cohomology dimensions by slice");
  coh->add_option("--kind", kind, "hyperbolic|elliptic|sl3|sl3sl3")->required();
  coh->add_option("--degree", degree, "cochain degree 0..3")->required()->check(CLI::Range(0, 3));
  coh->add_option("--homogeneity", homog, "restrict to one homogeneity slice");
  coh->add_option("--method", method, "direct|kostant|both")
      ->check(CLI::IsMember({"direct", "kostant", "both"}));
  coh->add_flag("--json", json, "JSON output");
  coh->add_flag("--verbose", verbose, "include harmonic bases");

  auto* tab = app.add_subcommand("tables", "reproduce the cohomology tables");
  tab->add_option("--which", which, "1|2|3|4")->required()->check(CLI::Range(1, 4));
  tab->add_flag("--json", json, "JSON output");

  auto* cls = app.add_subcommand("classify", "classified torsion components");
  cls->add_option("--kind", kind, "hyperbolic|elliptic")->required();
  cls->add_flag("--json", json, "JSON output");

  auto* kos = app.add_subcommand("kostant", "Kostant weight orbit for one A2 factor");
  kos->add_option("--a", wa, "first fundamental-weight coefficient")->required();
  kos->add_option("--b", wb, "second fundamental-weight coefficient")->required();
  kos->add_option("--degree", degree, "cohomology degree 0..3")->required()->check(CLI::Range(0, 3));
  kos->add_flag("--json", json, "JSON output");

  auto* qua = app.add_subcommand("quadric", "exact quadric membership test");
  qua->add_option("--kind", kind, "hyperbolic|elliptic")->required();
  qua->add_option("--check", point_text, "point as JSON {\"z1\":[re,im],...}")->required();
  qua->add_flag("--json", json, "JSON output");

  auto* chn = app.add_subcommand("chain", "sample a 1-chain inside the standard 2-chain");
  chn->add_option("--kind", kind, "hyperbolic|elliptic")->required();
  chn->add_option("--alpha", alpha, "direction (hyperbolic) / Pythagorean parameter (elliptic)")
      ->required();
  chn->add_option("--beta", beta, "family parameter")->required();
  chn->add_option("--samples", samples, "number of sample points")->required()
      ->check(CLI::PositiveNumber);
  chn->add_flag("--csv", csv, "emit float CSV (PARABOLIC_LAB_PRECISION digits)");
  chn->add_flag("--json", json, "JSON output");

  auto* nf = app.add_subcommand("normalform", "check normal-form conditions of a series file");
  nf->add_option("--kind", kind, "hyperbolic|elliptic")->required();
  nf->add_option("--file", file, "series file")->required();
  nf->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (coh->parsed()) return run_cohomology(kind, degree, homog, method, json, verbose);
    if (tab->parsed()) return run_tables(which, json);
    if (cls->parsed()) return run_classify(kind, json);
    if (kos->parsed()) return run_kostant(wa, wb, degree, json);
    if (qua->parsed()) return run_quadric(kind, point_text, json);
    if (chn->parsed()) return run_chain(kind, alpha, beta, samples, csv, json);
    if (nf->parsed()) return run_normalform(kind, file, json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return 0;
}
