#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "plab/cochain.hpp"
#include "plab/kostant.hpp"
#include "plab/normal_form.hpp"
#include "plab/quadric.hpp"
#include "plab/realform.hpp"

namespace py = pybind11;
using namespace plab;

namespace {

AlgebraKind kind_arg(const std::string& s) {
  auto k = kind_from_name(s);
  if (!k) throw std::invalid_argument("unknown kind '" + s + "'");
  return *k;
}

QuadricKind quadric_kind_arg(const std::string& s) {
  if (s == "hyperbolic") return QuadricKind::Hyperbolic;
  if (s == "elliptic") return QuadricKind::Elliptic;
  throw std::invalid_argument("quadric kind must be 'hyperbolic' or 'elliptic'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Lie-algebra cohomology and CR quadric computations";

  m.def("cohomology_dim",
        [](const std::string& kind, int degree, int homogeneity) {
          return CochainEngine::get(kind_arg(kind)).cohomology_dim(degree, homogeneity);
        },
        py::arg("kind"), py::arg("degree"), py::arg("homogeneity"));
  m.def("harmonic_dim",
        [](const std::string& kind, int degree, int homogeneity) {
          return CochainEngine::get(kind_arg(kind)).harmonic_dim(degree, homogeneity);
        },
        py::arg("kind"), py::arg("degree"), py::arg("homogeneity"));
  m.def("kostant_dim",
        [](const std::string& kind, int degree, int homogeneity) {
          AlgebraKind k = kind_arg(kind);
          return kostant_count(k, degree, homogeneity) * realification_factor(k);
        },
        py::arg("kind"), py::arg("degree"), py::arg("homogeneity"));
  m.def("slice_homogeneities",
        [](const std::string& kind, int degree) {
          return CochainEngine::get(kind_arg(kind)).slice_homogeneities(degree);
        },
        py::arg("kind"), py::arg("degree"));

  m.def("kostant_weights",
        [](long a, long b, int degree) {
          std::vector<std::pair<long, long>> out;
          for (const Weight& w : kostant_cohomology({a, b}, degree)) out.push_back({w.a, w.b});
          return out;
        },
        py::arg("a"), py::arg("b"), py::arg("degree"));
  m.def("affine_action",
        [](const std::vector<int>& word, long a, long b) {
          Weight w = affine_action(WeylElement{word}, {a, b});
          return std::make_pair(w.a, w.b);
        },
        py::arg("word"), py::arg("a"), py::arg("b"));

  m.def("table_json", [](int which) {
    switch (which) {
      case 1: return table12_json(1);
      case 2: return table12_json(2);
      case 3: return table3_json();
      case 4: return table4_json();
      default: throw std::invalid_argument("table must be 1..4");
    }
  });
  m.def("classify_json", [](const std::string& kind) { return classify_json(kind_arg(kind)); });
  m.def("algebra_json", [](const std::string& kind) { return build_algebra(kind_arg(kind)).dump_json(); });

  m.def("on_quadric",
        [](const std::string& kind, const std::string& point) {
          return on_quadric(point_from_json(quadric_kind_arg(kind), point));
        },
        py::arg("kind"), py::arg("point_json"));
  m.def("heisenberg_translate_json",
        [](const std::string& kind, const std::string& param, const std::string& point) {
          QuadricKind k = quadric_kind_arg(kind);
          QuadricPoint par = point_from_json(k, param), x = point_from_json(k, point);
          return point_json(heisenberg_translate({par.z1, par.z2}, {par.w1, par.w2}, x));
        },
        py::arg("kind"), py::arg("param_json"), py::arg("point_json"));
  m.def("one_chain_json",
        [](const std::string& kind, const std::string& alpha, const std::string& beta, int n) {
          QuadricKind k = quadric_kind_arg(kind);
          Rat a = rat_parse(alpha), b = rat_parse(beta);
          std::vector<std::string> out;
          auto pts = k == QuadricKind::Hyperbolic
                         ? one_chain_hyperbolic(a, b, n)
                         : one_chain_elliptic(pythagorean_direction(a), b, n);
          for (const auto& p : pts) out.push_back(point_json(p));
          return out;
        },
        py::arg("kind"), py::arg("alpha"), py::arg("beta"), py::arg("samples"));

  m.def("normal_form_report_json",
        [](const std::string& kind, const std::string& text) {
          return normal_form_report_json(parse_series(quadric_kind_arg(kind), text));
        },
        py::arg("kind"), py::arg("series_text"));
}
