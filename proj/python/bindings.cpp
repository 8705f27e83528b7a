#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gfc/cli.hpp"
#include "gfc/complexio.hpp"
#include "gfc/jsonio.hpp"

namespace py = pybind11;

namespace {

gfc::SearchLimits make_limits(double epsilon, long long lift_cap, int order_cap) {
  gfc::SearchLimits limits;
  limits.epsilon = epsilon;
  limits.lift_cap = lift_cap;
  limits.order_cap = order_cap;
  return limits;
}

gfc::FermatCurve make_curve(int k, const std::vector<std::string>& lambdas, double epsilon) {
  std::vector<gfc::Complex> ls;
  ls.reserve(lambdas.size());
  for (const std::string& s : lambdas) ls.push_back(gfc::parse_complex(s));
  return gfc::build_curve(k, std::move(ls), epsilon);
}

std::vector<gfc::SpherePoint> make_points(const std::vector<std::string>& points) {
  std::vector<gfc::SpherePoint> pts;
  pts.reserve(points.size());
  for (const std::string& s : points) pts.push_back(gfc::parse_point(s));
  return pts;
}

}  // namespace

PYBIND11_MODULE(_gfc, m) {
  m.doc() = "generalized Fermat curves: symmetries, lifts, and fields of moduli";

  m.def("genus", &gfc::genus, py::arg("k"), py::arg("n"));

  m.def(
      "orbit_type_solutions",
      [](int n, int max_n) {
        if (max_n <= 0) max_n = n + 1;
        std::vector<std::tuple<int, int, int, int>> rows;
        for (const auto& s : gfc::orbit_type_solutions(n, max_n))
          rows.emplace_back(s.N, s.A, s.B, s.C);
        return rows;
      },
      py::arg("n"), py::arg("max_n") = 0);

  m.def("parse_complex", [](const std::string& s) { return gfc::parse_complex(s); },
        py::arg("text"));
  m.def("format_complex", [](std::complex<double> z) { return gfc::format_complex(z); },
        py::arg("z"));

  m.def(
      "symmetries_json",
      [](const std::vector<std::string>& points, const std::string& orientation,
         double epsilon) {
        gfc::Orientation o = gfc::Orientation::Both;
        if (orientation == "conformal") o = gfc::Orientation::Conformal;
        if (orientation == "anticonformal") o = gfc::Orientation::Anticonformal;
        const gfc::ConeConfiguration cfg(make_points(points), epsilon);
        gfc::OrderedJson arr = gfc::OrderedJson::array();
        for (const auto& s : gfc::symmetries(cfg, o, epsilon)) {
          gfc::OrderedJson sj = gfc::symmetry_to_json(s);
          sj["order"] = gfc::order(s.map, gfc::default_order_cap(cfg.size()), epsilon);
          arr.push_back(std::move(sj));
        }
        return arr.dump();
      },
      py::arg("points"), py::arg("orientation") = "both",
      py::arg("epsilon") = gfc::kDefaultEpsilon);

  m.def(
      "classify_json",
      [](int k, const std::vector<std::string>& lambdas, double epsilon, long long lift_cap,
         int order_cap) {
        const gfc::SearchLimits limits = make_limits(epsilon, lift_cap, order_cap);
        const gfc::FermatCurve curve = make_curve(k, lambdas, epsilon);
        return gfc::classification_to_json(gfc::classify(curve, limits), epsilon).dump();
      },
      py::arg("k"), py::arg("lambdas"), py::arg("epsilon") = gfc::kDefaultEpsilon,
      py::arg("lift_cap") = 1000000LL, py::arg("order_cap") = 0);

  m.def(
      "solve_lift_constants",
      [](int k, const std::vector<std::string>& lambdas, const std::vector<int>& perm_1based,
         bool anticonformal, double epsilon) {
        const gfc::FermatCurve curve = make_curve(k, lambdas, epsilon);
        const gfc::ConeConfiguration cone = gfc::cone_points(curve, epsilon);
        std::vector<int> perm;
        for (const int p : perm_1based) perm.push_back(p - 1);
        const auto syms = gfc::symmetries(
            cone, anticonformal ? gfc::Orientation::Anticonformal : gfc::Orientation::Conformal,
            epsilon);
        for (const auto& s : syms)
          if (s.perm == perm) {
            std::vector<std::string> out;
            for (const gfc::Complex& t : gfc::solve_lift_constants(curve, s, epsilon))
              out.push_back(gfc::format_complex(t));
            return out;
          }
        throw gfc::NoLift("no symmetry of the cone configuration induces this permutation");
      },
      py::arg("k"), py::arg("lambdas"), py::arg("perm"), py::arg("anticonformal") = false,
      py::arg("epsilon") = gfc::kDefaultEpsilon);

  m.def(
      "verify_suite_json",
      [](const std::string& suite, int k, double epsilon) {
        gfc::SearchLimits limits;
        limits.epsilon = epsilon;
        std::vector<gfc::TheoremCheck> checks;
        if (suite == "theorem1") {
          checks.push_back(gfc::verify_theorem1(k, gfc::Complex(-2.0, std::sqrt(2.0)), limits));
        } else if (suite == "humbert") {
          for (const auto& row : gfc::orbit_type_solutions(4, 5))
            checks.push_back(gfc::verify_humbert_case(row, limits));
        } else if (suite == "hidalgo") {
          checks.push_back(gfc::verify_hidalgo(limits));
        } else if (suite == "p5") {
          for (int c = 1; c <= 4; ++c) checks.push_back(gfc::verify_p3_or_p5(k, 5, c, limits));
          checks.push_back(gfc::verify_p3_or_p5(k, 3, 0, limits));
        } else {
          throw gfc::ParseError("suite must be theorem1|humbert|hidalgo|p5");
        }
        gfc::OrderedJson arr = gfc::OrderedJson::array();
        for (const auto& c : checks)
          arr.push_back(gfc::OrderedJson{{"name", c.name},
                                         {"conforms", c.conforms},
                                         {"verdict", gfc::verdict_name(c.result.verdict)},
                                         {"detail", c.detail}});
        return arr.dump();
      },
      py::arg("suite"), py::arg("k") = 3, py::arg("epsilon") = gfc::kDefaultEpsilon);

  py::register_exception<gfc::Error>(m, "GfcError");
}
