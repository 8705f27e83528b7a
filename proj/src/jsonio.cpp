#include "gfc/jsonio.hpp"

#include <fstream>
#include <sstream>

#include "gfc/complexio.hpp"

namespace gfc {

ConeConfiguration config_from_json(const OrderedJson& j, double eps) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    throw ParseError("configuration JSON needs a \"points\" array");
  std::vector<SpherePoint> pts;
  for (const auto& e : j["points"]) {
    if (!e.is_string()) throw ParseError("configuration points must be strings");
    pts.push_back(parse_point(e.get<std::string>()));
  }
  return ConeConfiguration(std::move(pts), eps);
}

OrderedJson config_to_json(const ConeConfiguration& cfg) {
  OrderedJson j;
  auto& arr = j["points"] = OrderedJson::array();
  for (const SpherePoint& p : cfg.points) arr.push_back(format_point(p));
  return j;
}

FermatCurve curve_from_json(const OrderedJson& j, double eps) {
  if (!j.is_object() || !j.contains("k") || !j["k"].is_number_integer() ||
      !j.contains("lambdas") || !j["lambdas"].is_array())
    throw ParseError("curve JSON needs integer \"k\" and a \"lambdas\" array");
  std::vector<Complex> lambdas;
  for (const auto& e : j["lambdas"]) {
    if (!e.is_string()) throw ParseError("curve lambdas must be strings");
    lambdas.push_back(parse_complex(e.get<std::string>()));
  }
  return build_curve(j["k"].get<int>(), std::move(lambdas), eps);
}

OrderedJson curve_to_json(const FermatCurve& curve) {
  OrderedJson j;
  j["k"] = curve.k;
  auto& arr = j["lambdas"] = OrderedJson::array();
  for (const Complex& l : curve.lambdas) arr.push_back(format_complex(l));
  return j;
}

CurveAutomorphism automorphism_from_json(const OrderedJson& j) {
  if (!j.is_object() || !j.contains("perm") || !j.contains("c") || !j.contains("anticonformal"))
    throw ParseError("automorphism JSON needs \"perm\", \"c\", \"anticonformal\"");
  CurveAutomorphism a;
  for (const auto& e : j["perm"]) {
    const int image = e.get<int>();
    if (image < 1) throw ParseError("permutation entries are 1-based");
    a.perm.push_back(image - 1);
  }
  for (const auto& e : j["c"]) a.c.push_back(parse_complex(e.get<std::string>()));
  a.anticonformal = j["anticonformal"].get<bool>();
  if (a.perm.size() != a.c.size()) throw ParseError("perm and c sizes differ");
  std::vector<bool> seen(a.perm.size(), false);
  for (const int p : a.perm) {
    if (p >= static_cast<int>(a.perm.size()) || seen[p]) throw ParseError("not a permutation");
    seen[p] = true;
  }
  return a.normalized();
}

OrderedJson automorphism_to_json(const CurveAutomorphism& a) {
  OrderedJson j;
  auto& perm = j["perm"] = OrderedJson::array();
  for (const int p : a.perm) perm.push_back(p + 1);
  auto& c = j["c"] = OrderedJson::array();
  for (const Complex& e : a.c) c.push_back(format_complex(e));
  j["anticonformal"] = a.anticonformal;
  return j;
}

OrderedJson classification_to_json(const ModuliClassification& cls, double epsilon) {
  OrderedJson j;
  j["verdict"] = verdict_name(cls.verdict);
  if (cls.witness) {
    j["witness"] = automorphism_to_json(*cls.witness);
    j["witness"]["order"] = auto_order(*cls.witness, kOrderCapCeiling, epsilon);
  } else {
    j["witness"] = nullptr;
  }
  j["exhaustion"] = OrderedJson{{"antisymmetries", cls.exhaustion.antisymmetries},
                                {"lifts_scanned", cls.exhaustion.lifts_scanned},
                                {"involutions_found", cls.exhaustion.involutions_found}};
  j["assumption"] = assumption_name(cls.assumption);
  j["epsilon"] = epsilon;
  return j;
}

OrderedJson symmetry_to_json(const ConfigSymmetry& s) {
  OrderedJson j;
  j["anticonformal"] = s.map.anticonformal;
  auto& perm = j["perm"] = OrderedJson::array();
  for (const int p : s.perm) perm.push_back(p + 1);
  const ExtendedMobius n = s.map.normalized();
  j["matrix"] = OrderedJson::array(
      {format_complex(n.m[0]), format_complex(n.m[1]), format_complex(n.m[2]),
       format_complex(n.m[3])});
  return j;
}

OrderedJson parse_json_text(const std::string& text) {
  OrderedJson j = OrderedJson::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace gfc
