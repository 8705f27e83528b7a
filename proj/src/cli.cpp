#include "gfc/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gfc/complexio.hpp"
#include "gfc/jsonio.hpp"

namespace gfc {

std::vector<int> parse_cycles(const std::string& text, int size) {
  std::vector<int> perm(size);
  for (int i = 0; i < size; ++i) perm[i] = i;
  std::size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace(text[pos])) ++pos; };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("cycle notation: expected '('");
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(text[end])) ++end;
      if (end == pos) throw ParseError("cycle notation: expected an index");
      const int idx = std::stoi(text.substr(pos, end - pos));
      if (idx < 1 || idx > size) throw ParseError("cycle index out of range: " + std::to_string(idx));
      cycle.push_back(idx - 1);
      pos = end;
      skip_ws();
    }
    if (pos >= text.size()) throw ParseError("cycle notation: missing ')'");
    ++pos;
    skip_ws();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      if (perm[from] != from) throw ParseError("cycles are not disjoint");
      perm[from] = to;
    }
  }
  return perm;
}

std::string cycles_to_string(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) {
      seen[i] = true;
      continue;
    }
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      seen[j] = true;
      j = perm[j];
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

void emit(const OrderedJson& j, bool json_output, std::ostream& out,
          const std::function<void(std::ostream&)>& text_writer) {
  if (json_output) {
    out << j.dump(2) << '\n';
  } else {
    text_writer(out);
  }
}

int cmd_genus(int k, int n, const RunConfig& rc, std::ostream& out) {
  const std::int64_t g = genus(k, n);
  OrderedJson j{{"k", k}, {"n", n}, {"genus", g}};
  emit(j, rc.json_output, out, [&](std::ostream& o) { o << g << '\n'; });
  return 0;
}

int cmd_orbit_types(int n, int maxN, const RunConfig& rc, std::ostream& out) {
  if (maxN <= 0) maxN = n + 1;  // exhaustive: (*) forces N <= n + 1
  const auto solutions = orbit_type_solutions(n, maxN);
  OrderedJson j{{"n", n}, {"max_N", maxN}};
  auto& arr = j["solutions"] = OrderedJson::array();
  for (const auto& s : solutions)
    arr.push_back(OrderedJson{{"N", s.N}, {"A", s.A}, {"B", s.B}, {"C", s.C}});
  emit(j, rc.json_output, out, [&](std::ostream& o) {
    o << "N A B C\n";
    for (const auto& s : solutions)
      o << s.N << ' ' << s.A << ' ' << s.B << ' ' << s.C << '\n';
  });
  return 0;
}

int cmd_symmetries(const std::string& points_csv, const std::string& orientation,
                   const RunConfig& rc, std::ostream& out) {
  std::vector<SpherePoint> pts;
  std::stringstream ss(points_csv);
  std::string item;
  while (std::getline(ss, item, ',')) pts.push_back(parse_point(item));
  const ConeConfiguration cfg(std::move(pts), rc.limits.epsilon);
  Orientation o = Orientation::Both;
  if (orientation == "conformal") o = Orientation::Conformal;
  else if (orientation == "anticonformal") o = Orientation::Anticonformal;
  else if (orientation != "both") throw ParseError("orientation must be conformal|anticonformal|both");
  const auto syms = symmetries(cfg, o, rc.limits.epsilon);
  const int cap = rc.limits.order_cap > 0 ? rc.limits.order_cap : default_order_cap(cfg.size());

  OrderedJson j{{"points", OrderedJson::array()}, {"symmetries", OrderedJson::array()}};
  for (const SpherePoint& p : cfg.points) j["points"].push_back(format_point(p));
  for (const ConfigSymmetry& s : syms) {
    OrderedJson sj = symmetry_to_json(s);
    sj["order"] = order(s.map, cap, rc.limits.epsilon);
    j["symmetries"].push_back(std::move(sj));
  }
  emit(j, rc.json_output, out, [&](std::ostream& os) {
    os << syms.size() << " symmetries\n";
    for (const auto& sj : j["symmetries"]) {
      std::vector<int> perm;
      for (const auto& e : sj["perm"]) perm.push_back(e.get<int>() - 1);
      os << (sj["anticonformal"].get<bool>() ? "anticonformal" : "conformal   ")
         << "  order=" << sj["order"].get<int>() << "  perm=" << cycles_to_string(perm)
         << "  matrix=[" << sj["matrix"][0].get<std::string>() << ", "
         << sj["matrix"][1].get<std::string>() << ", " << sj["matrix"][2].get<std::string>()
         << ", " << sj["matrix"][3].get<std::string>() << "]\n";
    }
  });
  return 0;
}

int cmd_lift(const std::string& curve_file, const std::string& cycles, bool anticonformal,
             const RunConfig& rc, std::ostream& out) {
  const FermatCurve curve =
      curve_from_json(parse_json_text(read_text_file(curve_file)), rc.limits.epsilon);
  const ConeConfiguration cone = cone_points(curve, rc.limits.epsilon);
  const std::vector<int> perm = parse_cycles(cycles, cone.size());
  const auto syms = symmetries(
      cone, anticonformal ? Orientation::Anticonformal : Orientation::Conformal,
      rc.limits.epsilon);
  const auto it = std::find_if(syms.begin(), syms.end(),
                               [&](const ConfigSymmetry& s) { return s.perm == perm; });
  if (it == syms.end())
    throw NoLift("no " + std::string(anticonformal ? "anticonformal" : "conformal") +
                 " symmetry of the cone configuration induces " + cycles);
  const LiftFamily family = enumerate_lifts(curve, *it, rc.limits.lift_cap, rc.limits.epsilon);

  OrderedJson j = curve_to_json(curve);
  j["perm"] = OrderedJson::array();
  for (const int p : perm) j["perm"].push_back(p + 1);
  j["anticonformal"] = anticonformal;
  j["tk"] = OrderedJson::array();
  for (const Complex& t : family.tk) j["tk"].push_back(format_complex(t));
  j["lift_count"] = static_cast<std::int64_t>(family.lifts.size());
  j["sample_lift"] = automorphism_to_json(family.lifts.front());
  emit(j, rc.json_output, out, [&](std::ostream& os) {
    os << "perm " << cycles_to_string(perm) << (anticonformal ? " anticonformal" : " conformal")
       << "\nt =";
    for (const Complex& t : family.tk) os << ' ' << format_complex(t);
    os << "\nlifts: " << family.lifts.size() << "\nsample c =";
    for (const Complex& c : family.lifts.front().c) os << ' ' << format_complex(c);
    os << '\n';
  });
  return 0;
}

int cmd_classify(const std::string& curve_file, const RunConfig& rc, std::ostream& out) {
  const FermatCurve curve =
      curve_from_json(parse_json_text(read_text_file(curve_file)), rc.limits.epsilon);
  const ModuliClassification cls = classify(curve, rc.limits);
  const OrderedJson j = classification_to_json(cls, rc.limits.epsilon);
  emit(j, rc.json_output, out, [&](std::ostream& os) {
    os << "verdict: " << verdict_name(cls.verdict) << '\n';
    if (cls.witness) {
      os << "witness: perm " << cycles_to_string(cls.witness->perm)
         << (cls.witness->anticonformal ? " anticonformal" : " conformal")
         << " order " << j["witness"]["order"].get<int>() << "\n  c =";
      for (const Complex& c : cls.witness->c) os << ' ' << format_complex(c);
      os << '\n';
    }
    os << "exhaustion: " << cls.exhaustion.antisymmetries << " antisymmetries, "
       << cls.exhaustion.lifts_scanned << " lifts scanned, "
       << cls.exhaustion.involutions_found << " involutions\n"
       << "assumption: " << assumption_name(cls.assumption) << '\n'
       << "epsilon: " << format_real(rc.limits.epsilon) << '\n';
  });
  return 0;
}

int cmd_verify(const std::string& suite, int k, const RunConfig& rc, std::ostream& out) {
  std::vector<TheoremCheck> checks;
  if (suite == "theorem1") {
    checks.push_back(verify_theorem1(k, Complex(-2.0, std::sqrt(2.0)), rc.limits));
  } else if (suite == "humbert") {
    for (const auto& row : orbit_type_solutions(4, 5))
      checks.push_back(verify_humbert_case(row, rc.limits));
  } else if (suite == "hidalgo") {
    checks.push_back(verify_hidalgo(rc.limits));
  } else if (suite == "p5") {
    const int p = k;
    auto prime = [](int v) {
      if (v < 2) return false;
      for (int d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
      return true;
    };
    if (p < 3 || !prime(p)) throw ParseError("p5 needs --k an odd prime (default 3)");
    for (int c = 1; c <= 4; ++c) checks.push_back(verify_p3_or_p5(p, 5, c, rc.limits));
    checks.push_back(verify_p3_or_p5(p, 3, 0, rc.limits));
  } else {
    throw ParseError("suite must be theorem1|humbert|hidalgo|p5");
  }
  const bool all = std::all_of(checks.begin(), checks.end(),
                               [](const TheoremCheck& c) { return c.conforms; });
  OrderedJson j{{"suite", suite}};
  auto& arr = j["cases"] = OrderedJson::array();
  for (const TheoremCheck& c : checks) {
    OrderedJson cj{{"name", c.name},
                   {"conforms", c.conforms},
                   {"verdict", verdict_name(c.result.verdict)},
                   {"assumption", assumption_name(c.result.assumption)},
                   {"detail", c.detail}};
    cj["witness"] =
        c.result.witness ? automorphism_to_json(*c.result.witness) : OrderedJson(nullptr);
    arr.push_back(std::move(cj));
  }
  j["all_conform"] = all;
  emit(j, rc.json_output, out, [&](std::ostream& os) {
    for (const TheoremCheck& c : checks)
      os << (c.conforms ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  });
  return all ? 0 : 4;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"generalized Fermat curves: cone-point symmetries, automorphism lifts, "
               "and real fields of moduli"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  RunConfig rc;
  std::string output_mode = "text";
  app.add_option("--epsilon", rc.limits.epsilon, "comparison tolerance")
      ->envname("GFC_EPSILON")
      ->check(CLI::Range(1e-300, 1e-3, "EPSILON"));
  app.add_option("--order-cap", rc.limits.order_cap,
                 "order search cap (default 2(n+1)! capped at 40320)")
      ->check(CLI::PositiveNumber);
  app.add_option("--lift-cap", rc.limits.lift_cap, "maximum k^n lifts per symmetry")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", rc.limits.seed, "seed for property sampling");
  app.add_option("--output", output_mode, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  int k = 0, n = 0, maxN = 0;
  std::string points_csv, orientation = "both", curve_file, cycles, suite;
  bool anticonformal = false;

  CLI::App* genus_cmd = app.add_subcommand("genus", "genus of the type (k, n)");
  genus_cmd->add_option("--k", k)->required()->check(CLI::Range(2, 1000000));
  genus_cmd->add_option("--n", n)->required()->check(CLI::Range(2, 1000000));

  CLI::App* orbit_cmd =
      app.add_subcommand("orbit-types", "orbit-count solutions of n + 1 = 2NA + NB + 2C");
  orbit_cmd->add_option("--n", n)->required()->check(CLI::Range(2, 1000));
  orbit_cmd->add_option("--max-N", maxN)->check(CLI::PositiveNumber);

  CLI::App* sym_cmd =
      app.add_subcommand("symmetries", "extended Mobius maps preserving a point set");
  sym_cmd->add_option("--points", points_csv, "comma-separated complex literals")->required();
  sym_cmd->add_option("--orientation", orientation, "conformal|anticonformal|both");

  CLI::App* lift_cmd = app.add_subcommand("lift", "lift an orbifold symmetry to the curve");
  lift_cmd->add_option("--curve", curve_file, "curve JSON file")->required();
  lift_cmd->add_option("--perm", cycles, "cycle notation, e.g. \"(1 2)(3 4)(5 6)\"")->required();
  lift_cmd->add_flag("--anticonformal", anticonformal);

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "field of moduli / field of definition verdict");
  classify_cmd->add_option("--curve", curve_file, "curve JSON file")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a committed theorem suite");
  verify_cmd->add_option("--suite", suite, "theorem1|humbert|hidalgo|p5")->required();
  verify_cmd->add_option("--k", k, "k (theorem1) or odd prime p (p5)")->check(CLI::Range(2, 97));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  rc.json_output = output_mode == "json";

  try {
    if (genus_cmd->parsed()) return cmd_genus(k, n, rc, out);
    if (orbit_cmd->parsed()) return cmd_orbit_types(n, maxN, rc, out);
    if (sym_cmd->parsed()) return cmd_symmetries(points_csv, orientation, rc, out);
    if (lift_cmd->parsed()) return cmd_lift(curve_file, cycles, anticonformal, rc, out);
    if (classify_cmd->parsed()) return cmd_classify(curve_file, rc, out);
    if (verify_cmd->parsed()) return cmd_verify(suite, k == 0 ? 3 : k, rc, out);
  } catch (const NoLift& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const NotFiniteOrder& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const InconsistentOrbitLengths& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const Overflow& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace gfc
