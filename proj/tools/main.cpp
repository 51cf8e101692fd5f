#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "zf/parse.hpp"
#include "zf/report.hpp"

namespace {

using namespace zf;

// Exit codes: 0 all checks passed, 1 usage or parse error, 2 a check
// failed with witnesses, 3 incomplete (caveats remain).
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;
constexpr int kIncomplete = 3;

struct Output {
  bool json = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  int emit(const std::string& command, Json inputs, Json result, bool passed,
           const std::vector<std::string>& caveats, const std::string& text_summary) {
    if (json) {
      Json doc = make_report(command, std::move(inputs), std::move(result), passed, caveats);
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      doc["timing_ms"] = ms;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << text_summary << "\n";
    }
    if (!caveats.empty()) return kIncomplete;
    return passed ? kOk : kFailed;
  }
};

FieldPtr field_from_name(const std::string& name) {
  if (name == "Q") return rationals();
  if (name == "Qw") return omega_field();
  if (name == "Qi") return gauss_field();
  throw CLI::ValidationError("--field must be one of Q, Qw, Qi");
}

std::optional<FieldElement> parse_t(const std::string& text, const FieldPtr& field) {
  if (text.empty()) return std::nullopt;
  return FieldElement(field, rational_from_string(text));
}

std::vector<std::string> infer_variables(const std::string& text) {
  // Identifiers in order of first appearance, minus the field symbols.
  std::vector<std::string> vars;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      std::string name = text.substr(i, j - i);
      if (name != "w" && name != "i" && name != "theta" &&
          std::find(vars.begin(), vars.end(), name) == vars.end()) {
        vars.push_back(name);
      }
      i = j;
    } else {
      ++i;
    }
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

std::string curve_summary(const BuiltCurve& c) {
  std::ostringstream os;
  os << (c.verification.passed ? "PASS" : "FAIL") << ": degree " << c.bundle.degree << ", "
     << c.verification.singular_count << " singular points of type ("
     << c.bundle.expected_type.first << ", " << c.bundle.expected_type.second << ")";
  for (const auto& cl : c.verification.clusters) {
    os << "\n  " << cl.description << ": " << cl.count << " points, multiplicity "
       << cl.multiplicity << ", Milnor " << cl.milnor;
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for plane-curve pair constructions"};
  app.require_subcommand(1);
  Output out;
  std::uint64_t seed = 1;
  app.add_flag("--json", out.json, "emit a JSON report");
  app.add_option("--seed", seed, "seed for all general choices");

  // derive-family
  auto* derive = app.add_subcommand("derive-family", "derive the three tangent cubic families");

  // verify prop4|prop5
  auto* verify = app.add_subcommand("verify", "verify a proposition-level claim");
  std::string which_prop;
  verify->add_option("claim", which_prop, "prop4 or prop5")->required();

  // build series1|series2
  auto* build = app.add_subcommand("build", "build a curve of one of the two series");
  std::string which_series;
  std::string t_text;
  int q_param = 0;
  build->add_option("series", which_series, "series1 or series2")->required();
  build->add_option("--q", q_param, "pullback exponent")->required();
  build->add_option("--t", t_text, "exact pencil parameter (rational)");

  // check-conditions
  auto* check = app.add_subcommand("check-conditions", "run the pencil conditions on an input form");
  std::string input_path, field_name = "Q", vars_csv, t_sample_text = "2";
  int p_mult = 0;
  check->add_option("--input", input_path, "file with one polynomial expression")->required();
  check->add_option("--field", field_name, "coefficient field: Q, Qw, Qi");
  check->add_option("--vars", vars_csv, "comma-separated variable list");
  check->add_option("--p", p_mult, "multiplicity for condition (3)");
  check->add_option("--t-sample", t_sample_text, "sample parameter for condition (4)");

  // singular-points
  auto* sing = app.add_subcommand("singular-points", "singular points of a plane curve");
  std::string expr_text, sing_field = "Q", sing_vars;
  sing->add_option("--expr", expr_text, "curve expression");
  sing->add_option("--input", input_path, "file with the expression");
  sing->add_option("--field", sing_field, "coefficient field: Q, Qw, Qi");
  sing->add_option("--vars", sing_vars, "comma-separated variable list");

  // abelianization / nonabelian-cert
  auto* ab_cmd = app.add_subcommand("abelianization", "elementary divisors of the presentation");
  auto* cert_cmd = app.add_subcommand("nonabelian-cert", "permutation witness of non-abelianness");
  int gp = 0, gq = 0, gk = 1, max_degree = 8;
  for (auto* cmd : {ab_cmd, cert_cmd}) {
    cmd->add_option("--p", gp)->required();
    cmd->add_option("--q", gq)->required();
    cmd->add_option("--k", gk)->required();
  }
  cert_cmd->add_option("--max-degree", max_degree, "largest permutation degree to search");

  // pair
  auto* pair_cmd = app.add_subcommand("pair", "build and compare both members of a pair");
  int pp = 0, pq = 0, pk = 1, series_sel = 1;
  pair_cmd->add_option("--p", pp)->required();
  pair_cmd->add_option("--q", pq)->required();
  pair_cmd->add_option("--k", pk)->required();
  pair_cmd->add_option("--series", series_sel, "1 or 2")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (derive->parsed()) {
      auto family = derive_cubic_family();
      Json result = Json::array();
      std::ostringstream text;
      for (const auto& der : family) {
        result.push_back(to_json(der));
        text << "alpha = " << der.alpha.str() << ": " << der.closed_form.str() << "\n";
      }
      text << "all three families meet at the member X*Y*Z";
      return out.emit("derive-family", Json::object(), result, true, {}, text.str());
    }

    if (verify->parsed()) {
      if (which_prop == "prop4") {
        auto family = derive_cubic_family();
        Json result = Json::array();
        for (const auto& der : family) result.push_back(to_json(der));
        bool passed = family.size() == 3;
        return out.emit("verify prop4", Json::object(), result, passed, {},
                        passed ? "PASS: three tangent cubic families, meeting at X*Y*Z"
                               : "FAIL");
      }
      if (which_prop == "prop5") {
        Prop5Report rep = verify_prop5();
        std::vector<std::string> caveats;
        for (const auto& c : rep.conditions) {
          caveats.insert(caveats.end(), c.caveats.begin(), c.caveats.end());
        }
        std::ostringstream text;
        text << (rep.passed ? "PASS" : "FAIL") << ": conditions (1)-(4) "
             << (rep.passed ? "hold" : "do not all hold") << "; Sing S_2 = {";
        for (size_t i = 0; i < rep.singular_points_t2.size(); ++i) {
          if (i) text << ", ";
          text << rep.singular_points_t2[i];
        }
        text << "}";
        return out.emit("verify prop5", Json::object(), to_json(rep), rep.passed, caveats,
                        text.str());
      }
      std::cerr << "unknown claim '" << which_prop << "'\n";
      return kUsage;
    }

    if (build->parsed()) {
      Json inputs{{"q", q_param}, {"seed", seed}};
      if (!t_text.empty()) inputs["t"] = t_text;
      if (which_series == "series1") {
        auto t = parse_t(t_text, omega_field());
        BuiltCurve c = build_series1(q_param, t, seed);
        return out.emit("build series1", inputs, to_json(c), c.verification.passed, {},
                        curve_summary(c));
      }
      if (which_series == "series2") {
        auto t = parse_t(t_text, rationals());
        BuiltCurve c = build_series2(q_param, t, seed);
        return out.emit("build series2", inputs, to_json(c), c.verification.passed, {},
                        curve_summary(c));
      }
      std::cerr << "unknown series '" << which_series << "'\n";
      return kUsage;
    }

    if (check->parsed()) {
      std::ifstream in(input_path);
      if (!in) {
        std::cerr << "cannot open " << input_path << "\n";
        return kUsage;
      }
      std::string line;
      std::getline(in, line);
      FieldPtr field = field_from_name(field_name);
      std::vector<std::string> vars;
      if (!vars_csv.empty()) {
        std::istringstream vs(vars_csv);
        std::string v;
        while (std::getline(vs, v, ',')) vars.push_back(v);
      } else {
        vars = infer_variables(line);
      }
      RingPtr ring = make_ring(field, vars);
      MultiPoly f0 = parse_poly_expr(line, ring);
      Pencil pencil = make_pencil(f0);
      std::vector<ConditionReport> reports;
      reports.push_back(check_condition_1(pencil));
      reports.push_back(check_condition_2(pencil));
      if (p_mult >= 2) reports.push_back(check_condition_3(pencil, p_mult));
      reports.push_back(
          check_condition_4(pencil, FieldElement(field, rational_from_string(t_sample_text))));
      Json result = Json::array();
      bool passed = true;
      std::vector<std::string> caveats;
      std::ostringstream text;
      for (const auto& rep : reports) {
        result.push_back(to_json(rep));
        passed = passed && rep.passed;
        caveats.insert(caveats.end(), rep.caveats.begin(), rep.caveats.end());
        text << "condition (" << rep.condition_id << "): " << (rep.passed ? "pass" : "FAIL")
             << "\n";
      }
      Json inputs{{"input", input_path}, {"field", field_name}, {"f0", f0.str()}};
      return out.emit("check-conditions", inputs, result, passed, caveats, text.str());
    }

    if (sing->parsed()) {
      std::string text = expr_text;
      if (text.empty() && !input_path.empty()) {
        std::ifstream in(input_path);
        if (!in) {
          std::cerr << "cannot open " << input_path << "\n";
          return kUsage;
        }
        std::getline(in, text);
      }
      if (text.empty()) {
        std::cerr << "need --expr or --input\n";
        return kUsage;
      }
      FieldPtr field = field_from_name(sing_field);
      std::vector<std::string> vars;
      if (!sing_vars.empty()) {
        std::istringstream vs(sing_vars);
        std::string v;
        while (std::getline(vs, v, ',')) vars.push_back(v);
      } else {
        vars = infer_variables(text);
      }
      if (vars.size() != 3) {
        std::cerr << "plane curves need exactly three variables\n";
        return kUsage;
      }
      RingPtr ring = make_ring(field, vars);
      MultiPoly curve = parse_poly_expr(text, ring);
      SingularLocus locus = singular_points(curve, field);
      std::ostringstream summary;
      summary << locus.records.size() << " solved singular point(s)";
      if (!locus.complete) summary << "; residual factors remain";
      for (const auto& rec : locus.records) {
        summary << "\n  " << rec.point.str() << ": multiplicity " << rec.multiplicity
                << ", Milnor " << rec.milnor;
      }
      std::vector<std::string> caveats;
      for (const auto& r : locus.residual) {
        caveats.push_back("unsolved eliminant factor " + r.str());
      }
      Json inputs{{"curve", curve.str()}, {"field", sing_field}};
      return out.emit("singular-points", inputs, to_json(locus), true, caveats, summary.str());
    }

    if (ab_cmd->parsed()) {
      auto pres = prop1_presentation(gp, gq, gk);
      auto ab = abelianization(pres);
      std::ostringstream text;
      text << "elementary divisors: [";
      for (size_t i = 0; i < ab.divisors.size(); ++i) {
        if (i) text << ", ";
        text << ab.divisors[i].get_str();
      }
      text << "], free rank " << ab.free_rank;
      Json inputs{{"p", gp}, {"q", gq}, {"k", gk}};
      return out.emit("abelianization", inputs, to_json(ab), true, {}, text.str());
    }

    if (cert_cmd->parsed()) {
      auto pres = prop1_presentation(gp, gq, gk);
      auto witness = nonabelian_certificate(pres, max_degree);
      Json inputs{{"p", gp}, {"q", gq}, {"k", gk}, {"max_degree", max_degree}};
      if (witness) {
        std::ostringstream text;
        text << "witness of degree " << witness->degree << ": a -> " << witness->cycle_string(0)
             << ", b -> " << witness->cycle_string(1) << ", c -> " << witness->cycle_string(2);
        return out.emit("nonabelian-cert", inputs, to_json(*witness, pres), true, {},
                        text.str());
      }
      return out.emit("nonabelian-cert", inputs, Json{{"found", false}}, false, {},
                      "no witness up to the degree bound (not a proof of abelianness)");
    }

    if (pair_cmd->parsed()) {
      PairReport rep = verify_zariski_pair(pp, pq, pk, series_sel, seed);
      Json inputs{{"p", pp}, {"q", pq}, {"k", pk}, {"series", series_sel}, {"seed", seed}};
      std::ostringstream text;
      text << (rep.passed ? "PASS" : "FAIL") << ": degrees " << rep.c1.bundle.degree << "/"
           << rep.c2.bundle.degree << ", counts " << rep.c1.verification.singular_count << "/"
           << rep.c2.verification.singular_count;
      return out.emit("pair", inputs, to_json(rep), rep.passed, {}, text.str());
    }
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownVariable& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const FieldSymbolMismatch& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidParameters& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
