#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "funksphere/oracle.hpp"
#include "funksphere/parser.hpp"
#include "funksphere/verify.hpp"

using json = nlohmann::ordered_json;
using namespace funksphere;

namespace {

json scalar_json(const ExactScalar& s) {
  return json{{"coeff", s.coeff().str()},
              {"pi_half", s.pi_half()},
              {"sqrt_arg", s.sqrt_arg().str()},
              {"numeric", format_numeric(s.numeric())}};
}

json result_json(const IntegralResult& r) {
  json out;
  out["exact"] = r.is_exact() ? scalar_json(*r.exact) : json(nullptr);
  out["numeric"] = format_numeric(r.numeric);
  return out;
}

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Mixed: return "mixed";
  }
  return "?";
}

json sphere_poly_json(const SpherePolynomial& f) {
  return json{{"scale", scalar_json(f.scale)},
              {"poly", f.poly.str()},
              {"parity", parity_name(f.parity)},
              {"text", f.str()}};
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string piece =
        comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
    out.push_back(Rational::parse(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

RationalPoint parse_omega(const std::string& s, int dim) {
  auto coords = parse_rational_list(s);
  if (static_cast<int>(coords.size()) != dim)
    throw std::domain_error("--omega must have exactly --dim coordinates");
  return RationalPoint(std::move(coords), true);
}

void emit(const json& doc, int indent) {
  std::cout << doc.dump(indent) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact region integration, Funk transform, and inversion on the sphere"};
  app.require_subcommand(1);

  int precision = 30;
  if (const char* env = std::getenv("FUNKSPHERE_PRECISION")) precision = std::atoi(env);
  int indent = 2;
  app.add_option("--precision", precision, "decimal digits for numeric output (>= 15)");
  app.add_option("--json-indent", indent, "JSON indentation (-1 for compact)");

  int dim = 0;
  std::string poly_text, region = "sphere", omega_text, p_text = "0", radius_text = "1";
  std::string method = "general", suite = "all";
  int dim_max = 4, deg_max = 4;

  auto add_poly_opts = [&](CLI::App* cmd, bool need_region) {
    cmd->add_option("--dim", dim, "ambient dimension m")->required();
    cmd->add_option("--poly", poly_text, "polynomial expression")->required();
    if (need_region) {
      cmd->add_option("--region", region,
                      "sphere | r-sphere | ball | subsphere | subball | cap-upper | cap-lower");
      cmd->add_option("--radius", radius_text, "radius for r-sphere / ball (default 1)");
    }
    cmd->add_option("--p", p_text, "offset p, -1 < p < 1 (default 0)");
    cmd->add_option("--omega", omega_text, "comma-separated rational unit vector");
  };

  CLI::App* c_integrate = app.add_subcommand("integrate", "integrate a polynomial over a region");
  add_poly_opts(c_integrate, true);
  bool approx = false;
  c_integrate->add_flag("--approx", approx,
                        "accept a numeric (decimal) omega; normalized and routed through the "
                        "numeric oracle path only");
  CLI::App* c_parse = app.add_subcommand("parse", "parse and canonicalize a polynomial");
  add_poly_opts(c_parse, false);
  CLI::App* c_funk = app.add_subcommand("funk", "Funk transform");
  add_poly_opts(c_funk, false);
  CLI::App* c_dual = app.add_subcommand("dual", "dual transform");
  add_poly_opts(c_dual, false);
  CLI::App* c_dual_at = app.add_subcommand("dual-at", "dual transform at distance (p = sin r)");
  add_poly_opts(c_dual_at, false);
  CLI::App* c_invert = app.add_subcommand("invert", "invert the Funk transform");
  add_poly_opts(c_invert, false);
  c_invert->add_option("--method", method, "even-m | general | spectral");
  CLI::App* c_verify = app.add_subcommand("verify", "run exact-vs-oracle verification suites");
  c_verify->add_option("--suite", suite, "regions | transforms | inversion | all");
  c_verify->add_option("--dim-max", dim_max, "largest dimension to sweep");
  c_verify->add_option("--deg-max", deg_max, "largest degree to sweep");

  // Let --precision / --json-indent appear after the subcommand name too.
  for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; })) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return 1;
  }

  try {
    PrecisionConfig::set_digits(precision);
    init_numeric_precision();

    if (c_verify->parsed()) {
      VerifySummary s = run_verify_suite(suite, dim_max, deg_max);
      json rows = json::array();
      for (const auto& c : s.cases)
        rows.push_back(json{{"formula", c.formula},
                            {"inputs", c.inputs},
                            {"exact", c.exact},
                            {"oracle", c.oracle},
                            {"abs_err", c.abs_err},
                            {"rel_err", c.rel_err},
                            {"pass", c.pass}});
      json doc{{"suite", suite},
               {"dim_max", dim_max},
               {"deg_max", deg_max},
               {"cases", rows.size()},
               {"all_pass", s.all_pass},
               {"report", rows}};
      emit(doc, indent);
      return s.all_pass ? 0 : 1;
    }

    Polynomial p = parse_polynomial(poly_text, dim);

    if (c_parse->parsed()) {
      emit(json{{"input", poly_text}, {"dim", dim}, {"poly", p.str()}, {"degree", p.degree()}},
           indent);
      return 0;
    }

    if (c_integrate->parsed()) {
      RegionSpec spec;
      Rational pp = Rational::parse(p_text);
      Rational r = Rational::parse(radius_text);
      if (approx) {
        RegionSpec::Kind kind;
        if (region == "sphere")
          kind = RegionSpec::Kind::UnitSphere;
        else if (region == "r-sphere")
          kind = RegionSpec::Kind::RSphere;
        else if (region == "ball")
          kind = RegionSpec::Kind::Ball;
        else if (region == "subsphere")
          kind = RegionSpec::Kind::Subsphere;
        else if (region == "subball")
          kind = RegionSpec::Kind::Subball;
        else if (region == "cap-upper")
          kind = RegionSpec::Kind::CapUpper;
        else if (region == "cap-lower")
          kind = RegionSpec::Kind::CapLower;
        else
          throw std::domain_error("unknown region: " + region);
        std::vector<Numeric> w;
        if (!omega_text.empty()) {
          std::size_t start = 0;
          while (start <= omega_text.size()) {
            std::size_t comma = omega_text.find(',', start);
            std::string piece = comma == std::string::npos
                                    ? omega_text.substr(start)
                                    : omega_text.substr(start, comma - start);
            w.emplace_back(piece.c_str());
            if (comma == std::string::npos) break;
            start = comma + 1;
          }
        } else if (kind != RegionSpec::Kind::UnitSphere && kind != RegionSpec::Kind::RSphere &&
                   kind != RegionSpec::Kind::Ball) {
          throw std::domain_error("--omega is required for this region");
        }
        Numeric res = oracle_region_integral(p, kind, std::move(w), pp, r);
        json doc{{"region", region}, {"dim", dim}, {"poly", p.str()}};
        doc["exact"] = json(nullptr);
        doc["numeric"] = format_numeric(res);
        emit(doc, indent);
        return 0;
      }
      if (region == "sphere") {
        spec = RegionSpec::unit_sphere(dim);
      } else if (region == "r-sphere") {
        spec = RegionSpec::r_sphere(dim, r);
      } else if (region == "ball") {
        spec = RegionSpec::ball(dim, r);
      } else {
        if (omega_text.empty()) throw std::domain_error("--omega is required for this region");
        RationalPoint w = parse_omega(omega_text, dim);
        if (region == "subsphere")
          spec = RegionSpec::subsphere(w, pp);
        else if (region == "subball")
          spec = RegionSpec::subball(w, pp);
        else if (region == "cap-upper")
          spec = RegionSpec::cap(w, pp, CapSide::Upper);
        else if (region == "cap-lower")
          spec = RegionSpec::cap(w, pp, CapSide::Lower);
        else
          throw std::domain_error("unknown region: " + region);
      }
      IntegralResult res = region_integral(p, spec);
      json doc{{"region", spec.kind_name()}, {"dim", dim}, {"poly", p.str()}};
      json rj = result_json(res);
      doc["exact"] = rj["exact"];
      doc["numeric"] = rj["numeric"];
      emit(doc, indent);
      return 0;
    }

    SpherePolynomial f = SpherePolynomial::make(p);
    json doc{{"dim", dim},
             {"input", poly_text},
             {"input_on_sphere", f.str()},
             {"input_parity", parity_name(f.parity)}};

    if (c_funk->parsed() || c_dual->parsed()) {
      SpherePolynomial out = c_funk->parsed() ? funk_transform(f) : dual_transform(f);
      doc["output"] = sphere_poly_json(out);
      if (f.parity == Parity::Odd && !f.is_zero()) doc["note"] = "odd input: kernel";
      emit(doc, indent);
      return 0;
    }
    if (c_dual_at->parsed()) {
      Rational pp = Rational::parse(p_text);
      doc["p"] = pp.str();
      doc["output"] = sphere_poly_json(dual_at_distance(f, pp));
      emit(doc, indent);
      return 0;
    }
    if (c_invert->parsed()) {
      SpherePolynomial out(dim);
      if (method == "even-m")
        out = invert_even_m(f);
      else if (method == "general")
        out = invert_general(f);
      else if (method == "spectral")
        out = spectral_reference_inverter(f);
      else
        throw std::domain_error("unknown inversion method: " + method);
      doc["method"] = method;
      doc["output"] = sphere_poly_json(out);
      emit(doc, indent);
      return 0;
    }
    throw std::domain_error("no subcommand handled");
  } catch (const ParseError& e) {
    emit(json{{"error", e.what()}, {"offset", e.offset}}, indent);
    return 2;
  } catch (const std::exception& e) {
    emit(json{{"error", e.what()}}, indent);
    return 1;
  }
}
