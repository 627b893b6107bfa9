// jpotts -- batch evaluator and verification harness for the triple integral
// J(t), its Green function companion, the 5F4 and lattice-sum routes, the
// eta-product special values and the associated Mahler measures.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jpotts/errors.hpp"
#include "jpotts/greens.hpp"
#include "jpotts/hyper.hpp"
#include "jpotts/jformula.hpp"
#include "jpotts/mahler.hpp"
#include "jpotts/modular.hpp"
#include "jpotts/quadrature.hpp"
#include "jpotts/verify.hpp"

namespace {

using jpotts::CheckRecord;
using jpotts::EvalResult;
using jpotts::PrecisionConfig;
using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

struct ValueRecord {
  std::string name;
  std::string inputs;
  std::string value;
  std::string imag;      // empty when real
  std::string err_bound;
  std::string method;
  long terms = 0;
  long nodes = 0;
};

struct Output {
  std::string format = "plain";
  std::string path;  // empty -> stdout
  int digits = 30;
  long lattice_radius = 2000;

  std::vector<ValueRecord> results;
  const jpotts::Report* report = nullptr;
  double total_ms = 0.0;
};

ValueRecord record_from(const std::string& name, const std::string& inputs, const EvalResult& r,
                        int digits) {
  ValueRecord rec;
  rec.name = name;
  rec.inputs = inputs;
  rec.value = jpotts::format_real(r.value.re, digits);
  if (!r.value.im.is_zero()) rec.imag = jpotts::format_real(r.value.im, digits);
  rec.err_bound = jpotts::format_real(r.err_bound, 6);
  rec.method = jpotts::method_name(r.method);
  if (r.singular_endpoint) rec.method += " (singular-endpoint)";
  rec.terms = r.work.terms;
  rec.nodes = r.work.nodes;
  return rec;
}

std::string iso_timestamp() {
  char buf[32];
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return std::string(buf);
}

json meta_json(const Output& out) {
  return json{{"tool", "jpotts"},
              {"version", kVersion},
              {"schema", 1},
              {"digits", out.digits},
              {"lattice_radius", out.lattice_radius}};
}

json check_json(const CheckRecord& c) {
  return json{{"id", c.id},           {"criterion", c.criterion}, {"name", c.name},
              {"inputs", c.inputs},   {"value", c.value},         {"reference", c.reference},
              {"residual", c.residual}, {"err_bound", c.err_bound}, {"tolerance", c.tolerance},
              {"passed", c.passed},   {"terms", c.terms},         {"nodes", c.nodes}};
}

json result_json(const ValueRecord& r) {
  json j{{"name", r.name},     {"inputs", r.inputs}, {"value", r.value},
         {"err_bound", r.err_bound}, {"method", r.method}, {"terms", r.terms},
         {"nodes", r.nodes}};
  if (!r.imag.empty()) j["value_imag"] = r.imag;
  return j;
}

void write_output(const Output& out) {
  std::ostringstream body;
  if (out.format == "json") {
    json doc;
    doc["meta"] = meta_json(out);
    if (out.report) {
      doc["meta"]["seed"] = out.report->seed;
      json checks = json::array();
      json times = json::array();
      for (const auto& c : out.report->checks) {
        checks.push_back(check_json(c));
        times.push_back(c.wall_ms);
      }
      doc["checks"] = checks;
      doc["all_passed"] = out.report->all_passed();
      doc["generated"] = json{{"timestamp", iso_timestamp()},
                              {"total_ms", out.total_ms},
                              {"check_ms", times}};
    } else {
      json rs = json::array();
      for (const auto& r : out.results) rs.push_back(result_json(r));
      doc["results"] = rs;
      doc["generated"] = json{{"timestamp", iso_timestamp()}, {"total_ms", out.total_ms}};
    }
    body << doc.dump(2) << "\n";
  } else if (out.format == "csv") {
    if (out.report) {
      body << "id,criterion,name,inputs,value,reference,residual,err_bound,tolerance,passed,"
              "terms,nodes\n";
      for (const auto& c : out.report->checks) {
        body << c.id << "," << c.criterion << ",\"" << c.name << "\",\"" << c.inputs << "\","
             << c.value << "," << c.reference << "," << c.residual << "," << c.err_bound << ","
             << c.tolerance << "," << (c.passed ? "true" : "false") << "," << c.terms << ","
             << c.nodes << "\n";
      }
    } else {
      body << "name,inputs,value,value_imag,err_bound,method,terms,nodes\n";
      for (const auto& r : out.results) {
        body << "\"" << r.name << "\",\"" << r.inputs << "\"," << r.value << "," << r.imag << ","
             << r.err_bound << "," << r.method << "," << r.terms << "," << r.nodes << "\n";
      }
    }
  } else {
    if (out.report) {
      for (const auto& c : out.report->checks) {
        body << (c.passed ? "pass " : "FAIL ") << c.id << "  " << c.name;
        if (!c.inputs.empty()) body << "  [" << c.inputs << "]";
        body << "\n      value=" << c.value;
        if (!c.reference.empty()) body << "  reference=" << c.reference;
        body << "  residual=" << c.residual << "  tol=" << c.tolerance << "\n";
      }
      body << (out.report->all_passed() ? "VERIFY: all checks passed\n"
                                        : "VERIFY: FAILURES present\n");
    } else {
      for (const auto& r : out.results) {
        body << r.name;
        if (!r.inputs.empty()) body << " [" << r.inputs << "]";
        body << "\n  value     = " << r.value << (r.imag.empty() ? "" : (" + i*" + r.imag))
             << "\n  err_bound = " << r.err_bound << "\n  method    = " << r.method
             << "  terms=" << r.terms << " nodes=" << r.nodes << "\n";
      }
    }
  }
  if (out.path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(out.path, std::ios::binary);
    f << body.str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evaluators and cross-checks for the cubic-lattice integral J(t)"};
  app.require_subcommand(1);

  int digits = 30;
  std::string format = "plain";
  std::string out_path;
  int grid_order = 0;
  int grid_panels = 0;
  long cutoff_radius = 2000;

  app.add_option("--digits", digits, "target significant digits (15..100)")
      ->envname("JPOTTS_DIGITS")
      ->check(CLI::Range(15, 100));
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--out", out_path, "write the report to this path");
  app.add_option("--grid-order", grid_order, "Gauss-Legendre order per panel");
  app.add_option("--panels", grid_panels, "panels per axis");
  app.add_option("--cutoff-radius", cutoff_radius, "lattice sum cutoff radius");

  // j-direct
  auto* cmd_jd = app.add_subcommand("j-direct", "J(t) by 3d cubature");
  cmd_jd->fallthrough();
  double jd_t = 3.0;
  std::string jd_rule = "auto";
  cmd_jd->add_option("--t", jd_t, "argument t (> 2; = 2 with the tanh-sinh rule)")->required();
  cmd_jd->add_option("--rule", jd_rule, "quadrature rule")
      ->check(CLI::IsMember({"auto", "gauss-legendre", "tanh-sinh"}));

  // j-hyper
  auto* cmd_jh = app.add_subcommand("j-hyper", "J via the 5F4 representation");
  cmd_jh->fallthrough();
  double jh_alpha = 0.1, jh_alpha_im = 0.0;
  cmd_jh->add_option("--alpha", jh_alpha, "parameter alpha")->required();
  cmd_jh->add_option("--alpha-im", jh_alpha_im, "imaginary part of alpha");

  // j-lattice
  auto* cmd_jl = app.add_subcommand("j-lattice", "J via the two-dimensional lattice expansion");
  cmd_jl->fallthrough();
  double jl_v = 1.0;
  cmd_jl->add_option("--v", jl_v, "modular parameter v >= 1/2")->required();

  // g
  auto* cmd_g = app.add_subcommand("g", "Green function G(t)");
  cmd_g->fallthrough();
  double g_t = 3.0;
  std::string g_route = "both";
  cmd_g->add_option("--t", g_t, "argument t > 2")->required();
  cmd_g->add_option("--route", g_route, "closed form, direct cubature, or both")
      ->check(CLI::IsMember({"closed", "direct", "both"}));

  // mahler
  auto* cmd_m = app.add_subcommand("mahler", "Mahler measures of the built-in families");
  cmd_m->fallthrough();
  std::string m_family = "p5";
  double m_alpha = 0.1, m_k = 5.0, m_c = 1.0, m_scale = 1.0;
  bool m_identity = false;
  cmd_m->add_option("--family", m_family, "family")
      ->check(CLI::IsMember({"const", "p1", "p2", "p3", "p4", "p5"}));
  cmd_m->add_option("--alpha", m_alpha, "alpha for p1..p4");
  cmd_m->add_option("--k", m_k, "k for p5");
  cmd_m->add_option("--c", m_c, "constant for family const");
  cmd_m->add_option("--scale", m_scale, "overall scale factor");
  cmd_m->add_flag("--identity", m_identity, "four-term identity residual at --alpha");

  // special
  auto* cmd_s = app.add_subcommand("special", "closed-form special values J(2), J(5/2)");
  cmd_s->fallthrough();
  std::string s_t = "2";
  cmd_s->add_option("--t", s_t, "2 or 5/2")->check(CLI::IsMember({"2", "2.5", "5/2"}));

  // verify
  auto* cmd_v = app.add_subcommand("verify", "run the full verification suite");
  cmd_v->fallthrough();
  bool v_quiet = false;
  cmd_v->add_flag("--quiet", v_quiet, "suppress progress lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Output out;
  out.format = format;
  out.path = out_path;
  out.digits = digits;
  out.lattice_radius = cutoff_radius;

  PrecisionConfig prec;
  prec.digits = digits;

  auto grid_for = [&](double t) {
    jpotts::CubatureGrid grid = jpotts::default_grid_for(t);
    if (jd_rule == "gauss-legendre") grid.rule = jpotts::QuadRule::gauss_legendre;
    if (jd_rule == "tanh-sinh") grid.rule = jpotts::QuadRule::tanh_sinh;
    if (grid_order > 0) grid.order = grid_order;
    if (grid_panels > 0) grid.panels = grid_panels;
    return grid;
  };

  const auto t0 = std::chrono::steady_clock::now();
  int exit_code = 0;
  jpotts::Report report;
  try {
    if (*cmd_jd) {
      auto r = jpotts::j_direct(jd_t, grid_for(jd_t));
      out.results.push_back(record_from("j-direct", "t=" + jpotts::format_double(jd_t), r, digits));
    } else if (*cmd_jh) {
      jpotts::AlphaPoint pt =
          (jh_alpha_im == 0.0)
              ? jpotts::AlphaPoint::make(jpotts::Real(jh_alpha))
              : jpotts::AlphaPoint::make(jpotts::Cplx(jpotts::Real(jh_alpha), jpotts::Real(jh_alpha_im)));
      auto r = jpotts::j_hyper(pt, prec);
      out.results.push_back(
          record_from("j-hyper", "alpha=" + jpotts::format_double(jh_alpha) +
                                     (jh_alpha_im != 0.0
                                          ? "+i*" + jpotts::format_double(jh_alpha_im)
                                          : ""),
                      r, digits));
    } else if (*cmd_jl) {
      auto r = jpotts::j_lattice({jl_v, cutoff_radius, true});
      out.results.push_back(record_from(
          "j-lattice",
          "v=" + jpotts::format_double(jl_v) + " R=" + std::to_string(cutoff_radius), r, digits));
    } else if (*cmd_g) {
      if (g_route == "closed" || g_route == "both") {
        auto r = jpotts::g_closed(jpotts::Real(g_t), prec);
        out.results.push_back(record_from("g-closed", "t=" + jpotts::format_double(g_t), r, digits));
      }
      if (g_route == "direct" || g_route == "both") {
        auto r = jpotts::g_direct(g_t, grid_for(g_t));
        out.results.push_back(record_from("g-direct", "t=" + jpotts::format_double(g_t), r, digits));
      }
    } else if (*cmd_m) {
      if (m_identity) {
        auto grid = jpotts::default_mahler_grid(jpotts::MahlerFamily::p4);
        if (grid_order > 0) grid.order = grid_order;
        if (grid_panels > 0) grid.panels = grid_panels;
        double resid = jpotts::mahler_identity_residual(m_alpha, grid);
        ValueRecord rec;
        rec.name = "mahler-identity-residual";
        rec.inputs = "alpha=" + jpotts::format_double(m_alpha);
        rec.value = jpotts::format_double(resid);
        rec.err_bound = "";
        rec.method = "gauss-legendre";
        out.results.push_back(rec);
      } else {
        jpotts::LaurentPoly poly;
        if (m_family == "const") poly = jpotts::LaurentPoly::constant(m_c);
        else if (m_family == "p1") poly = jpotts::LaurentPoly::p1(m_alpha);
        else if (m_family == "p2") poly = jpotts::LaurentPoly::p2(m_alpha);
        else if (m_family == "p3") poly = jpotts::LaurentPoly::p3(m_alpha);
        else if (m_family == "p4") poly = jpotts::LaurentPoly::p4(m_alpha);
        else poly = jpotts::LaurentPoly::p5(m_k);
        poly.scale = m_scale;
        auto grid = jpotts::default_mahler_grid(poly.family);
        if (grid_order > 0) grid.order = grid_order;
        if (grid_panels > 0) grid.panels = grid_panels;
        auto r = jpotts::mahler_measure(poly, grid);
        std::string inputs = "family=" + m_family;
        if (m_family == "const") inputs += " c=" + jpotts::format_double(m_c);
        else if (m_family == "p5") inputs += " k=" + jpotts::format_double(m_k);
        else inputs += " alpha=" + jpotts::format_double(m_alpha);
        out.results.push_back(record_from("mahler-measure", inputs, r, digits));
      }
    } else if (*cmd_s) {
      auto which = (s_t == "2") ? jpotts::SpecialT::two : jpotts::SpecialT::five_halves;
      auto r = jpotts::j_special(which, prec);
      out.results.push_back(record_from("special", "t=" + s_t, r, digits));
    } else if (*cmd_v) {
      jpotts::VerifyOptions vopts;
      vopts.digits = digits;
      vopts.lattice_radius = cutoff_radius;
      report = jpotts::run_verification(vopts, v_quiet ? nullptr : &std::cerr);
      out.report = &report;
      exit_code = report.all_passed() ? 0 : 1;
    }
  } catch (const jpotts::NumericError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 1;
  }

  out.total_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  write_output(out);
  return exit_code;
}
