#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "coxhodge/class_group.hpp"
#include "coxhodge/cox_ring.hpp"
#include "coxhodge/errors.hpp"
#include "coxhodge/fan.hpp"
#include "coxhodge/hodge.hpp"
#include "coxhodge/ideal.hpp"
#include "coxhodge/io.hpp"
#include "coxhodge/linalg.hpp"
#include "coxhodge/nl.hpp"
#include "coxhodge/polynomial.hpp"

namespace {

using coxhodge::ClassGroup;
using coxhodge::CoxRing;
using coxhodge::DivisorClass;
using coxhodge::Fan;
using coxhodge::GradedIdeal;
using coxhodge::GradedPolynomial;
using coxhodge::Int;
using coxhodge::RatVec;
namespace io = coxhodge::io;

struct Session {
  std::string format = "json";
  bool trace = false;
  int jobs = 1;
  long m_max = 20;
  std::size_t dim_budget = coxhodge::kDefaultDimBudget;

  io::Json report;
  int exit_code = 0;
};

std::pair<DivisorClass, DivisorClass> parse_pair_literal(const std::string& text,
                                                         const ClassGroup& cl) {
  std::size_t pos = text.find(':');
  if (pos == std::string::npos || text.find(':', pos + 1) != std::string::npos) {
    throw coxhodge::errors::input_error("pair literal must be 'CLASS:CLASS', got '" + text +
                                        "'");
  }
  return {io::parse_class_literal(text.substr(0, pos), cl),
          io::parse_class_literal(text.substr(pos + 1), cl)};
}

// --polys (JSON list) entries first, then each --poly file, in option order.
std::vector<GradedPolynomial> gather_polynomials(const std::string& list_path,
                                                 const std::vector<std::string>& poly_paths,
                                                 const CoxRing& ring) {
  std::vector<GradedPolynomial> polys;
  if (!list_path.empty()) {
    polys = io::load_polynomial_list(list_path, ring.cl(), ring.names());
  }
  for (const std::string& path : poly_paths) {
    polys.push_back(io::load_polynomial_file(path, ring.cl(), ring.names()));
  }
  if (polys.empty()) {
    throw coxhodge::errors::input_error("no polynomials given; use --poly or --polys");
  }
  return polys;
}

int smoothness_exit_code(const coxhodge::SmoothnessReport& rep) {
  switch (rep.verdict) {
    case coxhodge::SmoothnessReport::Verdict::Verified: return 0;
    case coxhodge::SmoothnessReport::Verdict::Refuted: return 2;
    default: return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Session s;
  CLI::App app{"exact certificates for toric hypersurface and intersection geometry"};
  app.require_subcommand(1);
  app.add_option("--format", s.format, "output format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--trace", s.trace, "dump elimination pivots to stderr (forces --jobs 1)");
  app.add_option("--jobs", s.jobs, "worker threads for independent rank computations")
      ->check(CLI::PositiveNumber);
  app.add_option("--m-max", s.m_max, "power bound for emptiness certificates")
      ->check(CLI::PositiveNumber);
  app.add_option("--dim-budget", s.dim_budget,
                 "largest graded piece materialized by emptiness certificates");

  // Callbacks run after all options are parsed; every command applies the
  // global trace/jobs policy first.
  auto apply_global = [&s] {
    if (s.trace) {
      // pivots go to stderr; stdout reports stay byte-identical
      s.jobs = 1;
      coxhodge::linalg::set_trace(&std::cerr);
    }
  };

  // fan check
  auto* fan_cmd = app.add_subcommand("fan", "fan inspection");
  fan_cmd->require_subcommand(1);
  fan_cmd->fallthrough();
  auto* fan_check = fan_cmd->add_subcommand("check", "validate a fan file");
  fan_check->fallthrough();
  std::string fan_check_path;
  fan_check->add_option("--fan", fan_check_path, "fan JSON file")->required();
  fan_check->callback([&] {
    apply_global();
    s.report = io::fan_report_json(io::load_fan(fan_check_path));
  });

  // classgroup
  auto* cg_cmd = app.add_subcommand("classgroup", "class group and variable degrees");
  cg_cmd->fallthrough();
  std::string cg_fan;
  cg_cmd->add_option("--fan", cg_fan)->required();
  cg_cmd->callback([&] {
    apply_global();
    Fan fan = io::load_fan(cg_fan);
    s.report = io::classgroup_report_json(ClassGroup::from_fan(fan));
  });

  // basis
  auto* basis_cmd = app.add_subcommand("basis", "monomial basis of a graded piece");
  basis_cmd->fallthrough();
  std::string basis_fan, basis_degree;
  basis_cmd->add_option("--fan", basis_fan)->required();
  basis_cmd->add_option("--degree", basis_degree, "class literal f1,..;t1,..")->required();
  basis_cmd->callback([&] {
    apply_global();
    Fan fan = io::load_fan(basis_fan);
    CoxRing ring(fan);
    DivisorClass alpha = io::parse_class_literal(basis_degree, ring.cl());
    s.report = io::basis_report_json(alpha, ring.monomial_basis(alpha));
  });

  // oda
  auto* oda_cmd = app.add_subcommand("oda", "multiplication surjectivity spot checks");
  oda_cmd->fallthrough();
  std::string oda_fan;
  std::vector<std::string> oda_pairs;
  oda_cmd->add_option("--fan", oda_fan)->required();
  oda_cmd->add_option("--pair", oda_pairs, "degree pair 'A:B'")->required();
  oda_cmd->callback([&] {
    apply_global();
    Fan fan = io::load_fan(oda_fan);
    CoxRing ring(fan);
    io::Json checks = io::Json::array();
    bool all = true;
    for (const std::string& literal : oda_pairs) {
      auto [a1, a2] = parse_pair_literal(literal, ring.cl());
      coxhodge::OdaSpotCheck check;
      check.a1 = a1;
      check.a2 = a2;
      check.a1_ample = nef_ample_certificate(fan, ring.cl(), a1).ample;
      check.a2_nef = nef_ample_certificate(fan, ring.cl(), a2).nef;
      check.cert = ring.multiplication_surjective(a1, a2);
      all = all && check.cert.surjective;
      checks.push_back(io::oda_check_json(check));
    }
    s.report["pairs"] = std::move(checks);
    s.report["all_surjective"] = all;
    s.exit_code = all ? 0 : 2;
  });

  // quasismooth
  auto* qs_cmd = app.add_subcommand("quasismooth", "quasi-smoothness certificate");
  qs_cmd->fallthrough();
  std::string qs_fan, qs_list, qs_witness;
  std::vector<std::string> qs_polys;
  qs_cmd->add_option("--fan", qs_fan)->required();
  qs_cmd->add_option("--poly", qs_polys, "polynomial text file (repeatable)");
  qs_cmd->add_option("--polys", qs_list, "JSON list of polynomial strings");
  qs_cmd->add_option("--witness", qs_witness, "candidate singular point r1,r2,...");
  qs_cmd->callback([&] {
    apply_global();
    Fan fan = io::load_fan(qs_fan);
    CoxRing ring(fan);
    std::vector<GradedPolynomial> polys = gather_polynomials(qs_list, qs_polys, ring);
    std::optional<RatVec> witness;
    if (!qs_witness.empty()) witness = io::parse_point_literal(qs_witness, ring.nvars());
    coxhodge::SmoothnessReport rep =
        quasi_smooth_certificate(ring, fan.dim, polys, s.m_max, witness, s.dim_budget);
    s.report = io::smoothness_json(rep);
    s.exit_code = smoothness_exit_code(rep);
  });

  // nondegenerate
  auto* nd_cmd = app.add_subcommand("nondegenerate", "nondegeneracy certificate");
  nd_cmd->fallthrough();
  std::string nd_fan, nd_poly, nd_witness;
  nd_cmd->add_option("--fan", nd_fan)->required();
  nd_cmd->add_option("--poly", nd_poly, "polynomial text file")->required();
  nd_cmd->add_option("--witness", nd_witness, "candidate common zero r1,r2,...");
  nd_cmd->callback([&] {
    apply_global();
    Fan fan = io::load_fan(nd_fan);
    CoxRing ring(fan);
    GradedPolynomial f = io::load_polynomial_file(nd_poly, ring.cl(), ring.names());
    std::optional<RatVec> witness;
    if (!nd_witness.empty()) witness = io::parse_point_literal(nd_witness, ring.nvars());
    coxhodge::SmoothnessReport rep =
        nondegeneracy_certificate(fan, ring, f, s.m_max, witness, s.dim_budget);
    s.report = io::smoothness_json(rep);
    s.exit_code = smoothness_exit_code(rep);
  });

  // hodge hypersurface / hodge intersection
  auto* hodge_cmd = app.add_subcommand("hodge", "primitive Hodge numbers");
  hodge_cmd->require_subcommand(1);
  hodge_cmd->fallthrough();
  auto* hh_cmd = hodge_cmd->add_subcommand("hypersurface", "Jacobian-ring Hodge number");
  hh_cmd->fallthrough();
  std::string hh_fan, hh_poly;
  long hh_index = 0;
  hh_cmd->add_option("--fan", hh_fan)->required();
  hh_cmd->add_option("--poly", hh_poly)->required();
  hh_cmd->add_option("--index", hh_index, "Hodge index a")->required();
  hh_cmd->callback([&] {
    apply_global();
    Fan fan = io::load_fan(hh_fan);
    CoxRing ring(fan);
    GradedPolynomial f = io::load_polynomial_file(hh_poly, ring.cl(), ring.names());
    s.report = io::hodge_json(
        hypersurface_prim_hodge(fan, ring, f, hh_index, s.m_max, s.dim_budget));
  });
  auto* hi_cmd = hodge_cmd->add_subcommand("intersection", "Cayley-side Hodge number");
  hi_cmd->fallthrough();
  std::string hi_fan, hi_list;
  std::vector<std::string> hi_polys;
  long hi_p = 0;
  hi_cmd->add_option("--fan", hi_fan)->required();
  hi_cmd->add_option("--poly", hi_polys, "polynomial text file (repeatable)");
  hi_cmd->add_option("--polys", hi_list, "JSON list of polynomial strings");
  hi_cmd->add_option("--p", hi_p, "cohomological index p")->required();
  hi_cmd->callback([&] {
    apply_global();
    Fan fan = io::load_fan(hi_fan);
    CoxRing ring(fan);
    std::vector<GradedPolynomial> polys = gather_polynomials(hi_list, hi_polys, ring);
    s.report = io::hodge_json(
        intersection_prim_hodge(fan, ring, polys, hi_p, s.m_max, s.dim_budget));
  });

  // gorenstein
  auto* gor_cmd = app.add_subcommand("gorenstein", "Cox-Gorenstein verification");
  gor_cmd->fallthrough();
  std::string gor_fan, gor_ideal, gor_socle;
  gor_cmd->add_option("--fan", gor_fan)->required();
  gor_cmd->add_option("--ideal", gor_ideal, "JSON list of polynomial strings")->required();
  gor_cmd->add_option("--socle", gor_socle, "socle degree class literal")->required();
  gor_cmd->callback([&] {
    apply_global();
    Fan fan = io::load_fan(gor_fan);
    CoxRing ring(fan);
    GradedIdeal ideal(ring, io::load_polynomial_list(gor_ideal, ring.cl(), ring.names()));
    DivisorClass n = io::parse_class_literal(gor_socle, ring.cl());
    coxhodge::GorensteinReport rep =
        verify_cox_gorenstein(ideal, n, s.m_max, s.jobs, s.dim_budget);
    s.report = io::gorenstein_json(rep);
    switch (rep.verdict) {
      case coxhodge::GorensteinReport::Verdict::CoxGorenstein: s.exit_code = 0; break;
      case coxhodge::GorensteinReport::Verdict::ConditionsFailed: s.exit_code = 2; break;
      default: s.exit_code = 3; break;
    }
  });

  // nl
  auto* nl_cmd = app.add_subcommand("nl", "asymptotic hypothesis report");
  nl_cmd->fallthrough();
  std::string nl_fan, nl_beta, nl_eta, nl_deg_v, nl_delta, nl_r, nl_d_param;
  long nl_k = 0;
  std::vector<std::string> nl_pairs;
  nl_cmd->add_option("--fan", nl_fan)->required();
  nl_cmd->add_option("--beta", nl_beta, "class literal")->required();
  nl_cmd->add_option("--eta", nl_eta, "class literal")->required();
  nl_cmd->add_option("--k", nl_k)->required()->check(CLI::NonNegativeNumber);
  nl_cmd->add_option("--oda-pairs", nl_pairs, "degree pair 'A:B' (repeatable)");
  auto* opt_deg_v = nl_cmd->add_option("--deg-v", nl_deg_v, "degree of the subvariety");
  auto* opt_delta = nl_cmd->add_option("--delta", nl_delta, "rational p/q");
  auto* opt_r = nl_cmd->add_option("--r", nl_r, "regularity parameter");
  nl_cmd->add_option("--d-param", nl_d_param, "degree bound (default: fan dimension)");
  opt_deg_v->needs(opt_delta)->needs(opt_r);
  opt_delta->needs(opt_deg_v);
  opt_r->needs(opt_deg_v);
  nl_cmd->callback([&] {
    apply_global();
    Fan fan = io::load_fan(nl_fan);
    CoxRing ring(fan);
    const ClassGroup& cl = ring.cl();
    DivisorClass beta = io::parse_class_literal(nl_beta, cl);
    DivisorClass eta = io::parse_class_literal(nl_eta, cl);
    std::vector<std::pair<DivisorClass, DivisorClass>> pairs;
    for (const std::string& literal : nl_pairs) pairs.push_back(parse_pair_literal(literal, cl));
    coxhodge::NLHypothesisReport rep = nl_hypothesis_report(fan, ring, beta, eta, nl_k, pairs);
    s.report = io::nl_json(rep);
    if (!nl_deg_v.empty()) {
      if (!rep.m_beta_value) {
        throw coxhodge::errors::input_error(
            "socle bound comparison needs m_beta, which is unavailable");
      }
      Int m_beta_value = *rep.m_beta_value;
      Int d_param = nl_d_param.empty() ? Int(static_cast<long>(fan.dim))
                                       : io::parse_integer_literal(nl_d_param);
      coxhodge::Step3Report step3 = step3_socle_bounds(
          Int(nl_k), io::parse_integer_literal(nl_deg_v), m_beta_value,
          io::parse_rat_literal(nl_delta), io::parse_integer_literal(nl_r), d_param, rep.eta,
          rep.beta0, cl);
      s.report["step3"] = io::step3_json(step3);
    }
  });

  // step1
  auto* s1_cmd = app.add_subcommand("step1", "self-intersection series coefficient");
  s1_cmd->fallthrough();
  std::string s1_a, s1_b;
  long s1_k = 0;
  s1_cmd->add_option("--a", s1_a, "CSV of integers (may be empty)");
  s1_cmd->add_option("--b", s1_b, "integer")->required();
  s1_cmd->add_option("--k", s1_k)->required()->check(CLI::NonNegativeNumber);
  s1_cmd->callback([&] {
    apply_global();
    Int value = coxhodge::step1_coefficient(io::parse_int_list_literal(s1_a),
                                            io::parse_integer_literal(s1_b), s1_k);
    s.report["k"] = s1_k;
    s.report["coefficient"] = io::int_json(value);
  });

  // bounds
  auto* b_cmd = app.add_subcommand("bounds", "delta threshold and codimension bound");
  b_cmd->fallthrough();
  std::string b_r, b_k, b_m, b_d;
  b_cmd->add_option("--r", b_r)->required();
  b_cmd->add_option("--k", b_k)->required();
  auto* opt_m = b_cmd->add_option("--m-beta", b_m, "threshold value for the codimension bound");
  auto* opt_d = b_cmd->add_option("--d-param", b_d, "degree for the codimension bound");
  opt_m->needs(opt_d);
  opt_d->needs(opt_m);
  b_cmd->callback([&] {
    apply_global();
    Int r = io::parse_integer_literal(b_r);
    Int k = io::parse_integer_literal(b_k);
    s.report["delta_upper"] = io::rat_json(coxhodge::delta_upper(r, k));
    s.report["range_ok"] = coxhodge::delta_upper_range_ok(r, k);
    if (!b_m.empty()) {
      s.report["codim_bound"] = io::rat_json(coxhodge::codim_bound(
          io::parse_integer_literal(b_d), io::parse_integer_literal(b_m), k));
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::cout << app.help();
      return 0;
    }
    std::cout << io::render_report(io::error_json("InputError", e.what()), s.format);
    return 1;
  } catch (const coxhodge::Error& e) {
    std::cout << io::render_report(io::error_json(e.kind(), e.detail()), s.format);
    return 1;
  } catch (const std::exception& e) {
    std::cout << io::render_report(io::error_json("InternalError", e.what()), s.format);
    return 1;
  }

  std::cout << io::render_report(s.report, s.format);
  return s.exit_code;
}
