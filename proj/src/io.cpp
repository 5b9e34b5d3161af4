#include "coxhodge/io.hpp"

#include <fstream>
#include <sstream>

#include "coxhodge/errors.hpp"

namespace coxhodge::io {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

Int parse_int_literal(const std::string& raw) {
  std::string text = trim(raw);
  std::size_t i = text.size() && (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw errors::input_error("invalid integer literal: '" + raw + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw errors::input_error("invalid integer literal: '" + raw + "'");
    }
  }
  return Int(text);
}

long long json_integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) {
    throw errors::parse_error(what + " must be an integer");
  }
  return j.get<long long>();
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw errors::input_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json load_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw errors::parse_error(path + ": " + e.what());
  }
}

Fan load_fan(const std::string& path) {
  const Json j = load_json_file(path);
  if (!j.is_object() || !j.contains("dim") || !j.contains("rays") || !j.contains("max_cones")) {
    throw errors::parse_error(path + ": expected an object with dim, rays, max_cones");
  }
  long long dim = json_integer(j["dim"], path + ": dim");
  if (dim < 1) throw errors::input_error(path + ": dim must be positive");

  if (!j["rays"].is_array()) throw errors::parse_error(path + ": rays must be an array");
  std::vector<IntVec> rays;
  for (const Json& row : j["rays"]) {
    if (!row.is_array()) throw errors::parse_error(path + ": each ray must be an array");
    IntVec ray;
    for (const Json& c : row) {
      // 64-bit long on this platform; mpz_class has no long long constructor
      ray.push_back(Int(static_cast<long>(json_integer(c, path + ": ray coordinate"))));
    }
    rays.push_back(std::move(ray));
  }

  if (!j["max_cones"].is_array()) {
    throw errors::parse_error(path + ": max_cones must be an array");
  }
  std::vector<std::vector<long long>> cones;
  for (const Json& row : j["max_cones"]) {
    if (!row.is_array()) throw errors::parse_error(path + ": each cone must be an array");
    std::vector<long long> cone;
    for (const Json& c : row) cone.push_back(json_integer(c, path + ": cone index"));
    cones.push_back(std::move(cone));
  }
  return validate_fan(rays, cones, static_cast<std::size_t>(dim));
}

GradedPolynomial load_polynomial_file(const std::string& path, const ClassGroup& cl,
                                      const VarNames& names) {
  return parse_polynomial(read_text_file(path), cl, names);
}

std::vector<GradedPolynomial> load_polynomial_list(const std::string& path,
                                                   const ClassGroup& cl,
                                                   const VarNames& names) {
  const Json j = load_json_file(path);
  if (!j.is_array()) throw errors::parse_error(path + ": expected an array of strings");
  std::vector<GradedPolynomial> polys;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) {
      throw errors::parse_error(path + "[" + std::to_string(i) + "]: expected a string");
    }
    try {
      polys.push_back(parse_polynomial(j[i].get<std::string>(), cl, names));
    } catch (const Error& e) {
      throw Error(e.kind(), path + "[" + std::to_string(i) + "]: " + e.detail());
    }
  }
  return polys;
}

DivisorClass parse_class_literal(const std::string& text, const ClassGroup& cl) {
  std::vector<std::string> parts = split(text, ';');
  if (parts.size() > 2) {
    throw errors::input_error("class literal has more than one ';': '" + text + "'");
  }
  DivisorClass c;
  if (!trim(parts[0]).empty()) {
    for (const std::string& piece : split(parts[0], ',')) {
      c.free.push_back(parse_int_literal(piece));
    }
  }
  if (parts.size() == 2 && !trim(parts[1]).empty()) {
    for (const std::string& piece : split(parts[1], ',')) {
      c.torsion.push_back(parse_int_literal(piece));
    }
  }
  cl.check_shape(c, "class literal '" + text + "'");
  return cl.reduce(c);
}

Rat parse_rat_literal(const std::string& text) {
  std::vector<std::string> parts = split(text, '/');
  if (parts.size() > 2) throw errors::input_error("invalid rational literal: '" + text + "'");
  Int num = parse_int_literal(parts[0]);
  Int den = parts.size() == 2 ? parse_int_literal(parts[1]) : Int(1);
  if (den == 0) throw errors::input_error("zero denominator in '" + text + "'");
  return make_rat(num, den);
}

Int parse_integer_literal(const std::string& text) { return parse_int_literal(text); }

std::vector<Int> parse_int_list_literal(const std::string& text) {
  std::vector<Int> values;
  if (trim(text).empty()) return values;
  for (const std::string& piece : split(text, ',')) {
    values.push_back(parse_int_literal(piece));
  }
  return values;
}

RatVec parse_point_literal(const std::string& text, std::size_t expected) {
  RatVec point;
  if (!trim(text).empty()) {
    for (const std::string& piece : split(text, ',')) {
      point.push_back(parse_rat_literal(piece));
    }
  }
  if (point.size() != expected) {
    throw errors::length_mismatch("point literal", expected, point.size());
  }
  return point;
}

Json int_json(const Int& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json rat_json(const Rat& v) { return Json(rat_to_string(v)); }

Json intvec_json(const IntVec& v) {
  Json arr = Json::array();
  for (const Int& x : v) arr.push_back(int_json(x));
  return arr;
}

Json ratvec_json(const RatVec& v) {
  Json arr = Json::array();
  for (const Rat& x : v) arr.push_back(rat_json(x));
  return arr;
}

Json class_json(const DivisorClass& c) {
  Json j;
  j["free"] = intvec_json(c.free);
  j["torsion"] = intvec_json(c.torsion);
  return j;
}

Json fan_report_json(const Fan& fan) {
  Json j;
  j["valid"] = true;
  j["dim"] = fan.dim;
  j["ray_count"] = fan.rays.size();
  j["max_cone_count"] = fan.max_cones.size();
  Json rays = Json::array();
  for (const IntVec& r : fan.rays) rays.push_back(intvec_json(r));
  j["rays"] = std::move(rays);
  Json cones = Json::array();
  for (const auto& c : fan.max_cones) {
    Json cone = Json::array();
    for (std::size_t idx : c) cone.push_back(idx);
    cones.push_back(std::move(cone));
  }
  j["max_cones"] = std::move(cones);
  Json poincare = Json::array();
  for (const Int& c : poincare_polynomial(fan)) poincare.push_back(int_json(c));
  j["poincare"] = std::move(poincare);
  return j;
}

Json classgroup_report_json(const ClassGroup& cl) {
  Json j;
  j["free_rank"] = cl.free_rank();
  j["torsion_orders"] = intvec_json(cl.torsion_orders());
  Json degrees = Json::array();
  for (std::size_t i = 0; i < cl.nvars(); ++i) degrees.push_back(class_json(cl.variable_degree(i)));
  j["degrees"] = std::move(degrees);
  j["anticanonical"] = class_json(cl.anticanonical());
  return j;
}

Json basis_report_json(const DivisorClass& alpha, const std::vector<IntVec>& monomials) {
  Json j;
  j["degree"] = class_json(alpha);
  j["dimension"] = monomials.size();
  Json arr = Json::array();
  for (const IntVec& m : monomials) arr.push_back(intvec_json(m));
  j["monomials"] = std::move(arr);
  return j;
}

Json multiplication_json(const MultiplicationCertificate& cert) {
  Json j;
  j["surjective"] = cert.surjective;
  j["rank"] = cert.rank;
  j["target_dim"] = cert.target_dim;
  j["dim_left"] = cert.dim_left;
  j["dim_right"] = cert.dim_right;
  j["cokernel_dim"] = cert.cokernel_dim;
  return j;
}

Json emptiness_json(const EmptinessReport& rep) {
  Json j;
  j["verified"] = rep.verified;
  j["m_max"] = rep.m_max;
  j["dim_budget"] = rep.dim_budget;
  Json entries = Json::array();
  for (const EmptinessEntry& e : rep.entries) {
    Json entry;
    entry["generator"] = intvec_json(e.gen);
    if (e.power) entry["power"] = *e.power;
    entry["max_power_tested"] = e.m_reached;
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  return j;
}

namespace {

std::string smoothness_verdict_name(SmoothnessReport::Verdict v) {
  switch (v) {
    case SmoothnessReport::Verdict::Verified: return "Verified";
    case SmoothnessReport::Verdict::Refuted: return "Refuted";
    default: return "Inconclusive";
  }
}

}  // namespace

Json smoothness_json(const SmoothnessReport& rep) {
  Json j;
  j["verdict"] = smoothness_verdict_name(rep.verdict);
  if (rep.witness) j["witness"] = ratvec_json(*rep.witness);
  if (rep.witness_reason) j["witness_rejected"] = *rep.witness_reason;
  if (rep.emptiness.m_max > 0) j["emptiness"] = emptiness_json(rep.emptiness);
  j["implies_quasi_smooth"] = rep.implies_quasi_smooth;
  j["warnings"] = rep.warnings;
  return j;
}

Json hodge_json(const HodgeReport& rep) {
  Json j;
  j["ambient_dim"] = rep.ambient_dim;
  j["codim"] = rep.codim;
  j["index_pair"] = Json::array({rep.index_a, rep.index_b});
  j["target_degree"] = class_json(rep.target_degree);
  j["dimension"] = rep.dimension;
  Json certs;
  certs["quasi_smooth"] = smoothness_json(rep.quasi_smooth);
  if (rep.cayley_side) certs["cayley_side_emptiness"] = emptiness_json(*rep.cayley_side);
  j["certificates"] = std::move(certs);
  j["degree_ample"] = rep.degree_ample;
  j["warnings"] = rep.warnings;
  return j;
}

Json gorenstein_json(const GorensteinReport& rep) {
  Json j;
  switch (rep.verdict) {
    case GorensteinReport::Verdict::CoxGorenstein: j["verdict"] = "CoxGorenstein"; break;
    case GorensteinReport::Verdict::ConditionsFailed: j["verdict"] = "ConditionsFailed"; break;
    default: j["verdict"] = "EmptinessInconclusive"; break;
  }
  j["emptiness"] = emptiness_json(rep.emptiness);
  j["dim_socle_piece"] = rep.dim_socle_piece;
  Json pairings = Json::array();
  for (const PairingReport& p : rep.pairings) {
    Json entry;
    entry["alpha"] = class_json(p.alpha);
    entry["rows"] = p.rows;
    entry["cols"] = p.cols;
    entry["rank"] = p.rank;
    entry["dim_r_alpha"] = p.dim_r_alpha;
    entry["dim_r_complement"] = p.dim_r_complement;
    entry["nondegenerate"] = p.nondegenerate;
    entry["left_kernel_matches"] = p.left_kernel_matches;
    pairings.push_back(std::move(entry));
  }
  j["pairings"] = std::move(pairings);
  j["failed"] = rep.failed;
  return j;
}

Json oda_check_json(const OdaSpotCheck& check) {
  Json j;
  j["a1"] = class_json(check.a1);
  j["a2"] = class_json(check.a2);
  j["a1_ample"] = check.a1_ample;
  j["a2_nef"] = check.a2_nef;
  j["certificate"] = multiplication_json(check.cert);
  return j;
}

Json nl_json(const NLHypothesisReport& rep) {
  Json j;
  j["k"] = rep.k;
  j["beta"] = class_json(rep.beta);
  j["eta"] = class_json(rep.eta);
  j["beta0"] = class_json(rep.beta0);
  j["socle_degree"] = class_json(rep.socle_degree);
  j["beta_ample"] = rep.beta_ample;
  j["beta_cartier"] = rep.beta_cartier;
  j["eta_ample"] = rep.eta_ample;
  j["eta_primitive"] = rep.eta_primitive;
  if (rep.eta_factorization) {
    Json f;
    f["t"] = int_json(rep.eta_factorization->first);
    f["factor"] = class_json(rep.eta_factorization->second);
    j["eta_factorization"] = std::move(f);
  }
  if (rep.n) j["n"] = int_json(*rep.n);
  j["n_is_zero"] = rep.n_is_zero;
  if (rep.m_beta_value) j["m_beta"] = int_json(*rep.m_beta_value);
  j["dim_matches"] = rep.dim_matches;
  Json oda = Json::array();
  for (const OdaSpotCheck& check : rep.oda) oda.push_back(oda_check_json(check));
  j["oda"] = std::move(oda);
  j["warnings"] = rep.warnings;
  return j;
}

Json step3_json(const Step3Report& rep) {
  Json j;
  j["chain_lhs"] = rat_json(rep.chain_lhs);
  j["chain_rhs"] = rat_json(rep.chain_rhs);
  j["chain_holds"] = rep.chain_holds;
  j["bound_first"] = class_json(rep.bound_first);
  j["second_multiplier"] = rat_json(rep.second_multiplier);
  if (rep.bound_second) j["bound_second"] = class_json(*rep.bound_second);
  j["absurdity"] = rep.absurdity;
  j["absurdity_threshold"] = rat_json(rep.absurdity_threshold);
  j["deg_v_constraint_ok"] = rep.deg_v_constraint_ok;
  j["deg_v_limit"] = rat_json(rep.deg_v_limit);
  return j;
}

Json error_json(const std::string& kind, const std::string& detail) {
  Json inner;
  inner["kind"] = kind;
  inner["detail"] = detail;
  Json j;
  j["error"] = std::move(inner);
  return j;
}

namespace {

void flatten_table(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    if (j.empty()) {
      out += prefix + " = {}\n";
      return;
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten_table(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (j.is_array()) {
    if (j.empty()) {
      out += prefix + " = []\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten_table(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else if (j.is_string()) {
    out += prefix + " = " + j.get<std::string>() + "\n";
  } else {
    out += prefix + " = " + j.dump() + "\n";
  }
}

}  // namespace

std::string render_report(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  if (format == "table") {
    std::string out;
    flatten_table(report, "", out);
    return out;
  }
  throw errors::input_error("unknown format: " + format);
}

}  // namespace coxhodge::io
