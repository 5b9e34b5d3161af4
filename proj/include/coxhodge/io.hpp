#ifndef COXHODGE_IO_HPP
#define COXHODGE_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "coxhodge/class_group.hpp"
#include "coxhodge/cox_ring.hpp"
#include "coxhodge/fan.hpp"
#include "coxhodge/hodge.hpp"
#include "coxhodge/ideal.hpp"
#include "coxhodge/nl.hpp"
#include "coxhodge/polynomial.hpp"

namespace coxhodge::io {

// Insertion-ordered JSON keeps every report byte-deterministic.
using Json = nlohmann::ordered_json;

// File ingestion.  IO failures are InputError; malformed content is
// ParseError with the path in the detail.
std::string read_text_file(const std::string& path);
Json load_json_file(const std::string& path);

// {"dim": d, "rays": [[..]], "max_cones": [[..]]}, integers only.
Fan load_fan(const std::string& path);

// One polynomial: the whole file is a single expression.
GradedPolynomial load_polynomial_file(const std::string& path, const ClassGroup& cl,
                                      const VarNames& names);

// JSON array of polynomial strings.
std::vector<GradedPolynomial> load_polynomial_list(const std::string& path,
                                                   const ClassGroup& cl,
                                                   const VarNames& names);

// Literals: class "f1,f2;t1,t2" (torsion part optional), rational "p/q",
// point "r1,r2,...".
DivisorClass parse_class_literal(const std::string& text, const ClassGroup& cl);
Rat parse_rat_literal(const std::string& text);
RatVec parse_point_literal(const std::string& text, std::size_t expected);
Int parse_integer_literal(const std::string& text);
std::vector<Int> parse_int_list_literal(const std::string& text);  // CSV, "" -> empty

// Scalar encoders: integers become JSON numbers when they fit in 64 bits and
// decimal strings otherwise; rationals are always strings ("5", "1/8").
Json int_json(const Int& v);
Json rat_json(const Rat& v);
Json intvec_json(const IntVec& v);
Json ratvec_json(const RatVec& v);
Json class_json(const DivisorClass& c);

// Report encoders shared by the CLI and the test suite.
Json fan_report_json(const Fan& fan);
Json classgroup_report_json(const ClassGroup& cl);
Json basis_report_json(const DivisorClass& alpha, const std::vector<IntVec>& monomials);
Json multiplication_json(const MultiplicationCertificate& cert);
Json emptiness_json(const EmptinessReport& rep);
Json smoothness_json(const SmoothnessReport& rep);
Json hodge_json(const HodgeReport& rep);
Json gorenstein_json(const GorensteinReport& rep);
Json oda_check_json(const OdaSpotCheck& check);
Json nl_json(const NLHypothesisReport& rep);
Json step3_json(const Step3Report& rep);
Json error_json(const std::string& kind, const std::string& detail);

// "json": indented dump.  "table": one "path = value" line per leaf, in
// report order; same numeric content as the JSON.
std::string render_report(const Json& report, const std::string& format);

}  // namespace coxhodge::io

#endif
