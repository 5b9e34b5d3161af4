// Acceptance suite: one line per criterion, PASS/FAIL, nonzero exit when
// anything fails.  Each criterion is exercised through the library (plus the
// CLI binary for the determinism check) and judged against independent
// oracles or frozen classical values, never against the code under test.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coxhodge/class_group.hpp"
#include "coxhodge/cox_ring.hpp"
#include "coxhodge/fan.hpp"
#include "coxhodge/hodge.hpp"
#include "coxhodge/ideal.hpp"
#include "coxhodge/io.hpp"
#include "coxhodge/nl.hpp"
#include "coxhodge/polynomial.hpp"

#include "test_support.hpp"

using namespace coxhodge;
using testsupport::data_file;
using testsupport::load_fan_fixture;

namespace {

using Failures = std::vector<std::string>;

IntVec ivec(std::vector<long> v) {
  IntVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

DivisorClass dc(std::vector<long> f, std::vector<long> t = {}) {
  return DivisorClass{ivec(std::move(f)), ivec(std::move(t))};
}

GradedPolynomial poly_file(const CoxRing& ring, const std::string& name) {
  return io::load_polynomial_file(data_file(name), ring.cl(), ring.names());
}

template <typename T>
std::string str(const T& v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

void expect(Failures& f, bool ok, const std::string& what) {
  if (!ok) f.push_back(what);
}

// 1. class group regressions against hand-computed normal forms
Failures class_group_regressions() {
  Failures f;
  ClassGroup p2 = ClassGroup::from_fan(load_fan_fixture("p2.json"));
  expect(f, p2.free_rank() == 1 && p2.torsion_orders().empty(), "projective plane rank");
  for (std::size_t i = 0; i < 3; ++i) {
    expect(f, p2.variable_degree(i) == dc({1}), "projective plane degree " + str(i));
  }

  ClassGroup p121 = ClassGroup::from_fan(load_fan_fixture("p121.json"));
  expect(f, p121.free_rank() == 1, "weighted plane rank");
  expect(f, p121.variable_degree(0) == dc({1}) && p121.variable_degree(1) == dc({2}) &&
                p121.variable_degree(2) == dc({1}),
         "weighted plane degrees (1,2,1)");

  ClassGroup f1 = ClassGroup::from_fan(load_fan_fixture("f1.json"));
  expect(f, f1.free_rank() == 2 && f1.torsion_orders().empty(), "Hirzebruch surface rank 2");
  return f;
}

// 2. Poincare polynomials, frozen plus palindromicity across the corpus
Failures poincare_polynomials() {
  Failures f;
  auto probe = [&](const std::string& file, std::vector<long> want) {
    IntVec got = poincare_polynomial(load_fan_fixture(file));
    expect(f, got == ivec(want), file + " coefficients");
  };
  probe("p2.json", {1, 1, 1});
  probe("p1xp1.json", {1, 2, 1});
  probe("p3.json", {1, 1, 1, 1});

  for (const char* file : {"p2.json", "p3.json", "p5.json", "p1xp1.json", "p121.json",
                           "f1.json", "fake_wps.json"}) {
    Fan fan = load_fan_fixture(file);
    IntVec c = poincare_polynomial(fan);
    Int sum(0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      sum += c[i];
      expect(f, c[i] == c[c.size() - 1 - i], std::string(file) + " palindromic");
      expect(f, c[i] >= 1, std::string(file) + " positive");
    }
    expect(f, sum == Int(static_cast<long>(fan.max_cones.size())),
           std::string(file) + " sums to the maximal cone count");
  }
  return f;
}

// 3. quartic surface regression, < 5 s
Failures quartic_surface() {
  Failures f;
  Fan p3 = load_fan_fixture("p3.json");
  CoxRing ring(p3);
  HodgeReport rep = hypersurface_prim_hodge(p3, ring, poly_file(ring, "fermat4_p3.txt"), 1, 20);
  expect(f, rep.dimension == 19, "dimension 19, got " + str(rep.dimension));
  expect(f, Int(static_cast<long>(rep.dimension)) == testsupport::hypersurface_hodge_oracle(3, 4, 1),
         "agrees with the regular-sequence oracle");
  expect(f, rep.quasi_smooth.verdict == SmoothnessReport::Verdict::Verified,
         "quasi-smoothness verified");
  return f;
}

// 4. plane cubic genus
Failures plane_cubic() {
  Failures f;
  Fan p2 = load_fan_fixture("p2.json");
  CoxRing ring(p2);
  HodgeReport rep = hypersurface_prim_hodge(p2, ring, poly_file(ring, "fermat3_p2.txt"), 1, 20);
  expect(f, rep.dimension == 1, "genus 1, got " + str(rep.dimension));
  expect(f, Int(static_cast<long>(rep.dimension)) == testsupport::hypersurface_hodge_oracle(2, 3, 1),
         "agrees with the regular-sequence oracle");
  return f;
}

// 5. Cayley consistency: elliptic quartic genus and the s = 1 collapse
Failures cayley_consistency() {
  Failures f;
  Fan p3 = load_fan_fixture("p3.json");
  CoxRing ring(p3);
  std::vector<GradedPolynomial> quadrics =
      io::load_polynomial_list(data_file("quadrics_p3.json"), ring.cl(), ring.names());
  HodgeReport pair = intersection_prim_hodge(p3, ring, quadrics, 3, 20);
  expect(f, pair.dimension == 1, "(2,2) curve genus 1, got " + str(pair.dimension));
  RatVec chi = testsupport::complete_intersection_chi_coeffs(1, {2, 2});
  expect(f, Rat(1) - chi[0] == Rat(static_cast<long>(pair.dimension)),
         "matches the generating-function genus");

  // one polynomial through the extended construction must reproduce the
  // direct hypersurface numbers on every non-excluded index
  GradedPolynomial quartic = poly_file(ring, "fermat4_p3.txt");
  for (long a = 0; a <= 2; ++a) {
    HodgeReport direct = hypersurface_prim_hodge(p3, ring, quartic, a, 20);
    HodgeReport routed = intersection_prim_hodge(p3, ring, {quartic}, a + 1, 20);
    expect(f, direct.dimension == routed.dimension,
           "quartic index " + str(a) + ": " + str(direct.dimension) + " vs " +
               str(routed.dimension));
    expect(f, direct.index_a == routed.index_a && direct.index_b == routed.index_b,
           "quartic index pair " + str(a));
  }
  Fan p2 = load_fan_fixture("p2.json");
  CoxRing ring2(p2);
  GradedPolynomial cubic = poly_file(ring2, "fermat3_p2.txt");
  HodgeReport direct = hypersurface_prim_hodge(p2, ring2, cubic, 1, 20);
  HodgeReport routed = intersection_prim_hodge(p2, ring2, {cubic}, 2, 20);
  expect(f, direct.dimension == routed.dimension && routed.dimension == 1,
         "cubic collapse at the surviving index");
  return f;
}

// 6. (3,3) threefold, exact rationals, < 60 s
Failures threefold_33() {
  Failures f;
  Fan p5 = load_fan_fixture("p5.json");
  CoxRing ring(p5);
  std::vector<GradedPolynomial> cubics =
      io::load_polynomial_list(data_file("cubics_p5.json"), ring.cl(), ring.names());
  HodgeReport rep = intersection_prim_hodge(p5, ring, cubics, 4, 20);
  expect(f, rep.dimension == 73, "dimension 73, got " + str(rep.dimension));
  expect(f, rep.index_a == 2 && rep.index_b == 1, "index pair (2,1)");

  // generating function: c_1 = h^{2,1} - h^{1,1} and the ambient h^{1,1} is 1
  RatVec chi = testsupport::complete_intersection_chi_coeffs(3, {3, 3});
  expect(f, chi[1] + Rat(1) == Rat(static_cast<long>(rep.dimension)),
         "matches the generating-function count");
  return f;
}

// 7. Cox-Gorenstein verification plus Macaulay symmetry
Failures gorenstein_verification() {
  Failures f;
  Fan p2 = load_fan_fixture("p2.json");
  CoxRing ring2(p2);
  std::vector<GradedPolynomial> squares;
  for (const char* text : {"x0^2", "x1^2", "x2^2"}) {
    squares.push_back(parse_polynomial(text, ring2.cl(), ring2.names()));
  }
  GradedIdeal mono(ring2, std::move(squares));
  GorensteinReport small = verify_cox_gorenstein(mono, dc({3}), 20);
  expect(f, small.verdict == GorensteinReport::Verdict::CoxGorenstein, "monomial verdict");
  expect(f, small.dim_socle_piece == 1, "socle piece dimension 1");
  expect(f, small.pairings.size() == 4, "four pairings");
  for (std::size_t a = 0; a < small.pairings.size(); ++a) {
    expect(f, small.pairings[a].alpha == dc({static_cast<long>(a)}) &&
                  small.pairings[a].nondegenerate,
           "nondegenerate pairing at " + str(a));
  }

  Fan p3 = load_fan_fixture("p3.json");
  CoxRing ring3(p3);
  GradedIdeal toric = toric_jacobian_ideal(ring3, poly_file(ring3, "fermat4_p3.txt"));
  GorensteinReport big = verify_cox_gorenstein(toric, dc({12}), 20);
  expect(f, big.verdict == GorensteinReport::Verdict::CoxGorenstein,
         "Euler-derivative ideal at socle degree 12");
  for (const DivisorClass& alpha : effective_predecessors(ring3.cl(), dc({12}))) {
    DivisorClass mirror = ring3.cl().sub(dc({12}), alpha);
    expect(f, toric.quotient_dimension(alpha) == toric.quotient_dimension(mirror),
           "Macaulay symmetry at " + str(alpha.free[0].get_si()));
  }
  return f;
}

// 8. quasi-smoothness soundness: verdicts and the witness exclusion property
Failures quasi_smooth_soundness() {
  Failures f;
  Fan p3 = load_fan_fixture("p3.json");
  CoxRing ring(p3);
  SmoothnessReport good = quasi_smooth_certificate(ring, 3, {poly_file(ring, "fermat4_p3.txt")}, 20);
  expect(f, good.verdict == SmoothnessReport::Verdict::Verified, "diagonal quartic verified");

  SmoothnessReport bad = quasi_smooth_certificate(ring, 3, {poly_file(ring, "sing4_p3.txt")}, 20);
  expect(f, bad.verdict == SmoothnessReport::Verdict::Refuted, "three-term quartic refuted");
  RatVec want{Rat(0), Rat(0), Rat(0), Rat(1)};
  expect(f, bad.witness.has_value() && *bad.witness == want, "witness (0,0,0,1)");

  // a verified emptiness certificate and a valid singular point are mutually
  // exclusive on a seeded ideal corpus; both branches must actually occur
  Fan p2 = load_fan_fixture("p2.json");
  CoxRing ring2(p2);
  std::mt19937 rng(50);
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<long> degree(1, 3);
  int verified_seen = 0, witness_seen = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<GradedPolynomial> gens;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
      gens.push_back(testsupport::random_polynomial(ring2, dc({degree(rng)}), rng));
    }
    GradedIdeal ideal(ring2, std::move(gens));
    EmptinessReport emptiness = emptiness_certificate(ideal, 6);
    bool any_valid = false;
    for (int mask = 1; mask < 8; ++mask) {
      RatVec point;
      for (int bit = 0; bit < 3; ++bit) point.emplace_back((mask >> bit) & 1);
      if (point_witness(ideal, point).valid) any_valid = true;
    }
    if (emptiness.verified) ++verified_seen;
    if (any_valid) ++witness_seen;
    expect(f, !(emptiness.verified && any_valid),
           "trial " + str(trial) + ": verified emptiness with a valid witness");
  }
  expect(f, verified_seen > 0 && witness_seen > 0, "corpus exercises both branches");
  return f;
}

// 9. multiplication surjectivity certificates
Failures oda_certificates() {
  Failures f;
  CoxRing p3(load_fan_fixture("p3.json"));
  MultiplicationCertificate ok = p3.multiplication_surjective(dc({1}), dc({1}));
  expect(f, ok.surjective, "projective space (1,1) surjective");

  CoxRing p121(load_fan_fixture("p121.json"));
  MultiplicationCertificate gap = p121.multiplication_surjective(dc({1}), dc({1}));
  expect(f, !gap.surjective, "weighted plane (1,1) not surjective");
  expect(f, gap.cokernel_dim == 1, "cokernel 1, got " + str(gap.cokernel_dim));
  return f;
}

// 10. asymptotic arithmetic: frozen values, the division oracle, the flag
Failures asymptotic_arithmetic() {
  Failures f;
  expect(f, delta_upper(Int(4), Int(1)) == make_rat(1, 8), "gap bound 1/8");
  expect(f, codim_bound(Int(2), Int(4), Int(1)) == Rat(8), "codimension bound 8");

  std::mt19937 rng(20260819);
  std::uniform_int_distribution<int> size(0, 6);
  std::uniform_int_distribution<int> value(-9, 9);
  std::uniform_int_distribution<long> kdist(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Int> a;
    int n = size(rng);
    for (int i = 0; i < n; ++i) a.emplace_back(value(rng));
    Int b(value(rng));
    long k = kdist(rng);
    if (step1_coefficient(a, b, k) != testsupport::division_series_coefficient(a, b, k)) {
      f.push_back("series coefficient mismatch at trial " + str(trial));
      break;
    }
  }

  ClassGroup cl = ClassGroup::from_fan(load_fan_fixture("p3.json"));
  std::uniform_int_distribution<long> rdist(1, 12);
  std::uniform_int_distribution<long> num(0, 8);
  std::uniform_int_distribution<long> den(1, 16);
  for (int trial = 0; trial < 100; ++trial) {
    long r = rdist(rng);
    Rat delta = make_rat(num(rng), den(rng));
    Step3Report rep = step3_socle_bounds(Int(1), Int(1), Int(4), delta, Int(r), Int(3),
                                         dc({1}), cl.anticanonical(), cl);
    if (rep.absurdity != (delta > make_rat(1, 2 * r))) {
      f.push_back("absurdity flag disagrees at r=" + str(r));
      break;
    }
  }
  return f;
}

// 11. two enumeration paths agree on 100 random degrees
Failures two_path_dimensions() {
  Failures f;
  std::mt19937 rng(1137);
  std::uniform_int_distribution<long> coord(-2, 8);
  for (const char* file : {"p2.json", "p3.json", "p1xp1.json", "p121.json", "fake_wps.json"}) {
    CoxRing ring(load_fan_fixture(file));
    const ClassGroup& cl = ring.cl();
    for (int trial = 0; trial < 20; ++trial) {
      DivisorClass alpha;
      for (std::size_t i = 0; i < cl.free_rank(); ++i) alpha.free.emplace_back(coord(rng));
      for (const Int& order : cl.torsion_orders()) {
        std::uniform_int_distribution<long> tc(0, order.get_si() - 1);
        alpha.torsion.emplace_back(tc(rng));
      }
      alpha = cl.reduce(alpha);
      const std::vector<IntVec>& recursive = ring.monomial_basis(alpha);
      std::vector<IntVec> enumerated = lattice_points(cl, alpha);
      expect(f, recursive == enumerated,
             std::string(file) + " trial " + str(trial) + ": " + str(recursive.size()) +
                 " vs " + str(enumerated.size()));
    }
  }
  return f;
}

// 12. byte determinism of the CLI across repeats and worker counts
Failures cli_determinism() {
  Failures f;
  std::vector<std::vector<std::string>> corpus = {
      {"fan", "check", "--fan", data_file("p2.json")},
      {"classgroup", "--fan", data_file("fake_wps.json")},
      {"basis", "--fan", data_file("p121.json"), "--degree", "2"},
      {"oda", "--fan", data_file("p121.json"), "--pair", "1:1", "--pair", "2:1"},
      {"quasismooth", "--fan", data_file("p3.json"), "--poly", data_file("fermat4_p3.txt")},
      {"quasismooth", "--fan", data_file("p3.json"), "--poly", data_file("sing4_p3.txt")},
      {"nondegenerate", "--fan", data_file("p2.json"), "--poly", data_file("fermat3_p2.txt")},
      {"hodge", "hypersurface", "--fan", data_file("p3.json"), "--poly",
       data_file("fermat4_p3.txt"), "--index", "1"},
      {"hodge", "intersection", "--fan", data_file("p3.json"), "--polys",
       data_file("quadrics_p3.json"), "--p", "3"},
      {"gorenstein", "--fan", data_file("p3.json"), "--ideal", data_file("j0_fermat4_p3.json"),
       "--socle", "12"},
      {"nl", "--fan", data_file("p3.json"), "--beta", "4", "--eta", "1", "--k", "1",
       "--delta", "1/16", "--r", "4", "--deg-v", "1", "--d-param", "2"},
      {"step1", "--a", "2,2", "--b", "4", "--k", "1"},
      {"bounds", "--r", "4", "--k", "1", "--m-beta", "4", "--d-param", "2"},
  };
  for (const auto& args : corpus) {
    testsupport::CliResult first = testsupport::run_cli(args);
    testsupport::CliResult second = testsupport::run_cli(args);
    std::vector<std::string> threaded = args;
    threaded.insert(threaded.end(), {"--jobs", "3"});
    testsupport::CliResult third = testsupport::run_cli(threaded);
    std::string label = args[0] + (args.size() > 1 && args[1][0] != '-' ? " " + args[1] : "");
    expect(f, first.exit_code == second.exit_code && first.out == second.out,
           label + ": repeat run differs");
    expect(f, first.exit_code == third.exit_code && first.out == third.out,
           label + ": --jobs changed the output");
  }
  return f;
}

struct Criterion {
  int number;
  const char* name;
  std::function<Failures()> run;
  double limit_seconds;  // 0 = no limit
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "class group regressions", class_group_regressions, 1.0},
      {2, "poincare polynomials", poincare_polynomials, 0},
      {3, "quartic surface hodge number", quartic_surface, 5.0},
      {4, "plane cubic genus", plane_cubic, 0},
      {5, "cayley consistency", cayley_consistency, 0},
      {6, "(3,3) threefold hodge number", threefold_33, 60.0},
      {7, "cox-gorenstein verification", gorenstein_verification, 0},
      {8, "quasi-smoothness soundness", quasi_smooth_soundness, 0},
      {9, "multiplication certificates", oda_certificates, 0},
      {10, "asymptotic arithmetic", asymptotic_arithmetic, 0},
      {11, "two-path dimension agreement", two_path_dimensions, 0},
      {12, "cli byte determinism", cli_determinism, 0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Failures problems;
    auto start = std::chrono::steady_clock::now();
    try {
      problems = c.run();
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      problems.push_back("took " + std::to_string(seconds) + " s, limit " +
                         std::to_string(c.limit_seconds));
    }
    if (problems.empty()) {
      std::printf("PASS %2d %s (%.2fs)\n", c.number, c.name, seconds);
    } else {
      ++failures;
      std::printf("FAIL %2d %s (%.2fs)\n", c.number, c.name, seconds);
      for (const std::string& p : problems) std::printf("        %s\n", p.c_str());
    }
  }
  if (failures > 0) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
