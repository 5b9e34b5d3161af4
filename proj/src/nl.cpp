#include "coxhodge/nl.hpp"

#include <algorithm>
#include <set>

#include "coxhodge/errors.hpp"

namespace coxhodge {

Rat delta_upper(const Int& r, const Int& k) {
  Int gap = r - (k + 1);
  if (gap <= 0) {
    throw errors::degenerate_denominator("requires r > k+1, got r = " + r.get_str() +
                                         ", k = " + k.get_str());
  }
  return make_rat(Int(1), 4 * gap);
}

bool delta_upper_range_ok(const Int& r, const Int& k) { return r >= 2 * (k + 1); }

Rat codim_bound(const Int& d_param, const Int& m_beta_value, const Int& k) {
  if (d_param < 0 || m_beta_value < 0 || k < 0) {
    throw errors::input_error("codimension bound arguments must be nonnegative");
  }
  if (!k.fits_ulong_p()) throw errors::input_error("k is too large");
  unsigned long ku = k.get_ui();
  Int power;
  mpz_pow_ui(power.get_mpz_t(), m_beta_value.get_mpz_t(), ku);
  Int factorial;
  mpz_fac_ui(factorial.get_mpz_t(), ku);
  return make_rat(d_param * power, factorial);
}

Int step1_coefficient(const std::vector<Int>& a, const Int& b, long k) {
  if (k < 0) throw errors::input_error("series order must be nonnegative");
  // numerator coefficients of prod (1 + a_i t), truncated at t^k
  std::vector<Int> num(static_cast<std::size_t>(k) + 1, Int(0));
  num[0] = 1;
  for (const Int& ai : a) {
    for (std::size_t j = num.size() - 1; j >= 1; --j) num[j] += ai * num[j - 1];
  }
  // times the geometric series sum (-b)^i t^i
  Int result(0);
  Int power(1);  // (-b)^{k-j} built from j = k downward
  for (long j = k; j >= 0; --j) {
    result += num[static_cast<std::size_t>(j)] * power;
    power *= -b;
  }
  return result;
}

Step3Report step3_socle_bounds(const Int& k, const Int& deg_v, const Int& m_beta_value,
                               const Rat& delta, const Int& r, const Int& d_param,
                               const DivisorClass& eta, const DivisorClass& beta0,
                               const ClassGroup& cl) {
  if (r < 1) throw errors::input_error("r must be at least 1");
  cl.check_shape(eta, "eta");
  cl.check_shape(beta0, "beta0");

  Step3Report rep;
  Int first_multiplier = 2 * (k + 1) * deg_v;
  rep.chain_lhs = Rat(first_multiplier);
  rep.chain_rhs = Rat(2 * r * m_beta_value) * delta;
  rep.chain_holds = rep.chain_lhs <= rep.chain_rhs;

  rep.bound_first = cl.sub(cl.scale(eta, first_multiplier), beta0);
  rep.second_multiplier = rep.chain_rhs;
  if (rep.second_multiplier.get_den() == 1) {
    rep.bound_second = cl.sub(cl.scale(eta, rep.second_multiplier.get_num()), beta0);
  }

  rep.absurdity_threshold = make_rat(Int(1), 2 * r);
  rep.absurdity = delta > rep.absurdity_threshold;

  Rat twice_delta_m = Rat(2) * delta * Rat(m_beta_value);
  rep.deg_v_limit = std::min(twice_delta_m, Rat(d_param));
  rep.deg_v_constraint_ok = Rat(deg_v) <= rep.deg_v_limit;
  return rep;
}

namespace {

struct Primitivity {
  bool primitive = false;
  std::optional<std::pair<Int, DivisorClass>> factor;
};

// eta is primitive when no effective eta' satisfies eta = t * eta' for an
// integer t >= 2; decided by free-part divisibility plus enumeration of the
// torsion congruence solutions.
Primitivity eta_primitivity(const ClassGroup& cl, const DivisorClass& eta) {
  if (eta.is_zero()) return {false, {{Int(2), cl.zero()}}};

  Int g(0);
  for (const Int& c : eta.free) g = gcd(g, c);
  if (g == 1) return {true, {}};

  std::set<Int> ts;
  if (g == 0) {
    // torsion-only class: multipliers repeat modulo the torsion exponent
    Int exponent(1);
    for (const Int& o : cl.torsion_orders()) exponent = lcm(exponent, o);
    for (Int t(2); t <= exponent; ++t) ts.insert(t);
  } else {
    for (Int t(2); t * t <= g; ++t) {
      if (g % t == 0) {
        ts.insert(t);
        ts.insert(g / t);
      }
    }
    ts.insert(g);
  }

  for (const Int& t : ts) {
    // congruence t * x = tau (mod order), coordinatewise
    std::vector<std::vector<Int>> residue_choices;
    bool solvable = true;
    for (std::size_t j = 0; j < cl.torsion_orders().size(); ++j) {
      const Int& order = cl.torsion_orders()[j];
      const Int& tau = eta.torsion[j];
      Int gj = gcd(t, order);
      if (tau % gj != 0) {
        solvable = false;
        break;
      }
      Int reduced_order = order / gj;
      Int inverse(0);
      if (reduced_order > 1) {
        if (mpz_invert(inverse.get_mpz_t(), Int(t / gj).get_mpz_t(),
                       reduced_order.get_mpz_t()) == 0) {
          throw errors::internal_error("coprime residue had no modular inverse");
        }
      }
      Int base = mod_reduce((tau / gj) * inverse, reduced_order);
      std::vector<Int> residues;
      for (Int s(0); s < gj; ++s) residues.push_back(base + s * reduced_order);
      residue_choices.push_back(std::move(residues));
    }
    if (!solvable) continue;

    // cartesian product over coordinates, lexicographic
    std::vector<std::size_t> pick(residue_choices.size(), 0);
    for (;;) {
      DivisorClass candidate;
      candidate.free.reserve(eta.free.size());
      for (const Int& c : eta.free) candidate.free.push_back(c / t);
      for (std::size_t j = 0; j < pick.size(); ++j) {
        candidate.torsion.push_back(residue_choices[j][pick[j]]);
      }
      if (is_effective(cl, candidate)) return {false, {{t, candidate}}};

      std::size_t j = pick.size();
      while (j > 0 && pick[j - 1] + 1 == residue_choices[j - 1].size()) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t i = j; i < pick.size(); ++i) pick[i] = 0;
    }
  }
  return {true, {}};
}

}  // namespace

NLHypothesisReport nl_hypothesis_report(
    const Fan& fan, const CoxRing& ring, const DivisorClass& beta, const DivisorClass& eta,
    long k, const std::vector<std::pair<DivisorClass, DivisorClass>>& oda_pairs) {
  if (k < 0) throw errors::input_error("k must be nonnegative");
  const ClassGroup& cl = ring.cl();
  cl.check_shape(beta, "beta");
  cl.check_shape(eta, "eta");

  NLHypothesisReport rep;
  rep.k = k;
  rep.beta = cl.reduce(beta);
  rep.eta = cl.reduce(eta);
  rep.beta0 = cl.anticanonical();
  rep.socle_degree = cl.sub(cl.scale(rep.beta, Int(k + 1)), rep.beta0);

  rep.dim_matches = fan.dim == static_cast<std::size_t>(2 * k + 1);
  if (!rep.dim_matches) {
    rep.warnings.push_back("fan dimension " + std::to_string(fan.dim) +
                           " differs from 2k+1 = " + std::to_string(2 * k + 1));
  }

  SupportCertificate beta_cert = nef_ample_certificate(fan, cl, rep.beta);
  rep.beta_ample = beta_cert.ample;
  rep.beta_cartier = beta_cert.cartier;
  if (!rep.beta_ample) rep.warnings.push_back("beta is not ample");
  if (!rep.beta_cartier) rep.warnings.push_back("beta is not Cartier");

  SupportCertificate eta_cert = nef_ample_certificate(fan, cl, rep.eta);
  rep.eta_ample = eta_cert.ample;
  if (!rep.eta_ample) rep.warnings.push_back("eta is not ample");

  Primitivity prim = eta_primitivity(cl, rep.eta);
  rep.eta_primitive = prim.primitive;
  rep.eta_factorization = prim.factor;
  if (!rep.eta_primitive) rep.warnings.push_back("eta is not primitive");

  DivisorClass lhs = cl.sub(cl.scale(rep.beta, Int(k)), rep.beta0);
  if (lhs.is_zero()) {
    rep.n = Int(0);
    rep.n_is_zero = true;
  } else if (rep.eta.is_zero()) {
    rep.warnings.push_back("eta is zero; k beta - beta0 is not a multiple of it");
  } else {
    std::optional<Int> candidate;
    bool free_part_zero = true;
    for (std::size_t i = 0; i < rep.eta.free.size(); ++i) {
      if (rep.eta.free[i] == 0) continue;
      free_part_zero = false;
      if (lhs.free[i] % rep.eta.free[i] == 0) candidate = lhs.free[i] / rep.eta.free[i];
      break;  // the first nonzero coordinate pins the only possible ratio
    }
    if (free_part_zero) {
      Int exponent(1);
      for (const Int& o : cl.torsion_orders()) exponent = lcm(exponent, o);
      for (Int nn(0); nn < exponent && !candidate; ++nn) {
        if (cl.scale(rep.eta, nn) == lhs) candidate = nn;
      }
    }
    if (candidate && *candidate >= 0 && cl.scale(rep.eta, *candidate) == lhs) {
      rep.n = *candidate;
      rep.n_is_zero = *candidate == 0;
    } else {
      rep.warnings.push_back("k beta - beta0 is not a nonnegative integer multiple of eta");
    }
  }

  try {
    rep.m_beta_value = m_beta(fan, cl, rep.beta, rep.eta);
  } catch (const Error& e) {
    rep.warnings.push_back("m_beta unavailable: " + e.detail());
  }

  for (const auto& [raw1, raw2] : oda_pairs) {
    OdaSpotCheck check;
    check.a1 = cl.reduce(raw1);
    check.a2 = cl.reduce(raw2);
    check.a1_ample = nef_ample_certificate(fan, cl, check.a1).ample;
    check.a2_nef = nef_ample_certificate(fan, cl, check.a2).nef;
    check.cert = ring.multiplication_surjective(check.a1, check.a2);
    rep.oda.push_back(std::move(check));
  }
  return rep;
}

}  // namespace coxhodge
