#include "coxhodge/cox_ring.hpp"

#include <algorithm>
#include <set>

#include "coxhodge/errors.hpp"

namespace coxhodge {

CoxRing::CoxRing(const Fan& fan) : cl_(ClassGroup::from_fan(fan)) {
  names_ = VarNames{fan.rays.size(), 0};
  std::set<IntVec> seen;
  for (const auto& cone : fan.max_cones) {
    IntVec gen(fan.rays.size(), Int(1));
    for (std::size_t idx : cone) gen[idx] = 0;
    if (seen.insert(gen).second) irrelevant_.push_back(gen);
  }
}

CoxRing::CoxRing(ClassGroup cl, std::vector<IntVec> irrelevant_gens, VarNames names)
    : cl_(std::move(cl)), names_(names) {
  if (names_.count() != cl_.nvars())
    throw errors::length_mismatch("variable names", cl_.nvars(), names_.count());
  std::set<IntVec> seen;
  for (IntVec& gen : irrelevant_gens) {
    if (gen.size() != cl_.nvars())
      throw errors::length_mismatch("irrelevant generator", cl_.nvars(), gen.size());
    if (seen.insert(gen).second) irrelevant_.push_back(std::move(gen));
  }
  if (irrelevant_.empty()) throw errors::input_error("no irrelevant generators");
}

const std::vector<IntVec>& CoxRing::monomial_basis(const DivisorClass& alpha) const {
  cl_.check_shape(alpha, "degree");
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = basis_cache_.find(alpha);
    if (it != basis_cache_.end()) return it->second;
  }

  std::vector<IntVec> result;
  if (alpha.is_zero()) {
    result.push_back(IntVec(cl_.nvars(), Int(0)));
  } else if (cl_.phi(alpha) >= 1) {
    // Any monomial of degree alpha has a positive exponent somewhere, so it
    // is x_i times a monomial of degree alpha - deg x_i.
    std::set<IntVec, GrevlexGreater> out;
    for (std::size_t i = 0; i < cl_.nvars(); ++i) {
      DivisorClass prev = cl_.sub(alpha, cl_.variable_degree(i));
      for (const IntVec& m : monomial_basis(prev)) {
        IntVec lifted = m;
        lifted[i] += 1;
        out.insert(std::move(lifted));
      }
    }
    result.assign(out.begin(), out.end());
  }
  // else: phi separates alpha from every monomial degree; the piece is empty

  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto [it, inserted] = basis_cache_.emplace(alpha, std::move(result));
  return it->second;
}

MultiplicationCertificate CoxRing::multiplication_surjective(const DivisorClass& a1,
                                                             const DivisorClass& a2) const {
  const std::vector<IntVec>& left = monomial_basis(a1);
  const std::vector<IntVec>& right = monomial_basis(a2);
  const std::vector<IntVec>& target = monomial_basis(cl_.add(a1, a2));

  // Products of monomials are monomials, so the rank of the product span is
  // the number of distinct exponent sums.
  std::set<IntVec> products;
  for (const IntVec& m1 : left)
    for (const IntVec& m2 : right) {
      IntVec m(m1.size());
      for (std::size_t i = 0; i < m1.size(); ++i) m[i] = m1[i] + m2[i];
      products.insert(std::move(m));
    }
  std::set<IntVec> target_set(target.begin(), target.end());
  for (const IntVec& m : products)
    if (!target_set.count(m))
      throw errors::internal_error("product monomial missing from the target basis");

  MultiplicationCertificate cert;
  cert.rank = products.size();
  cert.target_dim = target.size();
  cert.dim_left = left.size();
  cert.dim_right = right.size();
  cert.cokernel_dim = cert.target_dim - cert.rank;
  cert.surjective = cert.rank == cert.target_dim;
  return cert;
}

}  // namespace coxhodge
