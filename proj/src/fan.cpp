#include "coxhodge/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "coxhodge/errors.hpp"
#include "coxhodge/linalg.hpp"

namespace coxhodge {

namespace {

std::string cone_name(const std::vector<std::size_t>& cone) {
  std::string s = "{";
  for (std::size_t i = 0; i < cone.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cone[i]);
  }
  return s + "}";
}

}  // namespace

Fan validate_fan(const std::vector<IntVec>& raw_rays,
                 const std::vector<std::vector<long long>>& raw_cones, std::size_t d) {
  if (d == 0) throw errors::input_error("fan dimension must be positive");
  if (raw_rays.empty()) throw errors::input_error("fan has no rays");
  if (raw_cones.empty()) throw errors::input_error("fan has no maximal cones");

  Fan fan;
  fan.dim = d;
  for (std::size_t i = 0; i < raw_rays.size(); ++i) {
    const IntVec& v = raw_rays[i];
    if (v.size() != d) throw errors::length_mismatch("ray " + std::to_string(i), d, v.size());
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) throw errors::non_primitive_ray("ray " + std::to_string(i) + " is zero");
    if (g != 1)
      throw errors::non_primitive_ray("ray " + std::to_string(i) + " has entry gcd " +
                                      g.get_str());
  }
  {
    std::set<IntVec> seen(raw_rays.begin(), raw_rays.end());
    if (seen.size() != raw_rays.size()) throw errors::input_error("duplicate ray");
  }
  fan.rays = raw_rays;
  const std::size_t r = fan.rays.size();

  for (const std::vector<long long>& raw : raw_cones) {
    std::vector<std::size_t> cone;
    cone.reserve(raw.size());
    for (long long idx : raw) {
      if (idx < 0 || static_cast<std::size_t>(idx) >= r)
        throw errors::index_out_of_range("cone ray index " + std::to_string(idx) +
                                         " outside [0, " + std::to_string(r) + ")");
      cone.push_back(static_cast<std::size_t>(idx));
    }
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw errors::non_simplicial_cone("repeated ray index in cone " + cone_name(cone));
    if (cone.size() != d)
      throw errors::non_simplicial_cone("cone " + cone_name(cone) + " has " +
                                        std::to_string(cone.size()) + " rays, expected " +
                                        std::to_string(d));
    std::vector<RatVec> rows;
    for (std::size_t idx : cone) {
      RatVec row(d);
      for (std::size_t j = 0; j < d; ++j) row[j] = Rat(fan.rays[idx][j]);
      rows.push_back(std::move(row));
    }
    if (linalg::rank(rows, d) != d)
      throw errors::non_simplicial_cone("rays of cone " + cone_name(cone) +
                                        " are linearly dependent");
    fan.max_cones.push_back(std::move(cone));
  }
  {
    std::set<std::vector<std::size_t>> seen(fan.max_cones.begin(), fan.max_cones.end());
    if (seen.size() != fan.max_cones.size()) throw errors::input_error("duplicate maximal cone");
  }

  std::vector<bool> used(r, false);
  for (const auto& cone : fan.max_cones)
    for (std::size_t idx : cone) used[idx] = true;
  for (std::size_t i = 0; i < r; ++i)
    if (!used[i])
      throw errors::input_error("ray " + std::to_string(i) + " appears in no maximal cone");

  // Facet pairing: every (d-1)-subset of a maximal cone must occur in exactly
  // two maximal cones; sufficient for completeness of a pure simplicial fan.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> facet_owners;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& cone = fan.max_cones[c];
    for (std::size_t drop = 0; drop < cone.size(); ++drop) {
      std::vector<std::size_t> facet;
      for (std::size_t j = 0; j < cone.size(); ++j)
        if (j != drop) facet.push_back(cone[j]);
      facet_owners[facet].push_back(c);
    }
  }
  for (const auto& [facet, owners] : facet_owners)
    if (owners.size() != 2)
      throw errors::incomplete_fan("facet " + cone_name(facet) + " lies in " +
                                   std::to_string(owners.size()) + " maximal cones, expected 2");

  // Connectivity of the facet-adjacency graph.
  std::vector<std::vector<std::size_t>> adj(fan.max_cones.size());
  for (const auto& [facet, owners] : facet_owners) {
    adj[owners[0]].push_back(owners[1]);
    adj[owners[1]].push_back(owners[0]);
  }
  std::vector<bool> reached(fan.max_cones.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    std::size_t c = stack.back();
    stack.pop_back();
    for (std::size_t nb : adj[c])
      if (!reached[nb]) {
        reached[nb] = true;
        stack.push_back(nb);
      }
  }
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c)
    if (!reached[c])
      throw errors::disconnected_fan("maximal cone " + cone_name(fan.max_cones[c]) +
                                     " is unreachable through facets");

  return fan;
}

std::vector<Int> poincare_polynomial(const Fan& fan) {
  // Faces of a simplicial cone are the subsets of its ray set, so collecting
  // subsets of maximal cones enumerates every cone of the fan exactly once.
  std::set<std::vector<std::size_t>> cones;
  for (const auto& cone : fan.max_cones) {
    const std::size_t n = cone.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> face;
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (std::size_t{1} << j)) face.push_back(cone[j]);
      cones.insert(std::move(face));
    }
  }
  std::vector<Int> face_count(fan.dim + 1);  // by dimension (= ray count)
  for (const auto& face : cones) face_count[face.size()] += 1;

  // P(t) = sum_k face_count[k] * (t-1)^(d-k), expanded exactly.
  std::vector<Int> coeffs(fan.dim + 1);
  for (std::size_t k = 0; k <= fan.dim; ++k) {
    const std::size_t e = fan.dim - k;
    // (t-1)^e term by term: C(e,j) * t^j * (-1)^(e-j)
    Int binom = 1;
    for (std::size_t j = 0; j <= e; ++j) {
      Int term = face_count[k] * binom;
      if ((e - j) % 2 == 1) term = -term;
      coeffs[j] += term;
      binom = binom * Int(static_cast<long>(e - j)) / Int(static_cast<long>(j + 1));
    }
  }
  for (const Int& c : coeffs)
    if (c < 0)
      throw errors::internal_error("negative coefficient in the face-count expansion");
  return coeffs;
}

}  // namespace coxhodge
