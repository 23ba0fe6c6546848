#include "kncrystal/csp.hpp"

#include <algorithm>
#include <map>

#include "kncrystal/error.hpp"
#include "kncrystal/qpoly.hpp"

namespace kn {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long to_ll(const BigInt& v) { return v.convert_to<long long>(); }

}  // namespace

Hypotheses hypotheses_for(int n, int m) {
  Hypotheses h;
  h.n = n;
  h.m = m;
  h.n_odd = n % 2 == 1;
  for (int p = 3; p <= n; p += 2) {
    if (is_prime(p) && m % p == 0) {
      h.gcd_ok = false;
      h.witness_prime = p;
      break;
    }
  }
  return h;
}

Hypotheses hypotheses_hold(const Partition& shape, int m) { return hypotheses_for(shape.size(), m); }

std::string Hypotheses::describe() const {
  if (hold())
    return "n=" + std::to_string(n) + " is odd and no odd prime <= n divides m=" + std::to_string(m);
  std::string s;
  if (!n_odd) s = "n=" + std::to_string(n) + " is even";
  if (!gcd_ok) {
    if (!s.empty()) s += "; ";
    s += "odd prime " + std::to_string(*witness_prime) + " <= n divides m=" + std::to_string(m);
  }
  return s;
}

nlohmann::ordered_json Hypotheses::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["n_odd"] = n_odd;
  j["gcd_ok"] = gcd_ok;
  j["witness_prime"] = witness_prime ? nlohmann::ordered_json(*witness_prime) : nlohmann::ordered_json();
  j["hold"] = hold();
  return j;
}

Weight gamma_act(const Weight& chi) {
  Weight out = chi;
  if (!out.coords.empty()) std::rotate(out.coords.rbegin(), out.coords.rbegin() + 1, out.coords.rend());
  return out;
}

Weight beta_act(const Weight& chi) {
  Weight out = chi;
  const std::size_t m = chi.coords.size();
  for (std::size_t k = 1; k < m; ++k) out.coords[k] = chi.coords[m - k];
  return out;
}

namespace {

// γ^t χ for t = 0..m−1 followed by −γ^t β χ for t = 0..m−1.
std::vector<Weight> dihedral_images(const Weight& chi) {
  std::vector<Weight> out;
  const int m = chi.rank();
  Weight g = chi;
  for (int t = 0; t < m; ++t, g = gamma_act(g)) out.push_back(g);
  Weight b = beta_act(chi);
  for (int t = 0; t < m; ++t, b = gamma_act(b)) out.push_back(-b);
  return out;
}

}  // namespace

std::set<Weight> a_chi(const Weight& chi) {
  const std::vector<Weight> images = dihedral_images(chi);
  return {images.begin(), images.end()};
}

BlockPartition a_chi_blocks(const std::vector<Weight>& weights) {
  BlockPartition out;
  const std::set<Weight> all(weights.begin(), weights.end());
  std::map<Weight, std::size_t> owner;
  for (const Weight& w : all) {
    if (owner.count(w)) continue;
    std::set<Weight> block = a_chi(w);
    for (const Weight& x : block) {
      if (!all.count(x)) out.closed = false;
      auto it = owner.find(x);
      if (it != owner.end() && out.blocks[it->second] != block) out.disjoint = false;
    }
    for (const Weight& x : block) owner.emplace(x, out.blocks.size());
    out.blocks.push_back(std::move(block));
  }
  return out;
}

OrbitTheoremReport check_orbit_theorem(const TableauSet& s, const Action& action) {
  OrbitTheoremReport r;
  r.hypotheses = hypotheses_hold(s.shape(), s.rank());
  r.census = orbit_census(s.members(), action);
  const auto full = static_cast<std::size_t>(2 * s.rank());
  r.all_full = std::all_of(r.census.sizes.begin(), r.census.sizes.end(),
                           [&](const auto& kv) { return kv.first == full; });
  return r;
}

OrbitTheoremReport check_orbit_theorem(const Partition& shape, int m) {
  return check_orbit_theorem(enumerate_by_crystal(shape, m), sigma_action());
}

ResidueReport check_residue_lemma(const Weight& chi, int n, int m) {
  ResidueReport r;
  r.hypotheses_ok = chi.sum() % 2 != 0 && hypotheses_for(n, m).hold();
  for (const Weight& w : dihedral_images(chi)) r.pwr_values.push_back(pwr_wt(w, n, m));
  const long mod = 2L * m;
  std::set<long> residues;
  for (long v : r.pwr_values) residues.insert(((v % mod) + mod) % mod);
  r.complete = static_cast<long>(residues.size()) == mod;
  return r;
}

EquivReport check_equiv_theorem(const TableauSet& s) {
  EquivReport r;
  const int m = s.rank();
  r.hypotheses = hypotheses_hold(s.shape(), m);
  r.count = s.size();
  r.residue = reduce_mod_cyclic(x_poly(s), 2 * m);
  const bool divisible = r.count % (2 * m) == 0;
  if (r.hypotheses.hold() && !divisible)
    throw BrokenInvariant("|SP| = " + r.count.str() + " not divisible by 2m under the orbit hypotheses");
  r.flat = divisible;
  for (int k = 0; k < 2 * m && r.flat; ++k) r.flat = r.residue.coeff(static_cast<std::size_t>(k)) == r.count / (2 * m);
  return r;
}

EquivReport check_equiv_theorem(const Partition& shape, int m) {
  return check_equiv_theorem(enumerate_by_crystal(shape, m));
}

CspReport verify_csp(const TableauSet& s, const Action& action) {
  CspReport r;
  r.shape = s.shape();
  r.m = s.rank();
  const int order = 2 * r.m;
  r.hypotheses = hypotheses_hold(s.shape(), r.m);

  std::vector<std::size_t> fixed(static_cast<std::size_t>(order), 0);
  for (const KNTableau& t : s.members()) {
    KNTableau cur = t;
    ++fixed[0];
    for (int d = 1; d < order; ++d) {
      cur = action(cur);
      if (cur == t) ++fixed[static_cast<std::size_t>(d)];
    }
    if (!(action(cur) == t)) throw BrokenInvariant("action order does not divide 2m");
  }

  r.census = orbit_census(s.members(), action);
  r.census_consistent = true;
  for (int d = 0; d < order; ++d) {
    std::size_t from_census = 0;
    for (const auto& [size, count] : r.census.sizes)
      if (d % static_cast<int>(size) == 0) from_census += size * count;
    r.census_consistent = r.census_consistent && from_census == fixed[static_cast<std::size_t>(d)];
  }

  r.f_sp = f_sp(s.shape(), r.m);
  r.f_sp_residue = reduce_mod_cyclic(r.f_sp, order);
  const IntPoly x = r.f_sp.shifted(static_cast<std::size_t>(s.shape().kappa()));
  r.verdict = true;
  for (int d = 0; d < order; ++d) {
    RootEvaluation e;
    e.d = d;
    e.fixed = fixed[static_cast<std::size_t>(d)];
    e.poly = try_eval_at_root(r.f_sp, order, d);
    e.x_poly = try_eval_at_root(x, order, d);
    r.verdict = r.verdict && e.agrees();
    r.evaluations.push_back(std::move(e));
  }
  return r;
}

CspReport verify_csp(const Partition& shape, int m) {
  return verify_csp(enumerate_by_crystal(shape, m), sigma_action());
}

nlohmann::ordered_json CspReport::to_json() const {
  using J = nlohmann::ordered_json;
  J census_j = J::object();
  for (const auto& [size, count] : census.sizes) census_j[std::to_string(size)] = count;
  J evals = J::array();
  for (const RootEvaluation& e : evaluations) {
    J ej;
    ej["d"] = e.d;
    ej["fixed"] = e.fixed;
    ej["poly"] = e.poly ? J(to_ll(*e.poly)) : J();
    ej["x_poly"] = e.x_poly ? J(to_ll(*e.x_poly)) : J();
    evals.push_back(std::move(ej));
  }
  J j;
  j["shape"] = shape.parts();
  j["m"] = m;
  j["hypotheses"] = hypotheses.to_json();
  j["census"] = std::move(census_j);
  j["evaluations"] = std::move(evals);
  j["verdict"] = verdict;
  j["census_consistent"] = census_consistent;
  j["f_sp"] = f_sp.to_json();
  j["f_sp_residue"] = f_sp_residue.to_json();
  return j;
}

}  // namespace kn
