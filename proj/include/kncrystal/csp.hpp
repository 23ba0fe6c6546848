#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "kncrystal/crystal.hpp"
#include "kncrystal/enumerate.hpp"
#include "kncrystal/intpoly.hpp"
#include "kncrystal/partition.hpp"

namespace kn {

/// Orbit/CSP hypotheses: n = |λ| odd and gcd(m, p) = 1 for every odd prime p ≤ n.
struct Hypotheses {
  int n = 0;
  int m = 0;
  bool n_odd = false;
  bool gcd_ok = true;
  std::optional<int> witness_prime;  // smallest odd prime p ≤ n dividing m

  bool hold() const { return n_odd && gcd_ok; }
  std::string describe() const;
  nlohmann::ordered_json to_json() const;
};

Hypotheses hypotheses_for(int n, int m);
Hypotheses hypotheses_hold(const Partition& shape, int m);

// ---- signed permutation action on weights ----------------------------------

/// γ = (1 2 … m) acting by θχ = (χ_{θ⁻¹(1)}, …): (χ_m, χ_1, …, χ_{m−1}).
Weight gamma_act(const Weight& chi);
/// β = (2 m)(3 m−1)⋯: (χ_1, χ_m, χ_{m−1}, …, χ_2).
Weight beta_act(const Weight& chi);

/// A_χ = {γ^t χ, −γ^t β χ | 0 ≤ t < m}.
std::set<Weight> a_chi(const Weight& chi);

/// Groups `weights` into A_χ blocks. `disjoint` is false if two blocks meet
/// without being equal; `closed` is false if a block leaves the set.
struct BlockPartition {
  std::vector<std::set<Weight>> blocks;
  bool disjoint = true;
  bool closed = true;
};
BlockPartition a_chi_blocks(const std::vector<Weight>& weights);

// ---- checks ----------------------------------------------------------------

struct OrbitTheoremReport {
  Hypotheses hypotheses;
  OrbitCensus census;
  bool all_full = false;  // every orbit has size 2m
  /// Holds when hypotheses fail, otherwise requires all_full.
  bool verdict() const { return !hypotheses.hold() || all_full; }
};

OrbitTheoremReport check_orbit_theorem(const TableauSet& s, const Action& action);
OrbitTheoremReport check_orbit_theorem(const Partition& shape, int m);

struct ResidueReport {
  bool hypotheses_ok = false;  // Σχ odd, n odd, gcd condition
  std::vector<long> pwr_values;  // pwr(γ^tχ) for t<m, then pwr(−γ^tβχ)
  bool complete = false;         // residues mod 2m are all distinct
};

ResidueReport check_residue_lemma(const Weight& chi, int n, int m);

struct EquivReport {
  Hypotheses hypotheses;
  BigInt count;
  IntPoly residue;  // X(q) mod q^{2m} − 1
  bool flat = false;  // every residue coefficient equals count / 2m
  bool verdict() const { return !hypotheses.hold() || flat; }
};

/// Throws BrokenInvariant if the hypotheses hold but 2m ∤ |SP|.
EquivReport check_equiv_theorem(const TableauSet& s);
EquivReport check_equiv_theorem(const Partition& shape, int m);

struct RootEvaluation {
  int d = 0;
  std::size_t fixed = 0;                // |{T : g^d T = T}| by direct iteration
  std::optional<BigInt> poly;           // f_sp(ω^d)
  std::optional<BigInt> x_poly;         // q^κ f_sp at ω^d
  bool agrees() const { return poly && *poly == fixed; }
};

struct CspReport {
  Partition shape;
  int m = 0;
  Hypotheses hypotheses;
  OrbitCensus census;
  bool census_consistent = false;  // fixed-point counts recomputed from census agree
  IntPoly f_sp;
  IntPoly f_sp_residue;            // f_sp mod q^{2m} − 1
  std::vector<RootEvaluation> evaluations;
  bool verdict = false;

  nlohmann::ordered_json to_json() const;
};

/// Runs the CSP check for (SP(λ,2m), ⟨action⟩, f_sp^λ) at every d in 0..2m−1.
CspReport verify_csp(const TableauSet& s, const Action& action);
CspReport verify_csp(const Partition& shape, int m);

}  // namespace kn
