#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kncrystal/letter.hpp"
#include "kncrystal/tableau.hpp"

namespace kn {

/// An element x_1 ⊗ ... ⊗ x_n of B(1)^⊗n, read left to right.
using Word = std::vector<Letter>;

// ---- standard crystal B(1) and root data -----------------------------------

/// f_i on a single letter: i→i+1 (i<m), m→m̄, (i+1)̄→ī; nullopt otherwise.
std::optional<Letter> f_letter(Letter x, int i, int m);
std::optional<Letter> e_letter(Letter x, int i, int m);

/// ⟨χ, α_i^∨⟩: χ_i − χ_{i+1} for i < m and χ_m for i = m.
int coroot_pairing(const Weight& chi, int i);
/// Simple reflection s_i on weights.
Weight reflect(const Weight& chi, int i);
/// α_i = e_i − e_{i+1} (i<m), α_m = 2e_m.
Weight simple_root(int i, int m);
/// (χ_1..χ_m) -> (−χ_m, χ_1, ..., χ_{m−1}).
Weight rotate_weight(const Weight& chi);

Weight weight_of(std::span<const Letter> w, int m);

// ---- signature rule on words -----------------------------------------------

/// Outcome of bracketing each + with the nearest unbracketed − to its right.
/// All unbracketed − precede all unbracketed +.
struct Signature {
  std::vector<std::size_t> free_minus;  // increasing positions
  std::vector<std::size_t> free_plus;   // increasing positions
};

Signature bracket(std::span<const Letter> w, int i, int m);

std::optional<Word> f_word(std::span<const Letter> w, int i, int m);
std::optional<Word> e_word(std::span<const Letter> w, int i, int m);
/// Number of unbracketed −.
int phi(std::span<const Letter> w, int i, int m);
/// Number of unbracketed +.
int epsilon(std::span<const Letter> w, int i, int m);

// ---- tableaux --------------------------------------------------------------

/// Cells in column-reading order: columns left to right, each bottom to top.
std::vector<Cell> reading_order(const Partition& shape);
Word column_reading_word(const KNTableau& t);

std::optional<KNTableau> f_tab(const KNTableau& t, int i);
std::optional<KNTableau> e_tab(const KNTableau& t, int i);

/// σ_i(T) = f_i^k(T) for k ≥ 0, e_i^{−k}(T) for k < 0, k = ⟨wt T, α_i^∨⟩.
/// Throws BrokenInvariant if an operator returns null before k steps.
KNTableau sigma_i(const KNTableau& t, int i);
/// σ = σ_1 σ_2 ⋯ σ_m, with σ_m applied first.
KNTableau sigma(const KNTableau& t);

// ---- orbits ----------------------------------------------------------------

using Action = std::function<KNTableau(const KNTableau&)>;

/// Action generated by sigma().
Action sigma_action();

/// Multiset of orbit sizes: size -> number of orbits.
struct OrbitCensus {
  std::map<std::size_t, std::size_t> sizes;

  std::size_t orbit_count() const;
  std::size_t element_count() const;
  std::size_t smallest() const;
  std::string to_string() const;
  friend bool operator==(const OrbitCensus&, const OrbitCensus&) = default;
};

/// T, a(T), a²(T), ... until the action returns to T.
/// Throws BrokenInvariant if it does not return within max_length steps.
std::vector<KNTableau> orbit(const KNTableau& t, const Action& action,
                             std::size_t max_length = 1u << 20);

/// Orbits of a bijection on `set`, each rotated to start at its least
/// element, ordered by that element. Throws BrokenInvariant if the action
/// leaves the set.
std::vector<std::vector<KNTableau>> orbits(std::span<const KNTableau> set, const Action& action);
OrbitCensus orbit_census(std::span<const KNTableau> set, const Action& action);

// ---- crystal graph ---------------------------------------------------------

struct CrystalEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  int label = 0;
  friend auto operator<=>(const CrystalEdge&, const CrystalEdge&) = default;
};

/// f_i edges among `vertices` (indices into the span), ordered by
/// (from, label). Throws BrokenInvariant if an f_i image is missing.
std::vector<CrystalEdge> crystal_edges(std::span<const KNTableau> vertices);

/// Graphviz digraph: one node per tableau labeled with its JSON, edges
/// labeled with the operator index.
std::string to_dot(std::span<const KNTableau> vertices, std::span<const CrystalEdge> edges);

}  // namespace kn
