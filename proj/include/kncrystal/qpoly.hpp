#pragma once

#include <optional>
#include <vector>

#include "kncrystal/enumerate.hpp"
#include "kncrystal/intpoly.hpp"
#include "kncrystal/partition.hpp"
#include "kncrystal/tableau.hpp"

namespace kn {

/// pwr(T) = Σ ((i−1)·#i + (2m−i)·#ī).
long pwr_tab(const KNTableau& t);

/// pwr from the weight alone: Σ(i−1)χ_i + (2m−1)(n − Σχ_i)/2.
/// Throws InvalidArgument unless n − Σχ_i is even and 0 ≤ (n−Σχ_i)/2 ≤ n.
long pwr_wt(const Weight& chi, int n, int m);

/// X(q) = Σ_T q^pwr(T).
IntPoly x_poly(const TableauSet& s);

/// Π (2m + r_λ(i,j)) / h(i,j), with exact division asserted.
BigInt hook_content_count(const Partition& shape, int m);

/// f_sp^λ(q) = Π [2m + r_λ(i,j)] / [h(i,j)] with [k] = 1 − q^k.
/// Equal factors are cancelled before the single exact division.
IntPoly f_sp(const Partition& shape, int m);

/// μ_i = λ_i + m − i, i = 1..m.
class StaircaseParts {
public:
  /// Throws InvalidArgument if ℓ(λ) > m.
  StaircaseParts(const Partition& shape, int m);
  const std::vector<int>& parts() const { return mu_; }
  int rank() const { return static_cast<int>(mu_.size()); }

private:
  std::vector<int> mu_;
};

/// | q^{(j−1)(μ_i+1)} − q^{(2m−j)(μ_i+1)} |_{i,j=1..m}
PolyMatrix staircase_matrix(const StaircaseParts& mu);

/// Numerator determinant over denominator determinant (λ = ∅), exact.
IntPoly determinant_poly(const Partition& shape, int m);

/// q^{Σ(i−1)(μ_i+1)} Π[μ_i+1] Π_{i<j} [μ_i−μ_j][μ_i+μ_j+2]
IntPoly closed_form_det(const StaircaseParts& mu);

/// q^{Σ(i−1)(m−i+1)} Π_{i=1..m} [2i−1]!
IntPoly closed_form_denominator(int m);

/// Value of p at ω^d, ω a primitive n-th root of unity, obtained by
/// reducing p modulo Φ_e, e = n / gcd(d, n). nullopt when the residue is
/// not a constant, i.e. the value is not an integer.
std::optional<BigInt> try_eval_at_root(const IntPoly& p, int n, int d);

/// As try_eval_at_root but throws InexactDivision on a non-integer value.
BigInt eval_at_root(const IntPoly& p, int n, int d);

/// p mod Φ_e with e = n / gcd(d, n).
IntPoly residue_at_root(const IntPoly& p, int n, int d);

}  // namespace kn
