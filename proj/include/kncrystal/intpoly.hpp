#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace kn {

using BigInt = boost::multiprecision::cpp_int;

/// Exact polynomial in q with arbitrary-precision integer coefficients.
///
/// Coefficients are held densely by degree; the leading coefficient is
/// never zero, so the zero polynomial has no coefficients at all.
class IntPoly {
public:
  IntPoly() = default;
  IntPoly(BigInt constant);  // NOLINT(google-explicit-constructor)
  IntPoly(int constant) : IntPoly(BigInt(constant)) {}  // NOLINT
  /// Ascending coefficients; trailing zeros are dropped.
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly monomial(BigInt c, std::size_t degree);
  static IntPoly q_power(std::size_t degree) { return monomial(1, degree); }

  bool is_zero() const { return coeffs_.empty(); }
  /// −1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Zero beyond the degree.
  BigInt coeff(std::size_t k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Lowest degree with a nonzero coefficient; −1 for zero.
  long low_degree() const;

  IntPoly shifted(std::size_t k) const;
  BigInt eval(const BigInt& x) const;
  BigInt coefficient_sum() const;
  bool nonnegative() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// "q+2q^2+...", "0" for zero.
  std::string to_string() const;
  /// [[degree, "coefficient"], ...], degrees ascending, zero terms omitted.
  nlohmann::ordered_json to_json() const;
  static IntPoly from_json(const nlohmann::ordered_json& j);

private:
  void trim();

  std::vector<BigInt> coeffs_;
};

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};

/// Long division over ℤ[q]. Each step must divide the current leading
/// coefficient exactly by the divisor's leading coefficient (always true
/// for monic or ±1-leading divisors); throws InexactDivision otherwise.
PolyDivision divmod(const IntPoly& num, const IntPoly& den);

/// Quotient when the remainder is zero; throws InexactDivision otherwise.
IntPoly div_exact(const IntPoly& num, const IntPoly& den);

/// [k] = 1 − q^k (k ≥ 1).
IntPoly q_bracket(int k);
/// [k]! = [k][k−1]⋯[1], [0]! = 1.
IntPoly q_factorial(int k);

/// Σ_k c_k q^(k mod n): the representative of p modulo q^n − 1 with degree < n.
IntPoly reduce_mod_cyclic(const IntPoly& p, int n);

using PolyMatrix = std::vector<std::vector<IntPoly>>;

/// Fraction-free (Bareiss) determinant with row pivoting.
IntPoly determinant(PolyMatrix a);

/// Φ_1..Φ_n for the divisors of n, built by dividing q^e − 1 by Φ_d for
/// proper divisors d of e. Verifies Π_{e|n} Φ_e = q^n − 1 on construction.
class CyclotomicContext {
public:
  explicit CyclotomicContext(int n);

  int order() const { return n_; }
  const std::vector<int>& divisors() const { return divisors_; }
  /// Throws InvalidArgument if e does not divide the order.
  const IntPoly& phi(int e) const;

private:
  int n_;
  std::vector<int> divisors_;
  std::vector<IntPoly> phis_;  // parallel to divisors_
};

IntPoly cyclotomic(int e);

}  // namespace kn
