#include "kncrystal/intpoly.hpp"

#include <algorithm>

#include "kncrystal/error.hpp"

namespace kn {

IntPoly::IntPoly(BigInt constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(BigInt c, std::size_t degree) {
  if (c == 0) return IntPoly();
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

long IntPoly::low_degree() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return static_cast<long>(k);
  return -1;
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(k, BigInt(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt IntPoly::coefficient_sum() const {
  BigInt s = 0;
  for (const BigInt& c : coeffs_) s += c;
  return s;
}

bool IntPoly::nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly operator-(IntPoly a) {
  for (BigInt& c : a.coeffs_) c = -c;
  return a;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (c < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    if (k == 0 || mag != 1) s += mag.str();
    if (k >= 1) s += "q";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

nlohmann::ordered_json IntPoly::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) j.push_back(nlohmann::ordered_json::array({k, coeffs_[k].str()}));
  return j;
}

IntPoly IntPoly::from_json(const nlohmann::ordered_json& j) {
  IntPoly p;
  try {
    for (const auto& term : j) {
      const auto degree = term.at(0).get<std::size_t>();
      p += monomial(BigInt(term.at(1).get<std::string>()), degree);
    }
  } catch (const std::exception& e) {
    throw InvalidArgument(std::string("malformed polynomial JSON: ") + e.what());
  }
  return p;
}

PolyDivision divmod(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<BigInt> r = num.coeffs();
  const std::vector<BigInt>& d = den.coeffs();
  const std::size_t dd = d.size() - 1;
  if (r.size() <= dd) return {IntPoly(), num};
  std::vector<BigInt> q(r.size() - dd);
  for (std::size_t top = r.size(); top-- > dd;) {
    if (r[top] == 0) continue;
    if (r[top] % d.back() != 0)
      throw InexactDivision("leading coefficient " + r[top].str() + " not divisible by " + d.back().str());
    const BigInt c = r[top] / d.back();
    const std::size_t shift = top - dd;
    for (std::size_t k = 0; k <= dd; ++k) r[shift + k] -= c * d[k];
    q[shift] = c;
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly div_exact(const IntPoly& num, const IntPoly& den) {
  PolyDivision qr = divmod(num, den);
  if (!qr.remainder.is_zero())
    throw InexactDivision("nonzero remainder " + qr.remainder.to_string() + " dividing by " + den.to_string());
  return std::move(qr.quotient);
}

IntPoly q_bracket(int k) {
  if (k < 1) throw InvalidArgument("[k] needs k >= 1, got " + std::to_string(k));
  return IntPoly(1) - IntPoly::q_power(static_cast<std::size_t>(k));
}

IntPoly q_factorial(int k) {
  if (k < 0) throw InvalidArgument("[k]! needs k >= 0");
  IntPoly p(1);
  for (int j = 1; j <= k; ++j) p *= q_bracket(j);
  return p;
}

IntPoly reduce_mod_cyclic(const IntPoly& p, int n) {
  if (n < 1) throw InvalidArgument("reduce_mod_cyclic needs n >= 1");
  std::vector<BigInt> v(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) v[k % static_cast<std::size_t>(n)] += p.coeffs()[k];
  return IntPoly(std::move(v));
}

IntPoly determinant(PolyMatrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw InvalidArgument("determinant of a non-square matrix");
  if (n == 0) return IntPoly(1);
  bool negate = false;
  IntPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return IntPoly();
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = div_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = IntPoly();
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

CyclotomicContext::CyclotomicContext(int n) : n_(n) {
  if (n < 1) throw InvalidArgument("cyclotomic order must be positive");
  for (int e = 1; e <= n; ++e)
    if (n % e == 0) divisors_.push_back(e);
  for (int e : divisors_) {
    IntPoly p = IntPoly::q_power(static_cast<std::size_t>(e)) - IntPoly(1);
    for (std::size_t k = 0; k < phis_.size(); ++k)
      if (e % divisors_[k] == 0) p = div_exact(p, phis_[k]);
    phis_.push_back(std::move(p));
  }
  IntPoly product(1);
  for (const IntPoly& p : phis_) product *= p;
  if (product != IntPoly::q_power(static_cast<std::size_t>(n)) - IntPoly(1))
    throw BrokenInvariant("product of cyclotomic factors differs from q^n - 1");
}

const IntPoly& CyclotomicContext::phi(int e) const {
  auto it = std::find(divisors_.begin(), divisors_.end(), e);
  if (it == divisors_.end())
    throw InvalidArgument(std::to_string(e) + " does not divide " + std::to_string(n_));
  return phis_[static_cast<std::size_t>(it - divisors_.begin())];
}

IntPoly cyclotomic(int e) { return CyclotomicContext(e).phi(e); }

}  // namespace kn
