#include "kncrystal/qpoly.hpp"

#include <algorithm>
#include <numeric>

#include "kncrystal/error.hpp"

namespace kn {

long pwr_tab(const KNTableau& t) {
  const int m = t.rank();
  long total = 0;
  for (const auto& row : t.rows())
    for (Letter x : row) total += x.is_barred() ? 2 * m - x.index() : x.index() - 1;
  return total;
}

long pwr_wt(const Weight& chi, int n, int m) {
  if (chi.rank() != m) throw InvalidArgument("weight has " + std::to_string(chi.rank()) + " coordinates, m=" + std::to_string(m));
  const int deficit = n - chi.sum();
  if (deficit % 2 != 0 || deficit < 0 || deficit / 2 > n)
    throw InvalidArgument("weight " + chi.to_string() + " impossible for " + std::to_string(n) +
                          " boxes (n - sum must be even and in [0, 2n])");
  long total = 0;
  for (int i = 1; i <= m; ++i) total += static_cast<long>(i - 1) * chi.coords[static_cast<std::size_t>(i - 1)];
  return total + static_cast<long>(2 * m - 1) * (deficit / 2);
}

IntPoly x_poly(const TableauSet& s) {
  std::vector<BigInt> coeffs;
  for (const KNTableau& t : s.members()) {
    const auto d = static_cast<std::size_t>(pwr_tab(t));
    if (coeffs.size() <= d) coeffs.resize(d + 1);
    coeffs[d] += 1;
  }
  return IntPoly(std::move(coeffs));
}

namespace {

void require_rank(const Partition& shape, int m) {
  if (m < 1 || shape.length() > m)
    throw InvalidArgument("need 1 <= l(" + shape.to_string() + ") <= m=" + std::to_string(m));
}

}  // namespace

BigInt hook_content_count(const Partition& shape, int m) {
  require_rank(shape, m);
  BigInt num = 1, den = 1;
  for (Cell c : shape.cells()) {
    num *= 2 * m + shape.r_value(c);
    den *= shape.hook(c);
  }
  if (num % den != 0)
    throw InexactDivision("hook-content product " + num.str() + "/" + den.str() + " is not an integer");
  return num / den;
}

IntPoly f_sp(const Partition& shape, int m) {
  require_rank(shape, m);
  std::vector<int> top, bottom;
  for (Cell c : shape.cells()) {
    top.push_back(2 * m + shape.r_value(c));
    bottom.push_back(shape.hook(c));
  }
  std::sort(top.begin(), top.end());
  std::sort(bottom.begin(), bottom.end());
  std::vector<int> top_left, bottom_left;
  std::set_difference(top.begin(), top.end(), bottom.begin(), bottom.end(), std::back_inserter(top_left));
  std::set_difference(bottom.begin(), bottom.end(), top.begin(), top.end(), std::back_inserter(bottom_left));
  IntPoly num(1), den(1);
  for (int k : top_left) num *= q_bracket(k);
  for (int k : bottom_left) den *= q_bracket(k);
  return div_exact(num, den);
}

StaircaseParts::StaircaseParts(const Partition& shape, int m) {
  require_rank(shape, m);
  for (int i = 1; i <= m; ++i) mu_.push_back(shape.part(i) + m - i);
}

PolyMatrix staircase_matrix(const StaircaseParts& mu) {
  const int m = mu.rank();
  PolyMatrix a(static_cast<std::size_t>(m), std::vector<IntPoly>(static_cast<std::size_t>(m)));
  for (int i = 1; i <= m; ++i) {
    const int step = mu.parts()[static_cast<std::size_t>(i - 1)] + 1;
    for (int j = 1; j <= m; ++j)
      a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          IntPoly::q_power(static_cast<std::size_t>((j - 1) * step)) -
          IntPoly::q_power(static_cast<std::size_t>((2 * m - j) * step));
  }
  return a;
}

IntPoly determinant_poly(const Partition& shape, int m) {
  const IntPoly num = determinant(staircase_matrix(StaircaseParts(shape, m)));
  const IntPoly den = determinant(staircase_matrix(StaircaseParts(Partition(), m)));
  return div_exact(num, den);
}

IntPoly closed_form_det(const StaircaseParts& mu) {
  const auto& p = mu.parts();
  const std::size_t m = p.size();
  std::size_t shift = 0;
  IntPoly out(1);
  for (std::size_t i = 0; i < m; ++i) {
    shift += i * static_cast<std::size_t>(p[i] + 1);
    out *= q_bracket(p[i] + 1);
    for (std::size_t j = i + 1; j < m; ++j) out *= q_bracket(p[i] - p[j]) * q_bracket(p[i] + p[j] + 2);
  }
  return out.shifted(shift);
}

IntPoly closed_form_denominator(int m) {
  if (m < 1) throw InvalidArgument("m must be at least 1");
  std::size_t shift = 0;
  IntPoly out(1);
  for (int i = 1; i <= m; ++i) {
    shift += static_cast<std::size_t>((i - 1) * (m - i + 1));
    out *= q_factorial(2 * i - 1);
  }
  return out.shifted(shift);
}

IntPoly residue_at_root(const IntPoly& p, int n, int d) {
  if (n < 1) throw InvalidArgument("root order must be positive");
  const int dd = ((d % n) + n) % n;
  const int e = n / std::gcd(dd, n);
  return divmod(p, cyclotomic(e)).remainder;
}

std::optional<BigInt> try_eval_at_root(const IntPoly& p, int n, int d) {
  const IntPoly r = residue_at_root(p, n, d);
  if (r.degree() > 0) return std::nullopt;
  return r.coeff(0);
}

BigInt eval_at_root(const IntPoly& p, int n, int d) {
  if (auto v = try_eval_at_root(p, n, d)) return *v;
  throw InexactDivision("value at a primitive root is not an integer; residue " +
                        residue_at_root(p, n, d).to_string());
}

}  // namespace kn
