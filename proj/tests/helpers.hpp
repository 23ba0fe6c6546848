#pragma once

#include <initializer_list>
#include <vector>

#include "kncrystal/intpoly.hpp"
#include "kncrystal/tableau.hpp"

namespace kn::test {

/// Tableau from signed letter codes: {{1,3},{-3,-3},{-2,-1}}.
inline KNTableau tab(std::vector<int> shape, int m, std::initializer_list<std::initializer_list<int>> rows) {
  Rows r;
  for (const auto& row : rows) {
    auto& out = r.emplace_back();
    for (int code : row) out.push_back(Letter::from_code(code));
  }
  return KNTableau(Partition(std::move(shape)), m, std::move(r));
}

inline Rows raw_rows(std::initializer_list<std::initializer_list<int>> rows) {
  Rows r;
  for (const auto& row : rows) {
    auto& out = r.emplace_back();
    for (int code : row) out.push_back(Letter::from_code(code));
  }
  return r;
}

inline std::vector<Letter> word(std::initializer_list<int> codes) {
  std::vector<Letter> w;
  for (int c : codes) w.push_back(Letter::from_code(c));
  return w;
}

/// Polynomial from ascending integer coefficients.
inline IntPoly poly(std::initializer_list<long long> coeffs) {
  std::vector<BigInt> v;
  for (long long c : coeffs) v.emplace_back(c);
  return IntPoly(std::move(v));
}

inline Weight wt(std::initializer_list<int> coords) { return Weight{std::vector<int>(coords)}; }

}  // namespace kn::test
