#include "kncrystal/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "kncrystal/error.hpp"

namespace kn {

int Weight::sum() const { return std::accumulate(coords.begin(), coords.end(), 0); }

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(coords[k]);
  }
  return s + ")";
}

Weight operator-(const Weight& w) {
  Weight out = w;
  for (int& c : out.coords) c = -c;
  return out;
}

const char* to_string(KnCondition c) {
  switch (c) {
    case KnCondition::shape: return "shape";
    case KnCondition::alphabet: return "alphabet";
    case KnCondition::row_order: return "row order";
    case KnCondition::column_order: return "column order";
    case KnCondition::column_pair: return "column i/ī condition";
    case KnCondition::adjacent_columns: return "adjacent column condition";
  }
  return "?";
}

namespace {

// 1-based row of x in a strictly increasing column, 0 if absent.
int row_of(std::span<const Letter> column, Letter x) {
  auto it = std::find(column.begin(), column.end(), x);
  return it == column.end() ? 0 : static_cast<int>(it - column.begin()) + 1;
}

std::optional<std::string> column_pair_violation(std::span<const Letter> column) {
  const int h = static_cast<int>(column.size());
  for (int p = 1; p <= h; ++p) {
    const Letter x = column[static_cast<std::size_t>(p - 1)];
    if (x.is_barred()) continue;
    const int bar_row = row_of(column, Letter::barred(x.index()));
    if (bar_row == 0) continue;
    const int q = h - bar_row + 1;
    if (p + q > x.index()) {
      std::ostringstream os;
      os << x.index() << " in row " << p << " and " << Letter::barred(x.index()).pretty()
         << " in row " << bar_row << ": p+q=" << p + q << " > " << x.index();
      return os.str();
    }
  }
  return std::nullopt;
}

bool strictly_increasing(std::span<const Letter> column) {
  return std::adjacent_find(column.begin(), column.end(),
                            [](Letter a, Letter b) { return !(a < b); }) == column.end();
}

}  // namespace

bool column_admissible(std::span<const Letter> column) {
  return strictly_increasing(column) && !column_pair_violation(column);
}

std::optional<std::string> adjacent_violation(std::span<const Letter> left,
                                              std::span<const Letter> right, int m) {
  auto offends = [](int p, int q, int r, int s, int i, int j) {
    return p && q && r && s && p <= q && q < r && r <= s && (q - p) + (s - r) >= j - i;
  };
  for (int i = 1; i <= m; ++i) {
    const Letter li = Letter::unbarred(i), bi = Letter::barred(i);
    const int p = row_of(left, li);
    if (p == 0) continue;
    for (int j = i; j <= m; ++j) {
      const Letter lj = Letter::unbarred(j), bj = Letter::barred(j);
      // i on the left; j, j̄, ī on the right.
      int q = row_of(right, lj), r = row_of(right, bj), s = row_of(right, bi);
      if (offends(p, q, r, s, i, j)) {
        std::ostringstream os;
        os << "i=" << i << " (left row " << p << "), j=" << j << " / j̄ / ī in right rows " << q
           << "," << r << "," << s;
        return os.str();
      }
      // i, j, j̄ on the left; ī on the right.
      q = row_of(left, lj);
      r = row_of(left, bj);
      s = row_of(right, bi);
      if (offends(p, q, r, s, i, j)) {
        std::ostringstream os;
        os << "i=" << i << ", j=" << j << " / j̄ in left rows " << p << "," << q << "," << r
           << ", ī in right row " << s;
        return os.str();
      }
    }
  }
  return std::nullopt;
}

std::optional<KnViolation> find_kn_violation(const Partition& shape, const Rows& rows, int m) {
  if (m < 1 || shape.length() > m)
    return KnViolation{KnCondition::alphabet, 0, "need 1 <= l(shape) <= m"};
  if (static_cast<int>(rows.size()) != shape.length())
    return KnViolation{KnCondition::shape, 0, "row count differs from shape"};
  for (int i = 1; i <= shape.length(); ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != shape.part(i))
      return KnViolation{KnCondition::shape, 0, "row " + std::to_string(i) + " has wrong length"};
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].fits(m))
        return KnViolation{KnCondition::alphabet, static_cast<int>(c) + 1,
                           "letter " + row[c].to_string() + " outside rank " + std::to_string(m)};
      if (c > 0 && row[c] < row[c - 1])
        return KnViolation{KnCondition::row_order, static_cast<int>(c) + 1,
                           "row " + std::to_string(i) + " decreases"};
    }
  }
  const Partition conj = shape.conjugate();
  std::vector<std::vector<Letter>> cols(static_cast<std::size_t>(conj.length()));
  for (int c = 1; c <= conj.length(); ++c)
    for (int r = 1; r <= conj.part(c); ++r)
      cols[static_cast<std::size_t>(c - 1)].push_back(
          rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]);

  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (!strictly_increasing(cols[c]))
      return KnViolation{KnCondition::column_order, static_cast<int>(c) + 1,
                         "column does not strictly increase"};
    if (auto why = column_pair_violation(cols[c]))
      return KnViolation{KnCondition::column_pair, static_cast<int>(c) + 1, *why};
  }
  for (std::size_t c = 0; c + 1 < cols.size(); ++c)
    if (auto why = adjacent_violation(cols[c], cols[c + 1], m))
      return KnViolation{KnCondition::adjacent_columns, static_cast<int>(c) + 1, *why};
  return std::nullopt;
}

InvalidTableau::InvalidTableau(KnViolation v)
    : std::invalid_argument(std::string("not a KN tableau (") + kn::to_string(v.condition) +
                            (v.column ? ", column " + std::to_string(v.column) : std::string()) +
                            "): " + v.detail),
      violation_(std::move(v)) {}

KNTableau::KNTableau(Partition shape, int m, Rows rows)
    : shape_(std::move(shape)), m_(m), rows_(std::move(rows)) {
  if (auto v = find_kn_violation(shape_, rows_, m_)) throw InvalidTableau(*v);
}

KNTableau KNTableau::highest_weight(const Partition& shape, int m) {
  Rows rows;
  for (int i = 1; i <= shape.length(); ++i)
    rows.emplace_back(static_cast<std::size_t>(shape.part(i)), Letter::unbarred(i));
  return KNTableau(shape, m, std::move(rows));
}

KNTableau KNTableau::from_json(const nlohmann::ordered_json& j, int m) {
  try {
    Partition shape(j.at("shape").get<std::vector<int>>());
    Rows rows;
    for (const auto& row : j.at("rows")) {
      std::vector<Letter>& out = rows.emplace_back();
      for (const auto& cell : row) out.push_back(parse_letter(cell.get<std::string>()));
    }
    return KNTableau(std::move(shape), m, std::move(rows));
  } catch (const nlohmann::ordered_json::exception& e) {
    throw InvalidArgument(std::string("malformed tableau JSON: ") + e.what());
  }
}

std::vector<Letter> KNTableau::column(int col) const {
  std::vector<Letter> out;
  for (int r = 1; r <= shape_.length() && shape_.part(r) >= col; ++r)
    out.push_back(at({r, col}));
  return out;
}

Weight KNTableau::weight() const {
  Weight w{std::vector<int>(static_cast<std::size_t>(m_), 0)};
  for (const auto& row : rows_)
    for (Letter x : row) w.coords[static_cast<std::size_t>(x.index() - 1)] += x.is_barred() ? -1 : 1;
  return w;
}

KNTableau KNTableau::with_entry(Cell c, Letter x) const {
  Rows rows = rows_;
  rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = x;
  KNTableau out(Unchecked{}, shape_, m_, std::move(rows));
  assert(!find_kn_violation(out.shape_, out.rows_, out.m_));
  return out;
}

nlohmann::ordered_json KNTableau::to_json() const {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (Letter x : row) r.push_back(x.to_string());
    rows.push_back(std::move(r));
  }
  nlohmann::ordered_json j;
  j["shape"] = shape_.parts();
  j["rows"] = std::move(rows);
  return j;
}

std::strong_ordering operator<=>(const KNTableau& a, const KNTableau& b) {
  if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
  if (auto c = a.m_ <=> b.m_; c != 0) return c;
  for (std::size_t r = 0; r < a.rows_.size(); ++r)
    for (std::size_t k = 0; k < a.rows_[r].size(); ++k)
      if (auto c = a.rows_[r][k] <=> b.rows_[r][k]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string pretty(const KNTableau& t) {
  std::string s;
  for (const auto& row : t.rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) s += ' ';
      s += row[k].pretty();
    }
    s += '\n';
  }
  return s;
}

}  // namespace kn

std::size_t std::hash<kn::KNTableau>::operator()(const kn::KNTableau& t) const noexcept {
  std::size_t h = static_cast<std::size_t>(t.rank());
  for (const auto& row : t.rows()) {
    h = h * 1000003u + row.size();
    for (kn::Letter x : row) h = h * 131u + static_cast<std::size_t>(x.code() + 64);
  }
  return h;
}
