#include "kncrystal/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "kncrystal/crystal.hpp"
#include "kncrystal/error.hpp"

namespace kn {

namespace {

void require_rank(const Partition& shape, int m) {
  if (m < 1) throw InvalidArgument("m must be at least 1");
  if (shape.length() > m)
    throw InvalidArgument("shape " + shape.to_string() + " has more than m=" + std::to_string(m) +
                          " rows");
}

void check_cap(std::size_t size, std::size_t cap) {
  if (size > cap)
    throw CapExceeded("enumeration exceeded the cap of " + std::to_string(cap) + " tableaux");
}

}  // namespace

TableauSet::TableauSet(Partition shape, int m, std::vector<KNTableau> members)
    : shape_(std::move(shape)), m_(m), members_(std::move(members)) {
  for (const KNTableau& t : members_)
    if (t.shape() != shape_ || t.rank() != m_)
      throw InvalidArgument("tableau set member with foreign shape or rank");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (const KNTableau& t : members_) ++weights_[t.weight()];
}

bool TableauSet::contains(const KNTableau& t) const {
  return std::binary_search(members_.begin(), members_.end(), t);
}

std::size_t TableauSet::index_of(const KNTableau& t) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), t);
  if (it == members_.end() || !(*it == t)) throw InvalidArgument("tableau not in set");
  return static_cast<std::size_t>(it - members_.begin());
}

TableauSet enumerate_by_crystal(const Partition& shape, int m, std::size_t cap) {
  require_rank(shape, m);
  const KNTableau top = KNTableau::highest_weight(shape, m);
  Weight expected{std::vector<int>(static_cast<std::size_t>(m), 0)};
  for (int i = 1; i <= shape.length(); ++i) expected.coords[static_cast<std::size_t>(i - 1)] = shape.part(i);
  if (top.weight() != expected) throw BrokenInvariant("highest-weight tableau has weight != shape");
  for (int i = 1; i <= m; ++i)
    if (e_tab(top, i)) throw BrokenInvariant("e_" + std::to_string(i) + " does not kill the highest-weight tableau");

  std::unordered_set<KNTableau> seen{top};
  std::deque<KNTableau> frontier{top};
  while (!frontier.empty()) {
    KNTableau t = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 1; i <= m; ++i) {
      auto next = f_tab(t, i);
      if (next && seen.insert(*next).second) {
        check_cap(seen.size(), cap);
        frontier.push_back(std::move(*next));
      }
    }
  }
  return TableauSet(shape, m, std::vector<KNTableau>(seen.begin(), seen.end()));
}

namespace {

using Column = std::vector<Letter>;

// Strictly increasing columns of the given height satisfying the i/ī rule.
std::vector<Column> admissible_columns(int height, int m) {
  std::vector<Column> out;
  const std::vector<Letter> letters = alphabet(m);
  Column cur;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(cur.size()) == height) {
      if (column_admissible(cur)) out.push_back(cur);
      return;
    }
    for (std::size_t k = from; k < letters.size(); ++k) {
      cur.push_back(letters[k]);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

}  // namespace

TableauSet enumerate_by_filter(const Partition& shape, int m, std::size_t cap) {
  require_rank(shape, m);
  const Partition conj = shape.conjugate();
  std::vector<std::vector<Column>> by_height(static_cast<std::size_t>(m) + 1);
  for (int h = 1; h <= shape.length(); ++h) by_height[static_cast<std::size_t>(h)] = admissible_columns(h, m);

  std::vector<KNTableau> found;
  std::vector<const Column*> chosen;
  auto place = [&](auto&& self, int col) -> void {
    if (col > conj.length()) {
      Rows rows(static_cast<std::size_t>(shape.length()));
      for (const Column* c : chosen)
        for (std::size_t r = 0; r < c->size(); ++r) rows[r].push_back((*c)[r]);
      found.emplace_back(shape, m, std::move(rows));
      check_cap(found.size(), cap);
      return;
    }
    for (const Column& c : by_height[static_cast<std::size_t>(conj.part(col))]) {
      if (!chosen.empty()) {
        const Column& left = *chosen.back();
        bool rows_ok = true;
        for (std::size_t r = 0; r < c.size() && rows_ok; ++r) rows_ok = !(c[r] < left[r]);
        if (!rows_ok || adjacent_violation(left, c, m)) continue;
      }
      chosen.push_back(&c);
      self(self, col + 1);
      chosen.pop_back();
    }
  };
  place(place, 1);
  return TableauSet(shape, m, std::move(found));
}

std::map<Weight, std::size_t> weight_multiset(const TableauSet& s) { return s.weight_index(); }

nlohmann::ordered_json to_json(const TableauSet& s) {
  nlohmann::ordered_json weights = nlohmann::ordered_json::array();
  for (const auto& [chi, count] : s.weight_index())
    weights.push_back({{"chi", chi.coords}, {"count", count}});
  nlohmann::ordered_json j;
  j["shape"] = s.shape().parts();
  j["m"] = s.rank();
  j["count"] = s.size();
  j["weights"] = std::move(weights);
  return j;
}

}  // namespace kn
