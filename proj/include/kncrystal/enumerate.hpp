#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include <json.hpp>

#include "kncrystal/partition.hpp"
#include "kncrystal/tableau.hpp"

namespace kn {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// SP(λ, 2m): a sorted, duplicate-free set of KN tableaux with a weight index.
class TableauSet {
public:
  /// Sorts and deduplicates; every member must have the given shape and rank.
  TableauSet(Partition shape, int m, std::vector<KNTableau> members);

  const Partition& shape() const { return shape_; }
  int rank() const { return m_; }
  std::span<const KNTableau> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const KNTableau& t) const;
  /// Position in members(); throws InvalidArgument if absent.
  std::size_t index_of(const KNTableau& t) const;
  const std::map<Weight, std::size_t>& weight_index() const { return weights_; }

  friend bool operator==(const TableauSet& a, const TableauSet& b) {
    return a.shape_ == b.shape_ && a.m_ == b.m_ && a.members_ == b.members_;
  }

private:
  Partition shape_;
  int m_;
  std::vector<KNTableau> members_;
  std::map<Weight, std::size_t> weights_;
};

/// Closure of the highest-weight tableau under every f_i.
/// Throws InvalidArgument if ℓ(λ) > m, CapExceeded past `cap` members.
TableauSet enumerate_by_crystal(const Partition& shape, int m,
                                std::size_t cap = kDefaultEnumerationCap);

/// Direct search over fillings, column by column, keeping admissible
/// columns whose neighbours pass the row and two-column conditions.
TableauSet enumerate_by_filter(const Partition& shape, int m,
                               std::size_t cap = kDefaultEnumerationCap);

std::map<Weight, std::size_t> weight_multiset(const TableauSet& s);

/// {"shape":…, "m":…, "count":N, "weights":[{"chi":[…],"count":k},…]}
nlohmann::ordered_json to_json(const TableauSet& s);

}  // namespace kn
