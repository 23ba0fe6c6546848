#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "kncrystal/letter.hpp"
#include "kncrystal/partition.hpp"

namespace kn {

/// Weight (χ_1, ..., χ_m) with χ_i = #i − #ī.
struct Weight {
  std::vector<int> coords;

  int rank() const { return static_cast<int>(coords.size()); }
  int sum() const;
  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

Weight operator-(const Weight& w);

using Rows = std::vector<std::vector<Letter>>;

/// Which KN condition a filling breaks.
enum class KnCondition {
  shape,             // rows do not match the partition
  alphabet,          // letter outside 1..m, m̄..1̄, or ℓ(λ) > m
  row_order,         // rows must weakly increase
  column_order,      // columns must strictly increase
  column_pair,       // i at p-th from top and ī at q-th from bottom need p+q ≤ i
  adjacent_columns,  // (q−p)+(s−r) < j−i for the two-column configurations
};

struct KnViolation {
  KnCondition condition;
  int column = 0;  // 1-based; 0 when not column specific
  std::string detail;
};

const char* to_string(KnCondition c);

/// Strictly increasing column satisfying the i/ī condition.
bool column_admissible(std::span<const Letter> column);

/// Two-column configuration check between adjacent columns (top to bottom).
/// Returns a description of the first offending configuration.
std::optional<std::string> adjacent_violation(std::span<const Letter> left,
                                              std::span<const Letter> right,
                                              int m);

/// Pure predicate over a raw filling; nullopt means KN-valid.
std::optional<KnViolation> find_kn_violation(const Partition& shape, const Rows& rows, int m);

/// Thrown by the checked KNTableau constructor.
class InvalidTableau : public std::invalid_argument {
public:
  InvalidTableau(KnViolation v);
  const KnViolation& violation() const { return violation_; }

private:
  KnViolation violation_;
};

/// A Kashiwara–Nakashima tableau of shape λ over the rank-m alphabet.
class KNTableau {
public:
  /// Validates all KN conditions; throws InvalidTableau with the witness.
  KNTableau(Partition shape, int m, Rows rows);

  /// Row i filled with the letter i.
  static KNTableau highest_weight(const Partition& shape, int m);

  /// Accepts {"shape":[...],"rows":[["1","-3"],...]}.
  static KNTableau from_json(const nlohmann::ordered_json& j, int m);

  const Partition& shape() const { return shape_; }
  int rank() const { return m_; }
  const Rows& rows() const { return rows_; }
  Letter at(Cell c) const { return rows_[c.row - 1][c.col - 1]; }
  std::vector<Letter> column(int col) const;
  int box_count() const { return shape_.size(); }

  Weight weight() const;

  /// Same tableau with one entry replaced. Not re-validated: the caller is
  /// responsible for landing on a KN tableau (checked by assert in debug).
  KNTableau with_entry(Cell c, Letter x) const;

  nlohmann::ordered_json to_json() const;
  std::string serialize() const { return to_json().dump(); }

  friend bool operator==(const KNTableau&, const KNTableau&) = default;
  /// Shape, then rank, then row-major letters in the alphabet order.
  friend std::strong_ordering operator<=>(const KNTableau& a, const KNTableau& b);

private:
  struct Unchecked {};
  KNTableau(Unchecked, Partition shape, int m, Rows rows)
      : shape_(std::move(shape)), m_(m), rows_(std::move(rows)) {}

  Partition shape_;
  int m_ = 1;
  Rows rows_;
};

/// Multi-line rendering with barred letters as "3̄".
std::string pretty(const KNTableau& t);

}  // namespace kn

template <>
struct std::hash<kn::KNTableau> {
  std::size_t operator()(const kn::KNTableau& t) const noexcept;
};
