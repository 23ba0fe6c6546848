#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace kn {

/// A box of a Young diagram, 1-based (row, column).
struct Cell {
  int row = 1;
  int col = 1;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Integer partition λ_1 ≥ λ_2 ≥ ... > 0. The empty partition is valid.
class Partition {
public:
  Partition() = default;
  /// Throws InvalidArgument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// "2,1" -> (2,1); "" or "0" -> ∅.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// λ_i with 1-based i; 0 past the last part.
  int part(int i) const;

  Partition conjugate() const;
  bool contains(Cell c) const;
  /// Cells in row-major order.
  std::vector<Cell> cells() const;

  /// h(i,j) = λ_i + λ^t_j − i − j + 1. Throws InvalidArgument outside λ.
  int hook(Cell c) const;
  /// λ_i+λ_j−i−j+2 below the diagonal, i+j−λ^t_i−λ^t_j on or above it.
  int r_value(Cell c) const;
  /// κ(λ) = Σ (i−1) λ_i.
  int kappa() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  void require_inside(Cell c) const;

  std::vector<int> parts_;
};

}  // namespace kn
