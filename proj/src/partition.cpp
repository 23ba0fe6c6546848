#include "kncrystal/partition.hpp"

#include <charconv>
#include <numeric>

#include "kncrystal/error.hpp"

namespace kn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw InvalidArgument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw InvalidArgument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty() || text == "0") return Partition();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(start, comma - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw InvalidArgument("bad partition \"" + std::string(text) + "\"");
    parts.push_back(v);
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition();
  for (int j = 1; j <= parts_.front(); ++j) {
    int h = 0;
    while (h < length() && parts_[static_cast<std::size_t>(h)] >= j) ++h;
    out.push_back(h);
  }
  return Partition(std::move(out));
}

bool Partition::contains(Cell c) const {
  return c.row >= 1 && c.row <= length() && c.col >= 1 && c.col <= part(c.row);
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
  return out;
}

void Partition::require_inside(Cell c) const {
  if (!contains(c))
    throw InvalidArgument("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                          ") outside shape " + to_string());
}

int Partition::hook(Cell c) const {
  require_inside(c);
  const Partition t = conjugate();
  return part(c.row) + t.part(c.col) - c.row - c.col + 1;
}

int Partition::r_value(Cell c) const {
  require_inside(c);
  const int i = c.row, j = c.col;
  if (i > j) return part(i) + part(j) - i - j + 2;
  const Partition t = conjugate();
  return i + j - t.part(i) - t.part(j);
}

int Partition::kappa() const {
  int k = 0;
  for (int i = 1; i <= length(); ++i) k += (i - 1) * part(i);
  return k;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s + ")";
}

}  // namespace kn
