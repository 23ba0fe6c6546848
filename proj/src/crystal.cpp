#include "kncrystal/crystal.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "kncrystal/error.hpp"

namespace kn {

namespace {

void require_index(int i, int m) {
  if (m < 1 || i < 1 || i > m)
    throw InvalidArgument("crystal index " + std::to_string(i) + " outside 1.." + std::to_string(m));
}

// +1 for a letter e_i can act on, -1 for one f_i can act on, 0 otherwise.
int sign_of(Letter x, int i, int m) {
  if (i < m) {
    if (x == Letter::unbarred(i) || x == Letter::barred(i + 1)) return -1;
    if (x == Letter::barred(i) || x == Letter::unbarred(i + 1)) return +1;
    return 0;
  }
  if (x == Letter::unbarred(m)) return -1;
  if (x == Letter::barred(m)) return +1;
  return 0;
}

}  // namespace

std::optional<Letter> f_letter(Letter x, int i, int m) {
  require_index(i, m);
  if (i < m) {
    if (x == Letter::unbarred(i)) return Letter::unbarred(i + 1);
    if (x == Letter::barred(i + 1)) return Letter::barred(i);
    return std::nullopt;
  }
  if (x == Letter::unbarred(m)) return Letter::barred(m);
  return std::nullopt;
}

std::optional<Letter> e_letter(Letter x, int i, int m) {
  require_index(i, m);
  if (i < m) {
    if (x == Letter::unbarred(i + 1)) return Letter::unbarred(i);
    if (x == Letter::barred(i)) return Letter::barred(i + 1);
    return std::nullopt;
  }
  if (x == Letter::barred(m)) return Letter::unbarred(m);
  return std::nullopt;
}

int coroot_pairing(const Weight& chi, int i) {
  const int m = chi.rank();
  require_index(i, m);
  const auto k = static_cast<std::size_t>(i - 1);
  return i < m ? chi.coords[k] - chi.coords[k + 1] : chi.coords[k];
}

Weight reflect(const Weight& chi, int i) {
  const int m = chi.rank();
  require_index(i, m);
  Weight out = chi;
  const auto k = static_cast<std::size_t>(i - 1);
  if (i < m)
    std::swap(out.coords[k], out.coords[k + 1]);
  else
    out.coords[k] = -out.coords[k];
  return out;
}

Weight simple_root(int i, int m) {
  require_index(i, m);
  Weight a{std::vector<int>(static_cast<std::size_t>(m), 0)};
  const auto k = static_cast<std::size_t>(i - 1);
  if (i < m) {
    a.coords[k] = 1;
    a.coords[k + 1] = -1;
  } else {
    a.coords[k] = 2;
  }
  return a;
}

Weight rotate_weight(const Weight& chi) {
  Weight out = chi;
  if (chi.coords.empty()) return out;
  std::rotate(out.coords.rbegin(), out.coords.rbegin() + 1, out.coords.rend());
  out.coords.front() = -out.coords.front();
  return out;
}

Weight weight_of(std::span<const Letter> w, int m) {
  Weight out{std::vector<int>(static_cast<std::size_t>(m), 0)};
  for (Letter x : w) out.coords[static_cast<std::size_t>(x.index() - 1)] += x.is_barred() ? -1 : 1;
  return out;
}

Signature bracket(std::span<const Letter> w, int i, int m) {
  require_index(i, m);
  Signature sig;
  std::vector<std::size_t> open_plus;
  for (std::size_t k = 0; k < w.size(); ++k) {
    switch (sign_of(w[k], i, m)) {
      case +1: open_plus.push_back(k); break;
      case -1:
        if (open_plus.empty())
          sig.free_minus.push_back(k);
        else
          open_plus.pop_back();
        break;
      default: break;
    }
  }
  sig.free_plus = std::move(open_plus);
  return sig;
}

std::optional<Word> f_word(std::span<const Letter> w, int i, int m) {
  const Signature sig = bracket(w, i, m);
  if (sig.free_minus.empty()) return std::nullopt;
  Word out(w.begin(), w.end());
  const std::size_t k = sig.free_minus.back();
  out[k] = *f_letter(out[k], i, m);
  return out;
}

std::optional<Word> e_word(std::span<const Letter> w, int i, int m) {
  const Signature sig = bracket(w, i, m);
  if (sig.free_plus.empty()) return std::nullopt;
  Word out(w.begin(), w.end());
  const std::size_t k = sig.free_plus.front();
  out[k] = *e_letter(out[k], i, m);
  return out;
}

int phi(std::span<const Letter> w, int i, int m) {
  return static_cast<int>(bracket(w, i, m).free_minus.size());
}

int epsilon(std::span<const Letter> w, int i, int m) {
  return static_cast<int>(bracket(w, i, m).free_plus.size());
}

std::vector<Cell> reading_order(const Partition& shape) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(shape.size()));
  const Partition conj = shape.conjugate();
  for (int c = 1; c <= conj.length(); ++c)
    for (int r = conj.part(c); r >= 1; --r) out.push_back({r, c});
  return out;
}

Word column_reading_word(const KNTableau& t) {
  Word w;
  for (Cell c : reading_order(t.shape())) w.push_back(t.at(c));
  return w;
}

namespace {

template <bool Lower>
std::optional<KNTableau> act(const KNTableau& t, int i) {
  const int m = t.rank();
  const std::vector<Cell> cells = reading_order(t.shape());
  Word w;
  w.reserve(cells.size());
  for (Cell c : cells) w.push_back(t.at(c));
  const Signature sig = bracket(w, i, m);
  if constexpr (Lower) {
    if (sig.free_minus.empty()) return std::nullopt;
    const std::size_t k = sig.free_minus.back();
    return t.with_entry(cells[k], *f_letter(w[k], i, m));
  } else {
    if (sig.free_plus.empty()) return std::nullopt;
    const std::size_t k = sig.free_plus.front();
    return t.with_entry(cells[k], *e_letter(w[k], i, m));
  }
}

}  // namespace

std::optional<KNTableau> f_tab(const KNTableau& t, int i) { return act<true>(t, i); }
std::optional<KNTableau> e_tab(const KNTableau& t, int i) { return act<false>(t, i); }

KNTableau sigma_i(const KNTableau& t, int i) {
  const int k = coroot_pairing(t.weight(), i);
  KNTableau cur = t;
  for (int step = 0; step < std::abs(k); ++step) {
    auto next = k > 0 ? f_tab(cur, i) : e_tab(cur, i);
    if (!next)
      throw BrokenInvariant("sigma_" + std::to_string(i) + ": operator string ended after " +
                            std::to_string(step) + " of " + std::to_string(std::abs(k)) + " steps");
    cur = std::move(*next);
  }
  return cur;
}

KNTableau sigma(const KNTableau& t) {
  KNTableau cur = t;
  for (int i = t.rank(); i >= 1; --i) cur = sigma_i(cur, i);
  assert(cur.weight() == rotate_weight(t.weight()));
  return cur;
}

Action sigma_action() {
  return [](const KNTableau& t) { return sigma(t); };
}

std::size_t OrbitCensus::orbit_count() const {
  std::size_t n = 0;
  for (const auto& [size, count] : sizes) n += count;
  return n;
}

std::size_t OrbitCensus::element_count() const {
  std::size_t n = 0;
  for (const auto& [size, count] : sizes) n += size * count;
  return n;
}

std::size_t OrbitCensus::smallest() const { return sizes.empty() ? 0 : sizes.begin()->first; }

std::string OrbitCensus::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [size, count] : sizes) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(size) + ": " + std::to_string(count);
  }
  return s + "}";
}

std::vector<KNTableau> orbit(const KNTableau& t, const Action& action, std::size_t max_length) {
  std::vector<KNTableau> out{t};
  KNTableau cur = action(t);
  while (!(cur == t)) {
    if (out.size() >= max_length)
      throw BrokenInvariant("orbit did not close within " + std::to_string(max_length) + " steps");
    out.push_back(cur);
    cur = action(cur);
  }
  return out;
}

std::vector<std::vector<KNTableau>> orbits(std::span<const KNTableau> set, const Action& action) {
  std::unordered_map<KNTableau, std::size_t> index;
  index.reserve(set.size());
  for (std::size_t k = 0; k < set.size(); ++k) index.emplace(set[k], k);

  std::vector<std::size_t> order(set.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return set[a] < set[b]; });

  std::vector<bool> seen(set.size(), false);
  std::vector<std::vector<KNTableau>> out;
  for (std::size_t start : order) {
    if (seen[start]) continue;
    std::vector<KNTableau>& orb = out.emplace_back();
    std::size_t k = start;
    do {
      seen[k] = true;
      orb.push_back(set[k]);
      KNTableau next = action(set[k]);
      auto it = index.find(next);
      if (it == index.end()) throw BrokenInvariant("action leaves the set");
      k = it->second;
      if (seen[k] && k != start) throw BrokenInvariant("action is not a bijection on the set");
    } while (k != start);
  }
  return out;
}

OrbitCensus orbit_census(std::span<const KNTableau> set, const Action& action) {
  OrbitCensus census;
  for (const auto& orb : orbits(set, action)) ++census.sizes[orb.size()];
  return census;
}

std::vector<CrystalEdge> crystal_edges(std::span<const KNTableau> vertices) {
  std::unordered_map<KNTableau, std::size_t> index;
  for (std::size_t k = 0; k < vertices.size(); ++k) index.emplace(vertices[k], k);
  std::vector<CrystalEdge> edges;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    for (int i = 1; i <= vertices[k].rank(); ++i) {
      auto next = f_tab(vertices[k], i);
      if (!next) continue;
      auto it = index.find(*next);
      if (it == index.end()) throw BrokenInvariant("f_" + std::to_string(i) + " image missing from vertex set");
      edges.push_back({k, it->second, i});
    }
  }
  return edges;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(std::span<const KNTableau> vertices, std::span<const CrystalEdge> edges) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (std::size_t k = 0; k < vertices.size(); ++k)
    os << "  n" << k << " [label=\"" << dot_escape(vertices[k].serialize()) << "\"];\n";
  for (const CrystalEdge& e : edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.label << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace kn
