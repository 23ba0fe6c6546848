#include <doctest.h>

#include <string>

#include "dot_fixture.hpp"
#include "helpers.hpp"
#include "kncrystal/crystal.hpp"
#include "kncrystal/enumerate.hpp"
#include "kncrystal/error.hpp"

using namespace kn;
using kn::test::tab;
using kn::test::word;
using kn::test::wt;

namespace {

// Signature by repeated cancellation of adjacent (+, −) pairs in the
// reduced sign string; returns the positions left uncancelled.
Signature bracket_by_cancellation(const Word& w, int i, int m) {
  std::vector<std::pair<std::size_t, int>> signs;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const bool minus = f_letter(w[k], i, m).has_value();
    const bool plus = e_letter(w[k], i, m).has_value();
    if (minus) signs.emplace_back(k, -1);
    if (plus) signs.emplace_back(k, +1);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < signs.size(); ++k) {
      if (signs[k].second == +1 && signs[k + 1].second == -1) {
        signs.erase(signs.begin() + static_cast<long>(k), signs.begin() + static_cast<long>(k) + 2);
        changed = true;
        break;
      }
    }
  }
  Signature s;
  for (auto [pos, sign] : signs) (sign < 0 ? s.free_minus : s.free_plus).push_back(pos);
  return s;
}

}  // namespace

TEST_CASE("signature rule on the bracketing example") {
  const Word w = word({1, -2, -1, 2, -2, 1});
  const Signature s = bracket(w, 1, 2);
  CHECK(s.free_minus == std::vector<std::size_t>{0, 1});
  CHECK(s.free_plus.empty());
  const auto out = f_word(w, 1, 2);
  REQUIRE(out);
  CHECK(*out == word({1, -1, -1, 2, -2, 1}));
  CHECK(e_word(*out, 1, 2) == w);
}

TEST_CASE("stack bracketing agrees with repeated cancellation on every short word") {
  for (int m = 1; m <= 2; ++m) {
    const auto letters = alphabet(m);
    const std::size_t base = letters.size();
    for (std::size_t len = 0; len <= 5; ++len) {
      std::size_t total = 1;
      for (std::size_t k = 0; k < len; ++k) total *= base;
      for (std::size_t code = 0; code < total; ++code) {
        Word w;
        for (std::size_t c = code, k = 0; k < len; ++k, c /= base) w.push_back(letters[c % base]);
        for (int i = 1; i <= m; ++i) {
          const Signature a = bracket(w, i, m);
          const Signature b = bracket_by_cancellation(w, i, m);
          REQUIRE(a.free_minus == b.free_minus);
          REQUIRE(a.free_plus == b.free_plus);
        }
      }
    }
  }
}

TEST_CASE("standard crystal chain") {
  for (int m = 1; m <= 4; ++m) {
    CHECK(f_word(word({m}), m, m) == word({-m}));
    CHECK_FALSE(f_word(word({-1}), 1, m));
    CHECK_FALSE(e_word(word({1}), 1, m));
    // Walking 1 → 2 → … → m → m̄ → … → 1̄ with labels 1..m..1.
    Word w = word({1});
    for (int k = 1; k <= m; ++k) w = *f_word(w, k, m);
    for (int k = m - 1; k >= 1; --k) w = *f_word(w, k, m);
    CHECK(w == word({-1}));
  }
}

TEST_CASE("phi and epsilon") {
  CHECK(phi(word({1}), 1, 2) == 1);
  CHECK(epsilon(word({1}), 1, 2) == 0);
  CHECK(phi(word({}), 1, 2) == 0);
  const Word w = word({2, 1, -2, -1, 1});
  for (int i = 1; i <= 2; ++i)
    CHECK(phi(w, i, 2) - epsilon(w, i, 2) == coroot_pairing(weight_of(w, 2), i));
}

TEST_CASE("crystal index must lie in 1..m") {
  CHECK_THROWS_AS(f_word(word({1}), 0, 2), InvalidArgument);
  CHECK_THROWS_AS(e_word(word({1}), 3, 2), InvalidArgument);
  CHECK_THROWS_AS(f_tab(tab({1}, 2, {{1}}), 3), InvalidArgument);
}

TEST_CASE("column reading word") {
  const KNTableau t = tab({2, 2, 2}, 3, {{1, 3}, {-3, -3}, {-2, -1}});
  CHECK(column_reading_word(t) == word({-2, -3, 1, -1, -3, 3}));
  CHECK(column_reading_word(tab({3}, 3, {{1, 2, -1}})) == word({1, 2, -1}));
  CHECK(column_reading_word(tab({1, 1, 1}, 3, {{1}, {3}, {-3}})) == word({-3, 3, 1}));
}

TEST_CASE("crystal operators on a tableau") {
  const KNTableau t = tab({2, 2, 2}, 3, {{1, 3}, {-3, -3}, {-2, -1}});
  const auto f2 = f_tab(t, 2);
  REQUIRE(f2);
  CHECK(*f2 == tab({2, 2, 2}, 3, {{1, 3}, {-3, -2}, {-2, -1}}));
  CHECK(e_tab(*f2, 2) == t);
  CHECK(t.weight() == wt({0, -1, -1}));
}

TEST_CASE("highest-weight tableau is killed by every e_i") {
  for (int m = 2; m <= 4; ++m) {
    const KNTableau top = KNTableau::highest_weight(Partition({2, 1}), m);
    for (int i = 1; i <= m; ++i) CHECK_FALSE(e_tab(top, i));
  }
}

TEST_CASE("crystal graph of shape (2,1), m=2 matches the golden fixture") {
  const TableauSet set = enumerate_by_crystal(Partition({2, 1}), 2);
  const auto edges = crystal_edges(set.members());
  const auto ours = kn::test::parse_dot(to_dot(set.members(), edges));
  const auto golden = kn::test::parse_dot(kn::test::read_file(std::string(KN_FIXTURE_DIR) + "/c2_shape21_crystal.dot"));
  CHECK(golden.nodes.size() == 16);
  CHECK(ours.nodes == golden.nodes);
  CHECK(ours.edges == golden.edges);
}

TEST_CASE("reflections and rotation on weights") {
  CHECK(reflect(wt({1, 2, 3}), 1) == wt({2, 1, 3}));
  CHECK(reflect(wt({1, 2, 3}), 3) == wt({1, 2, -3}));
  CHECK(rotate_weight(wt({1, 2, 3})) == wt({-3, 1, 2}));
  CHECK(coroot_pairing(wt({2, 1}), 1) == 1);
  CHECK(coroot_pairing(wt({2, 1}), 2) == 1);
  CHECK(simple_root(2, 2) == wt({0, 2}));
  CHECK(simple_root(1, 3) == wt({1, -1, 0}));
}

TEST_CASE("sigma_i with zero pairing is the identity") {
  const KNTableau t = tab({2, 1}, 2, {{1, -1}, {2}});  // weight (0, 1)
  CHECK(coroot_pairing(t.weight(), 1) == -1);
  const KNTableau u = tab({1}, 2, {{2}});  // weight (0,1): pairing with α_1 is −1
  const KNTableau v = tab({2, 1}, 3, {{1, 2}, {3}});  // weight (1,1,1)
  CHECK(sigma_i(v, 1) == v);
  CHECK(sigma_i(v, 2) == v);
  CHECK(sigma_i(sigma_i(u, 1), 1) == u);
}

TEST_CASE("sigma produces the two small orbits for shape (2,1), m=3") {
  const KNTableau a = tab({2, 1}, 3, {{1, -2}, {3}});
  const KNTableau b = tab({2, 1}, 3, {{2, -1}, {-3}});
  CHECK(sigma(a) == b);
  CHECK(sigma(b) == a);
  const KNTableau c = tab({2, 1}, 3, {{1, 3}, {-2}});
  const KNTableau d = tab({2, 1}, 3, {{2, -3}, {-1}});
  CHECK(orbit(c, sigma_action()) == std::vector<KNTableau>{c, d});
}

TEST_CASE("orbit census") {
  const TableauSet s3 = enumerate_by_crystal(Partition({2, 1}), 3);
  OrbitCensus expected;
  expected.sizes = {{2, 2}, {6, 10}};
  CHECK(orbit_census(s3.members(), sigma_action()) == expected);

  const TableauSet s4 = enumerate_by_crystal(Partition({2, 1}), 4);
  const OrbitCensus c4 = orbit_census(s4.members(), sigma_action());
  CHECK(c4.sizes.size() == 1);
  CHECK(c4.sizes.begin()->first == 8);
  CHECK(c4.element_count() == s4.size());

  const KNTableau one = KNTableau::highest_weight(Partition({1}), 1);
  const std::vector<KNTableau> single{one};
  OrbitCensus trivial;
  trivial.sizes = {{1, 1}};
  CHECK(orbit_census(single, [](const KNTableau& t) { return t; }) == trivial);
}

TEST_CASE("orbits start at their least element and are ordered") {
  const TableauSet s = enumerate_by_crystal(Partition({2, 1}), 3);
  const auto orbs = orbits(s.members(), sigma_action());
  for (std::size_t k = 0; k < orbs.size(); ++k) {
    for (const KNTableau& t : orbs[k]) CHECK_FALSE(t < orbs[k].front());
    if (k > 0) CHECK(orbs[k - 1].front() < orbs[k].front());
  }
}

TEST_CASE("broken actions are reported") {
  const TableauSet s = enumerate_by_crystal(Partition({1}), 2);
  const KNTableau stranger = tab({1}, 3, {{3}});
  CHECK_THROWS_AS(orbit_census(s.members(), [&](const KNTableau&) { return stranger; }), BrokenInvariant);
  const KNTableau first = s.members().front();
  CHECK_THROWS_AS(orbit_census(s.members(), [&](const KNTableau&) { return first; }), BrokenInvariant);
}

TEST_CASE("sigma composition order") {
  // Reverse composition: σ_1 applied first, σ_m last.
  const Action reversed = [](const KNTableau& t) {
    KNTableau out = t;
    for (int i = 1; i <= t.rank(); ++i) out = sigma_i(out, i);
    return out;
  };
  for (int m = 2; m <= 4; ++m) {
    const TableauSet s = enumerate_by_crystal(Partition({2, 1}), m);
    bool ours_rotates = true;
    bool reversed_rotates = true;
    for (const KNTableau& t : s.members()) {
      ours_rotates = ours_rotates && sigma(t).weight() == rotate_weight(t.weight());
      reversed_rotates = reversed_rotates && reversed(t).weight() == rotate_weight(t.weight());
    }
    CHECK(ours_rotates);
    CHECK_FALSE(reversed_rotates);
  }
  const TableauSet s3 = enumerate_by_crystal(Partition({2, 1}), 3);
  MESSAGE("sigma_m first: census " << orbit_census(s3.members(), sigma_action()).to_string()
                                   << "; sigma_1 first: census " << orbit_census(s3.members(), reversed).to_string());
}
