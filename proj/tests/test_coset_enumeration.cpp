#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "tight/coset_enumeration.hpp"
#include "tight/error.hpp"

using namespace tight;

namespace {

Presentation lam(int p, int q, long i1, long j1, long i2, long j2) {
  return gp_presentation({p, q, i1, j1, i2, j2, {}});
}

// Brute-force order of <a, b> by repeated multiplication of all known elements.
std::size_t brute_order(const Perm& a, const Perm& b) {
  std::vector<Perm> elems{Perm::identity(a.degree())};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Perm* g : {&a, &b}) {
      Perm x = elems[i] * *g;
      if (std::find(elems.begin(), elems.end(), x) == elems.end()) elems.push_back(x);
    }
  }
  return elems.size();
}

}  // namespace

TEST_CASE("enumerate small tables") {
  CHECK(enumerate(lam(2, 1, 1, 1, 1, 1), {}, 16).live == 2);
  CHECK(enumerate(lam(2, 2, 1, 1, 1, 1), {}, 16).live == 4);
  const std::vector<Word> h{Word{s1}};
  CHECK(enumerate(lam(6, 9, 3, 4, -3, 2), h, 64).live == 9);
}

TEST_CASE("enumerate reports overflow instead of truncating") {
  CHECK_THROWS_AS(enumerate(lam(6, 9, 3, 4, -3, 2), {}, 20), Error);
  try {
    enumerate(lam(6, 9, 3, 4, -3, 2), {}, 20);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
}

TEST_CASE("completed table invariants") {
  const CosetTable t = enumerate(lam(6, 9, 3, 4, -3, 2), {}, 400);
  for (std::size_t c = 0; c < t.size(); ++c) {
    for (int col = 0; col < 4; ++col) {
      const int d = t.rows[c][col];
      REQUIRE(d >= 0);
      CHECK(t.rows[d][col ^ 1] == static_cast<int>(c));
    }
  }
}

TEST_CASE("realize known groups") {
  Realization g = realize(lam(6, 9, 3, 4, -3, 2));
  CHECK(g.order() == 54);
  CHECK(g.gen_orders() == std::array<std::uint64_t, 2>{6, 9});
  CHECK(brute_order(g.gen(1), g.gen(2)) == 54);

  Realization e = realize(lam(8, 32, 3, 25, -3, 23));
  CHECK(e.order() == 256);
  CHECK(e.gen_orders() == std::array<std::uint64_t, 2>{8, 32});

  Realization r = realize(lam(6, 3, 3, 1, -3, -1));
  CHECK(r.order() == 18);
  CHECK(r.gen_orders() == std::array<std::uint64_t, 2>{6, 3});
}

TEST_CASE("cube rotation group") {
  Realization g = realize(Presentation::plain(4, 3), 200);
  CHECK(g.order() == 24);
  CHECK(brute_order(g.gen(1), g.gen(2)) == 24);
}

TEST_CASE("larger groups through lookahead and compaction") {
  // Rotation group of the icosahedron, order 60, with a tight bound.
  Realization g = realize(Presentation::plain(5, 3), 80);
  CHECK(g.order() == 60);
  // Map {4,4}_(3,0): the translation s1 s2^-1 has order 3; order 36.
  Presentation p = Presentation::plain(4, 4, {parse_word("(s1 s2^-1)^3")});
  Realization h = realize(p, 40);
  CHECK(h.order() == 36);
  CHECK(h.order() == brute_order(h.gen(1), h.gen(2)));
}

TEST_CASE("relator order does not change the result") {
  const Presentation base = lam(12, 18, 3, 7, -3, 5);
  std::vector<Word> rels = base.relators();
  std::mt19937 rng(7);
  std::size_t expected = 0;
  try {
    expected = realize(base, 5000).order();
  } catch (const Error&) {
    expected = 0;
  }
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(rels.begin(), rels.end(), rng);
    Presentation shuffled = Presentation::plain(12, 18, rels);
    std::size_t got = 0;
    try {
      got = realize(shuffled, 5000).order();
    } catch (const Error&) {
      got = 0;
    }
    CHECK(got == expected);
  }
}

TEST_CASE("index over <s1> times order of s1 bounds the group order") {
  for (auto pres : {lam(6, 9, 3, 4, -3, 2), lam(6, 3, 3, 1, -3, -1), lam(8, 32, 3, 25, -3, 23)}) {
    const std::vector<Word> h{Word{s1}};
    const std::size_t idx = enumerate(pres, h, 2000).live;
    Realization g = realize(pres);
    CHECK(idx * g.gen_orders()[0] >= g.order());
    if (g.gen_orders()[0] == static_cast<std::uint64_t>(pres.declared_p())) {
      CHECK(idx * g.gen_orders()[0] == g.order());
    }
  }
}

TEST_CASE("explicit representations") {
  SUBCASE("odd") {
    ExplicitRepresentation x = explicit_representation({ExplicitFamily::Odd, 3, 2, 1, 1});
    CHECK(x.realization.gen(1)(1) == 8);
    CHECK(x.realization.gen(1)(2) == 1);
    CHECK(element_order(x.realization.gen(1)) == 6);
    CHECK(element_order(x.realization.gen(2)) == 9);
    CHECK(x.presentation == lam(6, 9, 3, 4, -3, 2));
  }
  SUBCASE("even8") {
    ExplicitRepresentation x = explicit_representation({ExplicitFamily::Even8, 0, 5, 0, 1});
    Perm sq = x.realization.gen(1).pow(2);
    for (Point b = 0; b < 32; ++b) CHECK(sq(b) == (25 * b) % 32);
    CHECK(element_order(x.realization.gen(1)) == 8);
    CHECK(x.presentation == lam(8, 32, 3, 25, -3, 23));
  }
  SUBCASE("even2pow") {
    ExplicitRepresentation x = explicit_representation({ExplicitFamily::Even2Pow, 0, 5, 0, 1});
    Perm p8 = x.realization.gen(1).pow(8);
    for (Point b = 0; b < 32; ++b) CHECK(p8(b) == (b % 2 == 0 ? b : (b + 16) % 32));
  }
  SUBCASE("negative signs") {
    for (auto fam : {ExplicitFamily::Even8, ExplicitFamily::Even2Pow}) {
      for (int beta : {5, 6}) {
        CHECK_NOTHROW(explicit_representation({fam, 0, beta, 0, -1}));
      }
    }
  }
  SUBCASE("ranges") {
    CHECK_THROWS_AS(explicit_representation({ExplicitFamily::Odd, 9, 2, 1, 1}), Error);
    CHECK_THROWS_AS(explicit_representation({ExplicitFamily::Odd, 3, 1, 1, 1}), Error);
    CHECK_THROWS_AS(explicit_representation({ExplicitFamily::Odd, 3, 2, 3, 1}), Error);
    CHECK_THROWS_AS(explicit_representation({ExplicitFamily::Even8, 0, 4, 0, 1}), Error);
  }
}
