#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tight/coset_enumeration.hpp"
#include "tight/error.hpp"
#include "tight/families.hpp"
#include "tight/perm_group.hpp"

using namespace tight;

namespace {

Presentation lam(int p, int q, long i1, long j1, long i2, long j2) {
  return gp_presentation({p, q, i1, j1, i2, j2, {}});
}

Realization rlam(int p, int q, long i1, long j1, long i2, long j2) { return realize(lam(p, q, i1, j1, i2, j2)); }

std::uint64_t gcd_order_product(const Realization& a, const Realization& b) { return a.order() * b.order(); }

}  // namespace

TEST_CASE("element orders") {
  CHECK(element_order(Perm::identity(5)) == 1);
  std::vector<Point> shift(9);
  for (Point b = 0; b < 9; ++b) shift[b] = (b + 1) % 9;
  CHECK(element_order(Perm(shift)) == 9);
  const auto odd = explicit_representation({ExplicitFamily::Odd, 3, 2, 1, 1});
  CHECK(element_order(odd.realization.gen(1)) == 6);
  CHECK(element_order(Perm({1, 0, 3, 4, 2})) == 6);
}

TEST_CASE("cyclic cores of the smallest atomic group") {
  const Realization g = rlam(6, 9, 3, 4, -3, 2);
  const CoreInfo c2 = cyclic_core(g, 2);
  CHECK(c2.exponent == 3);
  CHECK(c2.multiplier % 3 == 2);
  CHECK(cyclic_core(g, 1).exponent == 6);
  CHECK(is_normal_cyclic(g, 2, 3));
  CHECK_FALSE(is_normal_cyclic(g, 2, 1));
  CHECK(cyclic_points(g, 2).size() == 9);
}

TEST_CASE("abelian group has trivial cores") {
  const Realization g = realize(parse_presentation("rel s1^2\nrel s2^2\nrel (s1 s2)^2"));
  CHECK(g.order() == 4);
  CHECK(cyclic_core(g, 1).exponent == 1);
  CHECK(cyclic_core(g, 2).exponent == 1);
}

TEST_CASE("quotient by a cyclic core") {
  const Realization g = rlam(6, 9, 3, 4, -3, 2);
  const Realization h = quotient_by_cyclic(g, 2, 3);
  CHECK(h.order() == 18);
  CHECK(mutually_cover(h, rlam(6, 3, 3, 1, -3, -1)));
  CHECK(covers(g, h));
  CHECK(mutually_cover(quotient_by_cyclic(g, 2, 9), g));
  CHECK(mutually_cover(quotient_by_blocks(g, 2, 3), h));
  CHECK_THROWS_AS(quotient_by_cyclic(g, 2, 1), Error);
  try {
    quotient_by_cyclic(g, 1, 2);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNormal);
  }
}

TEST_CASE("full collapse of a normal generator") {
  const Realization g = realize(parse_presentation("rel s1^2\nrel s2^2\nrel (s1 s2)^2"));
  REQUIRE(is_normal_cyclic(g, 2, 1));
  const Realization h = quotient_by_cyclic(g, 2, 1);
  CHECK(h.order() == g.order() / generator_order(g, 2));
  CHECK(generator_order(h, 2) == 1);
}

TEST_CASE("covers") {
  const Realization g = rlam(6, 9, 3, 4, -3, 2);
  const Realization small = rlam(6, 3, 3, 1, -3, -1);
  CHECK(covers(lam(6, 9, 3, 4, -3, 2), small));
  CHECK(covers(g, small));
  CHECK_FALSE(covers(small, g));
  const Realization trivial = realize(Presentation::plain(1, 1));
  CHECK(trivial.order() == 1);
  CHECK(covers(g, trivial));
  CHECK(covers(lam(6, 9, 3, 4, -3, 2), trivial));
  CHECK_FALSE(mutually_cover(g, rlam(6, 9, 3, 7, -3, 5)));
}

TEST_CASE("cover of the explicit representation") {
  const auto odd = explicit_representation({ExplicitFamily::Odd, 3, 2, 1, 1});
  const Realization g = realize(odd.presentation);
  CHECK(covers(g, odd.realization));
  CHECK(covers(odd.realization, g));
}

TEST_CASE("mix and comix") {
  const Realization g = rlam(6, 9, 3, 4, -3, 2);
  CHECK(mix(g, g).order() == g.order());
  CHECK(mutually_cover(mix(g, g), g));
  const Presentation p = lam(6, 9, 3, 4, -3, 2);
  CHECK(realize(comix(p, p)).order() == 54);

  const Realization e = rlam(6, 9, 3, 7, -3, 5);
  const Realization m = mix(g, e);
  const Realization c = realize(comix(p, lam(6, 9, 3, 7, -3, 5)));
  CHECK(m.order() * c.order() == gcd_order_product(g, e));
  CHECK(covers(m, g));
  CHECK(covers(m, e));
}

TEST_CASE("mix of an odd central group with a regular one") {
  const Construction g1 = build({FamilyTag::OddCentralLt, 3, 1, 2, 1, 1, 0, 0});
  const Presentation g2 = lam(2, 2, -1, 1, 1, -1);
  const Realization m = mix(realize(g1), realize(g2));
  CHECK(m.order() == 108);
  CHECK(m.gen_orders() == std::array<std::uint64_t, 2>{6, 18});
  CHECK(realize(comix(g1.parts[0], g2)).order() == 2);
}

TEST_CASE("comix of the central mix factors") {
  const Construction c = build({FamilyTag::EvenCentralMix, 0, 5, 0, 0, 1, 0, 0});
  REQUIRE(c.parts.size() == 2);
  CHECK(realize(comix(c.parts[0], c.parts[1])).order() == 128);
}

TEST_CASE("orientable regularity") {
  CHECK(is_orientably_regular(rlam(6, 3, 3, 1, -3, -1)));
  CHECK(is_orientably_regular(realize(parse_presentation("rel s1^4\nrel s2^3\nrel (s1 s2)^2"))));
  CHECK_FALSE(is_orientably_regular(rlam(6, 9, 3, 4, -3, 2)));
}

TEST_CASE("core multiplier relation") {
  for (const Realization& g : {rlam(6, 9, 3, 4, -3, 2), rlam(8, 32, 3, 25, -3, 23), rlam(6, 18, 3, 7, -3, 5)}) {
    for (int gen = 1; gen <= 2; ++gen) {
      const CoreInfo c = cyclic_core(g, gen);
      const std::uint64_t n = generator_order(g, gen);
      const Perm s = g.gen(gen).pow(static_cast<long>(c.exponent));
      const Perm t = g.gen(3 - gen);
      const Perm conj = t.inverse() * s * t;
      if (n / c.exponent == 1) continue;
      CHECK(conj == s.pow(static_cast<long>(c.multiplier)));
      CHECK((c.multiplier * c.multiplier) % (n / c.exponent) == 1 % (n / c.exponent));
    }
  }
}
