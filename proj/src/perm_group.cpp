#include "tight/perm_group.hpp"

#include <numeric>
#include <string>

#include "tight/coset_enumeration.hpp"
#include "tight/error.hpp"

namespace tight {

namespace {

const Realization& regular_form(const Realization& g, Realization& storage) {
  if (g.is_regular()) return g;
  storage = to_regular(g);
  return storage;
}

// Image of point x under right multiplication by t s^e t^-1, where t is
// the other generator.
Point conjugate_point(const Realization& g, int gen, std::uint64_t e, Point x) {
  const int other = 3 - gen;
  x = g.gen(other)(x);
  for (std::uint64_t i = 0; i < e; ++i) x = g.gen(gen)(x);
  return g.gen_inverse(other)(x);
}

// Multiplier a with t s^e t^-1 = s^(a e), or -1 when the conjugate is not a
// power of s^e. `powers` holds 0^(s^k).
long conjugation_multiplier(const Realization& g, int gen, std::uint64_t e,
                            const std::vector<Point>& powers) {
  const Point y = conjugate_point(g, gen, e, 0);
  const std::uint64_t n = powers.size();
  for (std::uint64_t k = 0; k * e < n; ++k) {
    if (powers[k * e] == y) return static_cast<long>(k);
  }
  return -1;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace

std::uint64_t generator_order(const Realization& g, int gen) { return g.gen_orders()[gen - 1]; }

std::vector<Point> cyclic_points(const Realization& g, int gen) {
  Realization storage;
  const Realization& r = regular_form(g, storage);
  std::vector<Point> out{0};
  for (Point x = r.gen(gen)(0); x != 0; x = r.gen(gen)(x)) out.push_back(x);
  return out;
}

bool is_normal_cyclic(const Realization& g, int gen, std::uint64_t e) {
  Realization storage;
  const Realization& r = regular_form(g, storage);
  const std::uint64_t n = generator_order(r, gen);
  e = std::gcd(e, n);
  if (e == 0) return false;
  // In a finite group it suffices that conjugation by the other generator
  // maps s^e into <s^e>; conjugation by s itself is trivial.
  return conjugation_multiplier(r, gen, e, cyclic_points(r, gen)) >= 0;
}

CoreInfo cyclic_core(const Realization& g, int gen) {
  Realization storage;
  const Realization& r = regular_form(g, storage);
  const std::uint64_t n = generator_order(r, gen);
  const std::vector<Point> powers = cyclic_points(r, gen);
  for (std::uint64_t e : divisors(n)) {
    const long a = conjugation_multiplier(r, gen, e, powers);
    if (a >= 0) {
      const std::uint64_t m = n / e;
      return {e, m == 1 ? 0 : static_cast<std::uint64_t>(a) % m};
    }
  }
  return {n, 0};
}

Realization quotient_by_blocks(const Realization& g, int gen, std::uint64_t e) {
  Realization storage;
  const Realization& r = regular_form(g, storage);
  if (!is_normal_cyclic(r, gen, e)) {
    throw Error(ErrorKind::NotNormal, "<s" + std::to_string(gen) + "^" + std::to_string(e) +
                                          "> is not normal");
  }
  const Perm x = r.gen(gen).pow(static_cast<long>(std::gcd(e, generator_order(r, gen))));
  // Blocks are the cycles of right multiplication by s^e, numbered in
  // breadth-first order from the block of the identity.
  const std::size_t n = r.degree();
  std::vector<std::int64_t> block(n, -1);
  std::vector<Point> rep;
  auto open_block = [&](Point start) {
    const auto id = static_cast<std::int64_t>(rep.size());
    rep.push_back(start);
    for (Point y = start; block[y] < 0; y = x(y)) block[y] = id;
  };
  open_block(0);
  std::vector<Point> img1;
  std::vector<Point> img2;
  for (std::size_t i = 0; i < rep.size(); ++i) {
    for (int k = 1; k <= 2; ++k) {
      const Point y = r.gen(k)(rep[i]);
      if (block[y] < 0) open_block(y);
      (k == 1 ? img1 : img2).push_back(static_cast<Point>(block[y]));
    }
  }
  return Realization(Perm(std::move(img1)), Perm(std::move(img2)), true);
}

Realization quotient_by_cyclic(const Realization& g, int gen, std::uint64_t e) {
  if (!g.source()) return quotient_by_blocks(g, gen, e);
  if (!is_normal_cyclic(g, gen, e)) {
    throw Error(ErrorKind::NotNormal, "<s" + std::to_string(gen) + "^" + std::to_string(e) +
                                          "> is not normal");
  }
  const Presentation q = g.source()->with_relator(Word::power(gen, static_cast<long>(e)));
  return realize(q, g.order() + 64);
}

bool covers(const Presentation& pres, const Realization& target) {
  return target.satisfies_all(pres);
}

bool covers(const Realization& source, const Realization& target) {
  Realization s_storage;
  Realization t_storage;
  const Realization& s = regular_form(source, s_storage);
  const Realization& t = regular_form(target, t_storage);
  if (t.order() > s.order() || s.order() % t.order() != 0) return false;
  std::vector<std::int64_t> phi(s.degree(), -1);
  std::vector<Point> stack{0};
  phi[0] = 0;
  while (!stack.empty()) {
    const Point x = stack.back();
    stack.pop_back();
    for (int k = 1; k <= 2; ++k) {
      const Point y = s.gen(k)(x);
      const auto image = static_cast<std::int64_t>(t.gen(k)(static_cast<Point>(phi[x])));
      if (phi[y] < 0) {
        phi[y] = image;
        stack.push_back(y);
      } else if (phi[y] != image) {
        return false;
      }
    }
  }
  return true;
}

bool mutually_cover(const Realization& a, const Realization& b) {
  return a.order() == b.order() && covers(a, b) && covers(b, a);
}

Realization mix(const Realization& g1, const Realization& g2) {
  Realization s1_storage;
  Realization s2_storage;
  const Realization& a = regular_form(g1, s1_storage);
  const Realization& b = regular_form(g2, s2_storage);
  const std::size_t n2 = b.degree();
  const std::size_t cells = a.degree() * n2;
  if (cells > (std::size_t{1} << 31)) {
    throw Error(ErrorKind::BudgetExceeded, "mix of groups of orders " + std::to_string(a.order()) +
                                               " and " + std::to_string(b.order()) + " is too large");
  }
  std::vector<std::int32_t> index(cells, -1);
  std::vector<std::pair<Point, Point>> points{{0, 0}};
  index[0] = 0;
  std::vector<Point> img1;
  std::vector<Point> img2;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int k = 1; k <= 2; ++k) {
      const Point x = a.gen(k)(points[i].first);
      const Point y = b.gen(k)(points[i].second);
      std::int32_t& slot = index[static_cast<std::size_t>(x) * n2 + y];
      if (slot < 0) {
        slot = static_cast<std::int32_t>(points.size());
        points.emplace_back(x, y);
      }
      (k == 1 ? img1 : img2).push_back(static_cast<Point>(slot));
    }
  }
  return Realization(Perm(std::move(img1)), Perm(std::move(img2)), true);
}

Presentation comix(const Presentation& p1, const Presentation& p2) {
  std::vector<Word> rels = p1.relators();
  const std::vector<Word> more = p2.relators();
  rels.insert(rels.end(), more.begin(), more.end());
  return Presentation::plain(std::gcd(p1.declared_p(), p2.declared_p()),
                             std::gcd(p1.declared_q(), p2.declared_q()), std::move(rels));
}

bool is_orientably_regular(const Realization& g) {
  Realization storage;
  const Realization& r = regular_form(g, storage);
  std::vector<std::int64_t> psi(r.degree(), -1);
  std::vector<Point> stack{0};
  psi[0] = 0;
  while (!stack.empty()) {
    const Point x = stack.back();
    stack.pop_back();
    for (int k = 1; k <= 2; ++k) {
      const Point y = r.gen(k)(x);
      const auto image = static_cast<std::int64_t>(r.gen_inverse(k)(static_cast<Point>(psi[x])));
      if (psi[y] < 0) {
        psi[y] = image;
        stack.push_back(y);
      } else if (psi[y] != image) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace tight
