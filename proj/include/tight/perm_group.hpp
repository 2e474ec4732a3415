#pragma once

#include <cstdint>
#include <vector>

#include "tight/perm.hpp"
#include "tight/presentation.hpp"
#include "tight/realization.hpp"

namespace tight {

/// Core of a cyclic subgroup <s> in G: the core is <s^exponent>, and the
/// other generator t satisfies t s^exponent t^-1 = s^(multiplier * exponent),
/// with multiplier taken mod (order of s) / exponent.
struct CoreInfo {
  std::uint64_t exponent = 1;
  std::uint64_t multiplier = 0;
  friend bool operator==(const CoreInfo&, const CoreInfo&) = default;
};

/// Points 0, 0^s, 0^(s^2), ... of the regular realization, one per power of
/// the generator; index k holds the element s^k.
std::vector<Point> cyclic_points(const Realization& g, int gen);

/// Smallest divisor e of the order of s_gen with <s_gen^e> normal in G.
CoreInfo cyclic_core(const Realization& g, int gen);

/// True when <s_gen^e> is normal in G.
bool is_normal_cyclic(const Realization& g, int gen, std::uint64_t e);

/// Regular realization of G / <s_gen^e>. Uses coset enumeration with the
/// added relator when G has a source presentation, and the block system of
/// <s_gen^e> otherwise. Throws NotNormal when <s_gen^e> is not normal.
Realization quotient_by_cyclic(const Realization& g, int gen, std::uint64_t e);
/// Block-system construction only; exposed for cross-validation.
Realization quotient_by_blocks(const Realization& g, int gen, std::uint64_t e);

/// True when s_i -> l_i extends to a homomorphism from the group presented
/// by `pres` onto <l_1, l_2>: every relator holds in `target`.
bool covers(const Presentation& pres, const Realization& target);
/// True when s_i -> l_i extends to a homomorphism between the two concrete
/// groups, checked on the Cayley graph of `source`.
bool covers(const Realization& source, const Realization& target);
bool mutually_cover(const Realization& a, const Realization& b);

/// Diagonal subgroup <(s1, s1'), (s2, s2')> of G1 x G2, realized regularly
/// as the orbit of (1, 1) in the product of the regular actions.
Realization mix(const Realization& g1, const Realization& g2);

/// All relators of both presentations over the shared generators; the
/// declared exponents become the gcds.
Presentation comix(const Presentation& p1, const Presentation& p2);

/// True when s_i -> s_i^-1 extends to an automorphism of G.
bool is_orientably_regular(const Realization& g);

/// Order of the generator in G (lcm of cycle lengths).
std::uint64_t generator_order(const Realization& g, int gen);

}  // namespace tight
