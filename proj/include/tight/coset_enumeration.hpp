#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "tight/presentation.hpp"
#include "tight/realization.hpp"
#include "tight/word.hpp"

namespace tight {

/// A completed coset table. Columns are s1, s1^-1, s2, s2^-1; coset 0 is
/// the subgroup itself.
struct CosetTable {
  std::vector<std::array<std::int32_t, 4>> rows;
  std::size_t live = 0;
  bool complete = false;

  std::size_t size() const { return rows.size(); }
};

/// Todd-Coxeter enumeration of the cosets of <subgroup_gens> (trivial when
/// empty). Throws Overflow when more than max_cosets live cosets are needed.
CosetTable enumerate(const Presentation& pres, std::span<const Word> subgroup_gens,
                     std::size_t max_cosets);

/// 4 p q + 64 for the declared exponents.
std::size_t default_max_cosets(const Presentation& pres);

/// The regular realization of the presented group: enumeration over the
/// trivial subgroup. Throws Overflow.
Realization realize(const Presentation& pres, std::size_t max_cosets);
Realization realize(const Presentation& pres);

/// Families that come with explicit permutations on Z_n.
enum class ExplicitFamily { Odd, Even8, Even2Pow };

struct ExplicitSpec {
  ExplicitFamily family = ExplicitFamily::Odd;
  int m = 3;      // Odd only: odd prime
  int beta = 2;
  int k = 1;      // Odd only: 1 <= k <= m - 1
  int sign = 1;   // Even8 / Even2Pow: +1 or -1
};

struct ExplicitRepresentation {
  Realization realization;
  /// The family presentation whose relators the permutations satisfy.
  Presentation presentation;
};

/// Permutations pi1, pi2 on Z_{m^beta} or Z_{2^beta} given by closed
/// formulas, with pi2 : b -> b + 1. For Odd(m, beta, k) they satisfy the
/// family presentation with k replaced by -2k; the sign -1 variants of the
/// power-of-two families are the inverse permutations and satisfy the
/// enantiomorphic presentation. Throws BadParameters for out-of-range
/// parameters and Internal if a relator fails.
ExplicitRepresentation explicit_representation(const ExplicitSpec& spec);

bool is_odd_prime(long m);

}  // namespace tight
