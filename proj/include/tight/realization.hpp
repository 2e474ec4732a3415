#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "tight/perm.hpp"
#include "tight/presentation.hpp"
#include "tight/word.hpp"

namespace tight {

/// A concrete permutation representation of a two-generator group.
///
/// Regular realizations (the usual case: coset enumeration over the trivial
/// subgroup, quotients, mixes) act on the group elements themselves, with
/// point 0 the identity and point x the element w with 0^w = x. For those
/// the order is the degree. Non-regular realizations compute their order by
/// closure on construction.
class Realization {
 public:
  Realization() = default;
  /// `regular` asserts that the action is regular; it is checked for
  /// transitivity. Otherwise the order is computed by closure, which throws
  /// BudgetExceeded past `closure_limit` elements.
  Realization(Perm s1, Perm s2, bool regular, std::optional<Presentation> source = std::nullopt,
              std::size_t closure_limit = kDefaultClosureLimit);

  static constexpr std::size_t kDefaultClosureLimit = 1'000'000;

  std::size_t degree() const { return gens_[0].degree(); }
  /// gen is 1 or 2.
  const Perm& gen(int i) const { return gens_[i - 1]; }
  const Perm& gen_inverse(int i) const { return inverses_[i - 1]; }
  std::uint64_t order() const { return order_; }
  std::array<std::uint64_t, 2> gen_orders() const { return gen_orders_; }
  bool is_regular() const { return regular_; }
  const std::optional<Presentation>& source() const { return source_; }

  /// Image of point x under the word.
  Point trace(Point x, const Word& w) const;
  Perm evaluate(const Word& w) const;
  /// True when the word acts as the identity permutation.
  bool satisfies(const Word& relator) const;
  bool satisfies_all(const Presentation& pres) const;

 private:
  std::array<Perm, 2> gens_;
  std::array<Perm, 2> inverses_;
  std::uint64_t order_ = 1;
  std::array<std::uint64_t, 2> gen_orders_{1, 1};
  bool regular_ = false;
  std::optional<Presentation> source_;
};

/// Regular form of any realization (its right action on its own elements),
/// built by breadth-first closure. Regular inputs are returned unchanged.
Realization to_regular(const Realization& g, std::size_t closure_limit = Realization::kDefaultClosureLimit);

}  // namespace tight
