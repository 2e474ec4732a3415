#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "tight/perm_group.hpp"
#include "tight/presentation.hpp"
#include "tight/realization.hpp"

namespace tight {

enum class Verdict { NotPolytopal, OrientablyRegular, Chiral };

const char* to_string(Verdict v);

struct ClassificationReport {
  std::array<std::uint64_t, 2> schlafli{0, 0};
  std::uint64_t order = 0;
  bool polytopal = false;
  bool tight = false;
  Verdict verdict = Verdict::NotPolytopal;
  std::array<CoreInfo, 2> cores;
  /// Present only for tight chiral groups.
  std::optional<bool> atomic;
};

/// <s1> and <s2> intersect trivially.
bool intersection_trivial(const Realization& g);
/// Trivial intersection and neither generator of order 1.
bool is_polytopal(const Realization& g);
/// Order equals the product of the generator orders.
bool is_tight(const Realization& g);
/// Tightness via the size of the product set <s1><s2>; for cross-checks.
bool is_tight_by_product_set(const Realization& g);

/// Realizes the presentation and classifies it. The regular/chiral test
/// checks whether every relator with inverted letters holds. Propagates
/// Overflow from the enumeration.
ClassificationReport classify(const Presentation& pres);
ClassificationReport classify(const Presentation& pres, std::size_t max_cosets);
/// Classification of a realization already at hand. Uses the relator test
/// when the realization carries its source presentation and the automorphism
/// test otherwise.
ClassificationReport classify(const Realization& g);

/// A tight chiral group is atomic when none of its quotients by a normal
/// <s1^p'> or <s2^q'> (p', q' proper divisors) is tight and chiral.
bool is_atomic(const Realization& g);

nlohmann::json to_json(const ClassificationReport& r);
/// Multi-line human-readable rendering.
std::string to_text(const ClassificationReport& r);

}  // namespace tight
