#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tight/families.hpp"
#include "tight/presentation.hpp"

namespace tight {

struct SchlafliType {
  int p = 0;
  int q = 0;
  friend auto operator<=>(const SchlafliType&, const SchlafliType&) = default;
};

/// Whether some tight chiral polyhedron of this type exists: one of
///  (1) q odd, p an even divisor of 2q, and an odd prime m with m | p, m^2 | q;
///  (2) the same with p and q swapped;
///  (3) p, q even and an odd prime m with m | p, m^2 | q;
///  (4) the same with p and q swapped;
///  (5) 8 | p and 32 | q;  (6) 32 | p and 8 | q.
bool admissible(SchlafliType t);
/// Index 1..6 of the first condition that holds, 0 if none.
int admissible_condition(SchlafliType t);

/// A construction of a tight chiral group of a given type, with a readable
/// account of how it was assembled.
struct Witness {
  std::string description;
  Construction construction;
};

/// Witness following the case analysis of the existence proofs. Throws
/// NotAdmissible.
Witness witness_for(SchlafliType t);

struct Verification {
  bool verified = false;
  std::uint64_t order = 0;
  std::string reason;  // empty when verified
};

/// Realizes the witness and checks it is tight, chiral and of type t.
Verification verify(const Witness& w, SchlafliType t);

enum class Dedup { None, Enantiomorph, EnantiomorphAndDual };
Dedup parse_dedup(const std::string& s);
const char* to_string(Dedup d);

/// Parameter residues (i1, j1, i2, j2), canonical mod (p, q, p, q).
struct Tuple {
  long i1 = 0;
  long j1 = 0;
  long i2 = 0;
  long j2 = 0;
  friend auto operator<=>(const Tuple&, const Tuple&) = default;
};

Tuple enantiomorph_tuple(const Tuple& t, int p, int q);
/// Tuple of the dual, a type-{q,p} tuple.
Tuple dual_tuple(const Tuple& t);

/// Tuples realizing one group (under mutual covers).
struct SearchBucket {
  std::vector<Tuple> members;   // sorted
  Tuple representative;         // least member
  std::size_t enantiomorph = 0; // index of the bucket holding the enantiomorphic group
};

struct SearchResult {
  SchlafliType type;
  Dedup dedup = Dedup::None;
  std::vector<SearchBucket> buckets;   // sorted by representative
  std::uint64_t tuples_examined = 0;
  std::uint64_t full_enumerations = 0;
};

struct SearchOptions {
  Dedup dedup = Dedup::None;
  long budget = 600;  // largest p*q searched
  int jobs = 1;
};

/// Every tuple whose family presentation realizes a tight chiral group with
/// generator orders exactly (p, q). Throws BudgetExceeded when p*q exceeds
/// the budget.
SearchResult exhaustive_search(SchlafliType t, const SearchOptions& options = {});

/// Census of admissible types with 2pq <= max_flags, sorted by (p, q).
enum class CensusMode { Predicate, Verified };

struct CensusEntry {
  SchlafliType type;
  Witness witness;
  std::optional<Verification> verification;  // set in Verified mode
};

std::vector<CensusEntry> census(long max_flags, CensusMode mode, int jobs = 1);

nlohmann::json to_json(const CensusEntry& e);
nlohmann::json to_json(const std::vector<CensusEntry>& entries);
nlohmann::json to_json(const SearchResult& r);
/// Two-column table of types with p <= q, grouped by p.
std::string census_table(const std::vector<CensusEntry>& entries);

/// Types read from a CSV with header "p,q". Throws ParseError.
std::vector<SchlafliType> read_atlas_csv(const std::string& text);

struct AtlasComparison {
  std::vector<SchlafliType> missing_from_census;  // in atlas only
  std::vector<SchlafliType> extra_in_census;      // in census only
  bool equal() const { return missing_from_census.empty() && extra_in_census.empty(); }
};

AtlasComparison compare_with_atlas(const std::vector<CensusEntry>& entries,
                                   const std::vector<SchlafliType>& atlas);
nlohmann::json to_json(const AtlasComparison& c);

}  // namespace tight
