#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "tight/word.hpp"

namespace tight {

/// Coset enumeration engine for two-generator presentations.
///
/// HLT strategy: each live coset in turn has every relator scanned and
/// filled from it. When the table is full, a lookahead pass (scanning
/// without defining) looks for coincidences and the table is compacted
/// before giving up. Coincidences use union-find merging with a queue.
///
/// The engine also supports a seeded mode used by the parameter sweep: a
/// fixed number of cosets is created up front with one generator column
/// filled in, and only deductions are made (no new cosets). In that mode any
/// coincidence means the seeded table is inconsistent with the relators.
class ToddCoxeter {
 public:
  using Coset = std::int32_t;
  static constexpr Coset kUndefined = -1;

  enum class Status { Complete, Overflow, Incomplete, Collapsed };
  /// A word in column encoding (see Letter::column).
  using Rel = std::vector<std::uint8_t>;

  /// Relators and subgroup generators as words. Empty words are ignored.
  ToddCoxeter(std::span<const Word> relators, std::span<const Word> subgroup_gens,
              std::size_t max_cosets);
  /// Same, with words already in column encoding and freely reduced.
  ToddCoxeter(std::vector<Rel> relators, std::vector<Rel> subgroup_gens, std::size_t max_cosets);

  /// Replaces relators and subgroup generators, keeping allocated buffers.
  /// Intended for sweeps that run many small enumerations.
  void reconfigure(const std::vector<Rel>& relators, const std::vector<Rel>& subgroup_gens,
                   std::size_t max_cosets);

  /// Full HLT enumeration from a single coset.
  Status run();

  /// Seeded mode: creates n cosets on which generator `gen` acts as the
  /// n-cycle c -> c + 1, then repeatedly scans relators (and the subgroup
  /// generators from coset 0) without defining cosets until nothing changes.
  /// Returns Collapsed on the first coincidence, Complete when every entry is
  /// determined and consistent, Incomplete otherwise.
  Status run_seeded_cycle(int gen, std::size_t n);

  /// One preset entry for run_seeded: coset `from` maps to `to` under the
  /// letter in column `col` (the inverse entry is set as well).
  struct Seed {
    Coset from;
    int col;
    Coset to;
  };
  /// General seeded mode on n cosets with the given preset entries.
  Status run_seeded(std::size_t n, std::span<const Seed> seeds);

  /// Number of live cosets (valid after Complete).
  std::size_t live_cosets() const;
  /// Compacted table, rows indexed by coset, columns s1, s1^-1, s2, s2^-1.
  /// Valid after Complete; coset 0 is the subgroup.
  std::vector<std::array<Coset, 4>> table() const;
  /// Total cosets ever defined, for diagnostics.
  std::size_t total_defined() const { return total_defined_; }

 private:
  Status saturate_seeded(std::size_t n);

  Coset& entry(Coset c, int col) { return table_[static_cast<std::size_t>(c) * 4 + col]; }
  Coset entry(Coset c, int col) const { return table_[static_cast<std::size_t>(c) * 4 + col]; }
  bool live(Coset c) const { return parent_[c] == c; }

  Coset new_coset();
  void reset(std::size_t n_initial);
  Coset rep(Coset c);
  void merge(Coset a, Coset b);
  void coincidence(Coset a, Coset b);
  // Returns false if the table was full and a definition was needed.
  bool scan_and_fill(Coset c, const Rel& r);
  // Scan without definitions; returns true if anything changed.
  bool scan(Coset c, const Rel& r);
  bool lookahead();
  void compact();
  bool complete_table() const;

  std::vector<Rel> relators_;
  std::vector<Rel> subgroup_;
  std::size_t max_cosets_;

  std::vector<Coset> table_;
  std::vector<Coset> parent_;
  std::vector<Coset> queue_;
  std::size_t allocated_ = 0;
  std::size_t dead_ = 0;
  std::size_t total_defined_ = 0;
  bool stop_on_coincidence_ = false;
  bool collapsed_ = false;
  std::vector<std::uint8_t> closed_;
};

/// Converts a word to the engine's column encoding.
std::vector<std::uint8_t> to_columns(const Word& w);

}  // namespace tight
