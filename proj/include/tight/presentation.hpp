#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tight/word.hpp"

namespace tight {

/// Parameters (p, q | i1, j1, i2, j2) of the two-relation family
///
///   <s1, s2 | s1^p = s2^q = (s1 s2)^2 = 1,
///             s2^-1 s1 = s1^i1 s2^j1,
///             s2 s1^-1 = s1^i2 s2^j2>
///
/// plus optional extra relators. Residues are canonical once passed through
/// canonical(): i1, i2 in [0, p) and j1, j2 in [0, q).
struct GpParams {
  int p = 0;
  int q = 0;
  long i1 = 0;
  long j1 = 0;
  long i2 = 0;
  long j2 = 0;
  std::vector<Word> extra_relators;

  GpParams canonical() const;
  friend bool operator==(const GpParams&, const GpParams&) = default;
};

/// Exponent e == -x (mod n) of least absolute value; ties resolve to the
/// negative representative. Used to keep relator words short.
long short_exponent(long x, long n);
long mod(long x, long n);

/// A two-generator presentation. It always contains s1^p, s2^q and
/// (s1 s2)^2; family presentations additionally carry the two family
/// relators, and any presentation may carry extra relators.
class Presentation {
 public:
  Presentation() = default;

  /// Family presentation; residues are canonicalised. Throws BadParameters
  /// when p or q is zero.
  static Presentation family(const GpParams& params);
  /// Standard three relators plus `extra` (freely reduced; standard ones
  /// are dropped from `extra`).
  static Presentation plain(int p, int q, std::vector<Word> extra = {});

  int declared_p() const { return p_; }
  int declared_q() const { return q_; }
  bool is_family() const { return family_.has_value(); }
  /// Family parameters (canonical) when this is a family presentation.
  std::optional<GpParams> params() const;
  const std::vector<Word>& extra_relators() const { return extra_; }

  /// Full relator list: s1^p, s2^q, (s1 s2)^2, [two family relators], extras.
  std::vector<Word> relators() const;

  /// Adds one relator (freely reduced). Keeps the family form.
  Presentation with_relator(const Word& w) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  struct Residues {
    long i1, j1, i2, j2;
    friend bool operator==(const Residues&, const Residues&) = default;
  };
  int p_ = 1;
  int q_ = 1;
  std::optional<Residues> family_;
  std::vector<Word> extra_;
};

/// Relators of the family in the order s1^p, s2^q, (s1s2)^2, rel1, rel2, extras.
Presentation gp_presentation(const GpParams& params);

/// s_i -> s_{3-i}^{-1}. On families: (p,q | i1,j1,i2,j2) -> (q,p | j2,i2,j1,i1).
Presentation dual(const Presentation& pres);
/// s_i -> s_i^{-1}. On families: (p,q | i1,j1,i2,j2) -> (p,q | -i2,-j2,-i1,-j1).
Presentation enantiomorph(const Presentation& pres);

/// Text format, one declaration per line, '#' starts a comment:
///   gp <p> <q> : <i1> <j1> <i2> <j2>
///   rel <word>
/// A word is a whitespace-separated product of atoms s1, s2, s1^k, s2^k and
/// (<word>)^k with nonzero integer k. Without a gp line the orders p and q
/// come from the pure-power relators s1^p and s2^q, which are required.
Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& pres);

/// Parses a single word in the same grammar.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

/// Compact label such as "gp 6 9 : 3 4 3 2" (canonical residues) or
/// "rel ...; rel ..." for plain presentations. Single line.
std::string describe(const Presentation& pres);

}  // namespace tight
