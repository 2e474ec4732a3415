#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tight/presentation.hpp"
#include "tight/realization.hpp"

namespace tight {

enum class FamilyTag {
  Regular2Q,       // <p,q | 3,1,-3,-1>, q odd, p an even divisor of 2q
  RegularPow2A,    // <2^a, 4 | -1+2^(a-1), 1, 1-2^(a-1), -1>
  RegularPow2B,    // <2^a, 2^(a-1) | 3,1,-3,-1>
  RegularEven,     // <p,q | -1,1,1,-1>, p and q even
  OddAtomic,       // <2m, m^b | 3, 1+k m^(b-1), -3, -1+k m^(b-1)>
  Even8Atomic,     // <8, 2^b | 3, 1-+2^(b-2), -3, -1-+2^(b-2)>
  Even2PowAtomic,  // <2^(b-1), 2^b | ...>
  OddCentralEq,    // type {2m^b, m^b}, with s1^(2m) central
  OddCentralLt,    // type {2m^a, m^b}, b > a, with s1^(2m) central
  EvenCentral,     // <2^a, 2^b | 3, 1+-2^(b-2), -3, -1+-2^(b-2)>
  EvenCentralMix,  // mix of two power-of-two atomic groups, type {2^a, 2^a}
};

/// A named family member. Only the fields relevant to the tag are used.
struct FamilySpec {
  FamilyTag tag = FamilyTag::OddAtomic;
  int m = 0;
  int alpha = 0;
  int beta = 0;
  int k = 0;
  int sign = 1;
  int p = 0;
  int q = 0;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// A presentation, or several presentations whose realizations are mixed.
/// Nested mixes are flattened; the mix is associative.
struct Construction {
  std::vector<Presentation> parts;

  bool is_mix() const { return parts.size() > 1; }
  friend bool operator==(const Construction&, const Construction&) = default;
};

Construction single(Presentation p);
Construction mix_of(const Construction& a, const Construction& b);
Construction dual(const Construction& c);
/// Realizes every part and mixes the results.
Realization realize(const Construction& c);
/// One line: the presentation label, or "mix(A | B | ...)".
std::string describe(const Construction& c);

/// Checks the parameter ranges; throws BadParameters naming the violated one.
void validate(const FamilySpec& spec);
/// The family member. Throws BadParameters for out-of-range parameters.
Construction build(const FamilySpec& spec);
/// Schlafli type the family member is constructed to have.
std::pair<long, long> claimed_type(const FamilySpec& spec);

const char* tag_name(FamilyTag tag);
/// Text syntax "family odd-atomic m=3 beta=2 k=1"; the leading keyword is
/// optional. Throws ParseError.
FamilySpec parse_family_spec(std::string_view text);
std::string format_family_spec(const FamilySpec& spec);

}  // namespace tight
