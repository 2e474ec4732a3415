#include "tight/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <sstream>

#include "tight/analysis.hpp"
#include "tight/coset_enumeration.hpp"
#include "tight/error.hpp"
#include "tight/perm_group.hpp"

namespace tight {

namespace {

constexpr long kMaxExponent = 1L << 24;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::BadParameters, what); }

long ipow(long base, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) {
    r *= base;
    if (r > kMaxExponent) bad("family exponent exceeds " + std::to_string(kMaxExponent));
  }
  return r;
}

Presentation lam(long p, long q, long i1, long j1, long i2, long j2, std::vector<Word> extra = {}) {
  return gp_presentation({static_cast<int>(p), static_cast<int>(q), i1, j1, i2, j2, std::move(extra)});
}

// s1^(2m) s2 s1^(-2m) s2^-1
Word central_relator(long m) {
  return Word::power(1, 2 * m) * Word{s2} * Word::power(1, -2 * m) * Word{s2inv};
}

void need_odd_prime(int m) {
  if (!is_odd_prime(m)) bad("m must be an odd prime, got " + std::to_string(m));
}

void need_k(const FamilySpec& s) {
  if (s.k < 1 || s.k > s.m - 1) bad("k must satisfy 1 <= k <= m-1, got k=" + std::to_string(s.k));
}

void need_sign(const FamilySpec& s) {
  if (s.sign != 1 && s.sign != -1) bad("sign must be + or -");
}

struct TagName {
  FamilyTag tag;
  const char* name;
};

constexpr std::array<TagName, 11> kTagNames{{
    {FamilyTag::Regular2Q, "regular-2q"},
    {FamilyTag::RegularPow2A, "regular-pow2-a"},
    {FamilyTag::RegularPow2B, "regular-pow2-b"},
    {FamilyTag::RegularEven, "regular-even"},
    {FamilyTag::OddAtomic, "odd-atomic"},
    {FamilyTag::Even8Atomic, "even8-atomic"},
    {FamilyTag::Even2PowAtomic, "even2pow-atomic"},
    {FamilyTag::OddCentralEq, "odd-central-eq"},
    {FamilyTag::OddCentralLt, "odd-central-lt"},
    {FamilyTag::EvenCentral, "even-central"},
    {FamilyTag::EvenCentralMix, "even-central-mix"},
}};

// Parameter names used by each tag, in print order.
std::vector<std::string> keys_for(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Regular2Q:
    case FamilyTag::RegularEven: return {"p", "q"};
    case FamilyTag::RegularPow2A:
    case FamilyTag::RegularPow2B:
    case FamilyTag::EvenCentralMix: return {"alpha"};
    case FamilyTag::OddAtomic:
    case FamilyTag::OddCentralEq: return {"m", "beta", "k"};
    case FamilyTag::OddCentralLt: return {"m", "alpha", "beta", "k"};
    case FamilyTag::Even8Atomic:
    case FamilyTag::Even2PowAtomic: return {"beta", "sign"};
    case FamilyTag::EvenCentral: return {"alpha", "beta", "sign"};
  }
  return {};
}

int* field(FamilySpec& s, const std::string& key) {
  if (key == "m") return &s.m;
  if (key == "alpha") return &s.alpha;
  if (key == "beta") return &s.beta;
  if (key == "k") return &s.k;
  if (key == "sign") return &s.sign;
  if (key == "p") return &s.p;
  if (key == "q") return &s.q;
  return nullptr;
}

int field(const FamilySpec& s, const std::string& key) {
  return *field(const_cast<FamilySpec&>(s), key);
}

// Direct check used where the family is asserted only by machine computation.
void require_tight_regular(const Presentation& pres) {
  const ClassificationReport r = classify(pres);
  if (!r.tight || r.verdict != Verdict::OrientablyRegular ||
      r.schlafli[0] != static_cast<std::uint64_t>(pres.declared_p()) ||
      r.schlafli[1] != static_cast<std::uint64_t>(pres.declared_q())) {
    throw Error(ErrorKind::Internal, describe(pres) + " is not tight orientably regular");
  }
}

}  // namespace

Construction single(Presentation p) { return Construction{{std::move(p)}}; }

Construction mix_of(const Construction& a, const Construction& b) {
  Construction out = a;
  out.parts.insert(out.parts.end(), b.parts.begin(), b.parts.end());
  return out;
}

Construction dual(const Construction& c) {
  Construction out;
  for (const Presentation& p : c.parts) out.parts.push_back(dual(p));
  return out;
}

Realization realize(const Construction& c) {
  if (c.parts.empty()) throw Error(ErrorKind::Internal, "empty construction");
  Realization acc = realize(c.parts[0]);
  for (std::size_t i = 1; i < c.parts.size(); ++i) acc = mix(acc, realize(c.parts[i]));
  return acc;
}

std::string describe(const Construction& c) {
  if (c.parts.size() == 1) return describe(c.parts[0]);
  std::string out = "mix(";
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (i > 0) out += " | ";
    out += describe(c.parts[i]);
  }
  return out + ")";
}

void validate(const FamilySpec& s) {
  switch (s.tag) {
    case FamilyTag::Regular2Q:
      if (s.q < 1 || s.q % 2 == 0) bad("q must be odd and positive");
      if (s.p < 2 || s.p % 2 != 0 || (2L * s.q) % s.p != 0) bad("p must be an even divisor of 2q");
      return;
    case FamilyTag::RegularPow2A:
    case FamilyTag::RegularPow2B:
      if (s.alpha < 3) bad("alpha must be at least 3");
      ipow(2, s.alpha);
      return;
    case FamilyTag::RegularEven:
      if (s.p < 2 || s.q < 2 || s.p % 2 != 0 || s.q % 2 != 0) bad("p and q must be even and positive");
      return;
    case FamilyTag::OddAtomic:
    case FamilyTag::OddCentralEq:
      need_odd_prime(s.m);
      if (s.beta < 2) bad("beta must be at least 2");
      need_k(s);
      ipow(s.m, s.beta + 1);
      return;
    case FamilyTag::OddCentralLt:
      need_odd_prime(s.m);
      if (s.alpha < 1) bad("alpha must be at least 1");
      if (s.beta <= s.alpha) bad("beta must exceed alpha");
      need_k(s);
      ipow(s.m, s.beta + 1);
      return;
    case FamilyTag::Even8Atomic:
    case FamilyTag::Even2PowAtomic:
      if (s.beta < 5) bad("beta must be at least 5");
      need_sign(s);
      ipow(2, s.beta);
      return;
    case FamilyTag::EvenCentral:
      if (s.alpha < 3) bad("alpha must be at least 3");
      if (s.beta < 5) bad("beta must be at least 5");
      if (s.beta < s.alpha + 1) bad("beta must be at least alpha+1");
      need_sign(s);
      ipow(2, s.beta);
      return;
    case FamilyTag::EvenCentralMix:
      if (s.alpha < 5) bad("alpha must be at least 5");
      ipow(2, s.alpha);
      return;
  }
}

Construction build(const FamilySpec& s) {
  validate(s);
  switch (s.tag) {
    case FamilyTag::Regular2Q: return single(lam(s.p, s.q, 3, 1, -3, -1));
    case FamilyTag::RegularPow2A: {
      const long n = ipow(2, s.alpha);
      Presentation pres = lam(n, 4, -1 + n / 2, 1, 1 - n / 2, -1);
      if (s.alpha == 3) require_tight_regular(pres);
      return single(pres);
    }
    case FamilyTag::RegularPow2B: {
      const long n = ipow(2, s.alpha);
      Presentation pres = lam(n, n / 2, 3, 1, -3, -1);
      if (s.alpha == 3) require_tight_regular(pres);
      return single(pres);
    }
    case FamilyTag::RegularEven: return single(lam(s.p, s.q, -1, 1, 1, -1));
    case FamilyTag::OddAtomic: {
      const long n = ipow(s.m, s.beta);
      const long t = s.k * (n / s.m);
      return single(lam(2L * s.m, n, 3, 1 + t, -3, -1 + t));
    }
    case FamilyTag::Even8Atomic: {
      const long n = ipow(2, s.beta);
      const long x = n / 4;
      Presentation pres = lam(8, n, 3, 1 - x, -3, -1 - x);
      return single(s.sign > 0 ? pres : enantiomorph(pres));
    }
    case FamilyTag::Even2PowAtomic: {
      const long n = ipow(2, s.beta);
      const long x = n / 4;
      Presentation pres = lam(n / 2, n, -1 + x, -3 + x, 1 - x, 3 + x);
      return single(s.sign > 0 ? pres : enantiomorph(pres));
    }
    case FamilyTag::OddCentralEq: {
      const long n = ipow(s.m, s.beta);
      const long t = s.k * (n / s.m);
      const long u = t * (s.m + 1);
      return single(lam(2 * n, n, 3 + u, 1 + t, -3 + u, -1 + t, {central_relator(s.m)}));
    }
    case FamilyTag::OddCentralLt: {
      const long n = ipow(s.m, s.beta);
      const long t = s.k * (n / s.m);
      return single(lam(2 * ipow(s.m, s.alpha), n, 3, 1 + t, -3, -1 + t, {central_relator(s.m)}));
    }
    case FamilyTag::EvenCentral: {
      const long x = s.sign * ipow(2, s.beta - 2);
      return single(lam(ipow(2, s.alpha), ipow(2, s.beta), 3, 1 + x, -3, -1 + x));
    }
    case FamilyTag::EvenCentralMix: {
      const long n = ipow(2, s.alpha);
      const long x = n / 4;
      return mix_of(single(lam(n / 2, n, -1 + x, -3 + x, 1 + x, 3 + x)),
                    single(lam(n, 8, -1 + x, -3, 1 + x, 3)));
    }
  }
  throw Error(ErrorKind::Internal, "unknown family tag");
}

std::pair<long, long> claimed_type(const FamilySpec& s) {
  validate(s);
  switch (s.tag) {
    case FamilyTag::Regular2Q:
    case FamilyTag::RegularEven: return {s.p, s.q};
    case FamilyTag::RegularPow2A: return {ipow(2, s.alpha), 4};
    case FamilyTag::RegularPow2B: return {ipow(2, s.alpha), ipow(2, s.alpha - 1)};
    case FamilyTag::OddAtomic: return {2L * s.m, ipow(s.m, s.beta)};
    case FamilyTag::Even8Atomic: return {8, ipow(2, s.beta)};
    case FamilyTag::Even2PowAtomic: return {ipow(2, s.beta - 1), ipow(2, s.beta)};
    case FamilyTag::OddCentralEq: return {2 * ipow(s.m, s.beta), ipow(s.m, s.beta)};
    case FamilyTag::OddCentralLt: return {2 * ipow(s.m, s.alpha), ipow(s.m, s.beta)};
    case FamilyTag::EvenCentral: return {ipow(2, s.alpha), ipow(2, s.beta)};
    case FamilyTag::EvenCentralMix: return {ipow(2, s.alpha), ipow(2, s.alpha)};
  }
  return {0, 0};
}

const char* tag_name(FamilyTag tag) {
  for (const TagName& t : kTagNames) {
    if (t.tag == tag) return t.name;
  }
  return "?";
}

FamilySpec parse_family_spec(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  std::size_t pos = 0;
  if (pos < tokens.size() && tokens[pos] == "family") ++pos;
  if (pos >= tokens.size()) throw ParseError(1, 1, "missing family name");
  FamilySpec spec;
  bool found = false;
  for (const TagName& t : kTagNames) {
    if (tokens[pos] == t.name) {
      spec.tag = t.tag;
      found = true;
    }
  }
  if (!found) throw ParseError(1, 1, "unknown family '" + tokens[pos] + "'");
  const std::vector<std::string> keys = keys_for(spec.tag);
  std::map<std::string, bool> seen;
  for (++pos; pos < tokens.size(); ++pos) {
    const std::string& tok = tokens[pos];
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError(1, 1, "expected key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    const std::string value = tok.substr(eq + 1);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ParseError(1, 1, "unknown parameter '" + key + "' for " + tag_name(spec.tag));
    }
    if (seen[key]) throw ParseError(1, 1, "duplicate parameter '" + key + "'");
    seen[key] = true;
    int v = 0;
    if (key == "sign" && (value == "+" || value == "-")) {
      v = value == "+" ? 1 : -1;
    } else {
      const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
      if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
        throw ParseError(1, 1, "bad integer '" + value + "' for " + key);
      }
    }
    *field(spec, key) = v;
  }
  for (const std::string& key : keys) {
    if (!seen[key] && key != "sign") throw ParseError(1, 1, "missing parameter '" + key + "'");
  }
  return spec;
}

std::string format_family_spec(const FamilySpec& spec) {
  std::string out = std::string("family ") + tag_name(spec.tag);
  for (const std::string& key : keys_for(spec.tag)) {
    out += " " + key + "=";
    if (key == "sign") {
      out += spec.sign > 0 ? "+" : "-";
    } else {
      out += std::to_string(field(spec, key));
    }
  }
  return out;
}

}  // namespace tight
