#include "tight/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "tight/error.hpp"

namespace tight {

long mod(long x, long n) {
  long r = x % n;
  return r < 0 ? r + n : r;
}

long short_exponent(long x, long n) {
  long e = mod(-x, n);
  if (2 * e >= n) e -= n;
  return e;
}

GpParams GpParams::canonical() const {
  GpParams out = *this;
  out.i1 = mod(i1, p);
  out.i2 = mod(i2, p);
  out.j1 = mod(j1, q);
  out.j2 = mod(j2, q);
  for (Word& w : out.extra_relators) w = w.reduced();
  return out;
}

namespace {

// s2^-1 s1 s2^-j1 s1^-i1 and s2 s1^-1 s2^-j2 s1^-i2, with short exponents.
Word family_relator(Letter lead, Letter second, long i, long j, int p, int q) {
  Word w{lead, second};
  w *= Word::power(2, short_exponent(j, q));
  w *= Word::power(1, short_exponent(i, p));
  return w.reduced();
}

std::vector<Word> standard_relators(int p, int q) {
  return {Word::power(1, p), Word::power(2, q), Word{s1, s2, s1, s2}};
}

}  // namespace

Presentation Presentation::family(const GpParams& params) {
  if (params.p <= 0 || params.q <= 0) {
    throw Error(ErrorKind::BadParameters, "family presentation needs p >= 1 and q >= 1");
  }
  const GpParams c = params.canonical();
  Presentation out;
  out.p_ = c.p;
  out.q_ = c.q;
  out.family_ = Residues{c.i1, c.j1, c.i2, c.j2};
  for (const Word& w : c.extra_relators) {
    if (!w.empty()) out.extra_.push_back(w);
  }
  return out;
}

Presentation Presentation::plain(int p, int q, std::vector<Word> extra) {
  if (p <= 0 || q <= 0) {
    throw Error(ErrorKind::BadParameters, "presentation needs p >= 1 and q >= 1");
  }
  Presentation out;
  out.p_ = p;
  out.q_ = q;
  const Word rot = Word{s1, s2, s1, s2};
  for (const Word& raw : extra) {
    const Word w = raw.reduced();
    if (w.empty() || w == rot) continue;
    // Pure powers fold into the declared orders.
    if (const int g = w.pure_power_gen(); g != 0) {
      const int k = static_cast<int>(std::labs(w.exponent_sum(g)));
      if (g == 1) {
        out.p_ = std::gcd(out.p_, k);
      } else {
        out.q_ = std::gcd(out.q_, k);
      }
      continue;
    }
    if (std::find(out.extra_.begin(), out.extra_.end(), w) == out.extra_.end()) {
      out.extra_.push_back(w);
    }
  }
  return out;
}

std::optional<GpParams> Presentation::params() const {
  if (!family_) return std::nullopt;
  GpParams g;
  g.p = p_;
  g.q = q_;
  g.i1 = family_->i1;
  g.j1 = family_->j1;
  g.i2 = family_->i2;
  g.j2 = family_->j2;
  g.extra_relators = extra_;
  return g;
}

std::vector<Word> Presentation::relators() const {
  std::vector<Word> out = standard_relators(p_, q_);
  if (family_) {
    out.push_back(family_relator(s2inv, s1, family_->i1, family_->j1, p_, q_));
    out.push_back(family_relator(s2, s1inv, family_->i2, family_->j2, p_, q_));
  }
  out.insert(out.end(), extra_.begin(), extra_.end());
  return out;
}

Presentation Presentation::with_relator(const Word& w) const {
  Presentation out = *this;
  const Word r = w.reduced();
  if (!r.empty()) out.extra_.push_back(r);
  return out;
}

Presentation gp_presentation(const GpParams& params) { return Presentation::family(params); }

Presentation dual(const Presentation& pres) {
  std::vector<Word> extra;
  for (const Word& w : pres.extra_relators()) extra.push_back(dual_word(w));
  if (auto g = pres.params()) {
    GpParams d;
    d.p = g->q;
    d.q = g->p;
    d.i1 = g->j2;
    d.j1 = g->i2;
    d.i2 = g->j1;
    d.j2 = g->i1;
    d.extra_relators = std::move(extra);
    return Presentation::family(d);
  }
  return Presentation::plain(pres.declared_q(), pres.declared_p(), std::move(extra));
}

Presentation enantiomorph(const Presentation& pres) {
  std::vector<Word> extra;
  for (const Word& w : pres.extra_relators()) extra.push_back(enantiomorph_word(w));
  if (auto g = pres.params()) {
    GpParams e;
    e.p = g->p;
    e.q = g->q;
    e.i1 = -g->i2;
    e.j1 = -g->j2;
    e.i2 = -g->i1;
    e.j2 = -g->j1;
    e.extra_relators = std::move(extra);
    return Presentation::family(e);
  }
  return Presentation::plain(pres.declared_p(), pres.declared_q(), std::move(extra));
}

}  // namespace tight
