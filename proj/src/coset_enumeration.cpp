#include "tight/coset_enumeration.hpp"

#include <string>

#include "tight/error.hpp"
#include "tight/todd_coxeter.hpp"

namespace tight {

CosetTable enumerate(const Presentation& pres, std::span<const Word> subgroup_gens,
                     std::size_t max_cosets) {
  if (max_cosets < 1) throw Error(ErrorKind::BadParameters, "max_cosets must be at least 1");
  const std::vector<Word> rels = pres.relators();
  ToddCoxeter tc(rels, subgroup_gens, max_cosets);
  if (tc.run() != ToddCoxeter::Status::Complete) {
    throw Error(ErrorKind::Overflow, "coset enumeration of " + describe(pres) + " exceeded " +
                                         std::to_string(max_cosets) + " cosets");
  }
  CosetTable t;
  t.rows = tc.table();
  t.live = t.rows.size();
  t.complete = true;
  return t;
}

std::size_t default_max_cosets(const Presentation& pres) {
  return 4 * static_cast<std::size_t>(pres.declared_p()) *
             static_cast<std::size_t>(pres.declared_q()) +
         64;
}

Realization realize(const Presentation& pres, std::size_t max_cosets) {
  const CosetTable t = enumerate(pres, {}, max_cosets);
  std::vector<Point> a(t.size());
  std::vector<Point> b(t.size());
  for (std::size_t c = 0; c < t.size(); ++c) {
    a[c] = static_cast<Point>(t.rows[c][0]);
    b[c] = static_cast<Point>(t.rows[c][2]);
  }
  return Realization(Perm(std::move(a)), Perm(std::move(b)), true, pres);
}

Realization realize(const Presentation& pres) { return realize(pres, default_max_cosets(pres)); }

bool is_odd_prime(long m) {
  if (m < 3 || m % 2 == 0) return false;
  for (long d = 3; d * d <= m; d += 2) {
    if (m % d == 0) return false;
  }
  return true;
}

namespace {

constexpr long kMaxExplicitDegree = 1L << 22;

long ipow(long base, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) {
    r *= base;
    if (r > kMaxExplicitDegree) {
      throw Error(ErrorKind::BadParameters, "explicit representation degree exceeds " +
                                                std::to_string(kMaxExplicitDegree));
    }
  }
  return r;
}

long mulmod(long a, long b, long n) {
  return static_cast<long>((static_cast<__int128>(mod(a, n)) * mod(b, n)) % n);
}

}  // namespace

ExplicitRepresentation explicit_representation(const ExplicitSpec& spec) {
  long n = 0;
  GpParams params;
  std::vector<Point> pi1;
  switch (spec.family) {
    case ExplicitFamily::Odd: {
      if (!is_odd_prime(spec.m)) {
        throw Error(ErrorKind::BadParameters, "odd family needs m an odd prime, got m=" +
                                                  std::to_string(spec.m));
      }
      if (spec.beta < 2) throw Error(ErrorKind::BadParameters, "odd family needs beta >= 2");
      if (spec.k < 1 || spec.k > spec.m - 1) {
        throw Error(ErrorKind::BadParameters, "odd family needs 1 <= k <= m-1");
      }
      n = ipow(spec.m, spec.beta);
      const long t = static_cast<long>(spec.k) * (n / spec.m);  // k m^(beta-1)
      pi1.resize(static_cast<std::size_t>(n));
      for (long b = 0; b < n; ++b) {
        pi1[b] = static_cast<Point>(mod(-b + mulmod(mulmod(b, 1 - b, n), t, n), n));
      }
      params = {2 * spec.m, static_cast<int>(n), 3, 1 - 2 * t, -3, -1 - 2 * t, {}};
      break;
    }
    case ExplicitFamily::Even8:
    case ExplicitFamily::Even2Pow: {
      if (spec.beta < 5) throw Error(ErrorKind::BadParameters, "power-of-two families need beta >= 5");
      if (spec.sign != 1 && spec.sign != -1) {
        throw Error(ErrorKind::BadParameters, "sign must be + or -");
      }
      n = ipow(2, spec.beta);
      const long h = n / 8;  // 2^(beta-3)
      const long x = n / 4;  // 2^(beta-2)
      pi1.resize(static_cast<std::size_t>(n));
      for (long b = 0; b < n; ++b) {
        long img;
        if (spec.family == ExplicitFamily::Even8) {
          img = -b + mulmod(mulmod(b, 1 - b, n), h, n);
        } else {
          img = b + mulmod(mulmod(b, b - 1, n), h, n) - (b % 2 == 0 ? 0 : 2);
        }
        pi1[b] = static_cast<Point>(mod(img, n));
      }
      if (spec.family == ExplicitFamily::Even8) {
        params = {8, static_cast<int>(n), 3, 1 - x, -3, -1 - x, {}};
      } else {
        params = {static_cast<int>(n / 2), static_cast<int>(n), -1 + x, -3 + x, 1 - x, 3 + x, {}};
      }
      break;
    }
  }
  std::vector<Point> pi2(static_cast<std::size_t>(n));
  for (long b = 0; b < n; ++b) pi2[b] = static_cast<Point>((b + 1) % n);

  Perm a(std::move(pi1));
  Perm b(std::move(pi2));
  if (!a.is_bijection()) throw Error(ErrorKind::Internal, "explicit pi1 is not a bijection");
  Presentation pres = gp_presentation(params);
  if (spec.family != ExplicitFamily::Odd && spec.sign < 0) {
    a = a.inverse();
    b = b.inverse();
    pres = enantiomorph(pres);
  }
  Realization r(std::move(a), std::move(b), false, pres);
  for (const Word& w : pres.relators()) {
    if (!r.satisfies(w)) {
      throw Error(ErrorKind::Internal,
                  "explicit representation violates relator " + format_word(w) + " of " +
                      describe(pres));
    }
  }
  return {std::move(r), std::move(pres)};
}

}  // namespace tight
