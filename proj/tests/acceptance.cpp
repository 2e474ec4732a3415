#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "tight/analysis.hpp"
#include "tight/classification.hpp"
#include "tight/cli.hpp"
#include "tight/coset_enumeration.hpp"
#include "tight/error.hpp"
#include "tight/families.hpp"
#include "tight/perm_group.hpp"

using namespace tight;

namespace {

using u64 = std::uint64_t;

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
  if (!ok) ++failures;
}

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

u64 ipow(u64 b, int e) {
  u64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

FamilySpec make(FamilyTag tag, int m, int alpha, int beta, int k, int sign) {
  FamilySpec s;
  s.tag = tag;
  s.m = m;
  s.alpha = alpha;
  s.beta = beta;
  s.k = k;
  s.sign = sign;
  return s;
}

Realization dual_of(const Realization& g) { return Realization(g.gen_inverse(2), g.gen_inverse(1), true); }

// The rows of the published table of types with at most 2000 flags.
std::set<SchlafliType> table_types() {
  std::set<SchlafliType> t;
  auto run = [&](int p, int k, int lo, int hi) {
    for (int n = lo; n <= hi; ++n) t.insert({p, k * n});
  };
  run(6, 9, 1, 18);
  run(8, 32, 1, 3);
  run(9, 18, 1, 1);
  run(10, 25, 1, 4);
  run(12, 18, 1, 4);
  run(14, 49, 1, 1);
  run(16, 32, 1, 1);
  run(18, 6, 3, 9);
  run(18, 9, 2, 6);
  run(20, 50, 1, 1);
  run(24, 32, 1, 1);
  run(24, 36, 1, 1);
  std::set<SchlafliType> with_duals = t;
  for (const SchlafliType& x : t) with_duals.insert({x.q, x.p});
  return with_duals;
}

// ---- criterion 1 ----

void census_reproduction() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto entries = census(2000, CensusMode::Verified, jobs());
  std::set<SchlafliType> got;
  std::size_t verified = 0;
  for (const CensusEntry& e : entries) {
    got.insert(e.type);
    if (e.verification && e.verification->verified) ++verified;
  }
  const std::set<SchlafliType> want = table_types();
  std::ostringstream d;
  d << entries.size() << " types, " << verified << " verified, expected " << want.size() << " types, "
    << seconds_since(t0) << " s";
  report(1, got == want && verified == entries.size(), d.str());
}

// ---- criteria 2 and 3 ----

struct SpotCheck {
  FamilySpec spec;
  ExplicitSpec explicit_spec;
  u64 order;
  std::array<u64, 2> type;
};

std::vector<SpotCheck> spot_checks() {
  std::vector<SpotCheck> v;
  for (const auto& [m, beta, k] : std::vector<std::array<int, 3>>{{3, 2, 1}, {3, 2, 2}, {3, 3, 1}, {5, 2, 1}}) {
    v.push_back({make(FamilyTag::OddAtomic, m, 0, beta, k, 1), {ExplicitFamily::Odd, m, beta, k, 1},
                 2 * ipow(m, beta + 1), {2 * static_cast<u64>(m), ipow(m, beta)}});
  }
  for (int beta : {5, 6}) {
    for (int sign : {1, -1}) {
      v.push_back({make(FamilyTag::Even8Atomic, 0, 0, beta, 0, sign), {ExplicitFamily::Even8, 3, beta, 1, sign},
                   ipow(2, beta + 3), {8, ipow(2, beta)}});
      v.push_back({make(FamilyTag::Even2PowAtomic, 0, 0, beta, 0, sign),
                   {ExplicitFamily::Even2Pow, 3, beta, 1, sign}, ipow(2, 2 * beta - 1),
                   {ipow(2, beta - 1), ipow(2, beta)}});
    }
  }
  return v;
}

std::vector<Realization> family_checks() {
  std::vector<Realization> groups;
  int ok2 = 0;
  int ok3 = 0;
  std::string bad2;
  std::string bad3;
  const auto checks = spot_checks();
  for (const SpotCheck& c : checks) {
    const std::string name = format_family_spec(c.spec);
    const Realization g = realize(build(c.spec));
    const ClassificationReport r = classify(g);
    const bool good = r.order == c.order && r.schlafli == c.type && r.verdict == Verdict::Chiral && r.tight &&
                      r.atomic == true;
    if (good) {
      ++ok2;
    } else {
      bad2 += " [" + name + ": order " + std::to_string(r.order) + " verdict " + to_string(r.verdict) + "]";
    }
    groups.push_back(g);

    // The explicit permutations satisfy a family presentation; both that
    // group and the member built above must agree with the permutations.
    const ExplicitRepresentation ex = explicit_representation(c.explicit_spec);
    FamilySpec matched = c.spec;
    if (c.spec.tag == FamilyTag::OddAtomic) matched.k = static_cast<int>(mod(-2L * c.spec.k, c.spec.m));
    const Realization via_presentation = realize(ex.presentation);
    const Realization via_family = realize(build(matched));
    const bool good3 = ex.realization.order() == via_presentation.order() &&
                       mutually_cover(ex.realization, via_presentation) &&
                       ex.realization.order() == via_family.order() && mutually_cover(ex.realization, via_family);
    if (good3) {
      ++ok3;
    } else {
      bad3 += " [" + name + "]";
    }
  }
  std::ostringstream d2;
  d2 << ok2 << "/" << checks.size() << " family members with exact order, type, CHIRAL, atomic" << bad2;
  report(2, ok2 == static_cast<int>(checks.size()), d2.str());
  std::ostringstream d3;
  d3 << ok3 << "/" << checks.size() << " explicit representations mutually cover the realized group" << bad3;
  report(3, ok3 == static_cast<int>(checks.size()), d3.str());
  return groups;
}

// ---- criterion 4 ----

void mix_size_identity() {
  std::vector<Presentation> pool;
  for (const char* text :
       {"odd-atomic m=3 beta=2 k=1", "odd-atomic m=3 beta=2 k=2", "odd-atomic m=5 beta=2 k=1",
        "odd-atomic m=3 beta=3 k=1", "even8-atomic beta=5 sign=+", "even8-atomic beta=5 sign=-",
        "even-central alpha=3 beta=5 sign=+", "odd-central-eq m=3 beta=2 k=1", "odd-central-lt m=3 alpha=1 beta=2 k=1",
        "regular-2q p=6 q=3", "regular-2q p=6 q=9", "regular-even p=2 q=2", "regular-even p=4 q=6",
        "regular-even p=6 q=18", "regular-pow2-b alpha=3"}) {
    pool.push_back(build(parse_family_spec(text)).parts.at(0));
  }
  pool.push_back(gp_presentation({6, 18, 3, 7, -3, 5, {}}));
  pool.push_back(gp_presentation({18, 9, 3, 1, -3, -1, {}}));
  std::vector<Realization> groups;
  for (const Presentation& p : pool) groups.push_back(realize(p));

  int tested = 0;
  int held = 0;
  std::string bad;
  for (std::size_t a = 0; a < pool.size(); ++a) {
    for (std::size_t b = a + 1; b < pool.size(); ++b) {
      if (groups[a].order() * groups[b].order() > 1'000'000) continue;
      const u64 m = mix(groups[a], groups[b]).order();
      const u64 c = realize(comix(pool[a], pool[b])).order();
      ++tested;
      if (m * c == groups[a].order() * groups[b].order()) {
        ++held;
      } else {
        bad += " [" + describe(pool[a]) + " | " + describe(pool[b]) + "]";
      }
    }
  }
  std::ostringstream d;
  d << held << "/" << tested << " pairs satisfy |mix| * |comix| = |G1| * |G2|" << bad;
  report(4, tested >= 20 && held == tested, d.str());
}

// ---- criterion 5 ----

std::vector<Realization> exhaustive_agreement() {
  const auto t0 = std::chrono::steady_clock::now();
  SearchOptions options;
  options.jobs = jobs();
  std::vector<Realization> found;
  int types = 0;
  int agree = 0;
  std::string bad;
  for (int p = 1; p <= 600; ++p) {
    for (int q = 1; p * q <= 600; ++q) {
      const SearchResult r = exhaustive_search({p, q}, options);
      ++types;
      if (!r.buckets.empty() == admissible({p, q})) {
        ++agree;
      } else {
        bad += " {" + std::to_string(p) + "," + std::to_string(q) + "}";
      }
      for (const SearchBucket& b : r.buckets) {
        const Tuple& t = b.representative;
        found.push_back(realize(gp_presentation({p, q, t.i1, t.j1, t.i2, t.j2, {}})));
      }
    }
  }
  const SearchResult r69 = exhaustive_search({6, 9}, options);
  const bool pair69 = r69.buckets.size() == 2 && r69.buckets[0].enantiomorph == 1 &&
                      r69.buckets[1].enantiomorph == 0 &&
                      r69.buckets[0].representative == Tuple{3, 4, 3, 2} &&
                      r69.buckets[1].representative == Tuple{3, 7, 3, 5};
  bool empties = true;
  for (const SchlafliType t : std::vector<SchlafliType>{{54, 9}, {4, 4}, {6, 3}, {8, 16}}) {
    empties = empties && exhaustive_search(t, options).buckets.empty();
  }
  std::ostringstream d;
  d << agree << "/" << types << " types with pq <= 600 agree with admissibility, " << found.size()
    << " groups found, {6,9} pair " << (pair69 ? "ok" : "wrong") << ", required empty types "
    << (empties ? "empty" : "NOT empty") << ", " << seconds_since(t0) << " s" << bad;
  report(5, agree == types && pair69 && empties, d.str());
  return found;
}

// ---- criterion 6 ----

std::vector<u64> divisors(u64 n) {
  std::vector<u64> d;
  for (u64 i = 1; i <= n; ++i) {
    if (n % i == 0) d.push_back(i);
  }
  return d;
}

bool is_odd_prime_power(u64 n, u64& prime, int& exponent) {
  for (u64 m = 3; m <= n; m += 2) {
    if (n % m != 0) continue;
    if (!is_odd_prime(static_cast<long>(m))) return false;
    exponent = 0;
    while (n % m == 0) {
      n /= m;
      ++exponent;
    }
    prime = m;
    return n == 1;
  }
  return false;
}

bool power_of_two(u64 n, int& e) {
  e = 0;
  while (n > 1 && n % 2 == 0) {
    n /= 2;
    ++e;
  }
  return n == 1;
}

bool listed_atomic_type(u64 p, u64 q) {
  for (int swap = 0; swap < 2; ++swap) {
    u64 m = 0;
    int a = 0;
    if (is_odd_prime_power(q, m, a) && a >= 2 && p == 2 * m) return true;
    int e = 0;
    if (p == 8 && power_of_two(q, e) && e >= 5) return true;
    if (power_of_two(p, e) && e >= 4 && q == 2 * p) return true;
    std::swap(p, q);
  }
  return false;
}

// Properties stated for the generator s2 when q >= p; the dual group covers
// the roles swapped.
std::string s2_properties(const Realization& g) {
  const auto o = g.gen_orders();
  const u64 p = o[0];
  const u64 q = o[1];
  if (q >= p) {
    bool found = false;
    for (u64 d : divisors(q)) found = found || (d >= 2 && d < p && is_normal_cyclic(g, 2, d));
    if (!found) return "no normal <s2^q'> with 2 <= q' < p";
  }
  for (u64 d : divisors(q)) {
    if (d == q || !is_normal_cyclic(g, 2, d)) continue;
    const Perm s1 = g.gen(1);
    const Perm z = g.gen(2).pow(static_cast<long>(d));
    const u64 n = q / d;
    bool relation = false;
    for (u64 a = 0; a < n && !relation; ++a) {
      if (s1 * z == z.pow(static_cast<long>(a)) * s1) relation = (a * a) % n == 1 % n;
    }
    if (!relation) return "no multiplier a with a^2 = 1 for q' = " + std::to_string(d);
    const Perm s1sq = s1 * s1;
    if (!(s1sq * z == z * s1sq)) return "s1^2 does not commute with s2^q'";
    if (p % 2 == 1 && !(s1 * z == z * s1)) return "s2^q' not central with p odd";
  }
  if (q % 2 == 1) {
    if (p % 2 != 0 || (2 * q) % p != 0) return "q odd but p is not an even divisor of 2q";
    if (cyclic_core(g, 2).exponent == q && p != 2 * q) return "core-free <s2> but p != 2q";
  }
  return {};
}

// Quotient of a tight chiral group that is tight and chiral, if any.
std::optional<Realization> chiral_quotient(const Realization& g) {
  for (int gen = 1; gen <= 2; ++gen) {
    const u64 n = g.gen_orders()[gen - 1];
    const u64 e = cyclic_core(g, gen).exponent;
    for (u64 d = e; d < n; d += e) {
      if (n % d != 0) continue;
      const Realization h = quotient_by_cyclic(g, gen, d);
      if (is_tight(h) && is_polytopal(h) && classify(h).verdict == Verdict::Chiral) return h;
    }
  }
  return std::nullopt;
}

std::string structure(const Realization& g0) {
  for (const Realization& g : {g0, dual_of(g0)}) {
    const std::string s = s2_properties(g);
    if (!s.empty()) return s;
  }

  // Quotients by a nontrivial cyclic core stay tight and polytopal and end
  // in an orientably regular group.
  Realization g = g0;
  for (int step = 0; !is_orientably_regular(g); ++step) {
    const std::array<u64, 2> o = g.gen_orders();
    std::optional<Realization> next;
    for (int gen : {o[1] >= o[0] ? 2 : 1, o[1] >= o[0] ? 1 : 2}) {
      const u64 e = cyclic_core(g, gen).exponent;
      if (e < o[gen - 1]) {
        next = quotient_by_cyclic(g, gen, e);
        break;
      }
    }
    if (!next) return "chiral group with both cyclic subgroups core-free";
    if (!is_tight(*next) || !is_polytopal(*next)) return "core quotient is not a tight polyhedral group";
    g = *next;
  }
  if (!covers(g0, g)) return "regular quotient is not covered";

  // Descending through chiral quotients ends in an atomic group of a
  // listed type.
  Realization a = g0;
  while (!is_atomic(a)) {
    const auto next = chiral_quotient(a);
    if (!next) return "not atomic but no chiral quotient found";
    a = *next;
  }
  const auto o = a.gen_orders();
  if (!listed_atomic_type(o[0], o[1])) {
    return "atomic quotient of unlisted type {" + std::to_string(o[0]) + "," + std::to_string(o[1]) + "}";
  }
  if (!covers(g0, a)) return "atomic quotient is not covered";
  return {};
}

void structure_suite(const std::vector<Realization>& groups) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t ok = 0;
  std::string bad;
  for (const Realization& g : groups) {
    const std::string why = structure(g);
    if (why.empty()) {
      ++ok;
    } else if (bad.size() < 400) {
      const auto o = g.gen_orders();
      bad += " [{" + std::to_string(o[0]) + "," + std::to_string(o[1]) + "}: " + why + "]";
    }
  }
  std::ostringstream d;
  d << ok << "/" << groups.size() << " groups satisfy the structure properties, " << seconds_since(t0) << " s"
    << bad;
  report(6, ok == groups.size() && !groups.empty(), d.str());
}

// ---- criterion 7 ----

std::string cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return std::to_string(code) + "\n" + out.str() + err.str();
}

void determinism() {
  const std::string many = std::to_string(std::max(4, jobs()));
  std::vector<std::vector<std::string>> commands{
      {"census", "--max-flags", "2000", "--verify", "--json"},
      {"census", "--max-flags", "2000", "--verify"},
      {"search", "--p", "6", "--q", "9", "--json"},
      {"search", "--p", "18", "--q", "18", "--json"},
      {"search", "--p", "18", "--q", "18", "--dedup", "enantiomorph-and-dual", "--json"},
      {"search", "--p", "8", "--q", "32", "--json"},
      {"search", "--p", "27", "--q", "18", "--json"},
      {"search", "--p", "54", "--q", "9", "--json"},
  };
  int stable = 0;
  for (const auto& c : commands) {
    const std::string first = cli(c);
    std::vector<std::string> parallel = c;
    parallel.push_back("--jobs");
    parallel.push_back(many);
    const bool same = first == cli(c) && first == cli(parallel) && first == cli(parallel);
    stable += same;
  }
  std::ostringstream d;
  d << stable << "/" << commands.size() << " commands byte-identical across runs and --jobs 1 vs " << many;
  report(7, stable == static_cast<int>(commands.size()), d.str());
}

}  // namespace

int main() {
  try {
    census_reproduction();
    std::vector<Realization> groups = family_checks();
    mix_size_identity();
    const std::vector<Realization> found = exhaustive_agreement();
    groups.insert(groups.end(), found.begin(), found.end());
    structure_suite(groups);
    determinism();
  } catch (const std::exception& e) {
    std::cout << "FAIL unexpected error: " << e.what() << std::endl;
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
