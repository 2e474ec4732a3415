#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

#include "tight/analysis.hpp"
#include "tight/classification.hpp"
#include "tight/coset_enumeration.hpp"
#include "tight/error.hpp"
#include "tight/todd_coxeter.hpp"

namespace tight {

namespace {

using Rel = ToddCoxeter::Rel;
using Status = ToddCoxeter::Status;

constexpr std::uint8_t kS1 = 0;
constexpr std::uint8_t kS1Inv = 1;
constexpr std::uint8_t kS2 = 2;
constexpr std::uint8_t kS2Inv = 3;

void push_reduced(Rel& r, std::uint8_t col) {
  if (!r.empty() && r.back() == (col ^ 1)) {
    r.pop_back();
  } else {
    r.push_back(col);
  }
}

void push_power(Rel& r, int gen, long e) {
  const auto col = static_cast<std::uint8_t>(2 * (gen - 1) + (e < 0 ? 1 : 0));
  for (long i = 0; i < std::labs(e); ++i) push_reduced(r, col);
}

// Decides whether one family tuple of a fixed type {p, q}, p <= q, gives a
// tight chiral group with generator orders exactly (p, q). Cheap necessary
// conditions run first; only survivors are enumerated in full.
//
// In a tight group of that type, <s2> has the p cosets <s2> s1^a with s1
// acting as a p-cycle, and dually for <s1>. Seeding those tables and making
// only forced deductions either collapses (the tuple is rejected) or leaves
// a table consistent with tightness.
class TupleTester {
 public:
  TupleTester(int p, int q) : p_(p), q_(q), rels_(5), engine_(std::vector<Rel>{}, std::vector<Rel>{}, 1) {
    push_power(rels_[0], 1, p);
    push_power(rels_[1], 2, q);
    rels_[2] = {kS1, kS2, kS1, kS2};
  }

  bool tight_chiral(const Tuple& t) {
    load(t);
    engine_.reconfigure(rels_, sub2_, p_);
    const Status first = engine_.run_seeded_cycle(1, p_);
    if (first == Status::Collapsed) return false;
    if (first == Status::Incomplete) {
      engine_.reconfigure(rels_, sub1_, q_);
      if (engine_.run_seeded_cycle(2, q_) == Status::Collapsed) return false;
    }
    // Index of <s2> must be p and index of <s1> must be q.
    bool decided = true;
    std::uint64_t s2_order = 1;
    std::uint64_t s1_order = 1;
    for (int gen = 2; gen >= 1; --gen) {
      const std::size_t index = gen == 2 ? p_ : q_;
      engine_.reconfigure(rels_, gen == 2 ? sub2_ : sub1_, 4 * index + 32);
      if (engine_.run() != Status::Complete) {
        decided = false;
        continue;
      }
      if (engine_.live_cosets() != index) return false;
      const auto table = engine_.table();
      std::vector<Point> a(table.size());
      std::vector<Point> b(table.size());
      for (std::size_t c = 0; c < table.size(); ++c) {
        a[c] = static_cast<Point>(table[c][0]);
        b[c] = static_cast<Point>(table[c][2]);
      }
      s1_order = std::lcm(s1_order, element_order(Perm(std::move(a))));
      s2_order = std::lcm(s2_order, element_order(Perm(std::move(b))));
    }
    // With both indices right, |G| = p |s2| = q |s1|, and the orders seen in
    // the coset actions are lower bounds for the true ones.
    if (decided && (s1_order != static_cast<std::uint64_t>(p_) || s2_order != static_cast<std::uint64_t>(q_))) {
      return false;
    }
    ++full_enumerations;
    return full_check(t);
  }

  std::uint64_t full_enumerations = 0;

 private:
  void load(const Tuple& t) {
    Rel& r1 = rels_[3];
    r1.clear();
    push_reduced(r1, kS2Inv);
    push_reduced(r1, kS1);
    push_power(r1, 2, short_exponent(t.j1, q_));
    push_power(r1, 1, short_exponent(t.i1, p_));
    Rel& r2 = rels_[4];
    r2.clear();
    push_reduced(r2, kS2);
    push_reduced(r2, kS1Inv);
    push_power(r2, 2, short_exponent(t.j2, q_));
    push_power(r2, 1, short_exponent(t.i2, p_));
  }

  bool full_check(const Tuple& t) const {
    const Presentation pres = gp_presentation({p_, q_, t.i1, t.j1, t.i2, t.j2, {}});
    const std::size_t pq = static_cast<std::size_t>(p_) * static_cast<std::size_t>(q_);
    std::optional<Realization> g;
    for (std::size_t bound : {4 * pq + 64, 64 * pq + 64}) {
      try {
        g = realize(pres, bound);
        break;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Overflow) throw;
      }
    }
    if (!g) {
      throw Error(ErrorKind::BudgetExceeded, "could not enumerate " + describe(pres) + " within " +
                                                 std::to_string(64 * pq + 64) + " cosets");
    }
    const auto o = g->gen_orders();
    if (g->order() != pq || o[0] != static_cast<std::uint64_t>(p_) || o[1] != static_cast<std::uint64_t>(q_)) {
      return false;
    }
    if (!intersection_trivial(*g)) return false;
    for (const Word& w : pres.relators()) {
      if (!g->satisfies(enantiomorph_word(w))) return true;
    }
    return false;
  }

  int p_;
  int q_;
  std::vector<Rel> rels_;
  std::vector<Rel> sub1_{{kS1}};
  std::vector<Rel> sub2_{{kS2}};
  ToddCoxeter engine_;
};

struct Sweep {
  std::vector<Tuple> found;  // sorted, closed under the enantiomorph
  std::uint64_t examined = 0;
  std::uint64_t full = 0;
};

// Sweep for p <= q. Only tuples with j1 <= -j2 (mod q) are tested; the
// enantiomorph swaps the two sides, so closing the result recovers the rest.
Sweep sweep(int p, int q, int jobs) {
  std::vector<std::vector<Tuple>> per_i1(static_cast<std::size_t>(p));
  std::atomic<int> next{0};
  std::atomic<std::uint64_t> examined{0};
  std::atomic<std::uint64_t> full{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      TupleTester tester(p, q);
      std::uint64_t local = 0;
      for (int i1 = next++; i1 < p; i1 = next++) {
        for (long j1 = 0; j1 < q; ++j1) {
          for (long i2 = 0; i2 < p; ++i2) {
            for (long j2 = 0; j2 < q; ++j2) {
              if (j1 > mod(-j2, q)) continue;
              ++local;
              const Tuple t{i1, j1, i2, j2};
              if (tester.tight_chiral(t)) per_i1[i1].push_back(t);
            }
          }
        }
      }
      examined += local;
      full += tester.full_enumerations;
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::max(jobs, 1); ++j) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  Sweep s;
  for (const auto& v : per_i1) {
    for (const Tuple& t : v) {
      s.found.push_back(t);
      s.found.push_back(enantiomorph_tuple(t, p, q));
    }
  }
  std::sort(s.found.begin(), s.found.end());
  s.found.erase(std::unique(s.found.begin(), s.found.end()), s.found.end());
  s.examined = examined;
  s.full = full;
  return s;
}

Realization realize_tuple(const Tuple& t, int p, int q) {
  return realize(gp_presentation({p, q, t.i1, t.j1, t.i2, t.j2, {}}));
}

}  // namespace

SearchResult exhaustive_search(SchlafliType type, const SearchOptions& options) {
  const int p = type.p;
  const int q = type.q;
  if (p < 1 || q < 1) throw Error(ErrorKind::BadParameters, "p and q must be positive");
  if (static_cast<long>(p) * q > options.budget) {
    throw Error(ErrorKind::BudgetExceeded, "p*q = " + std::to_string(static_cast<long>(p) * q) +
                                               " exceeds the search budget " +
                                               std::to_string(options.budget));
  }
  SearchResult result;
  result.type = type;
  result.dedup = options.dedup;

  // A generator of order 1 is never polytopal.
  if (p == 1 || q == 1) return result;

  std::vector<Tuple> found;
  if (p <= q) {
    Sweep s = sweep(p, q, options.jobs);
    found = std::move(s.found);
    result.tuples_examined = s.examined;
    result.full_enumerations = s.full;
  } else {
    Sweep s = sweep(q, p, options.jobs);
    for (const Tuple& t : s.found) found.push_back(dual_tuple(t));
    std::sort(found.begin(), found.end());
    result.tuples_examined = s.examined;
    result.full_enumerations = s.full;
  }

  // Group tuples realizing the same group (generator-respecting).
  std::vector<Realization> reps;
  std::vector<SearchBucket> buckets;
  for (const Tuple& t : found) {
    Realization g = realize_tuple(t, p, q);
    bool placed = false;
    for (std::size_t b = 0; b < buckets.size() && !placed; ++b) {
      if (mutually_cover(reps[b], g)) {
        buckets[b].members.push_back(t);
        placed = true;
      }
    }
    if (!placed) {
      buckets.push_back({{t}, t, 0});
      reps.push_back(std::move(g));
    }
  }
  std::map<Tuple, std::size_t> bucket_of;
  for (std::size_t b = 0; b < buckets.size(); ++b) {
    for (const Tuple& t : buckets[b].members) bucket_of[t] = b;
  }
  for (SearchBucket& b : buckets) b.enantiomorph = bucket_of.at(enantiomorph_tuple(b.representative, p, q));

  if (options.dedup == Dedup::None) {
    result.buckets = std::move(buckets);
    return result;
  }
  // Keep one bucket per orbit: the one with the least representative.
  std::vector<std::size_t> kept;
  for (std::size_t b = 0; b < buckets.size(); ++b) {
    std::vector<Tuple> orbit{buckets[b].representative,
                             enantiomorph_tuple(buckets[b].representative, p, q)};
    if (options.dedup == Dedup::EnantiomorphAndDual && p == q) {
      const Tuple d = dual_tuple(buckets[b].representative);
      orbit.push_back(d);
      orbit.push_back(enantiomorph_tuple(d, p, q));
    }
    bool least = true;
    for (const Tuple& x : orbit) {
      if (buckets[bucket_of.at(x)].representative < buckets[b].representative) least = false;
    }
    if (least) kept.push_back(b);
  }
  for (std::size_t b : kept) {
    SearchBucket nb = buckets[b];
    nb.enantiomorph = result.buckets.size();
    result.buckets.push_back(std::move(nb));
  }
  return result;
}

}  // namespace tight
