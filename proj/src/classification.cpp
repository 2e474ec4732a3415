#include "tight/classification.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "tight/analysis.hpp"
#include "tight/coset_enumeration.hpp"
#include "tight/error.hpp"

namespace tight {

namespace {

// Smallest odd prime m with m | a and m^2 | b, or 0.
int odd_prime_for(long a, long b) {
  for (long m = 3; m <= a; m += 2) {
    if (is_odd_prime(m) && a % m == 0 && b % (m * m) == 0) return static_cast<int>(m);
  }
  return 0;
}

bool condition_odd_divisor(long p, long q) {
  return q % 2 == 1 && p % 2 == 0 && (2 * q) % p == 0 && odd_prime_for(p, q) != 0;
}

bool condition_even(long p, long q) {
  return p % 2 == 0 && q % 2 == 0 && odd_prime_for(p, q) != 0;
}

bool condition_pow2(long p, long q) { return p % 8 == 0 && q % 32 == 0; }

// Splits n = base^e * rest with rest coprime to base.
std::pair<int, long> split_power(long n, long base) {
  int e = 0;
  while (n % base == 0) {
    n /= base;
    ++e;
  }
  return {e, n};
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

struct Part {
  FamilySpec spec;
  Construction construction;
};

Part part(const FamilySpec& spec) { return {spec, build(spec)}; }

Witness mix_witness(const Part& a, const Part& b) {
  return {"mix(" + format_family_spec(a.spec) + ", " + format_family_spec(b.spec) + ")",
          mix_of(a.construction, b.construction)};
}

Witness dual_witness(const Witness& w) { return {"dual(" + w.description + ")", dual(w.construction)}; }

// Tight chiral group of type {2rm, sm^2}, for s even or r | sm.
Witness odd_chiral(int m, long r, long s) {
  const auto [alpha, r1] = split_power(r, m);
  const auto [beta, s1] = split_power(s, m);
  FamilySpec g1;
  g1.m = m;
  g1.k = 1;
  auto case1 = [&] {
    g1.tag = FamilyTag::OddCentralLt;
    g1.alpha = alpha + 1;
    g1.beta = beta + 2;
  };
  auto case2 = [&] {
    g1.tag = FamilyTag::OddCentralEq;
    g1.beta = beta + 2;
  };
  FamilySpec g2;
  g2.p = static_cast<int>(2 * r1);
  g2.q = static_cast<int>(s1);
  if (s % 2 == 0) {
    if (beta <= alpha - 2) {
      const long t = ipow(m, beta + 1) * s1 / 2;
      const long u = 2 * ipow(m, alpha - 1) * r1;
      return dual_witness(odd_chiral(m, t, u));
    }
    if (beta >= alpha) {
      case1();
    } else {
      case2();
    }
    g2.tag = FamilyTag::RegularEven;
  } else {
    if (beta + 1 > alpha) {
      case1();
    } else {
      case2();
    }
    g2.tag = FamilyTag::Regular2Q;
  }
  return mix_witness(part(g1), part(g2));
}

// Tight chiral group of type {8r, 32s}.
Witness even_chiral(long r, long s) {
  const auto [alpha, r1] = split_power(r, 2);
  const auto [beta, s1] = split_power(s, 2);
  const int a = alpha + 3;
  const int b = beta + 5;
  FamilySpec g2;
  g2.tag = FamilyTag::RegularEven;
  g2.p = static_cast<int>(2 * r1);
  g2.q = static_cast<int>(2 * s1);
  const Part p2 = part(g2);
  FamilySpec g1;
  if (a == b) {
    g1.tag = FamilyTag::EvenCentralMix;
    g1.alpha = a;
    return mix_witness(part(g1), p2);
  }
  g1.tag = FamilyTag::EvenCentral;
  g1.sign = 1;
  g1.alpha = std::min(a, b);
  g1.beta = std::max(a, b);
  if (a < b) return mix_witness(part(g1), p2);
  const Part p1 = part(g1);
  return {"mix(dual(" + format_family_spec(g1) + "), " + format_family_spec(g2) + ")",
          mix_of(dual(p1.construction), p2.construction)};
}

}  // namespace

int admissible_condition(SchlafliType t) {
  const long p = t.p;
  const long q = t.q;
  if (p < 2 || q < 2) return 0;
  if (condition_odd_divisor(p, q)) return 1;
  if (condition_odd_divisor(q, p)) return 2;
  if (condition_even(p, q)) return 3;
  if (condition_even(q, p)) return 4;
  if (condition_pow2(p, q)) return 5;
  if (condition_pow2(q, p)) return 6;
  return 0;
}

bool admissible(SchlafliType t) { return admissible_condition(t) != 0; }

Witness witness_for(SchlafliType t) {
  const int c = admissible_condition(t);
  const long p = t.p;
  const long q = t.q;
  switch (c) {
    case 1:
    case 3: {
      const int m = odd_prime_for(p, q);
      return odd_chiral(m, p / (2 * m), q / (static_cast<long>(m) * m));
    }
    case 2:
    case 4: {
      const int m = odd_prime_for(q, p);
      return dual_witness(odd_chiral(m, q / (2 * m), p / (static_cast<long>(m) * m)));
    }
    case 5: return even_chiral(p / 8, q / 32);
    case 6: return dual_witness(even_chiral(q / 8, p / 32));
    default: break;
  }
  throw Error(ErrorKind::NotAdmissible, "no tight chiral polyhedron of type {" + std::to_string(p) +
                                            "," + std::to_string(q) + "}");
}

Verification verify(const Witness& w, SchlafliType t) {
  Verification v;
  try {
    const Realization g = realize(w.construction);
    v.order = g.order();
    const auto o = g.gen_orders();
    if (o[0] != static_cast<std::uint64_t>(t.p) || o[1] != static_cast<std::uint64_t>(t.q)) {
      v.reason = "generator orders " + std::to_string(o[0]) + "," + std::to_string(o[1]);
    } else if (!is_tight(g)) {
      v.reason = "not tight (order " + std::to_string(g.order()) + ")";
    } else if (!is_polytopal(g)) {
      v.reason = "not polytopal";
    } else if (is_orientably_regular(g)) {
      v.reason = "orientably regular";
    } else {
      v.verified = true;
    }
  } catch (const Error& e) {
    v.reason = std::string(to_string(e.kind())) + ": " + e.what();
  }
  return v;
}

Dedup parse_dedup(const std::string& s) {
  if (s == "none" || s == "NONE") return Dedup::None;
  if (s == "enantiomorph" || s == "ENANTIOMORPH") return Dedup::Enantiomorph;
  if (s == "enantiomorph-and-dual" || s == "ENANTIOMORPH_AND_DUAL") return Dedup::EnantiomorphAndDual;
  throw Error(ErrorKind::BadParameters, "unknown dedup mode '" + s + "'");
}

const char* to_string(Dedup d) {
  switch (d) {
    case Dedup::None: return "none";
    case Dedup::Enantiomorph: return "enantiomorph";
    case Dedup::EnantiomorphAndDual: return "enantiomorph-and-dual";
  }
  return "?";
}

Tuple enantiomorph_tuple(const Tuple& t, int p, int q) {
  return {mod(-t.i2, p), mod(-t.j2, q), mod(-t.i1, p), mod(-t.j1, q)};
}

Tuple dual_tuple(const Tuple& t) { return {t.j2, t.i2, t.j1, t.i1}; }

std::vector<CensusEntry> census(long max_flags, CensusMode mode, int jobs) {
  if (max_flags < 4) throw Error(ErrorKind::BadParameters, "max_flags must be at least 4");
  std::vector<CensusEntry> out;
  for (long p = 2; 2 * p * 2 <= max_flags; ++p) {
    for (long q = 2; 2 * p * q <= max_flags; ++q) {
      const SchlafliType t{static_cast<int>(p), static_cast<int>(q)};
      if (admissible(t)) out.push_back({t, witness_for(t), std::nullopt});
    }
  }
  if (mode == CensusMode::Verified) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < out.size(); i = next++) {
        out[i].verification = verify(out[i].witness, out[i].type);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < std::max(jobs, 1); ++j) pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool) th.join();
  }
  return out;
}

nlohmann::json to_json(const CensusEntry& e) {
  nlohmann::json j;
  j["p"] = e.type.p;
  j["q"] = e.type.q;
  j["witness"] = e.witness.description;
  j["construction"] = describe(e.witness.construction);
  if (e.verification) {
    j["verified"] = e.verification->verified;
    j["order"] = e.verification->order;
    if (!e.verification->verified) j["reason"] = e.verification->reason;
  } else {
    j["verified"] = nullptr;
  }
  return j;
}

nlohmann::json to_json(const std::vector<CensusEntry>& entries) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CensusEntry& e : entries) arr.push_back(to_json(e));
  return arr;
}

nlohmann::json to_json(const SearchResult& r) {
  auto tuple_json = [](const Tuple& t) { return nlohmann::json::array({t.i1, t.j1, t.i2, t.j2}); };
  nlohmann::json j;
  j["p"] = r.type.p;
  j["q"] = r.type.q;
  j["dedup"] = to_string(r.dedup);
  j["tuples_examined"] = r.tuples_examined;
  nlohmann::json buckets = nlohmann::json::array();
  for (const SearchBucket& b : r.buckets) {
    nlohmann::json members = nlohmann::json::array();
    for (const Tuple& t : b.members) members.push_back(tuple_json(t));
    buckets.push_back({{"representative", tuple_json(b.representative)},
                       {"members", members},
                       {"enantiomorph", b.enantiomorph}});
  }
  j["buckets"] = buckets;
  return j;
}

namespace {

struct Run {
  int k = 1;
  int lo = 0;
  int hi = 0;
};

// Covers the q values of one row by runs {k n : lo <= n <= hi} with k >= lo
// that lie inside the row, greedily taking the run adding the most
// uncovered values.
std::vector<Run> cover_by_runs(const std::vector<int>& qs) {
  const std::set<int> present(qs.begin(), qs.end());
  std::vector<Run> candidates;
  std::set<int> ks;
  for (int q : qs) {
    for (int k = 1; k <= q; ++k) {
      if (q % k == 0) ks.insert(k);
    }
  }
  for (int k : ks) {
    int n = 1;
    const int top = *present.rbegin() / k;
    while (n <= top) {
      if (!present.count(k * n)) {
        ++n;
        continue;
      }
      Run r{k, n, n};
      while (present.count(k * (r.hi + 1))) ++r.hi;
      if (k >= r.lo || r.lo == r.hi) candidates.push_back(r);
      n = r.hi + 1;
    }
  }
  std::set<int> uncovered = present;
  std::vector<Run> chosen;
  while (!uncovered.empty()) {
    const Run* best = nullptr;
    int best_gain = 0;
    for (const Run& r : candidates) {
      int gain = 0;
      for (int n = r.lo; n <= r.hi; ++n) gain += static_cast<int>(uncovered.count(r.k * n));
      if (gain > best_gain || (gain == best_gain && gain > 0 && r.k > best->k)) {
        best = &r;
        best_gain = gain;
      }
    }
    for (int n = best->lo; n <= best->hi; ++n) uncovered.erase(best->k * n);
    chosen.push_back(*best);
  }
  std::sort(chosen.begin(), chosen.end(), [](const Run& a, const Run& b) { return a.k * a.lo < b.k * b.lo; });
  return chosen;
}

}  // namespace

std::string census_table(const std::vector<CensusEntry>& entries) {
  std::map<int, std::vector<int>> rows;
  for (const CensusEntry& e : entries) {
    if (e.type.p <= e.type.q) rows[e.type.p].push_back(e.type.q);
  }
  std::vector<std::string> cells;
  for (const auto& [p, qs] : rows) {
    for (const Run& r : cover_by_runs(qs)) {
      std::ostringstream cell;
      if (r.lo == r.hi) {
        cell << "{" << p << ", " << r.k * r.lo << "}";
      } else {
        cell << "{" << p << ", " << (r.k == 1 ? "" : std::to_string(r.k)) << "n} for " << r.lo << " <= n <= " << r.hi;
      }
      cells.push_back(cell.str());
    }
  }
  std::size_t width = 0;
  for (const std::string& c : cells) width = std::max(width, c.size());
  std::ostringstream out;
  for (std::size_t i = 0; i < cells.size(); i += 2) {
    out << cells[i];
    if (i + 1 < cells.size()) out << std::string(width - cells[i].size(), ' ') << " | " << cells[i + 1];
    out << "\n";
  }
  return out.str();
}

std::vector<SchlafliType> read_atlas_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  std::vector<SchlafliType> out;
  while (std::getline(in, line)) {
    ++lineno;
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }),
               line.end());
    if (line.empty()) continue;
    if (!header) {
      if (line != "p,q") throw ParseError(lineno, 1, "expected header 'p,q'");
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw ParseError(lineno, 1, "expected two columns");
    }
    try {
      std::size_t used = 0;
      const int p = std::stoi(line.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("p");
      const std::string qs = line.substr(comma + 1);
      const int q = std::stoi(qs, &used);
      if (used != qs.size()) throw std::invalid_argument("q");
      out.push_back({p, q});
    } catch (const std::logic_error&) {
      throw ParseError(lineno, 1, "non-integer entry");
    }
  }
  if (!header) throw ParseError(1, 1, "empty atlas file");
  return out;
}

AtlasComparison compare_with_atlas(const std::vector<CensusEntry>& entries,
                                   const std::vector<SchlafliType>& atlas) {
  std::set<SchlafliType> ours;
  for (const CensusEntry& e : entries) ours.insert(e.type);
  const std::set<SchlafliType> theirs(atlas.begin(), atlas.end());
  AtlasComparison c;
  std::set_difference(theirs.begin(), theirs.end(), ours.begin(), ours.end(),
                      std::back_inserter(c.missing_from_census));
  std::set_difference(ours.begin(), ours.end(), theirs.begin(), theirs.end(),
                      std::back_inserter(c.extra_in_census));
  return c;
}

nlohmann::json to_json(const AtlasComparison& c) {
  auto list = [](const std::vector<SchlafliType>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const SchlafliType& t : v) a.push_back({t.p, t.q});
    return a;
  };
  return {{"equal", c.equal()},
          {"missing_from_census", list(c.missing_from_census)},
          {"extra_in_census", list(c.extra_in_census)}};
}

}  // namespace tight
