#include "tight/analysis.hpp"

#include <sstream>
#include <unordered_set>

#include "tight/coset_enumeration.hpp"

namespace tight {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NotPolytopal: return "NOT_POLYTOPAL";
    case Verdict::OrientablyRegular: return "ORIENTABLY_REGULAR";
    case Verdict::Chiral: return "CHIRAL";
  }
  return "?";
}

namespace {

Realization regular_copy(const Realization& g) { return g.is_regular() ? g : to_regular(g); }

bool inverted_relators_hold(const Realization& g, const Presentation& pres) {
  for (const Word& w : pres.relators()) {
    if (!g.satisfies(enantiomorph_word(w))) return false;
  }
  return true;
}

ClassificationReport build_report(const Realization& g, bool use_relators) {
  ClassificationReport r;
  r.schlafli = g.gen_orders();
  r.order = g.order();
  r.polytopal = is_polytopal(g);
  r.tight = is_tight(g);
  r.cores = {cyclic_core(g, 1), cyclic_core(g, 2)};
  if (!r.polytopal) {
    r.verdict = Verdict::NotPolytopal;
  } else {
    const bool regular =
        use_relators ? inverted_relators_hold(g, *g.source()) : is_orientably_regular(g);
    r.verdict = regular ? Verdict::OrientablyRegular : Verdict::Chiral;
  }
  if (r.verdict == Verdict::Chiral && r.tight) r.atomic = is_atomic(g);
  return r;
}

}  // namespace

bool intersection_trivial(const Realization& g) {
  const Realization r = regular_copy(g);
  const std::vector<Point> a = cyclic_points(r, 1);
  const std::unordered_set<Point> in_a(a.begin(), a.end());
  for (Point x = r.gen(2)(0); x != 0; x = r.gen(2)(x)) {
    if (in_a.count(x)) return false;
  }
  return true;
}

bool is_polytopal(const Realization& g) {
  const auto o = g.gen_orders();
  return o[0] > 1 && o[1] > 1 && intersection_trivial(g);
}

bool is_tight(const Realization& g) {
  const auto o = g.gen_orders();
  return g.order() == o[0] * o[1];
}

bool is_tight_by_product_set(const Realization& g) {
  const Realization r = regular_copy(g);
  std::unordered_set<Point> product;
  for (Point a : cyclic_points(r, 1)) {
    Point x = a;
    do {
      product.insert(x);
      x = r.gen(2)(x);
    } while (x != a);
  }
  return product.size() == r.order();
}

ClassificationReport classify(const Presentation& pres, std::size_t max_cosets) {
  return build_report(realize(pres, max_cosets), true);
}

ClassificationReport classify(const Presentation& pres) {
  return classify(pres, default_max_cosets(pres));
}

ClassificationReport classify(const Realization& g) {
  const bool relators = g.source().has_value() && g.is_regular();
  return build_report(regular_copy(g), relators);
}

bool is_atomic(const Realization& g) {
  const Realization r = regular_copy(g);
  for (int gen = 1; gen <= 2; ++gen) {
    const std::uint64_t n = generator_order(r, gen);
    const std::uint64_t core = cyclic_core(r, gen).exponent;
    // <s^d> is normal exactly when the core exponent divides d.
    for (std::uint64_t d = core; d < n; d += core) {
      if (n % d != 0) continue;
      const Realization quo = quotient_by_cyclic(r, gen, d);
      if (is_tight(quo) && is_polytopal(quo) && !is_orientably_regular(quo)) return false;
    }
  }
  return true;
}

nlohmann::json to_json(const ClassificationReport& r) {
  nlohmann::json j;
  j["schlafli"] = {r.schlafli[0], r.schlafli[1]};
  j["order"] = r.order;
  j["polytopal"] = r.polytopal;
  j["tight"] = r.tight;
  j["verdict"] = to_string(r.verdict);
  j["cores"] = {
      {"s1", {{"exponent", r.cores[0].exponent}, {"multiplier", r.cores[0].multiplier}}},
      {"s2", {{"exponent", r.cores[1].exponent}, {"multiplier", r.cores[1].multiplier}}},
  };
  j["atomic"] = r.atomic ? nlohmann::json(*r.atomic) : nlohmann::json(nullptr);
  return j;
}

std::string to_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "type       {" << r.schlafli[0] << "," << r.schlafli[1] << "}\n"
      << "order      " << r.order << "\n"
      << "polytopal  " << (r.polytopal ? "yes" : "no") << "\n"
      << "tight      " << (r.tight ? "yes" : "no") << "\n"
      << "verdict    " << to_string(r.verdict) << "\n"
      << "core s1    exponent " << r.cores[0].exponent << ", multiplier " << r.cores[0].multiplier
      << "\n"
      << "core s2    exponent " << r.cores[1].exponent << ", multiplier " << r.cores[1].multiplier
      << "\n"
      << "atomic     " << (r.atomic ? (*r.atomic ? "yes" : "no") : "n/a") << "\n";
  return out.str();
}

}  // namespace tight
