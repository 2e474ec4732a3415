#include "tight/realization.hpp"

#include <deque>
#include <string>
#include <unordered_map>

#include "tight/error.hpp"

namespace tight {

namespace {

struct PermHash {
  std::size_t operator()(const std::vector<Point>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (Point x : v) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

// Breadth-first closure of <a, b>. Returns the elements (as image vectors)
// and the right-multiplication tables by a and b.
struct Closure {
  std::vector<std::vector<Point>> elements;
  std::vector<Point> times_a;
  std::vector<Point> times_b;
};

Closure close(const Perm& a, const Perm& b, std::size_t limit) {
  Closure c;
  std::unordered_map<std::vector<Point>, Point, PermHash> index;
  auto intern = [&](std::vector<Point> v) -> Point {
    auto it = index.find(v);
    if (it != index.end()) return it->second;
    if (c.elements.size() >= limit) {
      throw Error(ErrorKind::BudgetExceeded,
                  "group closure exceeded " + std::to_string(limit) + " elements");
    }
    const Point id = static_cast<Point>(c.elements.size());
    index.emplace(v, id);
    c.elements.push_back(std::move(v));
    return id;
  };
  intern(Perm::identity(a.degree()).images());
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    const std::vector<Point> cur = c.elements[i];
    for (int g = 0; g < 2; ++g) {
      const Perm& gen = g == 0 ? a : b;
      std::vector<Point> next(cur.size());
      for (std::size_t x = 0; x < cur.size(); ++x) next[x] = gen(cur[x]);
      const Point id = intern(std::move(next));
      (g == 0 ? c.times_a : c.times_b).push_back(id);
    }
  }
  return c;
}

bool transitive(const Perm& a, const Perm& b) {
  const std::size_t n = a.degree();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<Point> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Point x = stack.back();
    stack.pop_back();
    for (Point y : {a(x), b(x)}) {
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

}  // namespace

Realization::Realization(Perm s1, Perm s2, bool regular, std::optional<Presentation> source,
                         std::size_t closure_limit)
    : gens_{std::move(s1), std::move(s2)}, regular_(regular), source_(std::move(source)) {
  if (gens_[0].degree() != gens_[1].degree() || !gens_[0].is_bijection() ||
      !gens_[1].is_bijection()) {
    throw Error(ErrorKind::Internal, "realization generators are not permutations of one set");
  }
  inverses_ = {gens_[0].inverse(), gens_[1].inverse()};
  gen_orders_ = {element_order(gens_[0]), element_order(gens_[1])};
  if (regular_) {
    if (!transitive(gens_[0], gens_[1])) {
      throw Error(ErrorKind::Internal, "regular realization is not transitive");
    }
    order_ = degree();
  } else {
    order_ = close(gens_[0], gens_[1], closure_limit).elements.size();
  }
}

Point Realization::trace(Point x, const Word& w) const {
  for (const Letter& l : w.letters()) {
    x = l.sign > 0 ? gens_[l.gen - 1](x) : inverses_[l.gen - 1](x);
  }
  return x;
}

Perm Realization::evaluate(const Word& w) const {
  std::vector<Point> img(degree());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = trace(static_cast<Point>(x), w);
  return Perm(std::move(img));
}

bool Realization::satisfies(const Word& relator) const {
  if (regular_) {
    // In a regular action an element is trivial iff it fixes one point.
    return trace(0, relator) == 0;
  }
  for (std::size_t x = 0; x < degree(); ++x) {
    if (trace(static_cast<Point>(x), relator) != x) return false;
  }
  return true;
}

bool Realization::satisfies_all(const Presentation& pres) const {
  for (const Word& r : pres.relators()) {
    if (!satisfies(r)) return false;
  }
  return true;
}

Realization to_regular(const Realization& g, std::size_t closure_limit) {
  if (g.is_regular()) return g;
  Closure c = close(g.gen(1), g.gen(2), closure_limit);
  return Realization(Perm(std::move(c.times_a)), Perm(std::move(c.times_b)), true, g.source());
}

}  // namespace tight
