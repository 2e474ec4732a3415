#pragma once

#include <cstdint>
#include <vector>

namespace tight {

using Point = std::uint32_t;

/// A permutation of {0, ..., n-1} acting on the right: x -> x^g. Products
/// compose left to right, so (g * h)(x) = h(g(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> images) : img_(std::move(images)) {}
  static Perm identity(std::size_t n);

  std::size_t degree() const { return img_.size(); }
  Point operator()(Point x) const { return img_[x]; }
  const std::vector<Point>& images() const { return img_; }

  Perm inverse() const;
  Perm operator*(const Perm& then) const;
  Perm pow(long k) const;
  bool is_identity() const;
  bool is_bijection() const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> img_;
};

/// Least n >= 1 with g^n = 1 (lcm of the cycle lengths).
std::uint64_t element_order(const Perm& g);

}  // namespace tight
