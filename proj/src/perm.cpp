#include "tight/perm.hpp"

#include <cstdlib>
#include <numeric>

namespace tight {

Perm Perm::identity(std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<Point> inv(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) inv[img_[x]] = static_cast<Point>(x);
  return Perm(std::move(inv));
}

Perm Perm::operator*(const Perm& then) const {
  std::vector<Point> out(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) out[x] = then.img_[img_[x]];
  return Perm(std::move(out));
}

Perm Perm::pow(long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(std::labs(k));
  Perm acc = identity(img_.size());
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (img_[x] != x) return false;
  }
  return true;
}

bool Perm::is_bijection() const {
  std::vector<bool> hit(img_.size(), false);
  for (Point y : img_) {
    if (y >= img_.size() || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

std::uint64_t element_order(const Perm& g) {
  const auto& img = g.images();
  std::vector<bool> seen(img.size(), false);
  std::uint64_t order = 1;
  for (std::size_t x = 0; x < img.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (Point y = static_cast<Point>(x); !seen[y]; y = img[y]) {
      seen[y] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

}  // namespace tight
