#include "tight/todd_coxeter.hpp"

#include <algorithm>

namespace tight {

std::vector<std::uint8_t> to_columns(const Word& w) {
  std::vector<std::uint8_t> out;
  out.reserve(w.size());
  for (const Letter& l : w.letters()) out.push_back(static_cast<std::uint8_t>(l.column()));
  return out;
}

ToddCoxeter::ToddCoxeter(std::span<const Word> relators, std::span<const Word> subgroup_gens,
                         std::size_t max_cosets)
    : max_cosets_(std::max<std::size_t>(max_cosets, 1)) {
  for (const Word& w : relators) {
    Word r = w.reduced();
    if (!r.empty()) relators_.push_back(to_columns(r));
  }
  for (const Word& w : subgroup_gens) {
    Word r = w.reduced();
    if (!r.empty()) subgroup_.push_back(to_columns(r));
  }
}

ToddCoxeter::ToddCoxeter(std::vector<Rel> relators, std::vector<Rel> subgroup_gens,
                         std::size_t max_cosets)
    : relators_(std::move(relators)),
      subgroup_(std::move(subgroup_gens)),
      max_cosets_(std::max<std::size_t>(max_cosets, 1)) {}

void ToddCoxeter::reconfigure(const std::vector<Rel>& relators, const std::vector<Rel>& subgroup_gens,
                              std::size_t max_cosets) {
  relators_.resize(relators.size());
  for (std::size_t i = 0; i < relators.size(); ++i) relators_[i].assign(relators[i].begin(), relators[i].end());
  subgroup_.resize(subgroup_gens.size());
  for (std::size_t i = 0; i < subgroup_gens.size(); ++i) {
    subgroup_[i].assign(subgroup_gens[i].begin(), subgroup_gens[i].end());
  }
  max_cosets_ = std::max<std::size_t>(max_cosets, 1);
}

void ToddCoxeter::reset(std::size_t n_initial) {
  table_.assign(n_initial * 4, kUndefined);
  parent_.resize(n_initial);
  for (std::size_t c = 0; c < n_initial; ++c) parent_[c] = static_cast<Coset>(c);
  allocated_ = n_initial;
  dead_ = 0;
  total_defined_ = n_initial;
  collapsed_ = false;
  queue_.clear();
}

ToddCoxeter::Coset ToddCoxeter::new_coset() {
  if (allocated_ >= max_cosets_) return kUndefined;
  const Coset c = static_cast<Coset>(allocated_++);
  if (table_.size() < allocated_ * 4) {
    table_.resize(allocated_ * 4, kUndefined);
    parent_.resize(allocated_);
  }
  std::fill_n(table_.begin() + static_cast<std::ptrdiff_t>(c) * 4, 4, kUndefined);
  parent_[c] = c;
  ++total_defined_;
  return c;
}

ToddCoxeter::Coset ToddCoxeter::rep(Coset c) {
  Coset root = c;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[c] != root) {
    const Coset next = parent_[c];
    parent_[c] = root;
    c = next;
  }
  return root;
}

void ToddCoxeter::merge(Coset a, Coset b) {
  a = rep(a);
  b = rep(b);
  if (a == b) return;
  const Coset keep = std::min(a, b);
  const Coset drop = std::max(a, b);
  parent_[drop] = keep;
  ++dead_;
  queue_.push_back(drop);
}

void ToddCoxeter::coincidence(Coset a, Coset b) {
  if (rep(a) == rep(b)) return;
  if (stop_on_coincidence_) {
    collapsed_ = true;
    return;
  }
  queue_.clear();
  merge(a, b);
  for (std::size_t i = 0; i < queue_.size(); ++i) {
    const Coset g = queue_[i];
    for (int col = 0; col < 4; ++col) {
      const Coset d = entry(g, col);
      if (d == kUndefined) continue;
      entry(d, col ^ 1) = kUndefined;
      const Coset m = rep(g);
      const Coset n = rep(d);
      if (entry(m, col) != kUndefined) {
        merge(n, entry(m, col));
      } else if (entry(n, col ^ 1) != kUndefined) {
        merge(m, entry(n, col ^ 1));
      } else {
        entry(m, col) = n;
        entry(n, col ^ 1) = m;
      }
    }
  }
  queue_.clear();
}

bool ToddCoxeter::scan_and_fill(Coset c, const Rel& r) {
  Coset f = c;
  Coset b = c;
  std::size_t i = 0;
  std::size_t j = r.size();  // one past the last unscanned letter
  while (true) {
    while (i < j && entry(f, r[i]) != kUndefined) f = entry(f, r[i++]);
    if (i == j) {
      if (f != b) coincidence(f, b);
      return true;
    }
    while (j > i && entry(b, r[j - 1] ^ 1) != kUndefined) b = entry(b, r[--j] ^ 1);
    if (j == i) {
      coincidence(f, b);
      return true;
    }
    if (j == i + 1) {
      entry(f, r[i]) = b;
      entry(b, r[i] ^ 1) = f;
      return true;
    }
    const Coset d = new_coset();
    if (d == kUndefined) return false;
    entry(f, r[i]) = d;
    entry(d, r[i] ^ 1) = f;
  }
}

bool ToddCoxeter::scan(Coset c, const Rel& r) {
  Coset f = c;
  Coset b = c;
  std::size_t i = 0;
  std::size_t j = r.size();
  while (i < j && entry(f, r[i]) != kUndefined) f = entry(f, r[i++]);
  if (i == j) {
    if (f != b) {
      coincidence(f, b);
      return true;
    }
    return false;
  }
  while (j > i && entry(b, r[j - 1] ^ 1) != kUndefined) b = entry(b, r[--j] ^ 1);
  if (j == i) {
    if (f != b) {
      coincidence(f, b);
      return true;
    }
    return false;
  }
  if (j == i + 1) {
    entry(f, r[i]) = b;
    entry(b, r[i] ^ 1) = f;
    return true;
  }
  return false;
}

bool ToddCoxeter::lookahead() {
  bool changed = false;
  for (std::size_t c = 0; c < allocated_; ++c) {
    for (const Rel& r : relators_) {
      if (!live(static_cast<Coset>(c))) break;
      changed |= scan(static_cast<Coset>(c), r);
    }
  }
  return changed;
}

void ToddCoxeter::compact() {
  std::vector<Coset> remap(allocated_, kUndefined);
  Coset next = 0;
  for (std::size_t c = 0; c < allocated_; ++c) {
    if (live(static_cast<Coset>(c))) remap[c] = next++;
  }
  std::vector<Coset> fresh(static_cast<std::size_t>(next) * 4, kUndefined);
  for (std::size_t c = 0; c < allocated_; ++c) {
    if (remap[c] == kUndefined) continue;
    for (int col = 0; col < 4; ++col) {
      const Coset d = entry(static_cast<Coset>(c), col);
      if (d != kUndefined) fresh[static_cast<std::size_t>(remap[c]) * 4 + col] = remap[rep(d)];
    }
  }
  table_ = std::move(fresh);
  allocated_ = static_cast<std::size_t>(next);
  parent_.resize(allocated_);
  for (std::size_t c = 0; c < allocated_; ++c) parent_[c] = static_cast<Coset>(c);
  dead_ = 0;
}

ToddCoxeter::Status ToddCoxeter::run() {
  stop_on_coincidence_ = false;
  reset(1);

  // Returns the index to resume from, or -1 if no room could be made.
  auto make_room = [&](std::size_t c) -> long {
    lookahead();
    std::size_t live_before = 0;
    for (std::size_t x = 0; x < c && x < allocated_; ++x) live_before += live(static_cast<Coset>(x));
    if (dead_ == 0) return -1;
    compact();
    return static_cast<long>(live_before);
  };

  for (const Rel& g : subgroup_) {
    while (!scan_and_fill(0, g)) {
      if (make_room(0) < 0) return Status::Overflow;
    }
  }
  std::size_t c = 0;
  while (c < allocated_) {
    bool restart = false;
    if (live(static_cast<Coset>(c))) {
      for (const Rel& r : relators_) {
        if (!scan_and_fill(static_cast<Coset>(c), r)) {
          const long resume = make_room(c);
          if (resume < 0) return Status::Overflow;
          c = static_cast<std::size_t>(resume);
          restart = true;
          break;
        }
        if (!live(static_cast<Coset>(c))) break;
      }
    }
    if (!restart) ++c;
  }
  compact();
  return Status::Complete;
}

ToddCoxeter::Status ToddCoxeter::run_seeded_cycle(int gen, std::size_t n) {
  stop_on_coincidence_ = true;
  reset(n);
  const int col = 2 * (gen - 1);
  for (std::size_t a = 0; a < n; ++a) {
    const Coset next = static_cast<Coset>((a + 1) % n);
    entry(static_cast<Coset>(a), col) = next;
    entry(next, col ^ 1) = static_cast<Coset>(a);
  }
  return saturate_seeded(n);
}

ToddCoxeter::Status ToddCoxeter::run_seeded(std::size_t n, std::span<const Seed> seeds) {
  stop_on_coincidence_ = true;
  reset(n);
  for (const Seed& s : seeds) {
    const Coset old = entry(s.from, s.col);
    const Coset back = entry(s.to, s.col ^ 1);
    if ((old != kUndefined && old != s.to) || (back != kUndefined && back != s.from)) {
      return Status::Collapsed;
    }
    entry(s.from, s.col) = s.to;
    entry(s.to, s.col ^ 1) = s.from;
  }
  return saturate_seeded(n);
}

ToddCoxeter::Status ToddCoxeter::saturate_seeded(std::size_t n) {
  const std::size_t nr = relators_.size();
  closed_.assign(n * nr, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rel& g : subgroup_) {
      changed |= scan(0, g);
      if (collapsed_) return Status::Collapsed;
    }
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t k = 0; k < nr; ++k) {
        if (closed_[c * nr + k]) continue;
        // A scan that traces through or fills its only gap stays closed:
        // seeded mode never removes entries.
        const Rel& r = relators_[k];
        Coset f = static_cast<Coset>(c);
        Coset b = f;
        std::size_t i = 0;
        std::size_t j = r.size();
        while (i < j && entry(f, r[i]) != kUndefined) f = entry(f, r[i++]);
        if (i == j) {
          if (f != static_cast<Coset>(c)) return Status::Collapsed;
          closed_[c * nr + k] = 1;
          continue;
        }
        while (j > i && entry(b, r[j - 1] ^ 1) != kUndefined) b = entry(b, r[--j] ^ 1);
        if (j == i) {
          if (f != b) return Status::Collapsed;
          closed_[c * nr + k] = 1;
          continue;
        }
        if (j == i + 1) {
          entry(f, r[i]) = b;
          entry(b, r[i] ^ 1) = f;
          closed_[c * nr + k] = 1;
          changed = true;
        }
      }
    }
  }
  for (std::uint8_t x : closed_) {
    if (!x) return Status::Incomplete;
  }
  return complete_table() ? Status::Complete : Status::Incomplete;
}

bool ToddCoxeter::complete_table() const {
  for (std::size_t c = 0; c < allocated_; ++c) {
    if (parent_[c] != static_cast<Coset>(c)) continue;
    for (int col = 0; col < 4; ++col) {
      if (entry(static_cast<Coset>(c), col) == kUndefined) return false;
    }
  }
  return true;
}

std::size_t ToddCoxeter::live_cosets() const { return allocated_ - dead_; }

std::vector<std::array<ToddCoxeter::Coset, 4>> ToddCoxeter::table() const {
  std::vector<std::array<Coset, 4>> out(allocated_);
  for (std::size_t c = 0; c < allocated_; ++c) {
    for (int col = 0; col < 4; ++col) out[c][col] = entry(static_cast<Coset>(c), col);
  }
  return out;
}

}  // namespace tight
