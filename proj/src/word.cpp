#include "tight/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace tight {

Word Word::power(int gen, long k) {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(std::labs(k)));
  const Letter l{static_cast<std::uint8_t>(gen), static_cast<std::int8_t>(k < 0 ? -1 : 1)};
  for (long i = 0; i < std::labs(k); ++i) out.push_back(l);
  return Word(std::move(out));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::reduced() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i] == letters_[i - 1].inverse()) return false;
  }
  return true;
}

Word Word::pow(long k) const {
  const Word base = k < 0 ? inverse() : *this;
  std::vector<Letter> out;
  out.reserve(base.size() * static_cast<std::size_t>(std::labs(k)));
  for (long i = 0; i < std::labs(k); ++i) {
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  }
  return Word(std::move(out));
}

int Word::pure_power_gen() const {
  if (letters_.empty()) return 0;
  const Letter first = letters_.front();
  for (const Letter& l : letters_) {
    if (l != first) return 0;
  }
  return first.gen;
}

long Word::exponent_sum(int gen) const {
  long s = 0;
  for (const Letter& l : letters_) {
    if (l.gen == gen) s += l.sign;
  }
  return s;
}

Word Word::operator*(const Word& other) const {
  Word out = *this;
  out *= other;
  return out;
}

Word& Word::operator*=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word free_reduce(const Word& w) { return w.reduced(); }

Word dual_word(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w.letters()) {
    out.push_back({static_cast<std::uint8_t>(3 - l.gen), static_cast<std::int8_t>(-l.sign)});
  }
  return Word(std::move(out));
}

Word enantiomorph_word(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w.letters()) out.push_back(l.inverse());
  return Word(std::move(out));
}

}  // namespace tight
