#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace tight {

/// One signed generator letter: s1, s1^-1, s2 or s2^-1.
struct Letter {
  std::uint8_t gen = 1;   // 1 or 2
  std::int8_t sign = 1;   // +1 or -1

  constexpr Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }

  /// Column index used by coset tables: s1 -> 0, s1^-1 -> 1, s2 -> 2, s2^-1 -> 3.
  constexpr int column() const { return 2 * (gen - 1) + (sign < 0 ? 1 : 0); }

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

inline constexpr Letter s1{1, 1};
inline constexpr Letter s1inv{1, -1};
inline constexpr Letter s2{2, 1};
inline constexpr Letter s2inv{2, -1};

/// A word in the free group on s1, s2. Words are stored as given; call
/// reduced() for the freely reduced form.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// s_gen^k; the empty word for k == 0.
  static Word power(int gen, long k);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word reduced() const;
  bool is_reduced() const;
  Word pow(long k) const;

  /// If the word is a pure power s_gen^k (k != 0) returns gen, else 0.
  int pure_power_gen() const;
  /// Signed exponent sum of the letters of one generator.
  long exponent_sum(int gen) const;

  Word operator*(const Word& other) const;
  Word& operator*=(const Word& other);

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(const Word& w);

/// Letterwise images under the two rotation-group transforms.
/// dual: s_i -> s_{3-i}^{-1}; enantiomorph: s_i -> s_i^{-1}.
Word dual_word(const Word& w);
Word enantiomorph_word(const Word& w);

}  // namespace tight
