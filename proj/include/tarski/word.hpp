#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tarski {

/// A signed generator: +i is the i-th generator (1-based), -i its inverse.
using Letter = int;

/// Position of a letter in the shortlex letter order x1 < x1^-1 < x2 < x2^-1 < ...
inline int letter_index(Letter l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }
inline Letter letter_from_index(int li) { return li % 2 == 0 ? li / 2 + 1 : -(li / 2 + 1); }

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  /// Generators named x1..x<rank>.
  static Alphabet numbered(int rank, std::string_view stem = "x");

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int generator) const { return names_.at(generator - 1); }
  bool valid(Letter l) const { return l != 0 && (l > 0 ? l : -l) <= rank(); }

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

/// A freely reduced word. The empty word is the identity.
class Word {
 public:
  Word() = default;
  /// Reduces `raw`; letters are not validated against any alphabet.
  Word(std::initializer_list<Letter> raw);
  static Word reduce(std::span<const Letter> raw);
  static Word generator(int i) { return Word(std::vector<Letter>{i}, Reduced{}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_identity() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word inverse() const;
  Word pow(long long e) const;
  /// Subword [pos, pos+len) of a reduced word; reduced again by construction.
  Word slice(std::size_t pos, std::size_t len) const;

  friend Word operator*(const Word& u, const Word& v);
  Word& operator*=(const Word& v) { return *this = *this * v; }

  bool operator==(const Word&) const = default;
  /// Shortlex with the letter order of letter_index().
  friend std::strong_ordering operator<=>(const Word& u, const Word& v);

 private:
  struct Reduced {};
  Word(std::vector<Letter> letters, Reduced) : letters_(std::move(letters)) {}
  std::vector<Letter> letters_;
};

/// Reduction with validation; throws std::invalid_argument on a letter outside the alphabet.
Word reduce(const Alphabet& alphabet, std::span<const Letter> raw);

/// u = conjugator^-1 * core * conjugator with core cyclically reduced.
struct CyclicReduction {
  Word core;
  Word conjugator;
};
CyclicReduction cyclic_reduce(const Word& u);

/// g^-1 h^-1 g h
Word commutator(const Word& g, const Word& h);
/// Left-normed [w1, w2, ..., wn].
Word commutator(std::span<const Word> ws);

std::vector<int> abelianize(const Word& w, int rank);

/// Names joined by "·", inverses as "name⁻¹", identity "1".
std::string to_string(const Word& w, const Alphabet& alphabet);
/// Accepts "·", "*", "." or blanks as separators, "⁻¹", "^-1" and "^k" exponents, "1" for identity,
/// and juxtaposed names when they can be split greedily.
Word parse_word(std::string_view text, const Alphabet& alphabet);

class WordParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every reduced word of length <= max_length in shortlex order.
std::vector<Word> all_reduced_words(int rank, int max_length);

}  // namespace tarski
