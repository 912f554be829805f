#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tarski/word.hpp"

namespace tarski {

/// A set of reduced words of F(rank), held as the minimal trimmed DFA over the 2*rank signed
/// letters (letter_index order). State 0 is initial; states are numbered breadth-first in letter
/// order, so two RegSets denote the same set iff they compare equal.
class RegSet {
 public:
  /// Raw DFA input: transitions[q][letter_index] = target or -1. Words that are not reduced are
  /// dropped from the language.
  struct Dfa {
    std::vector<std::vector<int>> transitions;
    std::vector<bool> accepting;
  };

  explicit RegSet(int rank = 1);  // empty set
  static RegSet from_dfa(int rank, const Dfa& dfa);

  static RegSet empty(int rank) { return RegSet(rank); }
  /// All reduced words.
  static RegSet all(int rank);
  /// L(x): reduced words whose last letter is x.
  static RegSet ending_in(int rank, Letter x);
  static RegSet from_words(int rank, const std::vector<Word>& words);
  static RegSet singleton(int rank, const Word& w) { return from_words(rank, {w}); }

  int rank() const { return rank_; }
  int state_count() const { return static_cast<int>(accepting_.size()); }
  int target(int q, int letter_index) const { return delta_[q][letter_index]; }
  bool accepting(int q) const { return accepting_[q]; }

  bool is_empty() const;
  bool member(const Word& w) const;
  /// Accepted words of length <= max_length in shortlex order.
  std::vector<Word> enumerate(int max_length) const;
  std::optional<Word> shortlex_least() const;

  friend RegSet operator|(const RegSet& a, const RegSet& b);
  friend RegSet operator&(const RegSet& a, const RegSet& b);
  /// a minus b
  friend RegSet operator-(const RegSet& a, const RegSet& b);
  /// Complement within the reduced words.
  RegSet complement() const;

  /// {reduce(w g) : w in this}
  RegSet translate(const Word& g) const;

  bool operator==(const RegSet&) const = default;

  std::string to_dot(const Alphabet& alphabet) const;

 private:
  static RegSet canonical(int rank, const Dfa& dfa);
  template <class Op>
  static RegSet product(const RegSet& a, const RegSet& b, Op op);
  void check_rank(const RegSet& other) const;

  int rank_;
  std::vector<std::vector<int>> delta_;
  std::vector<bool> accepting_;
};

inline RegSet set_union(const RegSet& a, const RegSet& b) { return a | b; }
inline RegSet intersect(const RegSet& a, const RegSet& b) { return a & b; }
inline RegSet complement(const RegSet& a) { return a.complement(); }
inline bool equals(const RegSet& a, const RegSet& b) { return a == b; }
inline RegSet translate(const RegSet& p, const Word& g) { return p.translate(g); }

}  // namespace tarski
