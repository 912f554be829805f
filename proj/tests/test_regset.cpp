#include <doctest.h>

#include <random>
#include <set>

#include "tarski/regset.hpp"
#include "test_support.hpp"

using namespace tarski;

namespace {

const Word a{1}, A{-1}, b{2}, B{-2};

RegSet random_regset(std::mt19937_64& rng, int rank) {
  // A random partial DFA; canonicalization restricts it to reduced words.
  int n = 1 + static_cast<int>(rng() % 4);
  RegSet::Dfa dfa;
  for (int q = 0; q < n; ++q) {
    std::vector<int> row(2 * rank);
    for (int& t : row) t = static_cast<int>(rng() % (n + 1)) - 1;
    dfa.transitions.push_back(row);
    dfa.accepting.push_back(rng() % 2);
  }
  return RegSet::from_dfa(rank, dfa);
}

std::set<Word> as_set(const std::vector<Word>& ws) { return {ws.begin(), ws.end()}; }

}  // namespace

TEST_CASE("set algebra basics") {
  auto all = RegSet::all(2);
  CHECK(all.complement().is_empty());
  CHECK((RegSet::ending_in(2, 1) & RegSet::ending_in(2, 2)).is_empty());
  auto pieces = RegSet::ending_in(2, 1) | RegSet::ending_in(2, -1) | RegSet::ending_in(2, 2) |
                RegSet::ending_in(2, -2) | RegSet::singleton(2, Word{});
  CHECK(pieces == all);
  auto listed = all.enumerate(5);
  CHECK(listed.size() == 1 + 4 + 12 + 36 + 108 + 324);
  CHECK(listed == pieces.enumerate(5));
  CHECK(RegSet::empty(2).is_empty());
  CHECK(RegSet::empty(2) == RegSet::from_words(2, {}));
  CHECK_THROWS_AS(RegSet::all(2) | RegSet::all(3), std::invalid_argument);
}

TEST_CASE("enumeration is shortlex and exact") {
  CHECK(RegSet::empty(2).enumerate(4).empty());
  CHECK(RegSet::ending_in(2, 1).enumerate(2) == std::vector<Word>{a, a * a, b * a, B * a});
  CHECK(RegSet::all(2).enumerate(1) == std::vector<Word>{Word{}, a, A, b, B});
  auto words = all_reduced_words(2, 8);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = random_regset(rng, 2);
    std::vector<Word> expected;
    for (const auto& w : words)
      if (p.member(w)) expected.push_back(w);
    CHECK(p.enumerate(8) == expected);
  }
}

TEST_CASE("shortlex least witness") {
  CHECK(RegSet::ending_in(2, -2).shortlex_least() == B);
  CHECK_FALSE(RegSet::empty(2).shortlex_least().has_value());
  auto s = RegSet::from_words(2, {Word{2, 1}, Word{1, 2}, Word{-1, -1, -1}});
  CHECK(s.shortlex_least() == Word{1, 2});
}

TEST_CASE("canonical form is unique") {
  // Two different raw automata for "words ending in a".
  RegSet::Dfa redundant;
  redundant.transitions = {{1, 2, 2, 2}, {1, 2, 2, 2}, {1, 2, 2, 2}};
  redundant.accepting = {false, true, false};
  CHECK(RegSet::from_dfa(2, redundant) == RegSet::ending_in(2, 1));
  // Non-reduced spellings are dropped.
  RegSet::Dfa spelled;
  spelled.transitions = {{1, -1, -1, -1}, {-1, 2, -1, -1}, {-1, -1, -1, -1}};
  spelled.accepting = {false, false, true};
  CHECK(RegSet::from_dfa(2, spelled).is_empty());
}

TEST_CASE("boolean algebra laws on random sets") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    auto x = random_regset(rng, 2), y = random_regset(rng, 2), z = random_regset(rng, 2);
    CHECK((x | y).complement() == (x.complement() & y.complement()));
    CHECK((x & y).complement() == (x.complement() | y.complement()));
    CHECK((x & (y | z)) == ((x & y) | (x & z)));
    CHECK((x | (y & z)) == ((x | y) & (x | z)));
    CHECK(x.complement().complement() == x);
    CHECK((x - y) == (x & y.complement()));
    CHECK((x | x.complement()) == RegSet::all(2));
  }
}

TEST_CASE("accepted words are reduced") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = random_regset(rng, 2);
    for (const auto& w : p.enumerate(8))
      for (std::size_t i = 0; i + 1 < w.size(); ++i) CHECK(w[i] != -w[i + 1]);
  }
}

TEST_CASE("translate agrees with elementwise multiplication") {
  CHECK(RegSet::ending_in(2, 1).translate(Word{}) == RegSet::ending_in(2, 1));
  // L(a) a^-1 = all reduced words not ending in a^-1
  auto shifted = RegSet::ending_in(2, 1).translate(A);
  CHECK(shifted == RegSet::all(2) - RegSet::ending_in(2, -1));
  CHECK(shifted.member(Word{}));
  std::set<Word> expected;
  for (const auto& w : RegSet::ending_in(2, 1).enumerate(5))
    if ((w * A).size() <= 4) expected.insert(w * A);
  CHECK(as_set(shifted.enumerate(4)) == expected);

  std::mt19937_64 rng(24);
  auto words = all_reduced_words(2, 6);
  for (int trial = 0; trial < 500; ++trial) {
    auto p = random_regset(rng, 2);
    Word g = testing::random_word(rng, 2, 4);
    Word h = words[rng() % words.size()];
    auto t = p.translate(g);
    CHECK(t.member(h) == p.member(h * g.inverse()));
    if (trial % 10 == 0) CHECK(t.translate(g.inverse()) == p);
  }
}

TEST_CASE("translate keeps the unaffected prefix") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 300; ++trial) {
    Word g = testing::random_word(rng, 2, 4);
    Word w = testing::random_word(rng, 2, 10);
    if (w.size() <= g.size()) continue;
    Word r = w * g;
    std::size_t keep = w.size() - g.size();
    CHECK(r.size() >= keep);
    CHECK(r.slice(0, keep) == w.slice(0, keep));
  }
}
