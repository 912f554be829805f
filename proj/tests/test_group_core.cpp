#include <doctest.h>

#include <random>
#include <unordered_set>

#include "tarski/groups.hpp"
#include "tarski/subgroup.hpp"
#include "tarski/wreath.hpp"
#include "test_support.hpp"

using namespace tarski;

namespace {

// Reduction by repeated scanning for an adjacent inverse pair.
std::vector<Letter> naive_reduce(std::vector<Letter> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + i, w.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

std::uint64_t encode(const Word& w) {
  std::uint64_t code = w.size();
  for (Letter l : w.letters()) code = code * 8 + static_cast<std::uint64_t>(letter_index(l));
  return code;
}

// Subgroup elements reachable by multiplying generators, never leaving the ball of radius cap.
std::unordered_set<std::uint64_t> subgroup_elements(const std::vector<Word>& gens, std::size_t cap) {
  std::vector<Word> steps;
  for (const auto& g : gens) {
    if (g.empty()) continue;
    steps.push_back(g);
    steps.push_back(g.inverse());
  }
  std::unordered_set<std::uint64_t> seen{encode(Word{})};
  std::vector<Word> frontier{Word{}};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (const auto& s : steps) {
        Word v = w * s;
        if (v.size() > cap) continue;
        if (seen.insert(encode(v)).second) next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
  const Word a{1}, b{2}, c{3};
  CHECK(Word{1, -1, 2} == b);
  CHECK(Word{}.is_identity());
  CHECK(Word{1, 2, -2, -1, 3} == c);
  CHECK(naive_reduce({1, 2, -2, -1, 3}) == std::vector<Letter>{3});
  CHECK_THROWS_AS(reduce(Alphabet::numbered(2), std::vector<Letter>{1, 3}), std::invalid_argument);
}

TEST_CASE("reduce agrees with repeated scanning and is idempotent") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    auto raw = testing::random_letters(rng, 3, 20);
    Word w = Word::reduce(raw);
    CHECK(w.letters() == naive_reduce(raw));
    CHECK(Word::reduce(w.letters()) == w);
    CHECK(w.size() <= raw.size());
  }
}

TEST_CASE("group axioms on random words") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    Word u = testing::random_word(rng, 2, 12), v = testing::random_word(rng, 2, 12), w = testing::random_word(rng, 2, 12);
    CHECK((u * v) * w == u * (v * w));
    CHECK((u * u.inverse()).is_identity());
    CHECK((u.inverse() * u).is_identity());
    CHECK(u * Word{} == u);
  }
  CHECK(Word{1, 2}.inverse() == Word{-2, -1});
  FreeGroup f2(2);
  CHECK_THROWS_AS(f2.mul(Word{1}, Word{3}), std::invalid_argument);
}

TEST_CASE("cyclic reduction matches a search over conjugating prefixes") {
  auto [core, conj] = cyclic_reduce(Word{2, 1, 1, -2});
  CHECK(core == Word{1, 1});
  CHECK(conj == Word{-2});
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    Word u = testing::random_word(rng, 2, 10);
    auto r = cyclic_reduce(u);
    CHECK(r.conjugator.inverse() * r.core * r.conjugator == u);
    if (r.core.size() >= 2) CHECK(r.core.front() != -r.core.back());
    // shortest core over all prefixes p with u = p c p^-1
    std::size_t best = u.size();
    for (std::size_t k = 0; 2 * k <= u.size(); ++k) {
      Word p = u.slice(0, k);
      Word c = p.inverse() * u * p;
      if (c.size() + 2 * k == u.size()) best = std::min(best, c.size());
    }
    CHECK(r.core.size() == best);
  }
}

TEST_CASE("word text round trip") {
  Alphabet ab({"a", "b"});
  Word w{1, -2, 1};
  CHECK(to_string(w, ab) == "a·b⁻¹·a");
  CHECK(parse_word("a·b⁻¹·a", ab) == w);
  CHECK(parse_word("a b^-1 a", ab) == w);
  CHECK(parse_word("ab^-1a", ab) == w);
  CHECK(parse_word("1", ab).is_identity());
  CHECK(to_string(Word{}, ab) == "1");
  CHECK(parse_word("a^3", ab) == Word{1, 1, 1});
  CHECK_THROWS_AS(parse_word("c", ab), WordParseError);
}

TEST_CASE("all reduced words in shortlex order") {
  auto ws = all_reduced_words(2, 3);
  CHECK(ws.size() == 1 + 4 + 12 + 36);
  for (std::size_t i = 1; i < ws.size(); ++i) CHECK(ws[i - 1] < ws[i]);
}

TEST_CASE("balls in the supported groups") {
  CHECK(make_ball(FreeGroup(2), 2).size() == 17);
  CHECK(make_ball(FreeAbelianGroup(2), 1).size() == 5);
  CHECK(make_ball(FreeAbelianGroup(1), 3).size() == 7);
  DirectProduct prod(FreeGroup(1), FreeAbelianGroup(1));
  CHECK(make_ball(prod, 1).size() == 5);
}

TEST_CASE("stallings folding: basic subgroups") {
  auto h = stallings_fold(2, {Word{1, 1}, Word{2}, Word{1, 2, -1}});
  CHECK_FALSE(h.contains(Word{1}));
  CHECK(h.contains(Word{1, 1}));
  CHECK(h.index() == 2);
  auto whole = stallings_fold(2, {Word{1}, Word{2}});
  CHECK(whole.subgroup_rank() == 2);
  CHECK(whole.vertex_count() == 1);
  auto trivial = stallings_fold(2, {});
  CHECK(trivial.subgroup_rank() == 0);
  CHECK_FALSE(trivial.contains(Word{1}));
  CHECK(trivial.contains(Word{}));
  CHECK(stallings_fold(2, {Word{1, 2, -1, -2}}).subgroup_rank() == 1);
  CHECK(stallings_fold(2, {Word{1, 1, 2}, Word{1}}) == stallings_fold(2, {Word{1}, Word{2}}));
}

TEST_CASE("stallings membership agrees with product enumeration") {
  std::mt19937_64 rng(14);
  const auto words = all_reduced_words(2, 8);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Word> gens;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) gens.push_back(testing::random_word(rng, 2, 4));
    auto graph = stallings_fold(2, gens);
    auto oracle = subgroup_elements(gens, 12);
    for (const auto& w : words) CHECK(graph.contains(w) == (oracle.count(encode(w)) > 0));
    // core: every non-base vertex has degree >= 2
    for (int v = 1; v < graph.vertex_count(); ++v) {
      int degree = 0;
      for (int li = 0; li < 4; ++li) degree += graph.target(v, letter_from_index(li)) >= 0;
      CHECK(degree >= 2);
    }
  }
}

TEST_CASE("schreier transversal of cyclic kernels") {
  auto h2 = SubgroupGraph::cyclic_kernel(2, 2, {1, 1});
  auto t = CosetTransversal::schreier(h2);
  REQUIRE(t.representatives().size() == 2);
  CHECK(t.representatives()[0].is_identity());
  CHECK(t.representatives()[1] == Word{1});
  CHECK(t.project(Word{1, 1}) == std::pair{Word{1, 1}, Word{}});
  CHECK(t.project(Word{2}) == std::pair{Word{2, -1}, Word{1}});
  CHECK(t.project(Word{}) == std::pair{Word{}, Word{}});
  auto whole = CosetTransversal::schreier(SubgroupGraph::cyclic_kernel(2, 1, {0, 0}));
  CHECK(whole.representatives() == std::vector<Word>{Word{}});
  CHECK_THROWS_AS(CosetTransversal::schreier(stallings_fold(2, {Word{1}})), std::invalid_argument);
}

TEST_CASE("projection onto finite-index subgroups") {
  const auto ball = all_reduced_words(2, 6);
  for (int n = 2; n <= 5; ++n) {
    for (const auto& images : std::vector<std::vector<int>>{{1, 1}, {1, 0}, {1, n - 1}}) {
      auto t = CosetTransversal::schreier(SubgroupGraph::cyclic_kernel(2, n, images));
      CHECK(t.index() == static_cast<std::size_t>(n));
      std::set<Word> seen;
      for (const auto& g : ball) {
        auto [h, rep] = t.project(g);
        CHECK(h * rep == g);
        CHECK(t.in_subgroup(h));
        seen.insert(rep);
        for (const auto& r : t.representatives()) CHECK(t.representative(r) == r);
      }
      CHECK(seen == std::set<Word>(t.representatives().begin(), t.representatives().end()));
    }
  }
}

TEST_CASE("abelianization kernel transversal") {
  auto t = CosetTransversal::abelian_kernel(2);
  CHECK_FALSE(t.index().has_value());
  CHECK(t.representative(Word{2, 1, -2}) == Word{1});
  auto [h, rep] = t.project(Word{2, 1, 2});
  CHECK(rep == Word{1, 2, 2});
  CHECK(h * rep == Word{2, 1, 2});
  CHECK(t.in_subgroup(h));
}

TEST_CASE("wreath multiplication agrees with a dense model") {
  FreeGroup f2(2);
  std::mt19937_64 rng(15);
  for (std::uint64_t n = 1; n <= 8; ++n) {
    WreathProduct w(f2, n);
    using Dense = std::pair<std::vector<Word>, std::uint64_t>;
    auto random_pair = [&] {
      WreathElement<FreeGroup> e;
      Dense d{std::vector<Word>(n), rng() % n};
      e.top = d.second;
      for (std::uint64_t c = 0; c < n; ++c) {
        if (rng() % 2) continue;
        d.first[c] = testing::random_word(rng, 2, 3);
        if (!d.first[c].empty()) e.base[c] = d.first[c];
      }
      return std::pair{e, d};
    };
    for (int trial = 0; trial < 50; ++trial) {
      auto [x, dx] = random_pair();
      auto [y, dy] = random_pair();
      auto xy = w.mul(x, y);
      CHECK(xy.top == (dx.second + dy.second) % n);
      for (std::uint64_t c = 0; c < n; ++c) CHECK(w.at(xy, c) == dx.first[c] * dy.first[(c + dx.second) % n]);
      for (const auto& [c, g] : xy.base) CHECK_FALSE(g.empty());
      CHECK(w.mul(x, w.inv(x)) == w.identity());
    }
  }
}

TEST_CASE("neumann commutator identity") {
  FreeGroup f2(2);
  CHECK(neumann_embed_check(f2, 2, 1, 2, 65537));
  CHECK(neumann_embed_check(f2, 2, 2, 1, 65537));
  CHECK(neumann_embed_check(f2, 2, 1, 1, 65537));
  CHECK(neumann_embed_check(FreeAbelianGroup(2), 2, 1, 2, 65537));
  CHECK_THROWS_AS(neumann_embed_check(f2, 2, 1, 2, 65536), std::invalid_argument);
  CHECK_THROWS_AS(neumann_embed_check(FreeGroup(3), 3, 1, 2, ~std::uint64_t{0}), std::invalid_argument);
}

TEST_CASE("subgroup graph dot export") {
  auto dot = SubgroupGraph::cyclic_kernel(2, 2, {1, 1}).to_dot(Alphabet({"a", "b"}));
  CHECK(dot.find("0 -> 1 [label=\"a\"]") != std::string::npos);
}
