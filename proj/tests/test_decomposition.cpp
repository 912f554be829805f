#include <doctest.h>

#include <map>
#include <random>

#include "tarski/decomposition.hpp"
#include "test_support.hpp"

using namespace tarski;

namespace {

const Word a{1}, A{-1}, b{2}, B{-2};

// Which piece contains w, by classifying the last letter directly.
int last_letter_piece(const Word& w) {
  if (w.empty()) return -1;
  switch (w.back()) {
    case -1: return 0;
    case 1: return 1;
    case -2: return 2;
    default: return 3;
  }
}

}  // namespace

TEST_CASE("ping-pong decomposition verifies exactly") {
  auto d = pingpong_f2();
  CHECK(d.tarski_size() == 4);
  auto r = verify_exact(d);
  CHECK(r.disjoint_ok);
  CHECK(r.cover_ok == std::vector<bool>{true, true});
  CHECK(r.strong_ok == std::vector<bool>{true, true});
  CHECK(r.counterexamples.empty());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK_FALSE(d.symbolic_piece(i, j).member(Word{}));
}

TEST_CASE("ping-pong cross-checked by enumeration") {
  auto d = pingpong_f2();
  auto words = all_reduced_words(2, 6);
  for (const auto& w : words) {
    int hits = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (d.symbolic_piece(i, j).member(w)) {
          ++hits;
          CHECK(last_letter_piece(w) == 2 * i + j);
        }
    CHECK(hits == (w.empty() ? 0 : 1));
    for (int i = 0; i < 2; ++i) {
      int covers = 0;
      for (int j = 0; j < 2; ++j) covers += last_letter_piece(w * d.translating_sets[i][j].inverse()) == 2 * i + j;
      CHECK(covers == 1);
    }
  }
}

TEST_CASE("corrupted decompositions report counterexamples") {
  auto d = pingpong_f2();
  d.pieces[0][1] = RegSet::empty(2);
  auto r = verify_exact(d);
  CHECK_FALSE(r.cover_ok[0]);
  CHECK(r.cover_ok[1]);
  REQUIRE_FALSE(r.counterexamples.empty());
  // Uncovered set is L(a) a^-1 = everything not ending in a^-1; its least element is 1.
  CHECK(r.counterexamples.front() == Word{});

  Decomposition overlap;
  overlap.alphabet = Alphabet({"a", "b"});
  overlap.translating_sets = {{Word{}}, {Word{}}};
  overlap.pieces = {{RegSet::all(2)}, {RegSet::all(2)}};
  auto o = verify_exact(overlap);
  CHECK_FALSE(o.disjoint_ok);
  CHECK(o.cover_ok == std::vector<bool>{true, true});
  CHECK(o.counterexamples.front() == Word{});

  auto ball_mode = pingpong_f2();
  ball_mode.mode = PieceMode::Ball;
  CHECK_THROWS_AS(verify_exact(ball_mode), std::invalid_argument);
}

TEST_CASE("no two-color decomposition uses a single translate") {
  // |S_1| = 1 forces P g = G, so P meets every piece of the other color.
  auto d = pingpong_f2();
  for (const Word& g : {Word{}, a, B}) {
    Decomposition small;
    small.alphabet = d.alphabet;
    small.translating_sets = {{g}, d.translating_sets[1]};
    small.pieces = {{RegSet::all(2)}, d.pieces[1]};
    CHECK_FALSE(verify_exact(small).all_ok());
  }
}

TEST_CASE("ball verification") {
  auto d = pingpong_f2();
  auto r = verify_ball(d, 6);
  CHECK(r.all_ok());
  CHECK(r.interior_radius == 5);
  CHECK_FALSE(r.pieces_cover_interior);
  CHECK_THROWS_AS(verify_ball(d, 0), std::invalid_argument);
  auto degenerate = verify_ball(d, 1);
  CHECK(degenerate.all_ok());
  CHECK(degenerate.interior_radius == 0);
  for (int radius = 1; radius <= 8; ++radius) CHECK(verify_ball(d, radius).all_ok());
}

TEST_CASE("shifted decompositions stay valid") {
  auto d = pingpong_f2();
  CHECK(translate_decomposition(d, {Word{}, Word{}}).translating_sets == d.translating_sets);
  auto s = translate_decomposition(d, {a, b});
  CHECK(s.translating_sets[0] == std::vector<Word>{a, Word{}});
  CHECK(s.translating_sets[1] == std::vector<Word>{b, Word{}});
  CHECK(verify_exact(s).all_ok());
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    Word g = testing::random_word(rng, 2, 3), h = testing::random_word(rng, 2, 3);
    auto t = translate_decomposition(d, {g, h});
    CHECK(verify_exact(t).all_ok());
    CHECK(translate_decomposition(t, {g.inverse(), h.inverse()}).translating_sets == d.translating_sets);
  }
}

TEST_CASE("composition of decompositions") {
  auto d = pingpong_f2();
  auto dd = double_up(d, d);
  CHECK(dd.k() == 4);
  for (const auto& s : dd.translating_sets) CHECK(s.size() <= 4);
  CHECK(verify_exact(dd).all_ok());
  auto ball = verify_ball(dd, 6);
  CHECK(ball.all_ok());
  CHECK(ball.interior_radius >= 4);
  // Each new piece sits inside one original piece.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (std::size_t l = 0; l < dd.translating_sets[2 * i + j].size(); ++l) {
        const auto& p = dd.symbolic_piece(2 * i + j, static_cast<int>(l));
        int inside = 0;
        for (int x = 0; x < 2; ++x) inside += (p - d.symbolic_piece(i, x)).is_empty();
        CHECK(inside >= 1);
      }
  auto shifted = translate_decomposition(d, {a, B});
  CHECK(verify_exact(double_up(shifted, d)).all_ok());
  CHECK(verify_exact(double_up(d, shifted)).all_ok());
  CHECK_THROWS_AS(double_up(d, Decomposition{Alphabet({"x", "y"}), d.translating_sets, d.pieces}), std::invalid_argument);
}

TEST_CASE("matching on the ping-pong ball recovers its edges") {
  auto d = pingpong_f2();
  auto db = decomposition_ball(d, 4);
  auto interior = db.ball.graph.interior_vertices();
  CHECK(db.ball.interior_radius == 3);
  CHECK(is_even_subgraph(db.ball.graph, db.chosen, interior));
  auto r = find_even_k_subgraph(db.ball.graph, interior);
  REQUIRE(r.feasible);
  // The identity is in no piece, so its tail is free; the matching may use it, which shifts the
  // choice along one chain 1 -> x1 -> x2 -> ... Everywhere else it picks the decomposition's edges.
  std::set<int> exact(db.chosen.edges.begin(), db.chosen.edges.end());
  std::set<int> interior_set(interior.begin(), interior.end());
  std::map<int, int> differing;  // tail -> head
  int agreeing = 0;
  for (int e : r.subgraph.edges) {
    const auto& edge = db.ball.graph.edges()[e];
    if (!interior_set.count(edge.head)) continue;
    if (exact.count(e))
      ++agreeing;
    else
      differing[edge.tail] = edge.head;
  }
  CHECK(agreeing + static_cast<int>(differing.size()) == 2 * static_cast<int>(interior.size()));
  int cur = db.ball.vertex.at(Word{});
  std::size_t walked = 0;
  std::set<int> visited;
  while (differing.count(cur) && visited.insert(cur).second) {
    cur = differing[cur];
    ++walked;
  }
  CHECK(walked == differing.size());
}

TEST_CASE("hall margins on the ping-pong ball") {
  auto db = decomposition_ball(pingpong_f2(), 4);
  auto interior = db.ball.graph.interior_vertices();
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::set<int>> sets(2);
    for (auto& s : sets) {
      int size = static_cast<int>(rng() % 11);
      for (int i = 0; i < size; ++i) s.insert(interior[rng() % interior.size()]);
    }
    CHECK(hall_check(db.ball.graph, sets) >= 0);
  }
}

TEST_CASE("loop surgery on the ping-pong ball") {
  auto d = pingpong_f2();
  auto db = decomposition_ball(d, 6);
  const auto& g = db.ball.graph;
  auto result = normalize(g, db.chosen);
  REQUIRE(result.paths.size() == 1);
  const auto& path = result.paths[0];
  CHECK(db.ball.elements[path.start].is_identity());
  CHECK(path.truncated);
  REQUIRE(path.vertices.size() == 7);
  for (int m = 0; m <= 6; ++m) {
    CHECK(db.ball.elements[path.vertices[m]] == a.pow(m));
    CHECK(std::count(result.chosen.edges.begin(), result.chosen.edges.end(), g.find_edge(path.vertices[m], path.vertices[m], 1)) == 1);
  }
  auto interior = g.interior_vertices();
  CHECK(is_even_subgraph(g, result.chosen, interior));
  std::vector<int> out(g.vertex_count(), 0);
  for (int e : result.chosen.edges) ++out[g.edges()[e].tail];
  for (int v : interior) CHECK(out[v] == 1);
  // idempotent
  auto again = normalize(g, result.chosen);
  CHECK(again.chosen.edges == result.chosen.edges);
  CHECK(again.paths.empty());
  // strong ball decomposition
  auto strong = decomposition_from_subgraph(db.ball, result.chosen, d.translating_sets, d.alphabet);
  auto report = verify_ball(strong, 6);
  CHECK(report.all_ok());
  CHECK(report.pieces_cover_interior);
}

TEST_CASE("loop surgery leaves complete subgraphs alone and rejects uneven input") {
  ColoredDigraph g(2);
  g.add_vertex("x", true);
  g.add_edge(0, 0, 1, "1");
  g.add_edge(0, 0, 2, "1");
  EvenSubgraph full{{0}};
  auto r = normalize(g, full);
  CHECK(r.chosen.edges == full.edges);
  CHECK(r.paths.empty());

  ColoredDigraph h(2);
  for (int v = 0; v < 3; ++v) h.add_vertex({}, true);
  int e1 = h.add_edge(1, 0, 1);
  int e2 = h.add_edge(2, 0, 1);
  CHECK_THROWS_AS(normalize(h, EvenSubgraph{{e1, e2}}), std::invalid_argument);
}

TEST_CASE("free subgroup lower bounds") {
  auto r = ozawa_lower_bounds(pingpong_f2());
  CHECK(r.union_rank == 2);
  CHECK(r.union_non_amenable);
  CHECK(r.set_ranks == std::vector<int>{1, 1});
  CHECK(r.set_infinite == std::vector<bool>{true, true});
  CHECK(lower_bound_general(1) == 4);
  CHECK(lower_bound_torsion(1) == 6);
}
