#include <doctest.h>

#include <random>

#include "tarski/io.hpp"
#include "test_support.hpp"

using namespace tarski;

TEST_CASE("regset json round trip") {
  Alphabet ab({"a", "b"});
  auto all = RegSet::all(2);
  auto p = RegSet::ending_in(2, -1) | RegSet::from_words(2, {Word{1, 2}, Word{}});
  for (const auto& s : {all, p, RegSet::empty(2), p.complement()}) {
    auto j = io::to_json(s, ab);
    CHECK(io::regset_from_json(j, ab) == s);
    CHECK(io::regset_from_json(io::Json::parse(io::dump(j)), ab) == s);
  }
  // a non-zero initial state is moved to the front
  io::Json swapped = {{"states", 2},
                      {"initial", 1},
                      {"accepting", {0}},
                      {"transitions", {{{"from", 1}, {"letter", "a"}, {"to", 0}}}}};
  CHECK(io::regset_from_json(swapped, ab) == RegSet::singleton(2, Word{1}));
  io::Json bad = {{"states", 1}, {"accepting", {3}}, {"transitions", io::Json::array()}};
  CHECK_THROWS_AS(io::regset_from_json(bad, ab), std::invalid_argument);
}

TEST_CASE("decomposition json round trip") {
  auto d = pingpong_f2();
  auto back = io::decomposition_from_json(io::Json::parse(io::dump(io::to_json(d))));
  CHECK(back.translating_sets == d.translating_sets);
  CHECK(back.alphabet.names() == d.alphabet.names());
  for (int i = 0; i < d.k(); ++i)
    for (std::size_t j = 0; j < d.pieces[i].size(); ++j) CHECK(back.symbolic_piece(i, j) == d.symbolic_piece(i, j));
  CHECK(verify_exact(back).all_ok());

  auto db = decomposition_ball(d, 4);
  auto ball = decomposition_from_subgraph(db.ball, db.chosen, d.translating_sets, d.alphabet);
  auto ball_back = io::decomposition_from_json(io::to_json(ball));
  CHECK(ball_back.mode == PieceMode::Ball);
  CHECK(ball_back.pieces == ball.pieces);

  auto broken = io::to_json(d);
  broken["k"] = 3;
  CHECK_THROWS_AS(io::decomposition_from_json(broken), std::invalid_argument);
}

TEST_CASE("graph and certificate round trip re-validates") {
  std::mt19937_64 rng(81);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    int k = 1 + static_cast<int>(rng() % 2);
    ColoredDigraph g(k);
    for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v), rng() % 3 != 0);
    for (int e = 0; e < 8; ++e) {
      int t = static_cast<int>(rng() % n), h = static_cast<int>(rng() % n), c = 1 + static_cast<int>(rng() % k);
      if (g.find_edge(t, h, c) < 0) g.add_edge(t, h, c, "s");
    }
    auto demand = g.interior_vertices();
    auto m = find_even_k_subgraph(g, demand);
    auto g2 = io::graph_from_json(io::Json::parse(io::dump(io::to_json(g))));
    CHECK(io::dump(io::to_json(g2)) == io::dump(io::to_json(g)));
    auto m2 = io::matching_from_json(io::Json::parse(io::dump(io::to_json(m))));
    CHECK(io::revalidate(g2, m2, g2.interior_vertices()));
    (m.feasible ? feasible : infeasible)++;
  }
  CHECK(feasible > 0);
  CHECK(infeasible > 0);

  // tampered results fail re-validation
  ColoredDigraph g(2);
  g.add_vertex("x", true);
  g.add_edge(0, 0, 1);
  auto m = find_even_k_subgraph(g, {0});
  REQUIRE_FALSE(m.feasible);
  CHECK(io::revalidate(g, m, {0}));
  m.certificate.sets = {{}, {}};
  CHECK_FALSE(io::revalidate(g, m, {0}));
  m.feasible = true;
  CHECK_FALSE(io::revalidate(g, m, {0}));
}

TEST_CASE("presentation and report serialization") {
  auto pres = burnside_like_presentation(3, 2, 6, EnumerationMode::Full);
  auto back = io::presentation_from_json(io::Json::parse(io::dump(io::to_json(pres))));
  REQUIRE(back.relators.size() == pres.relators.size());
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    CHECK(back.relators[i].base == pres.relators[i].base);
    CHECK(back.relators[i].n == pres.relators[i].n);
  }
  CHECK(back.p == 2);

  CHECK(io::to_string(Rational(3, 2)) == "3/2");
  CHECK(io::to_string(Rational(-4)) == "-4");
  auto r = gs_check(9, gs_example_relators(9, 67), 67, parse_rational("0.13"), 68);
  auto j = io::to_json(r, parse_rational("0.13"));
  CHECK(j["tau"] == "13/100");
  CHECK(j["holds"] == true);
  CHECK(j["degrees"].size() == 81);
  CHECK(io::dump(j) == io::dump(io::to_json(r, parse_rational("0.13"))));
}
