#include "tarski/decomposition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tarski/subgroup.hpp"

namespace tarski {

int Decomposition::tarski_size() const {
  int n = 0;
  for (const auto& s : translating_sets) n += static_cast<int>(s.size());
  return n;
}

int Decomposition::max_translation() const {
  int c = 0;
  for (const auto& s : translating_sets)
    for (const auto& g : s) c = std::max(c, static_cast<int>(g.size()));
  return c;
}

const RegSet& Decomposition::symbolic_piece(int i, int j) const {
  const auto* p = std::get_if<RegSet>(&pieces.at(i).at(j));
  if (!p) throw std::invalid_argument("mode mismatch: piece is not symbolic");
  return *p;
}

void Decomposition::validate() const {
  if (k() < 2) throw std::invalid_argument("a decomposition needs k >= 2 colors");
  if (pieces.size() != translating_sets.size()) throw std::invalid_argument("one piece family per translating set");
  for (int i = 0; i < k(); ++i) {
    const auto& s = translating_sets[i];
    if (pieces[i].size() != s.size()) throw std::invalid_argument("one piece per translating element");
    if (std::set<Word>(s.begin(), s.end()).size() != s.size())
      throw std::invalid_argument("translating set entries must be distinct");
    for (const auto& g : s)
      for (Letter l : g.letters())
        if (!alphabet.valid(l)) throw std::invalid_argument("alphabet mismatch in translating set");
    for (const auto& p : pieces[i]) {
      bool symbolic = std::holds_alternative<RegSet>(p);
      if (symbolic != (mode == PieceMode::Symbolic)) throw std::invalid_argument("piece kind does not match mode");
      if (symbolic && std::get<RegSet>(p).rank() != rank()) throw std::invalid_argument("alphabet mismatch in piece");
    }
  }
}

bool VerificationReport::all_ok() const {
  return disjoint_ok && std::all_of(cover_ok.begin(), cover_ok.end(), [](bool b) { return b; }) &&
         std::all_of(strong_ok.begin(), strong_ok.end(), [](bool b) { return b; });
}

Decomposition pingpong(const Alphabet& alphabet, Letter x, Letter y) {
  const int rank = alphabet.rank();
  if (!alphabet.valid(x) || !alphabet.valid(y) || x == y || x == -y)
    throw std::invalid_argument("ping-pong needs two distinct generators");
  Decomposition d;
  d.alphabet = alphabet;
  d.translating_sets = {{Word{}, Word{-x}}, {Word{}, Word{-y}}};
  d.pieces = {{RegSet::ending_in(rank, -x), RegSet::ending_in(rank, x)},
              {RegSet::ending_in(rank, -y), RegSet::ending_in(rank, y)}};
  d.mode = PieceMode::Symbolic;
  return d;
}

Decomposition pingpong_f2() { return pingpong(Alphabet({"a", "b"})); }

namespace {

void finish(VerificationReport& r) {
  std::sort(r.counterexamples.begin(), r.counterexamples.end());
  r.counterexamples.erase(std::unique(r.counterexamples.begin(), r.counterexamples.end()), r.counterexamples.end());
}

}  // namespace

VerificationReport verify_exact(const Decomposition& d) {
  if (d.mode != PieceMode::Symbolic) throw std::invalid_argument("mode mismatch: exact verification needs symbolic pieces");
  d.validate();
  VerificationReport r;
  std::vector<const RegSet*> flat;
  for (int i = 0; i < d.k(); ++i)
    for (int j = 0; j < static_cast<int>(d.translating_sets[i].size()); ++j) flat.push_back(&d.symbolic_piece(i, j));
  for (std::size_t x = 0; x < flat.size(); ++x)
    for (std::size_t y = x + 1; y < flat.size(); ++y)
      if (auto w = (*flat[x] & *flat[y]).shortlex_least()) {
        r.disjoint_ok = false;
        r.counterexamples.push_back(*w);
      }
  const RegSet all = RegSet::all(d.rank());
  for (int i = 0; i < d.k(); ++i) {
    std::vector<RegSet> translates;
    RegSet cover = RegSet::empty(d.rank());
    for (int j = 0; j < static_cast<int>(d.translating_sets[i].size()); ++j) {
      translates.push_back(d.symbolic_piece(i, j).translate(d.translating_sets[i][j]));
      cover = cover | translates.back();
    }
    bool covered = cover == all;
    if (!covered) r.counterexamples.push_back(*(all - cover).shortlex_least());
    bool separate = true;
    for (std::size_t x = 0; x < translates.size(); ++x)
      for (std::size_t y = x + 1; y < translates.size(); ++y)
        if (auto w = (translates[x] & translates[y]).shortlex_least()) {
          separate = false;
          r.counterexamples.push_back(*w);
        }
    r.cover_ok.push_back(covered);
    r.strong_ok.push_back(covered && separate);
  }
  finish(r);
  return r;
}

PieceOracle default_oracle(const Decomposition& d) {
  return [&d](int i, int j, const Word& w) {
    const auto& p = d.pieces[i][j];
    if (const auto* s = std::get_if<RegSet>(&p)) return s->member(w);
    return std::get<std::set<Word>>(p).count(w) > 0;
  };
}

VerificationReport verify_ball(const Decomposition& d, const PieceOracle& membership, int radius) {
  d.validate();
  const int c = d.max_translation();
  if (radius < c) throw std::invalid_argument("radius smaller than max translation length");
  VerificationReport r;
  r.checked_radius = radius;
  r.interior_radius = radius - c;
  r.pieces_cover_interior = true;
  r.cover_ok.assign(d.k(), true);
  r.strong_ok.assign(d.k(), true);
  const auto ball = all_reduced_words(d.rank(), radius);
  for (const auto& h : ball) {
    int hits = 0;
    for (int i = 0; i < d.k(); ++i)
      for (int j = 0; j < static_cast<int>(d.translating_sets[i].size()); ++j) hits += membership(i, j, h);
    if (hits > 1) {
      r.disjoint_ok = false;
      r.counterexamples.push_back(h);
    }
    if (static_cast<int>(h.size()) > r.interior_radius) continue;
    if (hits == 0) r.pieces_cover_interior = false;
    for (int i = 0; i < d.k(); ++i) {
      int covers = 0;
      for (int j = 0; j < static_cast<int>(d.translating_sets[i].size()); ++j)
        covers += membership(i, j, h * d.translating_sets[i][j].inverse());
      if (covers == 0) {
        r.cover_ok[i] = false;
        r.strong_ok[i] = false;
        r.counterexamples.push_back(h);
      } else if (covers > 1 && r.strong_ok[i]) {
        r.strong_ok[i] = false;
        r.counterexamples.push_back(h);
      }
    }
  }
  finish(r);
  return r;
}

Decomposition translate_decomposition(const Decomposition& d, const std::vector<Word>& shifts) {
  if (static_cast<int>(shifts.size()) != d.k()) throw std::invalid_argument("one shift per color");
  Decomposition out = d;
  for (int i = 0; i < d.k(); ++i)
    for (auto& g : out.translating_sets[i]) g = g * shifts[i];
  return out;
}

Decomposition double_up(const Decomposition& d, const Decomposition& e) {
  if (d.alphabet != e.alphabet) throw std::invalid_argument("alphabet mismatch between decompositions");
  if (d.mode != PieceMode::Symbolic || e.mode != PieceMode::Symbolic)
    throw std::invalid_argument("mode mismatch: composition needs symbolic pieces");
  Decomposition out;
  out.alphabet = d.alphabet;
  out.mode = PieceMode::Symbolic;
  for (int i = 0; i < d.k(); ++i) {
    for (int j = 0; j < e.k(); ++j) {
      std::vector<Word> labels;
      std::vector<Piece> pieces;
      for (std::size_t a = 0; a < d.translating_sets[i].size(); ++a) {
        const Word& g = d.translating_sets[i][a];
        for (std::size_t b = 0; b < e.translating_sets[j].size(); ++b) {
          const Word& h = e.translating_sets[j][b];
          RegSet piece = d.symbolic_piece(i, static_cast<int>(a)) &
                         e.symbolic_piece(j, static_cast<int>(b)).translate(g.inverse());
          Word label = g * h;
          auto it = std::find(labels.begin(), labels.end(), label);
          if (it == labels.end()) {
            labels.push_back(label);
            pieces.emplace_back(std::move(piece));
          } else {
            auto& existing = std::get<RegSet>(pieces[it - labels.begin()]);
            existing = existing | piece;
          }
        }
      }
      out.translating_sets.push_back(std::move(labels));
      out.pieces.push_back(std::move(pieces));
    }
  }
  return out;
}

DecompositionBall decomposition_ball(const Decomposition& d, int radius) {
  d.validate();
  FreeGroup group(d.alphabet);
  DecompositionBall out{colored_cayley_ball(group, d.translating_sets, radius), {}};
  auto oracle = default_oracle(d);
  const auto& ball = out.ball;
  for (int v = 0; v < ball.graph.vertex_count(); ++v) {
    const Word& x = ball.elements[v];
    for (int i = 0; i < d.k(); ++i)
      for (int j = 0; j < static_cast<int>(d.translating_sets[i].size()); ++j) {
        if (!oracle(i, j, x)) continue;
        auto it = ball.vertex.find(x * d.translating_sets[i][j]);
        if (it != ball.vertex.end()) out.chosen.edges.push_back(ball.graph.find_edge(v, it->second, i + 1));
      }
  }
  std::sort(out.chosen.edges.begin(), out.chosen.edges.end());
  return out;
}

Decomposition decomposition_from_subgraph(const ColoredBall<FreeGroup>& ball, const EvenSubgraph& chosen,
                                          const std::vector<std::vector<Word>>& sets, const Alphabet& alphabet) {
  Decomposition d;
  d.alphabet = alphabet;
  d.mode = PieceMode::Ball;
  d.translating_sets = sets;
  for (const auto& s : sets) d.pieces.emplace_back(s.size(), Piece{std::set<Word>{}});
  for (int e : chosen.edges) {
    const auto& edge = ball.graph.edges()[e];
    const Word& x = ball.elements[edge.tail];
    Word s = x.inverse() * ball.elements[edge.head];
    const auto& row = sets[edge.color - 1];
    auto it = std::find(row.begin(), row.end(), s);
    if (it == row.end()) throw std::invalid_argument("chosen edge label is not a translating element");
    std::get<std::set<Word>>(d.pieces[edge.color - 1][it - row.begin()]).insert(x);
  }
  return d;
}

NormalizeResult normalize(const ColoredDigraph& g, const EvenSubgraph& lambda) {
  const int n = g.vertex_count();
  std::vector<int> in1(n, -1), out(n, 0);
  std::vector<bool> kept(g.edges().size(), false);
  for (int e : lambda.edges) {
    const auto& edge = g.edges().at(e);
    kept[e] = true;
    ++out[edge.tail];
    if (edge.color != 1) continue;
    if (in1[edge.head] >= 0) throw std::invalid_argument("two color-1 edges into one vertex: input is not evenly colored");
    in1[edge.head] = e;
  }
  NormalizeResult result{{}, {}, ColoredDigraph(g.k())};
  std::vector<bool> on_path(n, false);
  for (int v = 0; v < n; ++v) {
    if (!g.interior(v) || out[v] > 0) continue;
    SurgeryPath path{v, {v}, false};
    on_path[v] = true;
    int cur = v;
    while (true) {
      int e = in1[cur];
      if (e < 0) {
        if (g.interior(cur)) throw std::invalid_argument("interior vertex without an incoming color-1 edge");
        path.truncated = true;
        break;
      }
      kept[e] = false;
      cur = g.edges()[e].tail;
      if (on_path[cur]) throw std::logic_error("backward color-1 paths intersect");
      on_path[cur] = true;
      path.vertices.push_back(cur);
    }
    result.paths.push_back(std::move(path));
  }
  for (const auto& path : result.paths)
    for (int v : path.vertices) {
      int loop = g.find_edge(v, v, 1);
      if (loop < 0) throw std::invalid_argument("no color-1 loop at " + g.name(v) + ": S_1 must contain 1");
      kept[loop] = true;
    }
  for (int e = 0; e < static_cast<int>(kept.size()); ++e)
    if (kept[e]) result.chosen.edges.push_back(e);
  for (int v = 0; v < n; ++v) result.graph.add_vertex(g.name(v), g.interior(v));
  for (int e : result.chosen.edges) {
    const auto& edge = g.edges()[e];
    result.graph.add_edge(edge.tail, edge.head, edge.color, edge.label);
  }
  return result;
}

LowerBoundReport ozawa_lower_bounds(const Decomposition& d) {
  d.validate();
  LowerBoundReport r;
  std::vector<Word> all;
  for (const auto& s : d.translating_sets) {
    all.insert(all.end(), s.begin(), s.end());
    int rank = stallings_fold(d.rank(), s).subgroup_rank();
    r.set_ranks.push_back(rank);
    r.set_infinite.push_back(rank >= 1);
  }
  r.union_rank = stallings_fold(d.rank(), all).subgroup_rank();
  r.union_non_amenable = r.union_rank >= 2;
  return r;
}

}  // namespace tarski
