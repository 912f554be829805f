#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tarski/cayley.hpp"
#include "tarski/groups.hpp"
#include "tarski/matching.hpp"

namespace tarski {

/// Ball of the unoriented Cayley graph Cay_uo(G, S u S^-1). Letter index 2j is s_j, 2j+1 is s_j^-1;
/// edge {g, g s_j} carries label j. Vertex 0 is the identity.
struct BallGraph {
  struct Edge {
    int u, v;  // v = u s_label
    int label;
  };

  int generator_count = 0;
  int radius = 0;
  std::vector<std::string> names;
  std::vector<std::string> generator_names;
  std::vector<int> distance;
  std::vector<std::vector<int>> neighbor;   // neighbor[v][letter] or -1
  std::vector<std::vector<int>> edge_at;    // edge_at[v][letter]: edge {v, v s^{+-1}} or -1
  std::vector<Edge> edges;

  int vertex_count() const { return static_cast<int>(names.size()); }
  /// All 2|S| neighbors lie in the ball.
  bool interior(int v) const;
  std::vector<int> interior_vertices() const;
  /// End of the walk from v along letters, or -1 if it leaves the ball.
  int walk(int v, const std::vector<int>& letters) const;
  std::string to_dot(const std::vector<int>& forest = {}) const;
};

template <class Group>
BallGraph build_ball(const Group& group, const std::vector<typename Group::element_type>& S, int radius) {
  if (S.empty()) throw std::invalid_argument("need at least one generator");
  auto ball = make_ball(group, S, radius);
  BallGraph g;
  g.generator_count = static_cast<int>(S.size());
  g.radius = radius;
  for (const auto& s : S) {
    if (group.mul(s, s) == group.identity()) throw std::invalid_argument("generators of order 2 are not supported");
    g.generator_names.push_back(group.to_string(s));
  }
  const int letters = 2 * g.generator_count;
  g.distance = ball.distance;
  g.neighbor.assign(ball.size(), std::vector<int>(letters, -1));
  g.edge_at.assign(ball.size(), std::vector<int>(letters, -1));
  for (std::size_t v = 0; v < ball.size(); ++v) {
    g.names.push_back(group.to_string(ball.elements[v]));
    for (int j = 0; j < g.generator_count; ++j) {
      g.neighbor[v][2 * j] = ball.id(group.mul(ball.elements[v], S[j]));
      g.neighbor[v][2 * j + 1] = ball.id(group.mul(ball.elements[v], group.inv(S[j])));
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int j = 0; j < g.generator_count; ++j) {
      int w = g.neighbor[v][2 * j];
      if (w < 0) continue;
      int e = static_cast<int>(g.edges.size());
      g.edges.push_back({v, w, j});
      g.edge_at[v][2 * j] = e;
      g.edge_at[w][2 * j + 1] = e;
    }
  return g;
}

/// Edge ids of a spanning forest; acyclicity is the caller's contract unless checked.
using Forest = std::vector<int>;

bool is_acyclic(int vertex_count, const std::vector<std::pair<int, int>>& edges);
bool is_forest(const BallGraph& g, const Forest& f);
/// Number of forest edges at v.
int forest_degree(const BallGraph& g, const std::vector<bool>& in_forest, int v);

/// Weight of an edge in a trial: a counter-based hash of (seed, trial, edge id).
std::uint64_t edge_weight(std::uint64_t seed, std::uint64_t trial, std::uint64_t edge);

/// Kruskal minimum spanning forest under edge_weight; edges labeled `forced` (if >= 0) are taken first.
Forest minimal_spanning_forest(const BallGraph& g, std::uint64_t seed, std::uint64_t trial, int forced = -1);

struct ForestStats {
  long samples = 0;
  std::map<int, long> center_degrees;  // degree -> count
  long degree_sum = 0;                 // mean degree = degree_sum / samples
  std::uint64_t seed = 0;
  bool all_acyclic = true;

  double mean_degree() const { return samples ? static_cast<double>(degree_sum) / static_cast<double>(samples) : 0.0; }
};

ForestStats sample_msf(const BallGraph& g, long trials, std::uint64_t seed, int forced = -1);

struct InequalityCheck {
  long lhs = 0;
  long rhs = 0;  // lhs > rhs is the claim (lhs >= rhs when the sets are empty)
  bool ok = true;
  long margin() const { return lhs - rhs; }
};

struct CountingReport {
  long degree_sum = 0;  // d_A
  InequalityCheck a, b;
  bool with_a = false;  // (e), (f) evaluated
  InequalityCheck e, f;
  bool all_ok() const { return a.ok && b.ok && (!with_a || (e.ok && f.ok)); }
};

/// The counting inequalities behind the forest bounds, for a forest F, interior sets A and B, and
/// optionally the label a (edges of F labeled a must cover B). T = S u {1}, T1 = T \ {a}, T2 = {1, a}:
///   |A T^-1| > d_A - |S||A|
///   |A (T u T^-1)| > d_A - |A|
///   |A T1^-1 u B T2^-1| > d_A - (|S|+1)|A| + |B|
///   |A (T1 u T1^-1) u B T2^-1| > d_A - 3|A| + |B|
/// Throws std::invalid_argument if A or B leaves the interior or F misses an a-edge at B.
CountingReport forest_counting_checks(const BallGraph& g, const Forest& forest, const std::set<int>& A,
                                      const std::set<int>& B = {}, int a = -1);

struct ThetaEdge {
  int u, v;   // vertex ids of the source ball
  int label;  // i < n: a^i b a^-i, n: a^n
};

struct ThetaResult {
  int n = 0;
  int domain_radius = 0;  // g within this distance have all natural paths inside the ball
  std::vector<ThetaEdge> edges;
  bool acyclic = true;
};

/// Edges {g, g s'} with s' in {a^i b a^-i (i < n), a^n} whose natural path lies in the forest.
/// Throws if the ball is too small to hold any natural path from the center.
ThetaResult theta_transform(const BallGraph& g, const Forest& forest, int a, int b, int n);

enum class DegreeVariant { C, D, G, H };
DegreeVariant parse_variant(const std::string& name);

template <class Group>
struct DegreeDecomposition {
  std::vector<std::vector<typename Group::element_type>> sets;
  ColoredBall<Group> ball;
  MatchingResult matching;
  long total_size = 0;
};

/// Translating sets from T = S u {1}: (c) T\{s1}, T\{s2}; (d) (T u T^-1)\{s1}, (T u T^-1)\{s2};
/// (g) T\{a}, {1, a}; (h) T1 u T1^-1, {1, a}. Here s1 = S[0], s2 = S[1], a = S[a_index].
template <class Group>
std::vector<std::vector<typename Group::element_type>> degree_sets(
    const Group& group, const std::vector<typename Group::element_type>& S, DegreeVariant variant, int a_index = 0) {
  using E = typename Group::element_type;
  if (S.size() < 2) throw std::invalid_argument("need two distinct generators");
  if (a_index < 0 || a_index >= static_cast<int>(S.size())) throw std::invalid_argument("bad index of a");
  std::vector<E> T{group.identity()};
  T.insert(T.end(), S.begin(), S.end());
  std::vector<E> sym = T;
  for (const auto& s : S) sym.push_back(group.inv(s));
  auto without = [](std::vector<E> v, const E& x) {
    v.erase(std::remove(v.begin(), v.end(), x), v.end());
    return v;
  };
  auto dedupe = [](std::vector<E> v) {
    std::vector<E> out;
    for (auto& x : v)
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    return out;
  };
  const E& a = S[a_index];
  switch (variant) {
    case DegreeVariant::C: return {without(T, S[0]), without(T, S[1])};
    case DegreeVariant::D: return {dedupe(without(sym, S[0])), dedupe(without(sym, S[1]))};
    case DegreeVariant::G: return {without(T, a), {group.identity(), a}};
    case DegreeVariant::H: return {dedupe(without(without(sym, a), group.inv(a))), {group.identity(), a}};
  }
  throw std::invalid_argument("unknown variant");
}

template <class Group>
DegreeDecomposition<Group> decomposition_from_degree(const Group& group,
                                                     const std::vector<typename Group::element_type>& S,
                                                     int radius, DegreeVariant variant, int a_index = 0) {
  DegreeDecomposition<Group> out;
  out.sets = degree_sets(group, S, variant, a_index);
  for (const auto& s : out.sets) out.total_size += static_cast<long>(s.size());
  out.ball = colored_cayley_ball(group, out.sets, radius, S);
  out.matching = find_even_k_subgraph(out.ball.graph, out.ball.graph.interior_vertices());
  return out;
}

}  // namespace tarski
