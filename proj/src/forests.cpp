#include "tarski/forests.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tarski {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  }
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<bool> membership(const BallGraph& g, const Forest& f) {
  std::vector<bool> in(g.edges.size(), false);
  for (int e : f) {
    if (e < 0 || e >= static_cast<int>(g.edges.size())) throw std::invalid_argument("forest edge out of range");
    in[e] = true;
  }
  return in;
}

void check(InequalityCheck& c, bool strict) { c.ok = strict ? c.lhs > c.rhs : c.lhs >= c.rhs; }

}  // namespace

bool BallGraph::interior(int v) const {
  return std::all_of(neighbor[v].begin(), neighbor[v].end(), [](int w) { return w >= 0; });
}

std::vector<int> BallGraph::interior_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (interior(v)) out.push_back(v);
  return out;
}

int BallGraph::walk(int v, const std::vector<int>& letters) const {
  for (int l : letters) {
    if (v < 0) return -1;
    v = neighbor[v][l];
  }
  return v;
}

std::string BallGraph::to_dot(const std::vector<int>& forest) const {
  std::set<int> chosen(forest.begin(), forest.end());
  std::ostringstream out;
  out << "graph ball {\n";
  for (int v = 0; v < vertex_count(); ++v) out << "  v" << v << " [label=\"" << names[v] << "\"];\n";
  for (std::size_t e = 0; e < edges.size(); ++e) {
    out << "  v" << edges[e].u << " -- v" << edges[e].v << " [label=\"" << generator_names[edges[e].label] << "\"";
    if (chosen.count(static_cast<int>(e))) out << ", style=bold";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

bool is_acyclic(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  UnionFind uf(vertex_count);
  for (auto [u, v] : edges)
    if (!uf.unite(u, v)) return false;
  return true;
}

bool is_forest(const BallGraph& g, const Forest& f) {
  std::vector<std::pair<int, int>> es;
  std::set<int> seen;
  for (int e : f) {
    if (!seen.insert(e).second) return false;
    es.emplace_back(g.edges[e].u, g.edges[e].v);
  }
  return is_acyclic(g.vertex_count(), es);
}

int forest_degree(const BallGraph& g, const std::vector<bool>& in_forest, int v) {
  int d = 0;
  for (int e : g.edge_at[v])
    if (e >= 0 && in_forest[e]) ++d;
  return d;
}

std::uint64_t edge_weight(std::uint64_t seed, std::uint64_t trial, std::uint64_t edge) {
  return splitmix64(splitmix64(splitmix64(seed) ^ trial) ^ edge);
}

Forest minimal_spanning_forest(const BallGraph& g, std::uint64_t seed, std::uint64_t trial, int forced) {
  std::vector<std::pair<std::uint64_t, int>> order;
  order.reserve(g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    std::uint64_t w = g.edges[e].label == forced ? 0 : edge_weight(seed, trial, e);
    order.emplace_back(w, static_cast<int>(e));
  }
  std::sort(order.begin(), order.end());
  UnionFind uf(g.vertex_count());
  Forest f;
  for (auto [w, e] : order)
    if (uf.unite(g.edges[e].u, g.edges[e].v)) f.push_back(e);
  std::sort(f.begin(), f.end());
  return f;
}

ForestStats sample_msf(const BallGraph& g, long trials, std::uint64_t seed, int forced) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  ForestStats s;
  s.seed = seed;
  for (long t = 0; t < trials; ++t) {
    auto f = minimal_spanning_forest(g, seed, static_cast<std::uint64_t>(t), forced);
    s.all_acyclic = s.all_acyclic && is_forest(g, f);
    int d = forest_degree(g, membership(g, f), 0);
    ++s.center_degrees[d];
    s.degree_sum += d;
    ++s.samples;
  }
  return s;
}

CountingReport forest_counting_checks(const BallGraph& g, const Forest& forest, const std::set<int>& A,
                                      const std::set<int>& B, int a) {
  for (int v : A)
    if (v < 0 || v >= g.vertex_count() || !g.interior(v)) throw std::invalid_argument("A must lie in the interior");
  for (int v : B)
    if (v < 0 || v >= g.vertex_count() || !g.interior(v)) throw std::invalid_argument("B must lie in the interior");
  if (!B.empty() && a < 0) throw std::invalid_argument("B needs the label a");
  if (a >= g.generator_count) throw std::invalid_argument("bad label a");
  auto in = membership(g, forest);
  const int m = g.generator_count;
  const long na = static_cast<long>(A.size()), nb = static_cast<long>(B.size());

  CountingReport r;
  for (int v : A) r.degree_sum += forest_degree(g, in, v);

  std::set<int> at_inv(A.begin(), A.end()), at_sym(A.begin(), A.end());
  for (int v : A)
    for (int j = 0; j < m; ++j) {
      at_inv.insert(g.neighbor[v][2 * j + 1]);
      at_sym.insert(g.neighbor[v][2 * j]);
      at_sym.insert(g.neighbor[v][2 * j + 1]);
    }
  r.a = {static_cast<long>(at_inv.size()), r.degree_sum - m * na};
  check(r.a, na > 0);
  r.b = {static_cast<long>(at_sym.size()), r.degree_sum - na};
  check(r.b, na > 0);

  if (a >= 0) {
    r.with_a = true;
    for (int v : B)
      if (!in[g.edge_at[v][2 * a]] || !in[g.edge_at[v][2 * a + 1]])
        throw std::invalid_argument("forest misses an a-edge at B");
    std::set<int> e_set(A.begin(), A.end()), f_set(A.begin(), A.end());
    for (int v : A)
      for (int j = 0; j < m; ++j) {
        if (j == a) continue;
        e_set.insert(g.neighbor[v][2 * j + 1]);
        f_set.insert(g.neighbor[v][2 * j]);
        f_set.insert(g.neighbor[v][2 * j + 1]);
      }
    for (int v : B) {
      for (auto* s : {&e_set, &f_set}) {
        s->insert(v);
        s->insert(g.neighbor[v][2 * a + 1]);
      }
    }
    const bool strict = na + nb > 0;
    r.e = {static_cast<long>(e_set.size()), r.degree_sum - (m + 1) * na + nb};
    check(r.e, strict);
    r.f = {static_cast<long>(f_set.size()), r.degree_sum - 3 * na + nb};
    check(r.f, strict);
  }
  return r;
}

ThetaResult theta_transform(const BallGraph& g, const Forest& forest, int a, int b, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (a < 0 || b < 0 || a >= g.generator_count || b >= g.generator_count || a == b)
    throw std::invalid_argument("a and b must be distinct generators");
  ThetaResult r;
  r.n = n;
  r.domain_radius = g.radius - (2 * n - 1);
  if (r.domain_radius < 0) throw std::invalid_argument("ball too small for path containment checks");
  auto in = membership(g, forest);

  std::vector<std::vector<int>> paths;
  for (int i = 0; i < n; ++i) {
    std::vector<int> p(i, 2 * a);
    p.push_back(2 * b);
    p.insert(p.end(), i, 2 * a + 1);
    paths.push_back(p);
  }
  paths.push_back(std::vector<int>(n, 2 * a));

  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.distance[v] > r.domain_radius) continue;
    for (int l = 0; l <= n; ++l) {
      int cur = v;
      bool inside = true;
      for (int letter : paths[l]) {
        int e = g.edge_at[cur][letter];
        if (e < 0 || !in[e]) {
          inside = false;
          break;
        }
        cur = g.neighbor[cur][letter];
      }
      if (!inside) continue;
      r.edges.push_back({v, cur, l});
      pairs.emplace_back(v, cur);
    }
  }
  r.acyclic = is_acyclic(g.vertex_count(), pairs);
  return r;
}

DegreeVariant parse_variant(const std::string& name) {
  if (name == "c") return DegreeVariant::C;
  if (name == "d") return DegreeVariant::D;
  if (name == "g") return DegreeVariant::G;
  if (name == "h") return DegreeVariant::H;
  throw std::invalid_argument("unknown variant: " + name);
}

}  // namespace tarski
