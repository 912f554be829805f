#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace tarski {

/// Finite directed graph with k edge colors; at most one edge per (tail, head, color).
class ColoredDigraph {
 public:
  struct Edge {
    int tail;
    int head;
    int color;  // 1..k
    std::string label;
  };

  explicit ColoredDigraph(int k = 1);

  int k() const { return k_; }
  int add_vertex(std::string name = {}, bool interior = false);
  /// Returns the edge id; throws on a duplicate (tail, head, color) or bad color.
  int add_edge(int tail, int head, int color, std::string label = {});

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_[v]; }
  bool interior(int v) const { return interior_[v]; }
  void set_interior(int v, bool flag) { interior_[v] = flag; }
  std::vector<int> interior_vertices() const;
  std::vector<int> all_vertices() const;
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& in_edges(int v) const { return in_[v]; }
  const std::vector<int>& out_edges(int v) const { return out_[v]; }
  /// Edge id of (tail, head, color), or -1.
  int find_edge(int tail, int head, int color) const;

  /// V^{-,i}(A): tails of color-i edges ending in A.
  std::set<int> in_neighbors(const std::set<int>& a, int color) const;

  /// DOT with color attributes; chosen edges drawn bold.
  std::string to_dot(const std::vector<int>& chosen = {}) const;

 private:
  int k_;
  std::vector<std::string> names_;
  std::vector<bool> interior_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> in_, out_;
  std::map<std::tuple<int, int, int>, int> index_;
};

/// Chosen edge ids.
struct EvenSubgraph {
  std::vector<int> edges;
};

/// Sets A_1..A_k (index i-1 holds A_i) violating the Hall-Rado inequality.
struct HallCertificate {
  std::vector<std::set<int>> sets;
};

struct MatchingResult {
  bool feasible = false;
  EvenSubgraph subgraph;       // when feasible
  HallCertificate certificate;  // when infeasible
  /// hall_check of the certificate when infeasible; of A_i = demand for every i when feasible.
  long margin = 0;
};

/// |U_i V^{-,i}(A_i)| - sum |A_i|
long hall_check(const ColoredDigraph& g, const std::vector<std::set<int>>& sets);

/// Spanning evenly colored k-subgraph saturating `demand`, or a Hall certificate inside `demand`.
MatchingResult find_even_k_subgraph(const ColoredDigraph& g, const std::vector<int>& demand);

/// Every vertex has <= 1 chosen outgoing edge and each demanded vertex exactly one chosen
/// incoming edge of each color.
bool is_even_subgraph(const ColoredDigraph& g, const EvenSubgraph& s, const std::vector<int>& demand);

struct KSubgraphResult {
  bool feasible = false;
  std::vector<int> edges;  // ids into the input edge list
  std::set<int> violator;  // |V^-(A)| < k|A| when infeasible
};

/// Spanning k-subgraph of an uncolored digraph, by duplicating every edge into k colors.
KSubgraphResult find_k_subgraph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                                const std::vector<int>& demand, int k);

}  // namespace tarski
