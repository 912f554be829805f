#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tarski/groups.hpp"
#include "tarski/word.hpp"

namespace tarski {

/// Folded core graph of a subgroup of a free group. Vertex 0 is the base vertex.
/// Edges are stored in both directions: target(v, x) for every signed letter x.
class SubgroupGraph {
 public:
  SubgroupGraph() = default;
  SubgroupGraph(int rank, int vertices);

  /// Coset graph of the kernel of F(rank) -> Z/n sending generator i to images[i-1].
  static SubgroupGraph cyclic_kernel(int rank, int n, const std::vector<int>& images);
  /// Schreier graph of a permutation action on {0..n-1}; perms[i][v] is the image of v under generator i+1.
  static SubgroupGraph from_action(const std::vector<std::vector<int>>& perms);

  int rank() const { return rank_; }
  int vertex_count() const { return static_cast<int>(out_.size()); }
  /// Number of positively oriented edges.
  int edge_count() const;
  /// Rank of the subgroup; 0 for the trivial subgroup.
  int subgroup_rank() const { return edge_count() - vertex_count() + 1; }
  int target(int v, Letter x) const { return out_[v][letter_index(x)]; }
  bool complete() const;
  std::optional<int> index() const;

  /// End vertex of the path reading w from the base, or nullopt if it falls off the graph.
  std::optional<int> walk(const Word& w, int from = 0) const;
  bool contains(const Word& w) const;

  std::string to_dot(const Alphabet& alphabet) const;

  /// Adds v --x--> w together with the reverse edge.
  void set_edge(int v, Letter x, int w);

  bool operator==(const SubgroupGraph&) const = default;

 private:

  int rank_ = 0;
  std::vector<std::vector<int>> out_;  // out_[v][letter_index] or -1
};

/// Stallings folding of the bouquet of generator loops, pruned to the core and numbered
/// breadth-first in letter order.
SubgroupGraph stallings_fold(int rank, const std::vector<Word>& generators);

/// Right transversal T of H in F with 1 in T, and the maps g -> (pi_H(g), pi_T(g)).
class CosetTransversal {
 public:
  /// Schreier transversal from the shortlex breadth-first spanning tree of a complete coset graph.
  static CosetTransversal schreier(const SubgroupGraph& subgroup);
  /// The kernel of F(rank) -> Z^rank, with representatives x1^p1 ... xd^pd.
  static CosetTransversal abelian_kernel(int rank);

  bool finite() const { return std::holds_alternative<SubgroupGraph>(subgroup_); }
  int rank() const { return rank_; }
  std::optional<std::size_t> index() const;

  /// Representatives in coset order (finite index only).
  const std::vector<Word>& representatives() const;
  /// pi_T(g)
  Word representative(const Word& g) const;
  /// (pi_H(g), pi_T(g)) with pi_H(g) * pi_T(g) = g.
  std::pair<Word, Word> project(const Word& g) const;
  bool in_subgroup(const Word& h) const;
  bool contains_identity() const { return true; }

  /// Representative x1^p1 ... xd^pd of the coset with abelianization p (abelian kernel only).
  Word lift(const AbelianVector& p) const;

  const SubgroupGraph* graph() const { return std::get_if<SubgroupGraph>(&subgroup_); }

 private:
  struct AbelianKernel {};
  int rank_ = 0;
  std::variant<SubgroupGraph, AbelianKernel> subgroup_;
  std::vector<Word> reps_;
};

}  // namespace tarski
