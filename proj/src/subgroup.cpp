#include "tarski/subgroup.hpp"

#include <deque>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace tarski {

SubgroupGraph::SubgroupGraph(int rank, int vertices) : rank_(rank), out_(vertices, std::vector<int>(2 * rank, -1)) {}

void SubgroupGraph::set_edge(int v, Letter x, int w) {
  out_[v][letter_index(x)] = w;
  out_[w][letter_index(-x)] = v;
}

SubgroupGraph SubgroupGraph::cyclic_kernel(int rank, int n, const std::vector<int>& images) {
  if (n < 1) throw std::invalid_argument("cyclic quotient order must be >= 1");
  if (static_cast<int>(images.size()) != rank) throw std::invalid_argument("one image per generator required");
  std::vector<std::vector<int>> perms(rank, std::vector<int>(n));
  for (int i = 0; i < rank; ++i)
    for (int v = 0; v < n; ++v) perms[i][v] = ((v + images[i]) % n + n) % n;
  return from_action(perms);
}

SubgroupGraph SubgroupGraph::from_action(const std::vector<std::vector<int>>& perms) {
  if (perms.empty()) throw std::invalid_argument("need at least one generator");
  const int n = static_cast<int>(perms[0].size());
  SubgroupGraph g(static_cast<int>(perms.size()), n);
  for (int i = 0; i < g.rank_; ++i) {
    if (static_cast<int>(perms[i].size()) != n) throw std::invalid_argument("permutations of unequal degree");
    std::vector<bool> hit(n, false);
    for (int v = 0; v < n; ++v) {
      int w = perms[i][v];
      if (w < 0 || w >= n || hit[w]) throw std::invalid_argument("not a permutation");
      hit[w] = true;
      g.set_edge(v, i + 1, w);
    }
  }
  return g;
}

int SubgroupGraph::edge_count() const {
  int e = 0;
  for (const auto& row : out_)
    for (int i = 0; i < rank_; ++i)
      if (row[2 * i] >= 0) ++e;
  return e;
}

bool SubgroupGraph::complete() const {
  for (const auto& row : out_)
    for (int t : row)
      if (t < 0) return false;
  return true;
}

std::optional<int> SubgroupGraph::index() const {
  if (!complete()) return std::nullopt;
  return vertex_count();
}

std::optional<int> SubgroupGraph::walk(const Word& w, int from) const {
  int v = from;
  for (Letter l : w.letters()) {
    int g = l > 0 ? l : -l;
    if (g > rank_) return std::nullopt;
    v = out_[v][letter_index(l)];
    if (v < 0) return std::nullopt;
  }
  return v;
}

bool SubgroupGraph::contains(const Word& w) const {
  auto end = walk(w);
  return end && *end == 0;
}

std::string SubgroupGraph::to_dot(const Alphabet& alphabet) const {
  std::ostringstream os;
  os << "digraph subgroup {\n  0 [shape=doublecircle];\n";
  for (int v = 0; v < vertex_count(); ++v)
    for (int i = 1; i <= rank_; ++i)
      if (int w = target(v, i); w >= 0)
        os << "  " << v << " -> " << w << " [label=\"" << alphabet.name(i) << "\"];\n";
  os << "}\n";
  return os.str();
}

namespace {

class Folder {
 public:
  explicit Folder(int rank) : rank_(rank) {}

  int add_vertex() {
    parent_.push_back(static_cast<int>(parent_.size()));
    adj_.emplace_back();
    return parent_.back();
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void link(int u, int li, int v) {
    u = find(u);
    v = find(v);
    if (auto it = adj_[u].find(li); it != adj_[u].end()) {
      if (int w = find(it->second); w != v) pending_.emplace_back(w, v);
    } else {
      adj_[u][li] = v;
    }
    if (auto it = adj_[v].find(li ^ 1); it != adj_[v].end()) {
      if (int w = find(it->second); w != u) pending_.emplace_back(w, u);
    } else {
      adj_[v][li ^ 1] = u;
    }
  }

  void fold() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.front();
      pending_.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (b < a) std::swap(a, b);  // keep the smaller id so the base stays at 0
      parent_[b] = a;
      auto edges = std::move(adj_[b]);
      adj_[b].clear();
      for (auto [li, t] : edges) link(a, li, t);
    }
  }

  SubgroupGraph extract_core();

 private:
  int rank_;
  std::vector<int> parent_;
  std::vector<std::map<int, int>> adj_;
  std::deque<std::pair<int, int>> pending_;
};

SubgroupGraph Folder::extract_core() {
  const int n = static_cast<int>(parent_.size());
  std::vector<std::map<int, int>> adj(n);
  std::vector<bool> alive(n, false);
  for (int v = 0; v < n; ++v) {
    if (find(v) != v) continue;
    alive[v] = true;
    for (auto [li, t] : adj_[v]) adj[v][li] = find(t);
  }
  // Prune hanging trees.
  std::queue<int> leaves;
  auto degree = [&](int v) { return static_cast<int>(adj[v].size()); };
  for (int v = 1; v < n; ++v)
    if (alive[v] && degree(v) <= 1) leaves.push(v);
  while (!leaves.empty()) {
    int v = leaves.front();
    leaves.pop();
    if (!alive[v] || degree(v) > 1) continue;
    alive[v] = false;
    for (auto [li, t] : adj[v]) {
      adj[t].erase(li ^ 1);
      if (t != 0 && alive[t] && degree(t) <= 1) leaves.push(t);
    }
    adj[v].clear();
  }
  // Renumber breadth-first from the base in letter order.
  std::vector<int> number(n, -1);
  std::vector<int> order{0};
  number[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto [li, t] : adj[order[i]]) {
      if (number[t] < 0) {
        number[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  }
  SubgroupGraph g(rank_, static_cast<int>(order.size()));
  for (int v : order)
    for (auto [li, t] : adj[v])
      if (li % 2 == 0) g.set_edge(number[v], letter_from_index(li), number[t]);
  return g;
}

}  // namespace

SubgroupGraph stallings_fold(int rank, const std::vector<Word>& generators) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  Folder folder(rank);
  folder.add_vertex();
  for (const Word& w : generators) {
    for (Letter l : w.letters())
      if ((l > 0 ? l : -l) > rank) throw std::invalid_argument("generator uses a letter outside the alphabet");
    if (w.empty()) continue;
    int prev = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int next = i + 1 == w.size() ? 0 : folder.add_vertex();
      folder.link(prev, letter_index(w[i]), next);
      prev = next;
    }
  }
  folder.fold();
  return folder.extract_core();
}

CosetTransversal CosetTransversal::schreier(const SubgroupGraph& subgroup) {
  if (!subgroup.complete())
    throw std::invalid_argument("subgroup has infinite index; only the abelianization kernel is supported");
  CosetTransversal t;
  t.rank_ = subgroup.rank();
  t.subgroup_ = subgroup;
  const int n = subgroup.vertex_count();
  t.reps_.assign(n, Word{});
  std::vector<bool> seen(n, false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int u = queue[i];
    for (int li = 0; li < 2 * subgroup.rank(); ++li) {
      Letter x = letter_from_index(li);
      int v = subgroup.target(u, x);
      if (seen[v]) continue;
      seen[v] = true;
      t.reps_[v] = t.reps_[u] * Word{x};
      queue.push_back(v);
    }
  }
  return t;
}

CosetTransversal CosetTransversal::abelian_kernel(int rank) {
  CosetTransversal t;
  t.rank_ = rank;
  t.subgroup_ = AbelianKernel{};
  return t;
}

std::optional<std::size_t> CosetTransversal::index() const {
  if (!finite()) return std::nullopt;
  return reps_.size();
}

const std::vector<Word>& CosetTransversal::representatives() const {
  if (!finite()) throw std::logic_error("abelian-kernel transversal is infinite");
  return reps_;
}

Word CosetTransversal::lift(const AbelianVector& p) const {
  if (finite()) throw std::logic_error("lift is defined for the abelian kernel only");
  if (static_cast<int>(p.rank()) != rank_) throw std::invalid_argument("rank mismatch");
  Word w;
  for (int i = 0; i < rank_; ++i) w *= Word::generator(i + 1).pow(p.coordinates[i]);
  return w;
}

Word CosetTransversal::representative(const Word& g) const {
  if (const auto* graph = std::get_if<SubgroupGraph>(&subgroup_)) {
    auto v = graph->walk(g);
    if (!v) throw std::invalid_argument("word outside the ambient alphabet");
    return reps_[*v];
  }
  return lift(abelian_image(g, rank_));
}

std::pair<Word, Word> CosetTransversal::project(const Word& g) const {
  Word t = representative(g);
  return {g * t.inverse(), t};
}

bool CosetTransversal::in_subgroup(const Word& h) const {
  if (const auto* graph = std::get_if<SubgroupGraph>(&subgroup_)) return graph->contains(h);
  return abelian_image(h, rank_).is_zero();
}

}  // namespace tarski
