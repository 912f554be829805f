#include "tarski/matching.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace tarski {

ColoredDigraph::ColoredDigraph(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("color count must be >= 1");
}

int ColoredDigraph::add_vertex(std::string name, bool interior) {
  int v = vertex_count();
  names_.push_back(name.empty() ? std::to_string(v) : std::move(name));
  interior_.push_back(interior);
  in_.emplace_back();
  out_.emplace_back();
  return v;
}

int ColoredDigraph::add_edge(int tail, int head, int color, std::string label) {
  if (tail < 0 || tail >= vertex_count() || head < 0 || head >= vertex_count())
    throw std::invalid_argument("edge endpoint out of range");
  if (color < 1 || color > k_) throw std::invalid_argument("edge color out of range");
  int id = static_cast<int>(edges_.size());
  if (!index_.emplace(std::tuple{tail, head, color}, id).second)
    throw std::invalid_argument("duplicate edge of the same color between " + names_[tail] + " and " + names_[head]);
  edges_.push_back({tail, head, color, std::move(label)});
  out_[tail].push_back(id);
  in_[head].push_back(id);
  return id;
}

std::vector<int> ColoredDigraph::interior_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (interior_[v]) out.push_back(v);
  return out;
}

std::vector<int> ColoredDigraph::all_vertices() const {
  std::vector<int> out(vertex_count());
  for (int v = 0; v < vertex_count(); ++v) out[v] = v;
  return out;
}

int ColoredDigraph::find_edge(int tail, int head, int color) const {
  auto it = index_.find({tail, head, color});
  return it == index_.end() ? -1 : it->second;
}

std::set<int> ColoredDigraph::in_neighbors(const std::set<int>& a, int color) const {
  std::set<int> out;
  for (int v : a)
    for (int e : in_[v])
      if (edges_[e].color == color) out.insert(edges_[e].tail);
  return out;
}

std::string ColoredDigraph::to_dot(const std::vector<int>& chosen) const {
  static const char* palette[] = {"black", "red", "blue", "darkgreen", "orange", "purple", "brown", "cyan"};
  std::set<int> bold(chosen.begin(), chosen.end());
  std::ostringstream os;
  os << "digraph colored {\n";
  for (int v = 0; v < vertex_count(); ++v)
    os << "  " << v << " [label=\"" << names_[v] << "\"" << (interior_[v] ? ", peripheries=2" : "") << "];\n";
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const auto& edge = edges_[e];
    os << "  " << edge.tail << " -> " << edge.head << " [color=" << palette[edge.color % 8] << ", label=\""
       << edge.label << "\"";
    if (bold.count(e)) os << ", penwidth=3";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

long hall_check(const ColoredDigraph& g, const std::vector<std::set<int>>& sets) {
  std::set<int> tails;
  long total = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto n = g.in_neighbors(sets[i], static_cast<int>(i) + 1);
    tails.insert(n.begin(), n.end());
    total += static_cast<long>(sets[i].size());
  }
  return static_cast<long>(tails.size()) - total;
}

namespace {

// Bipartite matching between demand slots (v, color) and tail vertices.
class SlotMatcher {
 public:
  SlotMatcher(const ColoredDigraph& g, const std::vector<int>& demand) : g_(g) {
    std::set<int> seen;
    for (int v : demand) {
      if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("demand vertex out of range");
      if (!seen.insert(v).second) continue;
      for (int c = 1; c <= g.k(); ++c) {
        slots_.emplace_back(v, c);
        std::vector<std::pair<int, int>> adj;
        for (int e : g.in_edges(v))
          if (g.edges()[e].color == c) adj.emplace_back(g.edges()[e].tail, e);
        adj_.push_back(std::move(adj));
      }
    }
    match_slot_.assign(slots_.size(), -1);
    match_edge_.assign(slots_.size(), -1);
    match_tail_.assign(g.vertex_count(), -1);
    stamp_.assign(g.vertex_count(), -1);
  }

  int run() {
    int unmatched = 0;
    for (int s = 0; s < static_cast<int>(slots_.size()); ++s)
      if (!augment(s)) ++unmatched;
    return unmatched;
  }

  EvenSubgraph subgraph() const {
    EvenSubgraph out;
    for (int e : match_edge_)
      if (e >= 0) out.edges.push_back(e);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
  }

  // Slots reachable by alternating paths from unmatched slots; their tail neighborhood is exactly
  // the matched partners, so it is smaller than the slot set by the number of unmatched slots.
  HallCertificate certificate() const {
    std::vector<bool> in_z(slots_.size(), false);
    std::vector<bool> tail_seen(g_.vertex_count(), false);
    std::vector<int> queue;
    for (int s = 0; s < static_cast<int>(slots_.size()); ++s)
      if (match_slot_[s] < 0) {
        in_z[s] = true;
        queue.push_back(s);
      }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto [t, e] : adj_[queue[i]]) {
        if (tail_seen[t]) continue;
        tail_seen[t] = true;
        int s = match_tail_[t];
        if (s >= 0 && !in_z[s]) {
          in_z[s] = true;
          queue.push_back(s);
        }
      }
    }
    HallCertificate cert;
    cert.sets.resize(g_.k());
    for (int s = 0; s < static_cast<int>(slots_.size()); ++s)
      if (in_z[s]) cert.sets[slots_[s].second - 1].insert(slots_[s].first);
    return cert;
  }

 private:
  bool augment(int start) {
    std::vector<int> slots{start};
    std::vector<std::size_t> pos{0};
    std::vector<std::pair<int, int>> via;  // (tail, edge) leading from slots[i] to slots[i+1]
    while (!slots.empty()) {
      int s = slots.back();
      std::size_t& p = pos.back();
      if (p == adj_[s].size()) {
        slots.pop_back();
        pos.pop_back();
        if (!via.empty()) via.pop_back();
        continue;
      }
      auto [t, e] = adj_[s][p++];
      if (stamp_[t] == start) continue;
      stamp_[t] = start;
      via.emplace_back(t, e);
      if (match_tail_[t] < 0) {
        for (std::size_t i = 0; i < slots.size(); ++i) {
          match_slot_[slots[i]] = via[i].first;
          match_edge_[slots[i]] = via[i].second;
          match_tail_[via[i].first] = slots[i];
        }
        return true;
      }
      slots.push_back(match_tail_[t]);
      pos.push_back(0);
    }
    return false;
  }

  const ColoredDigraph& g_;
  std::vector<std::pair<int, int>> slots_;              // (vertex, color)
  std::vector<std::vector<std::pair<int, int>>> adj_;  // (tail, edge) in edge order
  std::vector<int> match_slot_, match_edge_, match_tail_, stamp_;
};

}  // namespace

MatchingResult find_even_k_subgraph(const ColoredDigraph& g, const std::vector<int>& demand) {
  SlotMatcher matcher(g, demand);
  MatchingResult result;
  if (matcher.run() == 0) {
    result.feasible = true;
    result.subgraph = matcher.subgraph();
    if (!is_even_subgraph(g, result.subgraph, demand)) throw std::logic_error("matching produced an uneven subgraph");
    std::set<int> d(demand.begin(), demand.end());
    result.margin = hall_check(g, std::vector<std::set<int>>(g.k(), d));
    return result;
  }
  result.certificate = matcher.certificate();
  result.margin = hall_check(g, result.certificate.sets);
  if (result.margin >= 0) throw std::logic_error("extracted Hall certificate is not a violation");
  return result;
}

bool is_even_subgraph(const ColoredDigraph& g, const EvenSubgraph& s, const std::vector<int>& demand) {
  std::vector<int> out(g.vertex_count(), 0);
  std::vector<std::vector<int>> in(g.vertex_count(), std::vector<int>(g.k() + 1, 0));
  std::set<int> unique(s.edges.begin(), s.edges.end());
  if (unique.size() != s.edges.size()) return false;
  for (int e : s.edges) {
    if (e < 0 || e >= static_cast<int>(g.edges().size())) return false;
    const auto& edge = g.edges()[e];
    ++out[edge.tail];
    ++in[edge.head][edge.color];
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (out[v] > 1) return false;
  for (int v : demand)
    for (int c = 1; c <= g.k(); ++c)
      if (in[v][c] != 1) return false;
  return true;
}

KSubgraphResult find_k_subgraph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                                const std::vector<int>& demand, int k) {
  ColoredDigraph g(k);
  for (int v = 0; v < vertex_count; ++v) g.add_vertex();
  for (auto [t, h] : edges)
    for (int c = 1; c <= k; ++c) g.add_edge(t, h, c);
  auto r = find_even_k_subgraph(g, demand);
  KSubgraphResult out;
  out.feasible = r.feasible;
  if (r.feasible) {
    for (int e : r.subgraph.edges) out.edges.push_back(e / k);
    std::sort(out.edges.begin(), out.edges.end());
  } else {
    // All colors see the same in-neighborhoods, so the alternating set is color-symmetric.
    out.violator = r.certificate.sets[0];
    for (const auto& a : r.certificate.sets)
      if (a != out.violator) throw std::logic_error("color-duplicated certificate is not symmetric");
  }
  return out;
}

}  // namespace tarski
