#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "tarski/groups.hpp"
#include "tarski/matching.hpp"

namespace tarski {

/// Ball of Cay(G, (S_1..S_k)) with edge x -> x s of color i for s in S_i. Vertices are the
/// elements of the metric ball that pass `member`; interior vertices lie within r - c of the
/// identity, c being the largest metric length of a translating element, so every edge into an
/// interior vertex is present.
template <class Group>
struct ColoredBall {
  using element_type = typename Group::element_type;
  ColoredDigraph graph;
  std::vector<element_type> elements;  // elements[v] is vertex v
  std::map<element_type, int> vertex;
  int radius = 0;
  int interior_radius = 0;
  int max_translation = 0;
};

template <class Group>
ColoredBall<Group> colored_cayley_ball(const Group& group,
                                       const std::vector<std::vector<typename Group::element_type>>& sets,
                                       int radius, const std::vector<typename Group::element_type>& metric_gens,
                                       const std::function<bool(const typename Group::element_type&)>& member = {}) {
  if (sets.empty()) throw std::invalid_argument("need at least one translating set");
  auto ball = make_ball(group, metric_gens, radius);
  int c = 0;
  for (const auto& s : sets)
    for (const auto& x : s) {
      int id = ball.id(x);
      if (id < 0) throw std::invalid_argument("radius smaller than max translation length");
      c = std::max(c, ball.distance[id]);
    }
  ColoredBall<Group> out{ColoredDigraph(static_cast<int>(sets.size())), {}, {}, radius, radius - c, c};
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const auto& x = ball.elements[i];
    if (member && !member(x)) continue;
    out.vertex.emplace(x, static_cast<int>(out.elements.size()));
    out.elements.push_back(x);
    out.graph.add_vertex(group.to_string(x), ball.distance[i] <= radius - c);
  }
  for (std::size_t v = 0; v < out.elements.size(); ++v) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (const auto& s : sets[i]) {
        auto it = out.vertex.find(group.mul(out.elements[v], s));
        if (it == out.vertex.end()) continue;
        if (out.graph.find_edge(static_cast<int>(v), it->second, static_cast<int>(i) + 1) >= 0) continue;
        out.graph.add_edge(static_cast<int>(v), it->second, static_cast<int>(i) + 1, group.to_string(s));
      }
    }
  }
  return out;
}

template <class Group>
ColoredBall<Group> colored_cayley_ball(const Group& group,
                                       const std::vector<std::vector<typename Group::element_type>>& sets,
                                       int radius) {
  return colored_cayley_ball(group, sets, radius, group.generators());
}

}  // namespace tarski
