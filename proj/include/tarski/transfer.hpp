#pragma once

#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tarski/cayley.hpp"
#include "tarski/decomposition.hpp"
#include "tarski/groups.hpp"
#include "tarski/matching.hpp"
#include "tarski/subgroup.hpp"

namespace tarski {

enum class TransferCase {
  KColors,  // |Phi| = |F|: H has a k-paradoxical decomposition with sets S'_i
  TwoColors // |Phi| <= (k/2)|F|: H has a 2-paradoxical decomposition using the union of the S'_i
};

/// Data of the subgroup transfer for H of F(rank) with right transversal T and F a finite part of T.
struct TransferResult {
  CosetTransversal transversal;
  std::vector<std::vector<Word>> original_sets;
  std::vector<Word> F;
  std::vector<std::vector<Word>> phi;  // Phi_i = pi_T(F S_i^-1)
  std::vector<Word> phi_union;
  std::vector<std::vector<Word>> s_prime;  // S'_i = Phi_i S_i F^-1 intersected with H
  TransferCase transfer_case = TransferCase::KColors;
  long size_bound = 0;  // sum |S'_i|, doubled in the two-color case

  long total_size() const;
  int k() const { return static_cast<int>(s_prime.size()); }
};

/// Throws std::invalid_argument if 1 is not in S_1, if F is empty or not made of representatives,
/// or if |Phi| exceeds both |F| and (k/2)|F|.
TransferResult transfer_finite_index(const std::vector<std::vector<Word>>& sets, const CosetTransversal& transversal,
                                     const std::vector<Word>& F);
inline TransferResult transfer_finite_index(const Decomposition& d, const CosetTransversal& transversal,
                                            const std::vector<Word>& F) {
  return transfer_finite_index(d.translating_sets, transversal, F);
}
/// F = T; requires finite index.
TransferResult transfer_finite_index(const Decomposition& d, const CosetTransversal& transversal);

struct TransferCertificate {
  MatchingResult matching;
  int radius = 0;
  int interior_radius = 0;
  int vertex_count = 0;
  int interior_count = 0;
};

/// Ball of H inside the radius-r ball of F(rank), edges from the S'_i (or their union, twice, in the
/// two-color case); matching with demand = interior. Throws if no vertex is interior.
TransferCertificate certify_sets(const CosetTransversal& transversal, const std::vector<std::vector<Word>>& sets,
                                 int radius);
TransferCertificate certify_transfer(const TransferResult& result, int radius);

/// Smallest M <= cap with |[0,M]^d + U| <= 2 (M+1)^d.
struct CubeWitness {
  int M = 0;
  long cube_size = 0;
  long product_size = 0;
};
CubeWitness cube_search(const std::vector<AbelianVector>& U, int cap = 16);

struct VarietyTransfer {
  Decomposition four_colors;
  std::vector<AbelianVector> U;
  CubeWitness cube;
  TransferResult result;
  long a_priori_bound = 0;  // 2 * sum 2|S_i||F|^2 over the four colors
  std::string a_priori_formula = "4 n^2 g(n^2)^2";
};

/// Transfer to the kernel of F(d) -> Z^d through the four-color decomposition double_up(d, d).
VarietyTransfer transfer_abelian_variety(const Decomposition& d, int cap = 16);

template <class Q>
typename Q::element_type map_word(const Q& q, const std::vector<typename Q::element_type>& images, const Word& w) {
  auto out = q.identity();
  for (Letter l : w.letters()) {
    int i = l < 0 ? -l : l;
    if (i > static_cast<int>(images.size())) throw std::invalid_argument("generator without image");
    const auto& x = images[i - 1];
    out = q.mul(out, l < 0 ? q.inv(x) : x);
  }
  return out;
}

template <class Q>
struct QuotientTransfer {
  std::vector<std::vector<typename Q::element_type>> sets;  // rho(S_i), deduplicated
  long image_size = 0;
  long original_size = 0;
  ColoredBall<Q> ball;
  MatchingResult matching;
  int interior_count = 0;
};

/// rho(S_i) and the matching on the radius-r ball of Cay(Q, (rho S_1, .., rho S_k)).
template <class Q>
QuotientTransfer<Q> transfer_quotient(const std::vector<std::vector<Word>>& sets, const Q& q,
                                      const std::vector<typename Q::element_type>& images, int radius) {
  QuotientTransfer<Q> out;
  for (const auto& s : sets) {
    std::set<typename Q::element_type> img;
    for (const auto& g : s) img.insert(map_word(q, images, g));
    out.sets.emplace_back(img.begin(), img.end());
    out.image_size += static_cast<long>(img.size());
    out.original_size += static_cast<long>(s.size());
  }
  out.ball = colored_cayley_ball(q, out.sets, radius);
  auto interior = out.ball.graph.interior_vertices();
  out.interior_count = static_cast<int>(interior.size());
  out.matching = find_even_k_subgraph(out.ball.graph, interior);
  return out;
}

struct ProductTrial {
  long f = 0, fu = 0;
  long f1 = 0, f1u1 = 0, f1u1sq = 0;
  long f2 = 0, f2u2 = 0, f2u2sq = 0;
  bool expanding = false;  // |FU| >= 2|F|
  int branch = 0;          // 0 none, 1: |F1 U1| >= sqrt2 |F1|, 2: otherwise (then H2 must expand)
  bool product_inclusion_ok = true;  // |F1 U1||F2 U2| >= |FU| whenever F lies in F1 x F2
  bool branch_consequence_ok = true; // branch 2 forces |F2 U2| >= sqrt2 |F2| when F = F1 x F2
};

struct ProductReport {
  std::vector<ProductTrial> trials;
  long bound = 0;  // 2 (n-1)^2
};

inline long product_tarski_bound(long n) { return 2 * (n - 1) * (n - 1); }

template <class G, class E>
std::set<E> product_set(const G& g, const std::set<E>& a, const std::set<E>& b) {
  std::set<E> out;
  for (const auto& x : a)
    for (const auto& y : b) out.insert(g.mul(x, y));
  return out;
}

template <class G1, class G2>
ProductTrial product_trial(const G1& g1, const G2& g2,
                           const std::set<std::pair<typename G1::element_type, typename G2::element_type>>& U,
                           const std::set<std::pair<typename G1::element_type, typename G2::element_type>>& F,
                           const std::set<typename G1::element_type>& F1,
                           const std::set<typename G2::element_type>& F2) {
  DirectProduct<G1, G2> g(g1, g2);
  std::set<typename G1::element_type> U1;
  std::set<typename G2::element_type> U2;
  for (const auto& [x, y] : U) {
    U1.insert(x);
    U2.insert(y);
  }
  ProductTrial t;
  t.f = static_cast<long>(F.size());
  t.fu = static_cast<long>(product_set(g, F, U).size());
  t.f1 = static_cast<long>(F1.size());
  t.f2 = static_cast<long>(F2.size());
  auto f1u1 = product_set(g1, F1, U1);
  auto f2u2 = product_set(g2, F2, U2);
  t.f1u1 = static_cast<long>(f1u1.size());
  t.f2u2 = static_cast<long>(f2u2.size());
  t.f1u1sq = static_cast<long>(product_set(g1, f1u1, U1).size());
  t.f2u2sq = static_cast<long>(product_set(g2, f2u2, U2).size());
  bool inside = true;
  for (const auto& [x, y] : F) inside = inside && F1.count(x) && F2.count(y);
  if (inside) t.product_inclusion_ok = t.f1u1 * t.f2u2 >= t.fu;
  t.expanding = t.f > 0 && t.fu >= 2 * t.f;
  if (t.expanding) {
    t.branch = t.f1u1 * t.f1u1 >= 2 * t.f1 * t.f1 ? 1 : 2;
    if (t.branch == 2 && inside && t.f == t.f1 * t.f2) t.branch_consequence_ok = t.f2u2 * t.f2u2 >= 2 * t.f2 * t.f2;
  }
  return t;
}

}  // namespace tarski
