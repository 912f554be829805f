#include "tarski/transfer.hpp"

#include <algorithm>
#include <numeric>

namespace tarski {

namespace {

std::vector<Word> sorted(const std::set<Word>& s) { return {s.begin(), s.end()}; }

}  // namespace

long TransferResult::total_size() const {
  long n = 0;
  for (const auto& s : s_prime) n += static_cast<long>(s.size());
  return n;
}

TransferResult transfer_finite_index(const std::vector<std::vector<Word>>& sets, const CosetTransversal& transversal,
                                     const std::vector<Word>& F) {
  if (sets.size() < 2) throw std::invalid_argument("need at least two translating sets");
  if (std::find(sets[0].begin(), sets[0].end(), Word{}) == sets[0].end())
    throw std::invalid_argument("1 must belong to S_1");
  if (F.empty()) throw std::invalid_argument("F must be nonempty");
  std::set<Word> f_set(F.begin(), F.end());
  for (const auto& f : f_set)
    if (transversal.representative(f) != f) throw std::invalid_argument("F must consist of coset representatives");

  TransferResult r;
  r.transversal = transversal;
  r.original_sets = sets;
  r.F = sorted(f_set);
  std::set<Word> phi_union;
  for (const auto& s : sets) {
    std::set<Word> phi;
    for (const auto& f : r.F)
      for (const auto& g : s) phi.insert(transversal.representative(f * g.inverse()));
    std::set<Word> sp;
    for (const auto& p : phi)
      for (const auto& g : s)
        for (const auto& f : r.F) {
          Word h = p * g * f.inverse();
          if (transversal.in_subgroup(h)) sp.insert(h);
        }
    phi_union.insert(phi.begin(), phi.end());
    r.phi.push_back(sorted(phi));
    r.s_prime.push_back(sorted(sp));
  }
  r.phi_union = sorted(phi_union);

  const long nphi = static_cast<long>(r.phi_union.size()), nf = static_cast<long>(r.F.size());
  const long k = static_cast<long>(sets.size());
  if (nphi == nf) {
    r.transfer_case = TransferCase::KColors;
    r.size_bound = r.total_size();
  } else if (2 * nphi <= k * nf) {
    r.transfer_case = TransferCase::TwoColors;
    r.size_bound = 2 * r.total_size();
  } else {
    throw std::invalid_argument("hypotheses of the transfer fail for this F: |Phi| = " + std::to_string(nphi) +
                                ", |F| = " + std::to_string(nf));
  }

  if (transversal.finite() && r.F.size() == transversal.representatives().size()) {
    const long t = nf;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      bool has_one = std::find(sets[i].begin(), sets[i].end(), Word{}) != sets[i].end();
      if (has_one && static_cast<long>(r.s_prime[i].size()) > t * (static_cast<long>(sets[i].size()) - 1) + 1)
        throw std::logic_error("transfer size exceeds |T|(|S_i|-1)+1");
    }
  }
  for (const auto& s : r.s_prime)
    for (const auto& h : s)
      if (!transversal.in_subgroup(h)) throw std::logic_error("transferred element outside H");
  return r;
}

TransferResult transfer_finite_index(const Decomposition& d, const CosetTransversal& transversal) {
  return transfer_finite_index(d.translating_sets, transversal, transversal.representatives());
}

TransferCertificate certify_sets(const CosetTransversal& transversal, const std::vector<std::vector<Word>>& sets,
                                 int radius) {
  FreeGroup group(transversal.rank());
  auto ball = colored_cayley_ball<FreeGroup>(group, sets, radius, group.generators(),
                                             [&](const Word& w) { return transversal.in_subgroup(w); });
  auto interior = ball.graph.interior_vertices();
  if (ball.interior_radius < 0 || interior.empty())
    throw std::invalid_argument("radius too small to contain any interior vertex");
  TransferCertificate c;
  c.radius = radius;
  c.interior_radius = ball.interior_radius;
  c.vertex_count = ball.graph.vertex_count();
  c.interior_count = static_cast<int>(interior.size());
  c.matching = find_even_k_subgraph(ball.graph, interior);
  return c;
}

TransferCertificate certify_transfer(const TransferResult& result, int radius) {
  if (result.transfer_case == TransferCase::KColors) return certify_sets(result.transversal, result.s_prime, radius);
  std::set<Word> all;
  for (const auto& s : result.s_prime) all.insert(s.begin(), s.end());
  std::vector<Word> u(all.begin(), all.end());
  return certify_sets(result.transversal, {u, u}, radius);
}

CubeWitness cube_search(const std::vector<AbelianVector>& U, int cap) {
  if (U.empty()) throw std::invalid_argument("U must be nonempty");
  const std::size_t d = U.front().rank();
  for (int M = 0; M <= cap; ++M) {
    std::set<AbelianVector> cube;
    AbelianVector p(d);
    // odometer over [0,M]^d
    while (true) {
      cube.insert(p);
      std::size_t i = 0;
      while (i < d && p.coordinates[i] == M) p.coordinates[i++] = 0;
      if (i == d) break;
      ++p.coordinates[i];
    }
    std::set<AbelianVector> sum;
    for (const auto& x : cube)
      for (const auto& u : U) sum.insert(x + u);
    if (sum.size() <= 2 * cube.size())
      return {M, static_cast<long>(cube.size()), static_cast<long>(sum.size())};
  }
  throw std::invalid_argument("cube search exceeded M = " + std::to_string(cap));
}

VarietyTransfer transfer_abelian_variety(const Decomposition& d, int cap) {
  if (d.k() != 2) throw std::invalid_argument("expected a 2-paradoxical decomposition");
  VarietyTransfer v;
  v.four_colors = double_up(d, d);
  const int rank = d.rank();
  std::set<AbelianVector> u;
  for (const auto& s : v.four_colors.translating_sets)
    for (const auto& g : s) u.insert(abelian_image(g.inverse(), rank));
  v.U.assign(u.begin(), u.end());
  v.cube = cube_search(v.U, cap);

  auto transversal = CosetTransversal::abelian_kernel(rank);
  std::vector<Word> F;
  AbelianVector p(static_cast<std::size_t>(rank));
  while (true) {
    F.push_back(transversal.lift(p));
    int i = 0;
    while (i < rank && p.coordinates[i] == v.cube.M) p.coordinates[i++] = 0;
    if (i == rank) break;
    ++p.coordinates[i];
  }
  v.result = transfer_finite_index(v.four_colors.translating_sets, transversal, F);
  const long f = static_cast<long>(v.result.F.size());
  long s = 0;
  for (const auto& set : v.four_colors.translating_sets) s += static_cast<long>(set.size());
  v.a_priori_bound = 4 * s * f * f;
  return v;
}

}  // namespace tarski
