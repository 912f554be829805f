#pragma once

#include <functional>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "tarski/cayley.hpp"
#include "tarski/groups.hpp"
#include "tarski/matching.hpp"
#include "tarski/regset.hpp"
#include "tarski/word.hpp"

namespace tarski {

enum class PieceMode { Symbolic, Ball };

using Piece = std::variant<RegSet, std::set<Word>>;

/// k families of pieces; pieces[i][j] is translated by translating_sets[i][j].
struct Decomposition {
  Alphabet alphabet;
  std::vector<std::vector<Word>> translating_sets;
  std::vector<std::vector<Piece>> pieces;
  PieceMode mode = PieceMode::Symbolic;

  int k() const { return static_cast<int>(translating_sets.size()); }
  int rank() const { return alphabet.rank(); }
  int tarski_size() const;
  /// Largest |g| over all translating elements.
  int max_translation() const;
  const RegSet& symbolic_piece(int i, int j) const;
  /// Throws unless shapes agree, k >= 2, and each S_i has distinct entries.
  void validate() const;
};

struct VerificationReport {
  bool disjoint_ok = true;
  std::vector<bool> cover_ok;
  std::vector<bool> strong_ok;
  std::vector<Word> counterexamples;  // shortlex sorted, one per failed check
  int checked_radius = -1;             // -1 for exact verification
  int interior_radius = -1;
  /// Ball verification only: every interior element lies in some piece (not part of the
  /// paradoxical conditions, reported for the strong form).
  bool pieces_cover_interior = false;

  bool all_ok() const;
};

/// The four-piece decomposition of F(a, b) by last letter.
Decomposition pingpong_f2();
/// Same decomposition by last letter x^{+-1}, y^{+-1} in a free group of any rank >= 2; words ending
/// in other letters, and 1, lie in no piece.
Decomposition pingpong(const Alphabet& alphabet, Letter x = 1, Letter y = 2);

VerificationReport verify_exact(const Decomposition& d);

/// membership(i, j, w): is w in piece P_{i,j}.
using PieceOracle = std::function<bool(int, int, const Word&)>;
PieceOracle default_oracle(const Decomposition& d);
VerificationReport verify_ball(const Decomposition& d, const PieceOracle& membership, int radius);
inline VerificationReport verify_ball(const Decomposition& d, int radius) {
  return verify_ball(d, default_oracle(d), radius);
}

Decomposition translate_decomposition(const Decomposition& d, const std::vector<Word>& shifts);

/// Colors (i, j) in lexicographic order; label g h carries P_{i,g} and Q_{j,h} g^-1.
Decomposition double_up(const Decomposition& d, const Decomposition& e);

/// Ball of Cay(F, (S_1..S_k)) with the chosen edges x -> x g for x in P_{i,g}.
struct DecompositionBall {
  ColoredBall<FreeGroup> ball;
  EvenSubgraph chosen;
};
DecompositionBall decomposition_ball(const Decomposition& d, int radius);

/// Ball-mode decomposition read off chosen edges: P_{i,s} = tails of chosen color-i edges labeled s.
Decomposition decomposition_from_subgraph(const ColoredBall<FreeGroup>& ball, const EvenSubgraph& chosen,
                                          const std::vector<std::vector<Word>>& sets, const Alphabet& alphabet);

struct SurgeryPath {
  int start;                  // vertex without outgoing edge
  std::vector<int> vertices;  // start, then backwards along color 1
  bool truncated = false;     // left the known part of the graph
};

struct NormalizeResult {
  EvenSubgraph chosen;
  std::vector<SurgeryPath> paths;
  ColoredDigraph graph;  // chosen edges only, on the same vertices
};

/// Loop surgery: for every interior vertex without an outgoing chosen edge, remove the backward
/// color-1 path and put a color-1 loop on each of its vertices.
NormalizeResult normalize(const ColoredDigraph& g, const EvenSubgraph& lambda);

struct LowerBoundReport {
  int union_rank = 0;          // rank of <S_1 u S_2>
  bool union_non_amenable = false;
  std::vector<int> set_ranks;  // rank of <S_i>
  std::vector<bool> set_infinite;
};

LowerBoundReport ozawa_lower_bounds(const Decomposition& d);
/// Tarski number lower bounds when every m-generated subgroup is amenable (m + 3) or finite (2m + 4).
inline int lower_bound_general(int m) { return m + 3; }
inline int lower_bound_torsion(int m) { return 2 * m + 4; }

}  // namespace tarski
