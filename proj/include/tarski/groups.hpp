#pragma once

// Group policies the toolkit computes in. Each policy exposes
//   element_type, identity(), mul(a,b), inv(a), length(a), generators(), to_string(a)
// and elements are totally ordered (operator<) so they can key std::map.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tarski/word.hpp"

namespace tarski {

/// Image of a word in the abelianization, or an element of Z^d.
struct AbelianVector {
  std::vector<long long> coordinates;

  AbelianVector() = default;
  explicit AbelianVector(std::size_t rank) : coordinates(rank, 0) {}
  AbelianVector(std::initializer_list<long long> c) : coordinates(c) {}

  std::size_t rank() const { return coordinates.size(); }
  bool is_zero() const {
    return std::all_of(coordinates.begin(), coordinates.end(), [](long long c) { return c == 0; });
  }
  long long l1_norm() const {
    long long s = 0;
    for (long long c : coordinates) s += c < 0 ? -c : c;
    return s;
  }

  friend AbelianVector operator+(AbelianVector a, const AbelianVector& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
    for (std::size_t i = 0; i < a.rank(); ++i) a.coordinates[i] += b.coordinates[i];
    return a;
  }
  friend AbelianVector operator-(AbelianVector a) {
    for (auto& c : a.coordinates) c = -c;
    return a;
  }
  friend AbelianVector operator-(const AbelianVector& a, const AbelianVector& b) { return a + (-b); }
  auto operator<=>(const AbelianVector&) const = default;
};

AbelianVector abelian_image(const Word& w, int rank);

class FreeGroup {
 public:
  using element_type = Word;

  explicit FreeGroup(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  explicit FreeGroup(int rank) : alphabet_(Alphabet::numbered(rank)) {}

  const Alphabet& alphabet() const { return alphabet_; }
  int rank() const { return alphabet_.rank(); }

  Word identity() const { return {}; }
  Word mul(const Word& u, const Word& v) const {
    check(u);
    check(v);
    return u * v;
  }
  Word inv(const Word& u) const { return u.inverse(); }
  long long length(const Word& u) const { return static_cast<long long>(u.size()); }
  std::vector<Word> generators() const {
    std::vector<Word> g;
    for (int i = 1; i <= rank(); ++i) g.push_back(Word::generator(i));
    return g;
  }
  std::string to_string(const Word& u) const { return tarski::to_string(u, alphabet_); }
  Word parse(std::string_view s) const { return parse_word(s, alphabet_); }

  /// Throws std::invalid_argument when u uses a letter outside the alphabet.
  void check(const Word& u) const {
    for (Letter l : u.letters())
      if (!alphabet_.valid(l)) throw std::invalid_argument("alphabet mismatch: letter outside rank");
  }

 private:
  Alphabet alphabet_;
};

class FreeAbelianGroup {
 public:
  using element_type = AbelianVector;

  explicit FreeAbelianGroup(int rank, std::vector<std::string> names = {});

  int rank() const { return rank_; }
  AbelianVector identity() const { return AbelianVector(rank_); }
  AbelianVector mul(const AbelianVector& a, const AbelianVector& b) const { return a + b; }
  AbelianVector inv(const AbelianVector& a) const { return -a; }
  long long length(const AbelianVector& a) const { return a.l1_norm(); }
  std::vector<AbelianVector> generators() const;
  AbelianVector basis(int i) const;
  std::string to_string(const AbelianVector& a) const;
  /// Image of a word over the same generator names.
  AbelianVector from_word(const Word& w) const { return abelian_image(w, rank_); }

 private:
  int rank_;
  std::vector<std::string> names_;
};

template <class G1, class G2>
class DirectProduct {
 public:
  using element_type = std::pair<typename G1::element_type, typename G2::element_type>;

  DirectProduct(G1 first, G2 second) : first_(std::move(first)), second_(std::move(second)) {}

  const G1& first() const { return first_; }
  const G2& second() const { return second_; }

  element_type identity() const { return {first_.identity(), second_.identity()}; }
  element_type mul(const element_type& a, const element_type& b) const {
    return {first_.mul(a.first, b.first), second_.mul(a.second, b.second)};
  }
  element_type inv(const element_type& a) const { return {first_.inv(a.first), second_.inv(a.second)}; }
  long long length(const element_type& a) const { return first_.length(a.first) + second_.length(a.second); }
  std::vector<element_type> generators() const {
    std::vector<element_type> g;
    for (auto& x : first_.generators()) g.push_back({x, second_.identity()});
    for (auto& y : second_.generators()) g.push_back({first_.identity(), y});
    return g;
  }
  std::string to_string(const element_type& a) const {
    return "(" + first_.to_string(a.first) + ", " + second_.to_string(a.second) + ")";
  }

 private:
  G1 first_;
  G2 second_;
};

/// Breadth-first ball of radius r around the identity in the word metric of `gens` (and inverses).
/// elements[0] is the identity; distance[i] is the metric length of elements[i].
template <class Group>
struct Ball {
  using element_type = typename Group::element_type;
  std::vector<element_type> elements;
  std::vector<int> distance;
  std::map<element_type, int> index;
  int radius = 0;

  bool contains(const element_type& g) const { return index.count(g) > 0; }
  int id(const element_type& g) const {
    auto it = index.find(g);
    return it == index.end() ? -1 : it->second;
  }
  std::size_t size() const { return elements.size(); }
};

template <class Group>
Ball<Group> make_ball(const Group& group, const std::vector<typename Group::element_type>& gens, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  Ball<Group> ball;
  ball.radius = radius;
  std::vector<typename Group::element_type> steps;
  for (const auto& s : gens) {
    steps.push_back(s);
    steps.push_back(group.inv(s));
  }
  ball.elements.push_back(group.identity());
  ball.distance.push_back(0);
  ball.index.emplace(group.identity(), 0);
  std::size_t frontier = 0;
  for (int d = 1; d <= radius; ++d) {
    std::size_t end = ball.elements.size();
    for (std::size_t i = frontier; i < end; ++i) {
      for (const auto& s : steps) {
        auto next = group.mul(ball.elements[i], s);
        if (ball.index.count(next)) continue;
        ball.index.emplace(next, static_cast<int>(ball.elements.size()));
        ball.elements.push_back(std::move(next));
        ball.distance.push_back(d);
      }
    }
    frontier = end;
  }
  return ball;
}

/// Ball in the standard generating set of the group.
template <class Group>
Ball<Group> make_ball(const Group& group, int radius) {
  return make_ball(group, group.generators(), radius);
}

}  // namespace tarski
