#include "tarski/groups.hpp"

namespace tarski {

AbelianVector abelian_image(const Word& w, int rank) {
  AbelianVector v(static_cast<std::size_t>(rank));
  for (Letter l : w.letters()) {
    int g = l > 0 ? l : -l;
    if (g > rank) throw std::invalid_argument("letter outside alphabet");
    v.coordinates[g - 1] += l > 0 ? 1 : -1;
  }
  return v;
}

FreeAbelianGroup::FreeAbelianGroup(int rank, std::vector<std::string> names) : rank_(rank), names_(std::move(names)) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  if (names_.empty()) {
    for (int i = 1; i <= rank; ++i) names_.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(names_.size()) != rank) throw std::invalid_argument("names must match rank");
}

AbelianVector FreeAbelianGroup::basis(int i) const {
  AbelianVector v(static_cast<std::size_t>(rank_));
  v.coordinates.at(i - 1) = 1;
  return v;
}

std::vector<AbelianVector> FreeAbelianGroup::generators() const {
  std::vector<AbelianVector> g;
  for (int i = 1; i <= rank_; ++i) g.push_back(basis(i));
  return g;
}

std::string FreeAbelianGroup::to_string(const AbelianVector& a) const {
  std::string out = "(";
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (i) out += ",";
    out += std::to_string(a.coordinates[i]);
  }
  return out + ")";
}

}  // namespace tarski
