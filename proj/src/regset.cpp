#include "tarski/regset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tarski {

RegSet::RegSet(int rank) : rank_(rank), delta_(1, std::vector<int>(2 * rank, -1)), accepting_(1, false) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
}

RegSet RegSet::from_dfa(int rank, const Dfa& dfa) { return canonical(rank, dfa); }

RegSet RegSet::canonical(int rank, const Dfa& dfa) {
  const int letters = 2 * rank;
  const int n = static_cast<int>(dfa.transitions.size());
  if (n == 0) return RegSet(rank);
  if (static_cast<int>(dfa.accepting.size()) != n) throw std::invalid_argument("accepting flags must match states");
  for (const auto& row : dfa.transitions) {
    if (static_cast<int>(row.size()) != letters) throw std::invalid_argument("alphabet mismatch in automaton");
    for (int t : row)
      if (t < -1 || t >= n) throw std::invalid_argument("transition target out of range");
  }

  // Product with the last-letter tracker so only reduced words survive.
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> states{{0, -1}};
  id[{0, -1}] = 0;
  std::vector<std::vector<int>> delta;
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [q, last] = states[i];
    std::vector<int> row(letters, -1);
    for (int li = 0; li < letters; ++li) {
      if (last >= 0 && li == (last ^ 1)) continue;
      int t = dfa.transitions[q][li];
      if (t < 0) continue;
      auto [it, fresh] = id.emplace(std::pair{t, li}, static_cast<int>(states.size()));
      if (fresh) states.emplace_back(t, li);
      row[li] = it->second;
    }
    delta.push_back(std::move(row));
  }
  const int m = static_cast<int>(states.size());
  std::vector<bool> accept(m);
  for (int i = 0; i < m; ++i) accept[i] = dfa.accepting[states[i].first];

  // Trim: keep states that reach an accepting state.
  std::vector<std::vector<int>> reverse(m);
  for (int i = 0; i < m; ++i)
    for (int t : delta[i])
      if (t >= 0) reverse[t].push_back(i);
  std::vector<bool> live(m, false);
  std::vector<int> stack;
  for (int i = 0; i < m; ++i)
    if (accept[i]) {
      live[i] = true;
      stack.push_back(i);
    }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : reverse[v])
      if (!live[u]) {
        live[u] = true;
        stack.push_back(u);
      }
  }
  if (!live[0]) return RegSet(rank);

  // Moore refinement; a missing or dead transition is class -1.
  std::vector<int> cls(m, -1);
  for (int i = 0; i < m; ++i)
    if (live[i]) cls[i] = accept[i] ? 1 : 0;
  int classes = 0;
  while (true) {
    std::map<std::vector<int>, int> signature_id;
    std::vector<int> next(m, -1);
    for (int i = 0; i < m; ++i) {
      if (!live[i]) continue;
      std::vector<int> sig{cls[i]};
      for (int t : delta[i]) sig.push_back(t >= 0 && live[t] ? cls[t] : -1);
      auto [it, fresh] = signature_id.emplace(std::move(sig), static_cast<int>(signature_id.size()));
      next[i] = it->second;
    }
    int count = static_cast<int>(signature_id.size());
    cls = std::move(next);
    if (count == classes) break;
    classes = count;
  }

  // Quotient, renumbered breadth-first from the initial class.
  std::vector<int> representative(classes, -1);
  for (int i = 0; i < m; ++i)
    if (live[i] && representative[cls[i]] < 0) representative[cls[i]] = i;
  std::vector<int> number(classes, -1);
  std::vector<int> order{cls[0]};
  number[cls[0]] = 0;
  RegSet out(rank);
  out.delta_.clear();
  out.accepting_.clear();
  for (std::size_t i = 0; i < order.size(); ++i) {
    int rep = representative[order[i]];
    std::vector<int> row(letters, -1);
    for (int li = 0; li < letters; ++li) {
      int t = delta[rep][li];
      if (t < 0 || !live[t]) continue;
      int c = cls[t];
      if (number[c] < 0) {
        number[c] = static_cast<int>(order.size());
        order.push_back(c);
      }
      row[li] = number[c];
    }
    out.delta_.push_back(std::move(row));
    out.accepting_.push_back(accept[rep]);
  }
  return out;
}

RegSet RegSet::all(int rank) {
  Dfa dfa{{std::vector<int>(2 * rank, 0)}, {true}};
  return canonical(rank, dfa);
}

RegSet RegSet::ending_in(int rank, Letter x) {
  if (x == 0 || std::abs(x) > rank) throw std::invalid_argument("letter outside alphabet");
  // State 0: nothing read or last letter differs from x; state 1: last letter is x.
  const int lx = letter_index(x);
  Dfa dfa;
  dfa.transitions.assign(2, std::vector<int>(2 * rank, 0));
  for (int q = 0; q < 2; ++q) dfa.transitions[q][lx] = 1;
  dfa.accepting = {false, true};
  return canonical(rank, dfa);
}

RegSet RegSet::from_words(int rank, const std::vector<Word>& words) {
  Dfa dfa;
  dfa.transitions.emplace_back(2 * rank, -1);
  dfa.accepting.push_back(false);
  for (const Word& w : words) {
    int q = 0;
    for (Letter l : w.letters()) {
      if (l == 0 || std::abs(l) > rank) throw std::invalid_argument("alphabet mismatch: letter outside rank");
      int& t = dfa.transitions[q][letter_index(l)];
      if (t < 0) {
        t = static_cast<int>(dfa.transitions.size());
        dfa.transitions.emplace_back(2 * rank, -1);
        dfa.accepting.push_back(false);
      }
      q = t;
    }
    dfa.accepting[q] = true;
  }
  return canonical(rank, dfa);
}

bool RegSet::is_empty() const {
  return std::none_of(accepting_.begin(), accepting_.end(), [](bool b) { return b; });
}

bool RegSet::member(const Word& w) const {
  int q = 0;
  for (Letter l : w.letters()) {
    if (l == 0 || std::abs(l) > rank_) throw std::invalid_argument("alphabet mismatch: letter outside rank");
    q = delta_[q][letter_index(l)];
    if (q < 0) return false;
  }
  return accepting_[q];
}

std::vector<Word> RegSet::enumerate(int max_length) const {
  std::vector<Word> out;
  if (max_length < 0) return out;
  std::vector<std::pair<std::vector<Letter>, int>> frontier{{{}, 0}};
  for (int len = 0; len <= max_length && !frontier.empty(); ++len) {
    for (const auto& [w, q] : frontier)
      if (accepting_[q]) out.push_back(Word::reduce(w));
    if (len == max_length) break;
    std::vector<std::pair<std::vector<Letter>, int>> next;
    for (const auto& [w, q] : frontier) {
      for (int li = 0; li < 2 * rank_; ++li) {
        int t = delta_[q][li];
        if (t < 0) continue;
        auto v = w;
        v.push_back(letter_from_index(li));
        next.emplace_back(std::move(v), t);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::optional<Word> RegSet::shortlex_least() const {
  // Breadth-first discovery in letter order reaches each state first along its shortlex-least word.
  std::vector<std::vector<Letter>> path(state_count());
  std::vector<bool> seen(state_count(), false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int q = queue[i];
    if (accepting_[q]) return Word::reduce(path[q]);
    for (int li = 0; li < 2 * rank_; ++li) {
      int t = delta_[q][li];
      if (t < 0 || seen[t]) continue;
      seen[t] = true;
      path[t] = path[q];
      path[t].push_back(letter_from_index(li));
      queue.push_back(t);
    }
  }
  return std::nullopt;
}

void RegSet::check_rank(const RegSet& other) const {
  if (rank_ != other.rank_) throw std::invalid_argument("alphabet mismatch between sets");
}

template <class Op>
RegSet RegSet::product(const RegSet& a, const RegSet& b, Op op) {
  a.check_rank(b);
  const int letters = 2 * a.rank_;
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> states{{0, 0}};
  id[{0, 0}] = 0;
  Dfa dfa;
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [p, q] = states[i];
    std::vector<int> row(letters, -1);
    for (int li = 0; li < letters; ++li) {
      int s = p >= 0 ? a.delta_[p][li] : -1;
      int t = q >= 0 ? b.delta_[q][li] : -1;
      if (s < 0 && t < 0) continue;
      auto [it, fresh] = id.emplace(std::pair{s, t}, static_cast<int>(states.size()));
      if (fresh) states.emplace_back(s, t);
      row[li] = it->second;
    }
    dfa.transitions.push_back(std::move(row));
    dfa.accepting.push_back(op(p >= 0 && a.accepting_[p], q >= 0 && b.accepting_[q]));
  }
  return canonical(a.rank_, dfa);
}

RegSet operator|(const RegSet& a, const RegSet& b) {
  return RegSet::product(a, b, [](bool x, bool y) { return x || y; });
}

RegSet operator&(const RegSet& a, const RegSet& b) {
  return RegSet::product(a, b, [](bool x, bool y) { return x && y; });
}

RegSet operator-(const RegSet& a, const RegSet& b) {
  return RegSet::product(a, b, [](bool x, bool y) { return x && !y; });
}

RegSet RegSet::complement() const { return all(rank_) - *this; }

RegSet RegSet::translate(const Word& g) const {
  for (Letter l : g.letters())
    if (std::abs(l) > rank_) throw std::invalid_argument("alphabet mismatch: letter outside rank");
  const int letters = 2 * rank_;
  const int m = static_cast<int>(g.size());
  if (m == 0) return *this;

  // Every w in P factors uniquely as u * (g_1..g_k)^-1 with maximal cancellation k, and then
  // reduce(w g) = u * g_{k+1}..g_m. The NFA reads u in a copy of P that remembers u's last letter,
  // and leaves for the chain reading g_{k+1}..g_m when u's continuation by (g_1..g_k)^-1 is accepted.
  auto run_inverse_prefix = [&](int q, int k) {
    for (int j = k; j >= 1 && q >= 0; --j) q = delta_[q][letter_index(-g[j - 1])];
    return q >= 0 && accepting_[q];
  };
  auto exits_at = [&](int q, int last, int k) {
    if (k >= 1 && last == letter_index(g[k - 1])) return false;
    if (k < m && last == letter_index(-g[k])) return false;
    return run_inverse_prefix(q, k);
  };

  // NFA states: u-states (q, last) numbered first, then chain[j] meaning g_1..g_j done, j = 1..m.
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> ustates{{0, -1}};
  id[{0, -1}] = 0;
  std::vector<std::vector<std::vector<int>>> moves;  // moves[state][letter] -> targets (u-states only)
  std::vector<bool> u_accepting;
  for (std::size_t i = 0; i < ustates.size(); ++i) {
    auto [q, last] = ustates[i];
    std::vector<std::vector<int>> row(letters);
    for (int li = 0; li < letters; ++li) {
      if (last >= 0 && li == (last ^ 1)) continue;
      int t = delta_[q][li];
      if (t < 0) continue;
      auto [it, fresh] = id.emplace(std::pair{t, li}, static_cast<int>(ustates.size()));
      if (fresh) ustates.emplace_back(t, li);
      row[li].push_back(it->second);
    }
    moves.push_back(std::move(row));
    u_accepting.push_back(exits_at(q, last, m));
  }
  const int u_count = static_cast<int>(ustates.size());
  auto chain = [&](int j) { return u_count + j - 1; };
  for (int i = 0; i < u_count; ++i) {
    auto [q, last] = ustates[i];
    for (int k = 0; k < m; ++k)
      if (exits_at(q, last, k)) moves[i][letter_index(g[k])].push_back(chain(k + 1));
  }
  for (int j = 1; j <= m; ++j) {
    std::vector<std::vector<int>> row(letters);
    if (j < m) row[letter_index(g[j])].push_back(chain(j + 1));
    moves.push_back(std::move(row));
  }
  auto nfa_accepting = [&](int s) { return s < u_count ? u_accepting[s] : s == chain(m); };

  // Subset construction.
  std::map<std::vector<int>, int> subset_id;
  std::vector<std::vector<int>> subsets{{0}};
  subset_id[{0}] = 0;
  Dfa dfa;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    std::vector<int> row(letters, -1);
    for (int li = 0; li < letters; ++li) {
      std::set<int> next;
      for (int s : subsets[i])
        for (int t : moves[s][li]) next.insert(t);
      if (next.empty()) continue;
      std::vector<int> key(next.begin(), next.end());
      auto [it, fresh] = subset_id.emplace(key, static_cast<int>(subsets.size()));
      if (fresh) subsets.push_back(std::move(key));
      row[li] = it->second;
    }
    dfa.transitions.push_back(std::move(row));
    dfa.accepting.push_back(std::any_of(subsets[i].begin(), subsets[i].end(), nfa_accepting));
  }
  return canonical(rank_, dfa);
}

std::string RegSet::to_dot(const Alphabet& alphabet) const {
  std::ostringstream os;
  os << "digraph regset {\n  rankdir=LR;\n";
  for (int q = 0; q < state_count(); ++q)
    os << "  " << q << " [shape=" << (accepting_[q] ? "doublecircle" : "circle") << "];\n";
  for (int q = 0; q < state_count(); ++q)
    for (int li = 0; li < 2 * rank_; ++li)
      if (delta_[q][li] >= 0)
        os << "  " << q << " -> " << delta_[q][li] << " [label=\"" << to_string(Word{letter_from_index(li)}, alphabet)
           << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace tarski
