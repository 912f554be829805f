#include "tarski/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace tarski {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("alphabet must have rank >= 1");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty generator name");
    if (n == "1") throw std::invalid_argument("\"1\" is reserved for the identity");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator name: " + n);
  }
}

Alphabet Alphabet::numbered(int rank, std::string_view stem) {
  std::vector<std::string> names;
  for (int i = 1; i <= rank; ++i) names.push_back(std::string(stem) + std::to_string(i));
  return Alphabet(std::move(names));
}

Word::Word(std::initializer_list<Letter> raw) : Word(reduce(std::span<const Letter>(raw.begin(), raw.size()))) {}

Word Word::reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (l == 0) throw std::invalid_argument("letter 0 is not a generator");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out), Reduced{});
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = -l;
  return Word(std::move(out), Reduced{});
}

Word Word::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Word result;
  Word base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len), Reduced{});
}

Word operator*(const Word& u, const Word& v) {
  const auto& a = u.letters_;
  const auto& b = v.letters_;
  std::size_t cancel = 0;
  while (cancel < a.size() && cancel < b.size() && a[a.size() - 1 - cancel] == -b[cancel]) ++cancel;
  std::vector<Letter> out;
  out.reserve(a.size() + b.size() - 2 * cancel);
  out.insert(out.end(), a.begin(), a.end() - cancel);
  out.insert(out.end(), b.begin() + cancel, b.end());
  return Word(std::move(out), Word::Reduced{});
}

std::strong_ordering operator<=>(const Word& u, const Word& v) {
  if (auto c = u.size() <=> v.size(); c != 0) return c;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (auto c = letter_index(u[i]) <=> letter_index(v[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Word reduce(const Alphabet& alphabet, std::span<const Letter> raw) {
  for (Letter l : raw) {
    if (!alphabet.valid(l))
      throw std::invalid_argument("letter " + std::to_string(l) + " outside alphabet of rank " +
                                  std::to_string(alphabet.rank()));
  }
  return Word::reduce(raw);
}

CyclicReduction cyclic_reduce(const Word& u) {
  std::size_t k = 0;
  const std::size_t n = u.size();
  while (2 * k + 1 < n && u[k] == -u[n - 1 - k]) ++k;
  // u = p * core * p^-1 with p the first k letters, so the conjugator is p^-1.
  return {u.slice(k, n - 2 * k), u.slice(0, k).inverse()};
}

Word commutator(const Word& g, const Word& h) { return g.inverse() * h.inverse() * g * h; }

Word commutator(std::span<const Word> ws) {
  if (ws.empty()) return {};
  Word acc = ws[0];
  for (std::size_t i = 1; i < ws.size(); ++i) acc = commutator(acc, ws[i]);
  return acc;
}

std::vector<int> abelianize(const Word& w, int rank) {
  std::vector<int> v(rank, 0);
  for (Letter l : w.letters()) {
    int g = l > 0 ? l : -l;
    if (g > rank) throw std::invalid_argument("letter outside alphabet");
    v[g - 1] += l > 0 ? 1 : -1;
  }
  return v;
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "·";
    Letter l = w[i];
    out += alphabet.name(l > 0 ? l : -l);
    if (l < 0) out += "⁻¹";
  }
  return out;
}

namespace {

bool starts_with(std::string_view s, std::size_t pos, std::string_view token) {
  return s.substr(pos, token.size()) == token;
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> raw;
  std::size_t pos = 0;
  auto skip_separators = [&] {
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*' || text[pos] == '.') {
        ++pos;
      } else if (starts_with(text, pos, "·")) {
        pos += std::string_view("·").size();
      } else {
        break;
      }
    }
  };
  // Longest names first so that "x10" wins over "x1".
  std::vector<int> order(alphabet.rank());
  for (int i = 0; i < alphabet.rank(); ++i) order[i] = i + 1;
  std::ranges::sort(order, [&](int a, int b) { return alphabet.name(a).size() > alphabet.name(b).size(); });

  skip_separators();
  while (pos < text.size()) {
    int generator = 0;
    if (text[pos] == '1' && std::none_of(order.begin(), order.end(), [&](int g) {
          return starts_with(text, pos, alphabet.name(g));
        })) {
      ++pos;
      skip_separators();
      continue;
    }
    for (int g : order) {
      if (starts_with(text, pos, alphabet.name(g))) {
        generator = g;
        pos += alphabet.name(g).size();
        break;
      }
    }
    if (generator == 0) throw WordParseError("cannot parse word at: " + std::string(text.substr(pos)));
    long long exponent = 1;
    if (starts_with(text, pos, "⁻¹")) {
      exponent = -1;
      pos += std::string_view("⁻¹").size();
    } else if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool negative = false;
      if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw WordParseError("missing exponent in: " + std::string(text));
      exponent = std::stoll(std::string(text.substr(start, pos - start)));
      if (negative) exponent = -exponent;
    }
    Letter l = exponent < 0 ? -generator : generator;
    for (long long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) raw.push_back(l);
    skip_separators();
  }
  return Word::reduce(raw);
}

std::vector<Word> all_reduced_words(int rank, int max_length) {
  std::vector<Word> out;
  if (max_length < 0) return out;
  out.emplace_back();
  std::size_t begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (int li = 0; li < 2 * rank; ++li) {
        Letter l = letter_from_index(li);
        const Word& w = out[i];
        if (!w.empty() && w.back() == -l) continue;
        std::vector<Letter> letters = w.letters();
        letters.push_back(l);
        out.push_back(Word::reduce(letters));
      }
    }
    begin = end;
  }
  // Within a length the expansion above is already lexicographic in letter order.
  return out;
}

}  // namespace tarski
