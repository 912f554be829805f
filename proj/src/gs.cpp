#include "tarski/gs.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "tarski/groups.hpp"

namespace tarski {

namespace {

int mod(long c, int p) { return static_cast<int>(((c % p) + p) % p); }

Rational rational_pow(const Rational& x, long n) {
  Rational out = 1, base = x;
  while (n > 0) {
    if (n & 1) out *= base;
    base *= base;
    n >>= 1;
  }
  return out;
}

void check_prime(int p) {
  if (p < 2) throw std::invalid_argument("p must be a prime");
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) throw std::invalid_argument("p must be a prime");
}

}  // namespace

TruncSeries::TruncSeries(int p, int D) : p_(p), D_(D) {
  check_prime(p);
  if (D < 1) throw std::invalid_argument("truncation degree must be >= 1");
}

TruncSeries TruncSeries::one(int p, int D) {
  TruncSeries s(p, D);
  s.add({}, 1);
  return s;
}

TruncSeries TruncSeries::letter(Letter l, int p, int D) {
  TruncSeries s(p, D);
  const char x = static_cast<char>((l < 0 ? -l : l) - 1);
  s.add({}, 1);
  if (l > 0) {
    s.add(Monomial(1, x), 1);
  } else {
    for (int k = 1; k <= D; ++k) s.add(Monomial(k, x), k % 2 ? -1 : 1);
  }
  return s;
}

int TruncSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void TruncSeries::add(const Monomial& m, long c) {
  if (static_cast<int>(m.size()) > D_) return;
  int v = mod(coefficient(m) + mod(c, p_), p_);
  if (v == 0)
    terms_.erase(m);
  else
    terms_[m] = v;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  if (p_ != o.p_ || D_ != o.D_) throw std::invalid_argument("series parameters differ");
  TruncSeries out(p_, D_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_)
      if (static_cast<int>(m1.size() + m2.size()) <= D_) out.add(m1 + m2, static_cast<long>(c1) * c2);
  return out;
}

TruncSeries TruncSeries::times_letter(Letter l) const {
  TruncSeries out(p_, D_);
  const char x = static_cast<char>((l < 0 ? -l : l) - 1);
  for (const auto& [m, c] : terms_) {
    out.add(m, c);
    if (l > 0) {
      out.add(m + x, c);
    } else {
      Monomial cur = m;
      for (int k = 1; static_cast<int>(m.size()) + k <= D_; ++k) {
        cur += x;
        out.add(cur, k % 2 ? -static_cast<long>(c) : c);
      }
    }
  }
  return out;
}

std::optional<int> TruncSeries::lowest_nonconstant_degree() const {
  std::optional<int> best;
  for (const auto& [m, c] : terms_)
    if (!m.empty() && (!best || static_cast<int>(m.size()) < *best)) best = static_cast<int>(m.size());
  return best;
}

std::optional<int> TruncSeries::lowest_degree_of_difference_from_one() const {
  if (coefficient({}) != 1) return 0;
  return lowest_nonconstant_degree();
}

std::string TruncSeries::to_string(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, int>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    if (!first) out << " + ";
    first = false;
    if (m.empty()) {
      out << c;
      continue;
    }
    if (c != 1) out << c << "*";
    for (std::size_t i = 0; i < m.size(); ++i) out << (i ? "*" : "") << "X_" << alphabet.name(m[i] + 1);
  }
  return out.str();
}

TruncSeries magnus_expand(const Word& w, int p, int D) {
  auto s = TruncSeries::one(p, D);
  for (Letter l : w.letters()) s = s.times_letter(l);
  return s;
}

std::string Degree::to_string() const {
  switch (kind) {
    case Finite: return std::to_string(value);
    case AtLeast: return ">=" + std::to_string(value);
    case Infinite: return "inf";
  }
  return {};
}

int default_truncation(int p) { return std::max(8, p + 1); }

Degree zassenhaus_deg(const Word& w, int p, int D) {
  check_prime(p);
  if (D < 1) throw std::invalid_argument("truncation degree must be >= 1");
  if (w.is_identity()) return {Degree::Infinite, 0};
  // Coefficients up to degree t are already exact in the expansion truncated at t, so grow t.
  for (int t = 1;; t = std::min(D, 2 * t)) {
    auto d = magnus_expand(w, p, t).lowest_degree_of_difference_from_one();
    if (d) return Degree::finite(*d);
    if (t == D) return {Degree::AtLeast, D + 1};
  }
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return std::invalid_argument("not a rational number: " + text); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  // cpp_int reads a leading 0 as octal
  auto integer = [](std::string s) {
    s.erase(0, std::min(s.find_first_not_of('0'), s.size() - 1));
    return boost::multiprecision::cpp_int(s);
  };
  auto digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (slash != std::string::npos) {
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    if (!digits(a) || !digits(b)) throw bad();
    auto den = integer(b);
    if (den == 0) throw bad();
    return Rational(integer(a), den);
  }
  auto dot = text.find('.');
  std::string whole = text.substr(0, dot), frac = dot == std::string::npos ? "" : text.substr(dot + 1);
  if (whole.empty()) whole = "0";
  if (!digits(whole) || (dot != std::string::npos && !digits(frac))) throw bad();
  boost::multiprecision::cpp_int num = integer(whole + frac), den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  return Rational(num, den);
}

GsReport gs_check(int generators, const std::vector<Degree>& degrees, const Rational& tau, int D) {
  if (tau <= 0 || tau >= 1) throw std::invalid_argument("tau must lie in (0, 1)");
  GsReport r;
  r.D = D;
  r.degrees = degrees;
  Rational base = generators * tau - 1, slack = 0;
  for (const auto& d : degrees) {
    if (d.kind == Degree::Finite)
      base -= rational_pow(tau, d.value);
    else if (d.kind == Degree::AtLeast)
      slack += rational_pow(tau, d.value);
  }
  Rational lower = base - slack;
  r.upper = static_cast<double>(base);
  r.lower = static_cast<double>(lower);
  r.error_bound = static_cast<double>(slack);
  if (slack == 0) {
    r.exact = base;
    r.value = r.upper;
    r.holds = base > 0;
  } else {
    r.value = static_cast<double>((base + lower) / 2);
    r.holds = lower > 0;
    r.undetermined = lower <= 0 && base > 0;
  }
  return r;
}

GsReport gs_check(int generators, const std::vector<Word>& relators, int p, const Rational& tau, int D) {
  std::vector<Degree> degrees;
  for (const auto& r : relators) degrees.push_back(zassenhaus_deg(r, p, D));
  return gs_check(generators, degrees, tau, D);
}

GsOptimum gs_optimize(int generators, const std::vector<Degree>& degrees, int D, int grid) {
  if (grid < 2) throw std::invalid_argument("grid must have at least 2 points");
  auto f = [&](double t) {
    double v = generators * t - 1;
    for (const auto& d : degrees) {
      if (d.kind == Degree::Finite)
        v -= std::pow(t, d.value);
      else if (d.kind == Degree::AtLeast)
        v -= std::pow(t, D + 1);
    }
    return v;
  };
  int best = 1;
  for (int k = 1; k <= grid; ++k)
    if (f(static_cast<double>(k) / (grid + 1)) > f(static_cast<double>(best) / (grid + 1))) best = k;
  double lo = static_cast<double>(best - 1) / (grid + 1), hi = static_cast<double>(best + 1) / (grid + 1);
  const double phi = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 100; ++it) {
    double m1 = hi - phi * (hi - lo), m2 = lo + phi * (hi - lo);
    if (f(m1) < f(m2))
      lo = m1;
    else
      hi = m2;
  }
  double t = (lo + hi) / 2;
  if (t <= 0) t = 1.0 / (grid + 1);
  return {t, f(t)};
}

std::vector<Word> gs_example_relators(int d, int p) {
  std::vector<Word> out;
  for (int i = 1; i <= d; ++i) out.push_back(Word::generator(i).pow(p));
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      if (i != j) {
        Word x = Word::generator(i), y = Word::generator(j);
        out.push_back(commutator(commutator(x, y), y));
      }
  return out;
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.is_identity()) throw std::invalid_argument("the identity has no primitive root");
  auto cr = cyclic_reduce(w);
  const auto& c = cr.core.letters();
  const std::size_t L = c.size();
  for (std::size_t q = 1; q <= L; ++q) {
    if (L % q) continue;
    bool periodic = true;
    for (std::size_t i = q; i < L && periodic; ++i) periodic = c[i] == c[i - q];
    if (!periodic) continue;
    Word prefix = Word::reduce(std::vector<Letter>(c.begin(), c.begin() + static_cast<long>(q)));
    PrimitiveRoot r{cr.conjugator.inverse() * prefix * cr.conjugator, static_cast<long long>(L / q)};
    if (r.u.pow(r.m) != w) throw std::logic_error("primitive root does not reproduce the word");
    return r;
  }
  throw std::logic_error("unreachable");
}

RootDecomposition p_parts(const Word& w, int p) {
  check_prime(p);
  auto root = primitive_root(w);
  long long m = root.m;
  RootDecomposition r;
  while (m % p == 0) {
    m /= p;
    ++r.e;
  }
  r.s = root.u.pow(m);
  long long pe = 1;
  for (int i = 0; i < r.e; ++i) pe *= p;
  if (r.s.pow(pe) != w) throw std::logic_error("p-part does not reproduce the word");
  return r;
}

Rational p_deficiency(int generators, const std::vector<Word>& relators, int p) {
  Rational out = generators - 1;
  for (const auto& r : relators) {
    if (r.is_identity()) throw std::invalid_argument("identity relator");
    out -= Rational(1, boost::multiprecision::pow(boost::multiprecision::cpp_int(p), p_parts(r, p).e));
  }
  return out;
}

PtpReport ptp_bound(int generators, int p, const std::vector<int>& exponents) {
  check_prime(p);
  PtpReport r;
  for (int n : exponents) {
    if (n < 0) throw std::invalid_argument("exponents must be >= 0");
    r.sum += Rational(1, boost::multiprecision::pow(boost::multiprecision::cpp_int(p), n));
  }
  r.bound = generators - 1 - r.sum;
  r.three_generators_half = generators == 3 && r.sum <= Rational(1, 2);
  if (r.three_generators_half) {
    r.conclusions.push_back("bases ranging over the whole free group: torsion quotient, Tarski number 6");
    r.conclusions.push_back(
        "bases ranging over the derived subgroup: torsion-by-abelian, x1 of infinite order, Tarski number 5");
  }
  return r;
}

Presentation burnside_like_presentation(int d, int p, int N, EnumerationMode mode) {
  if (d < 2) throw std::invalid_argument("need d >= 2");
  if (N < 1) throw std::invalid_argument("need N >= 1");
  check_prime(p);
  Presentation out;
  out.alphabet = Alphabet::numbered(d);
  out.p = p;
  std::vector<Letter> buf;
  // depth-first over letter indices in shortlex order, one length at a time
  std::function<void(std::size_t)> rec = [&](std::size_t length) {
    if (static_cast<int>(out.relators.size()) >= N) return;
    if (buf.size() == length) {
      Word w = Word::reduce(buf);
      if (mode == EnumerationMode::Derived && !abelian_image(w, d).is_zero()) return;
      int i = static_cast<int>(out.relators.size()) + 1;
      out.relators.push_back({w, i + 1});
      return;
    }
    for (int li = 0; li < 2 * d; ++li) {
      Letter l = letter_from_index(li);
      if (!buf.empty() && buf.back() == -l) continue;
      buf.push_back(l);
      rec(length);
      buf.pop_back();
    }
  };
  for (std::size_t length = 1; static_cast<int>(out.relators.size()) < N; ++length) rec(length);
  return out;
}

}  // namespace tarski
