#include <doctest.h>

#include <cmath>
#include <random>

#include "tarski/groups.hpp"
#include "tarski/gs.hpp"
#include "test_support.hpp"

using namespace tarski;

namespace {

const Word x{1}, y{2};

// Expansion as a product of full letter series, multiplied with the general series product.
TruncSeries expand_by_products(const Word& w, int p, int D) {
  auto s = TruncSeries::one(p, D);
  for (Letter l : w.letters()) s = s * TruncSeries::letter(l, p, D);
  return s;
}

long binomial_mod(int n, int k, int p) {
  long c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c % p;
}

}  // namespace

TEST_CASE("magnus expansion basics") {
  auto s = magnus_expand(x, 5, 4);
  CHECK(s.terms().size() == 2);
  CHECK(s.coefficient("") == 1);
  CHECK(s.coefficient(std::string(1, 0)) == 1);
  auto inv = magnus_expand(x.inverse(), 5, 3);
  CHECK(inv.coefficient(std::string(1, 0)) == 4);
  CHECK(inv.coefficient(std::string(2, 0)) == 1);
  CHECK(inv.coefficient(std::string(3, 0)) == 4);
  CHECK(inv.terms().size() == 4);
  for (int D = 1; D <= 6; ++D) CHECK(TruncSeries::letter(1, 3, D) * TruncSeries::letter(-1, 3, D) == TruncSeries::one(3, D));
  // [x, y] = 1 + XY - YX + higher terms
  auto c = magnus_expand(commutator(x, y), 7, 2);
  CHECK(c.coefficient(std::string{0, 1}) == 1);
  CHECK(c.coefficient(std::string{1, 0}) == 6);
  CHECK(c.coefficient(std::string(1, 0)) == 0);
  CHECK(c.terms().size() == 3);
  // (1 + X)^n has binomial coefficients
  for (int n = 1; n <= 9; ++n) {
    auto pw = magnus_expand(x.pow(n), 11, 12);
    for (int k = 0; k <= n; ++k) CHECK(pw.coefficient(std::string(k, 0)) == binomial_mod(n, k, 11));
  }
  CHECK(magnus_expand(x, 2, 3).to_string(Alphabet::numbered(1)) == "1 + X_x1");
  CHECK_THROWS_AS(TruncSeries(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(TruncSeries(2, 0), std::invalid_argument);
}

TEST_CASE("magnus expansion is multiplicative") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = testing::random_word(rng, 2, 5), v = testing::random_word(rng, 2, 5);
    int p = trial % 2 ? 2 : 3, D = 5;
    CHECK(magnus_expand(u * v, p, D) == magnus_expand(u, p, D) * magnus_expand(v, p, D));
    CHECK(magnus_expand(u, p, D) == expand_by_products(u, p, D));
  }
}

TEST_CASE("zassenhaus degrees") {
  CHECK(zassenhaus_deg(x, 2, 6).value == 1);
  CHECK(zassenhaus_deg(commutator(x, y), 2, 6).value == 2);
  Word xyy = commutator(commutator(x, y), y);
  CHECK(zassenhaus_deg(xyy, 2, 6).value == 3);
  CHECK(zassenhaus_deg(xyy, 67, 68).value == 3);
  for (int p : {2, 3, 5}) CHECK(zassenhaus_deg(x.pow(p), p, default_truncation(p)) == Degree::finite(p));
  CHECK(zassenhaus_deg(x.pow(67), 67, 68).value == 67);
  CHECK(zassenhaus_deg(x.pow(6), 2, 8).value == 2);
  CHECK(zassenhaus_deg(Word{}, 2, 4).kind == Degree::Infinite);
  auto high = zassenhaus_deg(x.pow(8), 2, 4);
  CHECK(high.kind == Degree::AtLeast);
  CHECK(high.value == 5);
  CHECK(default_truncation(2) == 8);
  CHECK(default_truncation(67) == 68);

  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = testing::random_word(rng, 2, 6);
    auto d = zassenhaus_deg(w, 2, 6);
    auto e = zassenhaus_deg(w, 2, 8);
    if (d.kind == Degree::Finite) CHECK(e == d);
  }
}

TEST_CASE("weight properties on random pairs") {
  std::mt19937_64 rng(73);
  const int p = 2, D = 10;
  int violations = 0;
  auto below = [](const Degree& lhs, long bound) { return lhs.kind == Degree::Finite && lhs.value < bound; };
  for (int trial = 0; trial < 500; ++trial) {
    Word g = testing::random_word(rng, 2, 6), h = testing::random_word(rng, 2, 6);
    auto dg = zassenhaus_deg(g, p, D), dh = zassenhaus_deg(h, p, D);
    violations += below(zassenhaus_deg(g * h, p, D), std::min(dg.lower(), dh.lower()));
    auto di = zassenhaus_deg(g.inverse(), p, D);
    violations += (di.kind != dg.kind) || (di.value != dg.value);
    violations += below(zassenhaus_deg(commutator(g, h), p, D), dg.lower() + dh.lower());
    violations += below(zassenhaus_deg(g.pow(p), p, D), p * dg.lower());
  }
  CHECK(violations == 0);
}

TEST_CASE("golod-shafarevich values") {
  auto R = gs_example_relators(9, 67);
  CHECK(R.size() == 81);
  auto r = gs_check(9, R, 67, parse_rational("0.13"), 68);
  REQUIRE(r.exact);
  double expected = 9 * 0.13 - 9 * std::pow(0.13, 67) - 72 * std::pow(0.13, 3) - 1;
  CHECK(std::abs(r.value - expected) < 1e-12);
  CHECK(std::abs(r.value - 0.011816) < 1e-6);
  CHECK(r.holds);
  auto opt = gs_optimize(9, r.degrees, 68);
  CHECK(opt.value > 0);
  CHECK(opt.value >= r.value - 1e-12);

  auto none = gs_check(1, std::vector<Word>{}, 2, parse_rational("1/2"), 8);
  CHECK(*none.exact == Rational(-1, 2));
  CHECK_FALSE(none.holds);
  CHECK(gs_optimize(1, {}, 8).value < 0);
  auto killed = gs_check(2, std::vector<Word>{x, y}, 2, parse_rational("0.3"), 8);
  CHECK(*killed.exact == -1);

  // an unresolved relator turns the value into an interval
  auto trunc = gs_check(2, std::vector<Word>{x.pow(8)}, 2, parse_rational("0.6"), 4);
  CHECK_FALSE(trunc.exact);
  CHECK(trunc.error_bound == doctest::Approx(std::pow(0.6, 5)));
  CHECK(trunc.lower < trunc.upper);
  CHECK(trunc.holds);

  CHECK_THROWS_AS(gs_check(2, std::vector<Word>{}, 2, Rational(1), 8), std::invalid_argument);
  CHECK(parse_rational("13/100") == Rational(13, 100));
  CHECK(parse_rational("2") == 2);
  CHECK(parse_rational("0.013") == Rational(13, 1000));
  CHECK(parse_rational("010/08") == Rational(5, 4));
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("primitive roots") {
  Word ab{1, 2};
  auto r = primitive_root(ab.pow(2));
  CHECK(r.u == ab);
  CHECK(r.m == 2);
  CHECK(primitive_root(x).m == 1);
  Word conj = y * x.pow(4) * y.inverse();
  auto c = primitive_root(conj);
  CHECK(c.u == y * x * y.inverse());
  CHECK(c.m == 4);
  CHECK_THROWS_AS(primitive_root(Word{}), std::invalid_argument);

  std::mt19937_64 rng(74);
  for (int trial = 0; trial < 300; ++trial) {
    Word u = testing::random_word(rng, 2, 4);
    if (u.is_identity()) continue;
    int m = 1 + static_cast<int>(rng() % 6);
    auto root = primitive_root(u.pow(m));
    CHECK(root.u.pow(root.m) == u.pow(m));
    CHECK(root.m % m == 0);
    CHECK(primitive_root(root.u).m == 1);
  }
}

TEST_CASE("p-parts and p-deficiency") {
  Word ab{1, 2};
  auto two = p_parts(ab.pow(12), 2);
  CHECK(two.s == ab.pow(3));
  CHECK(two.e == 2);
  auto three = p_parts(ab.pow(12), 3);
  CHECK(three.s == ab.pow(4));
  CHECK(three.e == 1);
  CHECK(p_parts(ab, 2).e == 0);

  std::mt19937_64 rng(75);
  for (int trial = 0; trial < 500; ++trial) {
    Word u = testing::random_word(rng, 2, 4);
    if (u.is_identity()) continue;
    int m = 1 + static_cast<int>(rng() % 32);
    int p = trial % 3 == 0 ? 3 : 2;
    Word w = u.pow(m);
    auto d = p_parts(w, p);
    long long pe = 1;
    for (int i = 0; i < d.e; ++i) pe *= p;
    CHECK(d.s.pow(pe) == w);
    CHECK(primitive_root(d.s).m % p != 0);
  }

  CHECK(p_deficiency(2, {x.pow(4), y.pow(4), commutator(x, y).pow(2)}, 2) == 0);
  CHECK(p_deficiency(2, {}, 2) == 1);
  CHECK(p_deficiency(2, {x.pow(5)}, 5) == Rational(4, 5));
  CHECK(p_deficiency(2, {x.pow(3), y}, 3) > p_deficiency(2, {x.pow(3), y, y.pow(3)}, 3));
  CHECK_THROWS_AS(p_deficiency(2, {Word{}}, 2), std::invalid_argument);
}

TEST_CASE("betti bound and presentations") {
  std::vector<int> n;
  for (int i = 1; i <= 20; ++i) n.push_back(i + 1);
  auto r = ptp_bound(3, 2, n);
  CHECK(r.bound == Rational(3, 2) + Rational(1, 1 << 21));
  CHECK(r.three_generators_half);
  CHECK(r.conclusions.size() == 2);
  CHECK(ptp_bound(3, 2, {}).bound == 2);
  auto half = ptp_bound(3, 2, {1});
  CHECK(half.bound == Rational(3, 2));
  CHECK(half.three_generators_half);
  CHECK_FALSE(ptp_bound(4, 2, {1}).three_generators_half);

  auto full = burnside_like_presentation(3, 2, 2, EnumerationMode::Full);
  REQUIRE(full.relators.size() == 2);
  CHECK(full.relators[0].base == x);
  CHECK(full.relators[0].n == 2);
  CHECK(full.relators[1].base == x.inverse());
  CHECK(full.relators[1].n == 3);

  auto derived = burnside_like_presentation(2, 3, 5, EnumerationMode::Derived);
  CHECK(derived.relators[0].base == Word{1, 2, -1, -2});
  std::vector<Word> bases;
  for (const auto& rel : derived.relators) {
    CHECK(abelian_image(rel.base, 2).is_zero());
    bases.push_back(rel.base);
  }
  CHECK(std::is_sorted(bases.begin(), bases.end()));
  for (int N : {1, 5, 12}) {
    auto pres = burnside_like_presentation(3, 2, N, EnumerationMode::Full);
    std::vector<int> ex;
    for (const auto& rel : pres.relators) ex.push_back(rel.n);
    CHECK(ptp_bound(3, 2, ex).bound >= Rational(3, 2));
  }
}
