#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tarski/word.hpp"

namespace tarski {

using Rational = boost::multiprecision::cpp_rational;

/// Element of F_p<<X_1..X_d>> truncated above degree D. A monomial is the string of its
/// variable indices (0-based, one byte each).
class TruncSeries {
 public:
  using Monomial = std::string;

  TruncSeries(int p, int D);
  static TruncSeries one(int p, int D);
  /// Image of a signed letter: 1 + X_i, or 1 - X_i + X_i^2 - ... for the inverse.
  static TruncSeries letter(Letter l, int p, int D);

  int p() const { return p_; }
  int truncation() const { return D_; }
  const std::map<Monomial, int>& terms() const { return terms_; }
  int coefficient(const Monomial& m) const;
  void add(const Monomial& m, long c);

  TruncSeries operator*(const TruncSeries& o) const;
  /// this * letter(l), computed in O(terms * D).
  TruncSeries times_letter(Letter l) const;
  bool operator==(const TruncSeries& o) const = default;

  /// Least length of a non-constant monomial with nonzero coefficient, or nullopt.
  std::optional<int> lowest_nonconstant_degree() const;
  /// Least degree of a term of (this - 1).
  std::optional<int> lowest_degree_of_difference_from_one() const;

  std::string to_string(const Alphabet& alphabet) const;

 private:
  int p_, D_;
  std::map<Monomial, int> terms_;
};

TruncSeries magnus_expand(const Word& w, int p, int D);

/// Zassenhaus degree: exact when at most D, otherwise a lower bound D+1; infinite for 1.
struct Degree {
  enum Kind { Finite, AtLeast, Infinite } kind = Finite;
  int value = 0;  // the degree, or the lower bound for AtLeast

  static Degree finite(int n) { return {Finite, n}; }
  bool resolved() const { return kind != AtLeast; }
  bool operator==(const Degree&) const = default;
  /// Lower bound usable in comparisons; infinity as a large sentinel.
  long lower() const { return kind == Infinite ? (1L << 40) : value; }
  std::string to_string() const;
};

int default_truncation(int p);
Degree zassenhaus_deg(const Word& w, int p, int D);

struct GsReport {
  double value = 0;  // midpoint estimate
  double lower = 0, upper = 0;
  double error_bound = 0;  // sum of tau^{D+1} over unresolved relators
  std::optional<Rational> exact;
  bool holds = false;         // lower > 0
  bool undetermined = false;  // lower <= 0 < upper
  int D = 0;
  std::vector<Degree> degrees;
};

/// |X| tau - sum tau^deg(r) - 1.
GsReport gs_check(int generators, const std::vector<Word>& relators, int p, const Rational& tau, int D);
GsReport gs_check(int generators, const std::vector<Degree>& degrees, const Rational& tau, int D);
/// Parses decimals ("0.13") and fractions ("13/100") into an exact rational.
Rational parse_rational(const std::string& text);

struct GsOptimum {
  double tau = 0;
  double value = 0;  // lower bound of the GS value at tau
};
GsOptimum gs_optimize(int generators, const std::vector<Degree>& degrees, int D, int grid = 200);

/// The presentation with generators x_1..x_d, relators x_i^p and [x_i, x_j, x_j] for i != j.
std::vector<Word> gs_example_relators(int d, int p);

struct PrimitiveRoot {
  Word u;
  long long m = 1;
};
/// w = u^m with m maximal. Throws on the identity.
PrimitiveRoot primitive_root(const Word& w);

struct RootDecomposition {
  Word s;
  int e = 0;
};
/// w = s^{p^e} with s not a p-th power. Throws on the identity.
RootDecomposition p_parts(const Word& w, int p);

/// |X| - 1 - sum 1/p^{e(r)}. Throws on an identity relator.
Rational p_deficiency(int generators, const std::vector<Word>& relators, int p);

struct PtpReport {
  Rational sum;    // sum 1/p^{n_i}
  Rational bound;  // |X| - 1 - sum
  bool three_generators_half = false;  // |X| = 3 and sum <= 1/2
  std::vector<std::string> conclusions;
};
PtpReport ptp_bound(int generators, int p, const std::vector<int>& exponents);

struct PowerRelator {
  Word base;
  int n = 0;  // the relator is base^{p^n}
};

struct Presentation {
  Alphabet alphabet;
  int p = 2;
  std::vector<PowerRelator> relators;
};

enum class EnumerationMode { Full, Derived };
/// First N nontrivial reduced words of F(x_1..x_d) in shortlex order (all, or those with zero
/// abelianization), the i-th raised to p^{i+1}.
Presentation burnside_like_presentation(int d, int p, int N, EnumerationMode mode);

}  // namespace tarski
