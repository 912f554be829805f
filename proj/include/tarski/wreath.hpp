#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace tarski {

/// Element (f, t) of Base wr C_n: f is finitely supported on Z/n, identity values are not stored.
template <class Base>
struct WreathElement {
  std::map<std::uint64_t, typename Base::element_type> base;
  std::uint64_t top = 0;

  bool operator==(const WreathElement&) const = default;
};

template <class Base>
class WreathProduct {
 public:
  using element_type = WreathElement<Base>;
  using base_element = typename Base::element_type;

  WreathProduct(Base base, std::uint64_t n) : base_(std::move(base)), n_(n) {
    if (n < 1) throw std::invalid_argument("cyclic factor order must be >= 1");
  }

  std::uint64_t order() const { return n_; }
  const Base& base_group() const { return base_; }

  element_type identity() const { return {}; }

  /// The top generator z = (1, 1).
  element_type shift(std::uint64_t k = 1) const {
    element_type z;
    z.top = k % n_;
    return z;
  }

  /// delta_c(g): g at position c, identity elsewhere.
  element_type delta(const base_element& g, std::uint64_t c = 0) const {
    element_type e;
    set(e, c % n_, g);
    return e;
  }

  base_element at(const element_type& e, std::uint64_t c) const {
    auto it = e.base.find(c % n_);
    return it == e.base.end() ? base_.identity() : it->second;
  }

  /// (f1,t1)(f2,t2) = (c -> f1(c) f2(c+t1), t1+t2)
  element_type mul(const element_type& x, const element_type& y) const {
    std::set<std::uint64_t> support;
    for (const auto& [c, g] : x.base) support.insert(c);
    for (const auto& [c, g] : y.base) support.insert(sub(c, x.top));
    element_type r;
    r.top = add(x.top, y.top);
    for (std::uint64_t c : support) set(r, c, base_.mul(at(x, c), at(y, add(c, x.top))));
    return r;
  }

  element_type inv(const element_type& x) const {
    element_type r;
    r.top = sub(0, x.top);
    for (const auto& [c, g] : x.base) set(r, add(c, x.top), base_.inv(g));
    return r;
  }

  /// x^y = y^-1 x y
  element_type conjugate(const element_type& x, const element_type& y) const { return mul(mul(inv(y), x), y); }

  /// [x, y] = x^-1 y^-1 x y
  element_type commutator(const element_type& x, const element_type& y) const {
    return mul(mul(inv(x), inv(y)), mul(x, y));
  }

 private:
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    a %= n_;
    b %= n_;
    return a >= n_ - b ? a - (n_ - b) : a + b;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, n_ - b % n_); }

  void set(element_type& e, std::uint64_t c, const base_element& g) const {
    if (g == base_.identity())
      e.base.erase(c);
    else
      e.base[c] = g;
  }

  Base base_;
  std::uint64_t n_;
};

/// Checks [a^(z^-m_i), a^(z^-m_j)] = delta([x_i, x_j]) in Base wr C_n, where m_k = 2^(2^k) and
/// a(z^(m_k)) = x_k for the generators x_1..x_d of `base`. Requires n > 2^(2^(2d)).
template <class Base>
bool neumann_embed_check(const Base& base, int d, int i, int j, std::uint64_t n) {
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  if (i < 1 || i > d || j < 1 || j > d) throw std::invalid_argument("generator index outside 1..d");
  auto gens = base.generators();
  if (static_cast<int>(gens.size()) < d) throw std::invalid_argument("base group has fewer than d generators");
  // 2^(2^(2d)) fits below 2^64 only for d <= 2.
  if (2 * d >= 6) throw std::invalid_argument("bound 2^(2^(2d)) exceeds 64-bit residues for d >= 3");
  const std::uint64_t bound = std::uint64_t{1} << (std::uint64_t{1} << (2 * d));
  if (n <= bound) throw std::invalid_argument("n too small: need n > " + std::to_string(bound));

  WreathProduct<Base> w(base, n);
  auto position = [](int k) { return std::uint64_t{1} << (std::uint64_t{1} << k); };
  typename WreathProduct<Base>::element_type a;
  for (int k = 1; k <= d; ++k) a = w.mul(a, w.delta(gens[k - 1], position(k)));
  auto a_i = w.conjugate(a, w.inv(w.shift(position(i))));
  auto a_j = w.conjugate(a, w.inv(w.shift(position(j))));
  auto lhs = w.commutator(a_i, a_j);
  auto x_i = gens[i - 1];
  auto x_j = gens[j - 1];
  auto bracket = base.mul(base.mul(base.inv(x_i), base.inv(x_j)), base.mul(x_i, x_j));
  return lhs == w.delta(bracket, 0);
}

}  // namespace tarski
