// Independent models used to check the engine.  None of this code calls the
// Magnus machinery.

#ifndef MAGNUS_TESTS_ORACLES_HPP_
#define MAGNUS_TESTS_ORACLES_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "magnus/word.hpp"

namespace oracle {

  using magnus::Letter;
  using magnus::Symbol;
  using magnus::Word;

  // Evaluates w in a model M providing identity(), generator(name, sign)
  // and multiply(x, y) for the product x*y.
  template <class M>
  auto evaluate(M const& model, Word const& w) {
    auto acc = model.identity();
    for (auto const& l : w) {
      acc = model.multiply(acc, model.generator(l.symbol.name(), l.sign));
    }
    return acc;
  }

  // Z^2 = <a, b | a b a^-1 b^-1>: exponent sums.
  struct Z2 {
    using Element = std::array<std::int64_t, 2>;
    Element identity() const { return {0, 0}; }
    Element generator(std::string const& n, int s) const {
      if (n == "a") return {s, 0};
      if (n == "b") return {0, s};
      throw std::invalid_argument("Z2: " + n);
    }
    Element multiply(Element x, Element y) const {
      return {x[0] + y[0], x[1] + y[1]};
    }
  };

  // Klein bottle group <a, b | a b a b^-1> acting on the plane by
  // (x, y) -> (s x + m, y + n); a translates x, b is a glide reflection.
  // The action is free with fundamental domain a Klein bottle, so the
  // representation is faithful.
  struct Klein {
    struct Element {
      int          s = 1;
      std::int64_t m = 0, n = 0;
      bool operator==(Element const&) const = default;
    };
    Element identity() const { return {}; }
    Element generator(std::string const& name, int sign) const {
      if (name == "a") return {1, sign, 0};
      if (name == "b") return sign > 0 ? Element{-1, 0, 1} : Element{-1, 0, -1};
      throw std::invalid_argument("Klein: " + name);
    }
    // (x*y)(p) = x(y(p))
    Element multiply(Element x, Element y) const {
      return {x.s * y.s, x.s * y.m + x.m, x.n + y.n};
    }
  };

  // BS(1,2) = <a, b | a b a^-1 b^-2> as maps t -> 2^k t + c, a = (t -> 2t),
  // b = (t -> t + 1); c is dyadic and kept as c * 2^scale_bits exactly.
  struct BS12 {
    static constexpr int scale_bits = 32;
    struct Element {
      std::int64_t k = 0;
      std::int64_t c = 0;  // scaled
      bool operator==(Element const&) const = default;
    };
    Element identity() const { return {}; }
    Element generator(std::string const& n, int s) const {
      if (n == "a") return {s, 0};
      if (n == "b") return {0, s * (std::int64_t(1) << scale_bits)};
      throw std::invalid_argument("BS12: " + n);
    }
    static std::int64_t scale(std::int64_t c, std::int64_t k) {
      if (k >= 0) {
        if (k > 20) throw std::overflow_error("BS12 exponent");
        return c * (std::int64_t(1) << k);
      }
      if (-k > scale_bits || (c & ((std::int64_t(1) << -k) - 1)) != 0) {
        throw std::overflow_error("BS12 precision");
      }
      return c / (std::int64_t(1) << -k);
    }
    // x(y(t)) = 2^kx (2^ky t + cy) + cx
    Element multiply(Element x, Element y) const {
      return {x.k + y.k, scale(y.c, x.k) + x.c};
    }
    bool is_translation(Element e) const { return e.k == 0; }
  };

  // Permutations of {0, 1, 2}; (x*y)(i) = x(y(i)).
  struct S3 {
    using Element = std::array<int, 3>;
    Element identity() const { return {0, 1, 2}; }
    static Element inverse(Element p) {
      Element q{};
      for (int i = 0; i < 3; ++i) q[p[i]] = i;
      return q;
    }
    // t -> (0 1), b -> (0 1 2)
    Element generator(std::string const& n, int s) const {
      Element p;
      if (n == "t") p = {1, 0, 2};
      else if (n == "b") p = {1, 2, 0};
      else throw std::invalid_argument("S3: " + n);
      return s > 0 ? p : inverse(p);
    }
    Element multiply(Element x, Element y) const {
      return {x[y[0]], x[y[1]], x[y[2]]};
    }
  };

  // Laurent polynomials in q with integer coefficients.
  struct Laurent {
    std::map<int, std::int64_t> c;  // exponent -> nonzero coefficient

    static Laurent constant(std::int64_t v, int e = 0) {
      Laurent p;
      if (v != 0) p.c[e] = v;
      return p;
    }
    Laurent operator+(Laurent const& o) const {
      Laurent r = *this;
      for (auto [e, v] : o.c) {
        if ((r.c[e] += v) == 0) r.c.erase(e);
      }
      return r;
    }
    Laurent operator*(Laurent const& o) const {
      Laurent r;
      for (auto [e1, v1] : c) {
        for (auto [e2, v2] : o.c) {
          if ((r.c[e1 + e2] += v1 * v2) == 0) r.c.erase(e1 + e2);
        }
      }
      return r;
    }
    bool operator==(Laurent const&) const = default;
  };

  // Reduced Burau representation of the braid group B_3 (faithful), pulled
  // back to <t, b | t^2 b^-3> through t = s1 s2 s1, b = s1 s2.
  struct Trefoil {
    using Matrix = std::array<Laurent, 4>;  // row major 2x2
    using Element = Matrix;

    static Matrix mul(Matrix const& x, Matrix const& y) {
      return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
              x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
    }
    static Matrix s1(bool inv) {
      // [[-q, 1], [0, 1]], inverse [[-q^-1, q^-1], [0, 1]]
      if (!inv) return {Laurent::constant(-1, 1), Laurent::constant(1),
                        Laurent{}, Laurent::constant(1)};
      return {Laurent::constant(-1, -1), Laurent::constant(1, -1), Laurent{},
              Laurent::constant(1)};
    }
    static Matrix s2(bool inv) {
      // [[1, 0], [q, -q]], inverse [[1, 0], [1, -q^-1]]
      if (!inv) return {Laurent::constant(1), Laurent{}, Laurent::constant(1, 1),
                        Laurent::constant(-1, 1)};
      return {Laurent::constant(1), Laurent{}, Laurent::constant(1),
              Laurent::constant(-1, -1)};
    }
    Element identity() const {
      return {Laurent::constant(1), Laurent{}, Laurent{}, Laurent::constant(1)};
    }
    Element generator(std::string const& n, int s) const {
      bool inv = s < 0;
      if (n == "t") {
        return mul(mul(s1(inv), s2(inv)), s1(inv));
      }
      if (n == "b") {
        return inv ? mul(s2(true), s1(true)) : mul(s1(false), s2(false));
      }
      throw std::invalid_argument("Trefoil: " + n);
    }
    Element multiply(Element const& x, Element const& y) const {
      return mul(x, y);
    }
  };

  // Literal proper-power detection by trying every divisor of the length.
  inline std::pair<Word, std::int64_t> brute_primitive_root(Word const& w) {
    auto n = w.size();
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      Word u = w.subword(0, d);
      if (u.power(static_cast<std::int64_t>(n / d)) == w) {
        return {u, static_cast<std::int64_t>(n / d)};
      }
    }
    return {w, 1};
  }

  inline Word random_word(std::mt19937_64&           rng,
                          std::vector<Symbol> const& gens,
                          std::size_t                max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::bernoulli_distribution                sign;
    Word                                       w;
    auto                                       n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
      w.push_back({gens[pick(rng)], sign(rng) ? 1 : -1});
    }
    return w;
  }

  // Literal free reduction by repeated scanning, independent of the
  // library's stack-based version.
  inline Word naive_reduce(Word const& w) {
    std::vector<Letter> v(w.begin(), w.end());
    bool                changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i].symbol == v[i + 1].symbol && v[i].sign == -v[i + 1].sign) {
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(i),
                  v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          changed = true;
          break;
        }
      }
    }
    return Word(std::move(v));
  }

}  // namespace oracle

#endif  // MAGNUS_TESTS_ORACLES_HPP_
