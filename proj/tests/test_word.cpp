#include "printing.hpp"

#include <random>

#include "magnus/word.hpp"
#include "oracles.hpp"

using namespace magnus;

namespace {

  Word W(char const* s) {
    return parse_word(s);
  }
  Symbol S(char const* s) {
    return parse_symbol(s);
  }

  std::vector<Symbol> const& sample_gens() {
    static std::vector<Symbol> const g{S("a"), S("b"), S("c"), S("b_1"),
                                       S("b_0")};
    return g;
  }

}  // namespace

TEST_SUITE("word text") {
  TEST_CASE("tokens, exponents, subscripts and the identity") {
    CHECK(W("a^3").size() == 3);
    CHECK(W("a^-2") == Word{{S("a"), -1}, {S("a"), -1}});
    CHECK(W("b_1 b_0^-1") == Word{{S("b_1"), 1}, {S("b_0"), -1}});
    CHECK(W("b_{-2}").front().symbol.subscript() == -2);
    CHECK(W("y_0_3").front().symbol.indices()
          == std::vector<std::int64_t>{0, 3});
    CHECK(W("1").empty());
    CHECK(W("").empty());
    CHECK(W("(a b)^2") == W("a b a b"));
    CHECK(W("(a b)^-1") == W("b^-1 a^-1"));
  }

  TEST_CASE("printing compresses runs and round-trips") {
    CHECK(to_string(W("a a a b^-1 b^-1")) == "a^3 b^-2");
    CHECK(to_string(W("a^-1")) == "a^-1");
    CHECK(to_string(Word()) == "1");
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
      auto w = oracle::random_word(rng, sample_gens(), 12);
      CHECK(parse_word(to_string(w)) == w);
    }
  }

  TEST_CASE("parse errors carry positions") {
    try {
      (void)W("a (b");
      FAIL("expected a parse error");
    } catch (ParseError const& e) {
      CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS((void)W("a^"), ParseError);
    CHECK_THROWS_AS((void)W("a _1"), ParseError);
    CHECK_THROWS_AS((void)W("2"), ParseError);
    CHECK_THROWS_AS((void)W("a $"), ParseError);
  }

  TEST_CASE("symbol ordering is by name, indices numeric") {
    CHECK(S("a") < S("b"));
    CHECK(S("b_2") < S("b_10"));
    CHECK(S("b_-1") < S("b_0"));
    CHECK(S("b") < S("b_0"));
    CHECK(S("b_3").family() == S("b"));
    CHECK(S("b").subscripted(4) == S("b_4"));
    CHECK(S("b_4").shifted(-5) == S("b_-1"));
    CHECK_THROWS_AS((void)S("b").shifted(1), std::invalid_argument);
  }
}

TEST_SUITE("free reduction") {
  TEST_CASE("examples") {
    CHECK(free_reduce(W("a a^-1")).empty());
    CHECK(free_reduce(W("a b b^-1 a")) == W("a a"));
    CHECK(free_reduce(W("b_1 b_0^-1 b_0 b_1^-1")).empty());
  }

  TEST_CASE("agrees with naive rescanning, idempotent, no inverse pairs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10000; ++i) {
      auto w = oracle::random_word(rng, {S("a"), S("b")}, 14);
      auto r = free_reduce(w);
      CHECK(r == oracle::naive_reduce(w));
      CHECK(free_reduce(r) == r);
      CHECK(is_reduced(r));
    }
  }
}

TEST_SUITE("cyclic reduction") {
  TEST_CASE("examples") {
    auto d = cyclic_reduce(W("a b a^-1"));
    CHECK(d.conjugator == W("a"));
    CHECK(d.core == W("b"));
    d = cyclic_reduce(W("a b"));
    CHECK(d.conjugator.empty());
    CHECK(d.core == W("a b"));
    d = cyclic_reduce(W("x y x^-1 y^-1"));
    CHECK(d.conjugator.empty());
    CHECK(d.core == W("x y x^-1 y^-1"));
  }

  TEST_CASE("w = u core u^-1 with core cyclically reduced") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 3000; ++i) {
      auto w = free_reduce(oracle::random_word(rng, {S("a"), S("b")}, 12));
      auto [u, core] = cyclic_reduce(w);
      CHECK(is_cyclically_reduced(core));
      CHECK(u * core * u.inverse() == w);  // literal: u maximal
    }
  }
}

TEST_SUITE("exponent sums") {
  TEST_CASE("examples") {
    CHECK(exponent_sum(W("a b a b^-1"), S("a")) == 2);
    CHECK(exponent_sum(W("a b a b^-1"), S("b")) == 0);
    CHECK(exponent_sum(W("t^2 b^-3"), S("t")) == 2);
    CHECK(exponent_sum(W("b_0 b_1 b_1 c"), std::string_view("b")) == 3);
    CHECK(exponent_sum(W("b_0 b_1 b_1 c"), S("b_1")) == 2);
    CHECK(occurrences(W("a b a^-1"), S("a")) == 2);
  }
}

TEST_SUITE("primitive roots") {
  TEST_CASE("examples") {
    auto r = primitive_root(W("a b a b"));
    CHECK(r.root == W("a b"));
    CHECK(r.power == 2);
    r = primitive_root(W("a b a^-1 b^-2"));
    CHECK(r.root == W("a b a^-1 b^-2"));
    CHECK(r.power == 1);
    r = primitive_root(W("a^6"));
    CHECK(r.root == W("a"));
    CHECK(r.power == 6);
    CHECK_THROWS((void)primitive_root(Word()));
  }

  TEST_CASE("matches the divisor-by-divisor oracle on random powers") {
    std::mt19937_64                         rng(13);
    std::uniform_int_distribution<int>      pw(1, 4);
    for (int i = 0; i < 2000; ++i) {
      auto u = oracle::random_word(rng, {S("a"), S("b")}, 5);
      if (u.empty()) continue;
      auto w        = u.power(pw(rng));
      auto [ro, n]  = oracle::brute_primitive_root(w);
      auto got      = primitive_root(w);
      CHECK(got.root == ro);
      CHECK(got.power == n);
      CHECK(got.root.power(got.power) == w);
      CHECK(primitive_root(got.root).power == 1);
    }
  }
}

TEST_SUITE("substitution") {
  TEST_CASE("examples") {
    Substitution psi{{S("t"), W("y x^3")}, {S("b"), W("x^2")}};
    CHECK(substitute(W("t^2 b^-3"), psi) == W("y x^3 y x^-3"));
    CHECK(substitute(W("a"), Substitution{}) == W("a"));
    CHECK(substitute(W("t^-1"), Substitution{{S("t"), W("y x^-1")}})
          == W("x y^-1"));
  }

  TEST_CASE("homomorphism: concatenation and inversion") {
    std::mt19937_64 rng(14);
    Substitution    s{{S("a"), W("b a^2")}, {S("b"), W("c^-1 a")}};
    for (int i = 0; i < 2000; ++i) {
      auto u = oracle::random_word(rng, {S("a"), S("b"), S("c")}, 8);
      auto v = oracle::random_word(rng, {S("a"), S("b"), S("c")}, 8);
      CHECK(substitute(u * v, s) == free_reduce(substitute(u, s) * substitute(v, s)));
      CHECK(substitute(u.inverse(), s) == substitute(u, s).inverse());
      CHECK(is_reduced(substitute(u, s)));
    }
  }
}

TEST_SUITE("subscript shifts") {
  TEST_CASE("examples") {
    std::set<Symbol> b{S("b")};
    CHECK(shift_subscripts(W("b_1"), b, -1) == W("b_0"));
    CHECK(shift_subscripts(W("b_0^-1 b_3"), b, 0) == W("b_0^-1 b_3"));
    CHECK(shift_subscripts(W("b_0^-1 b_3"), b, 2) == W("b_2^-1 b_5"));
    CHECK(shift_subscripts(W("b_0 c_4 a"), b, 1) == W("b_1 c_4 a"));
    CHECK_THROWS_AS((void)shift_subscripts(W("b"), b, 1), std::invalid_argument);
  }

  TEST_CASE("shifts compose additively") {
    std::mt19937_64                    rng(15);
    std::uniform_int_distribution<int> d(-4, 4);
    std::set<Symbol>                   b{S("b")};
    std::vector<Symbol>                gens{S("b_0"), S("b_1"), S("b_-2"), S("c_5")};
    for (int i = 0; i < 1000; ++i) {
      auto w  = oracle::random_word(rng, gens, 8);
      int  d1 = d(rng), d2 = d(rng);
      CHECK(shift_subscripts(shift_subscripts(w, b, d2), b, d1)
            == shift_subscripts(w, b, d1 + d2));
    }
  }
}

TEST_SUITE("balanced rewriting") {
  TEST_CASE("examples") {
    auto r = rewrite_balanced(W("a b a^-1 b^-1"), S("a"));
    CHECK(r.word == W("b_1 b_0^-1"));
    CHECK(r.residual == 0);
    CHECK(rewrite_balanced(W("a b a b^-1"), S("b")).word == W("a_0 a_1"));
    CHECK(rewrite_balanced(W("a b a^-1 b^-2"), S("a")).word == W("b_1 b_0^-2"));
    CHECK(rewrite_balanced(W("t b t"), S("t")).residual == 2);
  }

  TEST_CASE("re-expansion times t^residual recovers the reduced input") {
    std::mt19937_64 rng(16);
    for (int i = 0; i < 10000; ++i) {
      auto w = oracle::random_word(rng, {S("a"), S("b"), S("c")}, 12);
      auto r = rewrite_balanced(w, S("a"));
      CHECK(is_reduced(r.word));
      CHECK(free_reduce(expand_balanced(r.word, S("a"))
                        * Word::power_of(S("a"), r.residual))
            == free_reduce(w));
    }
  }
}
