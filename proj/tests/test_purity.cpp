#include "printing.hpp"

#include <set>

#include "magnus/engine.hpp"
#include "magnus/purity.hpp"
#include "oracles.hpp"

using namespace magnus;

namespace {

  Word W(char const* s) {
    return parse_word(s);
  }
  Symbol S(char const* s) {
    return parse_symbol(s);
  }

  OneRelatorPresentation const z2    = parse_presentation("<a,b | a b a^-1 b^-1>");
  OneRelatorPresentation const bs12  = parse_presentation("<a,b | a b a^-1 b^-2>");
  OneRelatorPresentation const klein = parse_presentation("<a,b | a b a b^-1>");

  SuiteOptions serial() {
    SuiteOptions o;
    o.execution = Execution::serial;
    return o;
  }

  bool bs_in_b(oracle::BS12::Element e) {
    return e.k == 0 && e.c % (std::int64_t(1) << oracle::BS12::scale_bits) == 0;
  }

}  // namespace

TEST_SUITE("purity") {
  TEST_CASE("enumeration is complete and duplicate free") {
    std::vector<Symbol> gens{S("a"), S("b")};
    for (std::size_t L = 0; L <= 6; ++L) {
      auto words = enumerate_reduced_words(gens, L);
      CHECK(words.size() == reduced_word_count(2, L));
      std::set<Word> distinct(words.begin(), words.end());
      CHECK(distinct.size() == words.size());
      for (auto const& w : words) {
        CHECK(w.size() <= L);
        CHECK(oracle::naive_reduce(w) == w);
      }
    }
    // 2k(2k-1)^(l-1) summed, computed by hand for k = 3, L = 3: 1 + 6 + 30 + 150
    CHECK(reduced_word_count(3, 3) == 187);
    CHECK(enumerate_reduced_words({S("a")}, 2)
          == std::vector<Word>{Word(), W("a"), W("a^-1"), W("a^2"), W("a^-2")});
  }

  TEST_CASE("primes") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS((void)theorem_a_suite(z2, {S("a")}, 3, 2), InvalidPrime);
    CHECK_THROWS_AS((void)theorem_a_suite(z2, {S("a")}, 9, 2), InvalidPrime);
    CHECK_THROWS_AS((void)counterexample_search(z2, {S("a")}, 4, 2), InvalidPrime);
    CHECK_NOTHROW((void)counterexample_search(z2, {S("a")}, 2, 1));
  }

  TEST_CASE("purity above the prime bound on the corpus") {
    auto z = theorem_a_suite(z2, {S("a")}, 5, 4);
    CHECK(z.violations.empty());
    CHECK(z.inconclusive.empty());
    CHECK(z.tested == reduced_word_count(2, 4));
    // Oracle: g^5 in <a> iff the b-coordinate of g is 0.
    std::size_t expect = 0;
    for (auto const& w : enumerate_reduced_words(z2.generators, 4)) {
      expect += oracle::evaluate(oracle::Z2{}, w)[1] == 0;
    }
    CHECK(z.members == expect);

    auto b = theorem_a_suite(bs12, {S("b")}, 7, 5);
    CHECK(b.violations.empty());
    CHECK(b.inconclusive.empty());

    auto k = theorem_a_suite(klein, {S("a")}, 5, 4);
    CHECK(k.violations.empty());
  }

  TEST_CASE("counterexamples below the bound") {
    auto r = counterexample_search(bs12, {S("b")}, 2, 3, serial());
    // Oracle: g^2 an integer translation and g not one.
    oracle::BS12      bs;
    std::vector<Word> expect;
    for (auto const& w : enumerate_reduced_words(bs12.generators, 3)) {
      auto g = oracle::evaluate(bs, w);
      if (bs_in_b(bs.multiply(g, g)) && !bs_in_b(g)) expect.push_back(w);
    }
    CHECK(r.counterexamples == expect);
    CHECK(std::find(expect.begin(), expect.end(), W("a^-1 b a")) != expect.end());

    CHECK(counterexample_search(z2, {S("a")}, 2, 4).counterexamples.empty());
    auto free2 = parse_presentation("<a,b | >");
    for (auto Y : {std::set<Symbol>{S("a")}, std::set<Symbol>{S("b")}}) {
      for (std::int64_t p : {2, 3}) {
        CHECK(counterexample_search(free2, Y, p, 6).counterexamples.empty());
      }
    }
  }

  TEST_CASE("newman witnesses") {
    auto r = newman_probe(z2, {S("a")}, 5, 2, 3);
    CHECK(r.violations.empty());
    CHECK(r.witnesses_verified == r.members);
    CHECK(r.members > 0);
    CHECK(r.exponent() == 25);
    auto one = newman_probe(z2, {S("a")}, 5, 1, 3);
    auto ta  = theorem_a_suite(z2, {S("a")}, 5, 3);
    CHECK(one.members == ta.members);
    CHECK(one.violations == ta.violations);
  }

  TEST_CASE("serial and parallel reports are identical") {
    for (auto const& [p, Y, prime] :
         {std::tuple{z2, std::set<Symbol>{S("a")}, 5},
          std::tuple{bs12, std::set<Symbol>{S("b")}, 7},
          std::tuple{klein, std::set<Symbol>{S("a")}, 5}}) {
      CHECK(theorem_a_suite(p, Y, prime, 5) == theorem_a_suite(p, Y, prime, 5, serial()));
    }
    CHECK(counterexample_search(bs12, {S("b")}, 2, 4)
          == counterexample_search(bs12, {S("b")}, 2, 4, serial()));
    CHECK(alpha_subgroup_suite(S("x"), S("y"), 2, 3, 6)
          == alpha_subgroup_suite(S("x"), S("y"), 2, 3, 6, Execution::serial));
  }

  TEST_CASE("sampling is seeded") {
    SuiteOptions o;
    o.sample = 50;
    o.seed   = 7;
    auto r1  = theorem_a_suite(bs12, {S("b")}, 7, 6, o);
    auto r2  = theorem_a_suite(bs12, {S("b")}, 7, 6, o);
    CHECK(r1.tested == 50);
    CHECK(r1 == r2);
  }

  TEST_CASE("budget exhaustion is inconclusive, not a violation") {
    SuiteOptions o;
    o.budget.max_steps = 2;
    auto r = theorem_a_suite(bs12, {S("b")}, 7, 3, o);
    CHECK(r.violations.empty());
    CHECK_FALSE(r.inconclusive.empty());
    CHECK(r.tested == reduced_word_count(2, 3));
  }

  TEST_CASE("alpha subgroups of a free group") {
    auto r = alpha_subgroup_suite(S("x"), S("y"), 2, 3, 6);
    CHECK(r.counterexamples.empty());
    CHECK(r.tested == reduced_word_count(2, 6));
    auto sharp = alpha_subgroup_suite(S("x"), S("y"), 2, 2, 3);
    CHECK(std::find(sharp.counterexamples.begin(), sharp.counterexamples.end(), W("x"))
          != sharp.counterexamples.end());
    // Oracle: w^2 in <y, x^2> with w not in it, by literal x-run parity.
    auto in_A = [](Word const& w) {
      for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (w[i].symbol == S("x") && (j - i) % 2 != 0) return false;
        i = j;
      }
      return true;
    };
    std::vector<Word> expect;
    for (auto const& w : enumerate_reduced_words({S("x"), S("y")}, 3)) {
      if (in_A(free_reduce(w * w)) && !in_A(w)) expect.push_back(w);
    }
    CHECK(sharp.counterexamples == expect);
  }
}
