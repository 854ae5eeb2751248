// Exhaustive checks of "g^p in H implies g in H" for Magnus subgroups H of
// one-relator groups, searches below the prime bound, and the matching
// statement for <(Y \ x) u {x^alpha}> in a free group.
//
// Every suite evaluates words independently.  The parallel kernels use an
// OpenMP loop over the enumerated words; the serial path runs the same
// per-word evaluation in order and is kept as the reference.  Rows are merged
// in enumeration order, so both paths give identical reports.

#ifndef MAGNUS_PURITY_HPP_
#define MAGNUS_PURITY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "magnus/budget.hpp"
#include "magnus/presentation.hpp"
#include "magnus/word.hpp"

namespace magnus {

  class InvalidPrime : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  bool is_prime(std::int64_t n);

  // All reduced words of length <= max_length over gens^{+-1}, shortlex
  // ordered (generator order, positive letter before its inverse).
  std::vector<Word> enumerate_reduced_words(std::vector<Symbol> const& gens,
                                            std::size_t max_length);
  // 1 + sum_{l=1..L} 2k(2k-1)^(l-1)
  std::uint64_t reduced_word_count(std::size_t rank, std::size_t max_length);

  enum class Execution { parallel, serial };

  struct SuiteOptions {
    Budget    budget;
    Execution execution = Execution::parallel;
    // Evaluate a seeded random sample of this many enumerated words.
    std::optional<std::size_t> sample;
    std::uint64_t              seed = 1;
  };

  enum class SuiteMode { theorem_a, counterexample_search, newman_probe };
  std::string_view to_string(SuiteMode m);

  struct PurityViolation {
    Word g;
    Word power_rewrite;  // g^q written over Y
    friend bool operator==(PurityViolation const&, PurityViolation const&)
        = default;
  };

  struct Inconclusive {
    Word        g;
    std::string reason;
    friend bool operator==(Inconclusive const&, Inconclusive const&) = default;
  };

  struct PurityReport {
    SuiteMode              mode = SuiteMode::theorem_a;
    OneRelatorPresentation presentation;
    std::set<Symbol>       subgroup;
    std::int64_t           prime  = 2;
    std::int64_t           height = 1;  // exponent q = prime^height
    std::size_t            max_length = 0;

    std::size_t tested  = 0;
    std::size_t members = 0;  // words with g^q in H
    // Newman probe: witnesses h in H with h^q = g^q, each verified.
    std::size_t                  witnesses_verified = 0;
    std::vector<PurityViolation> violations;
    std::vector<Word>            counterexamples;
    std::vector<Inconclusive>    inconclusive;

    std::int64_t exponent() const;
    friend bool  operator==(PurityReport const&, PurityReport const&)
        = default;
  };

  // Requires prime prime and prime > |r|; otherwise InvalidPrime.
  PurityReport theorem_a_suite(OneRelatorPresentation const& p,
                               std::set<Symbol> const&       subgroup,
                               std::int64_t                  prime,
                               std::size_t                   max_length,
                               SuiteOptions const&           options = {});

  // Any prime; lists g with g^p in H and g not in H.
  PurityReport counterexample_search(OneRelatorPresentation const& p,
                                     std::set<Symbol> const&       subgroup,
                                     std::int64_t                  prime,
                                     std::size_t                   max_length,
                                     SuiteOptions const& options = {});

  // For g with g^(p^n) in H: the witness h is the rewrite of g over Y, and
  // h^(p^n) g^-(p^n) = 1 is checked by the word problem.
  PurityReport newman_probe(OneRelatorPresentation const& p,
                            std::set<Symbol> const&       subgroup,
                            std::int64_t                  prime,
                            std::int64_t                  height,
                            std::size_t                   max_length,
                            SuiteOptions const&           options = {});

  struct AlphaReport {
    std::int64_t      alpha = 1;
    std::int64_t      prime = 2;
    std::size_t       max_length = 0;
    std::size_t       tested  = 0;
    std::size_t       members = 0;      // w^p in A
    std::vector<Word> counterexamples;  // w^p in A, w not in A
    friend bool operator==(AlphaReport const&, AlphaReport const&) = default;
  };

  // A = <(Y \ {x}) u {x^alpha}> in F(Y), Y = {x, other}.
  AlphaReport alpha_subgroup_suite(Symbol       x,
                                   Symbol       other,
                                   std::int64_t alpha,
                                   std::int64_t prime,
                                   std::size_t  max_length,
                                   Execution    execution = Execution::parallel);

}  // namespace magnus

#endif  // MAGNUS_PURITY_HPP_
