// Free products of groups with solvable word problems, their alternating
// normal forms, and the classification of elements with a power in a factor.

#ifndef MAGNUS_FREE_PRODUCT_HPP_
#define MAGNUS_FREE_PRODUCT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "magnus/budget.hpp"
#include "magnus/presentation.hpp"
#include "magnus/word.hpp"

namespace magnus {

  class Factor {
   public:
    enum class Kind { free, cyclic, one_relator };

    // Empty relator: free.  Relator a^n on one letter: cyclic of order |n|.
    // Anything else: one-relator factor decided by the Magnus engine.
    explicit Factor(OneRelatorPresentation p);

    static Factor free(std::vector<Symbol> generators);
    static Factor cyclic(Symbol generator, std::int64_t order);

    Kind                          kind() const noexcept { return _kind; }
    OneRelatorPresentation const& presentation() const noexcept {
      return _p;
    }
    bool contains(Symbol s) const { return _p.is_generator(s); }

    bool is_trivial(Word const& w, Budget const& budget) const;
    // Unique representative for free and cyclic factors (a^k, 0 < k < n);
    // the freely reduced word otherwise.
    Word canonical(Word const& w) const;
    // Torsion elements are exactly those with g^n = 1 for this n (the power
    // of the relator's primitive root); 1 when the factor is torsion-free.
    std::int64_t torsion_exponent() const noexcept { return _torsion; }
    bool         is_torsion(Word const& w, Budget const& budget) const;

   private:
    OneRelatorPresentation _p;
    Kind                   _kind;
    std::int64_t           _torsion = 1;
  };

  class FreeProduct {
   public:
    // Throws std::invalid_argument when two factors share a generator.
    explicit FreeProduct(std::vector<Factor> factors);

    std::vector<Factor> const& factors() const noexcept { return _factors; }
    Factor const& factor(std::size_t i) const { return _factors.at(i); }
    // Throws PresentationError for letters of no factor.
    std::size_t factor_of(Symbol s) const;

   private:
    std::vector<Factor> _factors;
  };

  struct Syllable {
    std::size_t factor = 0;
    Word        element;
    friend bool operator==(Syllable const&, Syllable const&) = default;
  };

  // Nontrivial syllables, adjacent ones from distinct factors.
  using AlternatingWord = std::vector<Syllable>;

  AlternatingWord fp_normal_form(FreeProduct const&           fp,
                                 std::vector<Syllable> const& parts,
                                 Budget const&                budget = {});
  // Splits w into maximal single-factor runs first.
  AlternatingWord fp_normal_form(FreeProduct const& fp,
                                 Word const&        w,
                                 Budget const&      budget = {});

  Word            to_word(AlternatingWord const& w);
  AlternatingWord inverse(AlternatingWord const& w);
  AlternatingWord fp_power(FreeProduct const&     fp,
                           AlternatingWord const& g,
                           std::int64_t           n,
                           Budget const&          budget = {});
  std::string     to_string(AlternatingWord const& w);

  struct InFactor {
    Word rewrite;
  };
  // g = conjugator * torsion * conjugator^-1 with torsion a torsion element
  // of a single factor.
  struct ConjugateTorsion {
    AlternatingWord conjugator;
    Syllable        torsion;
  };
  struct Contradiction {
    std::string reason;
  };
  using PowerClassification
      = std::variant<InFactor, ConjugateTorsion, Contradiction>;

  class PowerPrecondition : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // For g with g^n in factor `target`: g lies in the target factor, or g is
  // conjugate to a torsion element of some factor.  Contradiction would
  // mean neither holds.  Throws PowerPrecondition when g^n is not in the
  // target factor.
  PowerClassification power_in_factor(FreeProduct const&     fp,
                                      AlternatingWord const& g,
                                      std::int64_t           n,
                                      std::size_t            target,
                                      Budget const&          budget = {});

}  // namespace magnus

#endif  // MAGNUS_FREE_PRODUCT_HPP_
