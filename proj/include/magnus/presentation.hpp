// One-relator presentations <X | r>.

#ifndef MAGNUS_PRESENTATION_HPP_
#define MAGNUS_PRESENTATION_HPP_

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "magnus/word.hpp"

namespace magnus {

  class PresentationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  struct OneRelatorPresentation {
    // Finite generators, kept sorted and unique.
    std::vector<Symbol> generators;
    Word                relator;
    // Declared subscripted families ("b_*"): every b_i is a generator.
    std::vector<Symbol> families;

    OneRelatorPresentation() = default;
    OneRelatorPresentation(std::vector<Symbol> gens,
                           Word                rel,
                           std::vector<Symbol> fams = {});

    bool is_generator(Symbol s) const;
    // Throws PresentationError naming the first letter that is not a
    // generator.
    void check_letters(Word const& w) const;

    friend bool operator==(OneRelatorPresentation const&,
                           OneRelatorPresentation const&)
        = default;
  };

  // "<a, b, c_* | a b a^-1 b^-1>"
  OneRelatorPresentation parse_presentation(std::string_view text);
  std::string            to_string(OneRelatorPresentation const& p);

  struct CheckedPresentation {
    OneRelatorPresentation presentation;
    // Original relator = conjugator * relator * conjugator^-1.
    Word conjugator;
  };

  // Freely and cyclically reduces the relator, checks every relator letter
  // is a generator.  Idempotent.
  CheckedPresentation validate(OneRelatorPresentation const& p);

  struct TorsionReport {
    Word         root;
    std::int64_t power        = 1;
    bool         torsion_free = true;
  };

  TorsionReport is_torsion_free(OneRelatorPresentation const& p);

  enum class SubgroupKind { whole, magnus, contains_relator_support };

  std::string_view to_string(SubgroupKind k);

  SubgroupKind classify_subset(OneRelatorPresentation const& p,
                               std::set<Symbol> const&       subset);

  struct FreeFactorSplit {
    OneRelatorPresentation core;
    std::set<Symbol>       free_part;
  };

  // G = core * F(free_part) where core is generated by the relator letters.
  FreeFactorSplit split_free_factors(OneRelatorPresentation const& p);

  // Comma-separated generator list as used by --subgroup.
  std::set<Symbol> parse_symbol_set(std::string_view text);

}  // namespace magnus

#endif  // MAGNUS_PRESENTATION_HPP_
