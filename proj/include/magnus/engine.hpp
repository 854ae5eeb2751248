// The Magnus method for one-relator groups.
//
// A one-relator group G = <X | r> in which some generator t has exponent
// sum zero in r is an HNN extension J*_Theta of a one-relator group J whose
// relator s is strictly shorter than r: every other generator a is replaced
// by the family a_i = t^i a t^-i, Theta lowers subscripts by one, and the
// associated subgroups K, L are Magnus subgroups of J.  When no generator is
// balanced, G embeds into a group C with a balanced generator via
//   t -> y x^-beta,  b -> x^alpha,   alpha = sigma_t(r), beta = sigma_b(r).
//
// The word problem and membership in subgroups generated by subsets of X are
// decided by recursing through this decomposition.  Every query carries a
// Budget; exhausting it throws BudgetExceeded, which is never reported as a
// negative answer.

#ifndef MAGNUS_ENGINE_HPP_
#define MAGNUS_ENGINE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "magnus/budget.hpp"
#include "magnus/presentation.hpp"
#include "magnus/word.hpp"

namespace magnus {

  struct EngineOptions {
    // Recognise relators using some generator exactly once as free groups
    // (Tietze elimination) instead of recursing.
    bool tietze_shortcut = true;
  };

  ////////////////////////////////////////////////////////////////////////
  // HNN structure
  ////////////////////////////////////////////////////////////////////////

  struct HnnPresentation {
    // J, generated by b_mu .. b_M, the letters of s, and every a_i for the
    // families below.
    OneRelatorPresentation base;
    Symbol                 stable;
    Symbol                 distinguished;  // b
    std::int64_t           mu = 0;
    std::int64_t           M  = 0;
    // Generators a != t, b; all of their a_i lie in J, K and L.
    std::vector<Symbol> families;

    Word const& relator() const noexcept {
      return base.relator;
    }

    bool is_K_generator(Symbol s) const;
    bool is_L_generator(Symbol s) const;
    // Finite listing of the generators that occur in J's explicit
    // generators; family letters not materialised in J are omitted.
    std::vector<Symbol> assoc_K() const;
    std::vector<Symbol> assoc_L() const;

    // Theta on a word over L's generators (subscripts down by one) and its
    // inverse on words over K's generators.
    Word theta(Word const& w) const;
    Word theta_inverse(Word const& w) const;

    // G -> J*_Theta: t -> t, a -> a_0.
    Word to_hnn(Word const& w) const;
    // J*_Theta -> G: a_i -> t^i a t^-i.
    Word from_hnn(Word const& w) const;
  };

  // Requires sigma_t(r) = 0, t != b, both used in the (cyclically reduced)
  // relator.
  HnnPresentation make_hnn(OneRelatorPresentation const& p,
                           Symbol                        t,
                           Symbol                        b);

  // g_0 t^e_1 g_1 ... t^e_k g_k
  struct HnnWord {
    std::vector<Word> segments = {Word()};
    std::vector<int>  exponents;

    static HnnWord from_word(Word const& w, Symbol stable);
    Word           to_word(Symbol stable) const;
    std::size_t    hnn_length() const noexcept {
      return exponents.size();
    }
    friend bool operator==(HnnWord const&, HnnWord const&) = default;
  };

  std::string to_string(HnnWord const& w, Symbol stable);

  // Replaces pinches t^-1 g t (g in L) by Theta(g) and t g t^-1 (g in K) by
  // Theta^-1(g) until none remain.
  HnnWord britton_reduce(HnnPresentation const& h,
                         HnnWord const&         w,
                         Budget                 budget,
                         EngineOptions const&   options = {});

  class UnsupportedBase : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Normal form over the free basis of J obtained by eliminating a
  // generator used once in s.  Segments are canonical right coset
  // representatives of L (before t^-1) or K (before t).  Throws
  // UnsupportedBase when J is not recognisably free or K, L are not
  // generated by basis letters and at most one basis-letter power each.
  HnnWord normal_form(HnnPresentation const& h,
                      HnnWord const&         w,
                      Budget                 budget = {});

  // The free basis normal_form writes segments in.
  std::vector<Symbol> normal_form_basis(HnnPresentation const& h);

  struct BaseConjugate {
    HnnWord conjugator;  // w = conjugator * element * conjugator^-1
    Word    element;     // in J
  };

  // Cyclic Britton reduction; nullopt when the cyclically reduced form
  // still involves the stable letter.
  std::optional<BaseConjugate> conjugate_into_base(HnnPresentation const& h,
                                                   HnnWord const&         w,
                                                   Budget budget = {});

  ////////////////////////////////////////////////////////////////////////
  // Embedding for the unbalanced case
  ////////////////////////////////////////////////////////////////////////

  struct Embedding {
    OneRelatorPresentation target;  // C
    Substitution           psi;
    Symbol                 t, b, x, y;
    std::int64_t           alpha = 0;
    std::int64_t           beta  = 0;
  };

  // Fresh x, y are chosen with bases unused by the presentation.
  Embedding embed_psi(OneRelatorPresentation const& p, Symbol t, Symbol b);

  ////////////////////////////////////////////////////////////////////////
  // Decomposition traces
  ////////////////////////////////////////////////////////////////////////

  struct DecompositionTrace;
  using TracePtr = std::shared_ptr<DecompositionTrace const>;

  struct BaseFree {};
  struct BaseSingleGenerator {
    Symbol       generator;
    std::int64_t power = 0;
  };
  struct FreeSplit {
    OneRelatorPresentation core;
    std::set<Symbol>       free_part;
    std::vector<Symbol>    free_families;
  };
  struct Balanced {
    HnnPresentation hnn;
  };
  struct UnbalancedEmbed {
    Embedding embedding;
  };

  struct DecompositionTrace {
    OneRelatorPresentation group;
    std::variant<BaseFree, BaseSingleGenerator, FreeSplit, Balanced,
                 UnbalancedEmbed>
             step;
    TracePtr child;

    std::string_view case_name() const;
  };

  TracePtr decompose(OneRelatorPresentation const& p, Budget budget = {});

  struct DescentEdge {
    std::string  label;
    std::size_t  parent_length = 0;
    std::size_t  child_length  = 0;
  };

  // One edge per Magnus step: a balanced node to its base J, and an
  // unbalanced node to the base J of the HNN structure on C (or to C itself
  // when C has no balanced step).  Free splits are transparent.
  std::vector<DescentEdge> descent_edges(DecompositionTrace const& trace);

  ////////////////////////////////////////////////////////////////////////
  // Word problem and Magnus subgroup membership
  ////////////////////////////////////////////////////////////////////////

  bool is_identity(OneRelatorPresentation const& p,
                   Word const&                   w,
                   Budget                        budget  = {},
                   EngineOptions const&          options = {});

  // If w lies in <Y>, a reduced word over Y^{+-1} equal to w in G.
  std::optional<Word> magnus_member(OneRelatorPresentation const& p,
                                    std::set<Symbol> const&       Y,
                                    Word const&                   w,
                                    Budget                        budget = {},
                                    EngineOptions const& options = {});

  // Membership of a reduced word over Y in <(Y \ {x}) u {x^alpha}> <= F(Y):
  // every maximal run of x or of x^-1 must have length divisible by alpha.
  // The rewrite writes the generator x^alpha as `generator`.
  std::optional<Word> alpha_subgroup_member(std::set<Symbol> const& Y,
                                            Symbol                  x,
                                            std::int64_t            alpha,
                                            Word const&             w,
                                            Symbol                  generator);

}  // namespace magnus

#endif  // MAGNUS_ENGINE_HPP_
