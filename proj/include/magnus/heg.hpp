// Words of the Hawaiian earring group at desk scale.
//
// An element is a countable word over letters a_n (n >= 1) in which each
// letter occurs finitely often.  Representable words are combinator terms:
//
//   fin(w)                  a finite word
//   omega(n >= k -> block)  block(k) block(k+1) ...   (order type omega)
//   rev(W)                  W with its order reversed  (omega* tails)
//   cat(W1, W2, ...)        concatenation
//   inv(W)                  inverse
//
// Block letters have indices scale*n + offset with scale >= 1, so the index
// scheme is strictly increasing and every level sees finitely many blocks.
// Two words are equal when all their projections p_N agree; only equality
// up to a level is ever decided.

#ifndef MAGNUS_HEG_HPP_
#define MAGNUS_HEG_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "magnus/budget.hpp"
#include "magnus/presentation.hpp"
#include "magnus/word.hpp"

namespace magnus {

  struct TemplateLetter {
    std::string  base;
    std::int64_t scale  = 1;
    std::int64_t offset = 0;
    int          sign   = 1;

    std::int64_t index(std::int64_t n) const noexcept {
      return scale * n + offset;
    }
    friend bool operator==(TemplateLetter const&, TemplateLetter const&)
        = default;
  };

  struct HegNode;
  using HegPtr = std::shared_ptr<HegNode const>;

  struct HegNode {
    enum class Kind { fin, cat, inv, rev, omega };
    Kind                        kind = Kind::fin;
    Word                        word;      // fin
    std::vector<HegPtr>         children;  // cat (two), inv, rev (one)
    std::vector<TemplateLetter> block;     // omega
    std::int64_t                start = 1;
  };

  // Thrown for terms whose letters could occur infinitely often.
  class FinitePreimageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  class HegWord {
   public:
    static constexpr std::int64_t default_cap = 12;

    HegWord();  // the identity

    // Letters must carry a single subscript >= 1.
    static HegWord fin(Word w, std::int64_t cap = default_cap);
    static HegWord omega(std::vector<TemplateLetter> block,
                         std::int64_t                start = 1,
                         std::int64_t                cap   = default_cap);
    static HegWord cat(HegWord const& a, HegWord const& b);
    static HegWord inv(HegWord const& w);
    static HegWord rev(HegWord const& w);
    static HegWord from_node(HegPtr node, std::int64_t cap = default_cap);

    HegNode const& node() const noexcept { return *_node; }
    HegPtr const&  ptr() const noexcept { return _node; }
    // Highest level at which coherence is certified.
    std::int64_t cap() const noexcept { return _cap; }
    HegWord      with_cap(std::int64_t cap) const;

   private:
    HegWord(HegPtr node, std::int64_t cap) : _node(std::move(node)), _cap(cap) {}

    HegPtr       _node;
    std::int64_t _cap = default_cap;
  };

  HegWord parse_heg(std::string_view text,
                    std::int64_t     cap = HegWord::default_cap);
  std::string to_string(HegWord const& w);

  // Index of a HEG letter: its single subscript.
  std::int64_t level_of(Symbol s);

  // p_N: keep letters of index <= N, reduce.
  Word project(HegWord const& w, std::int64_t level);
  Word project(Word const& w, std::int64_t level);
  // p^N: delete letters of index <= N.
  HegWord coproject(HegWord const& w, std::int64_t level);

  HegWord multiply(HegWord const& a, HegWord const& b);
  HegWord invert(HegWord const& w);

  // project(a, k) == project(b, k) for every k <= level.  Throws when level
  // exceeds either cap.
  bool eq_up_to(HegWord const& a, HegWord const& b, std::int64_t level);

  struct HegBlock {
    bool    low = true;
    Word    low_word;  // when low
    HegWord high;      // when !low
  };

  // Alternating low/high blocks whose concatenation is w; low blocks are
  // reduced words over a_1..a_N, high blocks use only indices > N.
  std::vector<HegBlock> split_blocks(HegWord const& w, std::int64_t level);
  HegWord               join_blocks(std::vector<HegBlock> const& blocks,
                                    std::int64_t                 cap);

  // p_N(W) == p_N(p_M(W)) for all N <= M <= cap.
  bool certify_coherence(HegWord const& w);

  // Homomorphism from the HEG given by finitely many nontrivial images of
  // letters a_n; all other letters map to 1.
  struct HomSpec {
    OneRelatorPresentation target;
    std::map<Symbol, Word> images;

    std::int64_t support_level() const;
    Word         apply(Word const& w) const;
  };

  // phi(W) == phi(p_N(W)) in the target group.
  bool truncation_check(HomSpec const& h,
                        HegWord const& w,
                        std::int64_t   level,
                        Budget const&  budget = {});

}  // namespace magnus

#endif  // MAGNUS_HEG_HPP_
