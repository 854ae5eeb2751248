// Free-group words over signed, optionally subscripted letters.
//
// A Symbol is an interned generator name: a textual base ("a", "b") plus a
// (possibly empty) list of integer indices.  The common case is zero or one
// index (a, b_3); deeper recursion levels of the Magnus rewriting append
// further indices (b_3_1).  Symbols compare by value and are cheap to copy.

#ifndef MAGNUS_WORD_HPP_
#define MAGNUS_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace magnus {

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& message, std::size_t position);
    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  class Symbol {
   public:
    Symbol() = default;

    static Symbol intern(std::string_view base,
                         std::span<std::int64_t const> indices = {});
    static Symbol intern(std::string_view base, std::int64_t index);

    std::string const&               base() const;
    std::vector<std::int64_t> const& indices() const;
    // The last index, if any.
    std::optional<std::int64_t> subscript() const;

    Symbol subscripted(std::int64_t index) const;
    // Adds delta to the last index; throws if there is none.
    Symbol shifted(std::int64_t delta) const;
    // Drops the last index: family(b_3) = b.
    Symbol family() const;

    std::string   name() const;
    std::uint32_t id() const noexcept {
      return _id;
    }
    bool valid() const noexcept {
      return _id != 0;
    }

    friend bool operator==(Symbol x, Symbol y) noexcept {
      return x._id == y._id;
    }
    // Name order: base lexicographically, then indices numerically.
    friend std::strong_ordering operator<=>(Symbol x, Symbol y);

   private:
    explicit Symbol(std::uint32_t id) : _id(id) {}
    std::uint32_t _id = 0;
  };

  struct SymbolHash {
    std::size_t operator()(Symbol s) const noexcept {
      return std::hash<std::uint32_t>()(s.id());
    }
  };

  struct Letter {
    Symbol symbol;
    int    sign = 1;

    Letter inverse() const {
      return {symbol, -sign};
    }
    bool is_inverse_of(Letter const& other) const noexcept {
      return symbol == other.symbol && sign == -other.sign;
    }
    friend bool operator==(Letter const&, Letter const&) = default;
    friend std::strong_ordering operator<=>(Letter const& x,
                                            Letter const& y) {
      if (auto c = x.symbol <=> y.symbol; c != 0) {
        return c;
      }
      return x.sign <=> y.sign;
    }
  };

  class Word {
   public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : _letters(letters) {}
    explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}

    static Word letter(Symbol s, int sign = 1) {
      return Word({Letter{s, sign}});
    }
    // s^k, expanded into |k| letters.
    static Word power_of(Symbol s, std::int64_t k);

    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter const& operator[](std::size_t i) const {
      return _letters[i];
    }
    Letter const& front() const {
      return _letters.front();
    }
    Letter const& back() const {
      return _letters.back();
    }
    auto begin() const noexcept {
      return _letters.begin();
    }
    auto end() const noexcept {
      return _letters.end();
    }

    void push_back(Letter l) {
      _letters.push_back(l);
    }
    Word& operator*=(Word const& other);

    // Literal inverse: reversed order, flipped signs.
    Word inverse() const;
    // Literal n-th power (n >= 0); negative n uses the inverse.
    Word power(std::int64_t n) const;
    Word subword(std::size_t pos, std::size_t len) const;
    // Cyclic rotation moving the first k letters to the end.
    Word rotated(std::size_t k) const;

    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const& x, Word const& y) {
      return std::lexicographical_compare_three_way(
          x._letters.begin(), x._letters.end(), y._letters.begin(),
          y._letters.end());
    }

   private:
    std::vector<Letter> _letters;
  };

  Word operator*(Word lhs, Word const& rhs);

  // Letters not in the map are fixed.
  using Substitution = std::map<Symbol, Word>;

  ////////////////////////////////////////////////////////////////////////
  // Reductions and invariants
  ////////////////////////////////////////////////////////////////////////

  Word free_reduce(Word const& w);
  bool is_reduced(Word const& w);
  bool is_cyclically_reduced(Word const& w);

  struct CyclicDecomposition {
    Word conjugator;
    Word core;
  };
  // w = conjugator * core * conjugator^-1 with core cyclically reduced and
  // the conjugator as long as possible.  Requires w reduced.
  CyclicDecomposition cyclic_reduce(Word const& w);

  // Signed count of occurrences of exactly this generator.
  std::int64_t exponent_sum(Word const& w, Symbol generator);
  // Signed count of occurrences of any letter with this textual base.
  std::int64_t exponent_sum(Word const& w, std::string_view base);
  // Number of occurrences of the generator regardless of sign.
  std::size_t occurrences(Word const& w, Symbol generator);

  std::set<Symbol> support(Word const& w);

  struct PrimitiveRoot {
    Word         root;
    std::int64_t power = 1;
  };
  // w is literally root^power with power maximal.  Throws on empty w.
  PrimitiveRoot primitive_root(Word const& w);

  // Image of w under s, freely reduced.
  Word substitute(Word const& w, Substitution const& s);
  Word substitute(Word const& w, std::function<Word(Letter const&)> const& f);

  // Shifts the last index of every letter whose family is in `families`.
  // Throws std::invalid_argument on an unsubscripted letter named by a
  // family.
  Word shift_subscripts(Word const&             w,
                        std::set<Symbol> const& families,
                        std::int64_t            delta);
  // Shifts the last index of every subscripted letter.
  Word shift_all_subscripts(Word const& w, std::int64_t delta);

  struct BalancedRewrite {
    Word         word;
    std::int64_t residual = 0;
  };
  // Rewrites w over the letters a_i = t^i a t^-i: each non-t letter read at
  // running t-exponent c becomes a_c.  residual = exponent sum of t.
  BalancedRewrite rewrite_balanced(Word const& w, Symbol t);
  // Inverse of rewrite_balanced on the word part: a_i -> t^i a t^-i,
  // freely reduced.  Letters without indices are kept as they are.
  Word expand_balanced(Word const& s, Symbol t);

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  // Tokens: ident, ident^k, ident_i (repeatable), (word)^k; "1" is the
  // empty word.  Exponents are expanded into repeated letters.
  Word parse_word(std::string_view text);
  std::string to_string(Word const& w);
  std::string to_string(Letter const& l);
  std::string to_string(Symbol s);

  // Parses a single generator name such as "b" or "b_3".
  Symbol parse_symbol(std::string_view text);

  namespace detail {
    // Shared low-level scanner used by the word, presentation and HEG
    // grammars.
    class Scanner {
     public:
      explicit Scanner(std::string_view text) : _text(text) {}

      void        skip_space();
      bool        at_end();
      char        peek();
      bool        consume(char c);
      void        expect(char c);
      std::size_t position() const noexcept {
        return _pos;
      }
      void set_position(std::size_t p) noexcept {
        _pos = p;
      }
      std::string_view text() const noexcept {
        return _text;
      }
      bool             at_identifier();
      std::string      identifier();
      std::int64_t     integer();
      [[noreturn]] void fail(std::string const& what) const;

     private:
      std::string_view _text;
      std::size_t      _pos = 0;
    };

    // Parses a word, stopping at any character in `stop` (outside parens).
    Word parse_word(Scanner& sc, std::string_view stop);
    Symbol parse_symbol(Scanner& sc);
  }  // namespace detail

}  // namespace magnus

template <>
struct std::hash<magnus::Symbol> : magnus::SymbolHash {};

#endif  // MAGNUS_WORD_HPP_
