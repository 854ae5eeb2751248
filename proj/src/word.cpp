#include "magnus/word.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace magnus {

  namespace {

    struct SymbolData {
      std::string               base;
      std::vector<std::int64_t> indices;
    };

    struct KeyHash {
      std::size_t operator()(SymbolData const& d) const noexcept {
        std::size_t h = std::hash<std::string>()(d.base);
        for (auto i : d.indices) {
          h ^= std::hash<std::int64_t>()(i) + 0x9e3779b97f4a7c15ULL + (h << 6)
               + (h >> 2);
        }
        return h;
      }
    };

    struct KeyEq {
      bool operator()(SymbolData const& x, SymbolData const& y) const {
        return x.base == y.base && x.indices == y.indices;
      }
    };

    // Entries are never removed; std::deque keeps references stable.
    class SymbolTable {
     public:
      SymbolTable() {
        _entries.push_back({"", {}});  // id 0 is the invalid symbol
      }

      std::uint32_t intern(std::string_view                base,
                           std::span<std::int64_t const> indices) {
        SymbolData key{std::string(base),
                       std::vector<std::int64_t>(indices.begin(),
                                                 indices.end())};
        {
          std::shared_lock lock(_mutex);
          auto             it = _ids.find(key);
          if (it != _ids.end()) {
            return it->second;
          }
        }
        std::unique_lock lock(_mutex);
        auto             it = _ids.find(key);
        if (it != _ids.end()) {
          return it->second;
        }
        auto id = static_cast<std::uint32_t>(_entries.size());
        _entries.push_back(key);
        _ids.emplace(std::move(key), id);
        return id;
      }

      SymbolData const& get(std::uint32_t id) const {
        std::shared_lock lock(_mutex);
        return _entries[id];
      }

     private:
      mutable std::shared_mutex                                     _mutex;
      std::deque<SymbolData>                                        _entries;
      std::unordered_map<SymbolData, std::uint32_t, KeyHash, KeyEq> _ids;
    };

    SymbolTable& table() {
      static SymbolTable t;
      return t;
    }

    bool is_ident_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) != 0;
    }

    bool is_ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '\'';
    }

  }  // namespace

  ParseError::ParseError(std::string const& message, std::size_t position)
      : std::runtime_error(message), _position(position) {}

  ////////////////////////////////////////////////////////////////////////
  // Symbol
  ////////////////////////////////////////////////////////////////////////

  Symbol Symbol::intern(std::string_view                base,
                        std::span<std::int64_t const> indices) {
    if (base.empty()) {
      throw std::invalid_argument("symbol base must be nonempty");
    }
    return Symbol(table().intern(base, indices));
  }

  Symbol Symbol::intern(std::string_view base, std::int64_t index) {
    std::int64_t const idx[] = {index};
    return intern(base, idx);
  }

  std::string const& Symbol::base() const {
    return table().get(_id).base;
  }

  std::vector<std::int64_t> const& Symbol::indices() const {
    return table().get(_id).indices;
  }

  std::optional<std::int64_t> Symbol::subscript() const {
    auto const& idx = indices();
    if (idx.empty()) {
      return std::nullopt;
    }
    return idx.back();
  }

  Symbol Symbol::subscripted(std::int64_t index) const {
    auto const& d   = table().get(_id);
    auto        idx = d.indices;
    idx.push_back(index);
    return intern(d.base, idx);
  }

  Symbol Symbol::shifted(std::int64_t delta) const {
    auto const& d = table().get(_id);
    if (d.indices.empty()) {
      throw std::invalid_argument("cannot shift unsubscripted letter "
                                  + name());
    }
    if (delta == 0) {
      return *this;
    }
    auto idx = d.indices;
    idx.back() += delta;
    return intern(d.base, idx);
  }

  Symbol Symbol::family() const {
    auto const& d = table().get(_id);
    if (d.indices.empty()) {
      return *this;
    }
    auto idx = d.indices;
    idx.pop_back();
    return intern(d.base, idx);
  }

  std::string Symbol::name() const {
    auto const& d = table().get(_id);
    std::string out = d.base;
    for (auto i : d.indices) {
      out += '_';
      out += std::to_string(i);
    }
    return out;
  }

  std::strong_ordering operator<=>(Symbol x, Symbol y) {
    if (x._id == y._id) {
      return std::strong_ordering::equal;
    }
    auto const& dx = table().get(x._id);
    auto const& dy = table().get(y._id);
    if (auto c = dx.base <=> dy.base; c != 0) {
      return c;
    }
    return dx.indices <=> dy.indices;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word Word::power_of(Symbol s, std::int64_t k) {
    std::vector<Letter> v(static_cast<std::size_t>(k < 0 ? -k : k),
                          Letter{s, k < 0 ? -1 : 1});
    return Word(std::move(v));
  }

  Word& Word::operator*=(Word const& other) {
    _letters.insert(_letters.end(), other._letters.begin(),
                    other._letters.end());
    return *this;
  }

  Word operator*(Word lhs, Word const& rhs) {
    lhs *= rhs;
    return lhs;
  }

  Word Word::inverse() const {
    std::vector<Letter> v;
    v.reserve(_letters.size());
    for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
      v.push_back(it->inverse());
    }
    return Word(std::move(v));
  }

  Word Word::power(std::int64_t n) const {
    if (n < 0) {
      return inverse().power(-n);
    }
    std::vector<Letter> v;
    v.reserve(_letters.size() * static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
      v.insert(v.end(), _letters.begin(), _letters.end());
    }
    return Word(std::move(v));
  }

  Word Word::subword(std::size_t pos, std::size_t len) const {
    pos = std::min(pos, _letters.size());
    len = std::min(len, _letters.size() - pos);
    return Word(std::vector<Letter>(_letters.begin() + pos,
                                    _letters.begin() + pos + len));
  }

  Word Word::rotated(std::size_t k) const {
    if (_letters.empty()) {
      return *this;
    }
    k %= _letters.size();
    std::vector<Letter> v(_letters.begin() + k, _letters.end());
    v.insert(v.end(), _letters.begin(), _letters.begin() + k);
    return Word(std::move(v));
  }

  ////////////////////////////////////////////////////////////////////////
  // Reductions
  ////////////////////////////////////////////////////////////////////////

  Word free_reduce(Word const& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (auto const& l : w) {
      if (!stack.empty() && stack.back().is_inverse_of(l)) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    }
    return Word(std::move(stack));
  }

  bool is_reduced(Word const& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i - 1].is_inverse_of(w[i])) {
        return false;
      }
    }
    return true;
  }

  bool is_cyclically_reduced(Word const& w) {
    return is_reduced(w)
           && (w.size() < 2 || !w.front().is_inverse_of(w.back()));
  }

  CyclicDecomposition cyclic_reduce(Word const& w) {
    std::size_t i = 0, j = w.size();
    while (j - i >= 2 && w[i].is_inverse_of(w[j - 1])) {
      ++i;
      --j;
    }
    return {w.subword(0, i), w.subword(i, j - i)};
  }

  std::int64_t exponent_sum(Word const& w, Symbol generator) {
    std::int64_t s = 0;
    for (auto const& l : w) {
      if (l.symbol == generator) {
        s += l.sign;
      }
    }
    return s;
  }

  std::int64_t exponent_sum(Word const& w, std::string_view base) {
    std::int64_t s = 0;
    for (auto const& l : w) {
      if (l.symbol.base() == base) {
        s += l.sign;
      }
    }
    return s;
  }

  std::size_t occurrences(Word const& w, Symbol generator) {
    return static_cast<std::size_t>(
        std::count_if(w.begin(), w.end(), [generator](Letter const& l) {
          return l.symbol == generator;
        }));
  }

  std::set<Symbol> support(Word const& w) {
    std::set<Symbol> out;
    for (auto const& l : w) {
      out.insert(l.symbol);
    }
    return out;
  }

  PrimitiveRoot primitive_root(Word const& w) {
    if (w.empty()) {
      throw std::invalid_argument("primitive_root of the empty word");
    }
    std::size_t const n = w.size();
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = d; i < n && periodic; ++i) {
        periodic = w[i] == w[i - d];
      }
      if (periodic) {
        return {w.subword(0, d), static_cast<std::int64_t>(n / d)};
      }
    }
    return {w, 1};  // unreachable: d = n always succeeds
  }

  Word substitute(Word const& w, Substitution const& s) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto const& l : w) {
      auto it = s.find(l.symbol);
      if (it == s.end()) {
        out.push_back(l);
      } else if (l.sign > 0) {
        out.insert(out.end(), it->second.begin(), it->second.end());
      } else {
        auto inv = it->second.inverse();
        out.insert(out.end(), inv.begin(), inv.end());
      }
    }
    return free_reduce(Word(std::move(out)));
  }

  Word substitute(Word const& w, std::function<Word(Letter const&)> const& f) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto const& l : w) {
      auto img = f(l);
      out.insert(out.end(), img.begin(), img.end());
    }
    return free_reduce(Word(std::move(out)));
  }

  Word shift_subscripts(Word const&             w,
                        std::set<Symbol> const& families,
                        std::int64_t            delta) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto const& l : w) {
      if (families.contains(l.symbol)) {
        throw std::invalid_argument("letter " + l.symbol.name()
                                    + " carries no subscript to shift");
      }
      if (l.symbol.subscript() && families.contains(l.symbol.family())) {
        out.push_back({l.symbol.shifted(delta), l.sign});
      } else {
        out.push_back(l);
      }
    }
    return Word(std::move(out));
  }

  Word shift_all_subscripts(Word const& w, std::int64_t delta) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto const& l : w) {
      if (l.symbol.subscript()) {
        out.push_back({l.symbol.shifted(delta), l.sign});
      } else {
        out.push_back(l);
      }
    }
    return Word(std::move(out));
  }

  BalancedRewrite rewrite_balanced(Word const& w, Symbol t) {
    std::vector<Letter> out;
    std::int64_t        c = 0;
    for (auto const& l : w) {
      if (l.symbol == t) {
        c += l.sign;
      } else {
        out.push_back({l.symbol.subscripted(c), l.sign});
      }
    }
    return {free_reduce(Word(std::move(out))), c};
  }

  Word expand_balanced(Word const& s, Symbol t) {
    return substitute(s, [t](Letter const& l) {
      auto i = l.symbol.subscript();
      if (!i) {
        return Word({l});
      }
      Word out = Word::power_of(t, *i);
      out.push_back({l.symbol.family(), l.sign});
      out *= Word::power_of(t, -*i);
      return out;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    void Scanner::skip_space() {
      while (_pos < _text.size()
             && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
        ++_pos;
      }
    }

    bool Scanner::at_end() {
      skip_space();
      return _pos >= _text.size();
    }

    char Scanner::peek() {
      skip_space();
      return _pos < _text.size() ? _text[_pos] : '\0';
    }

    bool Scanner::consume(char c) {
      if (peek() == c) {
        ++_pos;
        return true;
      }
      return false;
    }

    void Scanner::expect(char c) {
      if (!consume(c)) {
        fail(std::string("expected '") + c + "'");
      }
    }

    bool Scanner::at_identifier() {
      return is_ident_start(peek());
    }

    std::string Scanner::identifier() {
      if (!at_identifier()) {
        fail("expected identifier");
      }
      auto start = _pos;
      while (_pos < _text.size() && is_ident_char(_text[_pos])) {
        ++_pos;
      }
      return std::string(_text.substr(start, _pos - start));
    }

    std::int64_t Scanner::integer() {
      skip_space();
      auto start = _pos;
      bool neg   = false;
      if (_pos < _text.size() && (_text[_pos] == '-' || _text[_pos] == '+')) {
        neg = _text[_pos] == '-';
        ++_pos;
      }
      if (_pos >= _text.size()
          || !std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
        _pos = start;
        fail("expected integer");
      }
      std::int64_t v = 0;
      while (_pos < _text.size()
             && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
        v = v * 10 + (_text[_pos] - '0');
        if (v > (std::int64_t(1) << 40)) {
          fail("integer out of range");
        }
        ++_pos;
      }
      return neg ? -v : v;
    }

    void Scanner::fail(std::string const& what) const {
      std::ostringstream os;
      os << what << " at position " << _pos << " in \"" << _text << "\"";
      throw ParseError(os.str(), _pos);
    }

    Symbol parse_symbol(Scanner& sc) {
      auto                      base = sc.identifier();
      std::vector<std::int64_t> idx;
      // Subscripts bind tightly: no whitespace before '_'.
      while (sc.position() + 1 < sc.text().size()
             && sc.text()[sc.position()] == '_'
             && sc.text()[sc.position() + 1] != '*') {
        sc.set_position(sc.position() + 1);
        if (sc.consume('{')) {
          idx.push_back(sc.integer());
          sc.expect('}');
        } else {
          idx.push_back(sc.integer());
        }
      }
      return Symbol::intern(base, idx);
    }

    namespace {
      void parse_items(Scanner& sc, std::string_view stop, Word& out) {
        while (true) {
          char c = sc.peek();
          if (c == '\0' || stop.find(c) != std::string_view::npos) {
            return;
          }
          Word atom;
          if (c == '(') {
            sc.expect('(');
            parse_items(sc, ")", atom);
            sc.expect(')');
          } else if (c == '1') {
            // the identity
            if (sc.integer() != 1) {
              sc.fail("unexpected integer");
            }
          } else {
            atom = Word::letter(parse_symbol(sc));
          }
          if (sc.consume('^')) {
            atom = atom.power(sc.integer());
          }
          out *= atom;
        }
      }
    }  // namespace

    Word parse_word(Scanner& sc, std::string_view stop) {
      Word out;
      parse_items(sc, stop, out);
      return out;
    }

  }  // namespace detail

  Word parse_word(std::string_view text) {
    detail::Scanner sc(text);
    Word            w = detail::parse_word(sc, "");
    if (!sc.at_end()) {
      sc.fail("unexpected character");
    }
    return w;
  }

  Symbol parse_symbol(std::string_view text) {
    detail::Scanner sc(text);
    auto            s = detail::parse_symbol(sc);
    if (!sc.at_end()) {
      sc.fail("unexpected character after generator name");
    }
    return s;
  }

  std::string to_string(Symbol s) {
    return s.name();
  }

  std::string to_string(Letter const& l) {
    return l.sign > 0 ? l.symbol.name() : l.symbol.name() + "^-1";
  }

  std::string to_string(Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      auto run = static_cast<std::int64_t>(j - i) * w[i].sign;
      if (!out.empty()) {
        out += ' ';
      }
      out += w[i].symbol.name();
      if (run != 1) {
        out += '^' + std::to_string(run);
      }
      i = j;
    }
    return out;
  }

}  // namespace magnus
