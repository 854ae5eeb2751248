#include "magnus/heg.hpp"

#include <algorithm>

#include "magnus/engine.hpp"

namespace magnus {

  namespace {

    HegPtr make(HegNode n) {
      return std::make_shared<HegNode const>(std::move(n));
    }

    std::int64_t min_index(std::vector<TemplateLetter> const& block,
                           std::int64_t                       n) {
      std::int64_t m = block.front().index(n);
      for (auto const& l : block) {
        m = std::min(m, l.index(n));
      }
      return m;
    }

    Letter block_letter(TemplateLetter const& t, std::int64_t n) {
      return {Symbol::intern(t.base, t.index(n)), t.sign};
    }

    void check_level(std::int64_t level) {
      if (level < 1) {
        throw std::invalid_argument("levels start at 1");
      }
    }

    // Letters of index <= level, in order, unreduced.
    void collect_low(HegNode const& n, std::int64_t level, Word& out) {
      switch (n.kind) {
        case HegNode::Kind::fin:
          for (auto const& l : n.word) {
            if (level_of(l.symbol) <= level) {
              out.push_back(l);
            }
          }
          return;
        case HegNode::Kind::cat:
          for (auto const& c : n.children) {
            collect_low(*c, level, out);
          }
          return;
        case HegNode::Kind::inv: {
          Word inner;
          collect_low(*n.children[0], level, inner);
          out *= inner.inverse();
          return;
        }
        case HegNode::Kind::rev: {
          Word inner;
          collect_low(*n.children[0], level, inner);
          std::vector<Letter> v(inner.letters().rbegin(),
                                inner.letters().rend());
          out *= Word(std::move(v));
          return;
        }
        case HegNode::Kind::omega:
          for (auto k = n.start; min_index(n.block, k) <= level; ++k) {
            for (auto const& t : n.block) {
              if (t.index(k) <= level) {
                out.push_back(block_letter(t, k));
              }
            }
          }
          return;
      }
    }

    HegPtr coproject_node(HegPtr const& p, std::int64_t level) {
      HegNode const& n = *p;
      switch (n.kind) {
        case HegNode::Kind::fin: {
          HegNode out;
          for (auto const& l : n.word) {
            if (level_of(l.symbol) > level) {
              out.word.push_back(l);
            }
          }
          return make(std::move(out));
        }
        case HegNode::Kind::cat:
        case HegNode::Kind::inv:
        case HegNode::Kind::rev: {
          HegNode out;
          out.kind = n.kind;
          for (auto const& c : n.children) {
            out.children.push_back(coproject_node(c, level));
          }
          return make(std::move(out));
        }
        case HegNode::Kind::omega: {
          HegNode head;
          auto    k = n.start;
          for (; min_index(n.block, k) <= level; ++k) {
            for (auto const& t : n.block) {
              if (t.index(k) > level) {
                head.word.push_back(block_letter(t, k));
              }
            }
          }
          HegNode tail = n;
          tail.start   = k;
          if (head.word.empty()) {
            return make(std::move(tail));
          }
          HegNode out;
          out.kind     = HegNode::Kind::cat;
          out.children = {make(std::move(head)), make(std::move(tail))};
          return make(std::move(out));
        }
      }
      return p;
    }

    // Flattening for split_blocks: low letters, or high material.
    struct Item {
      bool   low = true;
      Letter letter{};
      HegPtr high;  // null for a single high letter
    };

    void flatten(HegPtr const& p, std::int64_t level, std::vector<Item>& out) {
      HegNode const& n = *p;
      switch (n.kind) {
        case HegNode::Kind::fin:
          for (auto const& l : n.word) {
            out.push_back({level_of(l.symbol) <= level, l, nullptr});
          }
          return;
        case HegNode::Kind::cat:
          for (auto const& c : n.children) {
            flatten(c, level, out);
          }
          return;
        case HegNode::Kind::inv:
        case HegNode::Kind::rev: {
          std::vector<Item> inner;
          flatten(n.children[0], level, inner);
          std::reverse(inner.begin(), inner.end());
          for (auto& it : inner) {
            if (it.high) {
              HegNode wrap;
              wrap.kind     = n.kind;
              wrap.children = {it.high};
              it.high       = make(std::move(wrap));
            } else if (n.kind == HegNode::Kind::inv) {
              it.letter = it.letter.inverse();
            }
            out.push_back(std::move(it));
          }
          return;
        }
        case HegNode::Kind::omega: {
          auto k = n.start;
          for (; min_index(n.block, k) <= level; ++k) {
            for (auto const& t : n.block) {
              out.push_back({t.index(k) <= level, block_letter(t, k), nullptr});
            }
          }
          HegNode tail = n;
          tail.start   = k;
          out.push_back({false, {}, make(std::move(tail))});
          return;
        }
      }
    }

    bool is_empty_fin(HegWord const& w) {
      return w.node().kind == HegNode::Kind::fin && w.node().word.empty();
    }

    //////////////////////////////////////////////////////////////////////
    // Text
    //////////////////////////////////////////////////////////////////////

    HegWord parse_term(detail::Scanner& sc, std::int64_t cap);

    TemplateLetter parse_template_letter(detail::Scanner&   sc,
                                         std::string const& var) {
      TemplateLetter t;
      t.base = sc.identifier();
      if (!sc.consume('_')) {
        sc.fail("block letters need an index in " + var);
      }
      auto read_var = [&] {
        auto at = sc.position();
        if (!sc.at_identifier() || sc.identifier() != var) {
          sc.set_position(at);
          throw FinitePreimageError(
              "block letter " + t.base
              + " must have an index increasing with " + var);
        }
      };
      if (sc.consume('{')) {
        t.scale = 1;
        if (!sc.at_identifier()) {
          t.scale = sc.integer();
          sc.consume('*');
        }
        read_var();
        if (sc.peek() == '+' || sc.peek() == '-') {
          t.offset = sc.integer();
        }
        sc.expect('}');
      } else {
        read_var();
      }
      if (t.scale < 1) {
        throw FinitePreimageError("index scheme " + std::to_string(t.scale)
                                  + var + " is not increasing");
      }
      return t;
    }

    HegWord parse_omega(detail::Scanner& sc, std::int64_t cap) {
      std::string  var   = sc.identifier();
      std::int64_t start = 1;
      if (sc.consume('>')) {
        sc.expect('=');
        start = sc.integer();
      }
      sc.expect('-');
      sc.expect('>');
      std::vector<TemplateLetter> block;
      while (sc.peek() != ')') {
        if (sc.at_end()) {
          sc.fail("unterminated omega");
        }
        auto t     = parse_template_letter(sc, var);
        std::int64_t power = 1;
        if (sc.consume('^')) {
          power = sc.integer();
        }
        if (power < 0) {
          t.sign = -1;
          power  = -power;
        }
        for (std::int64_t i = 0; i < power; ++i) {
          block.push_back(t);
        }
      }
      return HegWord::omega(std::move(block), start, cap);
    }

    HegWord parse_term(detail::Scanner& sc, std::int64_t cap) {
      if (!sc.at_identifier()) {
        sc.fail("expected fin, omega, rev, cat or inv");
      }
      auto at   = sc.position();
      auto name = sc.identifier();
      sc.expect('(');
      HegWord out;
      if (name == "fin") {
        out = HegWord::fin(detail::parse_word(sc, ")"), cap);
      } else if (name == "omega") {
        out = parse_omega(sc, cap);
      } else if (name == "rev" || name == "inv") {
        auto inner = parse_term(sc, cap);
        out        = name == "rev" ? HegWord::rev(inner) : HegWord::inv(inner);
      } else if (name == "cat") {
        out = parse_term(sc, cap);
        while (sc.consume(',')) {
          out = HegWord::cat(out, parse_term(sc, cap));
        }
      } else {
        sc.set_position(at);
        sc.fail("unknown combinator '" + name + "'");
      }
      sc.expect(')');
      return out;
    }

    std::string template_string(TemplateLetter const& t) {
      std::string idx;
      if (t.scale == 1 && t.offset == 0) {
        idx = "n";
      } else {
        idx = "{" + (t.scale == 1 ? "" : std::to_string(t.scale)) + "n";
        if (t.offset != 0) {
          idx += (t.offset > 0 ? "+" : "") + std::to_string(t.offset);
        }
        idx += "}";
      }
      return t.base + "_" + idx + (t.sign < 0 ? "^-1" : "");
    }

    std::string node_string(HegNode const& n) {
      switch (n.kind) {
        case HegNode::Kind::fin:
          return "fin(" + to_string(n.word) + ")";
        case HegNode::Kind::cat:
          return "cat(" + node_string(*n.children[0]) + ", "
                 + node_string(*n.children[1]) + ")";
        case HegNode::Kind::inv:
          return "inv(" + node_string(*n.children[0]) + ")";
        case HegNode::Kind::rev:
          return "rev(" + node_string(*n.children[0]) + ")";
        case HegNode::Kind::omega: {
          std::string out = "omega(n";
          if (n.start != 1) {
            out += " >= " + std::to_string(n.start);
          }
          out += " ->";
          for (auto const& t : n.block) {
            out += " " + template_string(t);
          }
          return out + ")";
        }
      }
      return "?";
    }

  }  // namespace

  //////////////////////////////////////////////////////////////////////////
  // HegWord
  //////////////////////////////////////////////////////////////////////////

  HegWord::HegWord() : _node(make(HegNode{})) {}

  HegWord HegWord::fin(Word w, std::int64_t cap) {
    for (auto const& l : w) {
      level_of(l.symbol);
    }
    HegNode n;
    n.word = std::move(w);
    return {make(std::move(n)), cap};
  }

  HegWord HegWord::omega(std::vector<TemplateLetter> block,
                         std::int64_t                start,
                         std::int64_t                cap) {
    if (block.empty()) {
      throw std::invalid_argument("omega needs a nonempty block");
    }
    for (auto const& t : block) {
      if (t.scale < 1) {
        throw FinitePreimageError("index scheme of " + t.base
                                  + " is not strictly increasing");
      }
      if (t.index(start) < 1) {
        throw std::invalid_argument("block letter " + t.base + " has index "
                                    + std::to_string(t.index(start))
                                    + " < 1 at n = " + std::to_string(start));
      }
    }
    HegNode n;
    n.kind  = HegNode::Kind::omega;
    n.block = std::move(block);
    n.start = start;
    return {make(std::move(n)), cap};
  }

  HegWord HegWord::cat(HegWord const& a, HegWord const& b) {
    HegNode n;
    n.kind     = HegNode::Kind::cat;
    n.children = {a._node, b._node};
    return {make(std::move(n)), std::min(a._cap, b._cap)};
  }

  HegWord HegWord::inv(HegWord const& w) {
    HegNode n;
    n.kind     = HegNode::Kind::inv;
    n.children = {w._node};
    return {make(std::move(n)), w._cap};
  }

  HegWord HegWord::rev(HegWord const& w) {
    HegNode n;
    n.kind     = HegNode::Kind::rev;
    n.children = {w._node};
    return {make(std::move(n)), w._cap};
  }

  HegWord HegWord::from_node(HegPtr node, std::int64_t cap) {
    return {std::move(node), cap};
  }

  HegWord HegWord::with_cap(std::int64_t cap) const {
    return {_node, cap};
  }

  HegWord parse_heg(std::string_view text, std::int64_t cap) {
    detail::Scanner sc(text);
    auto            out = parse_term(sc, cap);
    if (!sc.at_end()) {
      sc.fail("unexpected text after term");
    }
    return out;
  }

  std::string to_string(HegWord const& w) {
    return node_string(w.node());
  }

  std::int64_t level_of(Symbol s) {
    auto const& idx = s.indices();
    if (idx.size() != 1 || idx[0] < 1) {
      throw std::invalid_argument("earring letter " + s.name()
                                  + " needs one index >= 1");
    }
    return idx[0];
  }

  //////////////////////////////////////////////////////////////////////////
  // Retractions and operations
  //////////////////////////////////////////////////////////////////////////

  Word project(HegWord const& w, std::int64_t level) {
    check_level(level);
    Word out;
    collect_low(w.node(), level, out);
    return free_reduce(out);
  }

  Word project(Word const& w, std::int64_t level) {
    check_level(level);
    Word out;
    for (auto const& l : w) {
      if (level_of(l.symbol) <= level) {
        out.push_back(l);
      }
    }
    return free_reduce(out);
  }

  HegWord coproject(HegWord const& w, std::int64_t level) {
    check_level(level);
    return HegWord::from_node(coproject_node(w.ptr(), level), w.cap());
  }

  HegWord multiply(HegWord const& a, HegWord const& b) {
    return HegWord::cat(a, b);
  }

  HegWord invert(HegWord const& w) {
    return HegWord::inv(w);
  }

  bool eq_up_to(HegWord const& a, HegWord const& b, std::int64_t level) {
    check_level(level);
    if (level > a.cap() || level > b.cap()) {
      throw std::invalid_argument("level " + std::to_string(level)
                                  + " exceeds the certified cap");
    }
    for (std::int64_t k = 1; k <= level; ++k) {
      if (project(a, k) != project(b, k)) {
        return false;
      }
    }
    return true;
  }

  std::vector<HegBlock> split_blocks(HegWord const& w, std::int64_t level) {
    check_level(level);
    std::vector<Item> items;
    flatten(w.ptr(), level, items);

    std::vector<HegBlock> out;
    auto                  push = [&](HegBlock b) {
      if (b.low ? b.low_word.empty() : is_empty_fin(b.high)) {
        return;
      }
      if (!out.empty() && out.back().low == b.low) {
        auto& top = out.back();
        if (b.low) {
          top.low_word = free_reduce(top.low_word * b.low_word);
          if (top.low_word.empty()) {
            out.pop_back();
          }
        } else {
          top.high = HegWord::cat(top.high, b.high);
        }
        return;
      }
      out.push_back(std::move(b));
    };

    for (std::size_t i = 0; i < items.size();) {
      std::size_t j = i;
      HegBlock    b;
      b.low = items[i].low;
      if (b.low || !items[i].high) {
        Word letters;
        while (j < items.size() && items[j].low == b.low && !items[j].high) {
          letters.push_back(items[j++].letter);
        }
        if (b.low) {
          b.low_word = free_reduce(letters);
        } else {
          b.high = HegWord::fin(free_reduce(letters), w.cap());
        }
      } else {
        b.high = HegWord::from_node(items[j++].high, w.cap());
      }
      push(std::move(b));
      i = j;
    }
    return out;
  }

  HegWord join_blocks(std::vector<HegBlock> const& blocks, std::int64_t cap) {
    HegWord out = HegWord::fin(Word(), cap);
    for (auto const& b : blocks) {
      out = HegWord::cat(out, b.low ? HegWord::fin(b.low_word, cap) : b.high);
    }
    return out;
  }

  bool certify_coherence(HegWord const& w) {
    for (std::int64_t m = 1; m <= w.cap(); ++m) {
      Word pm = project(w, m);
      for (std::int64_t n = 1; n <= m; ++n) {
        if (project(pm, n) != project(w, n)) {
          return false;
        }
      }
    }
    return true;
  }

  std::int64_t HomSpec::support_level() const {
    std::int64_t out = 0;
    for (auto const& [s, img] : images) {
      if (!free_reduce(img).empty()) {
        out = std::max(out, level_of(s));
      }
    }
    return out;
  }

  Word HomSpec::apply(Word const& w) const {
    return substitute(w, [&](Letter const& l) {
      auto it = images.find(l.symbol);
      if (it == images.end()) {
        return Word();
      }
      return l.sign > 0 ? it->second : it->second.inverse();
    });
  }

  bool truncation_check(HomSpec const& h,
                        HegWord const& w,
                        std::int64_t   level,
                        Budget const&  budget) {
    check_level(level);
    auto top = h.support_level();
    if (top == 0) {
      return true;
    }
    Word full  = h.apply(project(w, top));
    Word trunc = h.apply(project(w, std::min(level, top)));
    return is_identity(h.target, full * trunc.inverse(), budget);
  }

}  // namespace magnus
