#include "magnus/engine.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <unordered_set>

namespace magnus {

  namespace {

    using SymbolSet = std::unordered_set<Symbol, SymbolHash>;

    struct Context {
      BudgetMeter   meter;
      EngineOptions options;
    };

    bool all_in(Word const& w, SymbolSet const& s) {
      return std::all_of(w.begin(), w.end(), [&](Letter const& l) {
        return s.contains(l.symbol);
      });
    }

    SymbolSet to_set(std::set<Symbol> const& s) {
      return SymbolSet(s.begin(), s.end());
    }

    std::vector<Symbol> sorted_support(Word const& w) {
      auto s = support(w);
      return {s.begin(), s.end()};
    }

    std::int64_t iabs(std::int64_t x) {
      return x < 0 ? -x : x;
    }

    // Floor-style remainder in [0, m).
    std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
      auto r = a % m;
      return r < 0 ? r + m : r;
    }

    ////////////////////////////////////////////////////////////////////////
    // Choices
    ////////////////////////////////////////////////////////////////////////

    // Balanced generator with fewest occurrences, ties by name.
    std::optional<Symbol> choose_balanced(Word const&                r,
                                          std::vector<Symbol> const& letters) {
      std::optional<Symbol> best;
      std::size_t           best_occ = 0;
      for (auto s : letters) {
        if (exponent_sum(r, s) != 0) {
          continue;
        }
        auto occ = occurrences(r, s);
        if (!best || occ < best_occ) {
          best     = s;
          best_occ = occ;
        }
      }
      return best;
    }

    // Smallest |sigma|, ties by name.
    Symbol choose_by_sigma(Word const& r, std::vector<Symbol> const& cands) {
      Symbol       best = cands.front();
      std::int64_t key  = iabs(exponent_sum(r, best));
      for (auto s : cands) {
        auto k = iabs(exponent_sum(r, s));
        if (k < key) {
          best = s;
          key  = k;
        }
      }
      return best;
    }

    ////////////////////////////////////////////////////////////////////////
    // Construction of the HNN structure and the embedding
    ////////////////////////////////////////////////////////////////////////

    HnnPresentation make_hnn_impl(Word const&                r,
                                  Symbol                     t,
                                  Symbol                     b,
                                  std::vector<Symbol> const& generators) {
      HnnPresentation h;
      h.stable        = t;
      h.distinguished = b;
      Word s          = rewrite_balanced(r, t).word;
      bool seen       = false;
      for (auto const& l : s) {
        if (l.symbol.family() == b) {
          auto i = *l.symbol.subscript();
          h.mu   = seen ? std::min(h.mu, i) : i;
          h.M    = seen ? std::max(h.M, i) : i;
          seen   = true;
        }
      }
      // b_0 must lie in J: shift s (a conjugate of r by a power of t).
      std::int64_t d = h.mu > 0 ? -h.mu : (h.M < 0 ? -h.M : 0);
      if (d != 0) {
        s = shift_all_subscripts(s, d);
        h.mu += d;
        h.M += d;
      }
      std::vector<Symbol> gens = sorted_support(s);
      for (auto i = h.mu; i <= h.M; ++i) {
        gens.push_back(b.subscripted(i));
      }
      for (auto g : generators) {
        if (g != t && g != b) {
          h.families.push_back(g);
        }
      }
      std::sort(h.families.begin(), h.families.end());
      h.base = OneRelatorPresentation(std::move(gens), std::move(s));
      return h;
    }

    std::pair<Symbol, Symbol> fresh_pair(std::set<std::string> const& used) {
      static constexpr std::array<std::array<char const*, 2>, 3> pool
          = {{{"x", "y"}, {"u", "v"}, {"p", "q"}}};
      for (auto const& [x, y] : pool) {
        if (!used.contains(x) && !used.contains(y)) {
          return {Symbol::intern(x), Symbol::intern(y)};
        }
      }
      for (int k = 1;; ++k) {
        auto x = "x" + std::to_string(k), y = "y" + std::to_string(k);
        if (!used.contains(x) && !used.contains(y)) {
          return {Symbol::intern(x), Symbol::intern(y)};
        }
      }
    }

    Embedding embed_impl(Word const&                r,
                         Symbol                     t,
                         Symbol                     b,
                         std::vector<Symbol> const& generators) {
      Embedding e;
      e.t     = t;
      e.b     = b;
      e.alpha = exponent_sum(r, t);
      e.beta  = exponent_sum(r, b);
      std::set<std::string> used;
      for (auto g : generators) {
        used.insert(g.base());
      }
      for (auto const& l : r) {
        used.insert(l.symbol.base());
      }
      std::tie(e.x, e.y) = fresh_pair(used);
      e.psi[t]           = Word::letter(e.y) * Word::power_of(e.x, -e.beta);
      e.psi[b]           = Word::power_of(e.x, e.alpha);
      Word r1            = cyclic_reduce(substitute(r, e.psi)).core;
      std::vector<Symbol> gens;
      for (auto g : generators) {
        if (g != t && g != b) {
          gens.push_back(g);
        }
      }
      gens.push_back(e.x);
      gens.push_back(e.y);
      e.target = OneRelatorPresentation(std::move(gens), std::move(r1));
      return e;
    }

    ////////////////////////////////////////////////////////////////////////
    // Recursive membership
    ////////////////////////////////////////////////////////////////////////

    std::optional<Word> member_impl(Word const&      r,
                                    SymbolSet const& Y,
                                    Word const&      w0,
                                    Context&         ctx,
                                    std::size_t      depth);

    HnnWord britton_impl(HnnPresentation const& h,
                         HnnWord const&         w,
                         Context&               ctx,
                         std::size_t            depth);

    bool is_trivial_impl(Word const& r,
                         Word const& w,
                         Context&    ctx,
                         std::size_t depth) {
      static SymbolSet const none;
      return member_impl(r, none, w, ctx, depth).has_value();
    }

    // G = <R | r> * F(others); w has letters outside R.
    std::optional<Word> member_free_split(Word const&      r,
                                          SymbolSet const& R,
                                          SymbolSet const& Y,
                                          Word const&      w,
                                          Context&         ctx,
                                          std::size_t      depth) {
      struct Syllable {
        bool core;
        Word word;
      };
      std::vector<Syllable> stack;
      auto                  nontrivial = [&](Syllable const& s) {
        return s.core ? !is_trivial_impl(r, s.word, ctx, depth)
                                       : !s.word.empty();
      };
      for (std::size_t i = 0; i < w.size();) {
        bool        core = R.contains(w[i].symbol);
        std::size_t j    = i;
        while (j < w.size() && R.contains(w[j].symbol) == core) {
          ++j;
        }
        Syllable next{core, w.subword(i, j - i)};
        i = j;
        if (!stack.empty() && stack.back().core == core) {
          stack.back().word = free_reduce(stack.back().word * next.word);
          if (!nontrivial(stack.back())) {
            stack.pop_back();
          }
        } else if (nontrivial(next)) {
          stack.push_back(std::move(next));
        }
      }
      bool      whole_core = std::all_of(R.begin(), R.end(),
                                    [&](Symbol s) { return Y.contains(s); });
      SymbolSet Y_core;
      for (auto s : Y) {
        if (R.contains(s)) {
          Y_core.insert(s);
        }
      }
      Word out;
      for (auto const& s : stack) {
        if (!s.core) {
          if (!all_in(s.word, Y)) {
            return std::nullopt;
          }
          out *= s.word;
        } else if (whole_core) {
          out *= s.word;
        } else {
          auto v = member_impl(r, Y_core, s.word, ctx, depth);
          if (!v) {
            return std::nullopt;
          }
          out *= *v;
        }
      }
      return free_reduce(out);
    }

    // Result: nullopt = shortcut not applicable.
    std::optional<std::optional<Word>> try_tietze(Word const&                r,
                                                  std::vector<Symbol> const& R,
                                                  SymbolSet const&           Y,
                                                  Word const&                w) {
      std::optional<Symbol> c;
      for (auto s : R) {
        if (occurrences(r, s) == 1 && (!c || (Y.contains(*c) && !Y.contains(s)))) {
          c = s;
        }
      }
      if (!c) {
        return std::nullopt;
      }
      std::size_t pos = 0;
      while (r[pos].symbol != *c) {
        ++pos;
      }
      Word rot   = r.rotated(pos);
      Word u     = rot.subword(1, rot.size() - 1);
      Word image = rot[0].sign == 1 ? u.inverse() : u;  // c = image
      Word w1    = substitute(w, Substitution{{*c, image}});
      if (!Y.contains(*c)) {
        return all_in(w1, Y) ? std::optional<Word>(w1) : std::nullopt;
      }
      // c in Y: supported when c = z^k for a letter z outside Y.
      auto sup = support(image);
      if (sup.size() != 1 || Y.contains(*sup.begin())) {
        return std::nullopt;
      }
      Symbol       z = *sup.begin();
      std::int64_t k = exponent_sum(image, z);
      if (iabs(k) != static_cast<std::int64_t>(image.size())) {
        return std::nullopt;
      }
      Word out;
      for (std::size_t i = 0; i < w1.size();) {
        if (w1[i].symbol != z) {
          if (!Y.contains(w1[i].symbol)) {
            return std::optional<Word>();
          }
          out.push_back(w1[i++]);
          continue;
        }
        std::size_t j = i;
        while (j < w1.size() && w1[j] == w1[i]) {
          ++j;
        }
        auto run = static_cast<std::int64_t>(j - i) * w1[i].sign;
        if (run % k != 0) {
          return std::optional<Word>();
        }
        out *= Word::power_of(*c, run / k);
        i = j;
      }
      return std::optional<Word>(free_reduce(out));
    }

    std::optional<Word> member_balanced(Word const&                r,
                                        std::vector<Symbol> const& R,
                                        SymbolSet const&           Y,
                                        Word const&                w,
                                        Symbol                     t,
                                        Context&                   ctx,
                                        std::size_t                depth) {
      bool                  t_in_Y = Y.contains(t);
      std::optional<Symbol> b;
      for (auto s : R) {
        if (s != t && !(t_in_Y && Y.contains(s))) {
          b = s;
          break;
        }
      }
      auto         h = make_hnn_impl(r, t, *b, R);
      std::int64_t n = t_in_Y ? exponent_sum(w, t) : 0;
      Word         target = h.to_hnn(w) * Word::power_of(t, -n);
      HnnWord red = britton_impl(h, HnnWord::from_word(target, t), ctx, depth);
      if (red.hnn_length() > 0) {
        return std::nullopt;
      }
      Word const& g = red.segments[0];
      SymbolSet   Yq;
      auto        consider = [&](Symbol s) {
        auto i = s.subscript();
        if (!i || !Y.contains(s.family())) {
          return;
        }
        if (t_in_Y || *i == 0) {
          Yq.insert(s);
        }
      };
      for (auto const& l : h.relator()) {
        consider(l.symbol);
      }
      for (auto const& l : g) {
        consider(l.symbol);
      }
      auto v = member_impl(h.relator(), Yq, g, ctx, depth + 1);
      if (!v) {
        return std::nullopt;
      }
      return free_reduce(h.from_hnn(*v) * Word::power_of(t, n));
    }

    std::optional<Word> member_unbalanced(Word const&                r,
                                          std::vector<Symbol> const& R,
                                          SymbolSet const&           Y,
                                          Word const&                w,
                                          Context&                   ctx,
                                          std::size_t                depth) {
      std::vector<Symbol> outside;
      for (auto s : R) {
        if (!Y.contains(s)) {
          outside.push_back(s);
        }
      }
      Symbol              t = choose_by_sigma(r, outside);
      std::vector<Symbol> rest;
      for (auto s : R) {
        if (s != t) {
          rest.push_back(s);
        }
      }
      Symbol    b  = choose_by_sigma(r, rest);
      Embedding e  = embed_impl(r, t, b, R);
      Word      wc = substitute(w, e.psi);
      SymbolSet Yc;
      for (auto s : Y) {
        if (s != t && s != b) {
          Yc.insert(s);
        }
      }
      if (!Y.contains(b)) {
        return member_impl(e.target.relator, Yc, wc, ctx, depth + 1);
      }
      Yc.insert(e.x);
      auto v = member_impl(e.target.relator, Yc, wc, ctx, depth + 1);
      if (!v) {
        return std::nullopt;
      }
      // <x^alpha, Y \ b> inside the free group on Yc.
      Word out;
      for (std::size_t i = 0; i < v->size();) {
        if ((*v)[i].symbol != e.x) {
          out.push_back((*v)[i++]);
          continue;
        }
        std::size_t j = i;
        while (j < v->size() && (*v)[j] == (*v)[i]) {
          ++j;
        }
        auto run = static_cast<std::int64_t>(j - i) * (*v)[i].sign;
        if (run % e.alpha != 0) {
          return std::nullopt;
        }
        out *= Word::power_of(b, run / e.alpha);
        i = j;
      }
      return free_reduce(out);
    }

    std::optional<Word> member_impl(Word const&      r,
                                    SymbolSet const& Y,
                                    Word const&      w0,
                                    Context&         ctx,
                                    std::size_t      depth) {
      ctx.meter.check_depth(depth);
      ctx.meter.step();
      Word w = free_reduce(w0);
      ctx.meter.check_length(w.size());
      if (all_in(w, Y)) {
        return w;
      }
      if (r.empty()) {
        return std::nullopt;
      }
      std::vector<Symbol> R = sorted_support(r);
      SymbolSet           Rset(R.begin(), R.end());
      if (!all_in(w, Rset)) {
        return member_free_split(r, Rset, Y, w, ctx, depth);
      }
      if (std::any_of(Y.begin(), Y.end(),
                      [&](Symbol s) { return !Rset.contains(s); })) {
        // Letters outside the relator cannot help and could collide with
        // fresh names further down.
        SymbolSet Yr;
        for (auto s : Y) {
          if (Rset.contains(s)) {
            Yr.insert(s);
          }
        }
        return member_impl(r, Yr, w, ctx, depth);
      }
      if (std::all_of(R.begin(), R.end(),
                      [&](Symbol s) { return Y.contains(s); })) {
        return w;
      }
      if (R.size() == 1) {
        // <a | a^n>, Y omits a.
        auto n = iabs(exponent_sum(r, R[0]));
        auto k = exponent_sum(w, R[0]);
        return k % n == 0 ? std::optional<Word>(Word()) : std::nullopt;
      }
      if (ctx.options.tietze_shortcut) {
        if (auto res = try_tietze(r, R, Y, w)) {
          return *res;
        }
      }
      if (auto t = choose_balanced(r, R)) {
        return member_balanced(r, R, Y, w, *t, ctx, depth);
      }
      return member_unbalanced(r, R, Y, w, ctx, depth);
    }

    std::optional<Word> in_associated(HnnPresentation const& h,
                                      Word const&            g,
                                      bool                   L_side,
                                      Context&               ctx,
                                      std::size_t            depth) {
      SymbolSet gens;
      auto      consider = [&](Letter const& l) {
        if (L_side ? h.is_L_generator(l.symbol) : h.is_K_generator(l.symbol)) {
          gens.insert(l.symbol);
        }
      };
      std::for_each(g.begin(), g.end(), consider);
      if (all_in(g, gens)) {
        return g;
      }
      std::for_each(h.relator().begin(), h.relator().end(), consider);
      return member_impl(h.relator(), gens, g, ctx, depth + 1);
    }

    HnnWord britton_impl(HnnPresentation const& h,
                         HnnWord const&         w,
                         Context&               ctx,
                         std::size_t            depth) {
      HnnWord out;
      out.segments[0] = free_reduce(w.segments[0]);
      for (std::size_t i = 0; i < w.exponents.size(); ++i) {
        int e = w.exponents[i];
        ctx.meter.step();
        bool pinched = false;
        if (!out.exponents.empty() && out.exponents.back() == -e) {
          Word const& g = out.segments.back();
          // L side first: t^-1 g t with g in L.
          std::optional<Word> image;
          if (out.exponents.back() == -1) {
            if (auto v = in_associated(h, g, true, ctx, depth)) {
              image = h.theta(*v);
            }
          } else if (auto v = in_associated(h, g, false, ctx, depth)) {
            image = h.theta_inverse(*v);
          }
          if (image) {
            pinched = true;
            out.segments.pop_back();
            out.exponents.pop_back();
            out.segments.back() = free_reduce(out.segments.back() * *image);
          }
        }
        if (!pinched) {
          out.exponents.push_back(e);
          out.segments.emplace_back();
        }
        out.segments.back()
            = free_reduce(out.segments.back() * w.segments[i + 1]);
        ctx.meter.check_length(out.segments.back().size());
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Decomposition
    ////////////////////////////////////////////////////////////////////////

    TracePtr decompose_impl(OneRelatorPresentation const& p,
                            BudgetMeter&                  meter,
                            std::size_t                   depth) {
      meter.check_depth(depth);
      meter.step();
      auto        node  = std::make_shared<DecompositionTrace>();
      node->group       = p;
      Word const& r     = p.relator;
      if (r.empty()) {
        node->step = BaseFree{};
        return node;
      }
      auto                rel = support(r);
      std::vector<Symbol> R(rel.begin(), rel.end());
      if (R.size() != p.generators.size() || !p.families.empty()) {
        auto split = split_free_factors(p);
        node->step = FreeSplit{split.core, split.free_part, p.families};
        node->child = decompose_impl(split.core, meter, depth);
        return node;
      }
      if (R.size() == 1) {
        node->step = BaseSingleGenerator{R[0], exponent_sum(r, R[0])};
        return node;
      }
      if (auto t = choose_balanced(r, R)) {
        Symbol b = *t == R[0] ? R[1] : R[0];
        auto   h = make_hnn_impl(r, *t, b, R);
        node->child = decompose_impl(h.base, meter, depth + 1);
        node->step  = Balanced{std::move(h)};
        return node;
      }
      Symbol              t = choose_by_sigma(r, R);
      std::vector<Symbol> rest;
      for (auto s : R) {
        if (s != t) {
          rest.push_back(s);
        }
      }
      auto e      = embed_impl(r, t, choose_by_sigma(r, rest), R);
      node->child = decompose_impl(e.target, meter, depth + 1);
      node->step  = UnbalancedEmbed{std::move(e)};
      return node;
    }

    std::size_t relator_length(DecompositionTrace const& t) {
      return t.group.relator.size();
    }

    void collect_edges(DecompositionTrace const& t,
                       std::vector<DescentEdge>& out) {
      if (auto const* bal = std::get_if<Balanced>(&t.step)) {
        out.push_back({"balanced(" + bal->hnn.stable.name() + ")",
                       relator_length(t), relator_length(*t.child)});
      } else if (auto const* unb = std::get_if<UnbalancedEmbed>(&t.step)) {
        auto const* c = t.child.get();
        while (std::holds_alternative<FreeSplit>(c->step)) {
          c = c->child.get();
        }
        std::size_t next = std::holds_alternative<Balanced>(c->step)
                               ? relator_length(*c->child)
                               : relator_length(*c);
        out.push_back({"unbalanced(" + unb->embedding.t.name() + ","
                           + unb->embedding.b.name() + ")",
                       relator_length(t), next});
      }
      if (t.child) {
        collect_edges(*t.child, out);
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Free-base model for normal forms
    ////////////////////////////////////////////////////////////////////////

    // A subgroup of a free group generated by powers z^k of distinct basis
    // letters z, each coming from one generator of K or L.
    struct PowerSubgroup {
      struct Entry {
        std::int64_t k;
        Symbol       generator;
      };
      std::map<Symbol, Entry> entries;

      // Splits g = h * rep, h in the subgroup, rep the canonical
      // representative of the right coset.  Returns h over the generators.
      std::pair<Word, Word> split(Word const& g) const {
        Word        h;
        std::size_t i = 0;
        while (i < g.size()) {
          auto it = entries.find(g[i].symbol);
          if (it == entries.end()) {
            break;
          }
          std::size_t j = i;
          while (j < g.size() && g[j] == g[i]) {
            ++j;
          }
          auto e     = static_cast<std::int64_t>(j - i) * g[i].sign;
          auto k     = it->second.k;
          auto rem   = mod_floor(e, iabs(k));
          auto taken = e - rem;
          h *= Word::power_of(it->second.generator, taken / k);
          if (rem != 0) {
            Word rep = Word::power_of(g[i].symbol, rem)
                       * g.subword(j, g.size() - j);
            return {h, rep};
          }
          i = j;
        }
        return {h, g.subword(i, g.size() - i)};
      }
    };

    struct FreeBaseModel {
      Symbol        eliminated;
      Word          image;  // eliminated = image in the basis
      PowerSubgroup K, L;

      Word to_basis(Word const& w) const {
        return substitute(w, Substitution{{eliminated, image}});
      }
    };

    std::optional<PowerSubgroup> power_subgroup(
        std::vector<Symbol> const& gens,
        Symbol                     eliminated,
        Word const&                image) {
      PowerSubgroup out;
      for (auto g : gens) {
        Word img = g == eliminated ? image : Word::letter(g);
        auto sup = support(img);
        if (sup.size() != 1) {
          return std::nullopt;
        }
        Symbol z = *sup.begin();
        auto   k = exponent_sum(img, z);
        if (iabs(k) != static_cast<std::int64_t>(img.size())
            || out.entries.contains(z)) {
          return std::nullopt;
        }
        out.entries.emplace(z, PowerSubgroup::Entry{k, g});
      }
      return out;
    }

    FreeBaseModel free_base_model(HnnPresentation const& h) {
      if (!h.families.empty()) {
        throw UnsupportedBase(
            "normal forms need a base generated by the b_i alone");
      }
      Word const& s = h.relator();
      // Highest letter first, so the basis keeps the low subscripts.
      auto const& gens = h.base.generators;
      for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
        Symbol c = *it;
        if (occurrences(s, c) != 1) {
          continue;
        }
        std::size_t pos = 0;
        while (s[pos].symbol != c) {
          ++pos;
        }
        Word rot   = s.rotated(pos);
        Word u     = rot.subword(1, rot.size() - 1);
        Word image = rot[0].sign == 1 ? u.inverse() : u;
        auto K     = power_subgroup(h.assoc_K(), c, image);
        auto L     = power_subgroup(h.assoc_L(), c, image);
        if (K && L) {
          return {c, image, std::move(*K), std::move(*L)};
        }
      }
      throw UnsupportedBase("base group " + to_string(h.base)
                            + " is not recognisably free with supported "
                              "associated subgroups");
    }

  }  // namespace

  //////////////////////////////////////////////////////////////////////////
  // HnnPresentation
  //////////////////////////////////////////////////////////////////////////

  bool HnnPresentation::is_K_generator(Symbol s) const {
    auto i = s.subscript();
    if (!i) {
      return false;
    }
    auto f = s.family();
    if (f == distinguished) {
      return mu <= *i && *i < M;
    }
    return std::binary_search(families.begin(), families.end(), f);
  }

  bool HnnPresentation::is_L_generator(Symbol s) const {
    auto i = s.subscript();
    if (!i) {
      return false;
    }
    auto f = s.family();
    if (f == distinguished) {
      return mu < *i && *i <= M;
    }
    return std::binary_search(families.begin(), families.end(), f);
  }

  std::vector<Symbol> HnnPresentation::assoc_K() const {
    std::vector<Symbol> out;
    for (auto s : base.generators) {
      if (is_K_generator(s)) {
        out.push_back(s);
      }
    }
    return out;
  }

  std::vector<Symbol> HnnPresentation::assoc_L() const {
    std::vector<Symbol> out;
    for (auto s : base.generators) {
      if (is_L_generator(s)) {
        out.push_back(s);
      }
    }
    return out;
  }

  Word HnnPresentation::theta(Word const& w) const {
    for (auto const& l : w) {
      if (!is_L_generator(l.symbol)) {
        throw std::invalid_argument("Theta applied outside L: "
                                    + l.symbol.name());
      }
    }
    return shift_all_subscripts(w, -1);
  }

  Word HnnPresentation::theta_inverse(Word const& w) const {
    for (auto const& l : w) {
      if (!is_K_generator(l.symbol)) {
        throw std::invalid_argument("Theta^-1 applied outside K: "
                                    + l.symbol.name());
      }
    }
    return shift_all_subscripts(w, 1);
  }

  Word HnnPresentation::to_hnn(Word const& w) const {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto const& l : w) {
      if (l.symbol == stable) {
        out.push_back(l);
      } else {
        out.push_back({l.symbol.subscripted(0), l.sign});
      }
    }
    return Word(std::move(out));
  }

  Word HnnPresentation::from_hnn(Word const& w) const {
    return expand_balanced(w, stable);
  }

  HnnPresentation make_hnn(OneRelatorPresentation const& p,
                           Symbol                        t,
                           Symbol                        b) {
    auto checked = validate(p).presentation;
    auto const& r = checked.relator;
    if (t == b) {
      throw std::invalid_argument("stable letter and b must differ");
    }
    if (occurrences(r, t) == 0 || occurrences(r, b) == 0) {
      throw std::invalid_argument("both letters must occur in the relator");
    }
    if (exponent_sum(r, t) != 0) {
      throw std::invalid_argument(t.name() + " is not balanced in the relator");
    }
    return make_hnn_impl(r, t, b, checked.generators);
  }

  //////////////////////////////////////////////////////////////////////////
  // HnnWord
  //////////////////////////////////////////////////////////////////////////

  HnnWord HnnWord::from_word(Word const& w, Symbol stable) {
    HnnWord out;
    for (auto const& l : w) {
      if (l.symbol == stable) {
        out.exponents.push_back(l.sign);
        out.segments.emplace_back();
      } else {
        out.segments.back().push_back(l);
      }
    }
    return out;
  }

  Word HnnWord::to_word(Symbol stable) const {
    Word out = segments[0];
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      out.push_back({stable, exponents[i]});
      out *= segments[i + 1];
    }
    return out;
  }

  std::string to_string(HnnWord const& w, Symbol stable) {
    return to_string(w.to_word(stable));
  }

  HnnWord britton_reduce(HnnPresentation const& h,
                         HnnWord const&         w,
                         Budget                 budget,
                         EngineOptions const&   options) {
    Context ctx{BudgetMeter(budget), options};
    return britton_impl(h, w, ctx, 0);
  }

  std::vector<Symbol> normal_form_basis(HnnPresentation const& h) {
    auto                model = free_base_model(h);
    std::vector<Symbol> out;
    for (auto s : h.base.generators) {
      if (s != model.eliminated) {
        out.push_back(s);
      }
    }
    return out;
  }

  HnnWord normal_form(HnnPresentation const& h,
                      HnnWord const&         w,
                      Budget                 budget) {
    auto    model = free_base_model(h);
    HnnWord red   = britton_reduce(h, w, budget);
    for (auto& g : red.segments) {
      g = model.to_basis(g);
    }
    for (std::size_t i = red.exponents.size(); i > 0; --i) {
      bool before_inverse = red.exponents[i - 1] == -1;
      auto [part, rep]    = (before_inverse ? model.L : model.K)
                             .split(red.segments[i]);
      Word moved = before_inverse ? h.theta(part) : h.theta_inverse(part);
      red.segments[i]     = rep;
      red.segments[i - 1] = free_reduce(red.segments[i - 1]
                                        * model.to_basis(moved));
    }
    return red;
  }

  std::optional<BaseConjugate> conjugate_into_base(HnnPresentation const& h,
                                                   HnnWord const&         w,
                                                   Budget budget) {
    Context ctx{BudgetMeter(budget), EngineOptions{}};
    HnnWord current = britton_impl(h, w, ctx, 0);
    Word    conj;  // as a word over J and t
    while (current.hnn_length() > 0) {
      std::size_t k = current.hnn_length();
      // current = P Q with Q = t^e_k g_k; Q P = P^-1 current P.
      HnnWord p;
      p.segments  = {current.segments.begin(), current.segments.end() - 1};
      p.exponents = {current.exponents.begin(), current.exponents.end() - 1};
      Word P      = p.to_word(h.stable);
      Word Q      = Word({Letter{h.stable, current.exponents.back()}})
               * current.segments.back();
      conj *= P;
      HnnWord next
          = britton_impl(h, HnnWord::from_word(Q * P, h.stable), ctx, 0);
      if (next.hnn_length() >= k) {
        return std::nullopt;
      }
      current = std::move(next);
    }
    return BaseConjugate{HnnWord::from_word(free_reduce(conj), h.stable),
                         current.segments[0]};
  }

  //////////////////////////////////////////////////////////////////////////
  // Embedding and decomposition
  //////////////////////////////////////////////////////////////////////////

  Embedding embed_psi(OneRelatorPresentation const& p, Symbol t, Symbol b) {
    auto        checked = validate(p).presentation;
    auto const& r       = checked.relator;
    if (t == b) {
      throw std::invalid_argument("t and b must differ");
    }
    if (occurrences(r, t) == 0 || occurrences(r, b) == 0) {
      throw std::invalid_argument("both letters must occur in the relator");
    }
    if (exponent_sum(r, t) == 0 || exponent_sum(r, b) == 0) {
      throw std::invalid_argument(
          "a balanced letter is handled by the HNN decomposition directly");
    }
    return embed_impl(r, t, b, checked.generators);
  }

  std::string_view DecompositionTrace::case_name() const {
    return std::visit(
        [](auto const& s) -> std::string_view {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, BaseFree>) {
            return "base_free";
          } else if constexpr (std::is_same_v<T, BaseSingleGenerator>) {
            return "base_single_generator";
          } else if constexpr (std::is_same_v<T, FreeSplit>) {
            return "free_split";
          } else if constexpr (std::is_same_v<T, Balanced>) {
            return "balanced";
          } else {
            return "unbalanced_embed";
          }
        },
        step);
  }

  TracePtr decompose(OneRelatorPresentation const& p, Budget budget) {
    BudgetMeter meter(budget);
    return decompose_impl(validate(p).presentation, meter, 0);
  }

  std::vector<DescentEdge> descent_edges(DecompositionTrace const& trace) {
    std::vector<DescentEdge> out;
    collect_edges(trace, out);
    return out;
  }

  //////////////////////////////////////////////////////////////////////////
  // Queries
  //////////////////////////////////////////////////////////////////////////

  bool is_identity(OneRelatorPresentation const& p,
                   Word const&                   w,
                   Budget                        budget,
                   EngineOptions const&          options) {
    auto checked = validate(p).presentation;
    checked.check_letters(w);
    Context ctx{BudgetMeter(budget), options};
    return is_trivial_impl(checked.relator, w, ctx, 0);
  }

  std::optional<Word> magnus_member(OneRelatorPresentation const& p,
                                    std::set<Symbol> const&       Y,
                                    Word const&                   w,
                                    Budget                        budget,
                                    EngineOptions const&          options) {
    auto checked = validate(p).presentation;
    checked.check_letters(w);
    classify_subset(checked, Y);
    Context ctx{BudgetMeter(budget), options};
    return member_impl(checked.relator, to_set(Y), w, ctx, 0);
  }

  std::optional<Word> alpha_subgroup_member(std::set<Symbol> const& Y,
                                            Symbol                  x,
                                            std::int64_t            alpha,
                                            Word const&             w,
                                            Symbol generator) {
    if (alpha <= 0) {
      throw std::invalid_argument("alpha must be positive");
    }
    Word out;
    for (std::size_t i = 0; i < w.size();) {
      if (!Y.contains(w[i].symbol)) {
        return std::nullopt;
      }
      if (w[i].symbol != x) {
        out.push_back(w[i++]);
        continue;
      }
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      auto run = static_cast<std::int64_t>(j - i);
      if (run % alpha != 0) {
        return std::nullopt;
      }
      out *= Word::power_of(generator, w[i].sign * run / alpha);
      i = j;
    }
    return out;
  }

}  // namespace magnus
