#include "magnus/free_product.hpp"

#include <algorithm>
#include <set>

#include "magnus/engine.hpp"

namespace magnus {

  Factor::Factor(OneRelatorPresentation p)
      : _p(validate(p).presentation), _kind(Kind::one_relator) {
    auto const& r = _p.relator;
    if (r.empty()) {
      _kind = Kind::free;
      return;
    }
    auto sup = support(r);
    auto pr  = primitive_root(r);
    _torsion = pr.power;
    if (sup.size() == 1 && _p.generators.size() == 1 && _p.families.empty()) {
      _kind = Kind::cyclic;
    }
  }

  Factor Factor::free(std::vector<Symbol> generators) {
    return Factor(OneRelatorPresentation(std::move(generators), Word()));
  }

  Factor Factor::cyclic(Symbol generator, std::int64_t order) {
    if (order < 1) {
      throw std::invalid_argument("cyclic factor order must be positive");
    }
    return Factor(
        OneRelatorPresentation({generator}, Word::power_of(generator, order)));
  }

  bool Factor::is_trivial(Word const& w, Budget const& budget) const {
    switch (_kind) {
      case Kind::free:
        return free_reduce(w).empty();
      case Kind::cyclic:
        return canonical(w).empty();
      case Kind::one_relator:
        return is_identity(_p, w, budget);
    }
    return false;
  }

  Word Factor::canonical(Word const& w) const {
    if (_kind != Kind::cyclic) {
      return free_reduce(w);
    }
    Symbol a = _p.generators.front();
    auto   k = exponent_sum(w, a) % _torsion;
    return Word::power_of(a, k < 0 ? k + _torsion : k);
  }

  bool Factor::is_torsion(Word const& w, Budget const& budget) const {
    if (_torsion == 1) {
      return is_trivial(w, budget);
    }
    return is_trivial(w.power(_torsion), budget);
  }

  FreeProduct::FreeProduct(std::vector<Factor> factors)
      : _factors(std::move(factors)) {
    std::set<std::string> seen;
    for (auto const& f : _factors) {
      auto const& p = f.presentation();
      for (auto s : p.generators) {
        if (!seen.insert(s.name()).second) {
          throw std::invalid_argument("generator " + s.name()
                                      + " occurs in two factors");
        }
      }
      for (auto s : p.families) {
        if (!seen.insert(s.name() + "_*").second) {
          throw std::invalid_argument("family " + s.name()
                                      + " occurs in two factors");
        }
      }
    }
  }

  std::size_t FreeProduct::factor_of(Symbol s) const {
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      if (_factors[i].contains(s)) {
        return i;
      }
    }
    throw PresentationError("letter " + s.name() + " lies in no factor");
  }

  AlternatingWord fp_normal_form(FreeProduct const&           fp,
                                 std::vector<Syllable> const& parts,
                                 Budget const&                budget) {
    AlternatingWord out;
    for (auto const& part : parts) {
      auto const& f = fp.factor(part.factor);
      for (auto const& l : part.element) {
        if (!f.contains(l.symbol)) {
          throw PresentationError("letter " + l.symbol.name()
                                  + " is not in factor "
                                  + std::to_string(part.factor));
        }
      }
      if (!out.empty() && out.back().factor == part.factor) {
        Word merged = f.canonical(out.back().element * part.element);
        out.pop_back();
        if (!f.is_trivial(merged, budget)) {
          out.push_back({part.factor, std::move(merged)});
        }
      } else if (!f.is_trivial(part.element, budget)) {
        out.push_back({part.factor, f.canonical(part.element)});
      }
    }
    return out;
  }

  AlternatingWord fp_normal_form(FreeProduct const& fp,
                                 Word const&        w,
                                 Budget const&      budget) {
    std::vector<Syllable> parts;
    for (auto const& l : w) {
      auto f = fp.factor_of(l.symbol);
      if (parts.empty() || parts.back().factor != f) {
        parts.push_back({f, Word()});
      }
      parts.back().element.push_back(l);
    }
    return fp_normal_form(fp, parts, budget);
  }

  Word to_word(AlternatingWord const& w) {
    Word out;
    for (auto const& s : w) {
      out *= s.element;
    }
    return out;
  }

  AlternatingWord inverse(AlternatingWord const& w) {
    AlternatingWord out(w.rbegin(), w.rend());
    for (auto& s : out) {
      s.element = s.element.inverse();
    }
    return out;
  }

  AlternatingWord fp_power(FreeProduct const&     fp,
                           AlternatingWord const& g,
                           std::int64_t           n,
                           Budget const&          budget) {
    AlternatingWord base = n < 0 ? inverse(g) : g;
    std::vector<Syllable> parts;
    for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) {
      parts.insert(parts.end(), base.begin(), base.end());
    }
    return fp_normal_form(fp, parts, budget);
  }

  std::string to_string(AlternatingWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& s : w) {
      out += "(" + to_string(s.element) + ")";
    }
    return out;
  }

  PowerClassification power_in_factor(FreeProduct const&     fp,
                                      AlternatingWord const& g,
                                      std::int64_t           n,
                                      std::size_t            target,
                                      Budget const&          budget) {
    if (n < 1) {
      throw std::invalid_argument("exponent must be at least 1");
    }
    if (target >= fp.factors().size()) {
      throw std::invalid_argument("no factor " + std::to_string(target));
    }
    auto gn = fp_power(fp, g, n, budget);
    if (gn.size() > 1 || (gn.size() == 1 && gn[0].factor != target)) {
      throw PowerPrecondition("g^" + std::to_string(n) + " = " + to_string(gn)
                              + " is not in factor "
                              + std::to_string(target));
    }
    AlternatingWord core = fp_normal_form(fp, g, budget);
    if (core.empty()) {
      return InFactor{Word()};
    }
    // Cyclic reduction at the level of syllables.
    AlternatingWord conj;
    while (core.size() >= 2 && core.front().factor == core.back().factor) {
      Syllable first = core.front();
      conj.push_back(first);
      std::vector<Syllable> parts(core.begin() + 1, core.end());
      parts.push_back(first);
      core = fp_normal_form(fp, parts, budget);
    }
    if (core.size() != 1) {
      return Contradiction{"cyclically reduced core " + to_string(core)
                           + " has length " + std::to_string(core.size())};
    }
    Syllable const& v0 = core.front();
    if (fp.factor(v0.factor).is_torsion(v0.element, budget)) {
      return ConjugateTorsion{fp_normal_form(fp, conj, budget), v0};
    }
    if (conj.empty() && v0.factor == target) {
      return InFactor{v0.element};
    }
    return Contradiction{"non-torsion core " + to_string(core)
                         + " conjugated by " + to_string(conj)};
  }

}  // namespace magnus
