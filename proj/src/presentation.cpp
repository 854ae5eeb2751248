#include "magnus/presentation.hpp"

#include <algorithm>

namespace magnus {

  OneRelatorPresentation::OneRelatorPresentation(std::vector<Symbol> gens,
                                                 Word                rel,
                                                 std::vector<Symbol> fams)
      : generators(std::move(gens)),
        relator(std::move(rel)),
        families(std::move(fams)) {
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()),
                     generators.end());
    std::sort(families.begin(), families.end());
    families.erase(std::unique(families.begin(), families.end()),
                   families.end());
  }

  bool OneRelatorPresentation::is_generator(Symbol s) const {
    if (std::binary_search(generators.begin(), generators.end(), s)) {
      return true;
    }
    return s.subscript()
           && std::binary_search(families.begin(), families.end(),
                                 s.family());
  }

  void OneRelatorPresentation::check_letters(Word const& w) const {
    for (auto const& l : w) {
      if (!is_generator(l.symbol)) {
        throw PresentationError("unknown generator " + l.symbol.name());
      }
    }
  }

  OneRelatorPresentation parse_presentation(std::string_view text) {
    detail::Scanner     sc(text);
    std::vector<Symbol> gens, fams;
    sc.expect('<');
    if (sc.peek() != '|') {
      do {
        auto s = detail::parse_symbol(sc);
        if (sc.consume('_')) {
          sc.expect('*');
          fams.push_back(s);
        } else {
          gens.push_back(s);
        }
      } while (sc.consume(','));
    }
    sc.expect('|');
    Word rel = detail::parse_word(sc, ">");
    sc.expect('>');
    if (!sc.at_end()) {
      sc.fail("unexpected text after presentation");
    }
    return OneRelatorPresentation(std::move(gens), std::move(rel),
                                  std::move(fams));
  }

  std::string to_string(OneRelatorPresentation const& p) {
    std::string out = "<";
    bool        first = true;
    for (auto s : p.generators) {
      out += first ? "" : ", ";
      out += s.name();
      first = false;
    }
    for (auto s : p.families) {
      out += first ? "" : ", ";
      out += s.name() + "_*";
      first = false;
    }
    out += " | ";
    out += p.relator.empty() ? "" : to_string(p.relator);
    out += ">";
    return out;
  }

  CheckedPresentation validate(OneRelatorPresentation const& p) {
    p.check_letters(p.relator);
    auto [conj, core] = cyclic_reduce(free_reduce(p.relator));
    OneRelatorPresentation q = p;
    q.relator                = std::move(core);
    return {std::move(q), std::move(conj)};
  }

  TorsionReport is_torsion_free(OneRelatorPresentation const& p) {
    if (p.relator.empty()) {
      return {};
    }
    auto [root, power] = primitive_root(p.relator);
    return {root, power, power == 1};
  }

  std::string_view to_string(SubgroupKind k) {
    switch (k) {
      case SubgroupKind::whole:
        return "whole";
      case SubgroupKind::magnus:
        return "magnus";
      case SubgroupKind::contains_relator_support:
        return "contains-relator-support";
    }
    return "?";
  }

  SubgroupKind classify_subset(OneRelatorPresentation const& p,
                               std::set<Symbol> const&       subset) {
    for (auto s : subset) {
      if (!p.is_generator(s)) {
        throw PresentationError("subgroup generator " + s.name()
                                + " is not a generator of the group");
      }
    }
    bool whole = p.families.empty()
                 && std::all_of(p.generators.begin(), p.generators.end(),
                                [&](Symbol s) { return subset.contains(s); });
    if (whole) {
      return SubgroupKind::whole;
    }
    for (auto s : support(p.relator)) {
      if (!subset.contains(s)) {
        return SubgroupKind::magnus;
      }
    }
    return SubgroupKind::contains_relator_support;
  }

  FreeFactorSplit split_free_factors(OneRelatorPresentation const& p) {
    auto                rel = support(p.relator);
    std::vector<Symbol> core(rel.begin(), rel.end());
    std::set<Symbol>    free_part;
    for (auto s : p.generators) {
      if (!rel.contains(s)) {
        free_part.insert(s);
      }
    }
    return {OneRelatorPresentation(std::move(core), p.relator), free_part};
  }

  std::set<Symbol> parse_symbol_set(std::string_view text) {
    std::set<Symbol> out;
    detail::Scanner  sc(text);
    if (sc.at_end()) {
      return out;
    }
    do {
      out.insert(detail::parse_symbol(sc));
    } while (sc.consume(','));
    if (!sc.at_end()) {
      sc.fail("expected ',' between generators");
    }
    return out;
  }

}  // namespace magnus
