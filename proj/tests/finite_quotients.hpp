// Homomorphisms of one-relator groups onto permutation groups, found by
// exhaustive search.  A word with nontrivial image is nontrivial; a word
// whose image misses the image of <Y> is not in <Y>.

#ifndef MAGNUS_TESTS_FINITE_QUOTIENTS_HPP_
#define MAGNUS_TESTS_FINITE_QUOTIENTS_HPP_

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

#include "magnus/presentation.hpp"

namespace oracle {

  using Perm = std::array<int, 4>;

  inline Perm perm_id() {
    return {0, 1, 2, 3};
  }
  inline Perm perm_mul(Perm const& x, Perm const& y) {  // x after y
    return {x[y[0]], x[y[1]], x[y[2]], x[y[3]]};
  }
  inline Perm perm_inv(Perm const& p) {
    Perm q{};
    for (int i = 0; i < 4; ++i) q[p[i]] = i;
    return q;
  }
  inline std::vector<Perm> all_perms() {
    std::vector<Perm> out;
    Perm              p = perm_id();
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  struct PermHom {
    std::map<magnus::Symbol, Perm> images;

    Perm apply(magnus::Word const& w) const {
      Perm acc = perm_id();
      for (auto const& l : w) {
        auto const& p = images.at(l.symbol);
        acc           = perm_mul(acc, l.sign > 0 ? p : perm_inv(p));
      }
      return acc;
    }

    // Image of <Y>, by closure.
    std::set<Perm> subgroup_image(std::set<magnus::Symbol> const& Y) const {
      std::set<Perm>    seen{perm_id()};
      std::vector<Perm> todo{perm_id()};
      while (!todo.empty()) {
        Perm p = todo.back();
        todo.pop_back();
        for (auto s : Y) {
          Perm q = perm_mul(p, images.at(s));
          if (seen.insert(q).second) todo.push_back(q);
        }
      }
      return seen;
    }
  };

  // Every assignment of S_4 elements to the generators (up to `limit`
  // generators) that kills the relator.
  inline std::vector<PermHom> s4_quotients(
      magnus::OneRelatorPresentation const& p) {
    static auto const perms = all_perms();
    std::vector<PermHom> out;
    auto const&          gens = p.generators;
    std::vector<std::size_t> idx(gens.size(), 0);
    while (true) {
      PermHom h;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        h.images[gens[i]] = perms[idx[i]];
      }
      if (h.apply(p.relator) == perm_id()) out.push_back(std::move(h));
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == perms.size()) {
        idx[k++] = 0;
      }
      if (k == idx.size()) break;
    }
    return out;
  }

}  // namespace oracle

#endif  // MAGNUS_TESTS_FINITE_QUOTIENTS_HPP_
