// Random and exhaustive generators shared by the unit tests and the
// acceptance binary.

#ifndef MAGNUS_TESTS_GENERATORS_HPP_
#define MAGNUS_TESTS_GENERATORS_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "magnus/free_product.hpp"
#include "magnus/heg.hpp"

namespace oracle {

  using magnus::AlternatingWord;
  using magnus::HegWord;
  using magnus::TemplateLetter;

  // Random HEG combinator terms: finite words over a_1..a_8 and omega
  // blocks with scale 1..3, offset 0..2.
  struct TermGen {
    std::mt19937_64 rng;

    std::int64_t pick(std::int64_t lo, std::int64_t hi) {
      return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    }

    HegWord operator()(int depth) {
      auto kind = depth <= 0 ? pick(0, 1) : pick(0, 5);
      switch (kind) {
        case 0: {
          magnus::Word w;
          for (auto k = pick(0, 5); k > 0; --k) {
            w.push_back({magnus::Symbol::intern("a", pick(1, 8)), pick(0, 1) ? 1 : -1});
          }
          return HegWord::fin(w);
        }
        case 1: {
          std::vector<TemplateLetter> block;
          for (auto k = pick(1, 3); k > 0; --k) {
            block.push_back({"a", pick(1, 3), pick(0, 2), pick(0, 1) ? 1 : -1});
          }
          return HegWord::omega(block, pick(1, 3));
        }
        case 2:
        case 3:
          return HegWord::cat((*this)(depth - 1), (*this)(depth - 1));
        case 4:
          return HegWord::inv((*this)(depth - 1));
        default:
          return HegWord::rev((*this)(depth - 1));
      }
    }
  };

  // Every alternating word with at most max_len syllables whose syllables
  // are drawn from samples[factor].
  inline std::vector<AlternatingWord> alternating_words(
      std::vector<std::vector<magnus::Word>> const& samples,
      std::size_t                                   max_len) {
    std::vector<AlternatingWord> out{{}};
    std::function<void(AlternatingWord&)> grow = [&](AlternatingWord& g) {
      if (g.size() == max_len) return;
      for (std::size_t f = 0; f < samples.size(); ++f) {
        if (!g.empty() && g.back().factor == f) continue;
        for (auto const& e : samples[f]) {
          g.push_back({f, e});
          out.push_back(g);
          grow(g);
          g.pop_back();
        }
      }
    };
    AlternatingWord g;
    grow(g);
    return out;
  }

}  // namespace oracle

#endif  // MAGNUS_TESTS_GENERATORS_HPP_
