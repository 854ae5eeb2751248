#include "magnus/purity.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "magnus/engine.hpp"

namespace magnus {

  namespace {

    struct Row {
      enum class Kind { outside, member, violation, inconclusive, error };
      Kind        kind = Kind::outside;
      Word        power_rewrite;
      std::string reason;
    };

    // One evaluation per word; never throws.
    template <class Eval>
    std::vector<Row> run_rows(std::vector<Word> const& words,
                              Execution                execution,
                              Eval const&              eval) {
      std::vector<Row> rows(words.size());
      auto const       n = static_cast<std::int64_t>(words.size());
      auto             one = [&](std::int64_t i) {
        try {
          rows[i] = eval(words[i]);
        } catch (BudgetExceeded const& e) {
          rows[i] = {Row::Kind::inconclusive, {}, e.what()};
        } catch (std::exception const& e) {
          rows[i] = {Row::Kind::error, {}, e.what()};
        }
      };
      if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (std::int64_t i = 0; i < n; ++i) {
          one(i);
        }
      } else {
        for (std::int64_t i = 0; i < n; ++i) {
          one(i);
        }
      }
      return rows;
    }

    std::vector<Word> suite_words(OneRelatorPresentation const& p,
                                  std::size_t                   max_length,
                                  SuiteOptions const&           options) {
      auto words = enumerate_reduced_words(p.generators, max_length);
      if (options.sample && *options.sample < words.size()) {
        std::vector<std::size_t> idx(words.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::mt19937_64 rng(options.seed);
        std::shuffle(idx.begin(), idx.end(), rng);
        idx.resize(*options.sample);
        std::sort(idx.begin(), idx.end());
        std::vector<Word> picked;
        picked.reserve(idx.size());
        for (auto i : idx) {
          picked.push_back(std::move(words[i]));
        }
        words = std::move(picked);
      }
      return words;
    }

    std::int64_t checked_power(std::int64_t prime, std::int64_t height) {
      if (height < 1) {
        throw std::invalid_argument("height must be at least 1");
      }
      std::int64_t q = 1;
      for (std::int64_t i = 0; i < height; ++i) {
        if (q > (std::int64_t(1) << 20) / prime) {
          throw std::invalid_argument("prime power too large");
        }
        q *= prime;
      }
      return q;
    }

    PurityReport run_suite(SuiteMode                     mode,
                           OneRelatorPresentation const& p0,
                           std::set<Symbol> const&       subgroup,
                           std::int64_t                  prime,
                           std::int64_t                  height,
                           std::size_t                   max_length,
                           SuiteOptions const&           options) {
      auto p = validate(p0).presentation;
      if (!p.families.empty()) {
        throw std::invalid_argument(
            "suites need a presentation with finitely many generators");
      }
      classify_subset(p, subgroup);
      if (!is_prime(prime)) {
        throw InvalidPrime(std::to_string(prime) + " is not prime");
      }
      if (mode != SuiteMode::counterexample_search
          && prime <= static_cast<std::int64_t>(p.relator.size())) {
        throw InvalidPrime("prime " + std::to_string(prime)
                           + " must exceed the relator length "
                           + std::to_string(p.relator.size()));
      }
      PurityReport report;
      report.mode         = mode;
      report.presentation = p;
      report.subgroup     = subgroup;
      report.prime        = prime;
      report.height       = height;
      report.max_length   = max_length;
      auto const q        = checked_power(prime, height);

      auto words = suite_words(p, max_length, options);
      auto eval  = [&](Word const& g) -> Row {
        auto gq = free_reduce(g.power(q));
        auto in = magnus_member(p, subgroup, gq, options.budget);
        if (!in) {
          return {};
        }
        auto h = magnus_member(p, subgroup, g, options.budget);
        if (!h) {
          return {Row::Kind::violation, *in, {}};
        }
        if (mode == SuiteMode::newman_probe) {
          Word check = h->power(q) * gq.inverse();
          if (!is_identity(p, check, options.budget)) {
            return {Row::Kind::error, *in,
                    "witness " + to_string(*h) + " failed verification"};
          }
        }
        return {Row::Kind::member, *in, {}};
      };
      auto rows = run_rows(words, options.execution, eval);

      report.tested = words.size();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        auto& row = rows[i];
        switch (row.kind) {
          case Row::Kind::outside:
            break;
          case Row::Kind::member:
            ++report.members;
            if (mode == SuiteMode::newman_probe) {
              ++report.witnesses_verified;
            }
            break;
          case Row::Kind::violation:
            ++report.members;
            if (mode == SuiteMode::counterexample_search) {
              report.counterexamples.push_back(words[i]);
            } else {
              report.violations.push_back(
                  {words[i], std::move(row.power_rewrite)});
            }
            break;
          case Row::Kind::inconclusive:
            report.inconclusive.push_back({words[i], std::move(row.reason)});
            break;
          case Row::Kind::error:
            throw std::runtime_error("while testing " + to_string(words[i])
                                     + ": " + row.reason);
        }
      }
      return report;
    }

  }  // namespace

  bool is_prime(std::int64_t n) {
    if (n < 2) {
      return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<Word> enumerate_reduced_words(std::vector<Symbol> const& gens,
                                            std::size_t max_length) {
    std::vector<Letter> alphabet;
    for (auto g : gens) {
      alphabet.push_back({g, 1});
      alphabet.push_back({g, -1});
    }
    std::vector<Word> out{Word()};
    std::size_t       layer_begin = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::size_t layer_end = out.size();
      for (std::size_t i = layer_begin; i < layer_end; ++i) {
        for (auto const& l : alphabet) {
          Word const& w = out[i];
          if (!w.empty() && w.back().is_inverse_of(l)) {
            continue;
          }
          Word next = w;
          next.push_back(l);
          out.push_back(std::move(next));
        }
      }
      layer_begin = layer_end;
    }
    return out;
  }

  std::uint64_t reduced_word_count(std::size_t rank, std::size_t max_length) {
    if (rank == 0) {
      return 1;
    }
    std::uint64_t total = 1, layer = 2 * rank;
    for (std::size_t l = 1; l <= max_length; ++l) {
      total += layer;
      layer *= 2 * rank - 1;
    }
    return total;
  }

  std::string_view to_string(SuiteMode m) {
    switch (m) {
      case SuiteMode::theorem_a:
        return "theorem_a";
      case SuiteMode::counterexample_search:
        return "counterexample_search";
      case SuiteMode::newman_probe:
        return "newman_probe";
    }
    return "?";
  }

  std::int64_t PurityReport::exponent() const {
    return checked_power(prime, height);
  }

  PurityReport theorem_a_suite(OneRelatorPresentation const& p,
                               std::set<Symbol> const&       subgroup,
                               std::int64_t                  prime,
                               std::size_t                   max_length,
                               SuiteOptions const&           options) {
    return run_suite(SuiteMode::theorem_a, p, subgroup, prime, 1, max_length,
                     options);
  }

  PurityReport counterexample_search(OneRelatorPresentation const& p,
                                     std::set<Symbol> const&       subgroup,
                                     std::int64_t                  prime,
                                     std::size_t                   max_length,
                                     SuiteOptions const&           options) {
    return run_suite(SuiteMode::counterexample_search, p, subgroup, prime, 1,
                     max_length, options);
  }

  PurityReport newman_probe(OneRelatorPresentation const& p,
                            std::set<Symbol> const&       subgroup,
                            std::int64_t                  prime,
                            std::int64_t                  height,
                            std::size_t                   max_length,
                            SuiteOptions const&           options) {
    return run_suite(SuiteMode::newman_probe, p, subgroup, prime, height,
                     max_length, options);
  }

  AlphaReport alpha_subgroup_suite(Symbol       x,
                                   Symbol       other,
                                   std::int64_t alpha,
                                   std::int64_t prime,
                                   std::size_t  max_length,
                                   Execution    execution) {
    if (x == other) {
      throw std::invalid_argument("x and the other generator must differ");
    }
    std::set<Symbol> Y{x, other};
    AlphaReport      report;
    report.alpha      = alpha;
    report.prime      = prime;
    report.max_length = max_length;
    auto words        = enumerate_reduced_words({x, other}, max_length);
    auto eval         = [&](Word const& w) -> Row {
      auto wp = free_reduce(w.power(prime));
      if (!alpha_subgroup_member(Y, x, alpha, wp, x)) {
        return {};
      }
      if (!alpha_subgroup_member(Y, x, alpha, w, x)) {
        return {Row::Kind::violation, wp, {}};
      }
      return {Row::Kind::member, {}, {}};
    };
    auto rows     = run_rows(words, execution, eval);
    report.tested = words.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      switch (rows[i].kind) {
        case Row::Kind::violation:
          report.counterexamples.push_back(words[i]);
          [[fallthrough]];
        case Row::Kind::member:
          ++report.members;
          break;
        case Row::Kind::error:
        case Row::Kind::inconclusive:
          throw std::runtime_error(rows[i].reason);
        case Row::Kind::outside:
          break;
      }
    }
    return report;
  }

}  // namespace magnus
