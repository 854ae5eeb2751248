// Resource limits for the Magnus recursion.

#ifndef MAGNUS_BUDGET_HPP_
#define MAGNUS_BUDGET_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace magnus {

  struct Budget {
    std::size_t   max_depth       = 48;
    std::size_t   max_word_length = std::size_t(1) << 16;
    std::uint64_t max_steps       = 20'000'000;
  };

  class BudgetExceeded : public std::runtime_error {
   public:
    enum class Limit { depth, word_length, steps };

    BudgetExceeded(Limit which, std::string const& what)
        : std::runtime_error(what), _which(which) {}

    Limit which() const noexcept {
      return _which;
    }

   private:
    Limit _which;
  };

  // Running consumption of one query against its Budget.
  class BudgetMeter {
   public:
    explicit BudgetMeter(Budget const& b) : _budget(b) {
      if (b.max_depth == 0 || b.max_word_length == 0 || b.max_steps == 0) {
        throw std::invalid_argument("budget limits must be positive");
      }
    }

    void step(std::uint64_t n = 1) {
      _steps += n;
      if (_steps > _budget.max_steps) {
        throw BudgetExceeded(BudgetExceeded::Limit::steps,
                             "step budget exceeded ("
                                 + std::to_string(_budget.max_steps) + ")");
      }
    }

    void check_depth(std::size_t depth) const {
      if (depth > _budget.max_depth) {
        throw BudgetExceeded(BudgetExceeded::Limit::depth,
                             "recursion depth budget exceeded ("
                                 + std::to_string(_budget.max_depth) + ")");
      }
    }

    void check_length(std::size_t length) const {
      if (length > _budget.max_word_length) {
        throw BudgetExceeded(
            BudgetExceeded::Limit::word_length,
            "word length budget exceeded ("
                + std::to_string(_budget.max_word_length) + ")");
      }
    }

    std::uint64_t steps() const noexcept {
      return _steps;
    }
    Budget const& budget() const noexcept {
      return _budget;
    }

   private:
    Budget        _budget;
    std::uint64_t _steps = 0;
  };

}  // namespace magnus

#endif  // MAGNUS_BUDGET_HPP_
