// doctest printers for library types.

#ifndef MAGNUS_TESTS_PRINTING_HPP_
#define MAGNUS_TESTS_PRINTING_HPP_

#include <doctest.h>

#include "magnus/presentation.hpp"
#include "magnus/word.hpp"

namespace doctest {
  template <>
  struct StringMaker<magnus::Word> {
    static String convert(magnus::Word const& w) {
      return ("\"" + magnus::to_string(w) + "\"").c_str();
    }
  };
  template <>
  struct StringMaker<magnus::Symbol> {
    static String convert(magnus::Symbol s) {
      return magnus::to_string(s).c_str();
    }
  };
  template <>
  struct StringMaker<magnus::OneRelatorPresentation> {
    static String convert(magnus::OneRelatorPresentation const& p) {
      return magnus::to_string(p).c_str();
    }
  };
}  // namespace doctest

#endif  // MAGNUS_TESTS_PRINTING_HPP_
