#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsb {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A letter outside the ambient alphabet.
struct invalid_generator_error : error {
  using error::error;
};

// Leading term requested from the zero polynomial.
struct empty_polynomial_error : error {
  using error::error;
};

struct division_by_zero_error : error {
  using error::error;
};

// A rule whose lead would be the empty word collapses the algebra.
struct degenerate_rule_error : error {
  using error::error;
};

// Family rank outside its admissible range.
struct rank_error : error {
  using error::error;
};

// Compact E_{i,j} notation used outside its family conventions.
struct notation_error : error {
  using error::error;
};

struct nonstandard_word_error : error {
  using error::error;
};

struct budget_error : error {
  using error::error;
};

struct parse_error : error {
  parse_error(std::size_t line_, std::size_t column_, const std::string& what)
      : error("line " + std::to_string(line_) + ", col " + std::to_string(column_) + ": " + what),
        line(line_),
        column(column_) {}
  std::size_t line;
  std::size_t column;
};

// Enumeration of an infinite standard-monomial set without a degree cap.
// `cycle` holds the letters of a witness cycle in the live automaton.
struct infinite_enumeration_error : error {
  infinite_enumeration_error(std::vector<unsigned> cycle_, const std::string& what)
      : error(what), cycle(std::move(cycle_)) {}
  std::vector<unsigned> cycle;
};

}  // namespace gsb
