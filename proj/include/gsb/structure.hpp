#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gsb/rewrite.hpp"
#include "gsb/standard.hpp"

namespace gsb {

/// A scalar multiple of one standard monomial.
struct ScalarMonomial {
  ParamScalar coeff;
  Word word;
};

namespace detail {

inline bool word_is_standard(const Word& w, const RuleSet& S) {
  for (const RewriteRule& r : S.rules)
    if (find_factor(w, r.lead) != npos) return false;
  return true;
}

}  // namespace detail

/// Normal form of the concatenation uv. For the built-in bases the result is
/// always a single term 2^a d^b times a standard monomial, but the product
/// is returned as a full polynomial: a multi-term result is reported, never
/// coerced.
inline Polynomial multiply_standard(const Word& u, const Word& v, const RuleSet& S) {
  if (!detail::word_is_standard(u, S)) throw nonstandard_word_error("left factor is not standard");
  if (!detail::word_is_standard(v, S)) throw nonstandard_word_error("right factor is not standard");
  return normal_form(Polynomial::term(concat(u, v)), S).normal_form;
}

struct TableViolation {
  std::size_t row, col;
  Polynomial value;  // multi-term product, quoted verbatim
};

struct StructureTable {
  std::vector<Word> basis;              // standard monomials, degree-then-lex
  std::vector<ScalarMonomial> entries;  // row-major; meaningful unless listed in violations
  std::vector<TableViolation> violations;

  bool closed() const { return violations.empty(); }
  const ScalarMonomial& at(std::size_t row, std::size_t col) const {
    return entries[row * basis.size() + col];
  }
};

/// Full multiplication table over the standard-monomial basis. `budget`
/// bounds the number of table cells.
inline StructureTable build_table(const RuleSet& S, std::size_t budget = 1000000) {
  StructureTable table;
  table.basis = enumerate_standard(S);
  std::size_t dim = table.basis.size();
  if (dim * dim > budget)
    throw budget_error("table needs " + std::to_string(dim * dim) + " cells, budget is " +
                       std::to_string(budget));
  table.entries.resize(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      Polynomial p =
          normal_form(Polynomial::term(concat(table.basis[r], table.basis[c])), S).normal_form;
      if (p.term_count() == 1) {
        const auto& [w, coef] = *p.terms().begin();
        table.entries[r * dim + c] = ScalarMonomial{coef, w};
      } else {
        table.violations.push_back({r, c, std::move(p)});
      }
    }
  }
  return table;
}

inline StructureTable build_table(Family f, int n, std::size_t budget = 1000000) {
  return build_table(build_candidate_gsb(f, n), budget);
}

}  // namespace gsb
