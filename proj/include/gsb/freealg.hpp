#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gsb/errors.hpp"
#include "gsb/scalar.hpp"

namespace gsb {

using GenId = unsigned;
using Word = std::vector<GenId>;  // the empty word is the monoid identity 1

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

inline Word concat(const Word& a, const Word& b) {
  Word r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

/// Position of the first occurrence of `factor` in `w` at or after `from`,
/// or npos. The empty factor matches everywhere.
inline std::size_t find_factor(const Word& w, const Word& factor, std::size_t from = 0) {
  if (factor.size() > w.size()) return npos;
  for (std::size_t p = from; p + factor.size() <= w.size(); ++p) {
    if (std::equal(factor.begin(), factor.end(), w.begin() + p)) return p;
  }
  return npos;
}

enum class Ordering { less, equal, greater };

/// Degree-lexicographic monomial order: shorter words first, equal lengths
/// compared letter by letter through a generator ranking (a permutation of
/// the alphabet; the default ranking is declaration order).
class MonomialOrder {
 public:
  explicit MonomialOrder(std::size_t alphabet_size) : rank_(alphabet_size) {
    std::iota(rank_.begin(), rank_.end(), 0u);
  }
  explicit MonomialOrder(std::vector<unsigned> ranking) : rank_(std::move(ranking)) {
    std::vector<bool> seen(rank_.size(), false);
    for (unsigned r : rank_) {
      if (r >= rank_.size() || seen[r]) throw error("generator ranking is not a permutation");
      seen[r] = true;
    }
  }

  std::size_t alphabet_size() const { return rank_.size(); }

  unsigned rank_of(GenId g) const {
    if (g >= rank_.size())
      throw invalid_generator_error("generator id " + std::to_string(g) + " outside alphabet of size " +
                                    std::to_string(rank_.size()));
    return rank_[g];
  }

  /// Generator holding the given rank position (inverse of the ranking).
  GenId letter_at_rank(unsigned r) const {
    for (GenId g = 0; g < rank_.size(); ++g)
      if (rank_[g] == r) return g;
    throw invalid_generator_error("rank position " + std::to_string(r) + " outside alphabet");
  }

  Ordering compare(const Word& u, const Word& v) const {
    if (u.size() != v.size()) return u.size() < v.size() ? Ordering::less : Ordering::greater;
    for (std::size_t k = 0; k < u.size(); ++k) {
      unsigned ru = rank_of(u[k]), rv = rank_of(v[k]);
      if (ru != rv) return ru < rv ? Ordering::less : Ordering::greater;
    }
    return Ordering::equal;
  }

  bool less(const Word& u, const Word& v) const { return compare(u, v) == Ordering::less; }

  bool operator==(const MonomialOrder&) const = default;

 private:
  std::vector<unsigned> rank_;  // rank_[g] = position of generator g
};

inline Ordering compare_words(const Word& u, const Word& v, const MonomialOrder& ord) {
  return ord.compare(u, v);
}

/// Element of the free associative algebra over the scalar ring: a finite
/// map from words to nonzero coefficients.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial term(Word w, ParamScalar c = ParamScalar(1)) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, ParamScalar>& terms() const { return terms_; }

  ParamScalar coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? ParamScalar() : it->second;
  }

  void add_term(const Word& w, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool operator==(const Polynomial&) const = default;

 private:
  std::map<Word, ParamScalar> terms_;
};

inline Polynomial add(const Polynomial& p, const Polynomial& q) {
  Polynomial r = p;
  for (const auto& [w, c] : q.terms()) r.add_term(w, c);
  return r;
}

inline Polynomial scale(const ParamScalar& c, const Polynomial& p) {
  Polynomial r;
  if (c.is_zero()) return r;
  for (const auto& [w, x] : p.terms()) r.add_term(w, c * x);
  return r;
}

inline Polynomial sub(const Polynomial& p, const Polynomial& q) {
  return add(p, scale(ParamScalar(-1), q));
}

/// Two-sided word multiple: every term w of p becomes a·w·b.
inline Polynomial mul_word(const Word& a, const Polynomial& p, const Word& b) {
  Polynomial r;
  for (const auto& [w, c] : p.terms()) r.add_term(concat(a, concat(w, b)), c);
  return r;
}

inline Polynomial mul(const Polynomial& p, const Polynomial& q) {
  Polynomial r;
  for (const auto& [w, c] : p.terms())
    for (const auto& [v, x] : q.terms()) r.add_term(concat(w, v), c * x);
  return r;
}

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }
inline Polynomial operator*(const ParamScalar& c, const Polynomial& p) { return scale(c, p); }
inline Polynomial operator-(const Polynomial& p) { return scale(ParamScalar(-1), p); }

/// Maximal word of a nonzero polynomial under `ord`, with its coefficient.
inline std::pair<Word, ParamScalar> leading_term(const Polynomial& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw empty_polynomial_error("leading term of the zero polynomial");
  const Word* best = nullptr;
  for (const auto& [w, c] : p.terms()) {
    if (!best || ord.less(*best, w)) best = &w;
  }
  return {*best, p.coeff(*best)};
}

inline std::string word_str(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (GenId g : w) {
    if (g >= names.size())
      throw invalid_generator_error("generator id " + std::to_string(g) + " has no name");
    if (!out.empty()) out += ' ';
    out += names[g];
  }
  return out;
}

/// Render with terms in descending order, e.g. "d * e0 e2 e1 e0 - 2".
inline std::string poly_str(const Polynomial& p, const MonomialOrder& ord,
                            const std::vector<std::string>& names,
                            const std::string& param_name = "d") {
  if (p.is_zero()) return "0";
  std::vector<const Word*> ws;
  ws.reserve(p.term_count());
  for (const auto& [w, c] : p.terms()) ws.push_back(&w);
  std::sort(ws.begin(), ws.end(), [&](const Word* a, const Word* b) { return ord.less(*b, *a); });
  std::string out;
  for (const Word* w : ws) {
    ParamScalar c = p.coeff(*w);
    bool neg = c.display_negative();
    if (neg) c = -c;
    std::string cs = c.str(param_name);
    if (cs.find_first_of(" /") != std::string::npos) cs = "(" + cs + ")";
    std::string t;
    if (w->empty())
      t = cs;
    else if (c.is_one())
      t = word_str(*w, names);
    else
      t = cs + " * " + word_str(*w, names);
    if (out.empty())
      out = (neg ? "-" : "") + t;
    else
      out += (neg ? " - " : " + ") + t;
  }
  return out;
}

}  // namespace gsb
