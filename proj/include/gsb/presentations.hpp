#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gsb/rewrite.hpp"

namespace gsb {

enum class Family { A, B, D, Generic };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    default: return "generic";
  }
}

inline int family_min_rank(Family f) { return f == Family::D ? 4 : 2; }

inline void check_rank(Family f, int n) {
  if (f == Family::Generic) throw rank_error("generic presentations have no rank");
  if (n < family_min_rank(f))
    throw rank_error("family " + family_name(f) + " needs rank >= " +
                     std::to_string(family_min_rank(f)) + ", got " + std::to_string(n));
}

// Type A at rank n is generated by E_1..E_{n-1}; types B and D by
// E_0..E_{n-1}. Declaration order is the monomial-order ranking.
inline std::size_t family_alphabet_size(Family f, int n) {
  check_rank(f, n);
  return f == Family::A ? static_cast<std::size_t>(n - 1) : static_cast<std::size_t>(n);
}

inline std::vector<std::string> family_generator_names(Family f, int n) {
  std::vector<std::string> names;
  int lo = f == Family::A ? 1 : 0;
  for (int i = lo; i <= n - 1; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

inline MonomialOrder family_order(Family f, int n) {
  return MonomialOrder(family_alphabet_size(f, n));
}

/// Builds the run words E_{i,j}, E^{i,j} and E'_{i,j} of the respective
/// family conventions, indexed by the generator subscripts. Empty-run
/// conventions: E_{i,i+1} = 1 and E^{i+1,i} = 1. In type D the descending
/// run to 0 skips E_1 (E_{i,0} = E_i...E_3 E_2 E_0 for i >= 2, E_{1,0} = E_0).
struct WordBuilder {
  Family family;
  int rank;

  GenId id(int i) const {
    int lo = family == Family::A ? 1 : 0;
    if (i < lo || i > rank - 1)
      throw notation_error("generator index " + std::to_string(i) + " out of range for " +
                           family_name(family) + " rank " + std::to_string(rank));
    return static_cast<GenId>(i - lo);
  }

  Word gen(int i) const { return {id(i)}; }

  // E_{i,j} = E_i E_{i-1} ... E_j
  Word desc(int i, int j) const {
    if (j == i + 1 && i >= 0) return {};
    Word w;
    if (family == Family::D && j == 0) {
      if (i < 1) throw notation_error("E_{i,0} needs i >= 1 in type D");
      for (int k = i; k >= 2; --k) w.push_back(id(k));
      w.push_back(id(0));
      return w;
    }
    if (j > i) throw notation_error("descending run E_{i,j} needs i >= j");
    for (int k = i; k >= j; --k) w.push_back(id(k));
    return w;
  }

  // E^{i,j} = E_i E_{i+1} ... E_j
  Word asc(int i, int j) const {
    if (family == Family::A) throw notation_error("E^{i,j} is not defined in type A");
    if (j == i - 1 && i >= 1) return {};
    if (i < 1 || i > j) throw notation_error("ascending run E^{i,j} needs 1 <= i <= j");
    Word w;
    for (int k = i; k <= j; ++k) w.push_back(id(k));
    return w;
  }

  // E'_{i,j} = E_{i,0} E^{1,j}
  Word primed(int i, int j) const {
    if (family == Family::A) throw notation_error("prime notation is not defined in type A");
    if (j < 0 || j > i) throw notation_error("E'_{i,j} needs 0 <= j <= i");
    return concat(desc(i, 0), asc(1, j));
  }
};

/// A generating set of relations: alphabet, parameter name, and relation
/// polynomials, each orientable into a monic rewrite rule.
struct PresentationSpec {
  Family family = Family::Generic;
  int rank = 0;
  std::vector<std::string> generators;  // declaration order = ranking (ascending)
  std::string param = "d";
  std::vector<Polynomial> relations;

  MonomialOrder order() const { return MonomialOrder(generators.size()); }
};

inline bool same_presentation(const PresentationSpec& a, const PresentationSpec& b) {
  return a.generators == b.generators && a.param == b.param && a.relations == b.relations;
}

inline RuleSet rules_from(const PresentationSpec& spec,
                          RuleOrigin origin = RuleOrigin::defining_relation) {
  return make_rule_set(spec.order(), spec.relations, origin);
}

/// The defining relations of the Temperley-Lieb algebra of the given family
/// and rank: quadratics E_i^2 = d E_i, commutations between non-adjacent
/// generators, the braid-collapse cubics E_i E_j E_i = E_i, and in type B
/// the quartics E_i E_j E_i E_j = 2 E_i E_j for {i,j} = {0,1}.
inline PresentationSpec build_defining(Family f, int n) {
  check_rank(f, n);
  WordBuilder wb{f, n};
  PresentationSpec spec;
  spec.family = f;
  spec.rank = n;
  spec.generators = family_generator_names(f, n);

  auto rel = [&](const Word& lhs, const Polynomial& rhs) {
    spec.relations.push_back(Polynomial::term(lhs) - rhs);
  };
  auto quad = [&](int i) {
    rel(concat(wb.gen(i), wb.gen(i)), Polynomial::term(wb.gen(i), ParamScalar::delta()));
  };
  auto comm = [&](int i, int j) {
    rel(concat(wb.gen(i), wb.gen(j)), Polynomial::term(concat(wb.gen(j), wb.gen(i))));
  };
  auto braid = [&](int i, int j) {
    rel(concat(wb.gen(i), concat(wb.gen(j), wb.gen(i))), Polynomial::term(wb.gen(i)));
  };

  switch (f) {
    case Family::A:
      for (int i = 1; i <= n - 1; ++i) quad(i);
      for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j + 1 < i; ++j) comm(i, j);
      for (int i = 1; i <= n - 1; ++i)
        for (int j : {i - 1, i + 1})
          if (j >= 1 && j <= n - 1) braid(i, j);
      break;
    case Family::B:
      for (int i = 0; i <= n - 1; ++i) quad(i);
      for (int i = 0; i <= n - 1; ++i)
        for (int j = 0; j + 1 < i; ++j) comm(i, j);
      for (int i = 1; i <= n - 1; ++i)
        for (int j : {i - 1, i + 1})
          if (j >= 1 && j <= n - 1) braid(i, j);
      // E_i E_j E_i E_j = 2 E_i E_j for {i,j} = {0,1}
      for (auto [i, j] : {std::pair{1, 0}, std::pair{0, 1}}) {
        Word ij = concat(wb.gen(i), wb.gen(j));
        rel(concat(ij, ij), Polynomial::term(ij, ParamScalar(2)));
      }
      break;
    case Family::D:
      for (int i = 0; i <= n - 1; ++i) quad(i);
      for (int i = 0; i <= n - 1; ++i)
        for (int j = 1; j + 1 < i; ++j) comm(i, j);
      for (int i = 1; i <= n - 1; ++i)
        if (i != 2) comm(i, 0);  // E_i E_0 = E_0 E_i for i != 2
      for (int i = 1; i <= n - 1; ++i)
        for (int j : {i - 1, i + 1})
          if (j >= 1 && j <= n - 1) braid(i, j);
      braid(0, 2);
      braid(2, 0);
      break;
    case Family::Generic:
      break;
  }
  return spec;
}

namespace detail {

class CandidateBuilder {
 public:
  CandidateBuilder(Family f, int n)
      : wb_{f, n}, set_{family_order(f, n), {}}, defining_(rules_from(build_defining(f, n))) {}

  const WordBuilder& wb() const { return wb_; }

  // Leads are recomputed from the monomial order and must agree with the
  // printed left-hand side; exact duplicates across families collapse.
  void add(const Word& printed_lead, const Polynomial& rhs) {
    Polynomial p = Polynomial::term(printed_lead) - rhs;
    RewriteRule r = make_rule(p, set_.order, RuleOrigin::lemma_derived);
    if (r.lead != printed_lead) throw error("candidate rule lead differs from its printed form");
    for (const RewriteRule& d : defining_.rules)
      if (d == r) {
        r.origin = RuleOrigin::defining_relation;
        break;
      }
    auto it = by_lead_.find(r.lead);
    if (it != by_lead_.end()) {
      if (!(set_.rules[it->second] == r)) throw error("conflicting candidate rules share a lead");
      return;
    }
    by_lead_.emplace(r.lead, set_.rules.size());
    set_.rules.push_back(std::move(r));
  }

  RuleSet take() { return std::move(set_); }

 private:
  WordBuilder wb_;
  RuleSet set_;
  RuleSet defining_;
  std::map<Word, std::size_t> by_lead_;
};

}  // namespace detail

/// The closed rule systems for the three families: the defining relations
/// together with the derived run relations E_{i,j}E_i = E_{i-2,j}E_i and
/// E_jE_{i,j} = E_jE_{i,j+2}, and the E_0 families specific to types B and D.
inline RuleSet build_candidate_gsb(Family f, int n) {
  check_rank(f, n);
  detail::CandidateBuilder cb(f, n);
  const WordBuilder& wb = cb.wb();
  auto T = [](const Word& w) { return Polynomial::term(w); };

  switch (f) {
    case Family::A:
      for (int i = 1; i <= n - 1; ++i)
        cb.add(concat(wb.gen(i), wb.gen(i)), Polynomial::term(wb.gen(i), ParamScalar::delta()));
      for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j + 1 < i; ++j)
          cb.add(concat(wb.gen(i), wb.gen(j)), T(concat(wb.gen(j), wb.gen(i))));
      for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j < i; ++j) {
          cb.add(concat(wb.desc(i, j), wb.gen(i)), T(concat(wb.desc(i - 2, j), wb.gen(i))));
          cb.add(concat(wb.gen(j), wb.desc(i, j)), T(concat(wb.gen(j), wb.desc(i, j + 2))));
        }
      break;

    case Family::B: {
      for (int i = 0; i <= n - 1; ++i)
        cb.add(concat(wb.gen(i), wb.gen(i)), Polynomial::term(wb.gen(i), ParamScalar::delta()));
      for (int i = 0; i <= n - 1; ++i)
        for (int j = 0; j + 1 < i; ++j)
          cb.add(concat(wb.gen(i), wb.gen(j)), T(concat(wb.gen(j), wb.gen(i))));
      for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j < i; ++j) {
          cb.add(concat(wb.desc(i, j), wb.gen(i)), T(concat(wb.desc(i - 2, j), wb.gen(i))));
          cb.add(concat(wb.gen(j), wb.desc(i, j)), T(concat(wb.gen(j), wb.desc(i, j + 2))));
        }
      for (auto [i, j] : {std::pair{1, 0}, std::pair{0, 1}}) {
        Word ij = concat(wb.gen(i), wb.gen(j));
        cb.add(concat(ij, ij), Polynomial::term(ij, ParamScalar(2)));
      }
      // E_{i,0} E^{1,j} E_i = E_{i-2,0} E^{1,j} E_i for i > j+1 >= 1
      for (int i = 2; i <= n - 1; ++i)
        for (int j = 0; j <= i - 2; ++j) {
          Word mid = wb.asc(1, j);
          cb.add(concat(wb.desc(i, 0), concat(mid, wb.gen(i))),
                 T(concat(wb.desc(i - 2, 0), concat(mid, wb.gen(i)))));
        }
      break;
    }

    case Family::D: {
      for (int i = 0; i <= n - 1; ++i)
        cb.add(concat(wb.gen(i), wb.gen(i)), Polynomial::term(wb.gen(i), ParamScalar::delta()));
      for (int i = 0; i <= n - 1; ++i)
        for (int j = 1; j + 1 < i; ++j)
          cb.add(concat(wb.gen(i), wb.gen(j)), T(concat(wb.gen(j), wb.gen(i))));
      for (int i = 1; i <= n - 1; ++i)
        if (i != 2) cb.add(concat(wb.gen(i), wb.gen(0)), T(concat(wb.gen(0), wb.gen(i))));
      cb.add({wb.id(0), wb.id(2), wb.id(0)}, T(wb.gen(0)));
      cb.add({wb.id(2), wb.id(0), wb.id(2)}, T(wb.gen(2)));
      for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j < i; ++j) {
          cb.add(concat(wb.desc(i, j), wb.gen(i)), T(concat(wb.desc(i - 2, j), wb.gen(i))));
          cb.add(concat(wb.gen(j), wb.desc(i, j)), T(concat(wb.gen(j), wb.desc(i, j + 2))));
        }
      for (int i = 3; i <= n - 1; ++i)
        cb.add(concat(wb.desc(i, 0), wb.gen(i)), T(concat(wb.desc(i - 2, 0), wb.gen(i))));
      for (int i = 2; i <= n - 1; ++i) {
        cb.add(concat(wb.gen(0), wb.desc(i, 0)), T(concat(wb.gen(0), wb.desc(i, 3))));
        Word e01 = concat(wb.gen(0), wb.gen(1));
        cb.add(concat(e01, wb.desc(i, 0)), T(concat(e01, wb.desc(i, 3))));
      }
      for (int i = 3; i <= n - 1; ++i)
        for (int j = 1; j <= i - 2; ++j) {
          Word mid = wb.asc(1, j);
          cb.add(concat(wb.desc(i, 0), concat(mid, wb.gen(i))),
                 T(concat(wb.desc(i - 2, 0), concat(mid, wb.gen(i)))));
        }
      break;
    }

    case Family::Generic:
      throw rank_error("no built-in basis for generic presentations");
  }
  return cb.take();
}

// ---------------------------------------------------------------------------
// presentation file format
//
//   gens: <name>+          declaration order is the monomial-order ranking
//   param: <name>          optional, default d
//   rel: <word> = <rhs>    rhs: signed sum of "coef? word?" terms
//
// '#' starts a comment, anywhere in a line.
// ---------------------------------------------------------------------------

namespace detail {

struct Token {
  enum Kind { integer, name, symbol, end } kind = end;
  std::string text;
  BigInt value;
  std::size_t col = 0;
};

class LineLexer {
 public:
  LineLexer(std::string text, std::size_t line, std::size_t col0)
      : text_(std::move(text)), line_(line), base_(col0) {
    advance();
  }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(line_, base_ + (tok_.kind == Token::end ? text_.size() : tok_.col), what);
  }

  std::size_t line() const { return line_; }
  std::size_t base() const { return base_; }

 private:
  std::string text_;
  std::size_t line_, base_, pos_ = 0;
  Token tok_;

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_ = Token{};
    tok_.col = pos_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::end;
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t s = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_.kind = Token::integer;
      tok_.text = text_.substr(s, pos_ - s);
      tok_.value = BigInt(tok_.text);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t s = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      tok_.kind = Token::name;
      tok_.text = text_.substr(s, pos_ - s);
      return;
    }
    if (std::string("=+-*^()").find(c) != std::string::npos) {
      tok_.kind = Token::symbol;
      tok_.text = std::string(1, c);
      ++pos_;
      return;
    }
    throw parse_error(line_, base_ + pos_, std::string("unexpected character '") + c + "'");
  }
};

inline bool is_symbol(const Token& t, const char* s) {
  return t.kind == Token::symbol && t.text == s;
}

// INT ['*' param ['^' INT]] | param ['^' INT]
inline ZPoly parse_monomial(LineLexer& lex, const std::string& param) {
  BigInt c = 1;
  bool have_int = false;
  if (lex.peek().kind == Token::integer) {
    c = lex.next().value;
    have_int = true;
    if (!is_symbol(lex.peek(), "*")) return ZPoly(c);
    lex.next();
  }
  if (lex.peek().kind != Token::name || lex.peek().text != param) {
    if (have_int) lex.fail("expected parameter '" + param + "' after '*'");
    lex.fail("expected coefficient");
  }
  lex.next();
  unsigned exp = 1;
  if (is_symbol(lex.peek(), "^")) {
    lex.next();
    if (lex.peek().kind != Token::integer) lex.fail("expected integer exponent");
    exp = static_cast<unsigned>(lex.next().value);
  }
  return ZPoly::param(exp, c);
}

// monomial | '(' [sign] monomial { ('+'|'-') monomial } ')'
inline ZPoly parse_coefficient(LineLexer& lex, const std::string& param) {
  if (!is_symbol(lex.peek(), "(")) return parse_monomial(lex, param);
  lex.next();
  ZPoly acc;
  int sign = 1;
  if (is_symbol(lex.peek(), "-")) {
    sign = -1;
    lex.next();
  } else if (is_symbol(lex.peek(), "+")) {
    lex.next();
  }
  for (;;) {
    ZPoly m = parse_monomial(lex, param);
    acc = sign > 0 ? acc + m : acc - m;
    if (is_symbol(lex.peek(), "+")) {
      sign = 1;
      lex.next();
    } else if (is_symbol(lex.peek(), "-")) {
      sign = -1;
      lex.next();
    } else {
      break;
    }
  }
  if (!is_symbol(lex.peek(), ")")) lex.fail("expected ')'");
  lex.next();
  return acc;
}

}  // namespace detail

inline PresentationSpec parse_presentation(const std::string& text) {
  PresentationSpec spec;
  spec.generators.clear();
  std::map<std::string, GenId> index;
  bool have_gens = false;
  bool have_rel = false;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw parse_error(lineno, first, "expected 'directive:'");
    std::string directive = line.substr(first, colon - first);
    detail::LineLexer lex(line.substr(colon + 1), lineno, colon + 1);

    if (directive == "gens") {
      if (have_gens) lex.fail("duplicate gens directive");
      while (lex.peek().kind == detail::Token::name) {
        std::string nm = lex.next().text;
        if (index.count(nm)) lex.fail("duplicate generator '" + nm + "'");
        index.emplace(nm, static_cast<GenId>(spec.generators.size()));
        spec.generators.push_back(nm);
      }
      if (lex.peek().kind != detail::Token::end) lex.fail("expected generator name");
      if (spec.generators.empty()) lex.fail("empty generator list");
      have_gens = true;
    } else if (directive == "param") {
      if (have_rel) lex.fail("param directive must precede relations");
      if (lex.peek().kind != detail::Token::name) lex.fail("expected parameter name");
      spec.param = lex.next().text;
      if (lex.peek().kind != detail::Token::end) lex.fail("trailing input after parameter name");
    } else if (directive == "rel") {
      if (!have_gens) lex.fail("relation before gens directive");
      if (index.count(spec.param)) lex.fail("parameter name collides with a generator");
      Word lhs;
      while (lex.peek().kind == detail::Token::name) {
        auto it = index.find(lex.peek().text);
        if (it == index.end()) lex.fail("unknown generator '" + lex.peek().text + "'");
        lhs.push_back(it->second);
        lex.next();
      }
      if (lhs.empty()) lex.fail("expected a word on the left-hand side");
      if (!detail::is_symbol(lex.peek(), "=")) lex.fail("expected '='");
      lex.next();

      Polynomial rhs;
      int sign = 1;
      if (detail::is_symbol(lex.peek(), "-")) {
        sign = -1;
        lex.next();
      } else if (detail::is_symbol(lex.peek(), "+")) {
        lex.next();
      }
      for (;;) {
        ZPoly coef(1);
        bool have_coef = false;
        const detail::Token& t = lex.peek();
        if (t.kind == detail::Token::integer || detail::is_symbol(t, "(") ||
            (t.kind == detail::Token::name && t.text == spec.param)) {
          coef = detail::parse_coefficient(lex, spec.param);
          have_coef = true;
        }
        Word w;
        while (lex.peek().kind == detail::Token::name) {
          auto it = index.find(lex.peek().text);
          if (it == index.end()) lex.fail("unknown generator '" + lex.peek().text + "'");
          w.push_back(it->second);
          lex.next();
        }
        if (!have_coef && w.empty()) lex.fail("expected a term");
        rhs.add_term(w, ParamScalar(sign > 0 ? coef : -coef));
        if (detail::is_symbol(lex.peek(), "+")) {
          sign = 1;
          lex.next();
        } else if (detail::is_symbol(lex.peek(), "-")) {
          sign = -1;
          lex.next();
        } else if (lex.peek().kind == detail::Token::end) {
          break;
        } else {
          lex.fail("expected '+', '-' or end of relation");
        }
      }
      Polynomial p = Polynomial::term(lhs) - rhs;
      if (p.is_zero()) throw parse_error(lineno, first, "zero relation");
      spec.relations.push_back(std::move(p));
      have_rel = true;
    } else {
      throw parse_error(lineno, first, "unknown directive '" + directive + "'");
    }
  }
  if (!have_gens) throw parse_error(lineno + 1, 0, "missing gens directive");
  return spec;
}

namespace detail {

// Primitive integer form: denominators cleared, coefficient gcd removed.
inline std::map<Word, ZPoly> integer_form(const Polynomial& p) {
  ZPoly lcm(1);
  for (const auto& [w, c] : p.terms()) lcm = divexact(lcm * c.den(), gcd(lcm, c.den()));
  std::map<Word, ZPoly> q;
  ZPoly g;
  for (const auto& [w, c] : p.terms()) {
    ZPoly z = c.num() * divexact(lcm, c.den());
    g = gcd(g, z);
    q.emplace(w, std::move(z));
  }
  for (auto& [w, z] : q) z = divexact(z, g);
  return q;
}

inline std::string render_coefficient(const ZPoly& c, const std::string& param) {
  std::string s = c.str(param);
  return c.term_count() > 1 ? "(" + s + ")" : s;
}

}  // namespace detail

/// Canonical text for one relation, "lead = rhs" with the ord-maximal
/// unit-coefficient word on the left.
inline std::string serialize_relation(const Polynomial& p, const MonomialOrder& ord,
                                      const std::vector<std::string>& names,
                                      const std::string& param) {
  if (p.is_zero()) throw error("cannot serialize the zero relation");
  std::map<Word, ZPoly> q = detail::integer_form(p);
  const Word* lead = nullptr;
  for (const auto& [w, c] : q) {
    if (w.empty() || c.term_count() != 1 || c.degree() != 0) continue;
    if (c.leading() != 1 && c.leading() != -1) continue;
    if (!lead || ord.less(*lead, w)) lead = &w;
  }
  if (!lead) throw error("relation has no unit-coefficient word");
  bool flip = q.at(*lead).leading() < 0;

  std::vector<const Word*> ws;
  for (const auto& [w, c] : q)
    if (w != *lead) ws.push_back(&w);
  std::sort(ws.begin(), ws.end(), [&](const Word* a, const Word* b) { return ord.less(*b, *a); });

  std::string rhs;
  for (const Word* w : ws) {
    ZPoly c = flip ? q.at(*w) : -q.at(*w);  // rhs = lead - p
    bool neg = c.leading() < 0;
    if (neg) c = -c;
    std::string t;
    if (w->empty())
      t = detail::render_coefficient(c, param);
    else if (c == ZPoly(1))
      t = word_str(*w, names);
    else
      t = detail::render_coefficient(c, param) + " " + word_str(*w, names);
    if (rhs.empty())
      rhs = (neg ? "- " : "") + t;
    else
      rhs += (neg ? " - " : " + ") + t;
  }
  if (rhs.empty()) rhs = "0";
  return word_str(*lead, names) + " = " + rhs;
}

inline std::string serialize(const PresentationSpec& spec) {
  std::string out = "gens:";
  for (const std::string& nm : spec.generators) out += " " + nm;
  out += "\nparam: " + spec.param + "\n";
  MonomialOrder ord = spec.order();
  for (const Polynomial& p : spec.relations)
    out += "rel: " + serialize_relation(p, ord, spec.generators, spec.param) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// compact word notation: "E{3,1}", "E'{2,1}", "E^{1,3}", "E{2}", "1"
// ---------------------------------------------------------------------------

inline Word expand_word_notation(Family f, int n, const std::string& text) {
  check_rank(f, n);
  WordBuilder wb{f, n};
  Word out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    std::size_t p = 0;
    if (tok[p] != 'E') throw notation_error("bad token '" + tok + "'");
    ++p;
    bool prime = p < tok.size() && tok[p] == '\'';
    if (prime) ++p;
    bool up = p < tok.size() && tok[p] == '^';
    if (up) ++p;
    if (prime && up) throw notation_error("bad token '" + tok + "'");
    if (p >= tok.size() || tok[p] != '{' || tok.back() != '}')
      throw notation_error("bad token '" + tok + "'");
    std::string body = tok.substr(p + 1, tok.size() - p - 2);
    std::size_t comma = body.find(',');
    int i = 0, j = 0;
    try {
      if (comma == std::string::npos) {
        i = j = std::stoi(body);
      } else {
        i = std::stoi(body.substr(0, comma));
        j = std::stoi(body.substr(comma + 1));
      }
    } catch (const std::exception&) {
      throw notation_error("bad indices in token '" + tok + "'");
    }
    Word part;
    if (prime)
      part = wb.primed(i, j);
    else if (up)
      part = wb.asc(i, j);
    else
      part = wb.desc(i, j);
    out = concat(out, part);
  }
  return out;
}

/// Greedy compact rendering: longest family token (descending run, then
/// primed run) at each position, single letters otherwise. Unique by
/// construction; inverse of expand_word_notation on its output.
inline std::string word_to_notation(Family f, int n, const Word& w) {
  check_rank(f, n);
  WordBuilder wb{f, n};
  int lo = f == Family::A ? 1 : 0;

  struct Tok {
    Word word;
    std::string text;
  };
  std::vector<Tok> toks;
  for (int i = lo; i <= n - 1; ++i) {
    for (int j = lo; j <= i; ++j) {
      Word d = wb.desc(i, j);
      if (d.size() >= 2)
        toks.push_back({d, "E{" + std::to_string(i) + "," + std::to_string(j) + "}"});
    }
    if (f != Family::A)
      for (int j = 0; j <= i; ++j) {
        Word pr = wb.primed(i, j);
        if (pr.size() >= 2)
          toks.push_back({pr, i == j ? "E'{" + std::to_string(i) + "}"
                                     : "E'{" + std::to_string(i) + "," + std::to_string(j) + "}"});
      }
  }

  if (w.empty()) return "1";
  std::string out;
  std::size_t pos = 0;
  while (pos < w.size()) {
    const Tok* best = nullptr;
    for (const Tok& t : toks) {
      if (best && t.word.size() <= best->word.size()) continue;
      if (t.word.size() > w.size() - pos) continue;
      if (std::equal(t.word.begin(), t.word.end(), w.begin() + pos)) best = &t;
    }
    std::string text;
    std::size_t len = 1;
    if (best) {
      text = best->text;
      len = best->word.size();
    } else {
      text = "E{" + std::to_string(static_cast<int>(w[pos]) + lo) + "}";
    }
    if (!out.empty()) out += ' ';
    out += text;
    pos += len;
  }
  return out;
}

}  // namespace gsb
