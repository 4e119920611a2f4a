#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gsb/freealg.hpp"

namespace gsb {

enum class RuleOrigin { defining_relation, lemma_derived, completion_generated };

/// Monic rewrite rule: the stored polynomial is lead + tail with the lead
/// coefficient 1 and every tail word strictly below the lead. Rewriting
/// replaces an occurrence of the lead by -tail.
struct RewriteRule {
  Word lead;
  Polynomial tail;
  RuleOrigin origin = RuleOrigin::defining_relation;

  Polynomial polynomial() const { return Polynomial::term(lead) + tail; }

  bool operator==(const RewriteRule& o) const { return lead == o.lead && tail == o.tail; }
};

/// Orients and normalizes a nonzero polynomial into a monic rule. A non-unit
/// leading coefficient is divided out through the fraction field.
inline RewriteRule make_rule(const Polynomial& p, const MonomialOrder& ord,
                             RuleOrigin origin = RuleOrigin::defining_relation) {
  auto [lw, lc] = leading_term(p, ord);
  if (lw.empty()) throw degenerate_rule_error("rule lead is the empty word");
  Polynomial tail = p;
  tail.add_term(lw, -lc);
  if (!lc.is_one()) tail = scale(ParamScalar(1) / lc, tail);
  for (const auto& [w, c] : tail.terms()) {
    if (!ord.less(w, lw)) throw error("tail term not below the rule lead");
  }
  return RewriteRule{std::move(lw), std::move(tail), origin};
}

struct RuleSet {
  MonomialOrder order;
  std::vector<RewriteRule> rules;  // indices are stable identifiers
};

inline RuleSet make_rule_set(const MonomialOrder& ord, const std::vector<Polynomial>& polys,
                             RuleOrigin origin = RuleOrigin::defining_relation) {
  RuleSet s{ord, {}};
  s.rules.reserve(polys.size());
  for (const Polynomial& p : polys) s.rules.push_back(make_rule(p, ord, origin));
  return s;
}

struct ReductionStep {
  std::size_t rule;
  std::size_t position;
  Word left, right;   // cofactors a, b with a·lead·b = rewritten word
  ParamScalar coeff;  // coefficient of the rewritten word at that step
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

struct ReductionResult {
  Polynomial normal_form;
  ReductionTrace trace;
};

namespace detail {

struct Reduction {
  std::size_t rule;
  std::size_t position;
};

// Lowest applicable rule index, then its leftmost occurrence.
inline std::optional<Reduction> find_reduction(const Word& w, const RuleSet& S) {
  for (std::size_t r = 0; r < S.rules.size(); ++r) {
    std::size_t p = find_factor(w, S.rules[r].lead);
    if (p != npos) return Reduction{r, p};
  }
  return std::nullopt;
}

inline void apply_step(Polynomial& cur, ReductionTrace& trace, const Word& w, ParamScalar c,
                       std::size_t rule_idx, std::size_t pos, const RuleSet& S) {
  const RewriteRule& rule = S.rules[rule_idx];
  Word a(w.begin(), w.begin() + pos);
  Word b(w.begin() + pos + rule.lead.size(), w.end());
  cur = add(cur, scale(-c, mul_word(a, rule.polynomial(), b)));
  trace.steps.push_back({rule_idx, pos, std::move(a), std::move(b), std::move(c)});
}

// Term words in descending order under the ambient monomial order.
inline std::vector<const Word*> terms_descending(const Polynomial& p, const MonomialOrder& ord) {
  std::vector<const Word*> ws;
  ws.reserve(p.term_count());
  for (const auto& [w, c] : p.terms()) ws.push_back(&w);
  std::sort(ws.begin(), ws.end(), [&](const Word* a, const Word* b) { return ord.less(*b, *a); });
  return ws;
}

}  // namespace detail

/// Exhaustive reduction by S under the deterministic strategy: rewrite the
/// maximal reducible term, picking the lowest rule index and then the
/// leftmost position. Terminates because every step replaces a word by
/// strictly smaller ones. When S is closed under composition the result does
/// not depend on the strategy.
inline ReductionResult normal_form(const Polynomial& p, const RuleSet& S) {
  Polynomial cur = p;
  ReductionTrace trace;
  for (;;) {
    bool stepped = false;
    for (const Word* w : detail::terms_descending(cur, S.order)) {
      if (auto red = detail::find_reduction(*w, S)) {
        detail::apply_step(cur, trace, *w, cur.coeff(*w), red->rule, red->position, S);
        stepped = true;
        break;
      }
    }
    if (!stepped) break;
  }
  return {std::move(cur), std::move(trace)};
}

/// Reduction under a uniformly random admissible strategy: any reducible
/// term, any applicable rule, any occurrence. Used to exercise the
/// strategy-independence of normal forms on closed sets.
template <class URBG>
ReductionResult normal_form_random(const Polynomial& p, const RuleSet& S, URBG& rng) {
  Polynomial cur = p;
  ReductionTrace trace;
  struct Cand {
    Word w;
    std::size_t rule, pos;
  };
  for (;;) {
    std::vector<Cand> cands;
    for (const auto& [w, c] : cur.terms()) {
      for (std::size_t r = 0; r < S.rules.size(); ++r) {
        for (std::size_t p0 = find_factor(w, S.rules[r].lead); p0 != npos;
             p0 = find_factor(w, S.rules[r].lead, p0 + 1)) {
          cands.push_back({w, r, p0});
        }
      }
    }
    if (cands.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
    const Cand& c = cands[pick(rng)];
    detail::apply_step(cur, trace, c.w, cur.coeff(c.w), c.rule, c.pos, S);
  }
  return {std::move(cur), std::move(trace)};
}

/// Replays a trace: sum of coeff·a·(rule polynomial)·b over all steps.
/// For any reduction of p this sum equals p - normal_form(p) exactly.
inline Polynomial replay_trace(const ReductionTrace& trace, const RuleSet& S) {
  Polynomial acc;
  for (const ReductionStep& st : trace.steps) {
    acc = add(acc, scale(st.coeff, mul_word(st.left, S.rules[st.rule].polynomial(), st.right)));
  }
  return acc;
}

enum class CompositionKind { intersection, inclusion };

/// Critical pair of two monic rules p (index `left`) and q (index `right`).
/// Intersection: lead(p)·a = b·lead(q) = w with a proper overlap; the value
/// is p·a - b·q. Inclusion: a·lead(p)·b = lead(q) = w with a != 1; the value
/// is a·p·b - q. Every term of the value lies strictly below w.
struct Composition {
  CompositionKind kind;
  std::size_t left, right;
  Word overlap;  // w
  Word a, b;
  Polynomial value;
};

namespace detail {

inline void pair_compositions(const RuleSet& S, std::size_t i, std::size_t j,
                              std::vector<Composition>& out) {
  const Word& lp = S.rules[i].lead;
  const Word& lq = S.rules[j].lead;
  const Polynomial pi = S.rules[i].polynomial();
  const Polynomial pj = S.rules[j].polynomial();

  // intersections: a suffix of lead(i) equals a prefix of lead(j)
  std::size_t tmax = std::min(lp.size(), lq.size());
  for (std::size_t t = 1; t <= tmax; ++t) {
    if (t == lq.size() && lq.size() < lp.size()) continue;  // factor case: inclusion of j in i
    if (t == lp.size() && t == lq.size() && i >= j) continue;  // equal leads once; self is trivial
    if (!std::equal(lp.end() - t, lp.end(), lq.begin())) continue;
    Word b(lp.begin(), lp.end() - t);
    Word a(lq.begin() + t, lq.end());
    Composition c{CompositionKind::intersection, i, j, concat(b, lq), a, b, Polynomial{}};
    c.value = sub(mul_word({}, pi, a), mul_word(b, pj, {}));
    out.push_back(std::move(c));
  }

  // inclusions: lead(i) a strict factor of lead(j) at offset >= 1 (the
  // offset-0 embedding is already the full-prefix intersection above)
  if (lp.size() < lq.size()) {
    for (std::size_t off = 1; off + lp.size() <= lq.size(); ++off) {
      if (!std::equal(lp.begin(), lp.end(), lq.begin() + off)) continue;
      Word a(lq.begin(), lq.begin() + off);
      Word b(lq.begin() + off + lp.size(), lq.end());
      Composition c{CompositionKind::inclusion, i, j, lq, a, b, Polynomial{}};
      c.value = sub(mul_word(a, pi, b), mul_word({}, pj, {}));
      out.push_back(std::move(c));
    }
  }
}

// Processing order: overlap words ascending, ties by kind and rule indices.
struct CompositionBefore {
  const MonomialOrder* ord;
  bool operator()(const Composition& x, const Composition& y) const {
    Ordering o = ord->compare(x.overlap, y.overlap);
    if (o != Ordering::equal) return o == Ordering::less;
    if (x.kind != y.kind) return x.kind < y.kind;
    if (x.left != y.left) return x.left < y.left;
    if (x.right != y.right) return x.right < y.right;
    return x.b.size() < y.b.size();
  }
};

}  // namespace detail

/// All compositions among the rules of S, each proper overlap and each
/// strict factor embedding exactly once, sorted in processing order.
inline std::vector<Composition> find_compositions(const RuleSet& S) {
  std::vector<Composition> out;
  for (std::size_t i = 0; i < S.rules.size(); ++i)
    for (std::size_t j = 0; j < S.rules.size(); ++j) detail::pair_compositions(S, i, j, out);
  std::sort(out.begin(), out.end(), detail::CompositionBefore{&S.order});
  return out;
}

struct ClosureWitness {
  Composition composition;
  Polynomial normal_form;
};

struct ClosureReport {
  bool closed = true;
  std::vector<ClosureWitness> witnesses;  // compositions with nonzero normal forms
};

/// S is closed under composition iff every composition value reduces to 0
/// with every step rewriting strictly below the overlap word. The latter is
/// automatic (values start below the overlap) but is still checked on the
/// trace.
inline ClosureReport is_closed(const RuleSet& S) {
  ClosureReport report;
  for (Composition& c : find_compositions(S)) {
    ReductionResult r = normal_form(c.value, S);
    for (const ReductionStep& st : r.trace.steps) {
      Word u = concat(st.left, concat(S.rules[st.rule].lead, st.right));
      if (!S.order.less(u, c.overlap)) throw error("reduction step not below the overlap word");
    }
    if (!r.normal_form.is_zero())
      report.witnesses.push_back({std::move(c), std::move(r.normal_form)});
  }
  report.closed = report.witnesses.empty();
  return report;
}

struct CompletionLimits {
  std::size_t max_new_rules = 4096;
  std::size_t max_lead_degree = 64;
};

enum class CompletionStatus { completed, limit_hit };

struct CompletionResult {
  RuleSet rules;
  CompletionStatus status = CompletionStatus::completed;
  std::size_t pending = 0;  // unprocessed compositions when a limit was hit
};

/// Shirshov completion: repeatedly reduce the smallest pending composition
/// and adjoin its nonzero normal form as a new monic rule until no
/// composition survives reduction. Deterministic for fixed limits.
inline CompletionResult complete(const RuleSet& S, CompletionLimits limits = {}) {
  RuleSet work = S;
  std::set<Composition, detail::CompositionBefore> queue(detail::CompositionBefore{&work.order});
  {
    std::vector<Composition> seed = find_compositions(work);
    queue.insert(std::make_move_iterator(seed.begin()), std::make_move_iterator(seed.end()));
  }
  std::size_t added = 0;
  while (!queue.empty()) {
    Composition c = *queue.begin();
    queue.erase(queue.begin());
    ReductionResult r = normal_form(c.value, work);
    if (r.normal_form.is_zero()) continue;
    RewriteRule rule = make_rule(r.normal_form, work.order, RuleOrigin::completion_generated);
    if (added == limits.max_new_rules || rule.lead.size() > limits.max_lead_degree) {
      return {std::move(work), CompletionStatus::limit_hit, queue.size() + 1};
    }
    ++added;
    std::size_t k = work.rules.size();
    work.rules.push_back(std::move(rule));
    std::vector<Composition> fresh;
    for (std::size_t i = 0; i <= k; ++i) {
      detail::pair_compositions(work, i, k, fresh);
      if (i != k) detail::pair_compositions(work, k, i, fresh);
    }
    queue.insert(std::make_move_iterator(fresh.begin()), std::make_move_iterator(fresh.end()));
  }
  return {std::move(work), CompletionStatus::completed, 0};
}

/// Interreduction: drops rules implied by the others and reduces every tail,
/// leaving no rule lead that contains another rule's lead as a factor. The
/// generated two-sided ideal is unchanged.
inline RuleSet interreduce(const RuleSet& S) {
  RuleSet work = S;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.rules.size(); ++i) {
      RuleSet others{work.order, {}};
      others.rules.reserve(work.rules.size() - 1);
      for (std::size_t j = 0; j < work.rules.size(); ++j)
        if (j != i) others.rules.push_back(work.rules[j]);
      ReductionResult r = normal_form(work.rules[i].polynomial(), others);
      if (r.normal_form.is_zero()) {
        work.rules.erase(work.rules.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      RewriteRule nr = make_rule(r.normal_form, work.order, work.rules[i].origin);
      if (!(nr == work.rules[i])) {
        work.rules[i] = std::move(nr);
        changed = true;
        break;
      }
    }
  }
  return work;
}

}  // namespace gsb
