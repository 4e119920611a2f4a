#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsb/presentations.hpp"
#include "gsb/rewrite.hpp"

namespace gsb {

/// Aho-Corasick recognizer for words containing some rule lead as a factor.
/// States are the trie nodes over the leads; transitions are goto-completed
/// through failure links, and every transition into a matching state is
/// collapsed to the absorbing `dead` state. A word is standard exactly when
/// its walk from the root stays live, so the live subgraph enumerates the
/// standard monomials and is acyclic exactly when there are finitely many.
class ObstructionAutomaton {
 public:
  static constexpr std::size_t dead = npos;

  ObstructionAutomaton(std::size_t alphabet, const std::vector<Word>& leads) : alphabet_(alphabet) {
    if (alphabet == 0) throw error("automaton over an empty alphabet");
    for (const Word& lead : leads)
      for (GenId g : lead)
        if (g >= alphabet)
          throw invalid_generator_error("lead letter " + std::to_string(g) + " outside alphabet");

    // trie
    std::vector<std::vector<std::size_t>> child(1, std::vector<std::size_t>(alphabet, npos));
    std::vector<bool> match(1, false);
    for (const Word& lead : leads) {
      std::size_t s = 0;
      for (GenId g : lead) {
        if (child[s][g] == npos) {
          child[s][g] = child.size();
          child.emplace_back(alphabet, npos);
          match.push_back(false);
        }
        s = child[s][g];
      }
      if (lead.empty())
        match[0] = true;
      else
        match[s] = true;
    }

    // breadth-first failure links; a state matches if any suffix does
    std::vector<std::size_t> fail(child.size(), 0);
    std::deque<std::size_t> bfs;
    for (GenId g = 0; g < alphabet; ++g) {
      std::size_t c = child[0][g];
      if (c == npos) {
        child[0][g] = 0;
      } else {
        fail[c] = 0;
        bfs.push_back(c);
      }
    }
    while (!bfs.empty()) {
      std::size_t s = bfs.front();
      bfs.pop_front();
      if (match[fail[s]]) match[s] = true;
      for (GenId g = 0; g < alphabet; ++g) {
        std::size_t c = child[s][g];
        if (c == npos) {
          child[s][g] = child[fail[s]][g];
        } else {
          fail[c] = child[fail[s]][g];
          bfs.push_back(c);
        }
      }
    }

    next_.assign(child.size(), std::vector<std::size_t>(alphabet, dead));
    for (std::size_t s = 0; s < child.size(); ++s) {
      if (match[s]) continue;  // absorbing, unreachable through live transitions
      for (GenId g = 0; g < alphabet; ++g) {
        std::size_t t = child[s][g];
        next_[s][g] = match[t] ? dead : t;
      }
    }
    root_dead_ = match[0];
  }

  std::size_t alphabet_size() const { return alphabet_; }
  std::size_t state_count() const { return next_.size(); }
  std::size_t root() const { return 0; }
  bool root_dead() const { return root_dead_; }

  std::size_t step(std::size_t s, GenId g) const {
    if (g >= alphabet_) throw invalid_generator_error("letter outside alphabet");
    return s == dead ? dead : next_[s][g];
  }

  bool is_standard(const Word& w) const {
    if (root_dead_) return false;
    std::size_t s = 0;
    for (GenId g : w) {
      s = step(s, g);
      if (s == dead) return false;
    }
    return true;
  }

  /// States reachable from the root through live transitions.
  std::vector<std::size_t> live_states() const {
    if (root_dead_) return {};
    std::vector<bool> seen(next_.size(), false);
    std::vector<std::size_t> order;
    std::deque<std::size_t> bfs{0};
    seen[0] = true;
    while (!bfs.empty()) {
      std::size_t s = bfs.front();
      bfs.pop_front();
      order.push_back(s);
      for (GenId g = 0; g < alphabet_; ++g) {
        std::size_t t = next_[s][g];
        if (t != dead && !seen[t]) {
          seen[t] = true;
          bfs.push_back(t);
        }
      }
    }
    return order;
  }

  /// Letters of some cycle in the live subgraph, if one exists.
  std::optional<Word> find_cycle() const {
    if (root_dead_) return std::nullopt;
    enum { white, gray, black };
    std::vector<int> color(next_.size(), white);
    // iterative DFS keeping the letter path to the current state
    struct Frame {
      std::size_t state;
      GenId next_letter;
    };
    std::vector<Frame> stack{{0, 0}};
    std::vector<GenId> path;
    color[0] = gray;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_letter >= alphabet_) {
        color[f.state] = black;
        stack.pop_back();
        if (!path.empty()) path.pop_back();
        continue;
      }
      GenId g = f.next_letter++;
      std::size_t t = next_[f.state][g];
      if (t == dead) continue;
      if (color[t] == gray) {
        // letters from the first visit of t to here, plus the closing letter
        Word cycle;
        std::size_t k = 0;
        for (; k < stack.size(); ++k)
          if (stack[k].state == t) break;
        for (std::size_t m = k; m + 1 < stack.size(); ++m) cycle.push_back(path[m]);
        cycle.push_back(g);
        return cycle;
      }
      if (color[t] == white) {
        color[t] = gray;
        path.push_back(g);
        stack.push_back({t, 0});
      }
    }
    return std::nullopt;
  }

 private:
  std::size_t alphabet_;
  std::vector<std::vector<std::size_t>> next_;
  bool root_dead_ = false;
};

inline ObstructionAutomaton build_automaton(const RuleSet& S) {
  std::vector<Word> leads;
  leads.reserve(S.rules.size());
  for (const RewriteRule& r : S.rules) leads.push_back(r.lead);
  return ObstructionAutomaton(S.order.alphabet_size(), leads);
}

struct CountReport {
  bool finite = false;
  std::optional<BigInt> total;     // set when finite
  std::vector<BigInt> by_degree;   // full when finite, a prefix otherwise
  std::optional<BigInt> formula;   // family dimension formula, when known
  std::optional<bool> match;       // total == formula
};

/// Exact count of S-standard monomials by path counting over the acyclic
/// live subgraph; per-degree counts up to `prefix` when it has a cycle.
inline CountReport count_standard(const RuleSet& S, std::size_t prefix = 16) {
  ObstructionAutomaton aut = build_automaton(S);
  CountReport report;
  std::vector<std::size_t> live = aut.live_states();
  report.finite = !aut.find_cycle().has_value();

  if (report.finite) {
    // one path from the root per standard word: f(s) = 1 + sum over live edges
    std::vector<std::size_t> topo = live;  // post-order via repeated relaxation
    std::vector<BigInt> f(aut.state_count(), BigInt(-1));
    // depth-first with explicit stack
    if (!aut.root_dead()) {
      std::vector<std::pair<std::size_t, bool>> stack{{aut.root(), false}};
      while (!stack.empty()) {
        auto [s, expanded] = stack.back();
        stack.pop_back();
        if (f[s] >= 0) continue;
        if (expanded) {
          BigInt total = 1;
          for (GenId g = 0; g < aut.alphabet_size(); ++g) {
            std::size_t t = aut.step(s, g);
            if (t != ObstructionAutomaton::dead) total += f[t];
          }
          f[s] = std::move(total);
          continue;
        }
        stack.push_back({s, true});
        for (GenId g = 0; g < aut.alphabet_size(); ++g) {
          std::size_t t = aut.step(s, g);
          if (t != ObstructionAutomaton::dead && f[t] < 0) stack.push_back({t, false});
        }
      }
      report.total = f[aut.root()];
    } else {
      report.total = BigInt(0);
    }
    // per-degree profile, finite so it exhausts
    if (!aut.root_dead()) {
      std::vector<BigInt> cur(aut.state_count(), BigInt(0));
      cur[aut.root()] = 1;
      for (;;) {
        BigInt layer = 0;
        for (std::size_t s : live) layer += cur[s];
        if (layer == 0) break;
        report.by_degree.push_back(layer);
        std::vector<BigInt> nxt(aut.state_count(), BigInt(0));
        for (std::size_t s : live) {
          if (cur[s] == 0) continue;
          for (GenId g = 0; g < aut.alphabet_size(); ++g) {
            std::size_t t = aut.step(s, g);
            if (t != ObstructionAutomaton::dead) nxt[t] += cur[s];
          }
        }
        cur = std::move(nxt);
      }
    }
  } else {
    std::vector<BigInt> cur(aut.state_count(), BigInt(0));
    cur[aut.root()] = 1;
    for (std::size_t d = 0; d <= prefix; ++d) {
      BigInt layer = 0;
      for (std::size_t s : live) layer += cur[s];
      report.by_degree.push_back(layer);
      std::vector<BigInt> nxt(aut.state_count(), BigInt(0));
      for (std::size_t s : live) {
        if (cur[s] == 0) continue;
        for (GenId g = 0; g < aut.alphabet_size(); ++g) {
          std::size_t t = aut.step(s, g);
          if (t != ObstructionAutomaton::dead) nxt[t] += cur[s];
        }
      }
      cur = std::move(nxt);
    }
  }
  return report;
}

namespace detail {

inline std::vector<Word> enumerate_impl(const RuleSet& S, std::optional<std::size_t> cap) {
  ObstructionAutomaton aut = build_automaton(S);
  if (!cap) {
    if (auto cycle = aut.find_cycle())
      throw infinite_enumeration_error(
          *cycle, "infinitely many standard monomials; a live cycle exists (cap required)");
  }
  std::vector<Word> out;
  if (aut.root_dead()) return out;
  // breadth-first by degree, letters in ranking order: degree-then-lex output
  std::vector<GenId> letters;
  for (unsigned r = 0; r < S.order.alphabet_size(); ++r) letters.push_back(S.order.letter_at_rank(r));
  std::vector<std::pair<Word, std::size_t>> layer{{Word{}, aut.root()}};
  out.push_back({});
  std::size_t degree = 0;
  while (!layer.empty() && (!cap || degree < *cap)) {
    std::vector<std::pair<Word, std::size_t>> next_layer;
    for (const auto& [w, s] : layer) {
      for (GenId g : letters) {
        std::size_t t = aut.step(s, g);
        if (t == ObstructionAutomaton::dead) continue;
        Word wg = w;
        wg.push_back(g);
        out.push_back(wg);
        next_layer.emplace_back(std::move(wg), t);
      }
    }
    layer = std::move(next_layer);
    ++degree;
  }
  return out;
}

}  // namespace detail

/// All standard monomials in degree-then-lex order. Throws
/// infinite_enumeration_error (with a witness cycle) when the set is
/// infinite; use the capped overload in that case.
inline std::vector<Word> enumerate_standard(const RuleSet& S) {
  return detail::enumerate_impl(S, std::nullopt);
}

/// Standard monomials of degree <= cap, degree-then-lex order.
inline std::vector<Word> enumerate_standard(const RuleSet& S, std::size_t cap) {
  return detail::enumerate_impl(S, cap);
}

// ---------------------------------------------------------------------------
// closed-form counts
// ---------------------------------------------------------------------------

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int t = 1; t <= k; ++t) {
    r *= n - k + t;
    r /= t;  // exact at every step
  }
  return r;
}

inline BigInt catalan(int n) {
  BigInt b = binomial(2 * n, n);
  BigInt d = b / (n + 1);
  if (d * (n + 1) != b) throw error("catalan division not exact");
  return d;
}

/// dim T(A_{n-1}) = C_n, dim T(B_n) = (n+2)C_n - 1, dim T(D_n) = (n+3)/2 C_n - 1.
inline BigInt dimension_formula(Family f, int n) {
  check_rank(f, n);
  BigInt c = catalan(n);
  switch (f) {
    case Family::A: return c;
    case Family::B: return (n + 2) * c - 1;
    case Family::D: {
      BigInt t = (n + 3) * c;
      if (t % 2 != 0) throw error("type D dimension not integral");
      return t / 2 - 1;
    }
    default: throw rank_error("no dimension formula for generic presentations");
  }
}

/// Number of east/north lattice paths from (ell+1, 0) to (n, n) that stay
/// weakly below the diagonal, by the reflection principle:
/// binom(2n-ell-1, n) - binom(2n-ell-1, n+1).
inline BigInt count_ballot_paths(int ell, int n) {
  if (ell < 1 || ell > n - 1)
    throw rank_error("ballot paths need 1 <= ell <= n-1");
  return binomial(2 * n - ell - 1, n) - binomial(2 * n - ell - 1, n + 1);
}

// ---------------------------------------------------------------------------
// closed-form standard monomial families
// ---------------------------------------------------------------------------

struct FamilyWords {
  std::vector<Word> a_part;      // words in the E_1..E_{n-1} subalgebra
  std::vector<Word> zero_plus;   // type B: E_0 E_{i_1,j_1}...E_{i_p,j_p}
  std::vector<Word> zero_minus;  // type B: E'_{i_1,j_1} E_{i_2,j_2}...
  std::vector<Word> zero_part;   // type D: phi(E_{i_1,j_1}) E_{i_2,j_2}...
  std::vector<Word> all;
};

namespace detail {

using IndexTuple = std::vector<std::pair<int, int>>;

// 1 <= i_1 < ... < i_p <= n-1, strictly increasing j's, i_k >= j_k >= 1
inline void a_tuples(int n, int min_i, int min_j, IndexTuple& cur, std::vector<IndexTuple>& out) {
  out.push_back(cur);
  for (int i = min_i; i <= n - 1; ++i)
    for (int j = min_j; j <= i; ++j) {
      cur.emplace_back(i, j);
      a_tuples(n, i + 1, j + 1, cur, out);
      cur.pop_back();
    }
}

// 0 <= j_1 <= ... <= j_p, a positive j strictly below its successor
inline void b_tuples(int n, int min_i, int min_j, IndexTuple& cur, std::vector<IndexTuple>& out) {
  out.push_back(cur);
  for (int i = min_i; i <= n - 1; ++i)
    for (int j = min_j; j <= i; ++j) {
      cur.emplace_back(i, j);
      b_tuples(n, i + 1, j == 0 ? 0 : j + 1, cur, out);
      cur.pop_back();
    }
}

// j chain rules of the type D family: after 0 comes >= 1, after 1 comes 0 or
// >= 2, after j > 1 comes something larger
inline void d_tuples(int n, int min_i, int prev_j, bool first, IndexTuple& cur,
                     std::vector<IndexTuple>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (int i = min_i; i <= n - 1; ++i)
    for (int j = 0; j <= i; ++j) {
      if (!first) {
        if (prev_j == 0 && j < 1) continue;
        if (prev_j == 1 && j == 1) continue;
        if (prev_j > 1 && j <= prev_j) continue;
      }
      cur.emplace_back(i, j);
      d_tuples(n, i + 1, j, false, cur, out);
      cur.pop_back();
    }
}

inline Word tuple_word(const WordBuilder& wb, const IndexTuple& t, std::size_t from = 0) {
  Word w;
  for (std::size_t k = from; k < t.size(); ++k) w = concat(w, wb.desc(t[k].first, t[k].second));
  return w;
}

}  // namespace detail

/// The closed-form standard monomial families, together with their union.
/// The union must coincide, as a set, with enumerate_standard on the
/// candidate basis; the automaton is the ground truth on any disagreement.
inline FamilyWords generate_family(Family f, int n) {
  check_rank(f, n);
  FamilyWords fw;
  WordBuilder wb{f, n};

  {
    // the E_1..E_{n-1} part is shared by all three families; in types B and
    // D these generators sit at ids 1..n-1
    detail::IndexTuple cur;
    std::vector<detail::IndexTuple> tuples;
    detail::a_tuples(n, 1, 1, cur, tuples);
    for (const auto& t : tuples) fw.a_part.push_back(detail::tuple_word(wb, t));
  }

  if (f == Family::B) {
    detail::IndexTuple cur;
    std::vector<detail::IndexTuple> tuples;
    detail::b_tuples(n, 1, 0, cur, tuples);
    for (const auto& t : tuples) {
      fw.zero_plus.push_back(concat(wb.gen(0), detail::tuple_word(wb, t)));
      if (!t.empty()) {
        Word w = concat(wb.primed(t[0].first, t[0].second), detail::tuple_word(wb, t, 1));
        fw.zero_minus.push_back(std::move(w));
      }
    }
  }

  if (f == Family::D) {
    detail::IndexTuple cur;
    std::vector<detail::IndexTuple> tuples;
    detail::d_tuples(n, 1, 0, true, cur, tuples);
    for (const auto& t : tuples) {
      // prime decoration iff j_1 j_2 != 0, reading the missing j_2 of a
      // singleton as nonzero
      bool prime = t[0].second >= 1 && (t.size() == 1 || t[1].second != 0);
      Word head = prime ? wb.primed(t[0].first, t[0].second) : wb.desc(t[0].first, t[0].second);
      fw.zero_part.push_back(concat(head, detail::tuple_word(wb, t, 1)));
    }
  }

  fw.all = fw.a_part;
  for (const auto* part : {&fw.zero_plus, &fw.zero_minus, &fw.zero_part})
    fw.all.insert(fw.all.end(), part->begin(), part->end());
  MonomialOrder ord = family_order(f, n);
  std::sort(fw.all.begin(), fw.all.end(),
            [&](const Word& a, const Word& b) { return ord.less(a, b); });
  return fw;
}

/// count_standard on the built-in candidate basis, with the family formula
/// and the match verdict filled in.
inline CountReport count_standard(Family f, int n, std::size_t prefix = 16) {
  CountReport report = count_standard(build_candidate_gsb(f, n), prefix);
  report.formula = dimension_formula(f, n);
  report.match = report.finite && report.total && *report.total == *report.formula;
  return report;
}

}  // namespace gsb
