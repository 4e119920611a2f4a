#pragma once

// Brute-force oracles, deliberately independent of the library's automaton,
// counting and formula paths.

#include <vector>

#include "gsb/freealg.hpp"
#include "gsb/scalar.hpp"

namespace oracle {

using gsb::BigInt;
using gsb::GenId;
using gsb::Word;

inline bool contains_factor(const Word& w, const Word& f) {
  if (f.empty() || f.size() > w.size()) return f.empty();
  for (std::size_t p = 0; p + f.size() <= w.size(); ++p) {
    bool hit = true;
    for (std::size_t k = 0; k < f.size(); ++k)
      if (w[p + k] != f[k]) {
        hit = false;
        break;
      }
    if (hit) return true;
  }
  return false;
}

inline bool is_standard(const Word& w, const std::vector<Word>& leads) {
  for (const Word& lead : leads)
    if (contains_factor(w, lead)) return false;
  return true;
}

/// All words of length <= max_len over the alphabet avoiding every lead as a
/// factor, by direct generation and naive factor scans.
inline std::vector<Word> bruteforce_standard(std::size_t alphabet, const std::vector<Word>& leads,
                                             std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (GenId g = 0; g < alphabet; ++g) {
        Word wg = w;
        wg.push_back(g);
        if (is_standard(wg, leads)) {
          out.push_back(wg);
          next.push_back(std::move(wg));
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

/// Catalan numbers through the convolution recurrence.
inline BigInt catalan_recurrence(int n) {
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt s = 0;
    for (int k = 0; k < m; ++k) s += c[k] * c[m - 1 - k];
    c[m] = s;
  }
  return c[static_cast<std::size_t>(n)];
}

/// East/north paths from (x0, 0) to (n, n) staying weakly below the
/// diagonal, counted by explicit recursion over the grid.
inline BigInt ballot_paths_bruteforce(int x0, int n) {
  struct Rec {
    int n;
    BigInt walk(int x, int y) {
      if (y > x || x > n) return 0;
      if (x == n && y == n) return 1;
      return walk(x + 1, y) + walk(x, y + 1);
    }
  };
  return Rec{n}.walk(x0, 0);
}

}  // namespace oracle
