#pragma once

// Shared deterministic random generators for the property suites.

#include <random>
#include <vector>

#include "gsb/freealg.hpp"

namespace support {

using gsb::GenId;
using gsb::ParamScalar;
using gsb::Polynomial;
using gsb::Word;
using gsb::ZPoly;

using Rng = std::mt19937_64;

inline Word random_word(Rng& rng, std::size_t alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<GenId> letter(0, static_cast<GenId>(alphabet - 1));
  Word w(len(rng));
  for (GenId& g : w) g = letter(rng);
  return w;
}

inline ZPoly random_zpoly(Rng& rng, int max_deg = 2, int max_coeff = 3) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  ZPoly p;
  int d = deg(rng);
  for (int k = 0; k <= d; ++k) p = p + ZPoly::param(static_cast<unsigned>(k), coeff(rng));
  return p;
}

inline ParamScalar random_scalar(Rng& rng, bool allow_fraction = false) {
  ZPoly num = random_zpoly(rng);
  if (!allow_fraction) return ParamScalar(num);
  ZPoly den = random_zpoly(rng, 1, 2);
  if (den.is_zero()) den = ZPoly(1);
  return ParamScalar(num, den);
}

inline ParamScalar random_nonzero_scalar(Rng& rng, bool allow_fraction = false) {
  for (;;) {
    ParamScalar c = random_scalar(rng, allow_fraction);
    if (!c.is_zero()) return c;
  }
}

inline Polynomial random_poly(Rng& rng, std::size_t alphabet, std::size_t max_terms = 4,
                              std::size_t max_len = 6, bool allow_fraction = false) {
  std::uniform_int_distribution<std::size_t> terms(0, max_terms);
  Polynomial p;
  std::size_t t = terms(rng);
  for (std::size_t k = 0; k < t; ++k)
    p.add_term(random_word(rng, alphabet, max_len), random_scalar(rng, allow_fraction));
  return p;
}

}  // namespace support
