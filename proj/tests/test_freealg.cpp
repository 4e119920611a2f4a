#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "gsb/freealg.hpp"
#include "support.hpp"

using namespace gsb;

namespace {

// all words of length <= max_len over the alphabet
std::vector<Word> all_words(std::size_t alphabet, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t start = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t k = start; k < end; ++k)
      for (GenId g = 0; g < alphabet; ++g) {
        Word w = out[k];
        w.push_back(g);
        out.push_back(std::move(w));
      }
    start = end;
  }
  return out;
}

}  // namespace

TEST_CASE("deg-lex word comparison") {
  MonomialOrder ord(3);  // e1 < e2 < e3 at ids 0 < 1 < 2

  CHECK(compare_words({0}, {1}, ord) == Ordering::less);           // E1 < E2
  CHECK(compare_words({1}, {0, 0}, ord) == Ordering::less);        // degree dominates
  CHECK(compare_words({0, 2}, {1, 0}, ord) == Ordering::less);     // first letters decide
  CHECK(compare_words({1, 0}, {1, 0}, ord) == Ordering::equal);
  CHECK(compare_words({2}, {0, 1}, ord) == Ordering::less);
  CHECK(compare_words({1, 2}, {1, 0}, ord) == Ordering::greater);

  CHECK_THROWS_AS(compare_words({0, 7}, {1}, ord), invalid_generator_error);
}

TEST_CASE("deg-lex is a strict total order on a finite word set") {
  MonomialOrder ord(3);
  std::vector<Word> words = all_words(3, 4);
  REQUIRE(words.size() == 121);

  // trichotomy and antisymmetry on every pair
  for (const Word& u : words)
    for (const Word& v : words) {
      Ordering uv = ord.compare(u, v);
      Ordering vu = ord.compare(v, u);
      if (u == v) {
        CHECK(uv == Ordering::equal);
      } else {
        CHECK(uv != Ordering::equal);
        CHECK((uv == Ordering::less) == (vu == Ordering::greater));
      }
    }

  // sorting yields a strictly increasing chain, so comparisons are
  // transitive on this set and descending chains are bounded by its size
  std::sort(words.begin(), words.end(), [&](const Word& a, const Word& b) { return ord.less(a, b); });
  for (std::size_t k = 0; k + 1 < words.size(); ++k) CHECK(ord.less(words[k], words[k + 1]));
}

TEST_CASE("multiplication compatibility of the order") {
  support::Rng rng(20240811);
  MonomialOrder ord(4);
  for (int iter = 0; iter < 2000; ++iter) {
    Word u = support::random_word(rng, 4, 5);
    Word v = support::random_word(rng, 4, 5);
    if (ord.compare(u, v) == Ordering::equal) continue;
    if (ord.less(v, u)) std::swap(u, v);
    Word a = support::random_word(rng, 4, 4);
    Word b = support::random_word(rng, 4, 4);
    CHECK(ord.less(concat(a, concat(u, b)), concat(a, concat(v, b))));
  }
}

TEST_CASE("ranked orders") {
  // same alphabet, reversed ranking
  MonomialOrder ord(std::vector<unsigned>{2, 1, 0});
  CHECK(ord.less({2}, {0}));
  CHECK(ord.letter_at_rank(0) == 2);
  CHECK_THROWS_AS(MonomialOrder(std::vector<unsigned>{0, 0, 1}), error);
}

TEST_CASE("leading terms") {
  MonomialOrder ord(3);  // ids 0,1,2

  // E1E1 - d E1, monic quadratic
  Polynomial p = Polynomial::term({0, 0}) - Polynomial::term({0}, ParamScalar::delta());
  auto [lw, lc] = leading_term(p, ord);
  CHECK(lw == Word{0, 0});
  CHECK(lc.is_one());

  // the single term 1
  auto [iw, ic] = leading_term(Polynomial::term({}), ord);
  CHECK(iw.empty());
  CHECK(ic.is_one());

  // d E2E0 + 2 E0E2 under e0 < e1 < e2
  Polynomial q = Polynomial::term({2, 0}, ParamScalar::delta()) + Polynomial::term({0, 2}, ParamScalar(2));
  auto [qw, qc] = leading_term(q, ord);
  CHECK(qw == Word{2, 0});
  CHECK(qc == ParamScalar::delta());

  CHECK_THROWS_AS(leading_term(Polynomial{}, ord), empty_polynomial_error);
}

TEST_CASE("polynomial arithmetic basics") {
  Polynomial e1 = Polynomial::term({0});
  Polynomial e2 = Polynomial::term({1});

  CHECK(add(e1, -e1).is_zero());

  Polynomial s = scale(ParamScalar::delta(), e1 + e2);
  CHECK(s == Polynomial::term({0}, ParamScalar::delta()) + Polynomial::term({1}, ParamScalar::delta()));

  // E2 (E1 - d 1) E2 = E2E1E2 - d E2E2
  Polynomial p = e1 - Polynomial::term({}, ParamScalar::delta());
  Polynomial m = mul_word({1}, p, {1});
  CHECK(m == Polynomial::term({1, 0, 1}) - Polynomial::term({1, 1}, ParamScalar::delta()));
}

TEST_CASE("ring axioms on random triples") {
  support::Rng rng(913);
  for (int iter = 0; iter < 400; ++iter) {
    Polynomial p = support::random_poly(rng, 3);
    Polynomial q = support::random_poly(rng, 3);
    Polynomial r = support::random_poly(rng, 3);
    CHECK(add(add(p, q), r) == add(p, add(q, r)));
    CHECK(add(p, q) == add(q, p));
    CHECK(mul(p, add(q, r)) == add(mul(p, q), mul(p, r)));
    CHECK(mul(add(p, q), r) == add(mul(p, r), mul(q, r)));
    CHECK(mul(mul(p, q), r) == mul(p, mul(q, r)));
    ParamScalar c = support::random_scalar(rng, true);
    CHECK(scale(c, mul(p, q)) == mul(scale(c, p), q));
    CHECK(sub(p, p).is_zero());
  }
}

TEST_CASE("scalar arithmetic") {
  ParamScalar d = ParamScalar::delta();

  CHECK(d * d == ParamScalar::delta(2));
  CHECK(exact_divide(ParamScalar::delta(1, 2), ParamScalar(2)) == d);

  ParamScalar inv = exact_divide(ParamScalar(1), d);
  CHECK(inv.num() == ZPoly(1));
  CHECK(inv.den() == ZPoly::param());
  CHECK(inv * d == ParamScalar(1));

  CHECK_THROWS_AS(exact_divide(d, ParamScalar(0)), division_by_zero_error);

  // reduced canonical fractions
  CHECK(ParamScalar(ZPoly::param(1, 2), ZPoly(2)) == d);
  CHECK(ParamScalar(ZPoly(1), ZPoly(-2)) == ParamScalar(ZPoly(-1), ZPoly(2)));
  ParamScalar half_ring = ParamScalar(ZPoly::param(2) - ZPoly(1), ZPoly::param(1) - ZPoly(1));
  CHECK(half_ring == ParamScalar(ZPoly::param(1) + ZPoly(1)));  // (d^2-1)/(d-1) = d+1
}

TEST_CASE("scalar field axioms on random values") {
  support::Rng rng(5151);
  for (int iter = 0; iter < 500; ++iter) {
    ParamScalar a = support::random_scalar(rng, true);
    ParamScalar b = support::random_scalar(rng, true);
    ParamScalar c = support::random_scalar(rng, true);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a - a == ParamScalar(0));
    if (!b.is_zero()) CHECK(exact_divide(a, b) * b == a);
  }
}

TEST_CASE("zpoly gcd and exact division") {
  ZPoly f = ZPoly::param(2, 4) - ZPoly(4);  // 4d^2 - 4
  ZPoly g = ZPoly::param(1, 2) - ZPoly(2);  // 2d - 2
  CHECK(gcd(f, g) == g);
  CHECK(divexact(f, g) == ZPoly::param(1, 2) + ZPoly(2));
  CHECK(gcd(ZPoly(0), ZPoly(-6)) == ZPoly(6));
  CHECK_THROWS_AS(divexact(f, ZPoly(0)), division_by_zero_error);
}

TEST_CASE("scalar and polynomial rendering") {
  CHECK(ZPoly::param(2).str() == "d^2");
  CHECK((ZPoly::param(2) - ZPoly(1)).str() == "d^2 - 1");
  CHECK(ZPoly::param(3, 2).str() == "2*d^3");
  CHECK(ParamScalar(ZPoly(1), ZPoly::param()).str() == "1/d");
  CHECK(ParamScalar(ZPoly::param(), ZPoly(2)).str() == "d/2");

  MonomialOrder ord(3);
  std::vector<std::string> names{"e0", "e1", "e2"};
  Polynomial p = Polynomial::term({0, 2, 1, 0}, ParamScalar::delta());
  CHECK(poly_str(p, ord, names) == "d * e0 e2 e1 e0");
  CHECK(poly_str(Polynomial{}, ord, names) == "0");
  Polynomial q = Polynomial::term({1}) - Polynomial::term({}, ParamScalar(2));
  CHECK(poly_str(q, ord, names) == "e1 - 2");
}

TEST_CASE("two-delta coefficient form") {
  unsigned a = 99, b = 99;
  CHECK(ParamScalar::delta(2, 2).two_delta_form(&a, &b));
  CHECK(a == 1);
  CHECK(b == 2);
  CHECK(ParamScalar(1).two_delta_form(&a, &b));
  CHECK(a == 0);
  CHECK(b == 0);
  CHECK(ParamScalar(4).two_delta_form());
  CHECK_FALSE(ParamScalar(3).two_delta_form());
  CHECK_FALSE(ParamScalar(-2).two_delta_form());
  CHECK_FALSE(ParamScalar(ZPoly::param(), ZPoly(2)).two_delta_form());
  CHECK_FALSE((ParamScalar::delta() + ParamScalar(1)).two_delta_form());
}
