#include "lie2u/free_algebra.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lie2u;

namespace {

NcPolynomial P(Word w, Scalar c = 1) { return NcPolynomial(std::move(w), std::move(c)); }

const Letter f1 = small(1), f2 = small(2), f3 = small(3), f9 = small(9);
const Letter F1 = big(1), F2 = big(2), F3 = big(3);

}  // namespace

TEST_CASE("letter order") {
  CHECK(compare_letters(f1, f2) == std::strong_ordering::less);
  CHECK(compare_letters(f9, F1) == std::strong_ordering::less);
  CHECK(compare_letters(F2, F2) == std::strong_ordering::equal);
  // Big letters ascend with the index; see the leading-word test below.
  CHECK(compare_letters(F2, F1) == std::strong_ordering::greater);
  CHECK(compare_letters(F1, F3) == std::strong_ordering::less);
}

TEST_CASE("decreasing Big order would change the leading word of (3)") {
  // F_2 f_1 - F_1 f_2 + f_2 F_1 - f_1 F_2 must lead with F_2 f_1. If F_2 < F_1
  // the largest word would be F_1 f_2 instead.
  NcPolynomial r = P({F2, f1}) - P({F1, f2}) + P({f2, F1}) - P({f1, F2});
  CHECK(r.leading_word() == Word{F2, f1});
  auto decreasing_rank = [](Letter a) { return a.cls == LetterClass::Small ? a.index : 100 - a.index; };
  Word best;
  for (const auto& [w, c] : r.terms()) {
    auto key = [&](const Word& u) {
      std::vector<int> k;
      for (Letter a : u) k.push_back(decreasing_rank(a));
      return k;
    };
    if (best.empty() || key(w) > key(best)) best = w;
  }
  CHECK(best == Word{F1, f2});
}

TEST_CASE("primed letters are unordered") {
  CHECK_THROWS_AS(compare_letters(primed(1), f1), UnorderedGenerator);
  CHECK_THROWS_WITH(compare_letters(F1, primed(2)), "unordered generator");
  CHECK_THROWS_AS(compare_words(Word{f1, primed(1)}, Word{f1, f2}), UnorderedGenerator);
  CHECK_THROWS_AS(P({primed(1), f1}).leading_word(), UnorderedGenerator);
}

TEST_CASE("word order") {
  CHECK(compare_words(Word{f1, f1}, Word{f2}) == std::strong_ordering::greater);
  CHECK(compare_words(Word{F1, f2}, Word{F1, f1}) == std::strong_ordering::greater);
  CHECK(compare_words(Word{f2, F1}, Word{F1, f2}) == std::strong_ordering::less);
  CHECK(compare_words(Word{}, Word{}) == std::strong_ordering::equal);
  CHECK(compare_words(Word{}, Word{f1}) == std::strong_ordering::less);
}

TEST_CASE("word order agrees with the rank oracle and is monomial") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    const int d = 1 + trial % 4;
    Word u = oracle::random_word(rng, d, 8), v = oracle::random_word(rng, d, 8);
    Word a = oracle::random_word(rng, d, 4), b = oracle::random_word(rng, d, 4);
    auto expected = oracle::key(u, d) <=> oracle::key(v, d);
    REQUIRE(compare_words(u, v) == expected);
    REQUIRE(compare_words(v, u) == (oracle::key(v, d) <=> oracle::key(u, d)));
    if (expected == std::strong_ordering::less)
      REQUIRE(compare_words(concat(a, u, b), concat(a, v, b)) == std::strong_ordering::less);
  }
}

TEST_CASE("sorting a word set is consistent") {
  std::mt19937 rng(11);
  std::vector<Word> ws;
  for (int k = 0; k < 400; ++k) ws.push_back(oracle::random_word(rng, 3, 5));
  auto less = [](const Word& u, const Word& v) { return compare_words(u, v) < 0; };
  std::sort(ws.begin(), ws.end(), less);
  for (std::size_t k = 0; k + 1 < ws.size(); ++k) {
    CHECK_FALSE(less(ws[k + 1], ws[k]));
    if (!less(ws[k], ws[k + 1])) CHECK(ws[k] == ws[k + 1]);
  }
}

TEST_CASE("polynomial arithmetic") {
  NcPolynomial a = P({f1}) + P({F1});
  NcPolynomial b = P({f1}) - P({F1});
  CHECK(a * b == P({f1, f1}) - P({f1, F1}) + P({F1, f1}) - P({F1, F1}));
  CHECK(a * NcPolynomial::one() == a);
  CHECK((NcPolynomial{} * a).is_zero());
  CHECK((a - a).is_zero());
  CHECK((Scalar(0) * a).is_zero());
  CHECK(a.degree() == 1);
  CHECK(NcPolynomial{}.degree() == -1);

  NcPolynomial half = P({f2}, Scalar(1, 2)) + P({f2}, Scalar(1, 2));
  CHECK(half == P({f2}));
  CHECK(half.size() == 1);
  CHECK(half.coefficient(Word{f2}) == 1);
  CHECK(half.coefficient(Word{f1}) == 0);
}

TEST_CASE("zero coefficients are never stored") {
  NcPolynomial p;
  p.add_term(Word{f1}, 0);
  CHECK(p.is_zero());
  p.add_term(Word{f1}, 3);
  p.add_term(Word{f1}, -3);
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
}

TEST_CASE("arithmetic is exact") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    NcPolynomial p = oracle::random_polynomial(rng, 2, 4, 6);
    NcPolynomial q = oracle::random_polynomial(rng, 2, 4, 6);
    REQUIRE((p + q) - q == p);
    REQUIRE(Scalar(1, 3) * (Scalar(3) * p) == p);
    NcPolynomial r = oracle::random_polynomial(rng, 2, 3, 4);
    REQUIRE((p + q) * r == p * r + q * r);
    REQUIRE((p * q) * r == p * (q * r));
  }
}

TEST_CASE("leading word of a product is the product of leading words") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    NcPolynomial p = oracle::random_polynomial(rng, 3, 4, 5);
    NcPolynomial q = oracle::random_polynomial(rng, 3, 4, 5);
    if (p.is_zero() || q.is_zero()) continue;
    REQUIRE((p * q).leading_word() == concat(p.leading_word(), q.leading_word()));
  }
}

TEST_CASE("leading word") {
  CHECK(P({F2, f1}, 1).leading_word() == Word{F2, f1});
  NcPolynomial r1 = P({f2, f1}) - P({f1, f2});
  CHECK(r1.leading_word() == Word{f2, f1});
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      NcPolynomial r3 = P({big(j), small(i)}) - P({big(i), small(j)}) + P({small(j), big(i)}) -
                        P({small(i), big(j)});
      CHECK(r3.leading_word() == Word{big(j), small(i)});
    }
  CHECK(P({F3, f2, f1}, 5).leading_coefficient() == 5);
  CHECK_THROWS(NcPolynomial{}.leading_word());
}

TEST_CASE("make_monic") {
  NcPolynomial p = P({f2, f1}, 3) - P({f1, f2}, 3);
  CHECK(make_monic(p) == P({f2, f1}) - P({f1, f2}));
  CHECK(make_monic(make_monic(p)) == make_monic(p));
  CHECK(make_monic(P({F1, F2}, Scalar(-1, 2))) == P({F1, F2}));
  CHECK_THROWS(make_monic(NcPolynomial{}));
}

TEST_CASE("substitute") {
  const Letter x = small(1), y = small(2), xp = primed(1), yp = primed(2);
  NcPolynomial third = P({x, y}) - P({x, yp}) - P({xp, y}) + P({xp, yp});
  NcPolynomial r = third;
  r = substitute(r, xp, P({x}) - P({F1}));
  r = substitute(r, yp, P({y}) - P({F2}));
  CHECK(r == P({F1, F2}));

  NcPolynomial swap = P({yp, xp}) - P({xp, yp});
  swap = substitute(substitute(swap, xp, P({x}) - P({F1})), yp, P({y}) - P({F2}));
  // Expansion: f2f1 - f1f2 plus the (3)-shaped part and F2F1 - F1F2.
  NcPolynomial expected = P({y, x}) - P({x, y}) - P({y, F1}) - P({F2, x}) + P({F2, F1}) + P({x, F2}) +
                          P({F1, y}) - P({F1, F2});
  CHECK(swap == expected);
  NcPolynomial mod12 = swap - (P({y, x}) - P({x, y})) - P({F2, F1}) + P({F1, F2});
  CHECK(mod12 == -(P({F2, x}) - P({F1, y}) + P({y, F1}) - P({x, F2})));

  CHECK(substitute(P({f1, f2}), primed(3), P({F3})) == P({f1, f2}));
}

TEST_CASE("sandwich and concat") {
  NcPolynomial p = P({f2}) + P({F1}, 2);
  CHECK(sandwich(Word{f1}, p, Word{F2}) == P({f1, f2, F2}) + P({f1, F1, F2}, 2));
  CHECK(concat(Word{}, Word{f1}) == Word{f1});
  CHECK(has_primed(Word{f1, primed(2)}));
  CHECK_FALSE(has_primed(Word{f1, F2}));
}

TEST_CASE("alphabet") {
  Alphabet a(2);
  CHECK(a.contains(Word{f1, F2}));
  CHECK_FALSE(a.contains(Word{f3}));
  CHECK(a.ordered_letters() == std::vector<Letter>{f1, f2, F1, F2});
  CHECK_THROWS(Alphabet(0));
}

TEST_CASE("text form") {
  CHECK(to_string(Word{}) == "1");
  CHECK(to_string(Word{F1, f2, f3}) == "F1 f2 f3");
  CHECK(to_string(Word{F2, f2, F1}, true) == "G g F");
  CHECK(to_string(P({f1}, Scalar(-3, 2)) + P({F1, f2})) == "F1 f2 - 3/2 f1");
  CHECK(to_string(NcPolynomial{}) == "0");
  CHECK(to_string(primed(2)) == "f2'");
}
