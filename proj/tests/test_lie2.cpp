#include "lie2u/basis_enum.hpp"
#include "lie2u/lie2.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace lie2u;

namespace {

NcPolynomial P(Word w, Scalar c = 1) { return NcPolynomial(std::move(w), std::move(c)); }

LiePair nonzero_pair() {
  LiePair g(2);
  g.set_bracket1(1, 2, 1, 1);
  g.set_bracket2(1, 2, 2, 1);
  return g;
}

LiePair so3() {
  LiePair g(3);
  g.set_bracket1(1, 2, 3, 1);
  g.set_bracket1(2, 3, 1, 1);
  g.set_bracket1(3, 1, 2, 1);
  return g;
}

bool has_identity(const LiePairValidation& v, LiePairFailure::Identity id) {
  for (const auto& f : v.failures)
    if (f.identity == id) return true;
  return false;
}

}  // namespace

TEST_CASE("validation of Lie pairs") {
  CHECK(validate_lie_pair(nonzero_pair()).valid());
  CHECK(validate_lie_pair(LiePair(3)).valid());
  CHECK(validate_lie_pair(so3()).valid());
  CHECK(LiePair(2).is_abelian());
  CHECK_FALSE(nonzero_pair().is_abelian());
}

TEST_CASE("antisymmetry failures name the pair") {
  LiePair g = so3();
  g.bracket2(1, 2, 3) = 1;  // no matching -1 at (2,1,3)
  auto v = validate_lie_pair(g);
  REQUIRE_FALSE(v.valid());
  REQUIRE(has_identity(v, LiePairFailure::Identity::antisymmetry2));
  const auto& f = v.failures.front();
  CHECK(f.identity == LiePairFailure::Identity::antisymmetry2);
  CHECK(f.i == 1);
  CHECK(f.j == 2);

  LiePair diag(2);
  diag.bracket1(1, 1, 2) = 1;
  CHECK(has_identity(validate_lie_pair(diag), LiePairFailure::Identity::antisymmetry1));
}

TEST_CASE("Jacobi and mixed Jacobi failures") {
  LiePair bad(3);
  bad.set_bracket1(1, 2, 3, 1);
  bad.set_bracket1(1, 3, 1, 1);
  auto v = validate_lie_pair(bad);
  CHECK(has_identity(v, LiePairFailure::Identity::jacobi1));
  CHECK_FALSE(has_identity(v, LiePairFailure::Identity::mixed_jacobi));

  // Each bracket alone is Lie, their sum is not.
  LiePair mixed(3);
  mixed.set_bracket1(1, 2, 3, 1);
  mixed.set_bracket2(1, 3, 1, 1);
  auto m = validate_lie_pair(mixed);
  CHECK(has_identity(m, LiePairFailure::Identity::mixed_jacobi));
  CHECK_FALSE(has_identity(m, LiePairFailure::Identity::jacobi1));
  CHECK_FALSE(has_identity(m, LiePairFailure::Identity::jacobi2));
  CHECK_FALSE(validate_lie_pair(mixed.combination(1, 1)).valid());
  CHECK(validate_lie_pair(mixed.combination(1, 0)).valid());
}

TEST_CASE("validation agrees with polarization") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> coeff(-1, 1), pick(0, 2);
  int valid = 0, invalid = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + trial % 2;
    LiePair g(d);
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j)
        for (int k = 1; k <= d; ++k) {
          if (pick(rng) == 0) g.set_bracket1(i, j, k, coeff(rng));
          if (pick(rng) == 0) g.set_bracket2(i, j, k, coeff(rng));
        }
    if (trial % 17 == 0) g.bracket1(1, 2, 1) += 1;  // break antisymmetry now and then
    const bool v = validate_lie_pair(g).valid();
    REQUIRE(v == oracle::polarization_valid(g));
    (v ? valid : invalid) += 1;
  }
  CHECK(valid > 20);
  CHECK(invalid > 20);
}

TEST_CASE("original presentation") {
  auto p1 = build_presentation_original(LiePair(1));
  REQUIRE(p1.relations.size() == 1);
  const Letter x = small(1), xp = primed(1);
  CHECK(p1.relations[0] == P({x, x}) - P({x, xp}) - P({xp, x}) + P({xp, xp}));
  CHECK(p1.provenance == Provenance::original_xy_xprime);

  CHECK(build_presentation_original(LiePair(2)).relations.size() == 6);
  CHECK(build_presentation_original(LiePair(4)).relations.size() == 2 * 6 + 16);

  auto p = build_presentation_original(nonzero_pair());
  CHECK(p.relations[0] == P({small(2), small(1)}) - P({small(1), small(2)}) + P({small(1)}));
  CHECK(p.relations[1] == P({primed(2), primed(1)}) - P({primed(1), primed(2)}) + P({small(2)}));

  LiePair bad(3);
  bad.set_bracket1(1, 2, 3, 1);
  bad.set_bracket1(1, 3, 1, 1);
  CHECK_THROWS_AS(build_presentation_original(bad), std::invalid_argument);
}

TEST_CASE("change of generators") {
  auto t = transform_to_fF(build_presentation_original(LiePair(2)));
  CHECK(t.provenance == Provenance::transformed_fF);
  REQUIRE(t.relations.size() == 6);
  CHECK(t.relations[0] == P({small(2), small(1)}) - P({small(1), small(2)}));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) CHECK(t.relations[2 + 2 * (i - 1) + (j - 1)] == P({big(i), big(j)}));
  for (const auto& r : t.relations) {
    CHECK(r.leading_coefficient() == 1);
    for (const auto& [w, c] : r.terms()) CHECK_FALSE(has_primed(w));
  }
  CHECK_THROWS(transform_to_fF(t));
  CHECK_THROWS(transform_to_fF(gsb_relations_g0(2)));
}

TEST_CASE("closed-form relations for the abelian pair") {
  auto p1 = gsb_relations_g0(1);
  REQUIRE(p1.relations.size() == 1);
  CHECK(p1.relations[0] == P({big(1), big(1)}));

  auto fam = gsb_relation_families(2);
  auto count = [&](int f) { return std::count(fam.begin(), fam.end(), f); };
  CHECK(count(1) == 1);
  CHECK(count(2) == 4);
  CHECK(count(3) == 1);
  CHECK(count(4) == 1);
  CHECK(count(5) == 1);
  auto p2 = gsb_relations_g0(2);
  CHECK(std::find(p2.relations.begin(), p2.relations.end(),
                  P({big(1), small(2), big(1)}) - P({big(1), small(1), big(2)})) != p2.relations.end());
  CHECK(std::find(p2.relations.begin(), p2.relations.end(),
                  P({big(2), small(2), big(1)}) - P({big(1), small(2), big(2)})) != p2.relations.end());

  auto p3 = gsb_relations_g0(3);
  auto fam3 = gsb_relation_families(3);
  std::vector<Word> four;
  for (std::size_t k = 0; k < fam3.size(); ++k)
    if (fam3[k] == 4) four.push_back(p3.relations[k].leading_word());
  CHECK(four == std::vector<Word>{{big(1), small(2), big(1)},
                                  {big(1), small(3), big(1)},
                                  {big(1), small(3), big(2)},
                                  {big(2), small(3), big(2)}});
  CHECK_THROWS(gsb_relations_g0(0));
}

TEST_CASE("completion of the abelian presentation re-derives (1)-(5)") {
  for (int d = 1; d <= 4; ++d) {
    CAPTURE(d);
    auto t = transform_to_fF(build_presentation_original(LiePair(d)));
    auto c = complete(t.relation_set(), 4);
    CHECK(c.saturated);
    auto g0 = gsb_relations_g0(d).relation_set();
    for (int n = 0; n <= 4; ++n) CHECK(enumerate_irreducible(c.relations, n) == enumerate_irreducible(g0, n));
  }
  auto c2 = complete(transform_to_fF(build_presentation_original(LiePair(2))).relation_set(), 3);
  std::set<Word, WordLess> got(c2.relations.leading_words().begin(), c2.relations.leading_words().end());
  auto g0 = gsb_relations_g0(2).relation_set();
  std::set<Word, WordLess> want(g0.leading_words().begin(), g0.leading_words().end());
  CHECK(got == want);
}

TEST_CASE("a pair with equal brackets keeps the abelian counts") {
  LiePair g(2);
  g.set_bracket1(1, 2, 1, 1);
  g.set_bracket2(1, 2, 1, 1);
  auto c = complete(transform_to_fF(build_presentation_original(g)).relation_set(), 5);
  auto counts = irreducible_counts(c.relations, 5);
  CHECK(counts == std::vector<std::uint64_t>{1, 4, 10, 24, 56, 128});
}

TEST_CASE("the literal presentation of the nonzero pair loses dimensions") {
  // The brute-force span already has a smaller degree-2 part than the
  // abelian case, so no completion bound can restore 10.
  auto t = transform_to_fF(build_presentation_original(nonzero_pair()));
  auto dims = oracle::quotient_dims(2, t.relations, 2, 4);
  CHECK(dims[1] == 4);
  CHECK(dims[2] < 10);
  auto c = complete(t.relation_set(), 5);
  auto counts = irreducible_counts(c.relations, 2);
  CHECK(counts[2] < 10);
}
