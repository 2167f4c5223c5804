#pragma once

// The linear basis of the enveloping algebra: words
//   w_0 F_{i_1} w_1 F_{i_2} w_2 ... w_{s-1} F_{i_s} w_s
// with ordered Small-monomials w_k, enumerated from the block pattern and,
// independently, as irreducible words of a relation set.

#include "lie2u/rewriting.hpp"

#include <functional>

namespace lie2u {

struct BasisBlock {
  int big_index;     // i_k
  Word monomial;     // w_k, Small letters only
};

struct BasisShape {
  Word head;                       // w_0
  std::vector<BasisBlock> blocks;  // (i_1, w_1) ... (i_s, w_s)
};

/// Splits w at Big letters: w_0 is the leading Small run, each block is a
/// Big letter followed by the maximal Small run after it.
BasisShape parse_blocks(std::span<const Letter> w);

enum class BasisCondition { a, b, c };

struct BasisViolation {
  BasisCondition condition;
  std::size_t block;  // k, with 0 meaning w_0
  std::string message;
};

struct BasisCheck {
  std::vector<BasisViolation> violations;
  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

BasisCheck is_basis_word(std::span<const Letter> w);

/// Calls visit on every basis word of length n over d generators, built block
/// by block. Order is generation order, not sorted.
void for_each_pattern_word(int d, int n, const std::function<void(const Word&)>& visit);

/// All basis words of length n, sorted by compare_words.
std::vector<Word> enumerate_pattern(int d, int n);

/// All words of length n over the alphabet with no leading word of s as a
/// factor, sorted by compare_words.
std::vector<Word> enumerate_irreducible(const RelationSet& s, int n);

/// Number of irreducible words of each length 0..max_n.
std::vector<std::uint64_t> irreducible_counts(const RelationSet& s, int max_n);

using NormalCoordinates = std::map<Word, Scalar, WordLess>;

/// Reduces p modulo s and checks every surviving word is a basis word.
/// Throws std::logic_error if one is not, which means s is not a basis of
/// the algebra with the claimed leading words.
NormalCoordinates normal_coordinates(const NcPolynomial& p, const RelationSet& s);

// Count stratification through U = k[X] (x) D(X): w_0 is an ordered monomial
// of size a and the rest is a word of D(X) = As(M(X)\{1})/I of degree n - a
// made of s generators (the blocks f_{i_k} w_k).
struct CensusStratum {
  int head_length;  // a = |w_0|
  int blocks;       // s
  mpz_class count;
};

struct TensorCensus {
  int d;
  int n;
  std::vector<CensusStratum> strata;  // nonzero strata, ordered by (a, s)
  mpz_class total;
};

TensorCensus tensor_decomposition_census(int d, int n);

/// Number of ordered Small-monomials of size a over d letters.
mpz_class monomial_count(int d, int a);

}  // namespace lie2u
