#pragma once

// Pairs of compatible Lie brackets and the presentations of their
// universal enveloping algebra.

#include "lie2u/rewriting.hpp"

namespace lie2u {

/// Dimension plus dense structure constants of two brackets:
/// [e_i, e_j]_1 = sum_k bracket1(i,j,k) e_k, likewise bracket2. 1-based.
class LiePair {
 public:
  explicit LiePair(int dim);

  int dim() const { return dim_; }
  Scalar& bracket1(int i, int j, int k) { return c_[offset(i, j, k)]; }
  const Scalar& bracket1(int i, int j, int k) const { return c_[offset(i, j, k)]; }
  Scalar& bracket2(int i, int j, int k) { return e_[offset(i, j, k)]; }
  const Scalar& bracket2(int i, int j, int k) const { return e_[offset(i, j, k)]; }

  /// Sets [e_i,e_j] = v and [e_j,e_i] = -v on the k-th coordinate.
  void set_bracket1(int i, int j, int k, const Scalar& v);
  void set_bracket2(int i, int j, int k, const Scalar& v);

  /// alpha·[,]_1 + beta·[,]_2 as the first bracket of a pair with zero second bracket.
  LiePair combination(const Scalar& alpha, const Scalar& beta) const;

  bool is_abelian() const;

 private:
  std::size_t offset(int i, int j, int k) const;

  int dim_;
  std::vector<Scalar> c_;
  std::vector<Scalar> e_;
};

struct LiePairFailure {
  enum class Identity { antisymmetry1, antisymmetry2, jacobi1, jacobi2, mixed_jacobi };
  Identity identity;
  int i, j, k;
  std::string message;
};

struct LiePairValidation {
  std::vector<LiePairFailure> failures;
  bool valid() const { return failures.empty(); }
};

// Antisymmetry and Jacobi for each bracket, plus the mixed Jacobiator.
// The Jacobiator of alpha·c + beta·e is a quadratic form in (alpha, beta)
// whose coefficients are exactly these three identities.
LiePairValidation validate_lie_pair(const LiePair& g);

std::string to_string(LiePairFailure::Identity id);

enum class Provenance { original_xy_xprime, transformed_fF, gsb_g0 };

struct Presentation {
  Alphabet alphabet;
  std::vector<NcPolynomial> relations;
  Provenance provenance;

  /// Only for transformed and g_0 presentations (no Primed letters).
  RelationSet relation_set() const { return RelationSet(alphabet, relations); }
};

// Generators f_i (x) and f'_i (x'). Relations, in this order:
//   f_j f_i - f_i f_j - [f_j,f_i]_1                 i < j
//   f'_j f'_i - f'_i f'_j - [f_j,f_i]_2             i < j
//   f_i f_j - f_i f'_j - f'_i f_j + f'_i f'_j        all i, j
// The bracket tails are written in the unprimed generators.
Presentation build_presentation_original(const LiePair& g);

/// Substitutes f'_i -> f_i - F_i, drops zeros and makes every relation monic.
Presentation transform_to_fF(const Presentation& p);

// Closed-form relations for the abelian pair on d generators:
//   (1) f_j f_i - f_i f_j,                         i < j
//   (2) F_i F_j,                                   all i, j
//   (3) F_j f_i - F_i f_j + f_j F_i - f_i F_j,     i < j
//   (4) F_k f_j F_i - F_k f_i F_j,                 k <= i < j
//   (5) F_k f_j F_i - F_i f_k F_j,                 i < k <= j
Presentation gsb_relations_g0(int d);

/// Family number (1..5) of each relation emitted by gsb_relations_g0.
std::vector<int> gsb_relation_families(int d);

/// gsb_relations_g0 restricted to the given families.
Presentation gsb_relations_g0(int d, std::span<const int> families);

}  // namespace lie2u
