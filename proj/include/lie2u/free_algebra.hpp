#pragma once

// Free associative algebra over the rationals on the letters
// f_1..f_d (Small), F_1..F_d (Big) and, transiently, f'_1..f'_d (Primed).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lie2u {

using Scalar = mpq_class;

enum class LetterClass : std::uint8_t { Small = 0, Big = 1, Primed = 2 };

struct Letter {
  LetterClass cls = LetterClass::Small;
  std::uint16_t index = 1;  // 1-based

  // Storage order only: (class, index). On Small and Big letters this
  // coincides with the monomial order of compare_letters.
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

constexpr Letter small(int i) { return {LetterClass::Small, static_cast<std::uint16_t>(i)}; }
constexpr Letter big(int i) { return {LetterClass::Big, static_cast<std::uint16_t>(i)}; }
constexpr Letter primed(int i) { return {LetterClass::Primed, static_cast<std::uint16_t>(i)}; }

using Word = std::vector<Letter>;

/// Finite alphabet {f_1..f_d} u {F_1..F_d} (plus f'_i at input stage).
class Alphabet {
 public:
  explicit Alphabet(int dimension);

  int dimension() const { return dim_; }
  bool contains(Letter a) const { return a.index >= 1 && a.index <= dim_; }
  bool contains(std::span<const Letter> w) const;

  /// Small then Big letters, ascending in the monomial order.
  std::vector<Letter> ordered_letters() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int dim_;
};

/// Thrown when a Primed letter reaches code that needs the monomial order.
class UnorderedGenerator : public std::domain_error {
 public:
  UnorderedGenerator() : std::domain_error("unordered generator") {}
};

// The monomial order on letters:
//   f_i < f_j iff i < j,  F_i < F_j iff i < j,  f_i < F_j for all i, j.
// Primed letters are unordered.
std::strong_ordering compare_letters(Letter a, Letter b);

/// Deg-lex: length first, then left-to-right by compare_letters.
std::strong_ordering compare_words(std::span<const Letter> u, std::span<const Letter> v);

struct WordLess {
  bool operator()(const Word& u, const Word& v) const;
};

Word concat(std::span<const Letter> u, std::span<const Letter> v);
Word concat(std::span<const Letter> a, std::span<const Letter> u, std::span<const Letter> b);

bool has_primed(std::span<const Letter> w);

/// Finite Q-linear combination of words. Canonical: no zero coefficients,
/// terms kept sorted so equality is structural.
class NcPolynomial {
 public:
  using Terms = std::map<Word, Scalar, WordLess>;

  NcPolynomial() = default;
  explicit NcPolynomial(Word w, Scalar c = 1);
  static NcPolynomial one() { return NcPolynomial(Word{}); }
  static NcPolynomial constant(const Scalar& c) { return NcPolynomial(Word{}, c); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Scalar coefficient(const Word& w) const;
  int degree() const;  // -1 for zero

  /// Adds c·w, erasing the term when it cancels.
  void add_term(const Word& w, const Scalar& c);

  /// Maximal word under compare_words. Throws on zero or Primed letters.
  const Word& leading_word() const;
  const Scalar& leading_coefficient() const;

  NcPolynomial& operator+=(const NcPolynomial& q);
  NcPolynomial& operator-=(const NcPolynomial& q);
  NcPolynomial& operator*=(const Scalar& c);

  friend NcPolynomial operator+(NcPolynomial p, const NcPolynomial& q) { return p += q; }
  friend NcPolynomial operator-(NcPolynomial p, const NcPolynomial& q) { return p -= q; }
  friend NcPolynomial operator-(NcPolynomial p) { return p *= Scalar(-1); }
  friend NcPolynomial operator*(const Scalar& c, NcPolynomial p) { return p *= c; }
  friend NcPolynomial operator*(const NcPolynomial& p, const NcPolynomial& q);

  friend bool operator==(const NcPolynomial& p, const NcPolynomial& q);

 private:
  Terms terms_;
};

/// a·p·b for words a, b.
NcPolynomial sandwich(std::span<const Letter> a, const NcPolynomial& p, std::span<const Letter> b);

NcPolynomial make_monic(const NcPolynomial& p);

/// Algebra-homomorphic replacement of every occurrence of letter x by r.
NcPolynomial substitute(const NcPolynomial& p, Letter x, const NcPolynomial& r);

// Text forms. Tokens are f<i>, F<i>, f<i>' unless aliases are requested,
// in which case d <= 2 uses f, g, F, G.
std::string to_string(Letter a, bool aliases = false);
std::string to_string(std::span<const Letter> w, bool aliases = false);
std::string to_string(const NcPolynomial& p, bool aliases = false);

}  // namespace lie2u
