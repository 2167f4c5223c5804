#pragma once

// Per-degree basis counts, the d = 2 recurrences, and growth rates.

#include "lie2u/free_algebra.hpp"

#include <array>
#include <optional>

namespace lie2u {

/// r_0..r_N: number of basis words of each length over d generators.
struct CountSeries {
  int d;
  std::vector<mpz_class> values;

  int max_n() const { return static_cast<int>(values.size()) - 1; }
  const mpz_class& operator[](int n) const { return values.at(static_cast<std::size_t>(n)); }
};

/// s_0..s_N: basis words starting with a Big letter; s_0 = 1 by convention.
struct BigStartSeries {
  int d;
  std::vector<mpz_class> values;

  int max_n() const { return static_cast<int>(values.size()) - 1; }
  const mpz_class& operator[](int n) const { return values.at(static_cast<std::size_t>(n)); }
};

// Deterministic recognizer of the basis language. States:
//   start
//   big(k)                after F_k
//   small_after_big(k,p)  run of length one, f_p, directly after F_k
//   small_run(p)          any other Small run ending in f_p (length >= 2, or w_0)
// Every state is accepting; a missing transition rejects.
class ForbiddenFactorAutomaton {
 public:
  enum class Kind { start, big, small_after_big, small_run };
  struct State {
    Kind kind;
    int big;    // k, 0 if unused
    int small;  // p, 0 if unused
  };

  explicit ForbiddenFactorAutomaton(int d);

  int dimension() const { return d_; }
  std::size_t state_count() const { return states_.size(); }
  const State& state(std::size_t id) const { return states_[id]; }
  static constexpr std::size_t start_state = 0;

  std::optional<std::size_t> next(std::size_t from, Letter a) const;
  bool accepts(std::span<const Letter> w) const;

  /// Number of accepted words of each length 0..N.
  std::vector<mpz_class> count(int N) const;
  /// Same, restricted to words whose first letter is Big; entry 0 is 1.
  std::vector<mpz_class> count_big_start(int N) const;

  /// States reachable from start other than start itself; the transfer
  /// matrix on them is irreducible.
  std::vector<std::size_t> recurrent_states() const;
  /// Square matrix over recurrent_states(): entry [to][from] counts letters.
  std::vector<std::vector<int>> transfer_matrix() const;

 private:
  std::size_t big_id(int k) const;
  std::size_t run_id(int p) const;
  std::size_t after_big_id(int k, int p) const;

  int d_;
  std::vector<State> states_;
};

enum class CountMethod { enumerate, automaton };

CountSeries count_series(int d, int N, CountMethod method = CountMethod::automaton);

/// s = (1 - x)^d · r: s_n = sum_j (-1)^j C(d,j) r_{n-j}. For d = 2 this is
/// s_n = r_n - 2 r_{n-1} + r_{n-2}.
BigStartSeries big_start_series(const CountSeries& r);

/// Coefficients a_0..a_6 of r_n + a_1 r_{n-1} + ... + a_6 r_{n-6} = 0, read
/// off x^6 - 2x^5 - 2x^4 + 2x^3 + 3x^2 - 2.
inline constexpr std::array<long, 7> kRecurrenceD2 = {1, -2, -2, 2, 3, 0, -2};

struct RecurrenceCheck {
  bool holds;
  bool vacuous;               // no n in range
  std::vector<int> failures;  // n with nonzero residual
  std::vector<mpz_class> residuals;  // indexed by n - first_n
  int first_n;
};

/// Residuals sum_j coeffs[j] · r_{n-j} for first_n <= n <= N.
RecurrenceCheck check_recurrence(const CountSeries& r, std::span<const long> coeffs, int first_n);

/// The degree-6 recurrence for 7 <= n <= N. Throws unless d == 2.
RecurrenceCheck verify_recurrence_d2(const CountSeries& r);

struct IdentityCheck {
  bool holds;
  std::vector<int> failures;
};

/// r_n = sum_k C(k+d-1, d-1) · s_{n-k}; for d = 2, r_n = s_n + 2 s_{n-1} + ... + (n+1) s_0.
IdentityCheck verify_prefix_decomposition(const CountSeries& r, const BigStartSeries& s);

struct SRelationCheck {
  static constexpr int first_n = 3;
  bool holds;                        // for first_n <= n <= N
  bool parity_ok;                    // s_{n-2} - r_{n-4} even for the same n
  std::vector<int> failures;
  std::vector<int> boundary_failures;  // n < first_n, reported only
};

/// s_n = r_{n-2} + (s_{n-2} - r_{n-4}) + 2(s_{n-3} + ... + s_0), d = 2,
/// with negative-index terms dropped.
SRelationCheck verify_intermediate_s_relation(const CountSeries& r, const BigStartSeries& s);

/// Dense integer polynomial, coefficients in ascending degree.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> ascending);
  explicit IntPolynomial(std::vector<mpz_class> ascending);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  mpz_class operator()(const mpz_class& x) const;

  friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
  friend bool operator==(const IntPolynomial& p, const IntPolynomial& q) { return p.coeffs_ == q.coeffs_; }

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

std::string to_string(const IntPolynomial& p);

struct CharacteristicPolynomialCheck {
  IntPolynomial sextic;
  std::vector<IntPolynomial> factors;
  IntPolynomial expanded;
  bool matches;
};

/// Expands (x-1)^2 (x+1)(x^3-x^2-2x-2) and compares with the sextic.
CharacteristicPolynomialCheck characteristic_polynomial_d2();

/// Discriminant of a cubic a x^3 + b x^2 + c x + d, coefficients ascending.
mpz_class cubic_discriminant(const IntPolynomial& cubic);

enum class GrowthMethod { nth_root, ratio, spectral_radius, closed_form };

std::string to_string(GrowthMethod m);

struct GrowthEstimate {
  GrowthMethod method;
  mpf_class value;
  mpf_class error_bound;
};

/// Working precision for growth outputs, in bits.
inline constexpr unsigned kGrowthPrecision = 256;

// nth_root and ratio use the series up to n; spectral_radius runs power
// iteration on the automaton transfer matrix with Collatz-Wielandt bounds;
// closed_form exists for d = 1, 2 only and throws std::domain_error otherwise.
GrowthEstimate growth_rate(int d, GrowthMethod method, int n = 40);

/// (1 + sqrt 5) / 2.
mpf_class golden_ratio();
/// Real root of x^3 - x^2 - 2x - 2 in [2, 3]: bisection, then Newton.
mpf_class cubic_real_root();
/// (1 + cbrt(37 - 3 sqrt 114) + cbrt(37 + 3 sqrt 114)) / 3.
mpf_class cubic_radical_root();

mpf_class nth_root(const mpf_class& x, unsigned n);

struct FeketeCheck {
  bool holds;
  std::optional<std::pair<int, int>> first_violation;  // (s, t)
};

/// r_{s+t} <= r_s · r_t for all s + t <= N.
FeketeCheck fekete_check(const CountSeries& r);

struct RemarkCheck {
  mpf_class growth_d1, root_quadratic, growth_d2, root_cubic;
  mpf_class complex_pair_modulus;  // sqrt(2 / gamma)
  mpz_class cubic_discriminant;
  bool holds;
};

/// Growth rates for d = 1, 2 equal the largest-modulus roots of x^2-x-1 and
/// x^3-x^2-2x-2, to 1e-9.
RemarkCheck remark_check();

/// Fixed-point decimal with the given number of fractional digits.
std::string format_decimal(const mpf_class& x, int digits);

/// Columns n, r_n, s_n, ratio, nth_root.
std::string to_csv(const CountSeries& r);

}  // namespace lie2u
