#pragma once

// Reference computations for the tests. None of them calls the library's
// ordering, reduction or enumeration code.

#include "lie2u/lie2.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace oracle {

using lie2u::Letter;
using lie2u::LetterClass;
using lie2u::NcPolynomial;
using lie2u::Scalar;
using lie2u::Word;

// Position in f_1 < ... < f_d < F_1 < ... < F_d.
inline int rank(Letter a, int d) {
  return a.cls == LetterClass::Small ? a.index - 1 : d + a.index - 1;
}

// Rank-vector key; larger key = larger word.
inline std::vector<int> key(const Word& w, int d) {
  std::vector<int> k{static_cast<int>(w.size())};
  for (Letter a : w) k.push_back(rank(a, d));
  return k;
}

inline Word letter_word(int code, int d) {
  return {code < d ? lie2u::small(code + 1) : lie2u::big(code - d + 1)};
}

// All words of length n over the 2d letters.
inline std::vector<Word> all_words(int d, int n) {
  std::vector<Word> out{Word{}};
  for (int step = 0; step < n; ++step) {
    std::vector<Word> next;
    for (const Word& w : out)
      for (int c = 0; c < 2 * d; ++c) {
        Word v = w;
        v.push_back(letter_word(c, d)[0]);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

// Membership in the basis language by the forbidden factors read off the
// leading words of the five relation families.
inline bool avoids_forbidden_factors(const Word& w) {
  auto is_small = [](Letter a) { return a.cls == LetterClass::Small; };
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    Letter a = w[k], b = w[k + 1];
    if (is_small(a) && is_small(b) && a.index > b.index) return false;   // f_j f_i
    if (!is_small(a) && !is_small(b)) return false;                      // F_i F_j
    if (!is_small(a) && is_small(b) && b.index < a.index) return false;  // F_j f_i
    if (k + 2 < w.size() && !is_small(a) && is_small(b) && !is_small(w[k + 2])) {
      // F_a f_p F_b needs a <= p <= b
      if (!(a.index <= b.index && b.index <= w[k + 2].index)) return false;
    }
  }
  return true;
}

inline std::vector<mpz_class> fibonacci(int n) {
  std::vector<mpz_class> f{0, 1};
  while (static_cast<int>(f.size()) <= n) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

// Row-echelon span of sparse rational vectors indexed by words. Pivots are
// the largest words under key(), so vectors whose pivot has length <= n
// span the intersection with the words of length <= n.
class Echelon {
 public:
  explicit Echelon(int d) : d_(d) {}

  void insert(NcPolynomial v) {
    while (!v.is_zero()) {
      const Word* top = nullptr;
      for (const auto& [w, c] : v.terms())
        if (!top || key(w, d_) > key(*top, d_)) top = &w;
      Word lead = *top;
      auto it = rows_.find(key(lead, d_));
      if (it == rows_.end()) {
        Scalar inv = 1 / v.coefficient(lead);
        v *= inv;
        rows_.emplace(key(lead, d_), std::move(v));
        return;
      }
      Scalar c = v.coefficient(lead);
      v -= c * it->second;
    }
  }

  std::size_t pivots_with_length(int n) const {
    std::size_t count = 0;
    for (const auto& [k, row] : rows_)
      if (k[0] == n) ++count;
    return count;
  }

 private:
  int d_;
  std::map<std::vector<int>, NcPolynomial> rows_;
};

inline NcPolynomial embed(const Word& a, const NcPolynomial& p, const Word& b) {
  NcPolynomial out;
  for (const auto& [w, c] : p.terms()) {
    Word v = a;
    v.insert(v.end(), w.begin(), w.end());
    v.insert(v.end(), b.begin(), b.end());
    out.add_term(v, c);
  }
  return out;
}

// dim of the length-n part of T(V) / (a·s·b : |a|+|s|+|b| <= span_bound),
// computed as #words - #pivots of length n. For homogeneous relations and
// span_bound = n this is the graded dimension. For inhomogeneous ones it is
// the filtered quotient dim F_n / F_{n-1} of the approximation, which can only
// decrease as span_bound grows.
inline std::vector<long> quotient_dims(int d, const std::vector<NcPolynomial>& rels, int n_max, int span_bound) {
  Echelon e(d);
  for (const auto& r : rels) {
    const int deg = r.degree();
    for (int la = 0; la + deg <= span_bound; ++la)
      for (int lb = 0; la + deg + lb <= span_bound; ++lb)
        for (const Word& a : all_words(d, la))
          for (const Word& b : all_words(d, lb)) e.insert(embed(a, r, b));
  }
  std::vector<long> out;
  long words = 1;
  for (int n = 0; n <= n_max; ++n) {
    out.push_back(words - static_cast<long>(e.pivots_with_length(n)));
    words *= 2 * d;
  }
  return out;
}

// Random polynomial with small integer coefficients over the Small and Big
// letters.
inline NcPolynomial random_polynomial(std::mt19937& rng, int d, int max_len, int terms) {
  std::uniform_int_distribution<int> len(0, max_len), letter(0, 2 * d - 1), coeff(-3, 3);
  NcPolynomial p;
  for (int t = 0; t < terms; ++t) {
    Word w;
    const int l = len(rng);
    for (int k = 0; k < l; ++k) w.push_back(letter_word(letter(rng), d)[0]);
    p.add_term(w, Scalar(coeff(rng)));
  }
  return p;
}

inline Word random_word(std::mt19937& rng, int d, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(0, 2 * d - 1);
  Word w;
  const int l = len(rng);
  for (int k = 0; k < l; ++k) w.push_back(letter_word(letter(rng), d)[0]);
  return w;
}

// Jacobiator of a single bracket b(i,j,k) on basis triples.
template <class Bracket>
bool jacobi_holds(int d, Bracket&& b) {
  for (int x = 1; x <= d; ++x)
    for (int y = 1; y <= d; ++y)
      for (int z = 1; z <= d; ++z)
        for (int out = 1; out <= d; ++out) {
          Scalar sum = 0;
          for (int m = 1; m <= d; ++m)
            sum += b(x, y, m) * b(m, z, out) + b(y, z, m) * b(m, x, out) + b(z, x, m) * b(m, y, out);
          if (sum != 0) return false;
        }
  return true;
}

template <class Bracket>
bool antisymmetric(int d, Bracket&& b) {
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        if (b(i, j, k) + b(j, i, k) != 0) return false;
  return true;
}

// Compatibility by polarization: c + t·e is a Lie bracket for t = 0, 1, 2.
// Three values pin down the quadratic Jacobiator in t.
inline bool polarization_valid(const lie2u::LiePair& g) {
  const int d = g.dim();
  for (int t = 0; t <= 2; ++t) {
    auto b = [&](int i, int j, int k) { return Scalar(g.bracket1(i, j, k) + t * g.bracket2(i, j, k)); };
    if (!antisymmetric(d, b) || !jacobi_holds(d, b)) return false;
  }
  return true;
}

}  // namespace oracle
