#include "lie2u/lie2.hpp"

#include <algorithm>
#include <sstream>

namespace lie2u {

LiePair::LiePair(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("Lie pair dimension must be positive");
  const auto n = static_cast<std::size_t>(dim) * dim * dim;
  c_.assign(n, Scalar(0));
  e_.assign(n, Scalar(0));
}

std::size_t LiePair::offset(int i, int j, int k) const {
  if (i < 1 || j < 1 || k < 1 || i > dim_ || j > dim_ || k > dim_)
    throw std::out_of_range("structure constant index out of range");
  return (static_cast<std::size_t>(i - 1) * dim_ + (j - 1)) * dim_ + (k - 1);
}

void LiePair::set_bracket1(int i, int j, int k, const Scalar& v) {
  bracket1(i, j, k) = v;
  bracket1(j, i, k) = -v;
}

void LiePair::set_bracket2(int i, int j, int k, const Scalar& v) {
  bracket2(i, j, k) = v;
  bracket2(j, i, k) = -v;
}

LiePair LiePair::combination(const Scalar& alpha, const Scalar& beta) const {
  LiePair out(dim_);
  for (std::size_t n = 0; n < c_.size(); ++n) out.c_[n] = alpha * c_[n] + beta * e_[n];
  return out;
}

bool LiePair::is_abelian() const {
  auto zero = [](const Scalar& x) { return x == 0; };
  return std::all_of(c_.begin(), c_.end(), zero) && std::all_of(e_.begin(), e_.end(), zero);
}

std::string to_string(LiePairFailure::Identity id) {
  switch (id) {
    case LiePairFailure::Identity::antisymmetry1: return "antisymmetry of bracket 1";
    case LiePairFailure::Identity::antisymmetry2: return "antisymmetry of bracket 2";
    case LiePairFailure::Identity::jacobi1: return "Jacobi identity of bracket 1";
    case LiePairFailure::Identity::jacobi2: return "Jacobi identity of bracket 2";
    case LiePairFailure::Identity::mixed_jacobi: return "mixed Jacobi identity";
  }
  return "?";
}

namespace {

using Vec = std::vector<Scalar>;
using Bracket = const Scalar& (LiePair::*)(int, int, int) const;

// [u, v] for coordinate vectors u, v.
Vec apply(const LiePair& g, Bracket br, const Vec& u, const Vec& v) {
  const int d = g.dim();
  Vec out(d, Scalar(0));
  for (int i = 1; i <= d; ++i) {
    if (u[i - 1] == 0) continue;
    for (int j = 1; j <= d; ++j) {
      if (v[j - 1] == 0) continue;
      Scalar uv = u[i - 1] * v[j - 1];
      for (int k = 1; k <= d; ++k) out[k - 1] += uv * (g.*br)(i, j, k);
    }
  }
  return out;
}

Vec basis_vector(int d, int i) {
  Vec v(d, Scalar(0));
  v[i - 1] = 1;
  return v;
}

void accumulate(Vec& acc, const Vec& v) {
  for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += v[k];
}

// [[x,y]_a, z]_b + [[y,z]_a, x]_b + [[z,x]_a, y]_b
Vec cyclic(const LiePair& g, Bracket inner, Bracket outer, const Vec& x, const Vec& y, const Vec& z) {
  Vec out(g.dim(), Scalar(0));
  accumulate(out, apply(g, outer, apply(g, inner, x, y), z));
  accumulate(out, apply(g, outer, apply(g, inner, y, z), x));
  accumulate(out, apply(g, outer, apply(g, inner, z, x), y));
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
}

std::string describe(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k].get_str();
  os << ")";
  return os.str();
}

}  // namespace

LiePairValidation validate_lie_pair(const LiePair& g) {
  using Id = LiePairFailure::Identity;
  const int d = g.dim();
  LiePairValidation report;

  auto check_antisymmetry = [&](Bracket br, Id id) {
    for (int i = 1; i <= d; ++i)
      for (int j = i; j <= d; ++j)
        for (int k = 1; k <= d; ++k) {
          if ((g.*br)(i, j, k) + (g.*br)(j, i, k) == 0) continue;
          std::ostringstream os;
          os << to_string(id) << " fails at (" << i << "," << j << "): coordinate " << k;
          report.failures.push_back({id, i, j, k, os.str()});
        }
  };
  check_antisymmetry(&LiePair::bracket1, Id::antisymmetry1);
  check_antisymmetry(&LiePair::bracket2, Id::antisymmetry2);

  auto check_triples = [&](Id id, auto&& jacobiator) {
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j)
        for (int k = 1; k <= d; ++k) {
          Vec x = basis_vector(d, i), y = basis_vector(d, j), z = basis_vector(d, k);
          Vec jac = jacobiator(x, y, z);
          if (is_zero(jac)) continue;
          std::ostringstream os;
          os << to_string(id) << " fails at (" << i << "," << j << "," << k
             << "): Jacobiator = " << describe(jac);
          report.failures.push_back({id, i, j, k, os.str()});
        }
  };
  check_triples(Id::jacobi1, [&](const Vec& x, const Vec& y, const Vec& z) {
    return cyclic(g, &LiePair::bracket1, &LiePair::bracket1, x, y, z);
  });
  check_triples(Id::jacobi2, [&](const Vec& x, const Vec& y, const Vec& z) {
    return cyclic(g, &LiePair::bracket2, &LiePair::bracket2, x, y, z);
  });
  check_triples(Id::mixed_jacobi, [&](const Vec& x, const Vec& y, const Vec& z) {
    Vec out = cyclic(g, &LiePair::bracket1, &LiePair::bracket2, x, y, z);
    accumulate(out, cyclic(g, &LiePair::bracket2, &LiePair::bracket1, x, y, z));
    return out;
  });
  return report;
}

namespace {

NcPolynomial letters(std::initializer_list<Letter> w, Scalar c = 1) {
  return NcPolynomial(Word(w), std::move(c));
}

// sum_k coeff(i,j,k) · gen(k)
template <class Coeff>
NcPolynomial linear_tail(int d, Coeff&& coeff, Letter (*gen)(int)) {
  NcPolynomial out;
  for (int k = 1; k <= d; ++k) out.add_term(Word{gen(k)}, coeff(k));
  return out;
}

}  // namespace

Presentation build_presentation_original(const LiePair& g) {
  if (!validate_lie_pair(g).valid())
    throw std::invalid_argument("not a pair of compatible Lie brackets");
  const int d = g.dim();
  std::vector<NcPolynomial> rels;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      auto tail = linear_tail(d, [&](int k) { return g.bracket1(j, i, k); }, &small);
      rels.push_back(letters({small(j), small(i)}) - letters({small(i), small(j)}) - tail);
    }
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      auto tail = linear_tail(d, [&](int k) { return g.bracket2(j, i, k); }, &small);
      rels.push_back(letters({primed(j), primed(i)}) - letters({primed(i), primed(j)}) - tail);
    }
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      rels.push_back(letters({small(i), small(j)}) - letters({small(i), primed(j)}) -
                     letters({primed(i), small(j)}) + letters({primed(i), primed(j)}));
  return {Alphabet(d), std::move(rels), Provenance::original_xy_xprime};
}

Presentation transform_to_fF(const Presentation& p) {
  if (p.provenance != Provenance::original_xy_xprime)
    throw std::invalid_argument("transform_to_fF expects an original presentation");
  const int d = p.alphabet.dimension();
  std::vector<NcPolynomial> rels;
  for (NcPolynomial r : p.relations) {
    for (int i = 1; i <= d; ++i)
      r = substitute(r, primed(i), letters({small(i)}) - letters({big(i)}));
    if (!r.is_zero()) rels.push_back(make_monic(r));
  }
  return {p.alphabet, std::move(rels), Provenance::transformed_fF};
}

namespace {

struct FamilyMember {
  int family;
  NcPolynomial relation;
};

std::vector<FamilyMember> g0_members(int d) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  std::vector<FamilyMember> out;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      out.push_back({1, letters({small(j), small(i)}) - letters({small(i), small(j)})});
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) out.push_back({2, letters({big(i), big(j)})});
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      out.push_back({3, letters({big(j), small(i)}) - letters({big(i), small(j)}) +
                            letters({small(j), big(i)}) - letters({small(i), big(j)})});
  for (int k = 1; k <= d; ++k)
    for (int i = k; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j)
        out.push_back({4, letters({big(k), small(j), big(i)}) - letters({big(k), small(i), big(j)})});
  for (int i = 1; i <= d; ++i)
    for (int k = i + 1; k <= d; ++k)
      for (int j = k; j <= d; ++j)
        out.push_back({5, letters({big(k), small(j), big(i)}) - letters({big(i), small(k), big(j)})});
  return out;
}

}  // namespace

Presentation gsb_relations_g0(int d) {
  static constexpr int all[] = {1, 2, 3, 4, 5};
  return gsb_relations_g0(d, all);
}

Presentation gsb_relations_g0(int d, std::span<const int> families) {
  std::vector<NcPolynomial> rels;
  for (auto& m : g0_members(d))
    if (std::find(families.begin(), families.end(), m.family) != families.end())
      rels.push_back(std::move(m.relation));
  return {Alphabet(d), std::move(rels), Provenance::gsb_g0};
}

std::vector<int> gsb_relation_families(int d) {
  std::vector<int> out;
  for (const auto& m : g0_members(d)) out.push_back(m.family);
  return out;
}

}  // namespace lie2u
