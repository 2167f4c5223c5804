#include "lie2u/free_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace lie2u {

Alphabet::Alphabet(int dimension) : dim_(dimension) {
  if (dimension < 1 || dimension > 0xffff)
    throw std::invalid_argument("alphabet dimension must be positive");
}

bool Alphabet::contains(std::span<const Letter> w) const {
  return std::all_of(w.begin(), w.end(), [this](Letter a) { return contains(a); });
}

std::vector<Letter> Alphabet::ordered_letters() const {
  std::vector<Letter> out;
  out.reserve(2 * dim_);
  for (int i = 1; i <= dim_; ++i) out.push_back(small(i));
  for (int i = 1; i <= dim_; ++i) out.push_back(big(i));
  return out;
}

std::strong_ordering compare_letters(Letter a, Letter b) {
  if (a.cls == LetterClass::Primed || b.cls == LetterClass::Primed) throw UnorderedGenerator();
  if (a.cls != b.cls) return a.cls == LetterClass::Small ? std::strong_ordering::less
                                                          : std::strong_ordering::greater;
  return a.index <=> b.index;
}

std::strong_ordering compare_words(std::span<const Letter> u, std::span<const Letter> v) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto c = compare_letters(u[i], v[i]);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// Storage comparator: deg-lex over (class, index). Agrees with compare_words
// on Primed-free words and stays total when Primed letters are present.
bool WordLess::operator()(const Word& u, const Word& v) const {
  if (u.size() != v.size()) return u.size() < v.size();
  return u < v;
}

Word concat(std::span<const Letter> u, std::span<const Letter> v) {
  Word w;
  w.reserve(u.size() + v.size());
  w.insert(w.end(), u.begin(), u.end());
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

Word concat(std::span<const Letter> a, std::span<const Letter> u, std::span<const Letter> b) {
  Word w;
  w.reserve(a.size() + u.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), u.begin(), u.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

bool has_primed(std::span<const Letter> w) {
  return std::any_of(w.begin(), w.end(), [](Letter a) { return a.cls == LetterClass::Primed; });
}

NcPolynomial::NcPolynomial(Word w, Scalar c) {
  c.canonicalize();
  if (c != 0) terms_.emplace(std::move(w), std::move(c));
}

Scalar NcPolynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int NcPolynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

void NcPolynomial::add_term(const Word& w, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

const Word& NcPolynomial::leading_word() const {
  if (terms_.empty()) throw std::domain_error("leading word of the zero polynomial");
  for (const auto& [w, c] : terms_)
    if (has_primed(w)) throw UnorderedGenerator();
  return terms_.rbegin()->first;
}

const Scalar& NcPolynomial::leading_coefficient() const {
  leading_word();
  return terms_.rbegin()->second;
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& q) {
  for (const auto& [w, c] : q.terms_) add_term(w, c);
  return *this;
}

NcPolynomial& NcPolynomial::operator-=(const NcPolynomial& q) {
  for (const auto& [w, c] : q.terms_) add_term(w, -c);
  return *this;
}

NcPolynomial& NcPolynomial::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

NcPolynomial operator*(const NcPolynomial& p, const NcPolynomial& q) {
  NcPolynomial out;
  for (const auto& [u, a] : p.terms_)
    for (const auto& [v, b] : q.terms_) out.add_term(concat(u, v), a * b);
  return out;
}

bool operator==(const NcPolynomial& p, const NcPolynomial& q) { return p.terms_ == q.terms_; }

NcPolynomial sandwich(std::span<const Letter> a, const NcPolynomial& p, std::span<const Letter> b) {
  NcPolynomial out;
  for (const auto& [w, c] : p.terms()) out.add_term(concat(a, w, b), c);
  return out;
}

NcPolynomial make_monic(const NcPolynomial& p) {
  Scalar inv = 1 / p.leading_coefficient();
  return inv * p;
}

NcPolynomial substitute(const NcPolynomial& p, Letter x, const NcPolynomial& r) {
  NcPolynomial out;
  for (const auto& [w, c] : p.terms()) {
    NcPolynomial acc = NcPolynomial::constant(c);
    Word run;
    for (Letter a : w) {
      if (a == x) {
        acc = acc * NcPolynomial(run) * r;
        run.clear();
      } else {
        run.push_back(a);
      }
    }
    out += acc * NcPolynomial(run);
  }
  return out;
}

std::string to_string(Letter a, bool aliases) {
  if (aliases && a.cls != LetterClass::Primed && a.index <= 2) {
    static constexpr const char* names[2][2] = {{"f", "g"}, {"F", "G"}};
    return names[static_cast<int>(a.cls)][a.index - 1];
  }
  std::string s = a.cls == LetterClass::Big ? "F" : "f";
  s += std::to_string(a.index);
  if (a.cls == LetterClass::Primed) s += "'";
  return s;
}

std::string to_string(std::span<const Letter> w, bool aliases) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += to_string(w[i], aliases);
  }
  return s;
}

std::string to_string(const NcPolynomial& p, bool aliases) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (w.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << ' ';
      os << to_string(w, aliases);
    }
  }
  return os.str();
}

}  // namespace lie2u
