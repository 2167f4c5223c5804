#include "lie2u/counting.hpp"

#include "lie2u/basis_enum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lie2u {

namespace {

// mpf values that are default-constructed or assigned keep the default
// precision, so raise it before any growth computation.
const struct PrecisionInit {
  PrecisionInit() { mpf_set_default_prec(kGrowthPrecision); }
} precision_init;

}  // namespace

ForbiddenFactorAutomaton::ForbiddenFactorAutomaton(int d) : d_(d) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  states_.push_back({Kind::start, 0, 0});
  for (int k = 1; k <= d; ++k) states_.push_back({Kind::big, k, 0});
  for (int p = 1; p <= d; ++p) states_.push_back({Kind::small_run, 0, p});
  for (int k = 1; k <= d; ++k)
    for (int p = 1; p <= d; ++p) states_.push_back({Kind::small_after_big, k, p});
}

std::size_t ForbiddenFactorAutomaton::big_id(int k) const { return static_cast<std::size_t>(k); }
std::size_t ForbiddenFactorAutomaton::run_id(int p) const { return static_cast<std::size_t>(d_ + p); }
std::size_t ForbiddenFactorAutomaton::after_big_id(int k, int p) const {
  return static_cast<std::size_t>(2 * d_ + 1 + (k - 1) * d_ + (p - 1));
}

std::optional<std::size_t> ForbiddenFactorAutomaton::next(std::size_t from, Letter a) const {
  if (a.cls == LetterClass::Primed) throw UnorderedGenerator();
  if (a.index < 1 || a.index > d_) return std::nullopt;
  const State& s = states_.at(from);
  const int x = a.index;
  if (a.cls == LetterClass::Small) {
    switch (s.kind) {
      case Kind::start: return run_id(x);
      case Kind::big:  // F_k f_x needs x >= k
        if (x < s.big) return std::nullopt;
        return after_big_id(s.big, x);
      case Kind::small_after_big:
      case Kind::small_run:  // f_q f_x needs x >= q
        if (x < s.small) return std::nullopt;
        return run_id(x);
    }
  } else {
    switch (s.kind) {
      case Kind::start:
      case Kind::small_run: return big_id(x);
      case Kind::big: return std::nullopt;  // F F
      case Kind::small_after_big:  // F_k f_p F_x needs p <= x
        if (s.small > x) return std::nullopt;
        return big_id(x);
    }
  }
  return std::nullopt;
}

bool ForbiddenFactorAutomaton::accepts(std::span<const Letter> w) const {
  std::size_t at = start_state;
  for (Letter a : w) {
    auto nxt = next(at, a);
    if (!nxt) return false;
    at = *nxt;
  }
  return true;
}

namespace {

std::vector<mpz_class> propagate(const ForbiddenFactorAutomaton& fa, std::vector<mpz_class> dist,
                                 int steps, std::vector<mpz_class>& totals) {
  const Alphabet alphabet(fa.dimension());
  const auto letters = alphabet.ordered_letters();
  for (int step = 0; step < steps; ++step) {
    std::vector<mpz_class> out(fa.state_count());
    for (std::size_t s = 0; s < dist.size(); ++s) {
      if (dist[s] == 0) continue;
      for (Letter a : letters)
        if (auto t = fa.next(s, a)) out[*t] += dist[s];
    }
    dist = std::move(out);
    mpz_class total = 0;
    for (const auto& x : dist) total += x;
    totals.push_back(total);
  }
  return dist;
}

}  // namespace

std::vector<mpz_class> ForbiddenFactorAutomaton::count(int N) const {
  if (N < 0) throw std::invalid_argument("N must be non-negative");
  std::vector<mpz_class> dist(state_count());
  dist[start_state] = 1;
  std::vector<mpz_class> totals{1};
  propagate(*this, std::move(dist), N, totals);
  return totals;
}

std::vector<mpz_class> ForbiddenFactorAutomaton::count_big_start(int N) const {
  if (N < 0) throw std::invalid_argument("N must be non-negative");
  std::vector<mpz_class> totals{1};
  if (N == 0) return totals;
  std::vector<mpz_class> dist(state_count());
  for (int k = 1; k <= d_; ++k) dist[big_id(k)] = 1;
  totals.push_back(d_);
  propagate(*this, std::move(dist), N - 1, totals);
  return totals;
}

std::vector<std::size_t> ForbiddenFactorAutomaton::recurrent_states() const {
  const auto letters = Alphabet(d_).ordered_letters();
  std::vector<bool> seen(state_count(), false);
  std::vector<std::size_t> stack{start_state};
  seen[start_state] = true;
  while (!stack.empty()) {
    std::size_t s = stack.back();
    stack.pop_back();
    for (Letter a : letters)
      if (auto t = next(s, a); t && !seen[*t]) {
        seen[*t] = true;
        stack.push_back(*t);
      }
  }
  std::vector<std::size_t> out;
  for (std::size_t s = 1; s < state_count(); ++s)
    if (seen[s]) out.push_back(s);
  return out;
}

std::vector<std::vector<int>> ForbiddenFactorAutomaton::transfer_matrix() const {
  const auto ids = recurrent_states();
  const auto letters = Alphabet(d_).ordered_letters();
  std::vector<std::vector<int>> m(ids.size(), std::vector<int>(ids.size(), 0));
  for (std::size_t from = 0; from < ids.size(); ++from)
    for (Letter a : letters)
      if (auto t = next(ids[from], a)) {
        auto to = std::find(ids.begin(), ids.end(), *t) - ids.begin();
        ++m[static_cast<std::size_t>(to)][from];
      }
  return m;
}

CountSeries count_series(int d, int N, CountMethod method) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  if (N < 0) throw std::invalid_argument("N must be non-negative");
  CountSeries out{d, {}};
  if (method == CountMethod::automaton) {
    out.values = ForbiddenFactorAutomaton(d).count(N);
    return out;
  }
  for (int n = 0; n <= N; ++n) {
    std::uint64_t c = 0;
    for_each_pattern_word(d, n, [&](const Word&) { ++c; });
    out.values.emplace_back(static_cast<unsigned long>(c));
  }
  return out;
}

BigStartSeries big_start_series(const CountSeries& r) {
  BigStartSeries s{r.d, {}};
  for (int n = 0; n <= r.max_n(); ++n) {
    mpz_class acc = 0;
    for (int j = 0; j <= std::min(n, r.d); ++j) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(r.d), static_cast<unsigned long>(j));
      acc += (j % 2 ? -binom : binom) * r[n - j];
    }
    s.values.push_back(acc);
  }
  return s;
}

RecurrenceCheck check_recurrence(const CountSeries& r, std::span<const long> coeffs, int first_n) {
  const int order = static_cast<int>(coeffs.size()) - 1;
  if (first_n < order) throw std::invalid_argument("recurrence would reach negative indices");
  RecurrenceCheck out{true, r.max_n() < first_n, {}, {}, first_n};
  for (int n = first_n; n <= r.max_n(); ++n) {
    mpz_class residual = 0;
    for (int j = 0; j <= order; ++j) residual += coeffs[static_cast<std::size_t>(j)] * r[n - j];
    if (residual != 0) {
      out.holds = false;
      out.failures.push_back(n);
    }
    out.residuals.push_back(residual);
  }
  return out;
}

RecurrenceCheck verify_recurrence_d2(const CountSeries& r) {
  if (r.d != 2) throw std::invalid_argument("the degree-6 recurrence is for d = 2");
  return check_recurrence(r, kRecurrenceD2, 7);
}

IdentityCheck verify_prefix_decomposition(const CountSeries& r, const BigStartSeries& s) {
  IdentityCheck out{true, {}};
  const int N = std::min(r.max_n(), s.max_n());
  for (int n = 0; n <= N; ++n) {
    mpz_class rhs = 0;
    for (int k = 0; k <= n; ++k) rhs += monomial_count(r.d, k) * s[n - k];
    if (rhs != r[n]) {
      out.holds = false;
      out.failures.push_back(n);
    }
  }
  return out;
}

SRelationCheck verify_intermediate_s_relation(const CountSeries& r, const BigStartSeries& s) {
  if (r.d != 2 || s.d != 2) throw std::invalid_argument("the s-relation is for d = 2");
  auto R = [&](int i) { return i < 0 ? mpz_class(0) : r[i]; };
  auto S = [&](int i) { return i < 0 ? mpz_class(0) : s[i]; };
  SRelationCheck out{true, true, {}, {}};
  const int N = std::min(r.max_n(), s.max_n());
  for (int n = 0; n <= N; ++n) {
    mpz_class doubled_half = S(n - 2) - R(n - 4);  // twice the GgGg-start count
    mpz_class tail = 0;
    for (int m = 0; m <= n - 3; ++m) tail += S(m);
    mpz_class rhs = R(n - 2) + doubled_half + 2 * tail;
    const bool ok = rhs == s[n];
    const bool even = mpz_even_p(doubled_half.get_mpz_t()) != 0;
    if (n < SRelationCheck::first_n) {
      if (!ok || !even) out.boundary_failures.push_back(n);
      continue;
    }
    if (!ok) {
      out.holds = false;
      out.failures.push_back(n);
    }
    if (!even) out.parity_ok = false;
  }
  return out;
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::operator()(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.coeffs_.empty() || q.coeffs_.empty()) return {};
  std::vector<mpz_class> out(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return IntPolynomial(std::move(out));
}

std::string to_string(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = p.degree(); e >= 0; --e) {
    const mpz_class& a = c[static_cast<std::size_t>(e)];
    if (a == 0) continue;
    mpz_class mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || e == 0) os << mag.get_str();
    if (e >= 1) os << "x";
    if (e >= 2) os << "^" << e;
  }
  return os.str();
}

CharacteristicPolynomialCheck characteristic_polynomial_d2() {
  CharacteristicPolynomialCheck out;
  out.sextic = IntPolynomial{-2, 0, 3, 2, -2, -2, 1};
  out.factors = {IntPolynomial{-1, 1}, IntPolynomial{-1, 1}, IntPolynomial{1, 1},
                 IntPolynomial{-2, -2, -1, 1}};
  out.expanded = IntPolynomial{1};
  for (const auto& f : out.factors) out.expanded = out.expanded * f;
  out.matches = out.expanded == out.sextic;
  return out;
}

mpz_class cubic_discriminant(const IntPolynomial& cubic) {
  if (cubic.degree() != 3) throw std::invalid_argument("not a cubic");
  const auto& k = cubic.coefficients();
  const mpz_class &d = k[0], &c = k[1], &b = k[2], &a = k[3];
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c - 27 * a * a * d * d;
}

std::string to_string(GrowthMethod m) {
  switch (m) {
    case GrowthMethod::nth_root: return "nth_root";
    case GrowthMethod::ratio: return "ratio";
    case GrowthMethod::spectral_radius: return "spectral_radius";
    case GrowthMethod::closed_form: return "closed_form";
  }
  return "?";
}

namespace {

mpf_class mpf(long v) { return mpf_class(v, kGrowthPrecision); }

mpf_class mpf(const mpz_class& v) { return mpf_class(v, kGrowthPrecision); }

mpf_class epsilon() {
  mpf_class e = mpf(1);
  mpf_div_2exp(e.get_mpf_t(), e.get_mpf_t(), kGrowthPrecision - 16);
  return e;
}

mpf_class ratio_at(const CountSeries& r, int n) { return mpf(r[n]) / mpf(r[n - 1]); }

}  // namespace

mpf_class nth_root(const mpf_class& x, unsigned n) {
  if (x < 0) throw std::domain_error("nth_root of a negative number");
  if (x == 0 || n == 1) return mpf_class(x, kGrowthPrecision);
  long exp2 = 0;
  double mant = mpf_get_d_2exp(&exp2, x.get_mpf_t());
  double guess = std::exp((std::log(mant) + static_cast<double>(exp2) * std::log(2.0)) / n);
  mpf_class y(guess, kGrowthPrecision);
  const mpf_class tol = epsilon();
  for (int it = 0; it < 500; ++it) {
    mpf_class pow(0, kGrowthPrecision);
    mpf_pow_ui(pow.get_mpf_t(), y.get_mpf_t(), n - 1);
    mpf_class next = ((n - 1) * y + x / pow) / n;
    mpf_class delta = abs(next - y);
    y = next;
    if (delta <= tol * y) break;
  }
  return y;
}

mpf_class golden_ratio() { return (1 + sqrt(mpf(5))) / 2; }

mpf_class cubic_real_root() {
  const IntPolynomial cubic{-2, -2, -1, 1};
  if (!(cubic(2) < 0 && cubic(3) > 0)) throw std::logic_error("cubic root is not bracketed by [2, 3]");
  auto eval = [](const mpf_class& x) -> mpf_class { return ((x - 1) * x - 2) * x - 2; };
  auto slope = [](const mpf_class& x) -> mpf_class { return (3 * x - 2) * x - 2; };
  mpf_class lo = mpf(2), hi = mpf(3);
  for (int it = 0; it < 60; ++it) {
    mpf_class mid = (lo + hi) / 2;
    if (eval(mid) < 0) lo = mid; else hi = mid;
  }
  mpf_class x = (lo + hi) / 2;
  const mpf_class tol = epsilon();
  for (int it = 0; it < 100; ++it) {
    mpf_class step = eval(x) / slope(x);
    x -= step;
    if (abs(step) <= tol) break;
  }
  return x;
}

mpf_class cubic_radical_root() {
  mpf_class root114 = sqrt(mpf(114));
  return (1 + nth_root(37 - 3 * root114, 3) + nth_root(37 + 3 * root114, 3)) / 3;
}

namespace {

GrowthEstimate spectral_radius(int d) {
  const auto m = ForbiddenFactorAutomaton(d).transfer_matrix();
  const std::size_t n = m.size();
  std::vector<mpf_class> v(n, mpf(1));
  mpf_class lo = mpf(0), hi = mpf(0);
  const mpf_class tol = epsilon();
  for (int it = 0; it < 20000; ++it) {
    std::vector<mpf_class> w(n, mpf(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m[i][j]) w[i] += m[i][j] * v[j];
    // Collatz-Wielandt: min_i (Av)_i / v_i <= rho <= max_i (Av)_i / v_i.
    lo = w[0] / v[0];
    hi = lo;
    for (std::size_t i = 1; i < n; ++i) {
      mpf_class q = w[i] / v[i];
      if (q < lo) lo = q;
      if (q > hi) hi = q;
    }
    mpf_class top = *std::max_element(w.begin(), w.end());
    for (auto& x : w) x /= top;
    v = std::move(w);
    if (hi - lo <= tol * hi) break;
  }
  return {GrowthMethod::spectral_radius, (lo + hi) / 2, (hi - lo) / 2};
}

}  // namespace

GrowthEstimate growth_rate(int d, GrowthMethod method, int n) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  switch (method) {
    case GrowthMethod::ratio:
    case GrowthMethod::nth_root: {
      if (n < 2) throw std::invalid_argument("series estimates need n >= 2");
      const CountSeries r = count_series(d, n, CountMethod::automaton);
      mpf_class ratio = ratio_at(r, n);
      if (method == GrowthMethod::ratio)
        return {method, ratio, abs(ratio - ratio_at(r, n - 1))};
      mpf_class root = nth_root(mpf(r[n]), static_cast<unsigned>(n));
      return {method, root, abs(root - ratio)};
    }
    case GrowthMethod::spectral_radius: return spectral_radius(d);
    case GrowthMethod::closed_form:
      if (d == 1) return {method, golden_ratio(), epsilon()};
      if (d == 2) {
        mpf_class root = cubic_real_root();
        mpf_class err = abs(root - cubic_radical_root());
        return {method, root, err > epsilon() ? err : epsilon()};
      }
      throw std::domain_error("closed form growth rate is only known for d = 1, 2");
  }
  throw std::invalid_argument("unknown growth method");
}

FeketeCheck fekete_check(const CountSeries& r) {
  const int N = r.max_n();
  for (int s = 0; s <= N; ++s)
    for (int t = 0; s + t <= N; ++t)
      if (r[s + t] > r[s] * r[t]) return {false, std::make_pair(s, t)};
  return {true, std::nullopt};
}

RemarkCheck remark_check() {
  RemarkCheck out;
  out.growth_d1 = growth_rate(1, GrowthMethod::spectral_radius).value;
  out.root_quadratic = golden_ratio();  // larger root of x^2 - x - 1
  out.growth_d2 = growth_rate(2, GrowthMethod::spectral_radius).value;
  out.root_cubic = cubic_real_root();
  // Product of the cubic's roots is 2, so the complex pair has |z|^2 = 2 / gamma.
  out.complex_pair_modulus = sqrt(2 / out.root_cubic);
  out.cubic_discriminant = cubic_discriminant(IntPolynomial{-2, -2, -1, 1});
  const mpf_class tol(1e-9, kGrowthPrecision);
  out.holds = abs(out.growth_d1 - out.root_quadratic) < tol &&
              abs(out.growth_d2 - out.root_cubic) < tol &&
              abs(out.root_cubic - cubic_radical_root()) < tol &&
              out.complex_pair_modulus < out.root_cubic && out.cubic_discriminant < 0;
  return out;
}

std::string format_decimal(const mpf_class& x, int digits) {
  char* buf = nullptr;
  gmp_asprintf(&buf, "%.*Ff", digits, x.get_mpf_t());
  std::string s(buf);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(buf, s.size() + 1);
  return s;
}

std::string to_csv(const CountSeries& r) {
  const BigStartSeries s = big_start_series(r);
  std::ostringstream os;
  os << "n,r_n,s_n,ratio,nth_root\n";
  for (int n = 0; n <= r.max_n(); ++n) {
    os << n << ',' << r[n].get_str() << ',' << s[n].get_str() << ',';
    if (n >= 1) os << format_decimal(ratio_at(r, n), 12);
    os << ',';
    if (n >= 1) os << format_decimal(nth_root(mpf(r[n]), static_cast<unsigned>(n)), 12);
    os << '\n';
  }
  return os.str();
}

}  // namespace lie2u
