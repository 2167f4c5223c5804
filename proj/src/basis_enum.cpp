#include "lie2u/basis_enum.hpp"

#include <algorithm>
#include <unordered_set>

namespace lie2u {

BasisShape parse_blocks(std::span<const Letter> w) {
  if (has_primed(w)) throw UnorderedGenerator();
  BasisShape shape;
  Word* run = &shape.head;
  for (Letter a : w) {
    if (a.cls == LetterClass::Big) {
      shape.blocks.push_back({a.index, {}});
      run = &shape.blocks.back().monomial;
    } else {
      run->push_back(a);
    }
  }
  return shape;
}

namespace {

bool nondecreasing(const Word& run) {
  return std::is_sorted(run.begin(), run.end(),
                        [](Letter x, Letter y) { return x.index < y.index; });
}

std::string block_name(std::size_t k) { return "w_" + std::to_string(k); }

}  // namespace

BasisCheck is_basis_word(std::span<const Letter> w) {
  const BasisShape shape = parse_blocks(w);
  const std::size_t s = shape.blocks.size();
  BasisCheck check;
  auto fail = [&](BasisCondition cond, std::size_t k, std::string msg) {
    check.violations.push_back({cond, k, std::move(msg)});
  };

  if (!nondecreasing(shape.head))
    fail(BasisCondition::a, 0, "w_0 is not an ordered monomial");
  for (std::size_t k = 1; k <= s; ++k) {
    const BasisBlock& blk = shape.blocks[k - 1];
    const Word& run = blk.monomial;
    if (!nondecreasing(run)) fail(BasisCondition::a, k, block_name(k) + " is not an ordered monomial");
    if (run.empty()) {
      if (k < s) fail(BasisCondition::a, k, "interior block " + block_name(k) + " is empty");
      continue;
    }
    if (blk.big_index > run.front().index)
      fail(BasisCondition::b, k,
           "i_" + std::to_string(k) + " = " + std::to_string(blk.big_index) + " > [" +
               block_name(k) + "] = " + std::to_string(run.front().index));
    if (k < s && run.size() == 1 && run.front().index > shape.blocks[k].big_index)
      fail(BasisCondition::c, k,
           block_name(k) + " = f_" + std::to_string(run.front().index) + " but i_" +
               std::to_string(k + 1) + " = " + std::to_string(shape.blocks[k].big_index));
  }
  return check;
}

namespace {

class PatternWalker {
 public:
  PatternWalker(int d, const std::function<void(const Word&)>& visit) : d_(d), visit_(visit) {}

  void run(int n) { head(1, n); }

 private:
  // w_0: nondecreasing Small letters from min_index on.
  void head(int min_index, int remaining) {
    blocks(1, remaining);
    if (remaining == 0) return;
    for (int p = min_index; p <= d_; ++p) {
      word_.push_back(small(p));
      head(p, remaining - 1);
      word_.pop_back();
    }
  }

  // Next block F_i with i >= min_big, or the end of the word.
  void blocks(int min_big, int remaining) {
    if (remaining == 0) {
      visit_(word_);
      return;
    }
    for (int i = min_big; i <= d_; ++i) {
      word_.push_back(big(i));
      body(i, 0, i, remaining - 1);
      word_.pop_back();
    }
  }

  // Run after F_i: first letter >= i (condition b), then nondecreasing. An
  // interior run of length one f_p needs the next Big index >= p (condition c).
  void body(int big_index, int run_length, int last, int remaining) {
    if (remaining == 0) {
      visit_(word_);
      return;
    }
    const int lo = run_length == 0 ? big_index : last;
    for (int p = lo; p <= d_; ++p) {
      word_.push_back(small(p));
      body(big_index, run_length + 1, p, remaining - 1);
      word_.pop_back();
    }
    if (run_length >= 1) blocks(run_length == 1 ? last : 1, remaining);
  }

  int d_;
  const std::function<void(const Word&)>& visit_;
  Word word_;
};

void sort_words(std::vector<Word>& words) {
  std::sort(words.begin(), words.end(),
            [](const Word& u, const Word& v) { return compare_words(u, v) < 0; });
}

}  // namespace

void for_each_pattern_word(int d, int n, const std::function<void(const Word&)>& visit) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  if (n < 0) throw std::invalid_argument("degree must be non-negative");
  PatternWalker(d, visit).run(n);
}

std::vector<Word> enumerate_pattern(int d, int n) {
  std::vector<Word> out;
  for_each_pattern_word(d, n, [&](const Word& w) { out.push_back(w); });
  sort_words(out);
  return out;
}

namespace {

class IrreducibleWalker {
 public:
  explicit IrreducibleWalker(const RelationSet& s)
      : letters_(s.alphabet().ordered_letters()), leads_(s.leading_words().begin(), s.leading_words().end()) {
    for (const Word& w : leads_) lengths_.push_back(w.size());
    std::sort(lengths_.begin(), lengths_.end());
    lengths_.erase(std::unique(lengths_.begin(), lengths_.end()), lengths_.end());
  }

  template <class Visit>
  void walk(int n, Visit&& visit) {
    visit(word_);
    if (static_cast<int>(word_.size()) == n) return;
    for (Letter a : letters_) {
      word_.push_back(a);
      if (!ends_with_lead()) walk(n, visit);
      word_.pop_back();
    }
  }

 private:
  bool ends_with_lead() {
    for (std::size_t len : lengths_) {
      if (len > word_.size()) break;
      probe_.assign(word_.end() - static_cast<std::ptrdiff_t>(len), word_.end());
      if (leads_.count(probe_)) return true;
    }
    return false;
  }

  std::vector<Letter> letters_;
  std::unordered_set<Word, WordHash> leads_;
  std::vector<std::size_t> lengths_;
  Word word_;
  Word probe_;
};

}  // namespace

std::vector<Word> enumerate_irreducible(const RelationSet& s, int n) {
  if (n < 0) throw std::invalid_argument("degree must be non-negative");
  std::vector<Word> out;
  IrreducibleWalker(s).walk(n, [&](const Word& w) {
    if (static_cast<int>(w.size()) == n) out.push_back(w);
  });
  sort_words(out);
  return out;
}

std::vector<std::uint64_t> irreducible_counts(const RelationSet& s, int max_n) {
  if (max_n < 0) throw std::invalid_argument("degree must be non-negative");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_n) + 1, 0);
  IrreducibleWalker(s).walk(max_n, [&](const Word& w) { ++counts[w.size()]; });
  return counts;
}

NormalCoordinates normal_coordinates(const NcPolynomial& p, const RelationSet& s) {
  NcPolynomial nf = normal_form(p, s);
  for (const auto& [w, c] : nf.terms()) {
    BasisCheck check = is_basis_word(w);
    if (!check.ok())
      throw std::logic_error("normal form contains non-basis word " + to_string(w) + ": " +
                             check.violations.front().message);
  }
  return nf.terms();
}

mpz_class monomial_count(int d, int a) {
  if (a < 0) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a + d - 1),
               static_cast<unsigned long>(d - 1));
  return out;
}

TensorCensus tensor_decomposition_census(int d, int n) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  if (n < 0) throw std::invalid_argument("degree must be non-negative");
  const auto N = static_cast<std::size_t>(n);
  const auto D = static_cast<std::size_t>(d);

  // open[m][s][c]: D(X)-words of degree m with s generators, all of size >= 2,
  // whose next generator must have minimal index >= c. The ideal I kills a
  // size-1 generator followed by anything, and (x_i x_j)(x_k m) with k < j.
  std::vector<std::vector<std::vector<mpz_class>>> open(
      N + 1, std::vector<std::vector<mpz_class>>(N + 1, std::vector<mpz_class>(D + 1)));
  open[0][0][1] = 1;
  for (std::size_t m = 0; m <= N; ++m)
    for (std::size_t s = 0; s < N; ++s)
      for (std::size_t c = 1; c <= D; ++c) {
        const mpz_class& here = open[m][s][c];
        if (here == 0) continue;
        for (std::size_t k = c; k <= D; ++k) {
          if (m + 2 <= N)
            for (std::size_t j = k; j <= D; ++j) open[m + 2][s + 1][j] += here;
          for (std::size_t t = 3; m + t <= N; ++t) {
            mpz_class shapes;  // ordered monomials of size t starting with x_k
            mpz_bin_uiui(shapes.get_mpz_t(), t - 1 + D - k, t - 1);
            open[m + t][s + 1][1] += here * shapes;
          }
        }
      }

  auto d_words = [&](std::size_t m, std::size_t s) {
    mpz_class total = 0;
    for (std::size_t c = 1; c <= D; ++c) {
      total += open[m][s][c];
      if (m >= 1 && s >= 1) total += open[m - 1][s - 1][c] * static_cast<unsigned long>(D - c + 1);
    }
    return total;
  };

  TensorCensus census{d, n, {}, 0};
  for (int a = 0; a <= n; ++a)
    for (std::size_t s = 0; s <= N; ++s) {
      mpz_class count = monomial_count(d, a) * d_words(N - static_cast<std::size_t>(a), s);
      if (count == 0) continue;
      census.total += count;
      census.strata.push_back({a, static_cast<int>(s), count});
    }
  return census;
}

}  // namespace lie2u
