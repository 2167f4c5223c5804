#include "lie2u/rewriting.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <thread>

namespace lie2u {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter a : w) {
    h ^= (static_cast<std::size_t>(a.cls) << 16) | a.index;
    h *= 1099511628211ull;
  }
  return h;
}

RelationSet::RelationSet(Alphabet alphabet, std::vector<NcPolynomial> relations)
    : alphabet_(alphabet), relations_(std::move(relations)) {
  leads_.reserve(relations_.size());
  for (std::size_t id = 0; id < relations_.size(); ++id) {
    const NcPolynomial& r = relations_[id];
    if (r.is_zero()) throw std::invalid_argument("relation " + std::to_string(id) + " is zero");
    for (const auto& [w, c] : r.terms()) {
      if (has_primed(w)) throw UnorderedGenerator();
      if (!alphabet_.contains(w))
        throw std::invalid_argument("relation " + std::to_string(id) + " leaves the alphabet");
    }
    if (r.leading_coefficient() != 1)
      throw std::invalid_argument("relation " + std::to_string(id) + " is not monic");
    leads_.push_back(r.leading_word());
    lead_index_.try_emplace(leads_.back(), id);
    lead_lengths_.push_back(leads_.back().size());
  }
  std::sort(lead_lengths_.begin(), lead_lengths_.end());
  lead_lengths_.erase(std::unique(lead_lengths_.begin(), lead_lengths_.end()), lead_lengths_.end());
}

std::optional<FactorMatch> RelationSet::find_factor(std::span<const Letter> w) const {
  std::optional<FactorMatch> best;
  Word probe;
  for (std::size_t len : lead_lengths_) {
    if (len > w.size()) break;
    for (std::size_t pos = 0; pos + len <= w.size(); ++pos) {
      probe.assign(w.begin() + pos, w.begin() + pos + len);
      auto it = lead_index_.find(probe);
      if (it == lead_index_.end()) continue;
      if (!best || it->second < best->relation ||
          (it->second == best->relation && pos < best->position))
        best = FactorMatch{it->second, pos};
    }
  }
  return best;
}

namespace {

void check_input(const NcPolynomial& p, const RelationSet& s) {
  for (const auto& [w, c] : p.terms()) {
    if (has_primed(w)) throw UnorderedGenerator();
    if (!s.alphabet().contains(w)) throw std::invalid_argument("word outside the alphabet");
  }
}

template <bool Record>
Reduction reduce_impl(const NcPolynomial& p, const RelationSet& s) {
  check_input(p, s);
  Reduction out;
  NcPolynomial work = p;
  while (!work.is_zero()) {
    auto top = std::prev(work.terms().end());
    const Word w = top->first;
    const Scalar c = top->second;
    auto match = s.find_factor(w);
    if (!match) {
      out.normal_form.add_term(w, c);
      work.add_term(w, -c);
      continue;
    }
    std::span<const Letter> ws(w);
    const std::size_t len = s.leading_word(match->relation).size();
    auto a = ws.subspan(0, match->position);
    auto b = ws.subspan(match->position + len);
    for (const auto& [u, k] : s[match->relation].terms()) work.add_term(concat(a, u, b), -c * k);
    if constexpr (Record) out.trail.push_back({match->relation, match->position, w});
  }
  return out;
}

}  // namespace

Reduction reduce(const NcPolynomial& p, const RelationSet& s) { return reduce_impl<true>(p, s); }

NcPolynomial normal_form(const NcPolynomial& p, const RelationSet& s) {
  return reduce_impl<false>(p, s).normal_form;
}

std::vector<Composition> intersection_compositions(const NcPolynomial& f, const NcPolynomial& g,
                                                   std::size_t left_id, std::size_t right_id) {
  const Word& lf = f.leading_word();
  const Word& lg = g.leading_word();
  std::vector<Composition> out;
  const std::size_t max_overlap = std::min(lf.size(), lg.size());
  for (std::size_t k = 1; k < max_overlap; ++k) {
    if (!std::equal(lf.end() - k, lf.end(), lg.begin())) continue;
    std::span<const Letter> a(lf.data(), lf.size() - k);
    std::span<const Letter> b(lg.data() + k, lg.size() - k);
    NcPolynomial poly = sandwich({}, f, b) - sandwich(a, g, {});
    out.push_back({CompositionKind::intersection, left_id, right_id, concat(lf, b), a.size(),
                   std::move(poly)});
  }
  return out;
}

std::vector<Composition> inclusion_compositions(const NcPolynomial& f, const NcPolynomial& g,
                                                std::size_t left_id, std::size_t right_id) {
  const Word& lf = f.leading_word();
  const Word& lg = g.leading_word();
  std::vector<Composition> out;
  if (lg.size() > lf.size()) return out;
  for (std::size_t pos = 0; pos + lg.size() <= lf.size(); ++pos) {
    if (!std::equal(lg.begin(), lg.end(), lf.begin() + pos)) continue;
    std::span<const Letter> a(lf.data(), pos);
    std::span<const Letter> b(lf.data() + pos + lg.size(), lf.size() - pos - lg.size());
    out.push_back({CompositionKind::inclusion, left_id, right_id, lf, pos, f - sandwich(a, g, b)});
  }
  return out;
}

TrivialityCheck is_trivial(const Composition& c, const RelationSet& s) {
  Reduction r = reduce(c.polynomial, s);
  bool trivial = r.normal_form.is_zero();
  return {trivial, std::move(r)};
}

std::size_t CompositionReport::nontrivial_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const Entry& e) { return !e.trivial; }));
}

namespace {

unsigned worker_count() {
  if (const char* env = std::getenv("LIE2U_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Composition> compositions_of_pair(const RelationSet& s, std::size_t i, std::size_t j,
                                              std::size_t max_degree) {
  std::vector<Composition> out = intersection_compositions(s[i], s[j], i, j);
  if (i != j) {
    auto inc = inclusion_compositions(s[i], s[j], i, j);
    out.insert(out.end(), std::make_move_iterator(inc.begin()), std::make_move_iterator(inc.end()));
  }
  std::erase_if(out, [&](const Composition& c) { return c.ambiguity.size() > max_degree; });
  return out;
}

}  // namespace

CompositionReport verify_gsb(const RelationSet& s, std::size_t max_ambiguity_degree) {
  const std::size_t n = s.size();
  auto check_row = [&](std::size_t i) {
    std::vector<CompositionReport::Entry> row;
    for (std::size_t j = 0; j < n; ++j)
      for (auto& c : compositions_of_pair(s, i, j, max_ambiguity_degree)) {
        auto check = is_trivial(c, s);
        row.push_back({std::move(c), std::move(check.reduction), check.trivial});
      }
    return row;
  };

  std::vector<std::vector<CompositionReport::Entry>> rows(n);
  const unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) rows[i] = check_row(i);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < workers; ++t)
      jobs.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t i = t; i < n; i += workers) rows[i] = check_row(i);
      }));
    for (auto& job : jobs) job.get();
  }

  CompositionReport report;
  for (auto& row : rows)
    for (auto& e : row) report.entries.push_back(std::move(e));
  return report;
}

namespace {

bool contains_factor(const Word& w, const Word& u) {
  if (u.size() > w.size()) return false;
  return std::search(w.begin(), w.end(), u.begin(), u.end()) != w.end();
}

void sort_by_leading_word(std::vector<NcPolynomial>& rels) {
  std::sort(rels.begin(), rels.end(), [](const NcPolynomial& p, const NcPolynomial& q) {
    return compare_words(p.leading_word(), q.leading_word()) < 0;
  });
}

}  // namespace

std::vector<NcPolynomial> interreduce(const Alphabet& alphabet, std::vector<NcPolynomial> rels) {
  std::erase_if(rels, [](const NcPolynomial& p) { return p.is_zero(); });
  for (auto& r : rels) r = make_monic(r);

  // Drop relations whose leading word is reducible by another one, feeding
  // their normal form back in, until leading words are factor-free.
  bool changed = true;
  while (changed) {
    changed = false;
    sort_by_leading_word(rels);
    for (std::size_t i = 0; i < rels.size() && !changed; ++i) {
      for (std::size_t j = 0; j < rels.size(); ++j) {
        if (i == j || !contains_factor(rels[i].leading_word(), rels[j].leading_word())) continue;
        NcPolynomial victim = std::move(rels[i]);
        rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(i));
        NcPolynomial rest = normal_form(victim, RelationSet(alphabet, rels));
        if (!rest.is_zero()) rels.push_back(make_monic(rest));
        changed = true;
        break;
      }
    }
  }

  RelationSet current(alphabet, rels);
  for (auto& r : rels) {
    NcPolynomial lead(r.leading_word());
    r = lead + normal_form(r - lead, current);
  }
  sort_by_leading_word(rels);
  return rels;
}

Completion complete(const RelationSet& s, int max_degree) {
  const Alphabet& alphabet = s.alphabet();
  const std::size_t bound = max_degree < 0 ? 0 : static_cast<std::size_t>(max_degree);
  std::vector<NcPolynomial> rels = interreduce(alphabet, s.relations());
  int rounds = 0;
  for (;;) {
    ++rounds;
    RelationSet current(alphabet, rels);
    std::vector<NcPolynomial> grown = rels;
    RelationSet grown_set = current;
    bool added = false;
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = 0; j < current.size(); ++j)
        for (const auto& c : compositions_of_pair(current, i, j, bound)) {
          // Reduce against everything found so far, so each adjunction has
          // a leading word that is new.
          NcPolynomial nf = normal_form(c.polynomial, grown_set);
          if (nf.is_zero()) continue;
          grown.push_back(make_monic(nf));
          grown_set = RelationSet(alphabet, grown);
          added = true;
        }
    if (!added) break;
    rels = interreduce(alphabet, std::move(grown));
  }
  RelationSet out(alphabet, std::move(rels));
  bool saturated = verify_gsb(out).all_trivial();
  return {std::move(out), saturated, rounds};
}

}  // namespace lie2u
