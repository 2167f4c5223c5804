#pragma once

// Reduction modulo monic relations, compositions, Groebner-Shirshov basis
// verification and degree-bounded Shirshov completion.

#include "lie2u/free_algebra.hpp"

#include <optional>
#include <unordered_map>

namespace lie2u {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Occurrence of a relation's leading word inside some word.
struct FactorMatch {
  std::size_t relation;
  std::size_t position;
};

/// Ordered list of monic, Primed-free relations over one alphabet.
/// Relation ids are positions in the list.
class RelationSet {
 public:
  explicit RelationSet(Alphabet alphabet, std::vector<NcPolynomial> relations = {});

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return relations_.size(); }
  bool empty() const { return relations_.empty(); }
  const NcPolynomial& operator[](std::size_t id) const { return relations_[id]; }
  const std::vector<NcPolynomial>& relations() const { return relations_; }
  const Word& leading_word(std::size_t id) const { return leads_[id]; }
  const std::vector<Word>& leading_words() const { return leads_; }

  /// Smallest relation id whose leading word occurs in w, at its leftmost
  /// occurrence.
  std::optional<FactorMatch> find_factor(std::span<const Letter> w) const;

  /// True when w has no leading word as a factor.
  bool is_irreducible(std::span<const Letter> w) const { return !find_factor(w); }

 private:
  Alphabet alphabet_;
  std::vector<NcPolynomial> relations_;
  std::vector<Word> leads_;
  std::vector<std::size_t> lead_lengths_;  // distinct, ascending
  std::unordered_map<Word, std::size_t, WordHash> lead_index_;  // -> smallest id
};

struct RewriteStep {
  std::size_t relation;
  std::size_t position;
  Word word;  // the word that was rewritten
};

using ReductionTrail = std::vector<RewriteStep>;

struct Reduction {
  NcPolynomial normal_form;
  ReductionTrail trail;
};

// Rewrites the maximal reducible word first, using the smallest applicable
// relation id at its leftmost occurrence. Terminates because every step
// replaces a word by strictly smaller ones.
Reduction reduce(const NcPolynomial& p, const RelationSet& s);
NcPolynomial normal_form(const NcPolynomial& p, const RelationSet& s);

enum class CompositionKind { intersection, inclusion };

struct Composition {
  CompositionKind kind;
  std::size_t left;    // f
  std::size_t right;   // g
  Word ambiguity;      // w
  std::size_t offset;  // start of g's leading word inside w
  NcPolynomial polynomial;
};

/// (f,g)_w = f·b - a·g for every proper overlap w = lead(f)·b = a·lead(g),
/// |lead f| + |lead g| > |w|.
std::vector<Composition> intersection_compositions(const NcPolynomial& f, const NcPolynomial& g,
                                                   std::size_t left_id = 0,
                                                   std::size_t right_id = 0);

/// (f,g)_w = f - a·g·b for every embedding lead(f) = a·lead(g)·b.
std::vector<Composition> inclusion_compositions(const NcPolynomial& f, const NcPolynomial& g,
                                                std::size_t left_id = 0,
                                                std::size_t right_id = 0);

struct TrivialityCheck {
  bool trivial;
  Reduction reduction;
};

// Every monomial of a composition is below its ambiguity word and reduction
// only decreases words, so "normal form is zero" is exactly triviality
// modulo (S, w).
TrivialityCheck is_trivial(const Composition& c, const RelationSet& s);

struct CompositionReport {
  struct Entry {
    Composition composition;
    Reduction reduction;
    bool trivial;
  };

  std::vector<Entry> entries;

  std::size_t nontrivial_count() const;
  bool all_trivial() const { return nontrivial_count() == 0; }
};

/// Checks all intersection and inclusion compositions of all ordered pairs,
/// self-pairs included. Pairs are checked on LIE2U_THREADS worker threads
/// (default: hardware concurrency); entry order does not depend on it.
CompositionReport verify_gsb(const RelationSet& s, std::size_t max_ambiguity_degree = SIZE_MAX);

struct Completion {
  RelationSet relations;
  bool saturated;  // the output is a Groebner-Shirshov basis
  int rounds;
};

/// Inter-reduces: no leading word contains another as a factor and tails
/// are in normal form. Sorted by leading word.
std::vector<NcPolynomial> interreduce(const Alphabet& alphabet, std::vector<NcPolynomial> relations);

/// Adjoins normal forms of non-trivial compositions with |w| <= max_degree
/// until none remain.
Completion complete(const RelationSet& s, int max_degree);

}  // namespace lie2u
