#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "shiftlab/point.hpp"
#include "shiftlab/word.hpp"

namespace shiftlab {

// ============================================================================
// Subshifts presented by a basis of forbidden words.
//
// Two basis kinds:
//
//   * ExplicitBasis — a finite set of forbidden words (the finite-type case).
//     By default the ambient alphabet is all of the naturals, so any symbol
//     absent from the basis words is "fresh" and interchangeable with any
//     other such symbol.  An optional declared finite alphabet confines the
//     ambient space (needed for the finite-alphabet counterexamples).
//
//   * RuleBasis — a decidable predicate on words of bounded length; only the
//     built-in "monotone" family is provided.  With direction non_increasing
//     the rule forbids every rise [s,t], s < t, leaving the weakly decreasing
//     sequences; non_decreasing forbids falls instead.  A declared alphabet
//     bound caps the symbols enumerated during global searches, and global
//     answers carry that scope.
//
// Local admissibility of a word means no factor is matched by the basis.
// Global admissibility means the word occurs in an actual point of the
// subshift; over the unrestricted infinite alphabet the two coincide for
// explicit bases (extend by a symbol that appears in no basis word), while
// declared-alphabet and rule bases are decided through reachability to and
// from recurrent states of the window graph.
// ============================================================================

enum class MonotoneDirection { non_increasing, non_decreasing };

struct ExplicitBasis {
  std::vector<Word> words;
  // Declared finite ambient alphabet; empty optional = all naturals.
  std::optional<std::vector<Symbol>> alphabet;
};

struct RuleBasis {
  MonotoneDirection direction = MonotoneDirection::non_increasing;
  std::uint32_t max_len = 2;
  Symbol alphabet_bound = 16;
};

using BasisSpec = std::variant<ExplicitBasis, RuleBasis>;

struct GlobalAnswer {
  bool value = false;
  // False when the answer is only exact up to the declared alphabet bound.
  bool certified = true;
};

struct MembershipResult {
  bool value = false;
  // True when the verdict is exact (eventually periodic point scanned past
  // its period closure); otherwise sound only to the horizon.
  bool exact = false;
  // First offending position when value is false.
  std::uint64_t violation = 0;
};

class FactorScanner;
class WindowGraph;

class Subshift {
 public:
  // Computes max basis length, active alphabet and kind flags; rejects
  // malformed specs (empty basis word, zero rule length, duplicate words).
  static Subshift validate(BasisSpec spec);

  const BasisSpec& basis() const { return spec_; }
  const ExplicitBasis* explicit_basis() const;
  const RuleBasis* rule_basis() const;

  // Max basis word length L; 0 iff the basis is empty (full shift).
  std::uint32_t max_basis_length() const { return max_len_; }
  const std::vector<Symbol>& active_alphabet() const { return active_; }
  bool is_sft() const { return is_sft_; }
  bool is_sbt() const { return is_sbt_; }

  // Explicit basis over the unrestricted alphabet?
  bool unrestricted_sft() const;

  bool locally_allowed(const Word& w) const;
  GlobalAnswer globally_allowed(const Word& w) const;

  // Smallest overlap M = max(L-1, 0) such that allowed uw and wv with
  // |w| >= M always glue to an allowed uwv.
  std::uint32_t gluing_bound() const;

  // Truth of the gluing implication instance for (u, w, v).  Throws
  // PreconditionError when |w| < gluing_bound().
  bool verify_gluing(const Word& u, const Word& w, const Word& v) const;

  // `count` strictly increasing symbols absent from the basis words and from
  // `avoid`: consecutive integers starting just past everything seen.  Only
  // explicit bases over the unrestricted alphabet have fresh symbols.
  std::vector<Symbol> fresh_symbols(std::size_t count,
                                    const std::vector<Symbol>& avoid) const;

  // Factor-level membership of a point, scanned to `horizon` (>= L required).
  MembershipResult contains(const Point& x, std::uint64_t horizon) const;

  // Window-graph decision for global admissibility.  For unrestricted
  // explicit bases this is the independent route (symbols outside the active
  // alphabet are quotiented to one class representative); for declared
  // alphabets and rules it is the primary route.
  bool graph_allows(const Word& w) const;

  // Symbols the window graph enumerates (includes the class representative
  // for unrestricted explicit bases).
  const std::vector<Symbol>& search_domain() const { return domain_; }

 private:
  Subshift() = default;

  BasisSpec spec_;
  std::uint32_t max_len_ = 0;
  std::vector<Symbol> active_;
  bool is_sft_ = false;
  bool is_sbt_ = false;

  std::vector<Symbol> domain_;
  std::optional<Symbol> class_rep_;
  std::shared_ptr<const FactorScanner> scanner_;
  std::shared_ptr<const WindowGraph> graph_;

  bool rule_matches(const Word& w) const;  // whole-word rule test
  friend class WindowGraph;
};

// ----------------------------------------------------------------------------
// Multi-pattern factor scanning (Aho-Corasick with sparse transitions).
// ----------------------------------------------------------------------------
class FactorScanner {
 public:
  explicit FactorScanner(const std::vector<Word>& patterns);

  // True iff no pattern occurs in the text.
  bool clean(const Word& text) const;

  // Incremental interface for enumeration sweeps.
  int root() const { return 0; }
  int step(int state, Symbol s) const;
  bool hit(int state) const { return nodes_[static_cast<std::size_t>(state)].terminal; }

 private:
  struct Node {
    std::vector<std::pair<Symbol, int>> next;  // sorted by symbol
    int fail = 0;
    bool terminal = false;
  };
  int child(int state, Symbol s) const;
  std::vector<Node> nodes_;
};

// ----------------------------------------------------------------------------
// Window graph: vertices are locally allowed words of length L-1 over the
// search domain; edges extend by one symbol keeping the length-L word
// allowed.  A word is globally admissible iff its first window is reachable
// from a cycle and its last window reaches a cycle.
// ----------------------------------------------------------------------------
class WindowGraph {
 public:
  static std::shared_ptr<const WindowGraph> build(const Subshift& owner,
                                                  std::vector<Symbol> domain,
                                                  std::uint32_t window_len,
                                                  std::size_t max_vertices);

  // w must already use domain symbols only.
  bool admits(const Subshift& owner, const Word& w) const;

  std::size_t vertex_count() const { return vertices_.size(); }

 private:
  std::uint32_t win_ = 0;
  std::vector<Symbol> domain_;
  std::vector<Word> vertices_;
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<char> on_cycle_;
  std::vector<char> from_cycle_;  // reachable from some cycle vertex
  std::vector<char> to_cycle_;    // can reach some cycle vertex

  std::optional<std::uint32_t> vertex_index(const Word& w) const;
};

}  // namespace shiftlab
