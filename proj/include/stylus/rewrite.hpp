// rewrite.hpp -- string rewriting systems over presentation alphabets
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "stylus/derivation.hpp"
#include "stylus/presentation.hpp"

namespace stylus {

struct RewriteRule {
  Word lhs;  // never empty
  Word rhs;

  friend bool operator==(RewriteRule const&, RewriteRule const&) = default;
};

struct RewriteSystem {
  Alphabet alphabet;
  std::vector<RewriteRule> rules;
};

// Rejects empty left-hand sides and out-of-range letters.
void validate_rewrite_system(RewriteSystem const& s);

// Per-symbol precedence for shortlex: lower rank compares smaller.  Must be
// a permutation of 0..n-1.
struct SymbolRanking {
  std::vector<std::uint32_t> rank_of;
};

SymbolRanking identity_ranking(Alphabet const& a);
bool shortlex_less(Word const& u, Word const& v, SymbolRanking const& order);

// Orients every relation so that the shortlex-greater side rewrites to the
// smaller; throws OrientError listing relations with identical sides.
RewriteSystem orient_presentation(Presentation const& p, SymbolRanking const& order);

// The congruence a system presents: one relation lhs = rhs per rule, monoid
// kind (right-hand sides may be empty).  Normalize derivations check here.
Presentation as_presentation(RewriteSystem const& s);

struct Redex {
  std::size_t rule = 0;
  std::size_t position = 0;

  friend bool operator==(Redex const&, Redex const&) = default;
};

// All rule occurrences in `w`, in (position, rule index) order.
std::vector<Redex> enumerate_redexes(RewriteSystem const& s, Word const& w);

struct NormalizeResult {
  bool irreducible = false;  // false iff the step budget ran out first
  Word word;                 // last word reached
  Derivation derivation;     // forward-only steps over as_presentation(s)
};

// Leftmost-first normalization: repeatedly rewrites the first redex in
// (position, rule) order, at most `max_steps` times.
NormalizeResult normalize(RewriteSystem const& s, Word const& w,
                          std::uint64_t max_steps);

enum class OverlapKind { Inner, Boundary };

struct CriticalPair {
  Word peak;
  Word left;   // peak rewritten by the first rule of the overlap
  Word right;  // peak rewritten by the second
  std::size_t rule_a = 0;
  std::size_t rule_b = 0;
  std::size_t offset = 0;  // where rule_b's lhs sits inside the peak
  OverlapKind kind = OverlapKind::Inner;
};

// Inner overlaps (one lhs inside another) and boundary overlaps (suffix of
// one lhs equals a prefix of another, both orders, self-overlaps included),
// deduplicated on (peak, left, right).  Deterministic order.
std::vector<CriticalPair> critical_pairs(RewriteSystem const& s);

enum class LocalConfluenceStatus { LocallyConfluent, NotLocallyConfluent, Unknown };

struct LocalConfluenceReport {
  LocalConfluenceStatus status = LocalConfluenceStatus::Unknown;
  std::optional<CriticalPair> witness;  // first non-joining pair
  Word left_normal_form, right_normal_form;
};

// Normalizes both branches of every critical pair under `join_budget` steps
// each; Unknown when some branch exhausts the budget first.
LocalConfluenceReport check_local_confluence(RewriteSystem const& s,
                                             std::uint64_t join_budget);

enum class CompletionStatus { Completed, Failed, BudgetExhausted };

struct CompletionBudget {
  std::size_t max_rules = 0;
  std::uint64_t max_pair_normalizations = 0;
};

struct CompletionResult {
  CompletionStatus status = CompletionStatus::Failed;
  RewriteSystem system;  // completed, or the partial system on budget exhaustion
  std::string reason;
};

// Knuth-Bendix completion under shortlex: orient, resolve critical pairs,
// inter-reduce after every added rule.
CompletionResult complete_knuth_bendix(Presentation const& p,
                                       SymbolRanking const& order,
                                       CompletionBudget budget);

enum class TerminationStatus { Terminates, NonTerminating, Unknown };

struct TerminationVerdict {
  TerminationStatus status = TerminationStatus::Unknown;
  std::size_t closure_size = 0;  // distinct words reachable (Terminates)
  std::size_t max_chain = 0;     // longest rewrite chain from w (Terminates)
  std::size_t explored = 0;      // words seen before giving up (Unknown)
  std::optional<Derivation> cycle_witness;  // w' => w' in >= 1 forward steps
};

// Explores the forward closure of `w` up to `max_closure` distinct words.
// A cycle anywhere in the reachable graph yields NonTerminating with a
// checker-valid witness; full exploration yields Terminates; otherwise
// Unknown (the straightforward one-word semi-decision, not a proof device).
TerminationVerdict decide_termination_on_word(RewriteSystem const& s, Word const& w,
                                              std::size_t max_closure);

// ---- rewriting system text format -------------------------------------------
//
// Same file format as presentations with "kind: rewriting"; each rel line
// reads lhs = rhs as a rule oriented left to right.
RewriteSystem parse_rewrite_system(std::string_view text);
std::string print_rewrite_system(RewriteSystem const& s);

}  // namespace stylus
