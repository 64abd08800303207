// derivation.hpp -- machine-checkable equality certificates
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "stylus/presentation.hpp"
#include "stylus/word.hpp"

namespace stylus {

enum class StepDirection { Forward, Reverse };

// One rewrite: apply relation `relation` of the ambient presentation at
// letter offset `position`, replacing lhs by rhs (Forward) or rhs by lhs
// (Reverse).
struct DerivationStep {
  std::size_t relation = 0;
  StepDirection direction = StepDirection::Forward;
  std::size_t position = 0;

  friend bool operator==(DerivationStep const&, DerivationStep const&) = default;
};

// A derivation witnesses start = end modulo the presentation's relations.
// It is data, not a proof object: run check_derivation to trust it.
struct Derivation {
  Presentation presentation;
  Word start;
  std::vector<DerivationStep> steps;
  Word end;
};

enum class StepFailure {
  Range,     // relation index or position out of range
  Mismatch,  // the replaced side does not occur at the position
};

struct StepApplication {
  std::optional<Word> word;  // engaged iff the step applied
  StepFailure failure = StepFailure::Range;

  bool ok() const noexcept { return word.has_value(); }
};

// Applies a single step to `w`; never throws.
StepApplication apply_step(Presentation const& p, Word const& w,
                           DerivationStep const& s);

struct CheckReport {
  bool ok = false;
  Word final_word;  // word reached after the last step that applied
  // Index of the first failure.  Equal to steps.size() when every step
  // applied but the final word differs from the claimed end.
  std::optional<std::size_t> failed_step;
  std::optional<StepFailure> failure;  // set when failed_step < steps.size()
};

// Replays every step; failures are reported, not thrown.
CheckReport check_derivation(Derivation const& d);

// Convenience: check and throw std::invalid_argument on failure.
void require_valid(Derivation const& d, char const* who);

// Step-reversed, direction-flipped certificate for end = start.  Requires a
// valid input (throws std::invalid_argument otherwise).
Derivation invert_derivation(Derivation const& d);

// Certificate left·start·right = left·end·right; positions shift by |left|.
Derivation embed_in_context(Derivation const& d, Word const& left, Word const& right);

// Concatenation; requires d1.end == d2.start over the same presentation.
Derivation concat_derivations(Derivation const& d1, Derivation const& d2);

// ---- equality search --------------------------------------------------------

struct SearchBudget {
  std::uint64_t max_nodes = 0;  // expansions across both frontiers
  std::uint32_t max_depth = 0;  // combined depth of the two frontiers
};

// Bidirectional breadth-first search for a derivation u = v.  Deterministic:
// neighbors enumerate in (relation, forward-before-reverse, position) order,
// the two frontiers expand alternately, and among the meets found at the
// first meeting depth the shortlex-least word is chosen.  Returns the
// certificate, or nullopt when the budget is exhausted (which proves
// nothing about inequality).
std::optional<Derivation> search_equality(Presentation const& p, Word const& u,
                                          Word const& v, SearchBudget budget);

}  // namespace stylus
