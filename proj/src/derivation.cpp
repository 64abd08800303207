#include "stylus/derivation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stylus {

StepApplication apply_step(Presentation const& p, Word const& w,
                           DerivationStep const& s) {
  if (s.relation >= p.relations.size())
    return {std::nullopt, StepFailure::Range};
  Relation const& rel = p.relations[s.relation];
  Word const& from = s.direction == StepDirection::Forward ? rel.lhs : rel.rhs;
  Word const& to = s.direction == StepDirection::Forward ? rel.rhs : rel.lhs;
  if (s.position > w.size() || from.size() > w.size() - s.position)
    return {std::nullopt, StepFailure::Range};
  if (!occurs_at(w, from, s.position))
    return {std::nullopt, StepFailure::Mismatch};

  Word out;
  out.letters.reserve(w.size() - from.size() + to.size());
  out.letters.insert(out.letters.end(), w.letters.begin(),
                     w.letters.begin() + static_cast<std::ptrdiff_t>(s.position));
  out.letters.insert(out.letters.end(), to.letters.begin(), to.letters.end());
  out.letters.insert(out.letters.end(),
                     w.letters.begin() +
                         static_cast<std::ptrdiff_t>(s.position + from.size()),
                     w.letters.end());
  return {std::move(out), StepFailure::Range};
}

CheckReport check_derivation(Derivation const& d) {
  CheckReport report;
  Word current = d.start;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    StepApplication app = apply_step(d.presentation, current, d.steps[i]);
    if (!app.ok()) {
      report.ok = false;
      report.final_word = std::move(current);
      report.failed_step = i;
      report.failure = app.failure;
      return report;
    }
    current = std::move(*app.word);
  }
  report.final_word = std::move(current);
  if (report.final_word == d.end) {
    report.ok = true;
  } else {
    report.ok = false;
    report.failed_step = d.steps.size();  // failure at the final comparison
  }
  return report;
}

void require_valid(Derivation const& d, char const* who) {
  CheckReport r = check_derivation(d);
  if (!r.ok)
    throw std::invalid_argument(std::string(who) + ": derivation fails its check at " +
                                (r.failed_step && *r.failed_step < d.steps.size()
                                     ? "step " + std::to_string(*r.failed_step)
                                     : std::string("the final comparison")));
}

Derivation invert_derivation(Derivation const& d) {
  require_valid(d, "invert_derivation");
  Derivation out;
  out.presentation = d.presentation;
  out.start = d.end;
  out.end = d.start;
  out.steps.reserve(d.steps.size());
  // Reversing a step reuses its position: the prefix left of the rewrite is
  // untouched, so the same offset locates the opposite side.
  for (auto it = d.steps.rbegin(); it != d.steps.rend(); ++it) {
    DerivationStep s = *it;
    s.direction = s.direction == StepDirection::Forward ? StepDirection::Reverse
                                                        : StepDirection::Forward;
    out.steps.push_back(s);
  }
  return out;
}

Derivation embed_in_context(Derivation const& d, Word const& left, Word const& right) {
  for (Symbol s : left.letters)
    if (s >= d.presentation.alphabet.size())
      throw std::invalid_argument("embed_in_context: left context outside alphabet");
  for (Symbol s : right.letters)
    if (s >= d.presentation.alphabet.size())
      throw std::invalid_argument("embed_in_context: right context outside alphabet");

  Derivation out;
  out.presentation = d.presentation;
  out.start = concat(left, d.start, right);
  out.end = concat(left, d.end, right);
  out.steps = d.steps;
  for (DerivationStep& s : out.steps) s.position += left.size();
  return out;
}

Derivation concat_derivations(Derivation const& d1, Derivation const& d2) {
  if (!(d1.presentation.alphabet == d2.presentation.alphabet) ||
      d1.presentation.relations != d2.presentation.relations)
    throw std::invalid_argument("concat_derivations: presentations differ");
  if (d1.end != d2.start)
    throw std::invalid_argument("concat_derivations: endpoint mismatch");
  Derivation out;
  out.presentation = d1.presentation;
  out.start = d1.start;
  out.end = d2.end;
  out.steps = d1.steps;
  out.steps.insert(out.steps.end(), d2.steps.begin(), d2.steps.end());
  return out;
}

}  // namespace stylus
