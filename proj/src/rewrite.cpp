#include "stylus/rewrite.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "stylus/error.hpp"

namespace stylus {

void validate_rewrite_system(RewriteSystem const& s) {
  for (std::size_t i = 0; i < s.rules.size(); ++i) {
    if (s.rules[i].lhs.empty())
      throw std::invalid_argument("rule " + std::to_string(i) +
                                  " has an empty left-hand side");
    for (Word const* side : {&s.rules[i].lhs, &s.rules[i].rhs})
      for (Symbol l : side->letters)
        if (l >= s.alphabet.size())
          throw std::invalid_argument("rule " + std::to_string(i) +
                                      " uses a letter outside the alphabet");
  }
}

SymbolRanking identity_ranking(Alphabet const& a) {
  SymbolRanking r;
  r.rank_of.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r.rank_of[i] = static_cast<std::uint32_t>(i);
  return r;
}

bool shortlex_less(Word const& u, Word const& v, SymbolRanking const& order) {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto ru = order.rank_of.at(u[i]);
    auto rv = order.rank_of.at(v[i]);
    if (ru != rv) return ru < rv;
  }
  return false;
}

RewriteSystem orient_presentation(Presentation const& p, SymbolRanking const& order) {
  if (order.rank_of.size() != p.alphabet.size())
    throw std::invalid_argument("ranking must cover the whole alphabet");
  std::vector<std::size_t> offending;
  RewriteSystem s;
  s.alphabet = p.alphabet;
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    Relation const& r = p.relations[i];
    if (r.lhs == r.rhs) {
      offending.push_back(i);
      continue;
    }
    if (shortlex_less(r.lhs, r.rhs, order))
      s.rules.push_back(RewriteRule{r.rhs, r.lhs});
    else
      s.rules.push_back(RewriteRule{r.lhs, r.rhs});
  }
  if (!offending.empty()) {
    std::string msg = "cannot orient relations with identical sides:";
    for (auto i : offending) msg += " " + std::to_string(i);
    throw OrientError(msg, std::move(offending));
  }
  return s;
}

Presentation as_presentation(RewriteSystem const& s) {
  Presentation p;
  p.alphabet = s.alphabet;
  p.kind = PresentationKind::Monoid;
  for (RewriteRule const& r : s.rules) p.relations.push_back(Relation{r.lhs, r.rhs});
  return p;
}

std::vector<Redex> enumerate_redexes(RewriteSystem const& s, Word const& w) {
  std::vector<Redex> out;
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (std::size_t rule = 0; rule < s.rules.size(); ++rule)
      if (occurs_at(w, s.rules[rule].lhs, pos)) out.push_back(Redex{rule, pos});
  return out;
}

namespace {

// First redex in (position, rule) order, if any.
std::optional<Redex> first_redex(RewriteSystem const& s, Word const& w) {
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (std::size_t rule = 0; rule < s.rules.size(); ++rule)
      if (occurs_at(w, s.rules[rule].lhs, pos)) return Redex{rule, pos};
  return std::nullopt;
}

Word apply_rule(RewriteSystem const& s, Word const& w, Redex const& r) {
  RewriteRule const& rule = s.rules[r.rule];
  Word out;
  out.letters.reserve(w.size() - rule.lhs.size() + rule.rhs.size());
  out.letters.insert(out.letters.end(), w.letters.begin(),
                     w.letters.begin() + static_cast<std::ptrdiff_t>(r.position));
  out.letters.insert(out.letters.end(), rule.rhs.letters.begin(),
                     rule.rhs.letters.end());
  out.letters.insert(
      out.letters.end(),
      w.letters.begin() + static_cast<std::ptrdiff_t>(r.position + rule.lhs.size()),
      w.letters.end());
  return out;
}

}  // namespace

NormalizeResult normalize(RewriteSystem const& s, Word const& w,
                          std::uint64_t max_steps) {
  NormalizeResult result;
  result.derivation.presentation = as_presentation(s);
  result.derivation.start = w;
  Word current = w;
  std::uint64_t used = 0;
  for (;;) {
    auto redex = first_redex(s, current);
    if (!redex) {
      result.irreducible = true;
      break;
    }
    if (used == max_steps) {
      result.irreducible = false;
      break;
    }
    result.derivation.steps.push_back(
        DerivationStep{redex->rule, StepDirection::Forward, redex->position});
    current = apply_rule(s, current, *redex);
    ++used;
  }
  result.word = current;
  result.derivation.end = std::move(current);
  return result;
}

std::vector<CriticalPair> critical_pairs(RewriteSystem const& s) {
  std::vector<CriticalPair> out;
  std::set<std::tuple<Word, Word, Word>> seen;
  auto emit = [&](CriticalPair&& cp) {
    if (seen.emplace(cp.peak, cp.left, cp.right).second) out.push_back(std::move(cp));
  };

  for (std::size_t i = 0; i < s.rules.size(); ++i) {
    Word const& li = s.rules[i].lhs;
    for (std::size_t j = 0; j < s.rules.size(); ++j) {
      Word const& lj = s.rules[j].lhs;
      // Inner overlaps: lj a factor of li; skip the identical self-overlap.
      if (lj.size() <= li.size()) {
        for (std::size_t k = 0; k + lj.size() <= li.size(); ++k) {
          if (i == j && k == 0 && lj.size() == li.size()) continue;
          if (!occurs_at(li, lj, k)) continue;
          CriticalPair cp;
          cp.peak = li;
          cp.left = s.rules[i].rhs;
          cp.right = concat(li.subword(0, k), s.rules[j].rhs,
                            li.subword(k + lj.size(), li.size()));
          cp.rule_a = i;
          cp.rule_b = j;
          cp.offset = k;
          cp.kind = OverlapKind::Inner;
          emit(std::move(cp));
        }
      }
      // Boundary overlaps: a proper suffix of li equals a proper prefix of lj.
      std::size_t const max_t = std::min(li.size(), lj.size()) - 1;
      for (std::size_t t = 1; t <= max_t; ++t) {
        bool match = true;
        for (std::size_t m = 0; m < t; ++m)
          if (li[li.size() - t + m] != lj[m]) {
            match = false;
            break;
          }
        if (!match) continue;
        CriticalPair cp;
        cp.peak = concat(li, lj.subword(t, lj.size()));
        cp.left = concat(s.rules[i].rhs, lj.subword(t, lj.size()));
        cp.right = concat(li.subword(0, li.size() - t), s.rules[j].rhs);
        cp.rule_a = i;
        cp.rule_b = j;
        cp.offset = li.size() - t;
        cp.kind = OverlapKind::Boundary;
        emit(std::move(cp));
      }
    }
  }
  return out;
}

LocalConfluenceReport check_local_confluence(RewriteSystem const& s,
                                             std::uint64_t join_budget) {
  LocalConfluenceReport report;
  std::optional<CriticalPair> first_unknown;
  for (CriticalPair const& cp : critical_pairs(s)) {
    NormalizeResult nl = normalize(s, cp.left, join_budget);
    NormalizeResult nr = normalize(s, cp.right, join_budget);
    if (!nl.irreducible || !nr.irreducible) {
      if (!first_unknown) first_unknown = cp;
      continue;
    }
    if (nl.word != nr.word) {
      report.status = LocalConfluenceStatus::NotLocallyConfluent;
      report.witness = cp;
      report.left_normal_form = nl.word;
      report.right_normal_form = nr.word;
      return report;
    }
  }
  if (first_unknown) {
    report.status = LocalConfluenceStatus::Unknown;
    report.witness = *first_unknown;
  } else {
    report.status = LocalConfluenceStatus::LocallyConfluent;
  }
  return report;
}

namespace {

// Step cap for the auxiliary normalizations completion performs; hitting it
// means the candidate system loops, which surfaces as BudgetExhausted.
constexpr std::uint64_t kCompletionNormalizeCap = 100000;

// Rewrites `w` to normal form, skipping rule `skip` (pass npos to use all).
std::optional<Word> normal_form_skipping(RewriteSystem const& s, Word const& w,
                                         std::size_t skip) {
  Word current = w;
  for (std::uint64_t used = 0; used <= kCompletionNormalizeCap; ++used) {
    std::optional<Redex> redex;
    for (std::size_t pos = 0; pos < current.size() && !redex; ++pos)
      for (std::size_t rule = 0; rule < s.rules.size(); ++rule)
        if (rule != skip && occurs_at(current, s.rules[rule].lhs, pos)) {
          redex = Redex{rule, pos};
          break;
        }
    if (!redex) return current;
    current = apply_rule(s, current, *redex);
  }
  return std::nullopt;
}

// Inter-reduction: re-normalize every rule against the others, dropping
// joinable rules and duplicates, until stable.
bool inter_reduce(RewriteSystem& s, SymbolRanking const& order) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t r = 0; r < s.rules.size(); ++r) {
      auto lhs_nf = normal_form_skipping(s, s.rules[r].lhs, r);
      auto rhs_nf = normal_form_skipping(s, s.rules[r].rhs, SIZE_MAX);
      if (!lhs_nf || !rhs_nf) return false;
      if (*lhs_nf == s.rules[r].lhs && *rhs_nf == s.rules[r].rhs) continue;
      changed = true;
      if (*lhs_nf == *rhs_nf) {
        s.rules.erase(s.rules.begin() + static_cast<std::ptrdiff_t>(r));
      } else if (shortlex_less(*lhs_nf, *rhs_nf, order)) {
        s.rules[r] = RewriteRule{std::move(*rhs_nf), std::move(*lhs_nf)};
      } else {
        s.rules[r] = RewriteRule{std::move(*lhs_nf), std::move(*rhs_nf)};
      }
      break;  // restart the scan from a consistent state
    }
    // Drop exact duplicates, keeping first occurrences.
    for (std::size_t r = 0; r < s.rules.size(); ++r)
      for (std::size_t q = s.rules.size(); q-- > r + 1;)
        if (s.rules[q] == s.rules[r]) {
          s.rules.erase(s.rules.begin() + static_cast<std::ptrdiff_t>(q));
          changed = true;
        }
  }
  return true;
}

}  // namespace

CompletionResult complete_knuth_bendix(Presentation const& p,
                                       SymbolRanking const& order,
                                       CompletionBudget budget) {
  CompletionResult result;

  // Relations with identical sides are vacuous; drop them before orienting.
  Presentation filtered = p;
  std::erase_if(filtered.relations,
                [](Relation const& r) { return r.lhs == r.rhs; });
  try {
    result.system = orient_presentation(filtered, order);
  } catch (OrientError const& e) {
    result.status = CompletionStatus::Failed;
    result.reason = e.what();
    return result;
  }

  std::uint64_t pair_normalizations = 0;
  for (;;) {
    if (!inter_reduce(result.system, order)) {
      result.status = CompletionStatus::BudgetExhausted;
      result.reason = "normalization step cap hit during inter-reduction";
      return result;
    }

    bool added = false;
    for (CriticalPair const& cp : critical_pairs(result.system)) {
      if (pair_normalizations + 2 > budget.max_pair_normalizations) {
        result.status = CompletionStatus::BudgetExhausted;
        result.reason = "pair normalization budget exhausted";
        return result;
      }
      pair_normalizations += 2;
      auto nl = normal_form_skipping(result.system, cp.left, SIZE_MAX);
      auto nr = normal_form_skipping(result.system, cp.right, SIZE_MAX);
      if (!nl || !nr) {
        result.status = CompletionStatus::BudgetExhausted;
        result.reason = "normalization step cap hit on a critical pair";
        return result;
      }
      if (*nl == *nr) continue;
      if (result.system.rules.size() >= budget.max_rules) {
        result.status = CompletionStatus::BudgetExhausted;
        result.reason = "rule budget exhausted";
        return result;
      }
      RewriteRule rule = shortlex_less(*nl, *nr, order)
                             ? RewriteRule{std::move(*nr), std::move(*nl)}
                             : RewriteRule{std::move(*nl), std::move(*nr)};
      result.system.rules.push_back(std::move(rule));
      added = true;
      break;  // restart with the enlarged system
    }
    if (!added) {
      result.status = CompletionStatus::Completed;
      return result;
    }
  }
}

TerminationVerdict decide_termination_on_word(RewriteSystem const& s, Word const& w,
                                              std::size_t max_closure) {
  TerminationVerdict verdict;

  enum class Color { Gray, Black };
  std::unordered_map<Word, Color, WordHash> color;
  std::unordered_map<Word, std::size_t, WordHash> longest;  // longest chain below

  struct Frame {
    Word word;
    std::vector<Redex> redexes;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;

  auto discover = [&](Word const& word) -> bool {
    if (color.size() >= max_closure) return false;
    color.emplace(word, Color::Gray);
    stack.push_back(Frame{word, enumerate_redexes(s, word), 0});
    return true;
  };

  if (!discover(w)) {
    verdict.status = TerminationStatus::Unknown;
    verdict.explored = color.size();
    return verdict;
  }

  while (!stack.empty()) {
    Frame& frame = stack.back();
    if (frame.next == frame.redexes.size()) {
      // All successors done: record the longest chain through this word.
      std::size_t best = 0;
      for (Redex const& r : frame.redexes) {
        Word succ = apply_rule(s, frame.word, r);
        best = std::max(best, 1 + longest.at(succ));
      }
      longest[frame.word] = best;
      color[frame.word] = Color::Black;
      stack.pop_back();
      continue;
    }
    Redex const redex = frame.redexes[frame.next++];
    Word succ = apply_rule(s, frame.word, redex);
    auto it = color.find(succ);
    if (it == color.end()) {
      if (!discover(succ)) {
        verdict.status = TerminationStatus::Unknown;
        verdict.explored = color.size();
        return verdict;
      }
    } else if (it->second == Color::Gray) {
      // Back edge: the gray stack from `succ` to the top plus this redex
      // closes a forward cycle succ ==> succ.
      Derivation witness;
      witness.presentation = as_presentation(s);
      witness.start = succ;
      witness.end = succ;
      std::size_t from = 0;
      while (stack[from].word != succ) ++from;
      for (std::size_t f = from; f + 1 < stack.size(); ++f) {
        Redex const& r = stack[f].redexes[stack[f].next - 1];
        witness.steps.push_back(DerivationStep{r.rule, StepDirection::Forward,
                                               r.position});
      }
      witness.steps.push_back(
          DerivationStep{redex.rule, StepDirection::Forward, redex.position});
      verdict.status = TerminationStatus::NonTerminating;
      verdict.explored = color.size();
      verdict.cycle_witness = std::move(witness);
      return verdict;
    }
  }

  verdict.status = TerminationStatus::Terminates;
  verdict.closure_size = color.size();
  verdict.explored = color.size();
  verdict.max_chain = longest.at(w);
  return verdict;
}

RewriteSystem parse_rewrite_system(std::string_view text) {
  detail::ParsedFile file = detail::parse_presentation_file(text);
  if (file.kind != "rewriting")
    throw ParseError(1, "expected kind \"rewriting\", got \"" + file.kind + "\"");
  RewriteSystem s;
  s.alphabet = std::move(file.alphabet);
  for (std::size_t i = 0; i < file.relations.size(); ++i) {
    if (file.relations[i].lhs.empty())
      throw ParseError(file.relation_lines[i], "rule with an empty left-hand side");
    s.rules.push_back(RewriteRule{std::move(file.relations[i].lhs),
                                  std::move(file.relations[i].rhs)});
  }
  return s;
}

std::string print_rewrite_system(RewriteSystem const& s) {
  std::string out = "kind: rewriting\n";
  out += "gens:";
  for (auto const& t : s.alphabet.tokens()) out += " " + t;
  out += "\n";
  for (RewriteRule const& r : s.rules)
    out += "rel: " + print_word(s.alphabet, r.lhs) + " = " +
           print_word(s.alphabet, r.rhs) + "\n";
  return out;
}

}  // namespace stylus
