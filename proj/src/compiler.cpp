#include "stylus/compiler.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "stylus/error.hpp"

namespace stylus {
namespace {

// Letters of the target alphabet a b c d e.
constexpr Symbol kA = 0;
constexpr Symbol kB = 1;
constexpr Symbol kC = 2;
constexpr Symbol kD = 3;
constexpr Symbol kE = 4;

bool same_presentation(Presentation const& p, Presentation const& q) {
  return p.kind == q.kind && p.alphabet == q.alphabet && p.relations == q.relations;
}

// ac=ca ad=da bc=cb bd=db sit at indices 0..3 in that order.
std::size_t commute_relation(Symbol data, Symbol rec) {
  return 2 * static_cast<std::size_t>(data) + (rec - kC);
}

void require_code_word(Word const& w, char const* who) {
  for (Symbol s : w)
    if (s > kB)
      throw std::invalid_argument(std::string(who) + ": expected a word over the letters a, b");
}

void require_record_letters(Word const& w, char const* who) {
  for (Symbol s : w)
    if (s < kC || s > kD)
      throw std::invalid_argument(std::string(who) + ": expected a word over the letters c, d");
}

StepDirection flip(StepDirection d) {
  return d == StepDirection::Forward ? StepDirection::Reverse : StepDirection::Forward;
}

// Accumulates steps while replaying them, so every emitted step is known to
// apply; a failure here is a bug in a recipe, not in the caller's input.
class StepSim {
 public:
  StepSim(Presentation const& p, Word start)
      : presentation_(&p), current_(std::move(start)) {}

  void apply(std::size_t relation, StepDirection direction, std::size_t position) {
    DerivationStep const step{relation, direction, position};
    auto result = apply_step(*presentation_, current_, step);
    if (!result.ok())
      throw std::logic_error("compiler emitted an inapplicable step (relation " +
                             std::to_string(relation) + " at position " +
                             std::to_string(position) + ")");
    current_ = std::move(*result.word);
    steps_.push_back(step);
  }

  void append(std::vector<DerivationStep> const& steps, std::size_t offset) {
    for (auto const& s : steps) apply(s.relation, s.direction, s.position + offset);
  }

  void append_inverted(Derivation const& d, std::size_t offset) {
    for (auto it = d.steps.rbegin(); it != d.steps.rend(); ++it)
      apply(it->relation, flip(it->direction), it->position + offset);
  }

  Word const& current() const { return current_; }
  std::vector<DerivationStep> take_steps() { return std::move(steps_); }

 private:
  Presentation const* presentation_;
  Word current_;
  std::vector<DerivationStep> steps_;
};

struct LiftIndices {
  std::vector<std::size_t> per_relation;
  std::size_t bare = 0;
};

LiftIndices compute_lift_indices(PipelineBundle const& bundle) {
  auto find_relator = [&](Word const& lhs) -> std::size_t {
    for (std::size_t k = 0; k < bundle.augmented.relations.size(); ++k) {
      auto const& rel = bundle.augmented.relations[k];
      if (rel.rhs.empty() && rel.lhs == lhs) return k;
    }
    throw std::logic_error("pipeline bundle lacks an expected interleaved relator");
  };
  LiftIndices out;
  out.per_relation.reserve(bundle.source.relations.size());
  for (auto const& rel : bundle.source.relations)
    out.per_relation.push_back(find_relator(interleave(rel.lhs, bundle.x)));
  Word bare;
  bare.push_back(bundle.x);
  out.bare = find_relator(bare);
  return out;
}

void finish_stats(CompileStats* stats, Derivation const& source, Derivation const& lifted,
                  Derivation const& encoded, std::vector<DerivationStep> const& steps) {
  if (!stats) return;
  *stats = CompileStats{};
  stats->source_steps = source.steps.size();
  stats->lifted_steps = lifted.steps.size();
  stats->encoded_steps = encoded.steps.size();
  for (auto const& s : steps) {
    if (s.relation < catalog::kStylusCA)
      ++stats->commutation_steps;
    else if (s.relation < catalog::kTrigger)
      ++stats->stylus_steps;
    else if (s.relation == catalog::kTrigger)
      ++stats->trigger_steps;
    else
      ++stats->wipe_steps;
  }
  stats->total_steps = steps.size();
}

// T a => T E with the block T = c d^i sigma(E) occupying positions
// [offset, offset + |E| + i + 1) of the simulator's word and the letter a
// sitting immediately after it.
void run_insertion_core(StepSim& sim, Presentation const& target, std::size_t offset,
                        Word const& E, std::uint32_t i) {
  if (E.size() < i + 2 || E[0] != kA)
    throw std::logic_error("insertion core: malformed encoded relator");
  std::size_t const block_len = E.size() + i + 1;
  std::size_t const travel = E.size() - 1;  // letters between the head and the a

  // Trigger on the block's trailing c d^i c followed by the fresh a.
  sim.apply(catalog::kTrigger, StepDirection::Forward, offset + block_len - i - 2);
  // Drag the a leftwards until it rests behind the leading c d^i c.
  for (std::size_t t = 0; t < travel; ++t) {
    std::size_t const a_at = offset + block_len - t;
    sim.apply(commute_relation(kA, sim.current()[a_at - 1]), StepDirection::Reverse,
              a_at - 1);
  }
  // The stylus walks home across the rest of the block, depositing a copy.
  Derivation const sweep = compile_stylus(target, E.subword(1, E.size()));
  sim.append(sweep.steps, offset + i + 3);
  // Retract the trigger at the block head, then drag the a back out.
  sim.apply(catalog::kTrigger, StepDirection::Reverse, offset);
  for (std::size_t t = 0; t < travel; ++t) {
    std::size_t const a_at = offset + i + 2 + t;
    sim.apply(commute_relation(kA, sim.current()[a_at + 1]), StepDirection::Forward, a_at);
  }
}

// Shared tail of compile_equality / compile_specific: expand every encoded
// step into an insertion (or an inverted one) on the record-prefixed word.
Derivation compile_encoded(CompileContext const& ctx, Derivation const& encoded) {
  Word const R = record_in_target(ctx.bundle);
  Word const start = concat(R, encoded.start);
  StepSim sim(ctx.target.presentation, start);
  Word code = encoded.start;
  for (auto const& s : encoded.steps) {
    auto next = apply_step(ctx.bundle.encoded, code, s);
    if (!next.ok()) throw std::logic_error("compile: encoded derivation failed to replay");
    if (s.direction == StepDirection::Reverse) {
      sim.append(compile_insertion(ctx, code, s.position, s.relation).steps, 0);
    } else {
      sim.append_inverted(compile_insertion(ctx, *next.word, s.position, s.relation), 0);
    }
    code = std::move(*next.word);
  }
  Word end = concat(R, code);
  if (!(sim.current() == end))
    throw std::logic_error("compile: work word drifted from the encoded derivation");
  return Derivation{ctx.target.presentation, start, sim.take_steps(), std::move(end)};
}

}  // namespace

CompileContext make_compile_context(PipelineBundle bundle, catalog::Entry target) {
  if (!target.param_i || *target.param_i != bundle.i)
    throw CompileError("make_compile_context: target parameter does not match the pipeline");
  catalog::Entry const reference = catalog::tseytin(bundle.i);
  auto const& have = target.presentation;
  auto const& want = reference.presentation;
  if (!(have.alphabet == want.alphabet))
    throw CompileError("make_compile_context: target alphabet is not a b c d e");
  if (have.relations.size() < want.relations.size())
    throw CompileError("make_compile_context: target is missing tseytin relations");
  for (std::size_t k = 0; k < want.relations.size(); ++k)
    if (!(have.relations[k] == want.relations[k]))
      throw CompileError("make_compile_context: target relation " + std::to_string(k) +
                         " differs from the tseytin form");
  CompileContext ctx{std::move(bundle), std::move(target), {}, 0};
  LiftIndices idx = compute_lift_indices(ctx.bundle);
  ctx.lift_index = std::move(idx.per_relation);
  ctx.bare_index = idx.bare;
  return ctx;
}

Word record_in_target(PipelineBundle const& bundle) {
  Word out;
  out.letters.reserve(bundle.record.size());
  for (Symbol s : bundle.record) out.push_back(s + kC);
  return out;
}

Word work_word_for(CompileContext const& ctx, Word const& source_word) {
  for (Symbol s : source_word)
    if (s >= ctx.bundle.source.alphabet.size())
      throw std::invalid_argument("work_word_for: word is not over the source alphabet");
  return concat(record_in_target(ctx.bundle),
                encode_word(ctx.bundle.rank_encoder, interleave(source_word, ctx.bundle.x)));
}

Derivation lift_to_augmented(PipelineBundle const& bundle, Derivation const& d) {
  require_valid(d, "lift_to_augmented");
  if (!same_presentation(d.presentation, bundle.source))
    throw CompileError("lift_to_augmented: derivation is not over the bundle's source");
  LiftIndices const idx = compute_lift_indices(bundle);
  Word const start = interleave(d.start, bundle.x);
  StepSim sim(bundle.augmented, start);
  for (auto const& s : d.steps) {
    std::size_t const pos = 2 * s.position;
    if (s.direction == StepDirection::Forward) {
      // Remove the interleaved relator, then mend the seam with a fresh x.
      sim.apply(idx.per_relation[s.relation], StepDirection::Forward, pos);
      sim.apply(idx.bare, StepDirection::Reverse, pos);
    } else {
      // Open the seam, then insert the interleaved relator into it.
      sim.apply(idx.bare, StepDirection::Forward, pos);
      sim.apply(idx.per_relation[s.relation], StepDirection::Reverse, pos);
    }
  }
  Word end = interleave(d.end, bundle.x);
  if (!(sim.current() == end))
    throw std::logic_error("lift_to_augmented: lifted derivation drifted");
  return Derivation{bundle.augmented, start, sim.take_steps(), std::move(end)};
}

Derivation encode_derivation(PipelineBundle const& bundle, Derivation const& d) {
  require_valid(d, "encode_derivation");
  if (!same_presentation(d.presentation, bundle.augmented))
    throw CompileError("encode_derivation: derivation is not over the augmented monoid");
  Word const start = encode_word(bundle.rank_encoder, d.start);
  StepSim sim(bundle.encoded, start);
  Word current = d.start;
  for (auto const& s : d.steps) {
    std::size_t encoded_position = s.position;
    for (std::size_t l = 0; l < s.position; ++l)
      encoded_position += bundle.rank_encoder.rank(current[l]);
    sim.apply(s.relation, s.direction, encoded_position);
    auto next = apply_step(bundle.augmented, current, s);
    if (!next.ok()) throw std::logic_error("encode_derivation: replay failed");
    current = std::move(*next.word);
  }
  Word end = encode_word(bundle.rank_encoder, d.end);
  if (!(sim.current() == end))
    throw std::logic_error("encode_derivation: encoded derivation drifted");
  return Derivation{bundle.encoded, start, sim.take_steps(), std::move(end)};
}

Derivation compile_commutation(Presentation const& target, Word const& data,
                               Word const& rec) {
  require_code_word(data, "compile_commutation");
  require_record_letters(rec, "compile_commutation");
  Word const start = concat(data, rec);
  StepSim sim(target, start);
  for (std::size_t k = data.size(); k-- > 0;) {
    for (std::size_t t = 0; t < rec.size(); ++t) {
      std::size_t const pos = k + t;
      sim.apply(commute_relation(sim.current()[pos], sim.current()[pos + 1]),
                StepDirection::Forward, pos);
    }
  }
  Word end = concat(rec, data);
  if (!(sim.current() == end))
    throw std::logic_error("compile_commutation: unexpected end word");
  return Derivation{target, start, sim.take_steps(), std::move(end)};
}

Derivation compile_stylus(Presentation const& target, Word const& X) {
  require_code_word(X, "compile_stylus");
  Word start;
  start.letters.reserve(X.size() + 1);
  for (Symbol s : X) start.push_back(s + kC);  // sigma(X)
  start.push_back(kE);
  StepSim sim(target, start);
  std::size_t const n = X.size();
  for (std::size_t j = n; j >= 1; --j) {
    Symbol const xi = sim.current()[j - 1];
    sim.apply(xi == kC ? catalog::kStylusCA : catalog::kStylusDB, StepDirection::Reverse,
              j - 1);
    // Slide the deposited letter right, past the record letters after it.
    for (std::size_t t = 0; t + j < n; ++t) {
      std::size_t const pos = j + 1 + t;
      sim.apply(commute_relation(sim.current()[pos], sim.current()[pos + 1]),
                StepDirection::Forward, pos);
    }
  }
  Word end;
  end.letters.reserve(2 * X.size() + 1);
  end.push_back(kE);
  for (Symbol s : X) end.push_back(s + kC);
  end.append(X);
  if (!(sim.current() == end))
    throw std::logic_error("compile_stylus: unexpected end word");
  return Derivation{target, start, sim.take_steps(), std::move(end)};
}

Derivation compile_insertion_core(CompileContext const& ctx, std::size_t relator) {
  auto const& bundle = ctx.bundle;
  if (bundle.record_mode != RecordMode::CompilerSufficient)
    throw UnsupportedRecordModeError(
        "compile_insertion_core: the record lacks padded blocks; rebuild the pipeline "
        "in compiler-sufficient mode");
  if (relator >= bundle.block_spans.size())
    throw std::invalid_argument("compile_insertion_core: relator index out of range");
  Word const R = record_in_target(bundle);
  BlockSpan const span = bundle.block_spans[relator];
  Word const T = R.subword(span.offset, span.offset + span.length);
  Word const& E = bundle.encoded.relations[relator].lhs;

  Word start = T;
  start.push_back(kA);
  StepSim sim(ctx.target.presentation, start);
  run_insertion_core(sim, ctx.target.presentation, 0, E, bundle.i);
  Word end = concat(T, E);
  if (!(sim.current() == end))
    throw std::logic_error("compile_insertion_core: unexpected end word");
  return Derivation{ctx.target.presentation, std::move(start), sim.take_steps(),
                    std::move(end)};
}

Derivation compile_insertion(CompileContext const& ctx, Word const& code,
                             std::size_t position, std::size_t relator) {
  auto const& bundle = ctx.bundle;
  if (bundle.record_mode != RecordMode::CompilerSufficient)
    throw UnsupportedRecordModeError(
        "compile_insertion: the paper-example record lacks the padded blocks the drag "
        "phases rely on; rebuild the pipeline in compiler-sufficient mode");
  if (relator >= bundle.block_spans.size())
    throw std::invalid_argument("compile_insertion: relator index out of range");
  require_code_word(code, "compile_insertion");
  if (position >= code.size() || code[position] != kA)
    throw std::invalid_argument("compile_insertion: insertion point must hold the letter a");

  Presentation const& target = ctx.target.presentation;
  Word const R = record_in_target(bundle);
  BlockSpan const span = bundle.block_spans[relator];
  Word const T = R.subword(span.offset, span.offset + span.length);
  Word const after_block = R.subword(span.offset + span.length, R.size());
  Word const prefix = code.subword(0, position);
  Word const suffix = code.subword(position + 1, code.size());
  Word const& E = bundle.encoded.relations[relator].lhs;

  Word prefix_a = prefix;
  prefix_a.push_back(kA);
  Derivation const drag_boundary = compile_commutation(target, prefix_a, after_block);
  Derivation const drag_block = compile_commutation(target, prefix, T);

  Word const start = concat(R, code);
  StepSim sim(target, start);
  // Pull the record tail and then the block itself across the code prefix,
  // so the block ends up immediately left of the insertion point.
  sim.append_inverted(drag_boundary, span.offset + span.length);
  sim.append_inverted(drag_block, span.offset);
  run_insertion_core(sim, target, span.offset + prefix.size(), E, bundle.i);
  // Undo the drags, restoring the record in front.
  sim.append(drag_block.steps, span.offset);
  sim.append(compile_commutation(target, concat(prefix, E), after_block).steps,
             span.offset + span.length);

  Word end = concat(R, concat(prefix, E, suffix));
  if (!(sim.current() == end))
    throw std::logic_error("compile_insertion: unexpected end word");
  return Derivation{target, start, sim.take_steps(), std::move(end)};
}

Derivation compile_equality(CompileContext const& ctx, Derivation const& d,
                            CompileStats* stats) {
  Derivation const lifted = lift_to_augmented(ctx.bundle, d);
  Derivation const encoded = encode_derivation(ctx.bundle, lifted);
  Derivation out = compile_encoded(ctx, encoded);
  finish_stats(stats, d, lifted, encoded, out.steps);
  return out;
}

Derivation compile_wipe(CompileContext const& ctx, Word const& trailing) {
  auto const& target = ctx.target;
  if (target.presentation.relations.size() <= catalog::kWipeD || !target.specific_word)
    throw CompileError("compile_wipe: target has no wipe relations");
  if (!(trailing == *target.specific_word))
    throw CompileError("compile_wipe: trailing word is not the target's wipe word");
  Word const R = record_in_target(ctx.bundle);
  Word const start = concat(R, trailing);
  StepSim sim(ctx.target.presentation, start);
  for (std::size_t t = R.size(); t-- > 0;)
    sim.apply(R[t] == kC ? catalog::kWipeC : catalog::kWipeD, StepDirection::Forward, t);
  if (!(sim.current() == trailing))
    throw std::logic_error("compile_wipe: unexpected end word");
  return Derivation{ctx.target.presentation, start, sim.take_steps(), trailing};
}

Derivation compile_specific(CompileContext const& ctx, Derivation const& d,
                            CompileStats* stats) {
  auto const& bundle = ctx.bundle;
  auto const& target = ctx.target;
  if (target.presentation.relations.size() <= catalog::kWipeD || !target.specific_word)
    throw CompileError("compile_specific: target lacks the wipe relations");
  require_valid(d, "compile_specific");
  if (!d.end.empty())
    throw CompileError("compile_specific: the witness must end at the empty word");

  // The bundle's source is the witness's monoid plus one free generator y.
  auto const& big = bundle.source;
  auto const& small = d.presentation;
  bool matches = small.kind == PresentationKind::Monoid &&
                 small.relations == big.relations &&
                 small.alphabet.size() + 1 == big.alphabet.size();
  for (Symbol s = 0; matches && s < small.alphabet.size(); ++s)
    matches = small.alphabet.token(s) == big.alphabet.token(s);
  if (!matches)
    throw CompileError(
        "compile_specific: witness presentation does not match the bundle source minus "
        "its free generator");
  Symbol const y = static_cast<Symbol>(big.alphabet.size() - 1);

  Word yy;
  yy.push_back(y);
  yy.push_back(y);
  if (!(encode_word(bundle.rank_encoder, yy) == *target.specific_word))
    throw CompileError("compile_specific: target wipe word disagrees with the bundle ranks");

  Derivation const retagged{big, d.start, d.steps, d.end};
  Word frame;
  frame.push_back(y);
  Derivation const framed = embed_in_context(retagged, frame, frame);
  Derivation lifted = lift_to_augmented(bundle, framed);
  {
    // x y x y x => y y: delete the three interleaving x's.
    StepSim fix(bundle.augmented, lifted.end);
    for (std::size_t pos = 0; pos < 3; ++pos)
      fix.apply(ctx.bare_index, StepDirection::Forward, pos);
    if (!(fix.current() == yy))
      throw std::logic_error("compile_specific: frame cleanup drifted");
    auto extra = fix.take_steps();
    lifted.steps.insert(lifted.steps.end(), extra.begin(), extra.end());
    lifted.end = yy;
  }
  Derivation const encoded = encode_derivation(bundle, lifted);
  Derivation out = compile_encoded(ctx, encoded);
  Derivation const wipe = compile_wipe(ctx, *target.specific_word);
  if (!(out.end == wipe.start))
    throw std::logic_error("compile_specific: wipe start does not meet the work word");
  out.steps.insert(out.steps.end(), wipe.steps.begin(), wipe.steps.end());
  out.end = wipe.end;
  finish_stats(stats, d, lifted, encoded, out.steps);
  return out;
}

}  // namespace stylus
