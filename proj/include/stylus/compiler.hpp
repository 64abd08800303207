// compiler.hpp -- turns abstract equality witnesses into step-by-step
// derivations inside the fixed seven-relation (or nine-relation) semigroup
#pragma once

#include <cstddef>
#include <vector>

#include "stylus/catalog.hpp"
#include "stylus/derivation.hpp"
#include "stylus/pipeline.hpp"

namespace stylus {

// Step counts of a compiled derivation, bucketed by the relation group that
// produced each step, next to the sizes of the intermediate derivations.
struct CompileStats {
  std::size_t source_steps = 0;       // input witness
  std::size_t lifted_steps = 0;       // after lifting into the augmented monoid
  std::size_t encoded_steps = 0;      // after encoding over {a,b}
  std::size_t commutation_steps = 0;  // ac=ca ad=da bc=cb bd=db
  std::size_t stylus_steps = 0;       // eca=ce edb=de
  std::size_t trigger_steps = 0;      // c d^i c a = c d^i c a e
  std::size_t wipe_steps = 0;         // c W = W and d W = W
  std::size_t total_steps = 0;        // steps in the compiled derivation
};

struct CompileContext {
  PipelineBundle bundle;
  catalog::Entry target;
  // Augmented relator index for each source relation, and for the bare
  // fresh-letter relator.
  std::vector<std::size_t> lift_index;
  std::size_t bare_index = 0;
};

// Checks that the target presentation matches the bundle: same parameter i
// and the seven-relation prefix in its reference form.
CompileContext make_compile_context(PipelineBundle bundle, catalog::Entry target);

// The record word rendered in the target alphabet (over the letters c, d).
Word record_in_target(PipelineBundle const& bundle);

// The working word the compiled derivations operate on: the record followed
// by the encoding of the interleaved source word.
Word work_word_for(CompileContext const& ctx, Word const& source_word);

// Source derivation -> derivation over the augmented monoid: every source
// step becomes an interleaved-relator step plus a bare-letter repair step.
Derivation lift_to_augmented(PipelineBundle const& bundle, Derivation const& d);

// Augmented derivation -> derivation over the two-letter encoded monoid;
// step positions are re-expressed through the encoding, indices are kept.
Derivation encode_derivation(PipelineBundle const& bundle, Derivation const& d);

// data over {a,b}, rec over {c,d}: data rec => rec data by adjacent swaps,
// exactly |data| * |rec| forward commutation steps.
Derivation compile_commutation(Presentation const& target, Word const& data,
                               Word const& rec);

// X over {a,b}: sigma(X) e => e sigma(X) X; the stylus walks left across the
// record copy and deposits the matching data letters, |X|(|X|+1)/2 steps.
Derivation compile_stylus(Presentation const& target, Word const& X);

// The heart of the insertion: for the k-th record block T = c d^i sigma(E_k)
// it derives T a => T E_k -- trigger, drag the fresh a to the block head,
// stylus sweep, retract the trigger, drag the a back out.  compile_insertion
// runs this core between its drag phases; exposed for direct inspection.
Derivation compile_insertion_core(CompileContext const& ctx, std::size_t relator);

// One encoded insertion: with code[position] == a, derives
//   record . code  =>  record . code[0..position) E_k code[position+1..)
// by dragging the k-th record block next to the insertion point, running the
// trigger/stylus loop there, and dragging it back.  Requires a bundle built
// in CompilerSufficient mode; throws UnsupportedRecordModeError otherwise.
Derivation compile_insertion(CompileContext const& ctx, Word const& code,
                             std::size_t position, std::size_t relator);

// Full pipeline for a witness u => v over the source monoid: lift, encode,
// and expand every encoded step into insertions/deletions on the work word.
Derivation compile_equality(CompileContext const& ctx, Derivation const& d,
                            CompileStats* stats = nullptr);

// record . trailing => trailing, one wipe step per record letter; trailing
// must be the target's wipe word.
Derivation compile_wipe(CompileContext const& ctx, Word const& trailing);

// For a witness w => 1 over the original monoid M and a context built from
// M * <y>: derives work(y w y) => a b^j a b^j a in the nine-relation target,
// finishing with the wipe of the whole record.
Derivation compile_specific(CompileContext const& ctx, Derivation const& d,
                            CompileStats* stats = nullptr);

}  // namespace stylus
