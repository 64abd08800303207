// pipeline.hpp -- from a special monoid to two-generator form plus a record word
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stylus/codec.hpp"
#include "stylus/presentation.hpp"

namespace stylus {

// The y-letter alphabet {c, d} that record words are written over.
Alphabet const& record_alphabet();

// Letter swap between the code alphabet {a,b} and the record alphabet {c,d}.
Word swap_to_record(Word const& code_word);
Word swap_to_code(Word const& record_word);

// x w1 x w2 ... wn x: the relator shape with the fresh letter at every
// boundary; the empty word interleaves to the single letter x.
Word interleave(Word const& w, Symbol x);

// M -> M1: adjoins a fresh generator x, replaces every relator R = 1 by its
// interleaved form I(R) = 1 and adds the relator x = 1.  Exact duplicate
// relators are dropped, keeping first occurrences.  Requires a special
// monoid and a fresh token.
Presentation augment_special(Presentation const& p, std::string const& fresh_token);

// M1 -> M1o: every relator W becomes the relation encode(W) = a over {a,b}.
// Relations that degenerate to a = a and exact duplicates are dropped.
Presentation encode_presentation(Presentation const& p, RankEncoder const& enc);

enum class RecordMode { PaperExample, CompilerSufficient };

// Offset/length of a factor inside the record word.
struct BlockSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
};

// Builds the record word S over {c,d}.  PaperExample concatenates the
// interleaved relators sharing boundary x's; CompilerSufficient pads every
// relator with x x on both sides so that for each augmented relator W the
// factor swap(encode(x W x)) occurs in S.
Word build_record_word(Presentation const& augmented, RankEncoder const& enc,
                       Symbol x, RecordMode mode);

struct PipelineBundle {
  Presentation source;     // the special monoid M (or M' for specific runs)
  Presentation augmented;  // M1
  Presentation encoded;    // M1o, relations aligned with augmented relators
  RankEncoder rank_encoder;
  Word record;             // over record_alphabet()
  RecordMode record_mode = RecordMode::CompilerSufficient;
  Symbol x = 0;            // the fresh letter inside augmented.alphabet
  std::uint32_t i = 0;     // rank of x
  // Per augmented relator k: the factor swap(encode(x W_k)) inside the
  // record, the block the insertion recipe drags next to its target letter.
  // Only populated in CompilerSufficient mode.
  std::vector<BlockSpan> block_spans;
};

// Rank policy: x gets rank i, the remaining source letters get 1, 2, ...
// in alphabet order, skipping i.
PipelineBundle build_pipeline(Presentation const& source, std::uint32_t i,
                              RecordMode mode, std::string const& fresh_token = "x");

// Pipeline over M' = M * <y> with rank(y) = j; requires i != j.  Used to
// reduce the word problem for single words to the specific word a b^j a b^j a.
PipelineBundle build_specific_pipeline(Presentation const& source, std::uint32_t i,
                                       std::uint32_t j, RecordMode mode,
                                       std::string const& x_token = "x",
                                       std::string const& y_token = "y");

// Adjoins a free generator, leaving the relations alone.
Presentation free_product_with_free_generator(Presentation const& p,
                                              std::string const& fresh_token);

// Embeds any finitely presented semigroup/monoid into a two-generator one
// via the i-th generator -> x y^i; relation count is preserved.
std::pair<Presentation, Morphism> hall_embed(Presentation const& p);

// Applies a letter morphism to every relation; with dedupe, relations that
// become trivial (equal sides) or duplicate earlier ones are dropped.
Presentation reencode_presentation(Presentation const& p, Morphism const& m,
                                   bool dedupe);

// The classical generator substitution a->zz b->yzz c->yy d->zyy e->x from
// the five-letter tseytin alphabet into three letters, for experimentation.
Morphism makanin_encoding();

}  // namespace stylus
