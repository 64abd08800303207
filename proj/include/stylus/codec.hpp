// codec.hpp -- the rank code over {a, b} freely generating a submonoid
#pragma once

#include <cstdint>
#include <vector>

#include "stylus/word.hpp"

namespace stylus {

// The two-letter code alphabet {a, b}.
Alphabet const& code_alphabet();
inline constexpr Symbol kCodeA = 0;
inline constexpr Symbol kCodeB = 1;

// Assigns every source letter an injective natural rank and encodes words
// over the code {a b^i : i >= 0}: a word w1..wn maps to
//
//     a b^rank(w1) a b^rank(w2) ... a b^rank(wn) a
//
// and the empty word maps to the single letter a.
struct RankEncoder {
  Alphabet source;
  std::vector<std::uint32_t> ranks;  // one per source symbol

  std::uint32_t rank(Symbol s) const { return ranks.at(s); }
};

// Validates image count and injectivity of the ranks.
RankEncoder make_rank_encoder(Alphabet source, std::vector<std::uint32_t> ranks);

Word encode_word(RankEncoder const& enc, Word const& w);

// Unique preimage of `w`; throws DecodeError when `w` is not a code image
// (wrong frame letters or a b-run length outside the rank range).
Word decode_word(RankEncoder const& enc, Word const& w);

// Greedy factorization of a word over {a,b} into blocks a b^i: drops the
// final letter a and returns the block lengths [i1, ..., in].  Throws
// FactorizationError when `w` is empty or not of the form (a b^*)* a.
std::vector<std::uint32_t> factorize_over_rank_code(Word const& w);

}  // namespace stylus
