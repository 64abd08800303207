#include "stylus/codec.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "stylus/error.hpp"

namespace stylus {

Alphabet const& code_alphabet() {
  static Alphabet const a{std::vector<std::string>{"a", "b"}};
  return a;
}

RankEncoder make_rank_encoder(Alphabet source, std::vector<std::uint32_t> ranks) {
  if (ranks.size() != source.size())
    throw std::invalid_argument("rank encoder needs one rank per source letter");
  std::unordered_set<std::uint32_t> seen;
  for (auto r : ranks)
    if (!seen.insert(r).second)
      throw std::invalid_argument("rank assignment must be injective");
  return RankEncoder{std::move(source), std::move(ranks)};
}

Word encode_word(RankEncoder const& enc, Word const& w) {
  Word out;
  for (Symbol s : w.letters) {
    if (s >= enc.ranks.size())
      throw std::invalid_argument("letter outside the encoder's source alphabet");
    out.push_back(kCodeA);
    for (std::uint32_t i = 0; i < enc.ranks[s]; ++i) out.push_back(kCodeB);
  }
  out.push_back(kCodeA);
  return out;
}

Word decode_word(RankEncoder const& enc, Word const& w) {
  std::unordered_map<std::uint32_t, Symbol> by_rank;
  for (std::size_t s = 0; s < enc.ranks.size(); ++s)
    by_rank.emplace(enc.ranks[s], static_cast<Symbol>(s));

  std::vector<std::uint32_t> blocks;
  try {
    blocks = factorize_over_rank_code(w);
  } catch (FactorizationError const& e) {
    throw DecodeError(e.what());
  }
  Word out;
  for (std::uint32_t len : blocks) {
    auto it = by_rank.find(len);
    if (it == by_rank.end())
      throw DecodeError("b-run of length " + std::to_string(len) +
                        " is not the rank of any letter");
    out.push_back(it->second);
  }
  return out;
}

std::vector<std::uint32_t> factorize_over_rank_code(Word const& w) {
  if (w.empty()) throw FactorizationError("cannot factorize the empty word");
  for (Symbol s : w.letters)
    if (s != kCodeA && s != kCodeB)
      throw FactorizationError("word is not over the code alphabet {a, b}");
  if (w[0] != kCodeA)
    throw FactorizationError("word starts with b, not a code image");
  if (w[w.size() - 1] != kCodeA)
    throw FactorizationError("word does not end with the terminal a");

  // Greedy scan of a b^{i1} a b^{i2} ... a b^{in} a, minus the final a.
  std::vector<std::uint32_t> blocks;
  std::size_t pos = 0;
  std::size_t const end = w.size() - 1;
  while (pos < end) {
    // w[pos] == a here on every iteration.
    std::size_t run = 0;
    ++pos;
    while (pos < end && w[pos] == kCodeB) {
      ++run;
      ++pos;
    }
    blocks.push_back(static_cast<std::uint32_t>(run));
  }
  return blocks;
}

}  // namespace stylus
