#include "stylus/pipeline.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "stylus/error.hpp"

namespace stylus {
namespace {

Word append_letter(Word w, Symbol s) {
  w.push_back(s);
  return w;
}

// Drops relations whose sides coincide and exact duplicates, keeping the
// first occurrence of each.
std::vector<Relation> dedupe_relations(std::vector<Relation> relations,
                                       bool drop_trivial) {
  std::vector<Relation> out;
  for (auto& rel : relations) {
    if (drop_trivial && rel.lhs == rel.rhs) continue;
    bool seen = false;
    for (auto const& kept : out) {
      if (kept == rel) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(std::move(rel));
  }
  return out;
}

// Assigns 1, 2, ... to all letters without a pinned rank, in alphabet
// order, skipping values taken by the pinned ones.
std::vector<std::uint32_t> assign_ranks(
    std::size_t letter_count,
    std::vector<std::pair<Symbol, std::uint32_t>> const& pinned) {
  std::vector<std::uint32_t> ranks(letter_count, 0);
  std::vector<bool> is_pinned(letter_count, false);
  std::set<std::uint32_t> used;
  for (auto const& [symbol, rank] : pinned) {
    ranks[symbol] = rank;
    is_pinned[symbol] = true;
    used.insert(rank);
  }
  std::uint32_t next = 1;
  for (Symbol s = 0; s < letter_count; ++s) {
    if (is_pinned[s]) continue;
    while (used.count(next) != 0) ++next;
    ranks[s] = next;
    used.insert(next);
  }
  return ranks;
}

struct RecordBuild {
  Word base;  // over the augmented alphabet
  // For every augmented relation index: position/length in `base` of the
  // factor x W_k (x x for the bare relator).  CompilerSufficient only.
  std::vector<BlockSpan> base_spans;
};

RecordBuild build_record_base(Presentation const& augmented, Symbol x,
                              RecordMode mode) {
  Word const bare = append_letter(Word{}, x);
  RecordBuild out;
  if (mode == RecordMode::PaperExample) {
    // Concatenate the interleaved relators, sharing the boundary x between
    // consecutive ones; with no proper relators this degenerates to x.
    out.base.push_back(x);
    for (auto const& rel : augmented.relations) {
      if (rel.lhs == bare) continue;
      out.base.append(rel.lhs.subword(1, rel.lhs.size()));
    }
    return out;
  }
  // CompilerSufficient: x x W_1 x x W_2 x x ... so every relator (the bare
  // one included) has its x W_k factor flanked by a further x on each side.
  out.base.push_back(x);
  out.base.push_back(x);
  out.base_spans.resize(augmented.relations.size());
  std::size_t cursor = 2;
  for (std::size_t k = 0; k < augmented.relations.size(); ++k) {
    auto const& lhs = augmented.relations[k].lhs;
    if (lhs == bare) {
      out.base_spans[k] = BlockSpan{0, 2};
      continue;
    }
    out.base_spans[k] = BlockSpan{cursor - 1, lhs.size() + 1};
    out.base.append(lhs);
    out.base.push_back(x);
    out.base.push_back(x);
    cursor += lhs.size() + 2;
  }
  if (out.base.size() == 2) out.base.push_back(x);  // keep x x inside x x x
  return out;
}

void require_special_monoid(Presentation const& p, char const* who) {
  validate_presentation(p);
  if (p.kind != PresentationKind::Monoid)
    throw std::invalid_argument(std::string(who) + ": requires a monoid presentation");
  if (!classify(p).is_special)
    throw std::invalid_argument(std::string(who) +
                                ": requires a special presentation (every relation W = 1)");
}

PipelineBundle finish_pipeline(Presentation source, std::uint32_t i,
                               RecordMode mode, std::string const& fresh_token,
                               std::vector<std::pair<std::string, std::uint32_t>> const&
                                   pinned_tokens) {
  PipelineBundle bundle;
  bundle.source = std::move(source);
  bundle.augmented = augment_special(bundle.source, fresh_token);
  bundle.record_mode = mode;
  bundle.x = static_cast<Symbol>(bundle.augmented.alphabet.size() - 1);
  bundle.i = i;

  std::vector<std::pair<Symbol, std::uint32_t>> pinned;
  pinned.emplace_back(bundle.x, i);
  for (auto const& [token, rank] : pinned_tokens) {
    auto symbol = bundle.augmented.alphabet.index_of(token);
    if (!symbol)
      throw std::invalid_argument("build_pipeline: pinned token not in alphabet: " + token);
    pinned.emplace_back(*symbol, rank);
  }
  bundle.rank_encoder = make_rank_encoder(
      bundle.augmented.alphabet,
      assign_ranks(bundle.augmented.alphabet.size(), pinned));

  bundle.encoded = encode_presentation(bundle.augmented, bundle.rank_encoder);
  if (bundle.encoded.relations.size() != bundle.augmented.relations.size())
    throw std::logic_error(
        "build_pipeline: encoded relations fell out of step with the augmented relators");

  auto build = build_record_base(bundle.augmented, bundle.x, mode);
  Word const encoded_base = encode_word(bundle.rank_encoder, build.base);
  bundle.record = swap_to_record(encoded_base);

  if (mode == RecordMode::CompilerSufficient) {
    // Prefix rank sums turn base positions into encoded ones: the letter at
    // base position m starts at m + sum of ranks before it, and a factor of
    // length L spanning ranks r keeps its closing a, hence L + r + 1 letters.
    std::vector<std::size_t> prefix(build.base.size() + 1, 0);
    for (std::size_t m = 0; m < build.base.size(); ++m)
      prefix[m + 1] = prefix[m] + bundle.rank_encoder.rank(build.base[m]);
    bundle.block_spans.reserve(build.base_spans.size());
    for (auto const& span : build.base_spans) {
      std::size_t const begin = span.offset + prefix[span.offset];
      std::size_t const end = span.offset + span.length + prefix[span.offset + span.length];
      bundle.block_spans.push_back(BlockSpan{begin, end - begin + 1});
    }
  }
  return bundle;
}

}  // namespace

Alphabet const& record_alphabet() {
  static Alphabet const alphabet({"c", "d"});
  return alphabet;
}

namespace {

Word swap_letters(Word const& w, char const* who) {
  Word out;
  out.letters.reserve(w.size());
  for (Symbol s : w) {
    if (s > 1) throw std::invalid_argument(std::string(who) + ": word is not over two letters");
    out.push_back(s);
  }
  return out;
}

}  // namespace

Word swap_to_record(Word const& code_word) {
  return swap_letters(code_word, "swap_to_record");
}

Word swap_to_code(Word const& record_word) {
  return swap_letters(record_word, "swap_to_code");
}

Word interleave(Word const& w, Symbol x) {
  Word out;
  out.letters.reserve(2 * w.size() + 1);
  out.push_back(x);
  for (Symbol s : w) {
    out.push_back(s);
    out.push_back(x);
  }
  return out;
}

Presentation augment_special(Presentation const& p, std::string const& fresh_token) {
  require_special_monoid(p, "augment_special");
  if (p.alphabet.index_of(fresh_token))
    throw std::invalid_argument("augment_special: token already in use: " + fresh_token);

  std::vector<std::string> tokens(p.alphabet.tokens().begin(), p.alphabet.tokens().end());
  tokens.push_back(fresh_token);

  Presentation out;
  out.alphabet = Alphabet(tokens);
  out.kind = PresentationKind::Monoid;
  Symbol const x = static_cast<Symbol>(p.alphabet.size());
  for (auto const& rel : p.relations)
    out.relations.push_back(Relation{interleave(rel.lhs, x), Word{}});
  out.relations.push_back(Relation{append_letter(Word{}, x), Word{}});
  out.relations = dedupe_relations(std::move(out.relations), /*drop_trivial=*/false);
  return out;
}

Presentation encode_presentation(Presentation const& p, RankEncoder const& enc) {
  require_special_monoid(p, "encode_presentation");
  if (!(enc.source == p.alphabet))
    throw std::invalid_argument("encode_presentation: encoder is for a different alphabet");

  Presentation out;
  out.alphabet = code_alphabet();
  out.kind = PresentationKind::Monoid;
  Word const letter_a = encode_word(enc, Word{});
  for (auto const& rel : p.relations)
    out.relations.push_back(Relation{encode_word(enc, rel.lhs), letter_a});
  out.relations = dedupe_relations(std::move(out.relations), /*drop_trivial=*/true);
  return out;
}

Word build_record_word(Presentation const& augmented, RankEncoder const& enc,
                       Symbol x, RecordMode mode) {
  require_special_monoid(augmented, "build_record_word");
  if (x >= augmented.alphabet.size())
    throw std::invalid_argument("build_record_word: letter out of range");
  auto build = build_record_base(augmented, x, mode);
  return swap_to_record(encode_word(enc, build.base));
}

PipelineBundle build_pipeline(Presentation const& source, std::uint32_t i,
                              RecordMode mode, std::string const& fresh_token) {
  return finish_pipeline(source, i, mode, fresh_token, {});
}

PipelineBundle build_specific_pipeline(Presentation const& source, std::uint32_t i,
                                       std::uint32_t j, RecordMode mode,
                                       std::string const& x_token,
                                       std::string const& y_token) {
  if (i == j)
    throw std::invalid_argument("build_specific_pipeline: the two ranks must differ");
  Presentation freed = free_product_with_free_generator(source, y_token);
  return finish_pipeline(std::move(freed), i, mode, x_token, {{y_token, j}});
}

Presentation free_product_with_free_generator(Presentation const& p,
                                              std::string const& fresh_token) {
  validate_presentation(p);
  if (p.alphabet.index_of(fresh_token))
    throw std::invalid_argument("free_product_with_free_generator: token already in use: " +
                                fresh_token);
  std::vector<std::string> tokens(p.alphabet.tokens().begin(), p.alphabet.tokens().end());
  tokens.push_back(fresh_token);
  Presentation out = p;
  out.alphabet = Alphabet(tokens);
  out.name.clear();
  return out;
}

std::pair<Presentation, Morphism> hall_embed(Presentation const& p) {
  validate_presentation(p);
  Alphabet const target({"x", "y"});
  std::vector<Word> images;
  images.reserve(p.alphabet.size());
  for (Symbol s = 0; s < p.alphabet.size(); ++s) {
    Word image;
    image.push_back(0);  // x
    for (Symbol k = 0; k <= s; ++k) image.push_back(1);  // y^(s+1)
    images.push_back(std::move(image));
  }
  Morphism m = make_morphism(p.alphabet, target, images);
  Presentation q = reencode_presentation(p, m, /*dedupe=*/false);
  return {std::move(q), std::move(m)};
}

Presentation reencode_presentation(Presentation const& p, Morphism const& m,
                                   bool dedupe) {
  validate_presentation(p);
  if (!(m.source == p.alphabet))
    throw std::invalid_argument("reencode_presentation: morphism is for a different alphabet");
  Presentation out;
  out.alphabet = m.target;
  out.kind = p.kind;
  for (auto const& rel : p.relations)
    out.relations.push_back(Relation{apply_morphism(m, rel.lhs), apply_morphism(m, rel.rhs)});
  if (dedupe) out.relations = dedupe_relations(std::move(out.relations), /*drop_trivial=*/true);
  validate_presentation(out);
  return out;
}

Morphism makanin_encoding() {
  Alphabet const source({"a", "b", "c", "d", "e"});
  Alphabet const target({"x", "y", "z"});
  auto word_of = [](std::initializer_list<Symbol> letters) {
    Word w;
    for (Symbol s : letters) w.push_back(s);
    return w;
  };
  Symbol const x = 0, y = 1, z = 2;
  std::vector<Word> images = {
      word_of({z, z}),     // a
      word_of({y, z, z}),  // b
      word_of({y, y}),     // c
      word_of({z, y, y}),  // d
      word_of({x}),        // e
  };
  return make_morphism(source, target, images);
}

}  // namespace stylus
