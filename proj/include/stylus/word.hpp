// word.hpp -- alphabets, words, and morphisms between free monoids
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace stylus {

using Symbol = std::uint32_t;

// An ordered list of distinct printable tokens.  Words store indices into an
// alphabet, so the declared order also fixes the default shortlex order.
//
// Tokens may not be empty, contain whitespace, or collide with the word
// syntax: "1" denotes the empty word, '^' introduces exponents, '=' separates
// relation sides and '#' starts a comment.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> tokens);

  std::size_t size() const noexcept { return tokens_.size(); }
  std::string const& token(Symbol s) const { return tokens_.at(s); }
  std::vector<std::string> const& tokens() const noexcept { return tokens_; }
  std::optional<Symbol> index_of(std::string_view token) const;
  bool contains(std::string_view token) const { return index_of(token).has_value(); }

  friend bool operator==(Alphabet const& a, Alphabet const& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Symbol> index_;
};

// A word is a finite sequence of symbol indices.  Pure value type; whether an
// index is meaningful depends on the alphabet a caller pairs it with.
struct Word {
  std::vector<Symbol> letters;

  Word() = default;
  explicit Word(std::vector<Symbol> ls) : letters(std::move(ls)) {}

  static Word epsilon() { return Word{}; }

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  Symbol operator[](std::size_t i) const { return letters[i]; }

  auto begin() const noexcept { return letters.begin(); }
  auto end() const noexcept { return letters.end(); }

  void push_back(Symbol s) { letters.push_back(s); }
  void append(Word const& w) {
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
  }

  // Half-open subword [from, to).
  Word subword(std::size_t from, std::size_t to) const;

  friend bool operator==(Word const&, Word const&) = default;
  friend auto operator<=>(Word const&, Word const&) = default;
};

Word concat(Word const& u, Word const& v);
Word concat(Word const& u, Word const& v, Word const& w);

// True iff `factor` occurs in `w` at offset `pos`.
bool occurs_at(Word const& w, Word const& factor, std::size_t pos);

// Number of occurrences of the letter `s` in `w`.
std::size_t count_occurrences(Word const& w, Symbol s);

struct WordHash {
  std::size_t operator()(Word const& w) const noexcept;
};

// A monoid morphism determined by the image of every source letter.
struct Morphism {
  Alphabet source;
  Alphabet target;
  std::vector<Word> images;  // one per source symbol, over `target`
};

// Builds a morphism and validates image count and letter ranges.
Morphism make_morphism(Alphabet source, Alphabet target, std::vector<Word> images);

// Applies `m` letter by letter; throws std::invalid_argument on a letter
// outside the source alphabet.
Word apply_morphism(Morphism const& m, Word const& w);

// Re-interprets `w` from one alphabet into another by token name; throws
// std::invalid_argument if some token of `from` is missing in `to`.
Word embed_by_tokens(Alphabet const& from, Alphabet const& to, Word const& w);

// ---- word text syntax ------------------------------------------------------
//
// A word is whitespace-separated tokens; the single token "1" is the empty
// word and `tok^n` repeats a token n times (accepted on input, never printed).

// Parses `text` as a word over `a`; `line` seeds ParseError locations.
Word parse_word(Alphabet const& a, std::string_view text, std::size_t line = 0);

// Parses a token sequence that has already been split on whitespace.
Word parse_word_tokens(Alphabet const& a, std::vector<std::string> const& tokens,
                       std::size_t line = 0);

// Space-separated tokens; the empty word prints as "1".
std::string print_word(Alphabet const& a, Word const& w);

}  // namespace stylus
