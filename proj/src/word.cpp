#include "stylus/word.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "stylus/error.hpp"

namespace stylus {

namespace {

bool valid_token(std::string const& t) {
  if (t.empty() || t == "1") return false;
  for (char c : t) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (c == '^' || c == '=' || c == '#') return false;
  }
  return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (!valid_token(tokens_[i]))
      throw std::invalid_argument("invalid alphabet token \"" + tokens_[i] + "\"");
    auto [it, inserted] = index_.emplace(tokens_[i], static_cast<Symbol>(i));
    if (!inserted)
      throw std::invalid_argument("duplicate alphabet token \"" + tokens_[i] + "\"");
  }
}

std::optional<Symbol> Alphabet::index_of(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Word Word::subword(std::size_t from, std::size_t to) const {
  if (from > to || to > letters.size())
    throw std::invalid_argument("subword range out of bounds");
  return Word(std::vector<Symbol>(letters.begin() + static_cast<std::ptrdiff_t>(from),
                                  letters.begin() + static_cast<std::ptrdiff_t>(to)));
}

Word concat(Word const& u, Word const& v) {
  Word r = u;
  r.append(v);
  return r;
}

Word concat(Word const& u, Word const& v, Word const& w) {
  Word r = u;
  r.append(v);
  r.append(w);
  return r;
}

bool occurs_at(Word const& w, Word const& factor, std::size_t pos) {
  if (pos > w.size() || factor.size() > w.size() - pos) return false;
  for (std::size_t i = 0; i < factor.size(); ++i)
    if (w[pos + i] != factor[i]) return false;
  return true;
}

std::size_t count_occurrences(Word const& w, Symbol s) {
  std::size_t n = 0;
  for (Symbol x : w.letters)
    if (x == s) ++n;
  return n;
}

std::size_t WordHash::operator()(Word const& w) const noexcept {
  // FNV-1a over the letter stream.
  std::size_t h = 1469598103934665603ull;
  for (Symbol s : w.letters) {
    h ^= s;
    h *= 1099511628211ull;
  }
  return h;
}

Morphism make_morphism(Alphabet source, Alphabet target, std::vector<Word> images) {
  if (images.size() != source.size())
    throw std::invalid_argument("morphism needs one image per source letter");
  for (Word const& im : images)
    for (Symbol s : im.letters)
      if (s >= target.size())
        throw std::invalid_argument("morphism image letter outside target alphabet");
  return Morphism{std::move(source), std::move(target), std::move(images)};
}

Word apply_morphism(Morphism const& m, Word const& w) {
  Word out;
  for (Symbol s : w.letters) {
    if (s >= m.images.size())
      throw std::invalid_argument("letter outside the morphism's source alphabet");
    out.append(m.images[s]);
  }
  return out;
}

Word embed_by_tokens(Alphabet const& from, Alphabet const& to, Word const& w) {
  std::vector<Symbol> map(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto j = to.index_of(from.token(static_cast<Symbol>(i)));
    if (!j)
      throw std::invalid_argument("token \"" + from.token(static_cast<Symbol>(i)) +
                                  "\" has no counterpart in the target alphabet");
    map[i] = *j;
  }
  Word out;
  out.letters.reserve(w.size());
  for (Symbol s : w.letters) {
    if (s >= map.size())
      throw std::invalid_argument("letter outside the source alphabet");
    out.push_back(map[s]);
  }
  return out;
}

namespace {

// One token of word syntax: "1", "tok", or "tok^n".
void append_token(Alphabet const& a, std::string const& tok, Word& out,
                  std::size_t line) {
  std::string base = tok;
  std::uint64_t power = 1;
  if (auto caret = tok.find('^'); caret != std::string::npos) {
    base = tok.substr(0, caret);
    std::string exp = tok.substr(caret + 1);
    auto [p, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), power);
    if (ec != std::errc() || p != exp.data() + exp.size())
      throw ParseError(line, "malformed exponent in \"" + tok + "\"");
  }
  if (base == "1") return;  // the empty word contributes nothing
  auto s = a.index_of(base);
  if (!s) throw ParseError(line, "unknown token \"" + base + "\"");
  for (std::uint64_t i = 0; i < power; ++i) out.push_back(*s);
}

}  // namespace

Word parse_word_tokens(Alphabet const& a, std::vector<std::string> const& tokens,
                       std::size_t line) {
  Word out;
  for (auto const& tok : tokens) append_token(a, tok, out, line);
  return out;
}

Word parse_word(Alphabet const& a, std::string_view text, std::size_t line) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return parse_word_tokens(a, tokens, line);
}

std::string print_word(Alphabet const& a, Word const& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += a.token(w[i]);
  }
  return out;
}

}  // namespace stylus
