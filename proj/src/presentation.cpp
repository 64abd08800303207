#include "stylus/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "stylus/error.hpp"

namespace stylus {

void validate_presentation(Presentation const& p) {
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    Relation const& r = p.relations[i];
    for (Word const* side : {&r.lhs, &r.rhs}) {
      for (Symbol s : side->letters)
        if (s >= p.alphabet.size())
          throw std::invalid_argument("relation " + std::to_string(i) +
                                      " uses a letter outside the alphabet");
      if (p.kind == PresentationKind::Semigroup && side->empty())
        throw std::invalid_argument("relation " + std::to_string(i) +
                                    " mentions the empty word in a semigroup");
    }
  }
}

ClassificationReport classify(Presentation const& p) {
  ClassificationReport r;
  r.relation_count = p.relations.size();
  r.is_special = true;
  r.is_positive = true;  // no formal-inverse letters exist in this setting
  for (Relation const& rel : p.relations) {
    r.letter_occurrence_count += rel.lhs.size() + rel.rhs.size();
    if (!rel.rhs.empty()) r.is_special = false;
  }
  // The one-relation u = a shape (single letter right side, non-empty left).
  r.is_monadic = p.relations.size() == 1 && p.relations[0].rhs.size() == 1 &&
                 !p.relations[0].lhs.empty();
  return r;
}

namespace {

struct Line {
  std::size_t number = 0;
  std::string key;                   // "kind", "gens" or "rel"
  std::vector<std::string> tokens;   // whitespace-split payload
};

// Strips comments, splits "key: payload" lines and tokenizes the payload.
std::vector<Line> lex(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head)) continue;  // blank line
    if (head.size() < 2 || head.back() != ':')
      throw ParseError(number, "expected \"kind:\", \"gens:\" or \"rel:\"");
    Line line;
    line.number = number;
    line.key = head.substr(0, head.size() - 1);
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

namespace detail {

ParsedFile parse_presentation_file(std::string_view text) {
  auto lines = lex(text);
  if (lines.empty()) throw ParseError(0, "empty presentation");

  std::size_t at = 0;
  if (lines[at].key != "kind")
    throw ParseError(lines[at].number, "first line must declare a kind");
  if (lines[at].tokens.size() != 1)
    throw ParseError(lines[at].number, "kind takes exactly one value");
  ParsedFile file;
  file.kind = lines[at].tokens[0];
  ++at;

  if (at >= lines.size() || lines[at].key != "gens")
    throw ParseError(at < lines.size() ? lines[at].number : lines.back().number,
                     "second line must declare generators");
  std::vector<std::string> gens = lines[at].tokens;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] == gens[j])
        throw ParseError(lines[at].number, "duplicate generator \"" + gens[i] + "\"");
  try {
    file.alphabet = Alphabet(gens);
  } catch (std::invalid_argument const& e) {
    throw ParseError(lines[at].number, e.what());
  }
  ++at;

  for (; at < lines.size(); ++at) {
    Line const& line = lines[at];
    if (line.key != "rel")
      throw ParseError(line.number, "unexpected \"" + line.key + ":\" line");
    auto eq = std::find(line.tokens.begin(), line.tokens.end(), "=");
    if (eq == line.tokens.end())
      throw ParseError(line.number, "relation needs an \"=\" separator");
    if (std::find(eq + 1, line.tokens.end(), "=") != line.tokens.end())
      throw ParseError(line.number, "relation has more than one \"=\"");
    Relation r;
    r.lhs = parse_word_tokens(file.alphabet,
                              std::vector<std::string>(line.tokens.begin(), eq),
                              line.number);
    r.rhs = parse_word_tokens(file.alphabet,
                              std::vector<std::string>(eq + 1, line.tokens.end()),
                              line.number);
    file.relations.push_back(std::move(r));
    file.relation_lines.push_back(line.number);
  }
  return file;
}

}  // namespace detail

Presentation parse_presentation(std::string_view text) {
  detail::ParsedFile file = detail::parse_presentation_file(text);
  PresentationKind kind;
  if (file.kind == "monoid")
    kind = PresentationKind::Monoid;
  else if (file.kind == "semigroup")
    kind = PresentationKind::Semigroup;
  else if (file.kind == "rewriting")
    throw ParseError(1, "kind \"rewriting\" denotes a rewriting system, not a presentation");
  else
    throw ParseError(1, "unknown kind \"" + file.kind + "\"");

  Presentation p;
  p.alphabet = std::move(file.alphabet);
  p.kind = kind;
  p.relations = std::move(file.relations);
  if (kind == PresentationKind::Semigroup)
    for (std::size_t i = 0; i < p.relations.size(); ++i)
      if (p.relations[i].lhs.empty() || p.relations[i].rhs.empty())
        throw ParseError(file.relation_lines[i], "empty word in a semigroup relation");
  return p;
}

std::string to_string(PresentationKind kind) {
  return kind == PresentationKind::Monoid ? "monoid" : "semigroup";
}

std::string print_presentation(Presentation const& p) {
  std::string out = "kind: " + to_string(p.kind) + "\n";
  out += "gens:";
  for (auto const& t : p.alphabet.tokens()) out += " " + t;
  out += "\n";
  for (Relation const& r : p.relations) {
    out += "rel: " + print_word(p.alphabet, r.lhs) + " = " +
           print_word(p.alphabet, r.rhs) + "\n";
  }
  return out;
}

}  // namespace stylus
