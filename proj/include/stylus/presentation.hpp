// presentation.hpp -- finitely presented semigroups and monoids
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "stylus/word.hpp"

namespace stylus {

enum class PresentationKind { Semigroup, Monoid };

struct Relation {
  Word lhs;
  Word rhs;

  friend bool operator==(Relation const&, Relation const&) = default;
};

// A finite presentation.  Semigroup-kind presentations may not mention the
// empty word in a relation; monoid-kind ones may.
struct Presentation {
  Alphabet alphabet;
  std::vector<Relation> relations;
  PresentationKind kind = PresentationKind::Monoid;
  std::string name;  // optional label, e.g. a catalog identity
};

// Checks letter ranges and the kind constraint; throws std::invalid_argument.
void validate_presentation(Presentation const& p);

struct ClassificationReport {
  bool is_special = false;   // every relation reads W = 1
  bool is_positive = false;  // no formal-inverse letters (always true here)
  bool is_monadic = false;   // one relation, rhs a single letter, lhs non-empty
  std::size_t relation_count = 0;
  std::size_t letter_occurrence_count = 0;  // total letters over all sides
};

ClassificationReport classify(Presentation const& p);

// ---- presentation text format ----------------------------------------------
//
//   kind: monoid | semigroup | rewriting
//   gens: tok tok ...
//   rel: word = word        (one per relation; '#' comments; blank lines ok)
//
// Words use the word text syntax from word.hpp.

// Parses monoid/semigroup text; ParseError carries the offending line.
Presentation parse_presentation(std::string_view text);

// Renders kind, gens and rel lines exactly as the golden files expect.
std::string print_presentation(Presentation const& p);

std::string to_string(PresentationKind kind);

namespace detail {

// The common shape shared by presentation and rewriting-system files.
struct ParsedFile {
  std::string kind;
  Alphabet alphabet;
  std::vector<Relation> relations;
  std::vector<std::size_t> relation_lines;  // source line per relation
};

ParsedFile parse_presentation_file(std::string_view text);

}  // namespace detail

}  // namespace stylus
