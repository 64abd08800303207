// catalog.hpp -- the presentations this library ships ready-made
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stylus/presentation.hpp"

namespace stylus::catalog {

enum class Completeness { Complete, Partial };

struct Entry {
  Presentation presentation;
  std::string provenance;      // where the presentation is taken from
  Completeness flags = Completeness::Complete;
  std::string generator_map;   // optional naming correspondence note
  std::string partial_note;    // set when flags == Partial
  std::optional<Word> specific_word;     // the wipe target, when one exists
  std::optional<std::uint32_t> param_i;  // tseytin-family parameters
  std::optional<std::uint32_t> param_j;
};

// The seven-relation semigroup with parameter i >= 0; generators a..e with
// a,b the x-letters, c,d the y-letters and e the stylus letter.  Relation
// order: four commutations, two stylus relations, then the trigger
// c d^i c a = c d^i c a e.
Entry tseytin(std::uint32_t i);

// Indices of the tseytin relation groups, valid for every family member.
inline constexpr std::size_t kCommutationFirst = 0;  // ac=ca ad=da bc=cb bd=db
inline constexpr std::size_t kStylusCA = 4;          // eca = ce
inline constexpr std::size_t kStylusDB = 5;          // edb = de
inline constexpr std::size_t kTrigger = 6;           // c d^i c a = c d^i c a e
inline constexpr std::size_t kWipeC = 7;             // c W = W (specific only)
inline constexpr std::size_t kWipeD = 8;             // d W = W (specific only)

// The nine-relation variant with wipe relations for the specific word
// a b^j a b^j a; requires i != j.
Entry tseytin_specific(std::uint32_t i, std::uint32_t j);

enum class Named {
  Scott,
  Matiyasevich5,
  Makanin5,
  Matiyasevich3,
  TseytinCCE,
  Commutative,
  Bicyclic,
};

Entry named_entry(Named which);

// Maps CLI-facing names ("scott", "tseytin-cce", ...) to entries; nullopt
// for unknown names.  "tseytin" and "tseytin-specific" take parameters.
std::optional<Named> named_from_string(std::string_view name);
std::vector<std::string> catalog_names();

// Resolves a full identity name as stored in Presentation::name -- either a
// plain catalog name or the parameterized forms "tseytin(i=N)" and
// "tseytin-specific(i=N,j=M)".  nullopt for anything else.
std::optional<Entry> entry_by_name(std::string_view name);

struct LetterStatistics {
  std::size_t relation_count = 0;
  std::size_t letter_occurrence_count = 0;      // letters over all sides
  std::vector<std::size_t> per_relation;        // letters per relation
};

LetterStatistics letter_statistics(Presentation const& p);

}  // namespace stylus::catalog
