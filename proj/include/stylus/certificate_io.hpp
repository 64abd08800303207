// certificate_io.hpp -- JSON exchange format for derivation certificates
#pragma once

#include <string>
#include <string_view>

#include "stylus/derivation.hpp"

namespace stylus {

// Schema: an object with exactly the keys "presentation", "start", "steps",
// "end".  "presentation" holds either a catalog identity name or inline
// presentation text; "start"/"end" are words in text form; "steps" is an
// array of {"rel": index, "dir": "fwd"|"rev", "pos": position}.

// Serializes; the presentation is referenced by name when the derivation's
// presentation carries a catalog identity, and inlined otherwise.
std::string certificate_to_json(Derivation const& d);

// Parses and resolves; throws ParseError on malformed JSON, schema
// violations, unknown presentation names, or unparsable words.  The result
// is not replayed here -- use check_derivation for that.
Derivation certificate_from_json(std::string_view text);

}  // namespace stylus
