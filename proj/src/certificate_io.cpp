#include "stylus/certificate_io.hpp"

#include <string>
#include <utility>

#include <json.hpp>

#include "stylus/catalog.hpp"
#include "stylus/error.hpp"
#include "stylus/presentation.hpp"

namespace stylus {
namespace {

using nlohmann::ordered_json;

bool looks_inline(std::string_view text) {
  return text.find('\n') != std::string_view::npos || text.rfind("kind:", 0) == 0;
}

bool same_presentation(Presentation const& p, Presentation const& q) {
  return p.kind == q.kind && p.alphabet == q.alphabet && p.relations == q.relations;
}

[[noreturn]] void schema_error(std::string const& what) {
  throw ParseError(0, "certificate: " + what);
}

void require_keys(ordered_json const& object, std::initializer_list<char const*> keys,
                  char const* where) {
  for (char const* key : keys)
    if (!object.contains(key))
      schema_error(std::string(where) + " is missing the \"" + key + "\" key");
  if (object.size() != keys.size())
    schema_error(std::string(where) + " has extra keys");
}

Presentation resolve_presentation(std::string const& reference) {
  if (looks_inline(reference)) return parse_presentation(reference);
  if (auto entry = catalog::entry_by_name(reference)) return entry->presentation;
  schema_error("unknown presentation name \"" + reference + "\"");
}

}  // namespace

std::string certificate_to_json(Derivation const& d) {
  ordered_json object;
  auto const& name = d.presentation.name;
  if (!name.empty()) {
    auto entry = catalog::entry_by_name(name);
    if (entry && same_presentation(entry->presentation, d.presentation))
      object["presentation"] = name;
  }
  if (!object.contains("presentation"))
    object["presentation"] = print_presentation(d.presentation);
  object["start"] = print_word(d.presentation.alphabet, d.start);
  ordered_json steps = ordered_json::array();
  for (auto const& s : d.steps) {
    ordered_json step;
    step["rel"] = s.relation;
    step["dir"] = s.direction == StepDirection::Forward ? "fwd" : "rev";
    step["pos"] = s.position;
    steps.push_back(std::move(step));
  }
  object["steps"] = std::move(steps);
  object["end"] = print_word(d.presentation.alphabet, d.end);
  return object.dump(2) + "\n";
}

Derivation certificate_from_json(std::string_view text) {
  ordered_json object;
  try {
    object = ordered_json::parse(text);
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(0, std::string("certificate: not valid JSON: ") + e.what());
  }
  if (!object.is_object()) schema_error("top level must be an object");
  require_keys(object, {"presentation", "start", "steps", "end"}, "certificate");
  if (!object["presentation"].is_string()) schema_error("\"presentation\" must be a string");
  if (!object["start"].is_string()) schema_error("\"start\" must be a string");
  if (!object["end"].is_string()) schema_error("\"end\" must be a string");
  if (!object["steps"].is_array()) schema_error("\"steps\" must be an array");

  Derivation d;
  d.presentation = resolve_presentation(object["presentation"].get<std::string>());
  d.start = parse_word(d.presentation.alphabet, object["start"].get<std::string>());
  d.end = parse_word(d.presentation.alphabet, object["end"].get<std::string>());
  for (auto const& step : object["steps"]) {
    if (!step.is_object()) schema_error("every step must be an object");
    require_keys(step, {"rel", "dir", "pos"}, "step");
    if (!step["rel"].is_number_unsigned() || !step["pos"].is_number_unsigned())
      schema_error("\"rel\" and \"pos\" must be non-negative integers");
    if (!step["dir"].is_string()) schema_error("\"dir\" must be \"fwd\" or \"rev\"");
    auto dir = step["dir"].get<std::string>();
    if (dir != "fwd" && dir != "rev") schema_error("\"dir\" must be \"fwd\" or \"rev\"");
    d.steps.push_back(DerivationStep{
        step["rel"].get<std::size_t>(),
        dir == "fwd" ? StepDirection::Forward : StepDirection::Reverse,
        step["pos"].get<std::size_t>()});
  }
  return d;
}

}  // namespace stylus
