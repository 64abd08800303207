#include "stylus/catalog.hpp"

#include <charconv>
#include <stdexcept>
#include <string_view>

namespace stylus::catalog {

namespace {

// Catalog tokens are single characters, so words read as plain strings.
Word w(Alphabet const& a, std::string_view chars) {
  Word out;
  for (char c : chars) {
    auto s = a.index_of(std::string_view(&c, 1));
    if (!s) throw std::invalid_argument("catalog word uses unknown letter");
    out.push_back(*s);
  }
  return out;
}

Word power_block(Alphabet const& a, char head, char tail, std::uint32_t n) {
  std::string text(1, head);
  text.append(n, tail);
  return w(a, text);
}

}  // namespace

Entry tseytin(std::uint32_t i) {
  Entry e;
  Presentation p;
  p.alphabet = Alphabet({"a", "b", "c", "d", "e"});
  p.kind = PresentationKind::Semigroup;
  p.name = "tseytin(i=" + std::to_string(i) + ")";
  auto const& A = p.alphabet;
  p.relations = {
      {w(A, "ac"), w(A, "ca")}, {w(A, "ad"), w(A, "da")},
      {w(A, "bc"), w(A, "cb")}, {w(A, "bd"), w(A, "db")},
      {w(A, "eca"), w(A, "ce")}, {w(A, "edb"), w(A, "de")},
  };
  // Trigger: c d^i c a = c d^i c a e.
  Word trigger = concat(power_block(A, 'c', 'd', i), w(A, "ca"));
  p.relations.push_back(Relation{trigger, concat(trigger, w(A, "e"))});
  e.presentation = std::move(p);
  e.provenance = "Tseytin's seven-relation semigroup, parameterized form";
  e.generator_map = "a=x1 b=x2 c=y1 d=y2 e=t";
  e.param_i = i;
  return e;
}

Entry tseytin_specific(std::uint32_t i, std::uint32_t j) {
  if (i == j)
    throw std::invalid_argument("tseytin_specific requires distinct parameters");
  Entry e = tseytin(i);
  Presentation& p = e.presentation;
  p.name = "tseytin-specific(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")";
  auto const& A = p.alphabet;
  // The specific word a b^j a b^j a and its two wipe relations.
  Word specific = concat(power_block(A, 'a', 'b', j), power_block(A, 'a', 'b', j),
                         w(A, "a"));
  p.relations.push_back(Relation{concat(w(A, "c"), specific), specific});
  p.relations.push_back(Relation{concat(w(A, "d"), specific), specific});
  e.provenance = "Tseytin's semigroup extended by two wipe relations";
  e.specific_word = std::move(specific);
  e.param_j = j;
  return e;
}

Entry named_entry(Named which) {
  Entry e;
  switch (which) {
    case Named::Scott: {
      Presentation p;
      p.alphabet = Alphabet({"a", "b", "c", "d", "e", "f"});
      p.kind = PresentationKind::Semigroup;
      p.name = "scott";
      auto const& A = p.alphabet;
      p.relations = {
          {w(A, "ac"), w(A, "ca")}, {w(A, "ad"), w(A, "da")},
          {w(A, "ae"), w(A, "ea")}, {w(A, "bc"), w(A, "cb")},
          {w(A, "bd"), w(A, "db")}, {w(A, "be"), w(A, "eb")},
          {w(A, "e"), w(A, "ef")},  {w(A, "e"), w(A, "fe")},
          {w(A, "fca"), w(A, "cf")}, {w(A, "fdb"), w(A, "df")},
      };
      e.presentation = std::move(p);
      e.provenance = "Scott's ten-relation six-generator semigroup";
      return e;
    }
    case Named::Matiyasevich5: {
      Presentation p;
      p.alphabet = Alphabet({"x", "y"});
      p.kind = PresentationKind::Semigroup;
      p.name = "matiyasevich5";
      auto const& A = p.alphabet;
      p.relations = {
          {w(A, "xyxxyy"), w(A, "yyxxyx")},
          {w(A, "xxyxyyx"), w(A, "yyxxxyx")},
          {w(A, "xyxxxyy"), w(A, "xyyxyxx")},
          {w(A, "xxxxyyxxyx"), w(A, "yyxxxx")},
          {w(A, "yyyxxyyxxyx"), w(A, "yyyxxyyxxxx")},
      };
      e.presentation = std::move(p);
      e.provenance = "Matiyasevich's five-relation two-generator semigroup";
      return e;
    }
    case Named::Makanin5: {
      Presentation p;
      p.alphabet = Alphabet({"x", "y", "z"});
      p.kind = PresentationKind::Semigroup;
      p.name = "makanin5";
      auto const& A = p.alphabet;
      p.relations = {
          {w(A, "zzyy"), w(A, "yyzz")},
          {w(A, "yzzzyy"), w(A, "zyyyzz")},
          {w(A, "xzzyy"), w(A, "yyx")},
          {w(A, "xyzzzyy"), w(A, "zyyx")},
          {w(A, "yyzzyyyyzz"), w(A, "yyzzyyyyzzx")},
      };
      e.presentation = std::move(p);
      e.provenance = "Makanin's five-relation three-generator semigroup";
      return e;
    }
    case Named::Matiyasevich3: {
      Presentation p;
      p.alphabet = Alphabet({"a", "b"});
      p.kind = PresentationKind::Semigroup;
      p.name = "matiyasevich3";
      auto const& A = p.alphabet;
      p.relations = {
          {w(A, "aabab"), w(A, "baa")},
          {w(A, "aabb"), w(A, "baa")},
      };
      e.presentation = std::move(p);
      e.provenance = "Matiyasevich's three-relation semigroup, short relations only";
      e.flags = Completeness::Partial;
      e.partial_note = "third relation W1 = W2 omitted; |W1| = 304, |W2| = 608";
      return e;
    }
    case Named::TseytinCCE: {
      Entry base = tseytin(0);
      Presentation p = std::move(base.presentation);
      p.name = "tseytin-cce";
      auto const& A = p.alphabet;
      p.relations.back() = Relation{w(A, "cca"), w(A, "cce")};
      e.presentation = std::move(p);
      e.provenance = "Tseytin's semigroup with the trigger shortened to cca = cce";
      e.generator_map = base.generator_map;
      return e;
    }
    case Named::Commutative: {
      Presentation p;
      p.alphabet = Alphabet({"a", "b"});
      p.kind = PresentationKind::Monoid;
      p.name = "commutative";
      auto const& A = p.alphabet;
      p.relations = {{w(A, "ab"), w(A, "ba")}};
      e.presentation = std::move(p);
      e.provenance = "free commutative monoid on two generators";
      return e;
    }
    case Named::Bicyclic: {
      Presentation p;
      p.alphabet = Alphabet({"b", "c"});
      p.kind = PresentationKind::Monoid;
      p.name = "bicyclic";
      auto const& A = p.alphabet;
      p.relations = {{w(A, "bc"), Word::epsilon()}};
      e.presentation = std::move(p);
      e.provenance = "the bicyclic monoid, the running special-monoid example";
      return e;
    }
  }
  throw std::invalid_argument("unknown catalog entry");
}

std::optional<Named> named_from_string(std::string_view name) {
  if (name == "scott") return Named::Scott;
  if (name == "matiyasevich5") return Named::Matiyasevich5;
  if (name == "makanin5") return Named::Makanin5;
  if (name == "matiyasevich3") return Named::Matiyasevich3;
  if (name == "tseytin-cce") return Named::TseytinCCE;
  if (name == "commutative") return Named::Commutative;
  if (name == "bicyclic") return Named::Bicyclic;
  return std::nullopt;
}

std::vector<std::string> catalog_names() {
  return {"tseytin",       "tseytin-specific", "scott",      "matiyasevich5",
          "makanin5",      "matiyasevich3",    "tseytin-cce", "commutative",
          "bicyclic"};
}

namespace {

// Parses "head(key=N)" / "head(key=N,key=M)" identity names.
std::optional<std::uint32_t> parse_param(std::string_view text, std::string_view key) {
  if (text.size() <= key.size() + 1 || text.substr(0, key.size()) != key ||
      text[key.size()] != '=')
    return std::nullopt;
  std::uint32_t value = 0;
  auto const* begin = text.data() + key.size() + 1;
  auto const* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

std::optional<Entry> entry_by_name(std::string_view name) {
  if (auto which = named_from_string(name)) return named_entry(*which);
  auto open = name.find('(');
  if (open == std::string_view::npos || name.back() != ')') return std::nullopt;
  std::string_view head = name.substr(0, open);
  std::string_view args = name.substr(open + 1, name.size() - open - 2);
  if (head == "tseytin") {
    if (auto i = parse_param(args, "i")) return tseytin(*i);
    return std::nullopt;
  }
  if (head == "tseytin-specific") {
    auto comma = args.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    auto i = parse_param(args.substr(0, comma), "i");
    auto j = parse_param(args.substr(comma + 1), "j");
    if (!i || !j || *i == *j) return std::nullopt;
    return tseytin_specific(*i, *j);
  }
  return std::nullopt;
}

LetterStatistics letter_statistics(Presentation const& p) {
  LetterStatistics stats;
  stats.relation_count = p.relations.size();
  for (Relation const& r : p.relations) {
    std::size_t n = r.lhs.size() + r.rhs.size();
    stats.per_relation.push_back(n);
    stats.letter_occurrence_count += n;
  }
  return stats;
}

}  // namespace stylus::catalog
