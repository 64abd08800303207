#include <doctest.h>

#include <random>
#include <stdexcept>

#include "stylus/error.hpp"
#include "stylus/word.hpp"

using namespace stylus;

namespace {

Alphabet ab() { return Alphabet{{"a", "b"}}; }

Word random_word(std::mt19937& rng, std::size_t letters, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(letters - 1));
  Word w;
  std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) w.push_back(sym(rng));
  return w;
}

}  // namespace

TEST_CASE("alphabet accepts ordered distinct tokens and indexes them") {
  Alphabet a{{"a", "b", "gen3"}};
  CHECK(a.size() == 3);
  CHECK(a.token(0) == "a");
  CHECK(a.token(2) == "gen3");
  CHECK(a.index_of("b") == Symbol{1});
  CHECK_FALSE(a.index_of("c").has_value());
  CHECK(a.contains("gen3"));
}

TEST_CASE("alphabet rejects tokens that collide with the word syntax") {
  CHECK_THROWS_AS((Alphabet{{"a", "a"}}), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS((Alphabet{{""}}), std::invalid_argument);        // empty
  CHECK_THROWS_AS((Alphabet{{"1"}}), std::invalid_argument);       // empty-word literal
  CHECK_THROWS_AS((Alphabet{{"x^2"}}), std::invalid_argument);     // exponent marker
  CHECK_THROWS_AS((Alphabet{{"u=v"}}), std::invalid_argument);     // relation separator
  CHECK_THROWS_AS((Alphabet{{"#x"}}), std::invalid_argument);      // comment marker
  CHECK_THROWS_AS((Alphabet{{"a b"}}), std::invalid_argument);     // whitespace
}

TEST_CASE("word text syntax round trips, including the empty word") {
  Alphabet a = ab();
  CHECK(parse_word(a, "1") == Word::epsilon());
  CHECK(print_word(a, Word::epsilon()) == "1");
  Word w = parse_word(a, "a b b a");
  CHECK(w == Word{{0, 1, 1, 0}});
  CHECK(print_word(a, w) == "a b b a");
}

TEST_CASE("exponent syntax expands on input and never appears on output") {
  Alphabet a = ab();
  CHECK(parse_word(a, "a^3 b^2") == parse_word(a, "a a a b b"));
  CHECK(parse_word(a, "b^0") == Word::epsilon());
  CHECK(parse_word(a, "a 1 b") == parse_word(a, "a b"));  // "1" is a no-op token
  CHECK(print_word(a, parse_word(a, "a^4")) == "a a a a");
}

TEST_CASE("word parse errors carry the seeded line number") {
  Alphabet a = ab();
  CHECK_THROWS_AS(parse_word(a, "a c", 7), ParseError);
  try {
    parse_word(a, "a^x", 12);
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    CHECK(e.line() == 12);
  }
}

TEST_CASE("print/parse is the identity on random words") {
  Alphabet a{{"a", "b", "c"}};
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, a.size(), 30);
    CHECK(parse_word(a, print_word(a, w)) == w);
  }
}

TEST_CASE("subword is half-open and throws on out-of-range bounds") {
  Word w{{0, 1, 2, 3}};
  CHECK(w.subword(1, 3) == Word{{1, 2}});
  CHECK(w.subword(2, 2) == Word::epsilon());
  CHECK(w.subword(0, 4) == w);
  CHECK_THROWS_AS(w.subword(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(w.subword(0, 5), std::invalid_argument);
}

TEST_CASE("occurs_at checks factors at exact offsets") {
  Word w{{0, 1, 1, 0}};
  CHECK(occurs_at(w, Word{{1, 1}}, 1));
  CHECK_FALSE(occurs_at(w, Word{{1, 1}}, 2));
  CHECK(occurs_at(w, Word::epsilon(), 4));   // empty factor fits at the end
  CHECK_FALSE(occurs_at(w, Word::epsilon(), 5));
  CHECK_FALSE(occurs_at(w, Word{{0}}, 4));
}

TEST_CASE("count_occurrences") {
  Word w{{0, 1, 1, 0, 1}};
  CHECK(count_occurrences(w, 1) == 3);
  CHECK(count_occurrences(w, 0) == 2);
  CHECK(count_occurrences(w, 2) == 0);
}

TEST_CASE("concat matches append") {
  Word u{{0, 1}}, v{{1}}, w{{0}};
  CHECK(concat(u, v) == Word{{0, 1, 1}});
  CHECK(concat(u, v, w) == Word{{0, 1, 1, 0}});
  CHECK(concat(Word::epsilon(), v) == v);
}

TEST_CASE("morphisms validate shape and apply letterwise") {
  Alphabet src{{"x", "y"}};
  Alphabet dst = ab();
  Morphism m = make_morphism(src, dst, {Word{{0, 1}}, Word{{1}}});
  CHECK(apply_morphism(m, Word{{0, 1, 0}}) == Word{{0, 1, 1, 0, 1}});
  CHECK(apply_morphism(m, Word::epsilon()) == Word::epsilon());

  CHECK_THROWS_AS(make_morphism(src, dst, {Word{{0}}}), std::invalid_argument);
  CHECK_THROWS_AS(make_morphism(src, dst, {Word{{0}}, Word{{5}}}), std::invalid_argument);
  CHECK_THROWS_AS(apply_morphism(m, Word{{2}}), std::invalid_argument);
}

TEST_CASE("morphism composition distributes over concatenation") {
  Alphabet src{{"x", "y"}};
  Alphabet dst = ab();
  Morphism m = make_morphism(src, dst, {Word{{0, 1, 1}}, Word{{0}}});
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Word u = random_word(rng, 2, 12), v = random_word(rng, 2, 12);
    CHECK(apply_morphism(m, concat(u, v)) ==
          concat(apply_morphism(m, u), apply_morphism(m, v)));
  }
}

TEST_CASE("embed_by_tokens re-indexes through token names") {
  Alphabet small{{"c", "a"}};
  Alphabet big{{"a", "b", "c"}};
  // c a c over `small` is letters 0 1 0; over `big` it must be 2 0 2.
  CHECK(embed_by_tokens(small, big, Word{{0, 1, 0}}) == Word{{2, 0, 2}});
  Alphabet other{{"z"}};
  CHECK_THROWS_AS(embed_by_tokens(small, other, Word{{0}}), std::invalid_argument);
}
