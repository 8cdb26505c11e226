#include "doctest.h"
#include "levyflow/words.hpp"

using namespace levyflow;

TEST_CASE("letter grading and validity") {
  AlphabetSpec spec{2, 3, 4};
  CHECK(grading(Letter{0, 1}) == 1);
  CHECK(grading(Letter{1, 2}) == 2);
  CHECK(grading(Letter{3, 4}) == 4);
  CHECK(letter_valid(Letter{1, 2}, spec));
  CHECK_FALSE(letter_valid(Letter{1, 3}, spec));  // Wiener powers stop at 2
  CHECK_FALSE(letter_valid(Letter{0, 2}, spec));  // time has power 1 only
  CHECK(letter_valid(Letter{3, 4}, spec));
  CHECK(letter_valid(Letter{3, 5}, spec));  // powers are not grade-capped
  CHECK_FALSE(letter_valid(Letter{4, 1}, spec));  // no such driver
}

TEST_CASE("letter bracket") {
  AlphabetSpec spec{1, 2, 4};
  CHECK_FALSE(bracket(Letter{0, 1}, Letter{0, 1}, spec).has_value());
  CHECK_FALSE(bracket(Letter{0, 1}, Letter{1, 1}, spec).has_value());
  CHECK(bracket(Letter{1, 1}, Letter{1, 1}, spec) == Letter{1, 2});
  CHECK_FALSE(bracket(Letter{1, 1}, Letter{1, 2}, spec).has_value());
  CHECK(bracket(Letter{2, 1}, Letter{2, 2}, spec) == Letter{2, 3});
  CHECK(bracket(Letter{2, 2}, Letter{2, 2}, spec) == Letter{2, 4});
  CHECK_FALSE(bracket(Letter{1, 1}, Letter{2, 1}, spec).has_value());
}

TEST_CASE("word formatting round trip") {
  Word w({Letter{1, 1}, Letter{2, 2}, Letter{0, 1}});
  CHECK(to_string(w) == "1.2^(2).0");
  CHECK(parse_word("1.2^(2).0") == w);
  CHECK(to_string(Word{}) == "e");
  CHECK(parse_word("e") == Word{});
  CHECK_THROWS(parse_word("1..2"));
  CHECK_THROWS(parse_word("x"));
}

TEST_CASE("canonical word order is graded") {
  Word a = parse_word("2");
  Word b = parse_word("1^(2)");
  Word c = parse_word("0.1");
  CHECK(a < b);       // grade 1 before grade 2
  CHECK(b < c);       // same grade, shorter first
  CHECK(parse_word("0.1") < parse_word("1.0"));
}

TEST_CASE("series arithmetic keeps terms sparse") {
  WordSeries s(parse_word("1"), Rational(1, 2));
  s.add_term(parse_word("1"), Rational(-1, 2));
  CHECK(s.is_zero());
  s.add_term(parse_word("2"), 3);
  s *= Rational(1, 3);
  CHECK(s.coeff(parse_word("2")) == 1);
  CHECK(s.size() == 1);
}

TEST_CASE("enumerate_words counts match the alphabet") {
  AlphabetSpec spec{1, 2, 2};
  auto words = enumerate_words(spec, 2);
  // e; grade 1: 0,1,2; grade 2: 1^(2), 2^(2) and the 9 two-letter words.
  CHECK(words.size() == 1 + 3 + 2 + 9);
  for (const auto& w : words) CHECK(w.grade() <= 2);
}
