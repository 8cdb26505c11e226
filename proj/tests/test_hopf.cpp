#include "doctest.h"
#include "levyflow/hopf.hpp"

using namespace levyflow;

namespace {
const AlphabetSpec spec{1, 2, 4};
Word W(const std::string& s) { return parse_word(s); }
}  // namespace

TEST_CASE("quasi-shuffle of two Wiener letters") {
  WordSeries s = quasi_shuffle(W("1"), W("1"), spec);
  CHECK(s.coeff(W("1.1")) == 2);
  CHECK(s.coeff(W("1^(2)")) == 1);
  CHECK(s.size() == 2);
}

TEST_CASE("quasi-shuffle across drivers has no bracket term") {
  WordSeries s = quasi_shuffle(W("1"), W("2"), spec);
  CHECK(s.coeff(W("1.2")) == 1);
  CHECK(s.coeff(W("2.1")) == 1);
  CHECK(s.size() == 2);
}

TEST_CASE("jump powers add under the bracket") {
  WordSeries s = quasi_shuffle(W("2"), W("2^(2)"), spec);
  CHECK(s.coeff(W("2.2^(2)")) == 1);
  CHECK(s.coeff(W("2^(2).2")) == 1);
  CHECK(s.coeff(W("2^(3)")) == 1);
}

TEST_CASE("shuffle drops all bracket terms") {
  WordSeries s = shuffle(W("1"), W("1"));
  CHECK(s.coeff(W("1.1")) == 2);
  CHECK(s.size() == 1);
}

TEST_CASE("empty word is the unit") {
  CHECK(quasi_shuffle(Word{}, W("0.1"), spec) == WordSeries(W("0.1")));
  CHECK(shuffle(W("0.1"), Word{}) == WordSeries(W("0.1")));
}

TEST_CASE("deconcatenation of a two-letter word") {
  TensorSeries d = deconcat(W("0.1"));
  CHECK(d.coeff({Word{}, W("0.1")}) == 1);
  CHECK(d.coeff({W("0"), W("1")}) == 1);
  CHECK(d.coeff({W("0.1"), Word{}}) == 1);
  CHECK(d.size() == 3);
}

TEST_CASE("dequasishuffle splits bracket letters") {
  TensorSeries d = dequasishuffle(W("1^(2)"), spec);
  CHECK(d.coeff({W("1"), W("1")}) == 1);
  CHECK(d.coeff({Word{}, W("1^(2)")}) == 1);
  CHECK(d.coeff({W("1^(2)"), Word{}}) == 1);
  CHECK(d.size() == 3);
}

TEST_CASE("convolution log of the identity, single letters") {
  for (const char* s : {"0", "1", "1^(2)", "2^(3)"})
    CHECK(conv_log_id(ProductKind::Shuffle, W(s), spec) == WordSeries(W(s)));
}

TEST_CASE("convolution log of the identity, two distinct letters") {
  WordSeries s = conv_log_id(ProductKind::Shuffle, W("0.1"), spec);
  CHECK(s.coeff(W("0.1")) == Rational(1, 2));
  CHECK(s.coeff(W("1.0")) == Rational(-1, 2));
  CHECK(s.size() == 2);
}

TEST_CASE("convolution log of the identity, three distinct letters") {
  // Coefficients depend only on the inverse permutation's descent pattern.
  WordSeries s = conv_log_id(ProductKind::Shuffle, W("0.1.2"), spec);
  CHECK(s.coeff(W("0.1.2")) == Rational(1, 3));
  CHECK(s.coeff(W("2.1.0")) == Rational(1, 3));
  CHECK(s.coeff(W("0.2.1")) == Rational(-1, 6));
  CHECK(s.coeff(W("1.0.2")) == Rational(-1, 6));
  CHECK(s.coeff(W("1.2.0")) == Rational(-1, 6));
  CHECK(s.coeff(W("2.0.1")) == Rational(-1, 6));
}

TEST_CASE("conv_exp inverts conv_log on the identity") {
  for (ProductKind kind : {ProductKind::Shuffle, ProductKind::QuasiShuffle}) {
    GradedEndomorphism log = conv_log_id_endo(kind, spec);
    GradedEndomorphism exp = conv_exp(log, kind, spec);
    for (const Word& w : enumerate_words(spec, 3))
      CHECK(exp.apply(w) == WordSeries(w));
  }
}

TEST_CASE("pairing is the coefficient functional") {
  WordSeries s = quasi_shuffle(W("1"), W("1"), spec);
  CHECK(pairing(s, WordSeries(W("1^(2)"))) == 1);
  CHECK(pairing(s, WordSeries(W("1.1"))) == 2);
  CHECK(pairing(s, WordSeries(W("0"))) == 0);
}
