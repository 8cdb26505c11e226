#include "doctest.h"
#include "levyflow/chen_strichartz.hpp"

using namespace levyflow;

namespace {
const AlphabetSpec spec{1, 2, 3};
Word W(const std::string& s) { return parse_word(s); }
}  // namespace

TEST_CASE("permutation basics") {
  Permutation p({2, 3, 1});
  CHECK(p(1) == 2);
  CHECK(p.inverse() == Permutation({3, 1, 2}));
  CHECK(descents(p) == 1);
  CHECK(all_permutations(4).size() == 24);
  CHECK_THROWS(Permutation({1, 1}));
}

TEST_CASE("Eulerian coefficients for small permutations") {
  CHECK(eulerian_coefficient(Permutation({1})) == 1);
  CHECK(eulerian_coefficient(Permutation({1, 2})) == Rational(1, 2));
  CHECK(eulerian_coefficient(Permutation({2, 1})) == Rational(-1, 2));
  CHECK(eulerian_coefficient(Permutation({1, 2, 3})) == Rational(1, 3));
  CHECK(eulerian_coefficient(Permutation({3, 2, 1})) == Rational(1, 3));
  CHECK(eulerian_coefficient(Permutation({2, 1, 3})) == Rational(-1, 6));
}

TEST_CASE("reciprocal closed form matches the expansion oracle") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : all_permutations(n))
      CHECK(eulerian_closed_form_reciprocal(p) == eulerian_coefficient(p));
}

TEST_CASE("binomial-as-factor reading diverges at three letters") {
  for (const auto& p : all_permutations(2))
    CHECK(eulerian_closed_form_binomial(p) == eulerian_coefficient(p));
  Permutation p({2, 1, 3});
  CHECK(eulerian_closed_form_binomial(p) == Rational(-2, 3));
  CHECK(eulerian_coefficient(p) == Rational(-1, 6));
}

TEST_CASE("left bracketing") {
  CHECK(left_bracketing(W("0")) == WordSeries(W("0")));
  WordSeries b = left_bracketing(W("0.1"));
  CHECK(b.coeff(W("0.1")) == 1);
  CHECK(b.coeff(W("1.0")) == -1);
  // [a,[a,a]] vanishes
  CHECK(left_bracketing(W("1.1")).is_zero());
}

TEST_CASE("psi produces Lie elements") {
  for (const Word& w : enumerate_words(spec, 3)) {
    if (w.empty()) continue;
    WordSeries p = psi(w);
    if (p.is_zero()) continue;
    CHECK(dynkin_check(p, w.length()));
  }
}

TEST_CASE("psi on a two-letter word") {
  WordSeries p = psi(W("0.1"));
  CHECK(p.coeff(W("0.1")) == Rational(1, 2));
  CHECK(p.coeff(W("1.0")) == Rational(-1, 2));
  CHECK(p.size() == 2);
}

TEST_CASE("exponential of the log flowmap is the identity") {
  CHECK(check_exp_of_log(spec, 3));
  CHECK(check_exp_of_log(AlphabetSpec{0, 1, 4}, 4));
}

TEST_CASE("log series transposes between coordinates") {
  TensorSeries log_word = log_in_word_coordinates(spec, 3);
  TensorSeries transposed;
  for (const auto& [p, c] : log_word.terms())
    transposed.add_term({p.second, p.first}, c);
  CHECK(transposed == flowmap_tensor(log_flowmap(LieBasis::J, spec, 3)));
}

TEST_CASE("J and I flowmaps agree on bracket-free alphabets at grade two") {
  AlphabetSpec flat{0, 2, 2};
  auto j = log_flowmap(LieBasis::J, flat, 2);
  auto i = log_flowmap(LieBasis::I, flat, 2);
  // The only bracket letters are i^(2); everything else transports onto
  // itself at this depth.
  CHECK(j.terms.at(W("0.2")) == i.terms.at(W("0.2")));
  CHECK(j.terms.at(W("1.2")) == i.terms.at(W("1.2")));
}

TEST_CASE("Ito-basis term of a squared letter keeps the transport correction") {
  AlphabetSpec one{0, 1, 2};
  auto i = log_flowmap(LieBasis::I, one, 2);
  // J_{1^(2)} expands as I_{1^(2)}; J_{1.1} hits I_{1.1} and I_{1^(2)} picks
  // up psi contributions from both.
  const WordSeries& t = i.terms.at(W("1^(2)"));
  CHECK(t.coeff(W("1^(2)")) == 1);
}
