#include "doctest.h"
#include "levyflow/basis_change.hpp"

using namespace levyflow;

namespace {
const AlphabetSpec spec{0, 1, 4};  // one pure-jump driver, powers to 4
Word W(const std::string& s) { return parse_word(s); }
ZeroWord Z(const std::string& s) { return ZeroWord(parse_word(s)); }
}  // namespace

TEST_CASE("generator expansions up to power three") {
  // (i^(1))^0 = i^(1)
  CHECK(hoffman_log_letter(Letter{1, 1}, spec) == WordSeries(W("1")));

  // (i^(2))^0 = i^(2) - 1/2 i^(1) i^(1)
  WordSeries g2 = hoffman_log_letter(Letter{1, 2}, spec);
  CHECK(g2.coeff(W("1^(2)")) == 1);
  CHECK(g2.coeff(W("1.1")) == Rational(-1, 2));
  CHECK(g2.size() == 2);

  // (i^(3))^0 = i^(3) - 1/2 (i^(2) i^(1) + i^(1) i^(2)) + 1/3 i i i
  WordSeries g3 = hoffman_log_letter(Letter{1, 3}, spec);
  CHECK(g3.coeff(W("1^(3)")) == 1);
  CHECK(g3.coeff(W("1^(2).1")) == Rational(-1, 2));
  CHECK(g3.coeff(W("1.1^(2)")) == Rational(-1, 2));
  CHECK(g3.coeff(W("1.1.1")) == Rational(1, 3));
  CHECK(g3.size() == 4);
}

TEST_CASE("exponential form uses factorial weights") {
  // i^(2) = (i^(2))^0 + 1/2 (i^(1))^0 (i^(1))^0
  ZeroSeries e2 = hoffman_exp_letter(Letter{1, 2}, spec);
  CHECK(e2.coeff(Z("1^(2)")) == 1);
  CHECK(e2.coeff(Z("1.1")) == Rational(1, 2));
  CHECK(e2.size() == 2);

  ZeroSeries e3 = hoffman_exp_letter(Letter{1, 3}, spec);
  CHECK(e3.coeff(Z("1^(3)")) == 1);
  CHECK(e3.coeff(Z("1.1.1")) == Rational(1, 6));
}

TEST_CASE("compositions are ordered and complete") {
  auto c3 = compositions(3);
  CHECK(c3.size() == 4);
  for (const auto& parts : c3) {
    int sum = 0;
    for (int p : parts) sum += p;
    CHECK(sum == 3);
  }
}

TEST_CASE("basis change round trips") {
  for (const Word& w : enumerate_words(spec, 4)) {
    if (w.empty()) continue;
    CHECK(to_word_basis(word_in_zero_basis(w, spec), spec) == WordSeries(w));
    CHECK(to_zero_basis(zero_word_in_word_basis(ZeroWord(w), spec), spec) ==
          ZeroSeries(ZeroWord(w)));
  }
}

TEST_CASE("letters with no bracket structure are fixed") {
  AlphabetSpec mixed{1, 2, 3};
  CHECK(word_in_zero_basis(parse_word("0.1.2"), mixed) ==
        ZeroSeries(ZeroWord(parse_word("0.1.2"))));
}

TEST_CASE("identity re-expands in both bases") {
  CHECK(verify_id_reexpansion(spec, 4));
  CHECK(verify_id_reexpansion(AlphabetSpec{1, 2, 3}, 3));
}

TEST_CASE("exp_H_dagger is multiplicative over letters") {
  ZeroSeries lhs = exp_H_dagger(W("1.1^(2)"), spec);
  ZeroSeries rhs;
  ZeroSeries a = exp_H_dagger(W("1"), spec);
  ZeroSeries b = exp_H_dagger(W("1^(2)"), spec);
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms())
      rhs.add_term(u.concat(v), cu * cv);
  CHECK(lhs == rhs);
}
