#include "levyflow/chen_strichartz.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "levyflow/basis_change.hpp"

namespace levyflow {

Permutation::Permutation(std::vector<int> im) : images(std::move(im)) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1])
      throw std::invalid_argument("Permutation: not a bijection of {1..n}");
    seen[v - 1] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images.size());
  for (int i = 1; i <= size(); ++i) inv[images[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

int descents(const Permutation& p) {
  int d = 0;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) ++d;
  return d;
}

namespace {

// A word of n distinct grade-1 letters, and the alphabet that carries it.
Word standard_word(int n, AlphabetSpec& spec) {
  spec = AlphabetSpec{0, n, std::max(n, 1)};
  Word w;
  for (int i = 1; i <= n; ++i) w.letters.push_back(Letter{i, 1});
  return w;
}

}  // namespace

Rational eulerian_coefficient(const Permutation& p) {
  int n = p.size();
  if (n == 0) throw std::invalid_argument("eulerian_coefficient: empty");
  AlphabetSpec spec;
  Word w = standard_word(n, spec);
  WordSeries log = conv_log_id(ProductKind::Shuffle, w, spec);
  return log.coeff(apply_permutation(p.inverse(), w));
}

Rational eulerian_closed_form_binomial(const Permutation& p) {
  int n = p.size();
  int d = descents(p);
  Rational sign = (d % 2 == 0) ? 1 : -1;
  return sign / Rational(n) * binomial(n - 1, d);
}

Rational eulerian_closed_form_reciprocal(const Permutation& p) {
  int n = p.size();
  int d = descents(p);
  Rational sign = (d % 2 == 0) ? 1 : -1;
  return sign / (Rational(n) * binomial(n - 1, d));
}

Word apply_permutation(const Permutation& p, const Word& w) {
  if (p.size() != w.length())
    throw std::invalid_argument("apply_permutation: size mismatch");
  Word out;
  out.letters.reserve(w.letters.size());
  for (int i = 1; i <= p.size(); ++i) out.letters.push_back(w.letters[p(i) - 1]);
  return out;
}

WordSeries left_bracketing(const Word& w) {
  if (w.empty()) throw std::invalid_argument("left_bracketing: empty word");
  WordSeries out(Word(w.letters.back()));
  for (int i = w.length() - 2; i >= 0; --i) {
    Word a(w.letters[i]);
    WordSeries next;
    for (const auto& [u, c] : out.terms()) {
      next.add_term(a.concat(u), c);
      next.add_term(u.concat(a), -c);
    }
    out = std::move(next);
  }
  return out;
}

WordSeries left_bracketing(const WordSeries& s) {
  WordSeries out;
  for (const auto& [w, c] : s.terms()) {
    WordSeries b = left_bracketing(w);
    b *= c;
    out += b;
  }
  return out;
}

WordSeries psi(const Word& w) {
  int n = w.length();
  if (n == 0) return {};
  WordSeries out;
  for (const auto& p : all_permutations(n)) {
    Rational c = eulerian_coefficient(p);
    if (c == 0) continue;
    WordSeries b = left_bracketing(apply_permutation(p, w));
    b *= c / n;
    out += b;
  }
  return out;
}

bool dynkin_check(const WordSeries& p, int n) {
  for (const auto& [w, c] : p.terms())
    if (w.length() != n)
      throw std::invalid_argument("dynkin_check: input not length-homogeneous");
  if (p.terms().empty()) return true;
  WordSeries lhs = left_bracketing(p);
  WordSeries rhs = p;
  rhs *= Rational(n);
  return lhs == rhs;
}

LogFlowmap log_flowmap(LieBasis basis, const AlphabetSpec& spec, int max_grade) {
  LogFlowmap lf;
  lf.basis = basis;
  lf.spec = spec;
  lf.max_grade = max_grade;
  if (basis == LieBasis::J) {
    for (const Word& w : enumerate_words(spec, max_grade)) {
      if (w.empty()) continue;
      WordSeries term = psi(w);
      if (!term.is_zero()) lf.terms.emplace(w, std::move(term));
    }
    return lf;
  }
  // Ito basis: transport the J-form through the functional-side basis
  // change. J_w = sum_u <w-bar^0 expansion>_u I_u, so the coefficient of
  // I_u collects psi(w) over every w whose expansion hits u. The operator
  // words stay in the renormalised coordinates on both sides.
  for (const Word& w : enumerate_words(spec, max_grade)) {
    if (w.empty()) continue;
    WordSeries ps = psi(w);
    WordSeries expansion = zero_word_in_word_basis(ZeroWord(w), spec);
    for (const auto& [u, a] : expansion.terms()) {
      WordSeries piece = ps;
      piece *= a;
      lf.terms[u] += piece;
    }
  }
  std::erase_if(lf.terms,
                [](const auto& kv) { return kv.second.is_zero(); });
  return lf;
}

TensorSeries flowmap_tensor(const LogFlowmap& lf) {
  TensorSeries out;
  for (const auto& [w, term] : lf.terms)
    for (const auto& [u, c] : term.terms()) out.add_term({w, u}, c);
  return out;
}

TensorSeries log_in_word_coordinates(const AlphabetSpec& spec, int max_grade) {
  TensorSeries out;
  for (const Word& w : enumerate_words(spec, max_grade)) {
    if (w.empty()) continue;
    WordSeries log = conv_log_id(ProductKind::Shuffle, w, spec);
    for (const auto& [u, c] : log.terms()) out.add_term({u, w}, c);
  }
  return out;
}

namespace {

// Deshuffle (subset) coproduct: every way to split the letters of w into a
// subsequence and its complement.
TensorSeries deshuffle(const Word& w) {
  TensorSeries out;
  int n = w.length();
  for (int mask = 0; mask < (1 << n); ++mask) {
    Word a, b;
    for (int i = 0; i < n; ++i)
      ((mask >> i) & 1 ? a : b).letters.push_back(w.letters[i]);
    out.add_term({a, b}, 1);
  }
  return out;
}

// k-th convolution power of psi in the (concatenation, deshuffle) bialgebra,
// where psi is the convolution logarithm of the identity.
WordSeries psi_conv_power(const Word& w, int k) {
  if (k == 1) return psi(w);
  WordSeries out;
  TensorSeries cuts = deshuffle(w);
  for (const auto& [p, c] : cuts.terms()) {
    if (p.first.empty() || p.second.empty()) continue;
    WordSeries head = psi(p.first);
    WordSeries tail = psi_conv_power(p.second, k - 1);
    for (const auto& [u, cu] : head.terms())
      for (const auto& [v, cv] : tail.terms())
        out.add_term(u.concat(v), c * cu * cv);
  }
  return out;
}

}  // namespace

bool check_exp_of_log(const AlphabetSpec& spec, int max_grade) {
  for (const Word& w : enumerate_words(spec, max_grade)) {
    if (w.empty()) continue;
    WordSeries acc;
    for (int k = 1; k <= w.length(); ++k) {
      WordSeries term = psi_conv_power(w, k);
      term *= Rational(1) / factorial(k);
      acc += term;
    }
    if (acc != WordSeries(w)) return false;
  }
  return true;
}

}  // namespace levyflow
