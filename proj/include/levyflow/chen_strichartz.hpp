#pragma once

#include <map>
#include <vector>

#include "levyflow/hopf.hpp"
#include "levyflow/words.hpp"

namespace levyflow {

/// A permutation of {1..n}, stored as the image sequence (sigma(1),...,sigma(n)).
struct Permutation {
  std::vector<int> images;

  Permutation() = default;
  explicit Permutation(std::vector<int> im);

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images.at(i - 1); }  // 1-based
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
};

std::vector<Permutation> all_permutations(int n);

/// Number of positions i with sigma(i) > sigma(i+1).
int descents(const Permutation& p);

/// Coefficient c_sigma, read off the convolution log of the identity on a
/// word of n distinct letters (the first Eulerian idempotent).
Rational eulerian_coefficient(const Permutation& p);

/// The two printed closed forms; they disagree from n = 3 on, so callers
/// compare them against eulerian_coefficient rather than trusting either.
Rational eulerian_closed_form_binomial(const Permutation& p);
Rational eulerian_closed_form_reciprocal(const Permutation& p);

/// Positional action: position i of the result holds letter a_{sigma(i)}.
Word apply_permutation(const Permutation& p, const Word& w);

/// [a1...an]_L = [a1,[a2,...[a_{n-1},an]...]] in the concatenation algebra.
WordSeries left_bracketing(const Word& w);
WordSeries left_bracketing(const WordSeries& s);

/// psi(w) = sum_sigma (1/n) c_sigma [sigma(w)]_L.
WordSeries psi(const Word& w);

/// Dynkin-Specht-Wever: P of homogeneous word-length n is a Lie element
/// iff termwise left bracketing returns n*P.
bool dynkin_check(const WordSeries& p, int n);

enum class LieBasis { J, I };

/// log(flowmap) truncated at max_grade: each word maps to the Lie element
/// multiplying its integral coordinate (J_w or I_w).
struct LogFlowmap {
  LieBasis basis = LieBasis::J;
  AlphabetSpec spec;
  int max_grade = 0;
  std::map<Word, WordSeries> terms;
};

LogFlowmap log_flowmap(LieBasis basis, const AlphabetSpec& spec, int max_grade);

/// Same data as one series: sum_w w (x) term(w).
TensorSeries flowmap_tensor(const LogFlowmap& lf);

/// Alternative representation sum_w log_shuffle(w) (x) w; agrees with the
/// psi form after swapping tensor legs.
TensorSeries log_in_word_coordinates(const AlphabetSpec& spec, int max_grade);

/// conv_exp of the J-basis log reproduces Id = sum w (x) w up to max_grade.
bool check_exp_of_log(const AlphabetSpec& spec, int max_grade);

}  // namespace levyflow
