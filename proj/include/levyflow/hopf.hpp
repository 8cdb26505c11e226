#pragma once

#include <functional>
#include <memory>

#include "levyflow/words.hpp"

namespace levyflow {

enum class ProductKind { Shuffle, QuasiShuffle };

WordSeries quasi_shuffle(const Word& u, const Word& v, const AlphabetSpec& spec);
WordSeries shuffle(const Word& u, const Word& v);

WordSeries product(ProductKind kind, const Word& u, const Word& v,
                   const AlphabetSpec& spec);
WordSeries product(ProductKind kind, const WordSeries& u, const WordSeries& v,
                   const AlphabetSpec& spec);

/// Deconcatenation coproduct: n+1 cuts of a length-n word.
TensorSeries deconcat(const Word& w);

/// De-quasi-shuffle coproduct on the dual (concatenation) side.
TensorSeries dequasishuffle(const Word& w, const AlphabetSpec& spec);

Rational pairing(const Word& u, const Word& w);
Rational pairing(const WordSeries& u, const WordSeries& w);
Rational pairing(const TensorSeries& u, const TensorSeries& w);

/// Linear map given by its action on basis words, evaluated lazily and
/// memoized per word.
class GradedEndomorphism {
 public:
  using Rule = std::function<WordSeries(const Word&)>;

  explicit GradedEndomorphism(Rule rule)
      : state_(std::make_shared<State>(std::move(rule))) {}

  WordSeries apply(const Word& w) const;
  WordSeries apply(const WordSeries& s) const;

 private:
  struct State {
    explicit State(Rule r) : rule(std::move(r)) {}
    Rule rule;
    std::map<Word, WordSeries> memo;
  };
  std::shared_ptr<State> state_;
};

/// Convolution f*g = product o (f (x) g) o deconcat.
GradedEndomorphism convolve(const GradedEndomorphism& f,
                            const GradedEndomorphism& g, ProductKind kind,
                            const AlphabetSpec& spec);

/// log*(Id) evaluated on one basis word; terminates at k = |w|.
WordSeries conv_log_id(ProductKind kind, const Word& w, const AlphabetSpec& spec);

GradedEndomorphism conv_log_id_endo(ProductKind kind, const AlphabetSpec& spec);

/// Convolution exponential of f; requires f(1) = 0.
GradedEndomorphism conv_exp(const GradedEndomorphism& f, ProductKind kind,
                            const AlphabetSpec& spec);

GradedEndomorphism identity_endo();
GradedEndomorphism zero_endo();

}  // namespace levyflow
