#pragma once

#include "levyflow/hopf.hpp"
#include "levyflow/words.hpp"

namespace levyflow {

/// A word read in the (A^0)* basis. Structurally identical to Word; kept as
/// a distinct type so the two bases cannot be mixed silently.
struct ZeroWord {
  Word word;

  ZeroWord() = default;
  explicit ZeroWord(Word w) : word(std::move(w)) {}
  explicit ZeroWord(const Letter& a) : word(a) {}

  bool empty() const { return word.empty(); }
  int length() const { return word.length(); }
  int grade() const { return word.grade(); }
  ZeroWord concat(const ZeroWord& other) const {
    return ZeroWord(word.concat(other.word));
  }

  bool operator==(const ZeroWord&) const = default;
  friend bool operator<(const ZeroWord& u, const ZeroWord& v) {
    return u.word < v.word;
  }
};

using ZeroSeries = Series<ZeroWord>;

std::string to_string(const ZeroWord& w);
std::string to_string(const ZeroSeries& s);

/// Ordered compositions of n, colexicographic.
std::vector<std::vector<int>> compositions(int n);

/// The generator a^0bar written in Abar* coordinates (convolution-log form).
WordSeries hoffman_log_letter(const Letter& a, const AlphabetSpec& spec);

/// The letter abar expanded over (A^0bar)* words (exponential form).
ZeroSeries hoffman_exp_letter(const Letter& a, const AlphabetSpec& spec);

/// Split w into blocks of sizes c, bracket-fold each block, concatenate.
/// Zero series when any block folds to zero.
WordSeries contract(const std::vector<int>& c, const Word& w,
                    const AlphabetSpec& spec);

WordSeries zero_word_in_word_basis(const ZeroWord& w0, const AlphabetSpec& spec);
ZeroSeries word_in_zero_basis(const Word& w, const AlphabetSpec& spec);

/// Linear extensions of the two basis changes.
ZeroSeries to_zero_basis(const WordSeries& s, const AlphabetSpec& spec);
WordSeries to_word_basis(const ZeroSeries& s, const AlphabetSpec& spec);

/// Letterwise Hoffman exponential, multiplied by concatenation.
ZeroSeries exp_H_dagger(const Word& w, const AlphabetSpec& spec);

/// Checks Id = sum w (x) wbar = sum w^0 (x) wbar^0 gradewise up to max_grade.
bool verify_id_reexpansion(const AlphabetSpec& spec, int max_grade);

}  // namespace levyflow
