#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "levyflow/rational.hpp"

namespace levyflow {

/// A symbol i^(m): driver index `base` raised to bracket power `power`.
/// The time letter is base 0 with power 1; Wiener drivers are 1..d and
/// carry powers 1 and 2 only; drivers above d are pure-jump and carry
/// arbitrary powers.
struct Letter {
  int base = 0;
  int power = 1;

  auto operator<=>(const Letter&) const = default;
};

/// Truncated view of the countable graded alphabet.
struct AlphabetSpec {
  int num_wiener = 0;   // d
  int num_drivers = 0;  // l >= d
  int max_grade = 1;

  bool valid() const {
    return num_wiener >= 0 && num_drivers >= num_wiener && max_grade >= 1;
  }
  bool is_wiener(int base) const { return base >= 1 && base <= num_wiener; }
  bool is_jump(int base) const { return base > num_wiener && base <= num_drivers; }
};

int grading(const Letter& a);

bool letter_valid(const Letter& a, const AlphabetSpec& spec);

/// Bracket product of two letters. Empty optional encodes the scalar zero.
std::optional<Letter> bracket(const Letter& a, const Letter& b,
                              const AlphabetSpec& spec);

/// Right-nested fold [a1,[a2,...]] of a nonempty letter sequence.
std::optional<Letter> bracket_fold(const std::vector<Letter>& letters,
                                   const AlphabetSpec& spec);

/// Letters of the given grade in (base, power) order.
std::vector<Letter> enumerate_letters(const AlphabetSpec& spec, int grade);

struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}
  explicit Word(const Letter& a) : letters{a} {}

  bool empty() const { return letters.empty(); }
  int length() const { return static_cast<int>(letters.size()); }
  int grade() const;

  Word concat(const Word& other) const;
  bool operator==(const Word&) const = default;
};

/// Canonical word order: grade, then length, then lexicographic on letters.
bool operator<(const Word& u, const Word& v);

std::string to_string(const Letter& a);
std::string to_string(const Word& w);
Word parse_word(const std::string& text);

/// Sparse linear combination with exact rational coefficients.
/// Zero coefficients are never stored.
template <class Key>
class Series {
 public:
  using Terms = std::map<Key, Rational>;

  Series() = default;
  explicit Series(const Key& k, Rational c = 1) {
    if (c != 0) terms_[k] = std::move(c);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Series& operator+=(const Series& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
  }
  Series& operator-=(const Series& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, -c);
    return *this;
  }
  Series& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Rational& s) { return a *= s; }
  friend Series operator*(const Rational& s, Series a) { return a *= s; }

  bool operator==(const Series&) const = default;

  template <class Fn>
  auto map_keys(Fn&& fn) const {
    using Out = std::remove_cvref_t<decltype(fn(std::declval<const Key&>()))>;
    Out out;
    for (const auto& [k, c] : terms_) {
      Out piece = fn(k);
      piece *= c;
      out += piece;
    }
    return out;
  }

 private:
  Terms terms_;
};

using WordSeries = Series<Word>;
using WordPair = std::pair<Word, Word>;
using TensorSeries = Series<WordPair>;

WordSeries concat_product(const WordSeries& u, const WordSeries& v);
WordSeries truncate(const WordSeries& s, int max_grade);
TensorSeries truncate_both(const TensorSeries& s, int max_grade);

/// All words of grade <= max_grade, in canonical order (includes the empty word).
std::vector<Word> enumerate_words(const AlphabetSpec& spec, int max_grade);

std::string to_string(const WordSeries& s);

}  // namespace levyflow
