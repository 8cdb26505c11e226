#include "levyflow/basis_change.hpp"

namespace levyflow {

std::string to_string(const ZeroWord& w) {
  return w.empty() ? "e0" : "(" + to_string(w.word) + ")0";
}

std::string to_string(const ZeroSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*" + to_string(w);
  }
  return out;
}

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  // Colex: recurse on the last part.
  for (int last = 1; last <= n; ++last)
    for (auto head : compositions(n - last)) {
      head.push_back(last);
      out.push_back(std::move(head));
    }
  return out;
}

namespace {

// Words a_1...a_n with [a_1,...,a_n] = a, grouped with one coefficient rule.
template <class Coeff>
WordSeries letter_decompositions(const Letter& a, const AlphabetSpec& spec,
                                 Coeff coeff) {
  WordSeries out;
  int m = grading(a);
  for (const auto& comp : compositions(m)) {
    std::vector<Letter> letters;
    letters.reserve(comp.size());
    bool ok = true;
    for (int j : comp) {
      Letter b{a.base, j};
      if (a.base == 0) b = Letter{0, 1};
      if (!letter_valid(b, spec)) {
        ok = false;
        break;
      }
      letters.push_back(b);
    }
    if (!ok) continue;
    auto folded = bracket_fold(letters, spec);
    if (!folded || !(*folded == a)) continue;
    out.add_term(Word{letters}, coeff(static_cast<int>(comp.size())));
  }
  return out;
}

}  // namespace

WordSeries hoffman_log_letter(const Letter& a, const AlphabetSpec& spec) {
  return letter_decompositions(a, spec, [](int n) {
    return Rational((n % 2 == 1) ? 1 : -1, n);
  });
}

ZeroSeries hoffman_exp_letter(const Letter& a, const AlphabetSpec& spec) {
  WordSeries plain = letter_decompositions(
      a, spec, [](int n) { return Rational(1) / factorial(n); });
  ZeroSeries out;
  for (const auto& [w, c] : plain.terms()) out.add_term(ZeroWord(w), c);
  return out;
}

WordSeries contract(const std::vector<int>& c, const Word& w,
                    const AlphabetSpec& spec) {
  int total = 0;
  for (int p : c) total += p;
  if (total != w.length())
    throw std::invalid_argument("contract: composition does not match word length");
  std::vector<Letter> letters;
  std::size_t pos = 0;
  for (int p : c) {
    std::vector<Letter> block(w.letters.begin() + pos, w.letters.begin() + pos + p);
    pos += p;
    auto folded = bracket_fold(block, spec);
    if (!folded) return WordSeries{};
    letters.push_back(*folded);
  }
  return WordSeries(Word{letters});
}

WordSeries zero_word_in_word_basis(const ZeroWord& w0, const AlphabetSpec& spec) {
  const Word& w = w0.word;
  if (w.empty()) return WordSeries(Word{});
  WordSeries out;
  for (const auto& comp : compositions(w.length())) {
    Rational coeff = 1;
    for (int p : comp) coeff /= factorial(p);
    WordSeries piece = contract(comp, w, spec);
    piece *= coeff;
    out += piece;
  }
  return out;
}

ZeroSeries word_in_zero_basis(const Word& w, const AlphabetSpec& spec) {
  if (w.empty()) return ZeroSeries(ZeroWord{});
  ZeroSeries out;
  int n = w.length();
  for (const auto& comp : compositions(n)) {
    Rational coeff(((n - static_cast<int>(comp.size())) % 2 == 0) ? 1 : -1, 1);
    for (int p : comp) coeff /= p;
    // Brackets are formed on the underlying letters; the result is read in
    // the zero basis.
    WordSeries piece = contract(comp, w, spec);
    for (const auto& [u, c] : piece.terms())
      out.add_term(ZeroWord(u), c * coeff);
  }
  return out;
}

ZeroSeries to_zero_basis(const WordSeries& s, const AlphabetSpec& spec) {
  ZeroSeries out;
  for (const auto& [w, c] : s.terms()) {
    ZeroSeries piece = word_in_zero_basis(w, spec);
    piece *= c;
    out += piece;
  }
  return out;
}

WordSeries to_word_basis(const ZeroSeries& s, const AlphabetSpec& spec) {
  WordSeries out;
  for (const auto& [w, c] : s.terms()) {
    WordSeries piece = zero_word_in_word_basis(w, spec);
    piece *= c;
    out += piece;
  }
  return out;
}

ZeroSeries exp_H_dagger(const Word& w, const AlphabetSpec& spec) {
  ZeroSeries acc(ZeroWord{});
  for (const auto& a : w.letters) {
    ZeroSeries next;
    ZeroSeries letter = hoffman_exp_letter(a, spec);
    for (const auto& [u, cu] : acc.terms())
      for (const auto& [v, cv] : letter.terms())
        next.add_term(u.concat(v), cu * cv);
    acc = std::move(next);
  }
  return acc;
}

bool verify_id_reexpansion(const AlphabetSpec& spec, int max_grade) {
  // Expand every w^0 (x) wbar^0 into A-coordinates and compare against
  // sum_w w (x) wbar.
  TensorSeries expanded, expected;
  for (const auto& w : enumerate_words(spec, max_grade)) {
    expected.add_term({w, w}, 1);

    WordSeries left = zero_word_in_word_basis(ZeroWord(w), spec);
    WordSeries right(Word{});
    for (const auto& a : w.letters)
      right = concat_product(right, hoffman_log_letter(a, spec));
    for (const auto& [u, cu] : left.terms())
      for (const auto& [v, cv] : right.terms())
        expanded.add_term({u, v}, cu * cv);
  }
  return expanded == expected;
}

}  // namespace levyflow
