#include "levyflow/words.hpp"

#include <algorithm>
#include <sstream>

namespace levyflow {

int grading(const Letter& a) { return a.base == 0 ? 1 : a.power; }

bool letter_valid(const Letter& a, const AlphabetSpec& spec) {
  if (a.base < 0 || a.base > spec.num_drivers) return false;
  if (a.base == 0) return a.power == 1;
  if (spec.is_wiener(a.base)) return a.power == 1 || a.power == 2;
  return a.power >= 1;
}

std::optional<Letter> bracket(const Letter& a, const Letter& b,
                              const AlphabetSpec& spec) {
  if (a.base == 0 || b.base == 0) return std::nullopt;
  if (a.base != b.base) return std::nullopt;
  if (spec.is_wiener(a.base)) {
    if (a.power == 1 && b.power == 1) return Letter{a.base, 2};
    return std::nullopt;
  }
  return Letter{a.base, a.power + b.power};
}

std::optional<Letter> bracket_fold(const std::vector<Letter>& letters,
                                   const AlphabetSpec& spec) {
  if (letters.empty()) throw std::invalid_argument("bracket_fold: empty input");
  std::optional<Letter> acc = letters.back();
  for (auto it = letters.rbegin() + 1; it != letters.rend(); ++it) {
    if (!acc) return std::nullopt;
    acc = bracket(*it, *acc, spec);
  }
  return acc;
}

std::vector<Letter> enumerate_letters(const AlphabetSpec& spec, int grade) {
  if (grade < 1 || grade > spec.max_grade)
    throw std::out_of_range("enumerate_letters: grade out of range");
  std::vector<Letter> out;
  if (grade == 1) {
    for (int i = 0; i <= spec.num_drivers; ++i) out.push_back({i, 1});
    return out;
  }
  if (grade == 2)
    for (int i = 1; i <= spec.num_wiener; ++i) out.push_back({i, 2});
  for (int i = spec.num_wiener + 1; i <= spec.num_drivers; ++i)
    out.push_back({i, grade});
  std::sort(out.begin(), out.end());
  return out;
}

int Word::grade() const {
  int g = 0;
  for (const auto& a : letters) g += grading(a);
  return g;
}

Word Word::concat(const Word& other) const {
  Word w = *this;
  w.letters.insert(w.letters.end(), other.letters.begin(), other.letters.end());
  return w;
}

bool operator<(const Word& u, const Word& v) {
  int gu = u.grade(), gv = v.grade();
  if (gu != gv) return gu < gv;
  if (u.length() != v.length()) return u.length() < v.length();
  return u.letters < v.letters;
}

std::string to_string(const Letter& a) {
  std::string s = std::to_string(a.base);
  if (a.power > 1) s += "^(" + std::to_string(a.power) + ")";
  return s;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (const auto& a : w.letters) {
    if (!s.empty()) s += ".";
    s += to_string(a);
  }
  return s;
}

Word parse_word(const std::string& text) {
  if (text.empty() || text == "e") return Word{};
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string tok = text.substr(pos, dot == std::string::npos ? dot : dot - pos);
    Letter a;
    auto caret = tok.find("^(");
    if (caret == std::string::npos) {
      a.base = std::stoi(tok);
      a.power = 1;
    } else {
      if (tok.back() != ')') throw std::invalid_argument("bad letter: " + tok);
      a.base = std::stoi(tok.substr(0, caret));
      a.power = std::stoi(tok.substr(caret + 2, tok.size() - caret - 3));
    }
    if (a.base < 0 || a.power < 1) throw std::invalid_argument("bad letter: " + tok);
    letters.push_back(a);
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return Word{std::move(letters)};
}

WordSeries concat_product(const WordSeries& u, const WordSeries& v) {
  WordSeries out;
  for (const auto& [wu, cu] : u.terms())
    for (const auto& [wv, cv] : v.terms()) out.add_term(wu.concat(wv), cu * cv);
  return out;
}

WordSeries truncate(const WordSeries& s, int max_grade) {
  WordSeries out;
  for (const auto& [w, c] : s.terms())
    if (w.grade() <= max_grade) out.add_term(w, c);
  return out;
}

TensorSeries truncate_both(const TensorSeries& s, int max_grade) {
  TensorSeries out;
  for (const auto& [p, c] : s.terms())
    if (p.first.grade() <= max_grade && p.second.grade() <= max_grade)
      out.add_term(p, c);
  return out;
}

namespace {
void extend_words(const AlphabetSpec& spec, const Word& prefix, int budget,
                  std::vector<Word>& out) {
  out.push_back(prefix);
  for (int g = 1; g <= budget; ++g)
    for (const auto& a : enumerate_letters(spec, g)) {
      Word w = prefix;
      w.letters.push_back(a);
      extend_words(spec, w, budget - g, out);
    }
}
}  // namespace

std::vector<Word> enumerate_words(const AlphabetSpec& spec, int max_grade) {
  AlphabetSpec s = spec;
  s.max_grade = std::max(s.max_grade, max_grade);
  std::vector<Word> out;
  extend_words(s, Word{}, max_grade, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const WordSeries& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : s.terms()) {
    if (!first) os << " + ";
    os << to_string(c) << "*" << to_string(w);
    first = false;
  }
  return os.str();
}

}  // namespace levyflow
