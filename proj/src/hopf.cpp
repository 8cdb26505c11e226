#include "levyflow/hopf.hpp"

namespace levyflow {

namespace {

WordSeries append_letter(const WordSeries& s, const Letter& a) {
  WordSeries out;
  for (const auto& [w, c] : s.terms()) {
    Word wa = w;
    wa.letters.push_back(a);
    out.add_term(wa, c);
  }
  return out;
}

WordSeries product_rec(ProductKind kind, const Word& u, const Word& v,
                       const AlphabetSpec& spec) {
  if (u.empty()) return WordSeries(v);
  if (v.empty()) return WordSeries(u);
  Letter a = u.letters.back();
  Letter b = v.letters.back();
  Word u0(std::vector<Letter>(u.letters.begin(), u.letters.end() - 1));
  Word v0(std::vector<Letter>(v.letters.begin(), v.letters.end() - 1));

  WordSeries out = append_letter(product_rec(kind, u0, v, spec), a);
  out += append_letter(product_rec(kind, u, v0, spec), b);
  if (kind == ProductKind::QuasiShuffle) {
    if (auto ab = bracket(a, b, spec))
      out += append_letter(product_rec(kind, u0, v0, spec), *ab);
  }
  return out;
}

}  // namespace

WordSeries quasi_shuffle(const Word& u, const Word& v, const AlphabetSpec& spec) {
  return product_rec(ProductKind::QuasiShuffle, u, v, spec);
}

WordSeries shuffle(const Word& u, const Word& v) {
  return product_rec(ProductKind::Shuffle, u, v, AlphabetSpec{});
}

WordSeries product(ProductKind kind, const Word& u, const Word& v,
                   const AlphabetSpec& spec) {
  return product_rec(kind, u, v, spec);
}

WordSeries product(ProductKind kind, const WordSeries& u, const WordSeries& v,
                   const AlphabetSpec& spec) {
  WordSeries out;
  for (const auto& [wu, cu] : u.terms())
    for (const auto& [wv, cv] : v.terms()) {
      WordSeries p = product_rec(kind, wu, wv, spec);
      p *= cu * cv;
      out += p;
    }
  return out;
}

TensorSeries deconcat(const Word& w) {
  TensorSeries out;
  const auto& ls = w.letters;
  for (std::size_t i = 0; i <= ls.size(); ++i) {
    Word left(std::vector<Letter>(ls.begin(), ls.begin() + i));
    Word right(std::vector<Letter>(ls.begin() + i, ls.end()));
    out.add_term({left, right}, 1);
  }
  return out;
}

TensorSeries dequasishuffle(const Word& w, const AlphabetSpec& spec) {
  TensorSeries acc;
  acc.add_term({Word{}, Word{}}, 1);
  for (const auto& a : w.letters) {
    // Coproduct of a single letter.
    std::vector<std::pair<WordPair, Rational>> letter_terms;
    letter_terms.push_back({{Word(a), Word{}}, 1});
    letter_terms.push_back({{Word{}, Word(a)}, 1});
    int g = grading(a);
    AlphabetSpec wide = spec;
    wide.max_grade = std::max(wide.max_grade, g);
    for (int g1 = 1; g1 < g; ++g1)
      for (const auto& a1 : enumerate_letters(wide, g1))
        for (const auto& a2 : enumerate_letters(wide, g - g1))
          if (auto br = bracket(a1, a2, spec); br && *br == a)
            letter_terms.push_back({{Word(a1), Word(a2)}, 1});

    TensorSeries next;
    for (const auto& [p, c] : acc.terms())
      for (const auto& [q, cq] : letter_terms)
        next.add_term({p.first.concat(q.first), p.second.concat(q.second)},
                      c * cq);
    acc = std::move(next);
  }
  return acc;
}

Rational pairing(const Word& u, const Word& w) { return u == w ? 1 : 0; }

Rational pairing(const WordSeries& u, const WordSeries& w) {
  Rational r = 0;
  const auto& small = u.size() <= w.size() ? u : w;
  const auto& big = u.size() <= w.size() ? w : u;
  for (const auto& [k, c] : small.terms()) r += c * big.coeff(k);
  return r;
}

Rational pairing(const TensorSeries& u, const TensorSeries& w) {
  Rational r = 0;
  const auto& small = u.size() <= w.size() ? u : w;
  const auto& big = u.size() <= w.size() ? w : u;
  for (const auto& [k, c] : small.terms()) r += c * big.coeff(k);
  return r;
}

WordSeries GradedEndomorphism::apply(const Word& w) const {
  auto it = state_->memo.find(w);
  if (it != state_->memo.end()) return it->second;
  WordSeries r = state_->rule(w);
  state_->memo.emplace(w, r);
  return r;
}

WordSeries GradedEndomorphism::apply(const WordSeries& s) const {
  WordSeries out;
  for (const auto& [w, c] : s.terms()) {
    WordSeries piece = apply(w);
    piece *= c;
    out += piece;
  }
  return out;
}

GradedEndomorphism convolve(const GradedEndomorphism& f,
                            const GradedEndomorphism& g, ProductKind kind,
                            const AlphabetSpec& spec) {
  return GradedEndomorphism([=](const Word& w) {
    WordSeries out;
    TensorSeries cuts = deconcat(w);
    for (const auto& [p, c] : cuts.terms()) {
      WordSeries piece = product(kind, f.apply(p.first), g.apply(p.second), spec);
      piece *= c;
      out += piece;
    }
    return out;
  });
}

GradedEndomorphism identity_endo() {
  return GradedEndomorphism([](const Word& w) { return WordSeries(w); });
}

GradedEndomorphism zero_endo() {
  return GradedEndomorphism([](const Word&) { return WordSeries{}; });
}

WordSeries conv_log_id(ProductKind kind, const Word& w, const AlphabetSpec& spec) {
  // J = Id - unit o counit vanishes on the empty word, so the series stops
  // at k = |w|.
  auto proj = [](const Word& u) {
    return u.empty() ? WordSeries{} : WordSeries(u);
  };
  GradedEndomorphism j{proj};
  GradedEndomorphism power = j;
  WordSeries out;
  int n = w.length();
  for (int k = 1; k <= n; ++k) {
    WordSeries term = power.apply(w);
    term *= Rational((k % 2 == 1) ? 1 : -1, k);
    out += term;
    if (k < n) power = convolve(power, j, kind, spec);
  }
  return out;
}

GradedEndomorphism conv_log_id_endo(ProductKind kind, const AlphabetSpec& spec) {
  return GradedEndomorphism(
      [=](const Word& w) { return conv_log_id(kind, w, spec); });
}

GradedEndomorphism conv_exp(const GradedEndomorphism& f, ProductKind kind,
                            const AlphabetSpec& spec) {
  if (!f.apply(Word{}).is_zero())
    throw std::invalid_argument("conv_exp: input must vanish on the empty word");
  return GradedEndomorphism([=](const Word& w) {
    if (w.empty()) {
      // k = 0 term; all higher powers vanish on the empty word.
      WordSeries out;
      out.add_term(Word{}, 1);
      return out;
    }
    GradedEndomorphism power = f;
    int n = w.length();
    WordSeries acc;
    for (int k = 1; k <= n; ++k) {
      WordSeries term = power.apply(w);
      term *= Rational(1) / factorial(k);
      acc += term;
      if (k < n) power = convolve(power, f, kind, spec);
    }
    return acc;
  });
}

}  // namespace levyflow
