#include "levyflow/vector_fields.hpp"

#include <cctype>
#include <functional>
#include <sstream>

#include "levyflow/basis_change.hpp"

namespace levyflow {

Polynomial Polynomial::constant(int dim, const Rational& c) {
  Polynomial p(dim);
  p.add_term(std::vector<int>(dim, 0), c);
  return p;
}

Polynomial Polynomial::variable(int dim, int index) {
  Polynomial p(dim);
  std::vector<int> e(dim, 0);
  e.at(index) = 1;
  p.add_term(std::move(e), 1);
  return p;
}

void Polynomial::add_term(std::vector<int> expts, const Rational& c) {
  if (static_cast<int>(expts.size()) != dim_)
    throw std::invalid_argument("Polynomial: exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(expts), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::coeff(const std::vector<int>& expts) const {
  auto it = terms_.find(expts);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out(dim_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_) {
      std::vector<int> e = e1;
      for (int i = 0; i < dim_; ++i) e[i] += e2[i];
      out.add_term(std::move(e), c1 * c2);
    }
  return out;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial out(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    std::vector<int> d = e;
    --d[var];
    out.add_term(std::move(d), c * e[var]);
  }
  return out;
}

Polynomial Polynomial::derivative(const std::vector<int>& alpha) const {
  Polynomial out = *this;
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < alpha[i]; ++k) out = out.derivative(i);
  return out;
}

Rational Polynomial::eval(const std::vector<Rational>& x) const {
  Rational r = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < e[i]; ++k) m *= x[i];
    r += m;
  }
  return r;
}

double Polynomial::eval(const std::vector<double>& x) const {
  double r = 0;
  for (const auto& [e, c] : terms_) {
    double m = static_cast<double>(c);
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < e[i]; ++k) m *= x[i];
    r += m;
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    os << to_string(c);
    for (int i = 0; i < dim_; ++i) {
      if (e[i] == 0) continue;
      os << "*x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
    first = false;
  }
  return os.str();
}

namespace {

struct PolyParser {
  const std::string& s;
  std::size_t pos = 0;
  int dim;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(pos) + ": " + what);
  }

  Polynomial parse_expr() {
    Polynomial acc(dim);
    bool neg = eat('-');
    acc += parse_term() * Rational(neg ? -1 : 1);
    while (true) {
      skip_ws();
      if (eat('+'))
        acc += parse_term();
      else if (eat('-'))
        acc -= parse_term();
      else
        break;
    }
    return acc;
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (eat('*')) acc = acc * parse_factor();
    return acc;
  }

  Polynomial parse_factor() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    if (s[pos] == '(') {
      ++pos;
      Polynomial inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return maybe_pow(inner);
    }
    if (s[pos] == 'x') {
      ++pos;
      int idx = parse_int();
      if (idx < 1 || idx > dim) fail("variable index out of range");
      return maybe_pow(Polynomial::variable(dim, idx - 1));
    }
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      Integer num = parse_int();
      Integer den = 1;
      if (eat('/')) den = parse_int();
      if (den == 0) fail("zero denominator");
      return Polynomial::constant(dim, Rational(num, den));
    }
    fail("unexpected character");
  }

  Polynomial maybe_pow(Polynomial base) {
    if (eat('^')) {
      int k = parse_int();
      Polynomial out = Polynomial::constant(dim, 1);
      for (int i = 0; i < k; ++i) out = out * base;
      return out;
    }
    return base;
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return std::stoi(s.substr(start, pos - start));
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int dim) {
  PolyParser p{text, 0, dim};
  Polynomial out = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

bool PolyVectorField::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& other) {
  if (dim() != other.dim())
    throw std::invalid_argument("vector field dimension mismatch");
  for (int i = 0; i < dim(); ++i) components[i] += other.components[i];
  return *this;
}

PolyVectorField& PolyVectorField::operator*=(const Rational& s) {
  for (auto& c : components) c *= s;
  return *this;
}

void DiffOperator::add_term(const std::vector<int>& alpha, const Polynomial& p) {
  int order = 0;
  for (int a : alpha) order += a;
  if (order < 1) throw std::invalid_argument("DiffOperator: |alpha| must be >= 1");
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& other) {
  for (const auto& [a, p] : other.terms_) add_term(a, p);
  return *this;
}

DiffOperator& DiffOperator::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, p] : terms_) p *= s;
  return *this;
}

int DiffOperator::order() const {
  int m = 0;
  for (const auto& [a, p] : terms_) {
    int o = 0;
    for (int x : a) o += x;
    m = std::max(m, o);
  }
  return m;
}

PolyVectorField prelie_vf(const PolyVectorField& v, const PolyVectorField& w) {
  if (v.dim() != w.dim())
    throw std::invalid_argument("prelie_vf: dimension mismatch");
  int n = v.dim();
  std::vector<Polynomial> comps;
  comps.reserve(n);
  for (int i = 0; i < n; ++i) {
    Polynomial acc(n);
    for (int j = 0; j < n; ++j)
      acc += v.components[j] * w.components[i].derivative(j);
    comps.push_back(std::move(acc));
  }
  return PolyVectorField(std::move(comps));
}

namespace {
void multi_indices_of_order(int dim, int m, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == static_cast<std::size_t>(dim)) {
    cur.push_back(m);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = 0; k <= m; ++k) {
    cur.push_back(k);
    multi_indices_of_order(dim, m - k, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> multi_indices(int dim, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  multi_indices_of_order(dim, m, cur, out);
  return out;
}

Rational multi_factorial(const std::vector<int>& alpha) {
  Rational r = 1;
  for (int a : alpha) r *= factorial(a);
  return r;
}
}  // namespace

DiffOperator diff_op_D(const PolyVectorField& v, int m) {
  if (m < 1) throw std::invalid_argument("diff_op_D: m must be >= 1");
  int n = v.dim();
  DiffOperator out(n);
  for (const auto& alpha : multi_indices(n, m)) {
    Polynomial p = Polynomial::constant(n, 1);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < alpha[i]; ++k) p = p * v.components[i];
    p *= Rational(1) / multi_factorial(alpha);
    out.add_term(alpha, p);
  }
  return out;
}

DiffOperator vf_as_operator(const PolyVectorField& v) { return diff_op_D(v, 1); }

DiffOperator compose_ops(const DiffOperator& a, const DiffOperator& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("compose_ops: dimension mismatch");
  int n = a.dim();
  DiffOperator out(n);
  for (const auto& [alpha, p] : a.terms()) {
    // d^alpha (q d^beta .) by Leibniz: split alpha = gamma + (alpha - gamma).
    std::vector<std::vector<int>> gammas;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        gammas.push_back(cur);
        return;
      }
      for (int k = 0; k <= alpha[i]; ++k) {
        cur.push_back(k);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
    for (const auto& [beta, q] : b.terms())
      for (const auto& gamma : gammas) {
        Rational binom_prod = 1;
        std::vector<int> delta(n);
        for (int i = 0; i < n; ++i) {
          binom_prod *= binomial(alpha[i], gamma[i]);
          delta[i] = alpha[i] - gamma[i] + beta[i];
        }
        Polynomial dq = q.derivative(gamma);
        if (dq.is_zero()) continue;
        out.add_term(delta, p * dq * binom_prod);
      }
  }
  return out;
}

Polynomial apply_op(const DiffOperator& a, const Polynomial& f) {
  Polynomial out(a.dim());
  for (const auto& [alpha, p] : a.terms()) out += p * f.derivative(alpha);
  return out;
}

PolyVectorField renormalised_vf(const PolyVectorField& v, int n) {
  if (n < 1) throw std::invalid_argument("renormalised_vf: n must be >= 1");
  std::vector<PolyVectorField> omega(n + 1);
  omega[1] = v;
  for (int m = 2; m <= n; ++m) {
    PolyVectorField sum(std::vector<Polynomial>(v.dim(), Polynomial(v.dim())));
    for (int k = 1; k <= m - 1; ++k) {
      Rational bk = bernoulli(k);
      if (bk == 0) continue;
      PolyVectorField inner(std::vector<Polynomial>(v.dim(), Polynomial(v.dim())));
      std::function<void(int, int, const PolyVectorField&)> rec =
          [&](int slot, int remaining, const PolyVectorField& tail) {
            if (slot < 0) {
              if (remaining == 0) inner += tail;
              return;
            }
            for (int i = 1; i <= remaining - slot; ++i)
              rec(slot - 1, remaining - i, prelie_vf(omega[i], tail));
          };
      rec(k - 1, m - 1, v);
      inner *= bk / factorial(k);
      sum += inner;
    }
    omega[m] = sum;
  }
  return omega[n];
}

DiffOperator renormalised_op_from_words(const PolyVectorField& v, int m) {
  // Formal alphabet with a single jump driver so every composition of m
  // appears in the Hoffman logarithm.
  AlphabetSpec spec{0, 1, std::max(m, 1)};
  WordSeries log = hoffman_log_letter(Letter{1, m}, spec);
  DiffOperator out(v.dim());
  for (const auto& [w, c] : log.terms()) {
    DiffOperator composed = diff_op_D(v, w.letters.front().power);
    for (std::size_t i = 1; i < w.letters.size(); ++i)
      composed = compose_ops(composed, diff_op_D(v, w.letters[i].power));
    composed *= c;
    out += composed;
  }
  return out;
}

namespace {
// V^(k)(W_1,...,W_k): each component j is
// sum_{l_1..l_k} W_1^{l_1}...W_k^{l_k} d_{l_1..l_k} V^j.
Polynomial iterated_directional(const Polynomial& base,
                                const std::vector<PolyVectorField>& dirs,
                                std::size_t idx) {
  if (idx == dirs.size()) return base;
  int n = base.dim();
  Polynomial acc(n);
  for (int l = 0; l < n; ++l) {
    Polynomial d = base.derivative(l);
    if (d.is_zero()) continue;
    acc += dirs[idx].components[l] * iterated_directional(d, dirs, idx + 1);
  }
  return acc;
}
}  // namespace

PolyVectorField elementary_differential(
    const DecoratedTree& t, const std::vector<PolyVectorField>& fields) {
  if (t.decoration < 0 || t.decoration >= static_cast<int>(fields.size()))
    throw std::invalid_argument("elementary_differential: unknown decoration");
  const PolyVectorField& base = fields[t.decoration];
  if (t.children.empty()) return base;
  std::vector<PolyVectorField> dirs;
  dirs.reserve(t.children.size());
  for (const auto& c : t.children)
    dirs.push_back(elementary_differential(c, fields));
  int n = base.dim();
  std::vector<Polynomial> comps;
  comps.reserve(n);
  for (int j = 0; j < n; ++j)
    comps.push_back(iterated_directional(base.components[j], dirs, 0));
  return PolyVectorField(std::move(comps));
}

bool is_derivation(const DiffOperator& a,
                   const std::vector<std::pair<Polynomial, Polynomial>>& trials) {
  for (const auto& [f, g] : trials) {
    Polynomial lhs = apply_op(a, f * g);
    Polynomial rhs = apply_op(a, f) * g + f * apply_op(a, g);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace levyflow
