#pragma once

#include <string>
#include <vector>

#include "levyflow/trees.hpp"
#include "levyflow/words.hpp"

namespace levyflow {

/// Multivariate polynomial with exact rational coefficients; keys are
/// exponent multi-indices of fixed length.
class Polynomial {
 public:
  using Terms = std::map<std::vector<int>, Rational>;

  explicit Polynomial(int dim = 1) : dim_(dim) {}
  static Polynomial constant(int dim, const Rational& c);
  static Polynomial variable(int dim, int index);  // x_{index}, 0-based

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::vector<int> expts, const Rational& c);
  Rational coeff(const std::vector<int>& expts) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  Polynomial operator*(const Polynomial& other) const;
  bool operator==(const Polynomial&) const = default;

  Polynomial derivative(int var) const;
  Polynomial derivative(const std::vector<int>& alpha) const;
  Rational eval(const std::vector<Rational>& x) const;
  double eval(const std::vector<double>& x) const;

  std::string str() const;

 private:
  int dim_;
  Terms terms_;
};

/// Parses e.g. "x1^2*x2 - 3/2*x1 + 1" over variables x1..xN.
Polynomial parse_polynomial(const std::string& text, int dim);

struct PolyVectorField {
  std::vector<Polynomial> components;  // one per coordinate

  PolyVectorField() = default;
  explicit PolyVectorField(std::vector<Polynomial> comps)
      : components(std::move(comps)) {}

  int dim() const { return static_cast<int>(components.size()); }
  bool is_zero() const;

  PolyVectorField& operator+=(const PolyVectorField& other);
  PolyVectorField& operator*=(const Rational& s);
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) {
    return a += b;
  }
  friend PolyVectorField operator*(PolyVectorField a, const Rational& s) {
    return a *= s;
  }
  bool operator==(const PolyVectorField&) const = default;
};

/// Differential operator sum_alpha p_alpha d^alpha with |alpha| >= 1.
class DiffOperator {
 public:
  using Terms = std::map<std::vector<int>, Polynomial>;

  explicit DiffOperator(int dim = 1) : dim_(dim) {}

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<int>& alpha, const Polynomial& p);

  DiffOperator& operator+=(const DiffOperator& other);
  DiffOperator& operator*=(const Rational& s);
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) {
    return a += b;
  }
  friend DiffOperator operator*(DiffOperator a, const Rational& s) {
    return a *= s;
  }
  bool operator==(const DiffOperator&) const = default;

  /// Max |alpha| with a nonzero term; 0 for the zero operator.
  int order() const;

 private:
  int dim_;
  Terms terms_;
};

/// (V |> W)^i = sum_j V^j d_j W^i.
PolyVectorField prelie_vf(const PolyVectorField& v, const PolyVectorField& w);

/// D_{i^(m)} = sum_{|alpha|=m} (1/alpha!) V^alpha d^alpha.
DiffOperator diff_op_D(const PolyVectorField& v, int m);

DiffOperator compose_ops(const DiffOperator& a, const DiffOperator& b);
Polynomial apply_op(const DiffOperator& a, const Polynomial& f);

DiffOperator vf_as_operator(const PolyVectorField& v);

/// n-th component of the pre-Lie Magnus expansion of V under |>.
PolyVectorField renormalised_vf(const PolyVectorField& v, int n);

/// mu-bar evaluated on the Hoffman logarithm of i^(m): alternating sums of
/// compositions of the D operators.
DiffOperator renormalised_op_from_words(const PolyVectorField& v, int m);

PolyVectorField elementary_differential(const DecoratedTree& t,
                                        const std::vector<PolyVectorField>& fields);

bool is_derivation(const DiffOperator& a,
                   const std::vector<std::pair<Polynomial, Polynomial>>& trials);

}  // namespace levyflow
