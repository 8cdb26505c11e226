#pragma once

#include <string>
#include <vector>

#include "levyflow/words.hpp"

namespace levyflow {

/// Non-planar rooted tree with integer vertex decorations. Children are kept
/// sorted by canonical encoding, so isomorphic trees compare equal.
struct DecoratedTree {
  int decoration = 0;
  std::vector<DecoratedTree> children;

  DecoratedTree() = default;
  explicit DecoratedTree(int dec, std::vector<DecoratedTree> ch = {});

  int vertex_count() const;

  bool operator==(const DecoratedTree&) const = default;
  friend bool operator<(const DecoratedTree& a, const DecoratedTree& b);
};

/// Multiset of trees in canonical order; empty forest is the unit.
struct Forest {
  std::vector<DecoratedTree> trees;

  Forest() = default;
  explicit Forest(std::vector<DecoratedTree> ts);
  explicit Forest(const DecoratedTree& t) : trees{t} {}

  bool empty() const { return trees.empty(); }
  int degree() const;
  Forest merged(const Forest& other) const;

  bool operator==(const Forest&) const = default;
  friend bool operator<(const Forest& a, const Forest& b);
};

using ForestSeries = Series<Forest>;

std::string to_string(const DecoratedTree& t);
std::string to_string(const Forest& f);
std::string to_string(const ForestSeries& s);
DecoratedTree parse_tree(const std::string& text);

DecoratedTree b_plus(const Forest& f, int decoration);

/// Grafting: attach t1's root under each vertex of t2 in turn.
ForestSeries graft(const DecoratedTree& t1, const DecoratedTree& t2);

/// Guin-Oudom extension of grafting to forests.
ForestSeries go_extend(const Forest& x, const Forest& y);
ForestSeries go_extend(const ForestSeries& x, const ForestSeries& y);

ForestSeries grossman_larson(const Forest& x, const Forest& y);
ForestSeries grossman_larson(const ForestSeries& x, const ForestSeries& y);

/// Forest (symmetric-algebra) product, bilinear.
ForestSeries forest_product(const ForestSeries& x, const ForestSeries& y);

/// exp(x) = sum_n x^n/n! with x^n the forest of n single vertices.
ForestSeries gl_exp(int decoration, int max_degree);

/// log* in the Grossman-Larson algebra; input must have unit coefficient 1.
ForestSeries gl_log_star(const ForestSeries& g, int max_degree);

ForestSeries truncate_degree(const ForestSeries& s, int max_degree);
ForestSeries degree_component(const ForestSeries& s, int degree);

/// Degree-n component of the pre-Lie Magnus expansion as a tree series.
ForestSeries magnus_recursion(int n, int decoration);

Rational bernoulli(int k);

Integer symmetry_factor(const DecoratedTree& t);

/// Coefficient of tau in the pre-Lie Magnus tree expansion, extracted from
/// log*(exp(x)).
Rational tree_coefficient(const DecoratedTree& t);

/// All trees with the given vertex count, single decoration.
std::vector<DecoratedTree> enumerate_trees(int degree, int decoration);

}  // namespace levyflow
