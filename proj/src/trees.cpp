#include "levyflow/trees.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace levyflow {

DecoratedTree::DecoratedTree(int dec, std::vector<DecoratedTree> ch)
    : decoration(dec), children(std::move(ch)) {
  std::sort(children.begin(), children.end());
}

int DecoratedTree::vertex_count() const {
  int n = 1;
  for (const auto& c : children) n += c.vertex_count();
  return n;
}

bool operator<(const DecoratedTree& a, const DecoratedTree& b) {
  if (a.decoration != b.decoration) return a.decoration < b.decoration;
  return std::lexicographical_compare(a.children.begin(), a.children.end(),
                                      b.children.begin(), b.children.end());
}

Forest::Forest(std::vector<DecoratedTree> ts) : trees(std::move(ts)) {
  std::sort(trees.begin(), trees.end());
}

int Forest::degree() const {
  int n = 0;
  for (const auto& t : trees) n += t.vertex_count();
  return n;
}

Forest Forest::merged(const Forest& other) const {
  std::vector<DecoratedTree> ts = trees;
  ts.insert(ts.end(), other.trees.begin(), other.trees.end());
  return Forest(std::move(ts));
}

bool operator<(const Forest& a, const Forest& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.trees.begin(), a.trees.end(),
                                      b.trees.begin(), b.trees.end());
}

std::string to_string(const DecoratedTree& t) {
  std::string s = "[" + std::to_string(t.decoration);
  for (const auto& c : t.children) s += to_string(c);
  return s + "]";
}

std::string to_string(const Forest& f) {
  if (f.empty()) return "1";
  std::string s;
  for (const auto& t : f.trees) s += to_string(t);
  return s;
}

std::string to_string(const ForestSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [f, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*" + to_string(f);
  }
  return out;
}

namespace {
DecoratedTree parse_tree_at(const std::string& text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '[')
    throw std::invalid_argument("parse_tree: expected '['");
  ++pos;
  std::size_t start = pos;
  while (pos < text.size() && (std::isdigit(text[pos]) || text[pos] == '-')) ++pos;
  if (start == pos) throw std::invalid_argument("parse_tree: missing decoration");
  int dec = std::stoi(text.substr(start, pos - start));
  std::vector<DecoratedTree> children;
  while (pos < text.size() && text[pos] == '[')
    children.push_back(parse_tree_at(text, pos));
  if (pos >= text.size() || text[pos] != ']')
    throw std::invalid_argument("parse_tree: expected ']'");
  ++pos;
  return DecoratedTree(dec, std::move(children));
}
}  // namespace

DecoratedTree parse_tree(const std::string& text) {
  std::size_t pos = 0;
  DecoratedTree t = parse_tree_at(text, pos);
  if (pos != text.size()) throw std::invalid_argument("parse_tree: trailing input");
  return t;
}

DecoratedTree b_plus(const Forest& f, int decoration) {
  return DecoratedTree(decoration, f.trees);
}

namespace {
// Attach `sub`'s root under each vertex of `host`, accumulating one term per
// vertex.
void graft_at_each_vertex(const DecoratedTree& sub, const DecoratedTree& host,
                          ForestSeries& out) {
  {
    DecoratedTree t = host;
    t.children.push_back(sub);
    std::sort(t.children.begin(), t.children.end());
    out.add_term(Forest(t), 1);
  }
  for (std::size_t i = 0; i < host.children.size(); ++i) {
    ForestSeries inner;
    graft_at_each_vertex(sub, host.children[i], inner);
    for (const auto& [f, c] : inner.terms()) {
      DecoratedTree t = host;
      t.children[i] = f.trees.front();
      std::sort(t.children.begin(), t.children.end());
      out.add_term(Forest(t), c);
    }
  }
}

// All ways to choose a sub-multiset of f, with binomial multiplicities;
// returns (chosen, rest, multiplicity).
struct Split {
  Forest left, right;
  Integer mult;
};

std::vector<Split> unshuffle(const Forest& f) {
  // Group equal trees, then pick counts per group.
  std::vector<std::pair<DecoratedTree, int>> groups;
  for (const auto& t : f.trees) {
    if (!groups.empty() && groups.back().first == t)
      ++groups.back().second;
    else
      groups.push_back({t, 1});
  }
  std::vector<Split> out;
  std::vector<int> pick(groups.size(), 0);
  while (true) {
    Split s;
    s.mult = 1;
    std::vector<DecoratedTree> left, right;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const auto& [t, k] = groups[i];
      for (int j = 0; j < pick[i]; ++j) left.push_back(t);
      for (int j = pick[i]; j < k; ++j) right.push_back(t);
      Integer ch = 1;
      for (int j = 0; j < pick[i]; ++j) ch = ch * (k - j) / (j + 1);
      s.mult *= ch;
    }
    s.left = Forest(std::move(left));
    s.right = Forest(std::move(right));
    out.push_back(std::move(s));
    std::size_t i = 0;
    while (i < groups.size() && pick[i] == groups[i].second) pick[i++] = 0;
    if (i == groups.size()) break;
    ++pick[i];
  }
  return out;
}

// Vertices of a forest in a stable order, as (tree index, path) handles is
// overkill here: grafting a tree onto vertex v of forest y is implemented by
// grafting onto the tree containing v.
ForestSeries graft_tree_on_forest(const DecoratedTree& sub, const Forest& y) {
  ForestSeries out;
  for (std::size_t i = 0; i < y.trees.size(); ++i) {
    ForestSeries inner;
    graft_at_each_vertex(sub, y.trees[i], inner);
    for (const auto& [f, c] : inner.terms()) {
      std::vector<DecoratedTree> ts = y.trees;
      ts[i] = f.trees.front();
      out.add_term(Forest(std::move(ts)), c);
    }
  }
  return out;
}
}  // namespace

ForestSeries graft(const DecoratedTree& t1, const DecoratedTree& t2) {
  ForestSeries out;
  graft_at_each_vertex(t1, t2, out);
  return out;
}

ForestSeries go_extend(const Forest& x, const Forest& y) {
  // (t.A) |> z = t |> (A |> z) - (t |> A) |> z, peeling one tree at a time.
  // The subtraction removes the terms where t lands on a vertex brought in
  // by A rather than a vertex of z.
  if (x.empty()) return ForestSeries(y);
  if (y.empty()) return ForestSeries{};
  DecoratedTree t = x.trees.front();
  Forest rest(std::vector<DecoratedTree>(x.trees.begin() + 1, x.trees.end()));
  ForestSeries out;
  ForestSeries inner = go_extend(rest, y);
  for (const auto& [f, c] : inner.terms()) {
    ForestSeries g = graft_tree_on_forest(t, f);
    g *= c;
    out += g;
  }
  ForestSeries t_on_rest = graft_tree_on_forest(t, rest);
  for (const auto& [f, c] : t_on_rest.terms()) {
    ForestSeries g = go_extend(f, y);
    g *= c;
    out -= g;
  }
  return out;
}

ForestSeries go_extend(const ForestSeries& x, const ForestSeries& y) {
  ForestSeries out;
  for (const auto& [fx, cx] : x.terms())
    for (const auto& [fy, cy] : y.terms()) {
      ForestSeries piece = go_extend(fx, fy);
      piece *= cx * cy;
      out += piece;
    }
  return out;
}

ForestSeries grossman_larson(const Forest& x, const Forest& y) {
  ForestSeries out;
  for (const auto& split : unshuffle(x)) {
    ForestSeries acted = go_extend(split.right, y);
    for (const auto& [f, c] : acted.terms())
      out.add_term(split.left.merged(f), c * Rational(split.mult));
  }
  return out;
}

ForestSeries grossman_larson(const ForestSeries& x, const ForestSeries& y) {
  ForestSeries out;
  for (const auto& [fx, cx] : x.terms())
    for (const auto& [fy, cy] : y.terms()) {
      ForestSeries piece = grossman_larson(fx, fy);
      piece *= cx * cy;
      out += piece;
    }
  return out;
}

ForestSeries forest_product(const ForestSeries& x, const ForestSeries& y) {
  ForestSeries out;
  for (const auto& [fx, cx] : x.terms())
    for (const auto& [fy, cy] : y.terms())
      out.add_term(fx.merged(fy), cx * cy);
  return out;
}

ForestSeries truncate_degree(const ForestSeries& s, int max_degree) {
  ForestSeries out;
  for (const auto& [f, c] : s.terms())
    if (f.degree() <= max_degree) out.add_term(f, c);
  return out;
}

ForestSeries degree_component(const ForestSeries& s, int degree) {
  ForestSeries out;
  for (const auto& [f, c] : s.terms())
    if (f.degree() == degree) out.add_term(f, c);
  return out;
}

ForestSeries gl_exp(int decoration, int max_degree) {
  ForestSeries out;
  DecoratedTree x(decoration);
  for (int n = 0; n <= max_degree; ++n) {
    std::vector<DecoratedTree> ts(n, x);
    out.add_term(Forest(std::move(ts)), Rational(1) / factorial(n));
  }
  return out;
}

ForestSeries gl_log_star(const ForestSeries& g, int max_degree) {
  if (g.coeff(Forest{}) != 1)
    throw std::invalid_argument("gl_log_star: unit coefficient must be 1");
  ForestSeries reduced = truncate_degree(g, max_degree);
  reduced.add_term(Forest{}, -1);
  ForestSeries out, power(Forest{});
  for (int k = 1; k <= max_degree; ++k) {
    power = truncate_degree(grossman_larson(power, reduced), max_degree);
    ForestSeries term = power;
    term *= Rational((k % 2 == 1) ? 1 : -1, k);
    out += term;
  }
  return out;
}

Rational bernoulli(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli: negative index");
  // B1 = -1/2, consistent with the Magnus recursion normalisation.
  static std::vector<Rational> cache{1};
  while (static_cast<int>(cache.size()) <= k) {
    int n = static_cast<int>(cache.size());
    // sum_{j=0}^{n} binom(n+1, j) B_j = 0
    Rational s = 0;
    for (int j = 0; j < n; ++j) s += binomial(n + 1, j) * cache[j];
    cache.push_back(-s / binomial(n + 1, n));
  }
  return cache[k];
}

ForestSeries magnus_recursion(int n, int decoration) {
  if (n < 1) throw std::invalid_argument("magnus_recursion: n must be >= 1");
  std::vector<ForestSeries> omega(n + 1);
  ForestSeries a{Forest(DecoratedTree(decoration))};
  omega[1] = a;
  for (int m = 2; m <= n; ++m) {
    ForestSeries sum;
    for (int k = 1; k <= m - 1; ++k) {
      Rational bk = bernoulli(k);
      if (bk == 0) continue;
      ForestSeries inner;
      // sum over i_1 + ... + i_k = m-1, parts >= 1, applied right-nested to a
      std::function<void(int, int, const ForestSeries&)> rec =
          [&](int slot, int remaining, const ForestSeries& tail) {
            if (slot < 0) {
              if (remaining == 0) inner += tail;
              return;
            }
            for (int i = 1; i <= remaining - slot; ++i)
              rec(slot - 1, remaining - i, go_extend(omega[i], tail));
          };
      rec(k - 1, m - 1, a);
      inner *= bk / factorial(k);
      sum += inner;
    }
    omega[m] = sum;
  }
  return omega[n];
}

Integer symmetry_factor(const DecoratedTree& t) {
  Integer out = 1;
  std::size_t i = 0;
  while (i < t.children.size()) {
    std::size_t j = i;
    while (j < t.children.size() && t.children[j] == t.children[i]) ++j;
    int k = static_cast<int>(j - i);
    Integer fact = 1;
    for (int m = 2; m <= k; ++m) fact *= m;
    Integer sub = symmetry_factor(t.children[i]);
    Integer subk = 1;
    for (int m = 0; m < k; ++m) subk *= sub;
    out *= fact * subk;
    i = j;
  }
  return out;
}

Rational tree_coefficient(const DecoratedTree& t) {
  int n = t.vertex_count();
  ForestSeries log = gl_log_star(gl_exp(t.decoration, n), n);
  return log.coeff(Forest(t));
}

std::vector<DecoratedTree> enumerate_trees(int degree, int decoration) {
  if (degree < 1) return {};
  if (degree == 1) return {DecoratedTree(decoration)};
  // B_+ over multisets of smaller trees: grow by repeatedly grafting a leaf
  // and dedupe, which reaches every tree.
  std::vector<DecoratedTree> prev = enumerate_trees(degree - 1, decoration);
  std::vector<DecoratedTree> out;
  DecoratedTree leaf(decoration);
  for (const auto& t : prev) {
    ForestSeries grown = graft(leaf, t);
    for (const auto& [f, c] : grown.terms()) out.push_back(f.trees.front());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace levyflow
