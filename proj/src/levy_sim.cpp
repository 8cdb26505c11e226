#include "levyflow/levy_sim.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <random>
#include <set>
#include <stdexcept>

#include "levyflow/basis_change.hpp"
#include "levyflow/toml_mini.hpp"

namespace levyflow {

double JumpLaw::mean() const {
  double m = 0;
  for (std::size_t i = 0; i < values.size(); ++i) m += values[i] * probs[i];
  return m;
}

void JumpLaw::validate() const {
  if (values.empty() || values.size() != probs.size())
    throw std::invalid_argument("jump law: values/probs size mismatch");
  double total = 0;
  for (double p : probs) {
    if (p < 0) throw std::invalid_argument("jump law: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("jump law: probabilities must sum to 1");
}

void SdeSpec::validate() const {
  if (dimension < 1) throw std::invalid_argument("sde: dimension must be >= 1");
  if (num_wiener < 0 || num_drivers < num_wiener)
    throw std::invalid_argument("sde: need 0 <= d <= l");
  if (static_cast<int>(fields.size()) != num_drivers + 1)
    throw std::invalid_argument("sde: expected l+1 vector fields");
  for (const auto& v : fields)
    if (static_cast<int>(v.components.size()) != dimension)
      throw std::invalid_argument("sde: field dimension mismatch");
  if (static_cast<int>(jumps.size()) != num_drivers - num_wiener)
    throw std::invalid_argument("sde: expected one jump law per jump driver");
  for (const auto& j : jumps) {
    if (j.rate <= 0) throw std::invalid_argument("sde: jump rate must be > 0");
    j.law.validate();
  }
  if (horizon <= 0) throw std::invalid_argument("sde: horizon must be > 0");
  if (grid_step <= 0) throw std::invalid_argument("sde: grid step must be > 0");
  if (static_cast<int>(y0.size()) != dimension)
    throw std::invalid_argument("sde: y0 dimension mismatch");
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 driver_rng(std::uint64_t seed, int sample, int driver) {
  std::uint64_t s = mix64(seed) ^ mix64(0x5b1ce5ULL + sample);
  s = mix64(s ^ mix64(0xd217ULL * (driver + 1)));
  return std::mt19937_64(s);
}

Rational rational_from_toml(const TomlValue& v, int line) {
  try {
    if (v.kind == TomlValue::Kind::String && v.str.find('/') != std::string::npos)
      return Rational(v.str);
    if (v.kind != TomlValue::Kind::Number && v.kind != TomlValue::Kind::String)
      throw std::invalid_argument("expected number or string");
    // Exact decimal-to-rational conversion from the original spelling.
    std::string s = v.kind == TomlValue::Kind::String ? v.str : v.raw;
    std::string mantissa;
    long exp10 = 0;
    std::size_t epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
      exp10 = std::stol(s.substr(epos + 1));
      s = s.substr(0, epos);
    }
    std::size_t dot = s.find('.');
    if (dot != std::string::npos) {
      exp10 -= static_cast<long>(s.size() - dot - 1);
      s.erase(dot, 1);
    }
    Rational r{Integer(s)};
    for (long k = 0; k < exp10; ++k) r *= 10;
    for (long k = 0; k > exp10; --k) r /= 10;
    return r;
  } catch (const std::exception& e) {
    throw TomlError(line, std::string("bad rational value: ") + e.what());
  }
}

}  // namespace

SdeSpec parse_sde_spec(const std::string& toml_text) {
  TomlDoc doc = parse_toml(toml_text);
  const TomlTable& root = doc.root;
  SdeSpec spec;
  spec.dimension = static_cast<int>(root.at("dimension").num);
  spec.num_wiener = static_cast<int>(root.at("wiener").num);
  spec.num_drivers = static_cast<int>(root.at("drivers").num);
  spec.horizon = root.at("horizon").num;
  if (root.has("grid_step")) spec.grid_step = root.at("grid_step").num;

  for (const TomlValue& entry : root.at("y0").array)
    spec.y0.push_back(rational_from_toml(entry, root.line));

  for (const TomlValue& entry : root.at("fields").array) {
    if (entry.kind != TomlValue::Kind::String)
      throw TomlError(root.line, "fields must be polynomial strings");
    PolyVectorField v;
    std::string text = entry.str;
    std::size_t start = 0;
    // Components separated by ';' for dimension > 1.
    for (int i = 0; i < spec.dimension; ++i) {
      std::size_t semi = text.find(';', start);
      std::string piece = semi == std::string::npos ? text.substr(start)
                                                    : text.substr(start, semi - start);
      v.components.push_back(parse_polynomial(piece, spec.dimension));
      start = semi == std::string::npos ? text.size() : semi + 1;
    }
    spec.fields.push_back(std::move(v));
  }

  std::map<int, JumpDriverSpec> by_driver;
  auto it = doc.table_arrays.find("jump");
  if (it != doc.table_arrays.end()) {
    for (const TomlTable& t : it->second) {
      int driver = static_cast<int>(t.at("driver").num);
      if (driver <= spec.num_wiener || driver > spec.num_drivers)
        throw TomlError(t.line, "jump driver index out of range");
      JumpDriverSpec j;
      j.rate = t.at("rate").num;
      for (const TomlValue& v : t.at("values").array)
        j.law.values.push_back(static_cast<double>(rational_from_toml(v, t.line)));
      for (const TomlValue& v : t.at("probs").array)
        j.law.probs.push_back(static_cast<double>(rational_from_toml(v, t.line)));
      if (by_driver.count(driver))
        throw TomlError(t.line, "duplicate jump driver");
      by_driver[driver] = std::move(j);
    }
  }
  for (int i = spec.num_wiener + 1; i <= spec.num_drivers; ++i) {
    auto jt = by_driver.find(i);
    if (jt == by_driver.end())
      throw TomlError(root.line,
                      "missing [[jump]] table for driver " + std::to_string(i));
    spec.jumps.push_back(jt->second);
  }
  spec.validate();
  return spec;
}

SdeSpec load_sde_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sde_spec(buf.str());
}

double LevyPath::wiener_value(int driver, double t) const {
  const auto& inc = wiener_increments.at(driver - 1);
  double w = 0;
  for (std::size_t k = 0; k < inc.size(); ++k) {
    if ((k + 1) * h > t + 1e-12) break;
    w += inc[k];
  }
  return w;
}

double LevyPath::jump_value(int driver, double t) const {
  int idx = driver - num_wiener - 1;
  double j = 0;
  for (const auto& jump : jumps.at(idx)) {
    if (jump.time > t) break;
    j += jump.size;
  }
  return j - compensator_rate.at(idx) * t;
}

LevyPath simulate_path(const SdeSpec& spec, std::uint64_t seed, double h,
                       int sample_index) {
  spec.validate();
  double T = spec.horizon;
  double cells_exact = T / h;
  int cells = static_cast<int>(cells_exact + 0.5);
  if (std::abs(cells_exact - cells) > 1e-9)
    throw std::invalid_argument("simulate_path: grid step must divide horizon");

  LevyPath path;
  path.T = T;
  path.h = h;
  path.num_wiener = spec.num_wiener;
  path.num_drivers = spec.num_drivers;

  for (int i = 1; i <= spec.num_wiener; ++i) {
    auto rng = driver_rng(seed, sample_index, i);
    std::normal_distribution<double> gauss(0.0, std::sqrt(h));
    std::vector<double> inc(cells);
    for (double& x : inc) x = gauss(rng);
    path.wiener_increments.push_back(std::move(inc));
  }

  std::set<double> used_times;
  for (int k = 0; k <= cells; ++k) used_times.insert(k * h);
  for (int i = spec.num_wiener + 1; i <= spec.num_drivers; ++i) {
    const JumpDriverSpec& j = spec.jumps[i - spec.num_wiener - 1];
    auto rng = driver_rng(seed, sample_index, i);
    std::poisson_distribution<int> count_dist(j.rate * T);
    std::uniform_real_distribution<double> unif(0.0, T);
    std::discrete_distribution<int> size_dist(j.law.probs.begin(),
                                              j.law.probs.end());
    int count = count_dist(rng);
    std::vector<LevyPath::Jump> events;
    events.reserve(count);
    for (int n = 0; n < count; ++n) {
      double time = unif(rng);
      // Distinct drivers must not co-jump, nor land on a grid point.
      while (used_times.count(time)) time = unif(rng);
      used_times.insert(time);
      events.push_back({time, j.law.values[size_dist(rng)]});
    }
    std::sort(events.begin(), events.end(),
              [](const auto& a, const auto& b) { return a.time < b.time; });
    path.jumps.push_back(std::move(events));
    path.compensator_rate.push_back(j.rate * j.law.mean());
  }
  return path;
}

double power_bracket(const LevyPath& path, int driver, int m, double t) {
  if (m < 1) throw std::invalid_argument("power_bracket: m must be >= 1");
  bool wiener = driver >= 1 && driver <= path.num_wiener;
  if (m == 1)
    return wiener ? path.wiener_value(driver, t) : path.jump_value(driver, t);
  if (wiener) {
    if (m > 2)
      throw std::invalid_argument("power_bracket: Wiener brackets vanish past m=2");
    return t;
  }
  double acc = 0;
  for (const auto& jump : path.jumps.at(driver - path.num_wiener - 1)) {
    if (jump.time > t) break;
    acc += std::pow(jump.size, m);
  }
  return acc;
}

namespace {

// Prefix trie over the requested words; each node is one iterated integral.
struct Node {
  Letter letter;
  int parent = -1;
  double rate = 0;   // continuous part of the letter's driver differential
  double val = 0;
  std::vector<double> poly;  // value on the current segment, in u = s - s0
};

struct Event {
  double time;
  // 0: jump event; 1: grid event at a cell end, carrying both the Wiener
  // increments and their squares. One snapshot per event keeps every
  // quasi-shuffle identity exact on-path except the third-moment pairs
  // (Wiener letter against its own square), where the algebra's
  // [i, i^(2)] = 0 leaves an O(sqrt(T h)) residual sum of (dW)^3.
  int kind = 0;
  int grid_index = 0;
  int jump_driver = 0;  // >= d+1 when kind == 0
  double jump_size = 0;
};

double letter_atom(const Letter& a, const Event& e, const LevyPath& path) {
  if (a.base == 0) return 0;
  bool wiener = a.base <= path.num_wiener;
  if (e.kind != 0) {
    if (!wiener) return 0;
    double dw = path.wiener_increments[a.base - 1][e.grid_index];
    return a.power == 1 ? dw : std::pow(dw, a.power);
  }
  if (wiener || a.base != e.jump_driver) return 0;
  return a.power == 1 ? e.jump_size : std::pow(e.jump_size, a.power);
}

}  // namespace

std::map<Word, double> evaluate_words(const std::vector<Word>& words,
                                      const LevyPath& path, double t) {
  if (t < 0 || t > path.T + 1e-12)
    throw std::invalid_argument("evaluate_words: t outside [0, T]");

  std::vector<Node> nodes(1);  // root = empty word
  nodes[0].val = 1;
  std::map<std::vector<int>, int> child_index;  // (parent, base, power) -> node
  std::vector<int> word_node;
  bool any_wiener_letter = false;
  for (const Word& w : words) {
    int cur = 0;
    for (const Letter& a : w.letters) {
      auto key = std::vector<int>{cur, a.base, a.power};
      auto [it, inserted] = child_index.try_emplace(key, 0);
      if (inserted) {
        Node n;
        n.letter = a;
        n.parent = cur;
        if (a.base == 0)
          n.rate = 1;
        else if (a.base > path.num_wiener && a.power == 1)
          n.rate = -path.compensator_rate[a.base - path.num_wiener - 1];
        nodes.push_back(n);
        it->second = static_cast<int>(nodes.size()) - 1;
      }
      cur = it->second;
      if (a.base >= 1 && a.base <= path.num_wiener) any_wiener_letter = true;
    }
    word_node.push_back(cur);
  }

  std::vector<Event> events;
  if (any_wiener_letter) {
    for (int k = 0; (k + 1) * path.h <= t + 1e-12; ++k)
      events.push_back({(k + 1) * path.h, 1, k, 0, 0});
  }
  for (int j = 0; j < path.num_drivers - path.num_wiener; ++j)
    for (const auto& jump : path.jumps[j]) {
      if (jump.time > t) break;
      events.push_back({jump.time, 0, 0, path.num_wiener + 1 + j, jump.size});
    }
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return a.time < b.time; });

  auto evolve = [&](double dt) {
    if (dt <= 0) return;
    nodes[0].poly = {1.0};
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      Node& n = nodes[i];
      if (n.rate == 0) {
        n.poly = {n.val};
        continue;
      }
      const auto& p = nodes[n.parent].poly;
      n.poly.assign(p.size() + 1, 0.0);
      n.poly[0] = n.val;
      for (std::size_t k = 0; k < p.size(); ++k)
        n.poly[k + 1] = n.rate * p[k] / static_cast<double>(k + 1);
    }
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      double acc = 0;
      for (std::size_t k = nodes[i].poly.size(); k-- > 0;)
        acc = acc * dt + nodes[i].poly[k];
      nodes[i].val = acc;
    }
  };

  double clock = 0;
  std::vector<double> snapshot(nodes.size());
  for (const Event& e : events) {
    evolve(e.time - clock);
    clock = e.time;
    for (std::size_t i = 0; i < nodes.size(); ++i) snapshot[i] = nodes[i].val;
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      double atom = letter_atom(nodes[i].letter, e, path);
      if (atom != 0) nodes[i].val += snapshot[nodes[i].parent] * atom;
    }
  }
  evolve(t - clock);

  std::map<Word, double> out;
  for (std::size_t i = 0; i < words.size(); ++i)
    out[words[i]] = nodes[word_node[i]].val;
  return out;
}

double iterated_ito(const Word& w, const LevyPath& path, double t) {
  return evaluate_words({w}, path, t).at(w);
}

double j_process(const Word& w, const LevyPath& path, double t,
                 const AlphabetSpec& spec) {
  WordSeries expansion = zero_word_in_word_basis(ZeroWord(w), spec);
  std::vector<Word> words;
  for (const auto& [u, c] : expansion.terms()) words.push_back(u);
  auto vals = evaluate_words(words, path, t);
  double acc = 0;
  for (const auto& [u, c] : expansion.terms())
    acc += static_cast<double>(c) * vals.at(u);
  return acc;
}

std::map<Word, double> taylor_weights(const SdeSpec& spec, const Polynomial& f,
                                      int max_grade) {
  std::map<Word, double> out;
  std::vector<double> y0d;
  for (const Rational& y : spec.y0) y0d.push_back(static_cast<double>(y));
  for (const Word& w : enumerate_words(spec.alphabet(max_grade), max_grade)) {
    Polynomial g = f;
    for (int i = w.length() - 1; i >= 0; --i) {
      const Letter& a = w.letters[i];
      g = apply_op(diff_op_D(spec.fields.at(a.base), a.power), g);
    }
    double weight = g.eval(y0d);
    if (weight != 0 || w.empty()) out[w] = weight;
  }
  return out;
}

double taylor_flow(const SdeSpec& spec, const Polynomial& f,
                   const LevyPath& path, double t, int max_grade) {
  auto weights = taylor_weights(spec, f, max_grade);
  std::vector<Word> words;
  for (const auto& [w, c] : weights)
    if (!w.empty()) words.push_back(w);
  auto vals = evaluate_words(words, path, t);
  double acc = weights.at(Word{});
  for (const Word& w : words) acc += weights.at(w) * vals.at(w);
  return acc;
}

namespace {

// alpha for a field of the form alpha * x1; throws otherwise.
double linear_coefficient(const PolyVectorField& v) {
  if (v.components.size() != 1)
    throw std::invalid_argument("exact_linear_solution: spec must be scalar");
  double alpha = 0;
  for (const auto& [mono, c] : v.components[0].terms()) {
    if (mono != std::vector<int>{1})
      throw std::invalid_argument("exact_linear_solution: field is not linear");
    alpha = static_cast<double>(c);
  }
  return alpha;
}

}  // namespace

double exact_linear_solution(const SdeSpec& spec, const LevyPath& path,
                             double t) {
  std::vector<double> alpha;
  for (const auto& v : spec.fields) alpha.push_back(linear_coefficient(v));
  double y = static_cast<double>(spec.y0.at(0));
  double drift = alpha[0];
  for (int j = 0; j < spec.num_drivers - spec.num_wiener; ++j)
    drift -= alpha[spec.num_wiener + 1 + j] * path.compensator_rate[j];
  y *= std::exp(drift * t);
  // Doleans-Dade factor of the sampled (discretised) drivers: Wiener
  // increments enter as atoms, matching the iterated-integral convention.
  for (int i = 1; i <= spec.num_wiener; ++i) {
    const auto& inc = path.wiener_increments[i - 1];
    for (std::size_t k = 0; (k + 1) * path.h <= t + 1e-12; ++k)
      y *= 1.0 + alpha[i] * inc[k];
  }
  for (int j = 0; j < spec.num_drivers - spec.num_wiener; ++j)
    for (const auto& jump : path.jumps[j]) {
      if (jump.time > t) break;
      y *= 1.0 + alpha[spec.num_wiener + 1 + j] * jump.size;
    }
  return y;
}

PathStatistics mc_compare(const SdeSpec& spec, const std::vector<int>& grades,
                          int samples, double t, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("mc_compare: samples >= 1");
  if (grades.empty()) throw std::invalid_argument("mc_compare: no grades");
  int max_grade = *std::max_element(grades.begin(), grades.end());
  Polynomial f = Polynomial::variable(1, 0);
  auto weights = taylor_weights(spec, f, max_grade);
  std::vector<Word> words;
  for (const auto& [w, c] : weights)
    if (!w.empty()) words.push_back(w);

  std::vector<double> sq(grades.size(), 0), abs(grades.size(), 0);
  for (int s = 0; s < samples; ++s) {
    LevyPath path = simulate_path(spec, seed, spec.grid_step, s);
    double exact = exact_linear_solution(spec, path, t);
    auto vals = evaluate_words(words, path, t);
    for (std::size_t gi = 0; gi < grades.size(); ++gi) {
      double approx = weights.at(Word{});
      for (const Word& w : words)
        if (w.grade() <= grades[gi]) approx += weights.at(w) * vals.at(w);
      double err = approx - exact;
      sq[gi] += err * err;
      abs[gi] += std::abs(err);
    }
  }

  PathStatistics stats;
  stats.samples = samples;
  stats.t = t;
  for (std::size_t gi = 0; gi < grades.size(); ++gi)
    stats.grades.push_back({grades[gi], std::sqrt(sq[gi] / samples),
                            abs[gi] / samples});
  return stats;
}

}  // namespace levyflow
