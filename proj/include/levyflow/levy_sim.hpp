#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "levyflow/vector_fields.hpp"
#include "levyflow/words.hpp"

namespace levyflow {

/// Finitely supported jump-size law.
struct JumpLaw {
  std::vector<double> values;
  std::vector<double> probs;

  double mean() const;
  void validate() const;
};

struct JumpDriverSpec {
  double rate = 0;
  JumpLaw law;
};

struct SdeSpec {
  int dimension = 1;
  int num_wiener = 0;   // drivers 1..d are Wiener
  int num_drivers = 0;  // drivers d+1..l are jump
  std::vector<PolyVectorField> fields;  // V_0 .. V_l
  std::vector<JumpDriverSpec> jumps;    // indexed by driver - d - 1
  double horizon = 1;
  double grid_step = 1e-3;
  std::vector<Rational> y0;

  AlphabetSpec alphabet(int max_grade) const {
    return AlphabetSpec{num_wiener, num_drivers, max_grade};
  }
  void validate() const;
};

SdeSpec parse_sde_spec(const std::string& toml_text);
SdeSpec load_sde_spec(const std::string& path);

/// One sampled realisation of all drivers on [0, T].
struct LevyPath {
  double T = 1;
  double h = 1e-3;
  int num_wiener = 0;
  int num_drivers = 0;

  // [wiener driver][grid cell]; cell k covers [k*h, (k+1)*h).
  std::vector<std::vector<double>> wiener_increments;

  struct Jump {
    double time;
    double size;
  };
  std::vector<std::vector<Jump>> jumps;      // per jump driver, sorted
  std::vector<double> compensator_rate;      // lambda * mean(law), per driver

  int grid_cells() const { return static_cast<int>(T / h + 0.5); }
  double wiener_value(int driver, double t) const;
  double jump_value(int driver, double t) const;  // compensated
};

LevyPath simulate_path(const SdeSpec& spec, std::uint64_t seed, double h,
                       int sample_index = 0);

/// [X^i]^(m)_t: the driver itself for m = 1, the m-th power-jump sum for
/// m >= 2; Wiener squares give t.
double power_bracket(const LevyPath& path, int driver, int m, double t);

/// Multiple Ito integral, exact between events; see evaluate_words for the
/// grid convention on Wiener letters.
double iterated_ito(const Word& w, const LevyPath& path, double t);

/// Evaluates many words in one sweep over the event timeline (shared
/// prefixes are computed once). Wiener letters carry their grid increments
/// as atoms, so the quasi-shuffle identities hold on the sampled path
/// exactly up to rounding.
std::map<Word, double> evaluate_words(const std::vector<Word>& words,
                                      const LevyPath& path, double t);

/// Renormalised integral: zero-basis word evaluated termwise through mu.
double j_process(const Word& w, const LevyPath& path, double t,
                 const AlphabetSpec& spec);

/// Truncated stochastic Taylor flowmap applied to f at y0.
double taylor_flow(const SdeSpec& spec, const Polynomial& f,
                   const LevyPath& path, double t, int max_grade);

/// Weights (D_w f)(y0) for all words of grade <= max_grade; reusable
/// across sample paths.
std::map<Word, double> taylor_weights(const SdeSpec& spec, const Polynomial& f,
                                      int max_grade);

/// Doleans-Dade closed form for a scalar linear spec, evaluated on the
/// sampled path (the exact flow of the discretised drivers, so truncation
/// error is observable below the grid-discretisation floor).
double exact_linear_solution(const SdeSpec& spec, const LevyPath& path,
                             double t);

struct PathStatistics {
  int samples = 0;
  double t = 0;
  struct PerGrade {
    int grade;
    double rms_error;
    double mean_abs_error;
  };
  std::vector<PerGrade> grades;
};

PathStatistics mc_compare(const SdeSpec& spec, const std::vector<int>& grades,
                          int samples, double t, std::uint64_t seed);

}  // namespace levyflow
