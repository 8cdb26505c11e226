#include <cmath>

#include "doctest.h"
#include "levyflow/hopf.hpp"
#include "levyflow/levy_sim.hpp"

using namespace levyflow;

namespace {

const char* kLinearModel = R"(
dimension = 1
wiener = 1
drivers = 2
horizon = 1.0
grid_step = 0.001
y0 = ["1"]
fields = ["1/20*x1", "1/5*x1", "3/10*x1"]
[[jump]]
driver = 2
rate = 2.0
values = ["1", "-1/2"]
probs = ["0.6", "0.4"]
)";

const char* kPureJumpModel = R"(
dimension = 1
wiener = 0
drivers = 1
horizon = 1.0
grid_step = 0.01
y0 = ["1"]
fields = ["1/20*x1", "3/10*x1"]
[[jump]]
driver = 1
rate = 2.0
values = ["1", "-1/2"]
probs = ["0.6", "0.4"]
)";

Word W(const std::string& s) { return parse_word(s); }

}  // namespace

TEST_CASE("spec parsing") {
  SdeSpec spec = parse_sde_spec(kLinearModel);
  CHECK(spec.dimension == 1);
  CHECK(spec.num_wiener == 1);
  CHECK(spec.num_drivers == 2);
  CHECK(spec.y0.at(0) == 1);
  CHECK(spec.fields.size() == 3);
  CHECK(spec.jumps.at(0).rate == doctest::Approx(2.0));
  CHECK(spec.jumps.at(0).law.mean() == doctest::Approx(0.6 - 0.2));
}

TEST_CASE("spec validation failures") {
  CHECK_THROWS(parse_sde_spec("dimension = 1\n"));
  // probabilities must sum to one
  std::string bad = kPureJumpModel;
  bad.replace(bad.find("\"0.4\""), 5, "\"0.3\"");
  CHECK_THROWS(parse_sde_spec(bad));
}

TEST_CASE("paths are deterministic in the seed") {
  SdeSpec spec = parse_sde_spec(kLinearModel);
  LevyPath a = simulate_path(spec, 42, 0.01, 3);
  LevyPath b = simulate_path(spec, 42, 0.01, 3);
  LevyPath c = simulate_path(spec, 43, 0.01, 3);
  CHECK(a.wiener_increments == b.wiener_increments);
  CHECK(a.jumps.at(0).size() == b.jumps.at(0).size());
  CHECK(a.wiener_increments != c.wiener_increments);
}

TEST_CASE("time integrals are exact") {
  SdeSpec spec = parse_sde_spec(kLinearModel);
  LevyPath path = simulate_path(spec, 7, 0.01, 0);
  CHECK(iterated_ito(W("0"), path, 0.7) == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(iterated_ito(W("0.0"), path, 1.0) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(iterated_ito(W("0.0.0"), path, 1.0) ==
        doctest::Approx(1.0 / 6).epsilon(1e-12));
}

TEST_CASE("Wiener square letter accumulates the realised quadratic variation") {
  SdeSpec spec = parse_sde_spec(kLinearModel);
  LevyPath path = simulate_path(spec, 7, 0.001, 0);
  double qv = 0;
  int cells = static_cast<int>(0.7 / path.h + 0.5);
  for (int k = 0; k < cells; ++k) {
    double dw = path.wiener_increments.at(0).at(k);
    qv += dw * dw;
  }
  CHECK(iterated_ito(W("1^(2)"), path, 0.7) ==
        doctest::Approx(qv).epsilon(1e-12));
  // close to t in distribution, exactly t only in the continuum limit
  CHECK(std::abs(qv - 0.7) < 0.1);
  // the continuum convention for the bracket process itself
  CHECK(power_bracket(path, 1, 2, 0.7) == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("single Wiener integral telescopes to the endpoint") {
  SdeSpec spec = parse_sde_spec(kLinearModel);
  LevyPath path = simulate_path(spec, 11, 0.01, 0);
  CHECK(iterated_ito(W("1"), path, 1.0) ==
        doctest::Approx(path.wiener_value(1, 1.0)).epsilon(1e-12));
}

TEST_CASE("jump power brackets sum the jump sizes") {
  SdeSpec spec = parse_sde_spec(kPureJumpModel);
  LevyPath path = simulate_path(spec, 5, 0.01, 0);
  double sum2 = 0;
  for (const auto& j : path.jumps.at(0)) sum2 += j.size * j.size;
  CHECK(iterated_ito(W("1^(2)"), path, 1.0) ==
        doctest::Approx(sum2).epsilon(1e-12));
}

TEST_CASE("quasi-shuffle identity holds exactly on pure-jump paths") {
  SdeSpec spec = parse_sde_spec(kPureJumpModel);
  AlphabetSpec al = spec.alphabet(3);
  for (int s = 0; s < 10; ++s) {
    LevyPath path = simulate_path(spec, 19, spec.grid_step, s);
    for (const char* us : {"0", "1", "1^(2)", "0.1"})
      for (const char* vs : {"1", "0"}) {
        Word u = W(us), v = W(vs);
        if (u.grade() + v.grade() > 3) continue;
        double lhs = iterated_ito(u, path, 1.0) * iterated_ito(v, path, 1.0);
        double rhs = 0;
        WordSeries qs = quasi_shuffle(u, v, al);
        for (const auto& [w, c] : qs.terms())
          rhs += static_cast<double>(c) * iterated_ito(w, path, 1.0);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
      }
  }
}

TEST_CASE("J processes satisfy the plain shuffle law") {
  SdeSpec spec = parse_sde_spec(kPureJumpModel);
  AlphabetSpec al = spec.alphabet(2);
  LevyPath path = simulate_path(spec, 23, spec.grid_step, 0);
  Word u = W("1"), v = W("1");
  double lhs = j_process(u, path, 1.0, al) * j_process(v, path, 1.0, al);
  WordSeries sh = shuffle(u, v);
  double rhs = 0;
  for (const auto& [w, c] : sh.terms())
    rhs += static_cast<double>(c) * j_process(w, path, 1.0, al);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("J of a squared Wiener letter gains the Stratonovich shift") {
  // J_{1.1} = I_{1.1} + 1/2 I_{1^(2)} and I_{1^(2)} = t on Wiener drivers.
  SdeSpec spec = parse_sde_spec(kLinearModel);
  AlphabetSpec al = spec.alphabet(2);
  LevyPath path = simulate_path(spec, 29, 0.001, 0);
  double j11 = j_process(W("1.1"), path, 1.0, al);
  double i11 = iterated_ito(W("1.1"), path, 1.0);
  double qv = iterated_ito(W("1^(2)"), path, 1.0);
  CHECK(j11 == doctest::Approx(i11 + 0.5 * qv).epsilon(1e-9));
  CHECK(qv == doctest::Approx(1.0).epsilon(0.15));
}

TEST_CASE("taylor weights reproduce the linear model derivatives") {
  SdeSpec spec = parse_sde_spec(kLinearModel);
  Polynomial f = Polynomial::variable(1, 0);
  auto weights = taylor_weights(spec, f, 2);
  // D_w x at y0=1 for linear fields a=1/20, b=1/5, c=3/10
  CHECK(weights.at(W("1")) == doctest::Approx(0.2));
  CHECK(weights.at(W("2")) == doctest::Approx(0.3));
  CHECK(weights.at(W("1.1")) == doctest::Approx(0.04));
  CHECK(weights.at(W("2.1")) == doctest::Approx(0.06));
  // second-order operators annihilate a linear observable, so power letters
  // carry no weight and are dropped
  CHECK(weights.count(W("1^(2)")) == 0);
}

TEST_CASE("truncation error shrinks with the grade") {
  SdeSpec spec = parse_sde_spec(kLinearModel);
  PathStatistics stats = mc_compare(spec, {1, 2, 3}, 200, 0.1, 99);
  REQUIRE(stats.grades.size() == 3);
  CHECK(stats.grades[0].rms_error > stats.grades[1].rms_error);
  CHECK(stats.grades[1].rms_error > stats.grades[2].rms_error);
}
