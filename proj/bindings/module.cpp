#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>
#include <string>

#include "levyflow/basis_change.hpp"
#include "levyflow/chen_strichartz.hpp"
#include "levyflow/hopf.hpp"
#include "levyflow/levy_sim.hpp"
#include "levyflow/serialize.hpp"
#include "levyflow/verify.hpp"

namespace py = pybind11;
using namespace levyflow;

namespace {

std::string rat(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

std::map<std::string, std::string> series_dict(const WordSeries& s) {
  std::map<std::string, std::string> out;
  for (const auto& [w, c] : s.terms()) out[to_string(w)] = rat(c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quasi-shuffle algebra and flowmap expansions for Levy SDEs";

  m.def(
      "quasi_shuffle",
      [](const std::string& u, const std::string& v, int wiener, int drivers,
         int max_grade) {
        AlphabetSpec spec{wiener, drivers, max_grade};
        return series_dict(quasi_shuffle(parse_word(u), parse_word(v), spec));
      },
      py::arg("u"), py::arg("v"), py::arg("wiener") = 1, py::arg("drivers") = 2,
      py::arg("max_grade") = 6);

  m.def(
      "shuffle",
      [](const std::string& u, const std::string& v) {
        return series_dict(shuffle(parse_word(u), parse_word(v)));
      },
      py::arg("u"), py::arg("v"));

  m.def(
      "hoffman_log_letter",
      [](const std::string& letter, int wiener, int drivers, int max_grade) {
        AlphabetSpec spec{wiener, drivers, max_grade};
        Word w = parse_word(letter);
        if (w.length() != 1)
          throw std::invalid_argument("expected a single letter");
        return series_dict(hoffman_log_letter(w.letters.front(), spec));
      },
      py::arg("letter"), py::arg("wiener") = 1, py::arg("drivers") = 2,
      py::arg("max_grade") = 6);

  m.def(
      "psi",
      [](const std::string& w) { return series_dict(psi(parse_word(w))); },
      py::arg("word"));

  m.def(
      "log_flowmap_json",
      [](const std::string& basis, int wiener, int drivers, int grade) {
        if (basis != "I" && basis != "J")
          throw std::invalid_argument("basis must be 'I' or 'J'");
        AlphabetSpec spec{wiener, drivers, grade};
        LogFlowmap lf = log_flowmap(
            basis == "I" ? LieBasis::I : LieBasis::J, spec, grade);
        return log_flowmap_to_json(lf).dump();
      },
      py::arg("basis") = "J", py::arg("wiener") = 1, py::arg("drivers") = 2,
      py::arg("grade") = 3);

  m.def(
      "magnus_table_json",
      [](int degree) {
        return magnus_table_to_json(magnus_table(degree, 0)).dump();
      },
      py::arg("degree") = 4);

  m.def(
      "verify_json",
      [](int wiener, int drivers, int grade, int tree_degree,
         std::uint64_t seed) {
        VerifyOptions opt;
        opt.num_wiener = wiener;
        opt.num_drivers = drivers;
        opt.max_grade = grade;
        opt.tree_degree = tree_degree;
        opt.seed = seed;
        return verification_report(run_verification(opt)).dump();
      },
      py::arg("wiener") = 1, py::arg("drivers") = 2, py::arg("grade") = 3,
      py::arg("tree_degree") = 4, py::arg("seed") = 1);

  m.def(
      "simulate_json",
      [](const std::string& toml_text, int grade, int samples, double t,
         std::uint64_t seed) {
        SdeSpec spec = parse_sde_spec(toml_text);
        std::vector<int> grades;
        for (int g = 1; g <= grade; ++g) grades.push_back(g);
        return statistics_to_json(mc_compare(spec, grades, samples, t, seed))
            .dump();
      },
      py::arg("toml_text"), py::arg("grade") = 3, py::arg("samples") = 100,
      py::arg("t") = 0.1, py::arg("seed") = 1);
}
