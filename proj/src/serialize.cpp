#include "levyflow/serialize.hpp"

#include <sstream>

namespace levyflow {

namespace {

constexpr const char* kSchemaVersion = "1";

std::string latex_rational(const Rational& q, bool leading_sign) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  std::string sign = num < 0 ? "-" : (leading_sign ? "+" : "");
  if (num < 0) num = -num;
  if (den == 1) return sign + num.str();
  return sign + "\\frac{" + num.str() + "}{" + den.str() + "}";
}

std::string latex_letter(const Letter& a) {
  if (a.power == 1) return std::to_string(a.base);
  return std::to_string(a.base) + "^{(" + std::to_string(a.power) + ")}";
}

std::string latex_word_brackets(const Word& w) {
  // Left-to-right nested commutator of operators: [V_a, [V_b, V_c]].
  std::string out;
  for (int i = 0; i < w.length() - 1; ++i) out += "[";
  for (int i = 0; i < w.length(); ++i) {
    out += "V_{" + latex_letter(w.letters[i]) + "}";
    if (i > 0) out += "]";
    if (i + 1 < w.length()) out += ", ";
  }
  return out;
}

}  // namespace

json rational_to_json(const Rational& q) {
  return json{{"num", boost::multiprecision::numerator(q).str()},
              {"den", boost::multiprecision::denominator(q).str()}};
}

json word_series_to_json(const WordSeries& s) {
  json out = json::array();
  for (const auto& [w, c] : s.terms())
    out.push_back(json{{"word", to_string(w)}, {"coeff", rational_to_json(c)}});
  return out;
}

json log_flowmap_to_json(const LogFlowmap& lf) {
  json terms = json::array();
  for (const auto& [w, lie] : lf.terms)
    terms.push_back(json{{"word", to_string(w)}, {"lie", word_series_to_json(lie)}});
  return json{{"schema", "logflowmap"},
              {"version", kSchemaVersion},
              {"basis", lf.basis == LieBasis::J ? "J" : "I"},
              {"wiener", lf.spec.num_wiener},
              {"drivers", lf.spec.num_drivers},
              {"max_grade", lf.max_grade},
              {"terms", terms}};
}

std::string log_flowmap_to_text(const LogFlowmap& lf) {
  std::ostringstream out;
  out << "log(flowmap), " << (lf.basis == LieBasis::J ? "J" : "I")
      << "-basis, grade <= " << lf.max_grade << "\n";
  for (const auto& [w, lie] : lf.terms)
    out << "  " << (lf.basis == LieBasis::J ? "J_" : "I_") << to_string(w)
        << " : " << to_string(lie) << "\n";
  return out.str();
}

std::string log_flowmap_to_latex(const LogFlowmap& lf) {
  std::ostringstream out;
  const char* integral = lf.basis == LieBasis::J ? "J" : "I";
  out << "\\begin{align*}\n\\log\\varphi_t &= ";
  bool first_term = true;
  for (const auto& [w, lie] : lf.terms) {
    if (!first_term) out << " \\\\\n&\\quad ";
    out << (first_term ? "" : "+ ") << integral << "_{" << to_string(w)
        << "}(t)\\Bigl(";
    bool first = true;
    // Each Lie element prints through the Dynkin bracketing of its words,
    // scaled by 1/n (right inverse on Lie elements).
    for (const auto& [u, c] : lie.terms()) {
      out << latex_rational(c / u.length(), !first) << " "
          << latex_word_brackets(u);
      first = false;
    }
    out << "\\Bigr)";
    first_term = false;
  }
  out << "\n\\end{align*}\n";
  return out.str();
}

std::vector<MagnusRow> magnus_table(int max_degree, int decoration) {
  std::vector<MagnusRow> rows;
  for (int n = 1; n <= max_degree; ++n)
    for (const DecoratedTree& t : enumerate_trees(n, decoration)) {
      MagnusRow row;
      row.degree = n;
      row.tree = t;
      row.c = tree_coefficient(t);
      row.sigma = symmetry_factor(t);
      Rational abs_c = row.c < 0 ? -row.c : row.c;
      row.omega = abs_c * Rational(row.sigma);
      rows.push_back(std::move(row));
    }
  return rows;
}

json magnus_table_to_json(const std::vector<MagnusRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back(json{{"degree", r.degree},
                       {"tree", to_string(r.tree)},
                       {"c", rational_to_json(r.c)},
                       {"sigma", r.sigma.str()},
                       {"omega_abs", rational_to_json(r.omega)}});
  return json{{"schema", "magnus_table"}, {"version", kSchemaVersion},
              {"rows", out}};
}

std::string magnus_table_to_text(const std::vector<MagnusRow>& rows) {
  std::ostringstream out;
  out << "degree  tree                      c_tau      sigma  |c|*sigma\n";
  for (const auto& r : rows) {
    std::string tree = to_string(r.tree);
    out << "  " << r.degree << "     " << tree
        << std::string(tree.size() < 24 ? 26 - tree.size() : 2, ' ')
        << to_string(r.c) << std::string(to_string(r.c).size() < 9 ? 11 - to_string(r.c).size() : 2, ' ')
        << r.sigma.str() << "      " << to_string(r.omega) << "\n";
  }
  return out.str();
}

std::string tree_to_latex(const DecoratedTree& t) {
  std::string out = "[" + std::to_string(t.decoration);
  for (const auto& c : t.children) out += tree_to_latex(c);
  return out + "]";
}

std::string magnus_table_to_latex(const std::vector<MagnusRow>& rows) {
  std::ostringstream out;
  out << "\\begin{tabular}{c|c|c|c|c}\n"
      << "degree & $\\tau$ & $c_\\tau$ & $\\sigma(\\tau)$ & "
         "$|c_\\tau|\\sigma(\\tau)$ \\\\\n\\hline\n";
  for (const auto& r : rows)
    out << r.degree << " & \\Forest{" << tree_to_latex(r.tree) << "} & $"
        << latex_rational(r.c, false) << "$ & $" << r.sigma.str() << "$ & $"
        << latex_rational(r.omega, false) << "$ \\\\\n";
  out << "\\end{tabular}\n";
  return out.str();
}

std::string magnus_table_to_csv(const std::vector<MagnusRow>& rows) {
  std::ostringstream out;
  out << "degree,tree,c,sigma,omega_abs\n";
  for (const auto& r : rows)
    out << r.degree << "," << to_string(r.tree) << "," << to_string(r.c) << ","
        << r.sigma.str() << "," << to_string(r.omega) << "\n";
  return out.str();
}

json statistics_to_json(const PathStatistics& stats) {
  json grades = json::array();
  for (const auto& g : stats.grades)
    grades.push_back(json{{"grade", g.grade},
                          {"rms_error", g.rms_error},
                          {"mean_abs_error", g.mean_abs_error}});
  return json{{"schema", "statistics"}, {"version", kSchemaVersion},
              {"samples", stats.samples}, {"t", stats.t}, {"grades", grades}};
}

std::string statistics_to_csv(const PathStatistics& stats) {
  std::ostringstream out;
  out << "grade,samples,t,rms_error,mean_abs_error\n";
  out.precision(17);
  for (const auto& g : stats.grades)
    out << g.grade << "," << stats.samples << "," << stats.t << ","
        << g.rms_error << "," << g.mean_abs_error << "\n";
  return out.str();
}

}  // namespace levyflow
