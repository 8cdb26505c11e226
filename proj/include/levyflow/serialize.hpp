#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "levyflow/chen_strichartz.hpp"
#include "levyflow/levy_sim.hpp"
#include "levyflow/trees.hpp"

namespace levyflow {

using nlohmann::json;

/// Rationals serialize as integer strings so nothing is rounded.
json rational_to_json(const Rational& q);
json word_series_to_json(const WordSeries& s);

json log_flowmap_to_json(const LogFlowmap& lf);
std::string log_flowmap_to_text(const LogFlowmap& lf);
std::string log_flowmap_to_latex(const LogFlowmap& lf);

struct MagnusRow {
  int degree;
  DecoratedTree tree;
  Rational c;        // c_tau
  Integer sigma;     // symmetry factor
  Rational omega;    // |c_tau| * sigma, the omega cross-check column
};

std::vector<MagnusRow> magnus_table(int max_degree, int decoration);
json magnus_table_to_json(const std::vector<MagnusRow>& rows);
std::string magnus_table_to_text(const std::vector<MagnusRow>& rows);
std::string magnus_table_to_latex(const std::vector<MagnusRow>& rows);
std::string magnus_table_to_csv(const std::vector<MagnusRow>& rows);

std::string tree_to_latex(const DecoratedTree& t);

json statistics_to_json(const PathStatistics& stats);
std::string statistics_to_csv(const PathStatistics& stats);

}  // namespace levyflow
