#pragma once

// The five reference tables, regenerated from the formula layer.

#include "crofton/closed_forms.hpp"
#include "crofton/output.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace crofton {

struct TableRow {
  int label = 0;
  std::vector<PiNumber> cells;
};

struct Table {
  int number = 0;
  std::string title;
  std::string row_name;
  std::string col_name;
  std::vector<int> columns;  // column index values; rows may be shorter (Table 1)
  std::vector<TableRow> rows;
};

inline Table make_table(int which) {
  Table t;
  t.number = which;
  switch (which) {
    case 1:
      t.title = "expected f-vector of the Poisson zero polytope, d = 1..10";
      t.row_name = "d";
      t.col_name = "l";
      for (int l = 0; l < 10; ++l) t.columns.push_back(l);
      for (int d = 1; d <= 10; ++d) t.rows.push_back({d, zero_cell_f_vector(d).entries});
      break;
    case 2:
      t.title = "A[n,k] for n = 1..14, k = 0,2,...,14";
      t.row_name = "n";
      t.col_name = "k";
      for (int k = 0; k <= 14; k += 2) t.columns.push_back(k);
      for (int n = 1; n <= 14; ++n) {
        TableRow r{n, {}};
        for (int k : t.columns) r.cells.push_back(a_value(n, k));
        t.rows.push_back(std::move(r));
      }
      break;
    case 3:
      t.title = "A[n,k] for n = 0..8, k = 0..5";
      t.row_name = "n";
      t.col_name = "k";
      for (int k = 0; k <= 5; ++k) t.columns.push_back(k);
      for (int n = 0; n <= 8; ++n) {
        TableRow r{n, {}};
        for (int k : t.columns) r.cells.push_back(a_value(n, k));
        t.rows.push_back(std::move(r));
      }
      break;
    case 4:
      t.title = "B{n,k} for n = 1..10, k = 1..4";
      t.row_name = "n";
      t.col_name = "k";
      for (int k = 1; k <= 4; ++k) t.columns.push_back(k);
      for (int n = 1; n <= 10; ++n) {
        TableRow r{n, {}};
        for (int k : t.columns) r.cells.push_back(b_value(n, k));
        t.rows.push_back(std::move(r));
      }
      break;
    case 5:
      t.title = "Sylvester probability P(d) on the half-sphere, d = 1..10";
      t.row_name = "d";
      t.col_name = "";
      t.columns = {0};
      for (int d = 1; d <= 10; ++d) t.rows.push_back({d, {sylvester_probability(d)}});
      break;
    default:
      throw std::invalid_argument("tables are numbered 1 to 5");
  }
  return t;
}

inline std::string render_table(const Table& t, Format fmt) {
  std::string out;
  const std::string heading = "Table " + std::to_string(t.number) + ": " + t.title;
  switch (fmt) {
    case Format::exact:
    case Format::float_:
      out = "# " + heading + "\n";
      for (const auto& r : t.rows) {
        out += t.row_name + "=" + std::to_string(r.label) + ":";
        for (std::size_t i = 0; i < r.cells.size(); ++i) {
          out += i ? ", " : " ";
          out += fmt == Format::exact ? format_pi(r.cells[i]) : float_text(pi_eval_float(r.cells[i]));
        }
        out += "\n";
      }
      break;
    case Format::csv: {
      out = t.row_name + (t.col_name.empty() ? "" : "," + t.col_name) + ",exact,float\n";
      for (const auto& r : t.rows)
        for (std::size_t i = 0; i < r.cells.size(); ++i) {
          out += std::to_string(r.label) + ",";
          if (!t.col_name.empty()) out += std::to_string(t.columns[i]) + ",";
          out += format_pi(r.cells[i]) + "," + float_text(pi_eval_float(r.cells[i])) + "\n";
        }
      break;
    }
    case Format::latex: {
      std::size_t width = 0;
      for (const auto& r : t.rows) width = std::max(width, r.cells.size());
      out = "% " + heading + "\n\\begin{tabular}{r|" + std::string(width, 'c') + "}\n";
      out += "$" + t.row_name + "$";
      for (std::size_t i = 0; i < width; ++i)
        out += t.col_name.empty() ? " & $P(" + t.row_name + ")$" : " & $" + t.col_name + "=" + std::to_string(t.columns[i]) + "$";
      out += " \\\\\n\\hline\n";
      for (const auto& r : t.rows) {
        out += std::to_string(r.label);
        for (std::size_t i = 0; i < width; ++i) out += i < r.cells.size() ? " & $" + to_latex(r.cells[i]) + "$" : " & ";
        out += " \\\\\n";
      }
      out += "\\end{tabular}\n";
      break;
    }
    case Format::json: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : t.rows) {
        nlohmann::json cells = nlohmann::json::array();
        for (std::size_t i = 0; i < r.cells.size(); ++i)
          cells.push_back({{"index", t.columns[i]}, {"exact", format_pi(r.cells[i])}, {"value", to_json(r.cells[i])}});
        rows.push_back({{t.row_name, r.label}, {"cells", cells}});
      }
      out = nlohmann::json{{"table", t.number}, {"title", t.title}, {"rows", rows}}.dump(2) + "\n";
      break;
    }
  }
  return out;
}

}  // namespace crofton
