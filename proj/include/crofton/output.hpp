#pragma once

// Rendering of exact results in the five output formats.

#include "crofton/exact/pi_eval.hpp"
#include "crofton/exact/pi_text.hpp"

#include <json.hpp>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace crofton {

enum class Format { exact, latex, json, csv, float_ };

inline Format parse_format(const std::string& s) {
  if (s == "exact") return Format::exact;
  if (s == "latex") return Format::latex;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "float") return Format::float_;
  throw std::invalid_argument("unknown format: " + s);
}

/// 15 significant digits.
inline std::string float_text(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

inline std::string render_scalar(const PiNumber& v, Format fmt) {
  switch (fmt) {
    case Format::exact: return format_pi(v);
    case Format::latex: return to_latex(v);
    case Format::float_: return float_text(pi_eval_float(v));
    case Format::json: return to_json(v).dump();
    case Format::csv: return format_pi(v) + "," + float_text(pi_eval_float(v));
  }
  return {};
}

/// A labelled list of values, e.g. an f-vector indexed by k.
struct LabelledValues {
  std::string quantity;
  std::string index_name;
  std::vector<int> indices;
  std::vector<PiNumber> values;
};

inline std::string render_values(const LabelledValues& lv, Format fmt) {
  std::string out;
  auto join = [&](auto&& each) {
    for (std::size_t i = 0; i < lv.values.size(); ++i) {
      if (i) out += ", ";
      out += each(lv.values[i]);
    }
    out += "\n";
  };
  switch (fmt) {
    case Format::exact: join([](const PiNumber& v) { return format_pi(v); }); break;
    case Format::latex: join([](const PiNumber& v) { return "$" + to_latex(v) + "$"; }); break;
    case Format::float_: join([](const PiNumber& v) { return float_text(pi_eval_float(v)); }); break;
    case Format::csv:
      out += lv.index_name + ",exact,float\n";
      for (std::size_t i = 0; i < lv.values.size(); ++i)
        out += std::to_string(lv.indices[i]) + "," + format_pi(lv.values[i]) + "," +
               float_text(pi_eval_float(lv.values[i])) + "\n";
      break;
    case Format::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (std::size_t i = 0; i < lv.values.size(); ++i)
        arr.push_back({{lv.index_name, lv.indices[i]},
                       {"exact", format_pi(lv.values[i])},
                       {"value", to_json(lv.values[i])},
                       {"float", pi_eval_float(lv.values[i])}});
      out = nlohmann::json{{"quantity", lv.quantity}, {"values", arr}}.dump(2) + "\n";
      break;
    }
  }
  return out;
}

}  // namespace crofton
