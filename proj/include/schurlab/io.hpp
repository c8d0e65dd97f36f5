// Matrix documents: canonical JSON in and out, CSV in only.
//
//   {"rows":2,"cols":2,"data":[[[1,0],[0,1]],[[0,-1],[1,0]]]}
//
// Each entry is [re, im]; partial documents may use null for unspecified
// entries. Numbers are written with 17 significant digits so that every
// double survives a write/read cycle bit for bit.
#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "schurlab/completion.hpp"
#include "schurlab/core_matrix.hpp"
#include "schurlab/multiplicative.hpp"

namespace schurlab::io {

using nlohmann::json;

class ParseError : public Error {
 public:
  using Error::Error;
};

struct MatrixDocument {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::optional<Complex>> data;  // row-major; empty = unspecified

  bool has_nulls() const {
    for (const auto& z : data)
      if (!z) return true;
    return false;
  }
};

inline std::string format_double(double x) {
  if (!std::isfinite(x)) throw Error("cannot serialize a non-finite number");
  if (x == 0.0) return std::signbit(x) ? "-0" : "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string format_complex(Complex z) {
  return "[" + format_double(z.real()) + "," + format_double(z.imag()) + "]";
}

inline std::string serialize(const MatrixDocument& doc) {
  std::string out = "{\"rows\":" + std::to_string(doc.rows) + ",\"cols\":" + std::to_string(doc.cols) + ",\"data\":[";
  for (std::size_t i = 0; i < doc.rows; ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < doc.cols; ++j) {
      if (j) out += ',';
      const auto& z = doc.data[i * doc.cols + j];
      out += z ? format_complex(*z) : "null";
    }
    out += ']';
  }
  out += "]}";
  return out;
}

inline MatrixDocument to_document(const ComplexMatrix& a) {
  MatrixDocument doc{a.rows(), a.cols(), {}};
  doc.data.assign(a.entries().begin(), a.entries().end());
  return doc;
}

inline MatrixDocument to_document(const PartialMatrix& p) {
  MatrixDocument doc{p.size(), p.size(), {}};
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      doc.data.push_back(p.is_specified(i, j) ? std::optional<Complex>(p.value(i, j)) : std::nullopt);
  return doc;
}

inline std::string serialize(const ComplexMatrix& a) { return serialize(to_document(a)); }

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

inline double json_number(const json& v, const char* what) {
  if (!v.is_number()) throw ParseError(std::string(what) + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(std::string(what) + ": non-finite number");
  return x;
}

/// Either [re, im] or a bare real number.
inline Complex json_scalar(const json& v, const char* what) {
  if (v.is_number()) return {json_number(v, what), 0.0};
  if (!v.is_array() || v.size() != 2) throw ParseError(std::string(what) + ": expected [re, im]");
  return {json_number(v[0], what), json_number(v[1], what)};
}

inline MatrixDocument parse_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("rows") || !root.contains("cols") || !root.contains("data"))
    throw ParseError("matrix document needs rows, cols and data");
  const auto& rows = root["rows"];
  const auto& cols = root["cols"];
  if (!rows.is_number_integer() || !cols.is_number_integer() || rows.get<long long>() <= 0 ||
      cols.get<long long>() <= 0)
    throw ParseError("rows and cols must be positive integers");
  MatrixDocument doc{rows.get<std::size_t>(), cols.get<std::size_t>(), {}};
  const auto& data = root["data"];
  if (!data.is_array() || data.size() != doc.rows)
    throw ParseError("data must hold " + std::to_string(doc.rows) + " rows");
  doc.data.reserve(doc.rows * doc.cols);
  for (const auto& row : data) {
    if (!row.is_array() || row.size() != doc.cols)
      throw ParseError("every row must hold " + std::to_string(doc.cols) + " entries");
    for (const auto& entry : row) {
      if (entry.is_null()) {
        doc.data.emplace_back();
        continue;
      }
      if (!entry.is_array() || entry.size() != 2) throw ParseError("entries must be [re, im] or null");
      doc.data.emplace_back(Complex{json_number(entry[0], "entry"), json_number(entry[1], "entry")});
    }
  }
  return doc;
}

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline double parse_real(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double x = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(x))
    throw ParseError("invalid number '" + std::string(s) + "'");
  return x;
}

/// Parses "re", "im i", "re+im i", "re-im i", "i", "-i" (also with 'j').
inline Complex parse_complex(std::string_view text) {
  const auto s = trim(text);
  if (s.empty()) throw ParseError("empty complex literal");
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s), 0.0};
  const auto body = s.substr(0, s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const auto imag_part = [](std::string_view t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (split == std::string_view::npos) return {0.0, imag_part(body)};
  return {parse_real(body.substr(0, split)), imag_part(body.substr(split))};
}

/// One row per line, comma-separated cells; empty, "null" or "?" cells are
/// unspecified.
inline MatrixDocument parse_csv(std::string_view text) {
  MatrixDocument doc;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::optional<Complex>> row;
    std::size_t cell_start = 0;
    while (true) {
      auto comma = line.find(',', cell_start);
      const auto cell = trim(line.substr(cell_start, comma == std::string_view::npos ? line.npos : comma - cell_start));
      if (cell.empty() || cell == "null" || cell == "?")
        row.emplace_back();
      else
        row.emplace_back(parse_complex(cell));
      if (comma == std::string_view::npos) break;
      cell_start = comma + 1;
    }
    if (doc.rows == 0) doc.cols = row.size();
    if (row.size() != doc.cols) throw ParseError("CSV row " + std::to_string(doc.rows + 1) + " has the wrong width");
    doc.data.insert(doc.data.end(), row.begin(), row.end());
    ++doc.rows;
  }
  if (doc.rows == 0) throw ParseError("empty CSV document");
  return doc;
}

inline std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

inline MatrixDocument load_document(const std::string& path) {
  const auto text = read_text(path);
  return ends_with(path, ".csv") ? parse_csv(text) : parse_json(text);
}

inline ComplexMatrix to_matrix(const MatrixDocument& doc) {
  std::vector<Complex> entries;
  entries.reserve(doc.data.size());
  for (std::size_t k = 0; k < doc.data.size(); ++k) {
    if (!doc.data[k])
      throw ParseError("unspecified entry at (" + std::to_string(k / doc.cols + 1) + "," +
                       std::to_string(k % doc.cols + 1) + ") in a full matrix document");
    entries.push_back(*doc.data[k]);
  }
  return ComplexMatrix::from_entries(doc.rows, doc.cols, std::move(entries));
}

inline PartialMatrix to_partial(const MatrixDocument& doc) {
  if (doc.rows != doc.cols) throw ParseError("partial matrix must be square");
  PartialMatrix p(doc.rows);
  for (std::size_t i = 0; i < doc.rows; ++i)
    for (std::size_t j = 0; j < doc.cols; ++j)
      if (const auto& z = doc.data[i * doc.cols + j]) p.set(i, j, *z);
  return p;
}

/// JSON array of scaling values, each [re, im] or a real number.
inline ScalingVector parse_scaling(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_array() || root.empty()) throw ParseError("scaling file must be a nonempty JSON array");
  std::vector<Complex> values;
  for (const auto& v : root) values.push_back(json_scalar(v, "scaling value"));
  return ScalingVector(std::move(values));
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Finite numbers as-is, non-finite ones as null.
inline json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

inline json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline json tolerance_json(const Tolerance& tol) { return {{"rel", tol.rel()}, {"abs", tol.abs()}}; }

inline json conditions_json(const std::vector<ConditionResult>& conditions) {
  json out = json::object();
  for (const auto& c : conditions) out[c.name] = {{"pass", c.pass}, {"residual", number(c.residual)}};
  return out;
}

inline json scaling_json(const ScalingVector& f) {
  json out = json::array();
  for (const auto& z : f.values()) out.push_back(complex_json(z));
  return out;
}

}  // namespace schurlab::io
