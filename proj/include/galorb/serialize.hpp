#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "galorb/catalog.hpp"

namespace galorb::io {

using json = nlohmann::ordered_json;

// ---- writing ---------------------------------------------------------------

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const Mat& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    a.push_back(row);
  }
  return a;
}

/// Column vectors are written as flat arrays.
inline json vector_to_json(const Mat& v) {
  json a = json::array();
  for (std::size_t i = 0; i < v.rows(); ++i) a.push_back(v[i].str());
  return a;
}

inline json space_header(const InnerProductSpace& s) {
  json j;
  j["n"] = s.n();
  j["gram_tilde"] = to_json(s.gram.block(1, 1, s.n(), s.n()));
  return j;
}

inline json to_json(const GroupElement& g) {
  json j = space_header(g.space);
  j["P"] = to_json(g.P);
  j["p"] = vector_to_json(g.p);
  return j;
}

inline json to_json(const AlgebraElement& a) {
  json j = space_header(a.space);
  j["X"] = to_json(a.X);
  j["x"] = vector_to_json(a.x);
  return j;
}

inline json to_json(const SpecialTuple& t) {
  json j = space_header(t.space);
  j["Y"] = to_json(t.Y);
  j["y"] = vector_to_json(t.y);
  return j;
}

inline json to_json(const Summand& s) {
  json j;
  j["kind"] = kind_name(s.kind);
  j["dim"] = s.dim;
  j["index"] = s.index;
  json m = json::object();
  for (const auto& [k, v] : s.moduli) m[k] = v.str();
  j["moduli"] = m;
  return j;
}

inline json to_json(const Decomposition& d) {
  json a = json::array();
  for (const auto& s : d.summands) a.push_back(to_json(s));
  json j;
  j["summands"] = a;
  return j;
}

inline json to_json(const OrbitAtlas& atlas) {
  json rows = json::array();
  for (const auto& r : atlas.rows) {
    json row = to_json(r.decomposition);
    row["in_paper"] = r.in_paper;
    row["paper_row"] = r.paper_row ? json(*r.paper_row) : json(nullptr);
    rows.push_back(row);
  }
  json j;
  j["total_dim"] = atlas.total_dim;
  j["total_index"] = atlas.total_index;
  j["rows"] = rows;
  return j;
}

inline json to_json(const AtlasDiff& d) {
  json j;
  j["missing"] = json::array();
  j["extra"] = json::array();
  for (const auto& x : d.missing) j["missing"].push_back(to_json(x));
  for (const auto& x : d.extra) j["extra"].push_back(to_json(x));
  return j;
}

inline json error_json(const Error& e) {
  json j;
  j["error"] = error_code_name(e.code());
  j["message"] = e.what();
  return j;
}

// ---- reading ---------------------------------------------------------------
// Every reader takes the JSON path of the value so errors point at the offending entry.

[[noreturn]] inline void parse_error(const std::string& path, const std::string& what) {
  fail(ErrorCode::Parse, path + ": " + what);
}

inline const json& member(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) parse_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(path, "missing key '" + key + "'");
  return *it;
}

inline Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) parse_error(path, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    parse_error(path, e.what());
  }
}

inline Mat mat_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) parse_error(path, "expected an array of rows");
  std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array()) parse_error(path + "[" + std::to_string(i) + "]", "expected a row array");
    if (i == 0) cols = j[i].size();
    if (j[i].size() != cols) parse_error(path + "[" + std::to_string(i) + "]", "ragged row");
  }
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k)
      m(i, k) = rational_from_json(j[i][k], path + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  return m;
}

/// Accepts a flat array or a column of one-element rows.
inline Mat vector_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) parse_error(path, "expected an array");
  Mat v(j.size(), 1);
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string p = path + "[" + std::to_string(i) + "]";
    if (j[i].is_array()) {
      if (j[i].size() != 1) parse_error(p, "expected a single entry");
      v[i] = rational_from_json(j[i][0], p + "[0]");
    } else {
      v[i] = rational_from_json(j[i], p);
    }
  }
  return v;
}

inline InnerProductSpace space_from_json(const json& j, const std::string& path) {
  const json& nj = member(j, "n", path);
  if (!nj.is_number_integer() || nj.get<long long>() < 0) parse_error(path + ".n", "expected a nonnegative integer");
  auto n = static_cast<std::size_t>(nj.get<long long>());
  Mat gt = Mat::identity(n);
  if (j.contains("gram_tilde")) gt = mat_from_json(j["gram_tilde"], path + ".gram_tilde");
  try {
    return build_chain(n, gt).full;
  } catch (const Error& e) {
    parse_error(path + ".gram_tilde", e.what());
  }
}

namespace detail {

inline void expect_shape(const Mat& m, std::size_t r, std::size_t c, const std::string& path) {
  if (m.rows() != r || m.cols() != c)
    fail(ErrorCode::DimensionMismatch, path + ": expected " + std::to_string(r) + "x" + std::to_string(c) +
                                           " entries, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

}  // namespace detail

inline SpecialTuple tuple_from_json(const json& j, const std::string& path = "$") {
  InnerProductSpace s = space_from_json(j, path);
  Mat Y = mat_from_json(member(j, "Y", path), path + ".Y");
  Mat y = vector_from_json(member(j, "y", path), path + ".y");
  detail::expect_shape(Y, s.dim, s.dim, path + ".Y");
  detail::expect_shape(y, s.dim, 1, path + ".y");
  return make_tuple(s, Y, y);
}

inline GroupElement group_from_json(const json& j, const std::string& path = "$") {
  InnerProductSpace s = space_from_json(j, path);
  Mat P = mat_from_json(member(j, "P", path), path + ".P");
  Mat p = vector_from_json(member(j, "p", path), path + ".p");
  detail::expect_shape(P, s.dim, s.dim, path + ".P");
  detail::expect_shape(p, s.dim, 1, path + ".p");
  return make_group(s, P, p);
}

inline AlgebraElement algebra_from_json(const json& j, const std::string& path = "$") {
  InnerProductSpace s = space_from_json(j, path);
  Mat X = mat_from_json(member(j, "X", path), path + ".X");
  Mat x = vector_from_json(member(j, "x", path), path + ".x");
  detail::expect_shape(X, s.dim, s.dim, path + ".X");
  detail::expect_shape(x, s.dim, 1, path + ".x");
  return make_algebra(s, X, x);
}

inline Summand summand_from_json(const json& j, const std::string& path) {
  Summand s;
  const json& k = member(j, "kind", path);
  if (!k.is_string()) parse_error(path + ".kind", "expected a kind name");
  auto kind = kind_from_name(k.get<std::string>());
  if (!kind) parse_error(path + ".kind", "unknown kind '" + k.get<std::string>() + "'");
  s.kind = *kind;
  s.dim = member(j, "dim", path).get<int>();
  s.index = member(j, "index", path).get<int>();
  if (j.contains("moduli")) {
    const json& m = j["moduli"];
    if (!m.is_object()) parse_error(path + ".moduli", "expected an object");
    for (auto it = m.begin(); it != m.end(); ++it)
      s.moduli[it.key()] = rational_from_json(it.value(), path + ".moduli." + it.key());
  }
  return s;
}

inline Decomposition decomposition_from_json(const json& j, const std::string& path = "$") {
  const json& a = member(j, "summands", path);
  if (!a.is_array()) parse_error(path + ".summands", "expected an array");
  Decomposition d;
  for (std::size_t i = 0; i < a.size(); ++i)
    d.summands.push_back(summand_from_json(a[i], path + ".summands[" + std::to_string(i) + "]"));
  return d;
}

inline OrbitAtlas atlas_from_json(const json& j, const std::string& path = "$") {
  OrbitAtlas a;
  a.total_dim = member(j, "total_dim", path).get<int>();
  a.total_index = member(j, "total_index", path).get<int>();
  const json& rows = member(j, "rows", path);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string p = path + ".rows[" + std::to_string(i) + "]";
    AtlasRow r;
    r.decomposition = decomposition_from_json(rows[i], p).canonical();
    r.in_paper = rows[i].value("in_paper", false);
    if (rows[i].contains("paper_row") && !rows[i]["paper_row"].is_null()) r.paper_row = rows[i]["paper_row"].get<int>();
    a.rows.push_back(r);
  }
  return a;
}

/// Moduli list for `representative`: an array of objects name → rational.
inline std::vector<Moduli> moduli_from_json(const json& j, const std::string& path = "$") {
  if (!j.is_array()) parse_error(path, "expected an array of moduli objects");
  std::vector<Moduli> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string p = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_object()) parse_error(p, "expected an object");
    Moduli m;
    for (auto it = j[i].begin(); it != j[i].end(); ++it) m[it.key()] = rational_from_json(it.value(), p + "." + it.key());
    out.push_back(m);
  }
  return out;
}

/// Parses text, turning syntax errors into Parse errors.
inline json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, source + ": " + e.what());
  }
}

}  // namespace galorb::io
