// Copyright 2026 The robustcut Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROBUSTCUT_IO_HPP
#define ROBUSTCUT_IO_HPP

// JSON problem documents:
//
//   {"name": str, "sense": "max"|"min", "c": [..], "lb": [..], "ub": [..],
//    "integer": [bool..],
//    "rows": [{"support": [int..], "a": [..], "b": num, "beta": num,
//              "cov": [[..]..]}, ..]}
//
// Budget rows carry {"delta": [..], "gamma": num} in place of beta/cov. A
// document holds one row kind only. Infinite bounds are written as null.

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "robustcut/budget.hpp"
#include "robustcut/problem.hpp"

namespace robustcut {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

using ProblemDocument = std::variant<RobustProblem, BudgetProblem>;
using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

inline double number(const Json& v, const char* what) {
  if (!v.is_number()) throw ParseError(std::string(what) + ": expected a number");
  return v.get<double>();
}

inline std::vector<double> numbers(const Json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(number(e, what));
  return out;
}

inline std::vector<double> bounds(const Json& v, const char* what, double null_value) {
  if (!v.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<double> out;
  for (const auto& e : v) out.push_back(e.is_null() ? null_value : number(e, what));
  return out;
}

inline Json bound_json(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

template <class Row>
void read_header(const Json& doc, Problem<Row>& p) {
  p.name = doc.value("name", std::string{});
  const auto& sense = field(doc, "sense");
  if (sense == "max") p.sense = Sense::Maximize;
  else if (sense == "min") p.sense = Sense::Minimize;
  else throw ParseError("sense must be \"max\" or \"min\"");
  p.c = numbers(field(doc, "c"), "c");
  p.lb = bounds(field(doc, "lb"), "lb", -kInf);
  p.ub = bounds(field(doc, "ub"), "ub", kInf);
  const auto& integer = field(doc, "integer");
  if (!integer.is_array()) throw ParseError("integer: expected an array");
  for (const auto& e : integer) {
    if (!e.is_boolean()) throw ParseError("integer: expected booleans");
    p.kind.push_back(e.get<bool>() ? VarKind::Integer : VarKind::Continuous);
  }
}

template <class Row>
Json write_header(const Problem<Row>& p) {
  Json doc;
  doc["name"] = p.name;
  doc["sense"] = std::string(to_string(p.sense));
  doc["c"] = p.c;
  Json lb = Json::array(), ub = Json::array(), integer = Json::array();
  for (double v : p.lb) lb.push_back(bound_json(v));
  for (double v : p.ub) ub.push_back(bound_json(v));
  for (auto k : p.kind) integer.push_back(k == VarKind::Integer);
  doc["lb"] = std::move(lb);
  doc["ub"] = std::move(ub);
  doc["integer"] = std::move(integer);
  return doc;
}

inline std::vector<std::size_t> support_of(const Json& row) {
  const auto& s = field(row, "support");
  if (!s.is_array()) throw ParseError("support: expected an array");
  std::vector<std::size_t> out;
  for (const auto& e : s) {
    if (!e.is_number_integer() || e.get<long long>() < 0)
      throw ParseError("support: expected non-negative integers");
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

}  // namespace detail

inline ProblemDocument parse_problem(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("problem document must be a JSON object");
  const auto& rows = detail::field(doc, "rows");
  if (!rows.is_array()) throw ParseError("rows: expected an array");

  bool any_budget = false, any_ellipsoid = false;
  for (const auto& r : rows) {
    if (!r.is_object()) throw ParseError("rows: expected objects");
    any_budget = any_budget || r.contains("delta") || r.contains("gamma");
    any_ellipsoid = any_ellipsoid || r.contains("cov") || r.contains("beta");
  }
  if (any_budget && any_ellipsoid)
    throw ParseError("rows mix ellipsoidal (cov/beta) and budget (delta/gamma) kinds");

  try {
    if (any_budget) {
      BudgetProblem p;
      detail::read_header(doc, p);
      for (const auto& r : rows)
        p.rows.push_back({detail::support_of(r), detail::numbers(detail::field(r, "a"), "a"),
                          detail::number(detail::field(r, "b"), "b"),
                          detail::numbers(detail::field(r, "delta"), "delta"),
                          detail::number(detail::field(r, "gamma"), "gamma")});
      return p;
    }
    RobustProblem p;
    detail::read_header(doc, p);
    for (const auto& r : rows) {
      EllipsoidalRow row;
      row.support = detail::support_of(r);
      row.a = detail::numbers(detail::field(r, "a"), "a");
      row.b = detail::number(detail::field(r, "b"), "b");
      row.beta = detail::number(detail::field(r, "beta"), "beta");
      const auto& cov = detail::field(r, "cov");
      if (!cov.is_array()) throw ParseError("cov: expected an array of arrays");
      row.cov = DenseMatrix(cov.size());
      for (std::size_t i = 0; i < cov.size(); ++i) {
        const auto line = detail::numbers(cov[i], "cov");
        if (line.size() != cov.size()) throw ParseError("cov: matrix must be square");
        for (std::size_t j = 0; j < line.size(); ++j) row.cov(i, j) = line[j];
      }
      p.rows.push_back(std::move(row));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

inline ProblemDocument load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

inline Json to_json(const RobustProblem& p) {
  Json doc = detail::write_header(p);
  Json rows = Json::array();
  for (const auto& r : p.rows) {
    Json row;
    row["support"] = r.support;
    row["a"] = r.a;
    row["b"] = r.b;
    row["beta"] = r.beta;
    Json cov = Json::array();
    for (std::size_t i = 0; i < r.cov.size(); ++i) {
      Json line = Json::array();
      for (std::size_t j = 0; j < r.cov.size(); ++j) line.push_back(r.cov(i, j));
      cov.push_back(std::move(line));
    }
    row["cov"] = std::move(cov);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

inline Json to_json(const BudgetProblem& p) {
  Json doc = detail::write_header(p);
  Json rows = Json::array();
  for (const auto& r : p.rows) {
    Json row;
    row["support"] = r.support;
    row["a"] = r.a;
    row["b"] = r.b;
    row["delta"] = r.deltas;
    row["gamma"] = r.gamma;
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

inline std::string dump_problem(const ProblemDocument& doc) {
  return std::visit([](const auto& p) { return to_json(p).dump(1) + "\n"; }, doc);
}

}  // namespace robustcut

#endif  // ROBUSTCUT_IO_HPP
