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

#include "robustcut/io.hpp"

#include <random>

#include <gtest/gtest.h>

#include "robustcut/generators.hpp"
#include "support/oracles.hpp"

namespace robustcut {
namespace {

constexpr const char* kSmall = R"({
  "name": "small", "sense": "min", "c": [1, 2], "lb": [null, 0], "ub": [5, null],
  "integer": [true, false],
  "rows": [{"support": [0, 1], "a": [1, 1], "b": 3, "beta": 1.5, "cov": [[1, 0], [0, 2]]}]
})";

TEST(ParseProblem, EllipsoidalDocument) {
  const auto doc = parse_problem(kSmall);
  const auto* p = std::get_if<RobustProblem>(&doc);
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->name, "small");
  EXPECT_EQ(p->sense, Sense::Minimize);
  EXPECT_EQ(p->lb[0], -kInf);
  EXPECT_EQ(p->ub[1], kInf);
  EXPECT_EQ(p->kind[0], VarKind::Integer);
  EXPECT_EQ(p->kind[1], VarKind::Continuous);
  EXPECT_EQ(p->rows[0].beta, 1.5);
  EXPECT_EQ(p->rows[0].cov(1, 1), 2.0);
}

TEST(ParseProblem, BudgetDocument) {
  const auto doc = parse_problem(R"({"sense": "max", "c": [1], "lb": [0], "ub": [4],
    "integer": [true], "rows": [{"support": [0], "a": [2], "b": 5, "delta": [0.5], "gamma": 1}]})");
  const auto* p = std::get_if<BudgetProblem>(&doc);
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->rows[0].deltas, std::vector<double>{0.5});
  EXPECT_EQ(p->rows[0].gamma, 1.0);
}

TEST(ParseProblem, Errors) {
  EXPECT_THROW(parse_problem("{"), ParseError);
  EXPECT_THROW(parse_problem("[]"), ParseError);
  EXPECT_THROW(parse_problem(R"({"sense": "max"})"), ParseError);
  EXPECT_THROW(parse_problem(R"({"sense": "up", "c": [], "lb": [], "ub": [], "integer": [], "rows": []})"),
               ParseError);
  EXPECT_THROW(parse_problem(R"({"sense": "max", "c": ["a"], "lb": [0], "ub": [1], "integer": [true],
    "rows": []})"), ParseError);
  EXPECT_THROW(parse_problem(R"({"sense": "max", "c": [1], "lb": [0], "ub": [1], "integer": [1],
    "rows": []})"), ParseError);
  EXPECT_THROW(parse_problem(R"({"sense": "max", "c": [1], "lb": [0], "ub": [1], "integer": [true],
    "rows": [{"support": [-1], "a": [1], "b": 1, "beta": 1, "cov": [[1]]}]})"), ParseError);
  EXPECT_THROW(parse_problem(R"({"sense": "max", "c": [1], "lb": [0], "ub": [1], "integer": [true],
    "rows": [{"support": [0], "a": [1], "b": 1, "beta": 1, "cov": [[1, 2]]}]})"), ParseError);
}

TEST(ParseProblem, MixedRowKindsRejected) {
  EXPECT_THROW(parse_problem(R"({"sense": "max", "c": [1], "lb": [0], "ub": [1], "integer": [true],
    "rows": [{"support": [0], "a": [1], "b": 1, "beta": 1, "cov": [[1]]},
             {"support": [0], "a": [1], "b": 1, "delta": [1], "gamma": 1}]})"), ParseError);
}

TEST(ParseProblem, LoadMissingFile) {
  EXPECT_THROW(load_problem("/nonexistent/problem.json"), ParseError);
}

TEST(DumpProblem, RoundTripsGenerators) {
  TrussSpec spec;
  spec.n_blocks = 2;
  for (const ProblemDocument& doc :
       {ProblemDocument(gen_illustrative()), ProblemDocument(gen_truss(spec)),
        ProblemDocument(gen_truss_budget(spec))}) {
    const auto text = dump_problem(doc);
    EXPECT_EQ(dump_problem(parse_problem(text)), text);
  }
}

TEST(DumpProblem, RoundTripsRandomProblemsExactly) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    auto p = testing::random_robust_problem(rng);
    p.lb[0] = -kInf;
    const auto back = std::get<RobustProblem>(parse_problem(dump_problem(p)));
    EXPECT_EQ(back.c, p.c);
    EXPECT_EQ(back.lb, p.lb);
    EXPECT_EQ(back.ub, p.ub);
    EXPECT_EQ(back.kind, p.kind);
    EXPECT_EQ(back.sense, p.sense);
    ASSERT_EQ(back.rows.size(), p.rows.size());
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
      EXPECT_EQ(back.rows[i].support, p.rows[i].support);
      EXPECT_EQ(back.rows[i].a, p.rows[i].a);
      EXPECT_EQ(back.rows[i].b, p.rows[i].b);
      EXPECT_EQ(back.rows[i].beta, p.rows[i].beta);
      EXPECT_EQ(back.rows[i].cov, p.rows[i].cov);
    }
  }
}

TEST(DumpProblem, NullForInfiniteBounds) {
  RobustProblem p;
  p.add_variable(1, -kInf, kInf, VarKind::Continuous);
  const auto text = dump_problem(p);
  EXPECT_NE(text.find("null"), std::string::npos);
}

}  // namespace
}  // namespace robustcut
