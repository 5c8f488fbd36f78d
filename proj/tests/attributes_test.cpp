// Copyright 2026 The GASM Authors
//
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

#include "gasm/attributes.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "gasm/rng.hpp"

namespace gasm {
namespace {

Attribute cat(std::vector<Token> v, std::optional<double> rho = std::nullopt) {
  return Attribute::categorical("c", std::move(v), rho);
}
Attribute meas(std::vector<double> v, std::optional<double> rho = std::nullopt) {
  return Attribute::measurable("m", std::move(v), rho);
}

TEST(AttributeDistance, CategoricalEqualIsOne) {
  for (double rho : {0.0, 0.5, 1.0, 7.0}) {
    const Matrix d = attribute_distance(cat({Token{std::int64_t{3}}}, rho),
                                        cat({Token{std::int64_t{3}}}, rho));
    EXPECT_EQ(d(0, 0), 1.0);
  }
}

TEST(AttributeDistance, CategoricalUnequal) {
  const Matrix d = attribute_distance(cat({Token{"a"}}, 1.0), cat({Token{"b"}}, 1.0));
  EXPECT_NEAR(d(0, 0), 0.60653, 1e-5);
  EXPECT_DOUBLE_EQ(d(0, 0), std::exp(-0.5));
  const Matrix exact = attribute_distance(cat({Token{"a"}}, 0.0), cat({Token{"b"}}, 0.0));
  EXPECT_EQ(exact(0, 0), 0.0);
}

TEST(AttributeDistance, StringAndIntegerTokensDiffer) {
  const Matrix d = attribute_distance(cat({Token{"1"}}, 0.0),
                                      cat({Token{std::int64_t{1}}}, 0.0));
  EXPECT_EQ(d(0, 0), 0.0);
}

TEST(AttributeDistance, Measurable) {
  const Matrix d = attribute_distance(meas({0.0}, 1.0), meas({1.0}, 1.0));
  EXPECT_DOUBLE_EQ(d(0, 0), std::exp(-0.5));
  const Matrix same = attribute_distance(meas({2.5}, 0.3), meas({2.5}, 0.3));
  EXPECT_EQ(same(0, 0), 1.0);
  const Matrix exact = attribute_distance(meas({1.0, 2.0}, 0.0), meas({2.0}, 0.0));
  EXPECT_EQ(exact(0, 0), 0.0);
  EXPECT_EQ(exact(1, 0), 1.0);
}

TEST(AttributeDistance, ShapeAndOrientation) {
  const Matrix d = attribute_distance(meas({0.0, 1.0, 2.0}, 1.0), meas({0.0, 2.0}, 1.0));
  ASSERT_EQ(d.rows(), 3);
  ASSERT_EQ(d.cols(), 2);
  EXPECT_DOUBLE_EQ(d(2, 0), std::exp(-2.0));
  EXPECT_DOUBLE_EQ(d(0, 1), std::exp(-2.0));
  EXPECT_DOUBLE_EQ(d(1, 1), std::exp(-0.5));
}

TEST(AttributeDistance, Errors) {
  EXPECT_THROW(attribute_distance(meas({1.0}), cat({Token{"a"}})), Error);
  EXPECT_THROW(attribute_distance(Attribute::measurable("x", {1.0}),
                                  Attribute::measurable("y", {1.0})),
               Error);
  EXPECT_THROW(attribute_distance(meas({1.0}, 1.0), meas({1.0}, 2.0)), Error);
  // A value set on one side is used for both.
  EXPECT_NO_THROW(attribute_distance(meas({1.0}, 1.0), meas({1.0})));
}

TEST(DefaultError, Examples) {
  EXPECT_EQ(default_error(meas({4.0, 4.0}), meas({4.0})), 0.0);
  EXPECT_NEAR(default_error(meas({0.0, 1.0}), meas({0.0, 1.0})), std::sqrt(0.5), 1e-15);
  EXPECT_EQ(default_error(cat({Token{"x"}, Token{"x"}}), cat({Token{"x"}})), 0.0);
  EXPECT_THROW(default_error(meas({}), meas({1.0})), Error);
}

double population_std(const std::vector<double>& xs) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double s = 0.0;
  for (double x : xs) s += (x - mean) * (x - mean);
  return std::sqrt(s / static_cast<double>(xs.size()));
}

TEST(DefaultError, MatchesPairEnumeration) {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int na = 1 + static_cast<int>(rng.below(9));
    const int nb = 1 + static_cast<int>(rng.below(9));
    std::vector<double> a(na), b(nb);
    std::vector<Token> ta, tb;
    for (double& x : a) x = rng.normal() * 3.0;
    for (double& x : b) x = rng.normal() + 1.0;
    for (int i = 0; i < na; ++i) ta.emplace_back(static_cast<std::int64_t>(rng.below(3)));
    for (int i = 0; i < nb; ++i) tb.emplace_back(static_cast<std::int64_t>(rng.below(3)));
    std::vector<double> diffs, same;
    for (double x : a)
      for (double y : b) diffs.push_back(x - y);
    for (const Token& x : ta)
      for (const Token& y : tb) same.push_back(x == y ? 1.0 : 0.0);
    EXPECT_NEAR(default_error(meas(a), meas(b)), population_std(diffs), 1e-9);
    EXPECT_NEAR(default_error(cat(ta), cat(tb)), population_std(same), 1e-12);
  }
}

TEST(AttributeDistance, UnsetErrorUsesDefault) {
  const Attribute a = meas({0.0, 1.0}), b = meas({0.0, 1.0});
  const double rho = std::sqrt(0.5);
  const Matrix d = attribute_distance(a, b);
  EXPECT_NEAR(d(0, 1), std::exp(-1.0 / (2 * rho * rho)), 1e-15);
}

TEST(AttributeDistance, ZeroSpreadFallsBackToExactMatch) {
  const Matrix d = attribute_distance(meas({2.0, 2.0}), meas({2.0}));
  EXPECT_EQ(d, Matrix::Ones(2, 1));
}

TEST(AttributeDistance, BoundedAndMonotoneInRho) {
  Rng rng(5);
  std::vector<double> a(6), b(5);
  for (double& x : a) x = rng.normal();
  for (double& x : b) x = rng.normal();
  Matrix prev = Matrix::Zero(6, 5);
  for (double rho : {0.1, 0.3, 1.0, 3.0, 10.0}) {
    const Matrix d = attribute_distance(meas(a, rho), meas(b, rho));
    EXPECT_GE(d.minCoeff(), 0.0);
    EXPECT_LE(d.maxCoeff(), 1.0);
    EXPECT_TRUE((d.array() >= prev.array()).all());
    prev = d;
  }
  const double range = 10.0;  // values are well within [-5, 5]
  const Matrix wide = attribute_distance(meas(a, 1e3 * range), meas(b, 1e3 * range));
  EXPECT_LT((wide.array() - 1.0).abs().maxCoeff(), 1e-6);
}

TEST(Combine, Examples) {
  EXPECT_EQ(combine({}, 2, 3), Matrix::Ones(2, 3));
  Matrix a = Matrix::Constant(2, 2, 0.5), b = Matrix::Constant(2, 2, 0.4);
  const std::vector<Matrix> one{a};
  EXPECT_EQ(combine(one, 2, 2), a);
  const std::vector<Matrix> two{a, b};
  EXPECT_DOUBLE_EQ(combine(two, 2, 2)(0, 0), 0.2);
  const std::vector<Matrix> bad{Matrix::Ones(3, 2)};
  EXPECT_THROW(combine(bad, 2, 2), Error);
}

TEST(Combine, OrderIndependent) {
  Rng rng(8);
  std::vector<Matrix> ms;
  for (int i = 0; i < 4; ++i) {
    Matrix m(3, 4);
    for (Eigen::Index j = 0; j < m.size(); ++j) m.data()[j] = rng.uniform();
    ms.push_back(m);
  }
  const Matrix forward = combine(ms, 3, 4);
  std::reverse(ms.begin(), ms.end());
  EXPECT_TRUE(forward.isApprox(combine(ms, 3, 4), 1e-15));
}

TEST(GraphPriors, PairsAttributesByName) {
  Graph a(false, 2, {{0, 1}},
          {Attribute::measurable("x", {0.0, 1.0}, 1.0),
           Attribute::categorical("k", {Token{"p"}, Token{"q"}}, 0.0)});
  Graph b(false, 2, {{0, 1}},
          {Attribute::categorical("k", {Token{"q"}, Token{"q"}}, 0.0),
           Attribute::measurable("x", {1.0, 1.0}, 1.0)});
  const Matrix v = vertex_distance(a, b);
  EXPECT_EQ(v(0, 0), 0.0);  // k differs
  EXPECT_DOUBLE_EQ(v(1, 0), 1.0);
  EXPECT_DOUBLE_EQ(v(1, 1), 1.0);
  EXPECT_FALSE(edge_distance(a, b).has_value());

  Graph c(false, 2, {{0, 1}}, {Attribute::measurable("x", {0.0, 1.0})});
  EXPECT_THROW(vertex_distance(a, c), Error);
}

TEST(GraphPriors, EdgePrior) {
  Graph a(true, 3, {{0, 1}, {1, 2}}, {}, {Attribute::measurable("w", {1.0, 2.0}, 0.0)});
  Graph b(true, 3, {{2, 1}}, {}, {Attribute::measurable("w", {2.0}, 0.0)});
  const auto e = edge_distance(a, b);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->rows(), 2);
  EXPECT_EQ(e->cols(), 1);
  EXPECT_EQ((*e)(0, 0), 0.0);
  EXPECT_EQ((*e)(1, 0), 1.0);
  // No vertex attributes: V = J.
  EXPECT_EQ(vertex_distance(a, b), Matrix::Ones(3, 3));
}

TEST(GraphPriors, EdgelessSideGivesEmptyPrior) {
  Graph a(true, 2, {{0, 1}}, {}, {Attribute::measurable("w", {1.0})});
  Graph b(true, 2, {}, {}, {Attribute::measurable("w", {})});
  const auto e = edge_distance(a, b);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->rows(), 1);
  EXPECT_EQ(e->cols(), 0);
}

}  // namespace
}  // namespace gasm
