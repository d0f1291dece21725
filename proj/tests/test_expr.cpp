#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "curvelab/errors.hpp"
#include "curvelab/expr.hpp"

using namespace curvelab;

TEST_CASE("precedence and associativity") {
  CHECK(eval_expr(parse_expression("1+2*3"), 0.0) == doctest::Approx(7.0));
  CHECK(eval_expr(parse_expression("2^3^2"), 0.0) == doctest::Approx(512.0));  // right-assoc
  CHECK(eval_expr(parse_expression("x^2^3"), 2.0) == doctest::Approx(256.0));
  CHECK(eval_expr(parse_expression("-2^2"), 0.0) == doctest::Approx(-4.0));  // ^ binds tighter
  CHECK(eval_expr(parse_expression("(-2)^2"), 0.0) == doctest::Approx(4.0));
  CHECK(eval_expr(parse_expression("6/3/2"), 0.0) == doctest::Approx(1.0));
  CHECK(eval_expr(parse_expression("1-2-3"), 0.0) == doctest::Approx(-4.0));
  CHECK(eval_expr(parse_expression("2*x^2 + 3*x - 1"), 2.0) == doctest::Approx(13.0));
}

TEST_CASE("function calls") {
  CHECK(eval_expr(parse_expression("sin(x)"), 1.2) == doctest::Approx(std::sin(1.2)));
  CHECK(eval_expr(parse_expression("cosh(x) - 1"), 0.7) == doctest::Approx(std::cosh(0.7) - 1.0));
  CHECK(eval_expr(parse_expression("exp(log(x))"), 3.5) == doctest::Approx(3.5));
  CHECK(eval_expr(parse_expression("sqrt(x^2)"), 4.0) == doctest::Approx(4.0));
  CHECK_THROWS_AS(eval_expr(parse_expression("log(x)"), -1.0), DomainError);
  CHECK_THROWS_AS(eval_expr(parse_expression("sqrt(x)"), -1.0), DomainError);
}

TEST_CASE("syntax errors carry byte offsets") {
  CHECK_THROWS_AS(parse_expression(""), SyntaxError);
  CHECK_THROWS_AS(parse_expression("1 +"), SyntaxError);
  CHECK_THROWS_AS(parse_expression("(1 + 2"), SyntaxError);
  CHECK_THROWS_AS(parse_expression("sin 2"), SyntaxError);
  CHECK_THROWS_AS(parse_expression("1 2"), SyntaxError);
  CHECK_THROWS_AS(parse_expression("foo(x)"), SyntaxError);
  CHECK_THROWS_AS(parse_expression("x y"), SyntaxError);
  try {
    parse_expression("1 + @");
  } catch (const SyntaxError& e) {
    CHECK(e.offset == 4);
  }
}

TEST_CASE("mutation fuzz never crashes") {
  const std::string base = "sin(x)^2 + 0.5*cosh(x) - sqrt(x^2 + 1)";
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> pos(0, static_cast<int>(base.size()) - 1);
  const std::string chars = "()+-*/^x0123456789. sincoexplqrth";
  std::uniform_int_distribution<int> pick(0, static_cast<int>(chars.size()) - 1);
  for (int iter = 0; iter < 500; ++iter) {
    std::string s = base;
    const int edits = 1 + iter % 4;
    for (int e = 0; e < edits; ++e) {
      const int p = pos(rng);
      switch (rng() % 3) {
        case 0: s[static_cast<std::size_t>(p)] = chars[static_cast<std::size_t>(pick(rng))]; break;
        case 1: s.erase(static_cast<std::size_t>(p % static_cast<int>(s.size())), 1); break;
        default: s.insert(static_cast<std::size_t>(p), 1, chars[static_cast<std::size_t>(pick(rng))]);
      }
      if (s.empty()) s = "x";
    }
    try {
      auto ast = parse_expression(s);
      (void)eval_expr(ast, 0.37);  // may throw DomainError; must not crash
    } catch (const SyntaxError&) {
    } catch (const DomainError&) {
    }
  }
}

TEST_CASE("eval_dual matches finite differences") {
  const char* exprs[] = {"x^3 - 2*x", "sin(x)*exp(x/2)", "cosh(x) - 1", "log(x + 3)",
                         "sqrt(x + 2)", "x^4/(1 + x^2)"};
  for (const char* text : exprs) {
    auto ast = parse_expression(text);
    for (double x : {0.3, 0.9, 1.7}) {
      auto [v, d1, d2] = eval_dual(ast, x);
      const double e = 1e-5;
      const double vm = eval_expr(ast, x - e), vp = eval_expr(ast, x + e);
      CHECK(v == doctest::Approx(eval_expr(ast, x)));
      CHECK(d1 == doctest::Approx((vp - vm) / (2 * e)).epsilon(1e-5));
      CHECK(d2 == doctest::Approx((vp - 2 * v + vm) / (e * e)).epsilon(1e-4));
    }
  }
}

TEST_CASE("format/parse round trip is structural identity") {
  for (const char* text : {"x^2", "-x^3 + 2*(x - 1)", "sin(cos(x))/(1 + x^2)", "2^3^x",
                           "-(x + 1)^2", "sqrt(x)*log(x)"}) {
    auto ast = parse_expression(text);
    auto again = parse_expression(format_expr(ast));
    CHECK(expr_equal(ast, again));
  }
}

TEST_CASE("integer powers of negative bases") {
  auto ast = parse_expression("x^3");
  auto [v, d1, d2] = eval_dual(ast, -2.0);
  CHECK(v == doctest::Approx(-8.0));
  CHECK(d1 == doctest::Approx(12.0));
  CHECK(d2 == doctest::Approx(-12.0));
}
