#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "schwartz/calculus.hpp"
#include "schwartz/dsl.hpp"
#include "schwartz/fourier.hpp"
#include "schwartz/verify.hpp"
#include "test_support.hpp"

using namespace schwartz;
namespace dsl = schwartz::dsl;
using schwartz::testing::vec;

namespace {

SchwartzFunction as_function(const dsl::Value& v) {
  REQUIRE(std::holds_alternative<SchwartzFunction>(v));
  return std::get<SchwartzFunction>(v);
}

dsl::SourcePosition parse_error_at(std::string_view src) {
  try {
    dsl::parse(src);
  } catch (const dsl::ParseError& e) {
    return e.position();
  }
  FAIL("no ParseError for: " << src);
  return {};
}

}  // namespace

TEST_CASE("parse builds typed call trees") {
  const dsl::Expression ft = dsl::parse("ft(gauss([3.14159265358979]))");
  CHECK(ft->op == dsl::Expr::Op::Call);
  CHECK(ft->name == "ft");
  CHECK(ft->kind == dsl::Kind::Function);
  CHECK(ft->dimension == 1);
  REQUIRE(ft->args.size() == 1);
  CHECK(ft->args[0]->name == "gauss");
  CHECK(ft->args[0]->args[0]->kind == dsl::Kind::Array);

  const dsl::Expression conv = dsl::parse("conv(gauss([1]), gauss([1]))");
  CHECK(conv->name == "conv");
  CHECK(conv->args.size() == 2);

  const dsl::Expression dft = dsl::parse("dft(delta([0]))");
  CHECK(dft->name == "dft");
  CHECK(dft->kind == dsl::Kind::Distribution);
  CHECK(dft->args[0]->name == "delta");
}

TEST_CASE("scalar and array subexpressions fold") {
  const dsl::Expression e = dsl::parse("2 * pi / 4 + 1i");
  CHECK(e->op == dsl::Expr::Op::Number);
  CHECK(std::abs(e->number - Complex(kPi / 2.0, 1.0)) < 1e-15);
  const dsl::Expression a = dsl::parse("2 * [1, 2; 3, 4]");
  CHECK(a->op == dsl::Expr::Op::Array);
  CHECK(a->array(1, 0) == Complex(6.0));
  CHECK(dsl::parse("[1, 2] - [1, 1] / 2")->array(0, 1) == Complex(1.5));
  CHECK_THROWS_AS(dsl::parse("[1, 2] + [1]"), dsl::TypeError);
  CHECK_THROWS_AS(dsl::parse("[1] * [1]"), dsl::TypeError);
  CHECK(dsl::parse("π")->number == Complex(kPi));
}

TEST_CASE("elaborate") {
  const SchwartzFunction two = as_function(dsl::evaluate_source("gauss([π]) + gauss([π])"));
  REQUIRE(two.atoms().size() == 1);
  CHECK(two.atoms()[0].polynomial() == Polynomial::constant(1, 2.0));

  const SchwartzFunction round = as_function(dsl::evaluate_source("ift(ft(gauss([π])))"));
  CHECK(coefficient_distance(round, gaussian(kPi)) <= 1e-10);

  const SchwartzFunction d = as_function(dsl::evaluate_source("diff([1], gauss([π]))"));
  const SchwartzFunction expected = scale(poly_multiply(gaussian(kPi), Polynomial::coordinate(1, 0)), -2.0 * kPi);
  CHECK(coefficient_distance(d, expected) < 1e-15);

  const SchwartzFunction m = as_function(dsl::evaluate_source("mod([0.25], gauss([1]))"));
  CHECK(coefficient_distance(m, modulate(gaussian(1.0), vec({0.25}))) == 0.0);

  const SchwartzFunction s = as_function(dsl::evaluate_source("shift([1], gauss([π]))"));
  CHECK(std::abs(evaluate(s, vec({1.0})) - 1.0) < 1e-14);

  const SchwartzFunction p = as_function(dsl::evaluate_source("poly({[1]: 1, [0]: 2}) * gauss([1])"));
  CHECK(std::abs(evaluate(p, vec({1.0})) - 3.0 * std::exp(-1.0)) < 1e-15);

  CHECK(as_function(dsl::evaluate_source("zero(3)")).dimension() == 3);

  const auto dist = dsl::evaluate_source("dderiv([1], delta([0]))");
  REQUIRE(std::holds_alternative<TemperedDistribution>(dist));
  CHECK(std::abs(pair(std::get<TemperedDistribution>(dist), as_function(dsl::evaluate_source(
                                                                "poly({[1]: 1}) * gauss([pi])"))) +
                 1.0) < 1e-15);
}

TEST_CASE("syntax errors carry positions") {
  auto p = parse_error_at("gauss([1]");
  CHECK(p.line == 1);
  CHECK(p.column == 10);
  p = parse_error_at("ft(gauss([1]))\n  + $");
  CHECK(p.line == 2);
  CHECK(p.column == 5);
  p = parse_error_at("frobnicate(1)");
  CHECK(p.column == 1);
  CHECK(parse_error_at("").line == 1);
  CHECK(parse_error_at("1.2.3").column == 4);
  CHECK(parse_error_at("[1, 2; 3]").line == 1);
}

TEST_CASE("type errors") {
  CHECK_THROWS_AS((dsl::parse("ft(delta([0]))")), dsl::TypeError);
  CHECK_THROWS_AS((dsl::parse("gauss([1]) + delta([0])")), dsl::TypeError);
  CHECK_THROWS_AS((dsl::parse("delta([0]) * delta([0])")), dsl::TypeError);
  CHECK_THROWS_AS((dsl::parse("gauss([1]) + gauss([1, 0; 0, 1])")), dsl::TypeError);
  CHECK_THROWS_AS((dsl::parse("diff([0.5], gauss([1]))")), dsl::TypeError);
  CHECK_THROWS_AS((dsl::parse("gauss([1, 2])")), dsl::TypeError);
  CHECK_THROWS_AS((dsl::parse("gauss([1], [1], [1])")), dsl::TypeError);
  CHECK_THROWS_AS((dsl::elaborate(dsl::parse("[1, 2]"))), dsl::TypeError);
  try {
    dsl::parse("conv(gauss([1]),\n  delta([0]))");
    FAIL("expected TypeError");
  } catch (const dsl::TypeError& e) {
    CHECK(e.position().line == 2);
  }
}

TEST_CASE("core errors propagate from elaborate") {
  CHECK_THROWS_AS((dsl::evaluate_source("gauss([-1])")), DomainError);
  CHECK_THROWS_AS((dsl::evaluate_source("gauss([1, 0.1; 0, 1])")), DomainError);
}

TEST_CASE("format_real reads back exactly") {
  for (Real x : {0.1, kPi, -1e-300, 1.0 / 3.0, 6.02214076e23, 0.0}) {
    const std::string s = dsl::format_real(x);
    CHECK(dsl::parse(s)->number.real() == x);
  }
  CHECK(dsl::format_real(1.0) == "1");
}

TEST_CASE("format round trips the corpus") {
  const auto& corpus = verify::dsl_corpus();
  CHECK(corpus.size() == 30);
  for (const std::string& src : corpus) {
    CAPTURE(src);
    const dsl::Value v = dsl::evaluate_source(src);
    const std::string text = dsl::format(v);
    const dsl::Value back = dsl::evaluate_source(text);
    CHECK(dsl::value_distance(v, back) <= 1e-12);
    CHECK(dsl::format(back) == text);
  }
}

TEST_CASE("formatted zero and distributions") {
  CHECK(dsl::format(SchwartzFunction::zero(2)) == "zero(2)");
  CHECK(dsl::format(SchwartzFunction(gaussian(1.0))) == "gauss([1])");
  const auto d = std::get<TemperedDistribution>(dsl::evaluate_source("dft(delta([0]))"));
  CHECK(dsl::format(d) == "dft(delta([0]))");
}

TEST_CASE("malformed input never crashes") {
  const std::string alphabet = "gauss()[],;:{}+-*/ 0123.5ei pi ft delta";
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 40);
  int parsed = 0;
  for (int k = 0; k < 3000; ++k) {
    std::string s;
    for (int j = len(rng); j > 0; --j) s += alphabet[pick(rng)];
    try {
      dsl::evaluate_source(s);
      ++parsed;
    } catch (const Error&) {
    }
  }
  CHECK(parsed >= 0);

  // mutate valid expressions by deleting one character
  for (const std::string& src : verify::dsl_corpus()) {
    for (std::size_t j = 0; j < src.size(); ++j) {
      std::string s = src;
      s.erase(j, 1);
      try {
        dsl::evaluate_source(s);
      } catch (const Error&) {
      }
    }
  }
  const std::string deep(1000, '(');
  CHECK_THROWS_AS(dsl::parse(deep), dsl::ParseError);
}
