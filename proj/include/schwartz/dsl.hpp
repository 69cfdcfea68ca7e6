#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "schwartz/atom.hpp"
#include "schwartz/distribution.hpp"

// Expression language for Schwartz functions and tempered distributions.
//
//   expr   := sum
//   sum    := prod (('+' | '-') prod)*
//   prod   := unary (('*' | '/') unary)*
//   unary  := '-' unary | call | number | IDENT | array | map | '(' expr ')'
//   call   := IDENT '(' args? ')'       args := expr (',' expr)*
//   array  := '[' row (';' row)* ']'    row  := expr (',' expr)*
//   map    := '{' entry (',' entry)* '}'  entry := array ':' expr
//   number := decimal literal with optional exponent and optional 'i' suffix
//
// Constants: pi (also the UTF-8 letter), i. Arrays are constants too: they
// scale by scalars and add elementwise.
//
// Function terms:     gauss(A), gauss(A, c), zero(n), shift(a, f), mod(b, f),
//                     diff(beta, f), ft(f), ift(f), conv(f, g)
// Polynomial terms:   poly({[exponents]: coeff, ...})
// Distribution terms: delta(a), polydensity(p), density(f), dderiv(alpha, l), dft(l)
//
// gauss(A, c) is exp(-x.Ax + c.x). mod(b, f) is exp(2 pi i b.x) f(x), aligned
// with the frequency variable of the transform; exp(i b.x) f is mod(b / (2 pi), f).
// '*' between two functions is the pointwise product, between a polynomial
// and a function it is polynomial multiplication, and with a scalar it scales.

namespace schwartz::dsl {

struct SourcePosition {
  int line = 1;
  int column = 1;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourcePosition pos);
  SourcePosition position() const { return pos_; }

 private:
  SourcePosition pos_;
};

/// Ill-typed or dimension-inconsistent expression.
class TypeError : public Error {
 public:
  TypeError(const std::string& message, SourcePosition pos);
  SourcePosition position() const { return pos_; }

 private:
  SourcePosition pos_;
};

enum class Kind { Scalar, Array, Map, Polynomial, Function, Distribution };

std::string_view kind_name(Kind kind);

struct Expr;
using Expression = std::shared_ptr<const Expr>;

/// Typed syntax tree. Scalar and array subtrees are folded at parse time
/// into `number` and `array`.
struct Expr {
  enum class Op { Number, Array, Map, Call, Add, Sub, Mul, Div, Neg };

  Op op = Op::Number;
  Kind kind = Kind::Scalar;
  /// Ambient dimension of Polynomial/Function/Distribution terms.
  std::size_t dimension = 0;
  SourcePosition pos;

  Complex number;
  Matrix<Complex> array;
  std::vector<std::pair<std::vector<int>, Complex>> map;
  std::string name;
  std::vector<Expression> args;
};

/// Parses and type-checks. Throws ParseError or TypeError; never crashes on
/// malformed input.
Expression parse(std::string_view source);

using Value = std::variant<SchwartzFunction, TemperedDistribution>;

/// Throws TypeError if the expression is not a function or distribution;
/// core errors (DomainError, DimensionError) propagate.
Value elaborate(const Expression& expr);

inline Value evaluate_source(std::string_view source) { return elaborate(parse(source)); }

/// Canonical text; parse and elaborate reproduce the value.
std::string format(const SchwartzFunction& f);
std::string format(const TemperedDistribution& d);
std::string format(const Value& v);
std::string format(const Polynomial& p);

/// Shortest decimal that reads back to the same double.
std::string format_real(Real x);
std::string format_complex(Complex z);

/// Structural distance between distribution trees: matching node kinds
/// compare their payloads, mismatched shapes are infinitely far apart.
Real structural_distance(const TemperedDistribution& a, const TemperedDistribution& b);
Real value_distance(const Value& a, const Value& b);

}  // namespace schwartz::dsl
