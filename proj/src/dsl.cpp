#include "schwartz/dsl.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "schwartz/calculus.hpp"
#include "schwartz/fourier.hpp"

namespace schwartz::dsl {

namespace {

std::string with_position(const std::string& message, SourcePosition pos) {
  return "line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + message;
}

}  // namespace

ParseError::ParseError(const std::string& message, SourcePosition pos)
    : Error(with_position(message, pos)), pos_(pos) {}

TypeError::TypeError(const std::string& message, SourcePosition pos)
    : Error(with_position(message, pos)), pos_(pos) {}

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::Scalar: return "scalar";
    case Kind::Array: return "array";
    case Kind::Map: return "map";
    case Kind::Polynomial: return "polynomial";
    case Kind::Function: return "function";
    case Kind::Distribution: return "distribution";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Number, Ident, LParen, RParen, LBracket, RBracket, LBrace, RBrace, Comma, Semicolon, Colon,
                 Plus, Minus, Star, Slash, End };

struct Token {
  Tok type = Tok::End;
  SourcePosition pos;
  std::string text;
  Complex number;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.pos = pos_;
      if (at_end()) {
        out.push_back(t);
        return out;
      }
      const char ch = src_[i_];
      if (std::isdigit(static_cast<unsigned char>(ch)) ||
          (ch == '.' && i_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_ + 1])))) {
        out.push_back(number(t.pos));
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t start = i_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_')) advance();
        t.type = Tok::Ident;
        t.text = std::string(src_.substr(start, i_ - start));
        out.push_back(t);
        continue;
      }
      if (src_.substr(i_, 2) == "\xCF\x80") {  // UTF-8 pi
        i_ += 2;
        ++pos_.column;
        t.type = Tok::Ident;
        t.text = "pi";
        out.push_back(t);
        continue;
      }
      switch (ch) {
        case '(': t.type = Tok::LParen; break;
        case ')': t.type = Tok::RParen; break;
        case '[': t.type = Tok::LBracket; break;
        case ']': t.type = Tok::RBracket; break;
        case '{': t.type = Tok::LBrace; break;
        case '}': t.type = Tok::RBrace; break;
        case ',': t.type = Tok::Comma; break;
        case ';': t.type = Tok::Semicolon; break;
        case ':': t.type = Tok::Colon; break;
        case '+': t.type = Tok::Plus; break;
        case '-': t.type = Tok::Minus; break;
        case '*': t.type = Tok::Star; break;
        case '/': t.type = Tok::Slash; break;
        default: throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
      }
      t.text = std::string(1, ch);
      advance();
      out.push_back(t);
    }
  }

 private:
  bool at_end() const { return i_ >= src_.size(); }

  void advance() {
    if (src_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[i_]))) advance();
  }

  bool digit_here() const { return !at_end() && std::isdigit(static_cast<unsigned char>(src_[i_])); }

  Token number(SourcePosition pos) {
    const std::size_t start = i_;
    while (digit_here()) advance();
    if (!at_end() && src_[i_] == '.') {
      advance();
      while (digit_here()) advance();
    }
    if (!at_end() && (src_[i_] == 'e' || src_[i_] == 'E')) {
      const std::size_t save = i_;
      const SourcePosition save_pos = pos_;
      advance();
      if (!at_end() && (src_[i_] == '+' || src_[i_] == '-')) advance();
      if (!digit_here()) {
        i_ = save;
        pos_ = save_pos;
      } else {
        while (digit_here()) advance();
      }
    }
    const std::string_view digits = src_.substr(start, i_ - start);
    Real value = 0.0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || !std::isfinite(value)) {
      throw ParseError("malformed number '" + std::string(digits) + "'", pos);
    }
    Token t;
    t.type = Tok::Number;
    t.pos = pos;
    t.text = std::string(digits);
    t.number = value;
    if (!at_end() && src_[i_] == 'i' &&
        !(i_ + 1 < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[i_ + 1])) || src_[i_ + 1] == '_'))) {
      advance();
      t.number = Complex(0.0, value);
    }
    return t;
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePosition pos_;
};

// ---------------------------------------------------------------------------
// Parser and type checker

using Node = std::shared_ptr<Expr>;

std::string describe(const Token& t) {
  if (t.type == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Expression run() {
    Node e = expr();
    if (peek().type != Tok::End) throw ParseError("unexpected " + describe(peek()) + " after expression", peek().pos);
    return e;
  }

 private:
  const Token& peek() const { return toks_[k_]; }
  const Token& take() { return toks_[k_ < toks_.size() - 1 ? k_++ : k_]; }
  bool accept(Tok t) {
    if (peek().type != t) return false;
    take();
    return true;
  }
  const Token& expect(Tok t, const char* what) {
    if (peek().type != t) throw ParseError(std::string("expected ") + what + ", found " + describe(peek()), peek().pos);
    return take();
  }

  Node expr() {
    ++depth_;
    if (depth_ > 256) throw ParseError("expression nested too deeply", peek().pos);
    Node lhs = prod();
    while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
      const Token op = take();
      Node rhs = prod();
      lhs = binary(op.type == Tok::Plus ? Expr::Op::Add : Expr::Op::Sub, lhs, rhs, op.pos);
    }
    --depth_;
    return lhs;
  }

  Node prod() {
    Node lhs = unary();
    while (peek().type == Tok::Star || peek().type == Tok::Slash) {
      const Token op = take();
      Node rhs = unary();
      lhs = binary(op.type == Tok::Star ? Expr::Op::Mul : Expr::Op::Div, lhs, rhs, op.pos);
    }
    return lhs;
  }

  Node unary() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::Minus: {
        const SourcePosition pos = take().pos;
        ++depth_;
        if (depth_ > 256) throw ParseError("expression nested too deeply", pos);
        Node operand = unary();
        --depth_;
        return negate(operand, pos);
      }
      case Tok::Number: {
        const Token& n = take();
        return scalar(n.number, n.pos);
      }
      case Tok::Ident: {
        const Token id = take();
        if (peek().type == Tok::LParen) return call(id);
        if (id.text == "pi") return scalar(kPi, id.pos);
        if (id.text == "i") return scalar(Complex(0.0, 1.0), id.pos);
        throw ParseError("unknown identifier '" + id.text + "'", id.pos);
      }
      case Tok::LBracket: return array();
      case Tok::LBrace: return map();
      case Tok::LParen: {
        take();
        Node inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default: throw ParseError("expected an expression, found " + describe(t), t.pos);
    }
  }

  static Node scalar(Complex value, SourcePosition pos) {
    auto n = std::make_shared<Expr>();
    n->op = Expr::Op::Number;
    n->kind = Kind::Scalar;
    n->number = value;
    n->pos = pos;
    return n;
  }

  Node array() {
    const SourcePosition pos = take().pos;
    std::vector<std::vector<Complex>> rows(1);
    while (true) {
      Node e = expr();
      if (e->kind != Kind::Scalar) {
        throw TypeError("array entries must be scalars, found " + std::string(kind_name(e->kind)), e->pos);
      }
      rows.back().push_back(e->number);
      if (accept(Tok::Comma)) continue;
      if (accept(Tok::Semicolon)) {
        rows.emplace_back();
        continue;
      }
      expect(Tok::RBracket, "',', ';' or ']'");
      break;
    }
    const std::size_t cols = rows.front().size();
    for (const auto& r : rows) {
      if (r.size() != cols) throw ParseError("array rows have different lengths", pos);
    }
    auto n = std::make_shared<Expr>();
    n->op = Expr::Op::Array;
    n->kind = Kind::Array;
    n->pos = pos;
    n->array.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) n->array(i, j) = rows[i][j];
    }
    return n;
  }

  Node map() {
    const SourcePosition pos = take().pos;
    auto n = std::make_shared<Expr>();
    n->op = Expr::Op::Map;
    n->kind = Kind::Map;
    n->pos = pos;
    if (peek().type == Tok::RBrace) throw TypeError("empty coefficient map has no dimension", pos);
    while (true) {
      const SourcePosition key_pos = peek().pos;
      if (peek().type != Tok::LBracket) throw ParseError("expected an exponent array, found " + describe(peek()), key_pos);
      Node key = array();
      std::vector<int> exponents = integer_vector(*key, "exponent");
      expect(Tok::Colon, "':'");
      Node value = expr();
      if (value->kind != Kind::Scalar) {
        throw TypeError("coefficients must be scalars, found " + std::string(kind_name(value->kind)), value->pos);
      }
      if (n->dimension == 0) n->dimension = exponents.size();
      if (exponents.size() != n->dimension) throw TypeError("dimension mismatch between exponent arrays", key_pos);
      n->map.emplace_back(std::move(exponents), value->number);
      if (accept(Tok::Comma)) continue;
      expect(Tok::RBrace, "',' or '}'");
      break;
    }
    return n;
  }

  static bool is_vector(const Expr& e) { return e.kind == Kind::Array && (e.array.rows() == 1 || e.array.cols() == 1); }

  static void require_real(const Expr& e, const char* what) {
    const bool real = e.kind == Kind::Scalar ? e.number.imag() == 0.0 : e.array.imag().isZero(0.0);
    if (!real) throw TypeError(std::string(what) + " must be real", e.pos);
  }

  static std::size_t vector_length(const Expr& e, const char* what) {
    if (!is_vector(e)) throw TypeError(std::string(what) + " must be a vector", e.pos);
    return static_cast<std::size_t>(e.array.size());
  }

  static std::vector<int> integer_vector(const Expr& e, const char* what) {
    vector_length(e, what);
    require_real(e, what);
    std::vector<int> out;
    for (Eigen::Index k = 0; k < e.array.size(); ++k) {
      const Real v = e.array.data()[k].real();
      if (v < 0.0 || v != std::floor(v) || v > 1e6) {
        throw TypeError(std::string(what) + " entries must be non-negative integers", e.pos);
      }
      out.push_back(static_cast<int>(v));
    }
    return out;
  }

  static void require_kind(const Expr& e, Kind kind, const std::string& fn) {
    if (e.kind != kind) {
      throw TypeError(fn + ": expected " + std::string(kind_name(kind)) + ", found " + std::string(kind_name(e.kind)),
                      e.pos);
    }
  }

  static void require_same_dimension(std::size_t a, std::size_t b, const std::string& fn, SourcePosition pos) {
    if (a != b) {
      throw TypeError(fn + ": dimension mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")", pos);
    }
  }

  Node call(const Token& id) {
    take();  // '('
    std::vector<Node> args;
    if (peek().type != Tok::RParen) {
      do {
        args.push_back(expr());
      } while (accept(Tok::Comma));
    }
    expect(Tok::RParen, "',' or ')'");

    auto n = std::make_shared<Expr>();
    n->op = Expr::Op::Call;
    n->name = id.text;
    n->pos = id.pos;
    const std::string& f = id.text;
    auto arity = [&](std::size_t lo, std::size_t hi) {
      if (args.size() < lo || args.size() > hi) {
        throw TypeError(f + ": wrong number of arguments (" + std::to_string(args.size()) + ")", id.pos);
      }
    };

    if (f == "gauss") {
      arity(1, 2);
      const Expr& a = *args[0];
      require_kind(a, Kind::Array, f);
      require_real(a, "gauss: quadratic form");
      if (a.array.rows() != a.array.cols()) throw TypeError("gauss: quadratic form must be square", a.pos);
      n->dimension = static_cast<std::size_t>(a.array.rows());
      if (args.size() == 2) {
        require_kind(*args[1], Kind::Array, f);
        require_same_dimension(n->dimension, vector_length(*args[1], "gauss: linear term"), f, args[1]->pos);
      }
      n->kind = Kind::Function;
    } else if (f == "zero") {
      arity(1, 1);
      require_kind(*args[0], Kind::Scalar, f);
      const Complex v = args[0]->number;
      if (v.imag() != 0.0 || v.real() < 1.0 || v.real() != std::floor(v.real()) || v.real() > 64.0) {
        throw TypeError("zero: dimension must be a positive integer", args[0]->pos);
      }
      n->dimension = static_cast<std::size_t>(v.real());
      n->kind = Kind::Function;
    } else if (f == "shift" || f == "mod" || f == "diff") {
      arity(2, 2);
      require_kind(*args[0], Kind::Array, f);
      require_kind(*args[1], Kind::Function, f);
      const std::size_t len = vector_length(*args[0], (f + ": first argument").c_str());
      if (f == "diff") {
        integer_vector(*args[0], "diff: multi-index");
      } else {
        require_real(*args[0], (f + ": vector").c_str());
      }
      require_same_dimension(len, args[1]->dimension, f, args[0]->pos);
      n->dimension = len;
      n->kind = Kind::Function;
    } else if (f == "ft" || f == "ift") {
      arity(1, 1);
      require_kind(*args[0], Kind::Function, f);
      n->dimension = args[0]->dimension;
      n->kind = Kind::Function;
    } else if (f == "conv") {
      arity(2, 2);
      require_kind(*args[0], Kind::Function, f);
      require_kind(*args[1], Kind::Function, f);
      require_same_dimension(args[0]->dimension, args[1]->dimension, f, args[1]->pos);
      n->dimension = args[0]->dimension;
      n->kind = Kind::Function;
    } else if (f == "poly") {
      arity(1, 1);
      require_kind(*args[0], Kind::Map, f);
      n->dimension = args[0]->dimension;
      n->kind = Kind::Polynomial;
    } else if (f == "delta") {
      arity(1, 1);
      require_kind(*args[0], Kind::Array, f);
      require_real(*args[0], "delta: point");
      n->dimension = vector_length(*args[0], "delta: point");
      n->kind = Kind::Distribution;
    } else if (f == "polydensity") {
      arity(1, 1);
      require_kind(*args[0], Kind::Polynomial, f);
      n->dimension = args[0]->dimension;
      n->kind = Kind::Distribution;
    } else if (f == "density") {
      arity(1, 1);
      require_kind(*args[0], Kind::Function, f);
      n->dimension = args[0]->dimension;
      n->kind = Kind::Distribution;
    } else if (f == "dderiv") {
      arity(2, 2);
      require_kind(*args[0], Kind::Array, f);
      require_kind(*args[1], Kind::Distribution, f);
      const std::size_t len = integer_vector(*args[0], "dderiv: multi-index").size();
      require_same_dimension(len, args[1]->dimension, f, args[0]->pos);
      n->dimension = len;
      n->kind = Kind::Distribution;
    } else if (f == "dft") {
      arity(1, 1);
      require_kind(*args[0], Kind::Distribution, f);
      n->dimension = args[0]->dimension;
      n->kind = Kind::Distribution;
    } else {
      throw ParseError("unknown function '" + f + "'", id.pos);
    }
    n->args.assign(args.begin(), args.end());
    return n;
  }

  static bool algebraic(Kind k) { return k == Kind::Polynomial || k == Kind::Function || k == Kind::Distribution; }

  Node negate(const Node& operand, SourcePosition pos) {
    if (operand->kind == Kind::Scalar) return scalar(-operand->number, pos);
    if (operand->kind == Kind::Array) {
      auto n = std::make_shared<Expr>(*operand);
      n->array = -operand->array;
      n->pos = pos;
      return n;
    }
    if (!algebraic(operand->kind)) throw TypeError("cannot negate a " + std::string(kind_name(operand->kind)), pos);
    auto n = std::make_shared<Expr>();
    n->op = Expr::Op::Neg;
    n->kind = operand->kind;
    n->dimension = operand->dimension;
    n->pos = pos;
    n->args = {operand};
    return n;
  }

  // Constant arrays scale by scalars and add elementwise.
  template <typename Mismatch>
  Node fold_array(Expr::Op op, const Node& lhs, const Node& rhs, SourcePosition pos, Mismatch mismatch) {
    const Kind a = lhs->kind;
    const Kind b = rhs->kind;
    Matrix<Complex> v;
    if (op == Expr::Op::Mul && a == Kind::Scalar && b == Kind::Array) {
      v = lhs->number * rhs->array;
    } else if ((op == Expr::Op::Mul || op == Expr::Op::Div) && a == Kind::Array && b == Kind::Scalar) {
      if (op == Expr::Op::Div && rhs->number == Complex(0.0)) throw TypeError("division by zero", pos);
      v = op == Expr::Op::Mul ? Matrix<Complex>(lhs->array * rhs->number) : Matrix<Complex>(lhs->array / rhs->number);
    } else if ((op == Expr::Op::Add || op == Expr::Op::Sub) && a == Kind::Array && b == Kind::Array) {
      if (lhs->array.rows() != rhs->array.rows() || lhs->array.cols() != rhs->array.cols()) {
        throw TypeError("array shapes differ", pos);
      }
      v = op == Expr::Op::Add ? Matrix<Complex>(lhs->array + rhs->array) : Matrix<Complex>(lhs->array - rhs->array);
    } else {
      return mismatch();
    }
    auto n = std::make_shared<Expr>();
    n->op = Expr::Op::Array;
    n->kind = Kind::Array;
    n->pos = lhs->pos;
    n->array = std::move(v);
    return n;
  }

  Node binary(Expr::Op op, const Node& lhs, const Node& rhs, SourcePosition pos) {
    const Kind a = lhs->kind;
    const Kind b = rhs->kind;
    const char* sym = op == Expr::Op::Add ? "+" : op == Expr::Op::Sub ? "-" : op == Expr::Op::Mul ? "*" : "/";
    auto mismatch = [&]() -> Node {
      throw TypeError(std::string("operator ") + sym + " is not defined for " + std::string(kind_name(a)) + " and " +
                          std::string(kind_name(b)),
                      pos);
    };
    if (a == Kind::Scalar && b == Kind::Scalar) {
      Complex v;
      switch (op) {
        case Expr::Op::Add: v = lhs->number + rhs->number; break;
        case Expr::Op::Sub: v = lhs->number - rhs->number; break;
        case Expr::Op::Mul: v = lhs->number * rhs->number; break;
        default:
          if (rhs->number == Complex(0.0)) throw TypeError("division by zero", pos);
          v = lhs->number / rhs->number;
      }
      return scalar(v, lhs->pos);
    }
    if (a == Kind::Array || b == Kind::Array) return fold_array(op, lhs, rhs, pos, mismatch);

    Kind result;
    std::size_t dim = 0;
    if (op == Expr::Op::Add || op == Expr::Op::Sub) {
      if (a != b || !algebraic(a)) return mismatch();
      require_same_dimension(lhs->dimension, rhs->dimension, std::string("operator ") + sym, pos);
      result = a;
      dim = a == Kind::Scalar ? 0 : lhs->dimension;
    } else if (op == Expr::Op::Div) {
      if (!algebraic(a) || b != Kind::Scalar) return mismatch();
      if (rhs->number == Complex(0.0)) throw TypeError("division by zero", pos);
      result = a;
      dim = lhs->dimension;
    } else {
      if (a == Kind::Scalar && algebraic(b)) {
        result = b;
        dim = rhs->dimension;
      } else if (b == Kind::Scalar && algebraic(a)) {
        result = a;
        dim = lhs->dimension;
      } else if ((a == Kind::Function || a == Kind::Polynomial) && (b == Kind::Function || b == Kind::Polynomial)) {
        require_same_dimension(lhs->dimension, rhs->dimension, "operator *", pos);
        result = (a == Kind::Polynomial && b == Kind::Polynomial) ? Kind::Polynomial : Kind::Function;
        dim = lhs->dimension;
      } else {
        return mismatch();
      }
    }
    auto n = std::make_shared<Expr>();
    n->op = op;
    n->kind = result;
    n->dimension = dim;
    n->pos = pos;
    n->args = {lhs, rhs};
    return n;
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
  int depth_ = 0;
};

// ---------------------------------------------------------------------------
// Elaboration

using Term = std::variant<Complex, Polynomial, SchwartzFunction, TemperedDistribution>;

RealVector real_vector(const Expr& e) {
  RealVector v(e.array.size());
  for (Eigen::Index k = 0; k < e.array.size(); ++k) v[k] = e.array.data()[k].real();
  return v;
}

ComplexVector complex_vector(const Expr& e) {
  ComplexVector v(e.array.size());
  for (Eigen::Index k = 0; k < e.array.size(); ++k) v[k] = e.array.data()[k];
  return v;
}

MultiIndex multi_index(const Expr& e) {
  std::vector<int> ex;
  for (Eigen::Index k = 0; k < e.array.size(); ++k) ex.push_back(static_cast<int>(e.array.data()[k].real()));
  return MultiIndex(std::move(ex));
}

template <typename T>
const T& as(const Term& t) {
  return std::get<T>(t);
}

Term elaborate_term(const Expr& e);

SchwartzFunction function_arg(const Expr& e) { return std::get<SchwartzFunction>(elaborate_term(e)); }
TemperedDistribution distribution_arg(const Expr& e) { return std::get<TemperedDistribution>(elaborate_term(e)); }

Term elaborate_call(const Expr& e) {
  const std::string& f = e.name;
  const auto& args = e.args;
  if (f == "gauss") {
    const RealMatrix a = args[0]->array.real();
    if (args.size() == 2) return SchwartzFunction(gaussian(a, complex_vector(*args[1])));
    return SchwartzFunction(gaussian(a));
  }
  if (f == "zero") return SchwartzFunction::zero(e.dimension);
  if (f == "shift") return translate(function_arg(*args[1]), real_vector(*args[0]));
  if (f == "mod") return modulate(function_arg(*args[1]), real_vector(*args[0]));
  if (f == "diff") return differentiate(function_arg(*args[1]), multi_index(*args[0]));
  if (f == "ft") return fourier(function_arg(*args[0]));
  if (f == "ift") return inverse_fourier(function_arg(*args[0]));
  if (f == "conv") return convolve(function_arg(*args[0]), function_arg(*args[1]));
  if (f == "poly") {
    Polynomial::Terms terms;
    for (const auto& [ex, coeff] : args[0]->map) terms[MultiIndex(ex)] += coeff;
    return Polynomial(args[0]->dimension, std::move(terms));
  }
  if (f == "delta") return TemperedDistribution::delta(real_vector(*args[0]));
  if (f == "polydensity") return TemperedDistribution::poly_density(as<Polynomial>(elaborate_term(*args[0])));
  if (f == "density") return TemperedDistribution::schwartz_density(function_arg(*args[0]));
  if (f == "dderiv") return derivative(distribution_arg(*args[1]), multi_index(*args[0]));
  if (f == "dft") return fourier_distribution(distribution_arg(*args[0]));
  throw TypeError("unknown function '" + f + "'", e.pos);
}

Term scale_term(const Term& t, Complex s) {
  return std::visit(
      [&](const auto& v) -> Term {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Complex>) {
          return v * s;
        } else if constexpr (std::is_same_v<T, Polynomial>) {
          return v * s;
        } else if constexpr (std::is_same_v<T, SchwartzFunction>) {
          return scale(v, s);
        } else {
          return s * v;
        }
      },
      t);
}

Term add_terms(const Term& a, const Term& b) {
  if (const auto* p = std::get_if<Polynomial>(&a)) return *p + std::get<Polynomial>(b);
  if (const auto* f = std::get_if<SchwartzFunction>(&a)) return add(*f, std::get<SchwartzFunction>(b));
  return std::get<TemperedDistribution>(a) + std::get<TemperedDistribution>(b);
}

Term multiply_terms(const Term& a, const Term& b) {
  if (const auto* s = std::get_if<Complex>(&a)) return scale_term(b, *s);
  if (const auto* s = std::get_if<Complex>(&b)) return scale_term(a, *s);
  const auto* pa = std::get_if<Polynomial>(&a);
  const auto* pb = std::get_if<Polynomial>(&b);
  if (pa && pb) return *pa * *pb;
  if (pa) return poly_multiply(std::get<SchwartzFunction>(b), *pa);
  if (pb) return poly_multiply(std::get<SchwartzFunction>(a), *pb);
  return multiply(std::get<SchwartzFunction>(a), std::get<SchwartzFunction>(b));
}

Term elaborate_term(const Expr& e) {
  switch (e.op) {
    case Expr::Op::Number: return e.number;
    case Expr::Op::Array:
    case Expr::Op::Map: throw TypeError("a bare " + std::string(kind_name(e.kind)) + " is not a value", e.pos);
    case Expr::Op::Call: return elaborate_call(e);
    case Expr::Op::Neg: return scale_term(elaborate_term(*e.args[0]), -1.0);
    case Expr::Op::Add: return add_terms(elaborate_term(*e.args[0]), elaborate_term(*e.args[1]));
    case Expr::Op::Sub:
      return add_terms(elaborate_term(*e.args[0]), scale_term(elaborate_term(*e.args[1]), -1.0));
    case Expr::Op::Mul: return multiply_terms(elaborate_term(*e.args[0]), elaborate_term(*e.args[1]));
    case Expr::Op::Div: return scale_term(elaborate_term(*e.args[0]), 1.0 / e.args[1]->number);
  }
  throw TypeError("malformed expression", e.pos);
}

}  // namespace

Expression parse(std::string_view source) { return Parser(Lexer(source).run()).run(); }

Value elaborate(const Expression& expr) {
  if (!expr) throw Error("elaborate: null expression");
  if (expr->kind != Kind::Function && expr->kind != Kind::Distribution) {
    throw TypeError("expression is a " + std::string(kind_name(expr->kind)) + ", not a function or distribution",
                    expr->pos);
  }
  Term t = elaborate_term(*expr);
  if (auto* f = std::get_if<SchwartzFunction>(&t)) return canonicalize(*f);
  return std::get<TemperedDistribution>(t);
}

// ---------------------------------------------------------------------------
// Formatting

std::string format_real(Real x) {
  if (x == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string format_complex(Complex z) {
  const Real re = z.real();
  const Real im = z.imag();
  if (im == 0.0) return format_real(re);
  if (re == 0.0) return format_real(im) + "i";
  const std::string sign = im < 0.0 ? "-" : "+";
  return "(" + format_real(re) + sign + format_real(std::abs(im)) + "i)";
}

namespace {

std::string format_vector(const ComplexVector& v) {
  std::string s = "[";
  for (Eigen::Index k = 0; k < v.size(); ++k) s += (k ? ", " : "") + format_complex(v[k]);
  return s + "]";
}

std::string format_vector(const RealVector& v) { return format_vector(ComplexVector(v.cast<Complex>())); }

std::string format_index(const MultiIndex& alpha) {
  std::string s = "[";
  for (std::size_t k = 0; k < alpha.dimension(); ++k) s += (k ? ", " : "") + std::to_string(alpha[k]);
  return s + "]";
}

std::string format_matrix(const RealMatrix& a) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (i) s += "; ";
    for (Eigen::Index j = 0; j < a.cols(); ++j) s += (j ? ", " : "") + format_real(a(i, j));
  }
  return s + "]";
}

bool is_unit(const Polynomial& p) {
  return p.terms().size() == 1 && p.terms().begin()->first.is_zero() && p.terms().begin()->second == Complex(1.0);
}

std::string format_node(const DistributionNode& node);

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_node(const DistributionNode& node) {
  return std::visit(
      overloaded{
          [](const node::Delta& d) { return "delta(" + format_vector(d.point) + ")"; },
          [](const node::PolyDensity& d) { return "polydensity(" + format(d.density) + ")"; },
          [](const node::SchwartzDensity& d) { return "density(" + format(d.density) + ")"; },
          [](const node::Sum& s) { return "(" + format_node(*s.left) + " + " + format_node(*s.right) + ")"; },
          [](const node::Scale& s) {
            std::string child = format_node(*s.child);
            if (std::holds_alternative<node::Scale>(s.child->kind)) child = "(" + child + ")";
            return format_complex(s.factor) + " * " + child;
          },
          [](const node::Derivative& d) { return "dderiv(" + format_index(d.alpha) + ", " + format_node(*d.child) + ")"; },
          [](const node::FourierWrap& w) { return "dft(" + format_node(*w.child) + ")"; },
      },
      node.kind);
}

}  // namespace

std::string format(const Polynomial& p) {
  std::string s = "poly({";
  if (p.is_zero()) return s + format_index(MultiIndex::zero(p.dimension())) + ": 0})";
  bool first = true;
  for (const auto& [alpha, coeff] : p.terms()) {
    s += (first ? "" : ", ") + format_index(alpha) + ": " + format_complex(coeff);
    first = false;
  }
  return s + "})";
}

std::string format(const SchwartzFunction& f) {
  if (f.is_zero()) return "zero(" + std::to_string(f.dimension()) + ")";
  std::string s;
  for (const auto& atom : f.atoms()) {
    if (!s.empty()) s += " + ";
    if (!is_unit(atom.polynomial())) s += format(atom.polynomial()) + " * ";
    s += "gauss(" + format_matrix(atom.quadratic());
    if (!atom.linear().isZero(0.0)) s += ", " + format_vector(atom.linear());
    s += ")";
  }
  return s;
}

std::string format(const TemperedDistribution& d) { return format_node(d.node()); }

std::string format(const Value& v) {
  return std::visit([](const auto& x) { return format(x); }, v);
}

namespace {

Real node_distance(const DistributionNode& a, const DistributionNode& b) {
  constexpr Real inf = std::numeric_limits<Real>::infinity();
  if (a.dimension != b.dimension || a.kind.index() != b.kind.index()) return inf;
  return std::visit(
      overloaded{
          [&](const node::Delta& x) {
            return (x.point - std::get<node::Delta>(b.kind).point).cwiseAbs().maxCoeff();
          },
          [&](const node::PolyDensity& x) {
            return coefficient_distance(x.density, std::get<node::PolyDensity>(b.kind).density);
          },
          [&](const node::SchwartzDensity& x) {
            return coefficient_distance(x.density, std::get<node::SchwartzDensity>(b.kind).density);
          },
          [&](const node::Sum& x) {
            const auto& y = std::get<node::Sum>(b.kind);
            return std::max(node_distance(*x.left, *y.left), node_distance(*x.right, *y.right));
          },
          [&](const node::Scale& x) {
            const auto& y = std::get<node::Scale>(b.kind);
            return std::max(std::abs(x.factor - y.factor), node_distance(*x.child, *y.child));
          },
          [&](const node::Derivative& x) {
            const auto& y = std::get<node::Derivative>(b.kind);
            return x.alpha == y.alpha ? node_distance(*x.child, *y.child) : inf;
          },
          [&](const node::FourierWrap& x) {
            return node_distance(*x.child, *std::get<node::FourierWrap>(b.kind).child);
          },
      },
      a.kind);
}

}  // namespace

Real structural_distance(const TemperedDistribution& a, const TemperedDistribution& b) {
  return node_distance(a.node(), b.node());
}

Real value_distance(const Value& a, const Value& b) {
  if (a.index() != b.index()) return std::numeric_limits<Real>::infinity();
  if (const auto* f = std::get_if<SchwartzFunction>(&a)) {
    const auto& g = std::get<SchwartzFunction>(b);
    if (f->dimension() != g.dimension()) return std::numeric_limits<Real>::infinity();
    return coefficient_distance(*f, g);
  }
  return structural_distance(std::get<TemperedDistribution>(a), std::get<TemperedDistribution>(b));
}

}  // namespace schwartz::dsl
