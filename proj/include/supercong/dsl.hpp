#pragma once

#include <cassert>
#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "supercong/combinat.hpp"
#include "supercong/errors.hpp"
#include "supercong/padic.hpp"
#include "supercong/rational.hpp"

namespace supercong {

// ---------------------------------------------------------------------------
// Expression AST for user-defined hypergeometric summands and right-hand
// sides. Immutable after parsing; safe to share across threads.
//
// Grammar (whitespace-insensitive, '*' never implicit):
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := "-" factor | power
//   power  := atom ("^" factor)?
//   atom   := integer | name | "(" expr ")"
//           | "poch" "(" rational "," expr ")" | "fact" "(" expr ")"
//   rational := ["-"]? integer ("/" integer)?        (poch base only)
// ---------------------------------------------------------------------------

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct IntLit {
  Int value;
};
struct RatLit {
  Rational value;
};
struct VarRef {
  std::string name;
};
struct Neg {
  ExprPtr operand;
};
struct BinOp {
  char op;  // '+', '-', '*', '/'
  ExprPtr lhs, rhs;
};
struct Pow {
  ExprPtr base, exponent;
};
struct Poch {
  Rational base;  // constant rational by design
  ExprPtr index;
};
struct Fact {
  ExprPtr index;
};

struct Expr {
  std::variant<IntLit, RatLit, VarRef, Neg, BinOp, Pow, Poch, Fact> node;
};

struct SummandAst {
  ExprPtr root;
  std::vector<std::string> variables;
};

namespace dsl_detail {

template <class T, class... Args>
ExprPtr make(Args&&... args) {
  return std::make_shared<const Expr>(Expr{T{std::forward<Args>(args)...}});
}

enum class Tok { Int, Name, Poch, Fact, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;  // integer digits or identifier
};

inline std::pair<int, int> line_col(std::string_view src, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < src.size(); ++i) {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] inline void fail(std::string_view src, std::size_t offset,
                              const std::string& message,
                              const std::string& expected = {}) {
  auto [line, col] = line_col(src, offset);
  throw ParseError(message, offset, line, col, expected);
}

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, i, std::string(src.substr(i, j - i))});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                src[j] == '_'))
        ++j;
      std::string word(src.substr(i, j - i));
      Tok kind = word == "poch" ? Tok::Poch
               : word == "fact" ? Tok::Fact
                                : Tok::Name;
      out.push_back({kind, i, std::move(word)});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      default:
        fail(src, i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, i, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::End, src.size(), ""});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& variables)
      : src_(src), vars_(variables), tokens_(tokenize(src)) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_expr();
    if (peek().kind != Tok::End)
      fail(src_, peek().offset, "trailing input after expression",
           "end of input");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k)
      fail(src_, peek().offset,
           std::string("expected ") + what + ", found '" +
               (peek().kind == Tok::End ? "end of input" : peek().text) + "'",
           what);
    return advance();
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    for (;;) {
      if (accept(Tok::Plus))
        lhs = make<BinOp>('+', lhs, parse_term());
      else if (accept(Tok::Minus))
        lhs = make<BinOp>('-', lhs, parse_term());
      else
        return lhs;
    }
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    for (;;) {
      if (accept(Tok::Star))
        lhs = make<BinOp>('*', lhs, parse_factor());
      else if (accept(Tok::Slash))
        lhs = make<BinOp>('/', lhs, parse_factor());
      else
        return lhs;
    }
  }

  ExprPtr parse_factor() {
    if (accept(Tok::Minus)) return make<Neg>(parse_factor());
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (accept(Tok::Caret)) return make<Pow>(base, parse_factor());
    return base;
  }

  Rational parse_rational_literal() {
    bool neg = accept(Tok::Minus);
    const Token& num = expect(Tok::Int, "integer");
    Int n(num.text);
    if (accept(Tok::Slash)) {
      const Token& den = expect(Tok::Int, "integer");
      Int d(den.text);
      if (d == 0) fail(src_, den.offset, "zero denominator in rational literal");
      return make_rational(neg ? -n : n, d);
    }
    return Rational(neg ? -n : n);
  }

  ExprPtr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        advance();
        return make<IntLit>(Int(t.text));
      }
      case Tok::Name: {
        advance();
        for (const auto& v : vars_)
          if (v == t.text) return make<VarRef>(t.text);
        fail(src_, t.offset, "unknown variable '" + t.text + "'",
             "a declared variable");
      }
      case Tok::LParen: {
        advance();
        ExprPtr e = parse_expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Poch: {
        advance();
        expect(Tok::LParen, "'('");
        Rational base = parse_rational_literal();
        expect(Tok::Comma, "','");
        ExprPtr index = parse_expr();
        expect(Tok::RParen, "')'");
        return make<Poch>(std::move(base), index);
      }
      case Tok::Fact: {
        advance();
        expect(Tok::LParen, "'('");
        ExprPtr index = parse_expr();
        expect(Tok::RParen, "')'");
        return make<Fact>(index);
      }
      default:
        fail(src_, t.offset,
             "expected an expression atom, found '" +
                 (t.kind == Tok::End ? "end of input" : t.text) + "'",
             "integer, name, '(', 'poch' or 'fact'");
    }
  }

  std::string_view src_;
  const std::vector<std::string>& vars_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

inline long long to_index(const Rational& x, const char* what) {
  if (denominator(x) != 1)
    throw NonIntegerExponent(std::string(what) + " is not an integer: " +
                             decimal_digest(x));
  const Int& n = numerator(x);
  if (n > 2'000'000'000 || n < -2'000'000'000)
    throw std::domain_error(std::string(what) + " out of range");
  return n.convert_to<long long>();
}

}  // namespace dsl_detail

using Bindings = std::map<std::string, long long>;

inline SummandAst parse(std::string_view src,
                        const std::vector<std::string>& variables) {
  dsl_detail::Parser parser(src, variables);
  return SummandAst{parser.parse_all(), variables};
}

// ---------------------------------------------------------------------------
// Exact evaluation.
// ---------------------------------------------------------------------------

namespace dsl_detail {

inline Rational eval_rec(const ExprPtr& e, const Bindings& env);

struct ExactEval {
  const Bindings& env;

  Rational operator()(const IntLit& x) const { return Rational(x.value); }
  Rational operator()(const RatLit& x) const { return x.value; }
  Rational operator()(const VarRef& x) const {
    auto it = env.find(x.name);
    assert(it != env.end() && "binding missing for declared variable");
    return Rational(it->second);
  }
  Rational operator()(const Neg& x) const { return -eval_rec(x.operand, env); }
  Rational operator()(const BinOp& x) const {
    Rational a = eval_rec(x.lhs, env);
    Rational b = eval_rec(x.rhs, env);
    switch (x.op) {
      case '+': return a + b;
      case '-': return a - b;
      case '*': return a * b;
      case '/':
        if (b == 0) throw DivisionByZero("division by zero");
        return a / b;
    }
    assert(false);
    return Rational(0);
  }
  Rational operator()(const Pow& x) const {
    Rational base = eval_rec(x.base, env);
    long long e = to_index(eval_rec(x.exponent, env), "exponent");
    return rat_pow(base, e);
  }
  Rational operator()(const Poch& x) const {
    return rising(x.base, to_index(eval_rec(x.index, env), "poch index"));
  }
  Rational operator()(const Fact& x) const {
    return rising(Rational(1), to_index(eval_rec(x.index, env), "fact index"));
  }
};

inline Rational eval_rec(const ExprPtr& e, const Bindings& env) {
  return std::visit(ExactEval{env}, e->node);
}

}  // namespace dsl_detail

inline Rational eval_exact(const SummandAst& ast, const Bindings& bindings) {
  return dsl_detail::eval_rec(ast.root, bindings);
}

// ---------------------------------------------------------------------------
// Scaled p-adic evaluation: equals padic_encode(eval_exact(...)) at the
// surviving precision. Index and exponent subexpressions are evaluated
// exactly (they are small affine forms), the value arithmetic runs in
// PadicScaled.
// ---------------------------------------------------------------------------

namespace dsl_detail {

inline PadicScaled padic_rising(const Rational& a, long long m, long long p,
                                int prec) {
  PadicScaled acc = padic_encode(Rational(1), p, prec);
  if (m >= 0) {
    for (long long j = 0; j < m; ++j) acc = acc * padic_encode(a + j, p, prec);
    return acc;
  }
  for (long long k = 1; k <= -m; ++k) {
    Rational f = a - k;
    if (f == 0) throw PoleError("rising: vanishing factor at negative index");
    acc = acc / padic_encode(f, p, prec);
  }
  return acc;
}

struct PadicEval {
  const Bindings& env;
  long long p;
  int prec;

  PadicScaled enc(const Rational& x) const { return padic_encode(x, p, prec); }
  PadicScaled rec(const ExprPtr& e) const { return std::visit(*this, e->node); }

  PadicScaled operator()(const IntLit& x) const { return enc(Rational(x.value)); }
  PadicScaled operator()(const RatLit& x) const { return enc(x.value); }
  PadicScaled operator()(const VarRef& x) const {
    auto it = env.find(x.name);
    assert(it != env.end() && "binding missing for declared variable");
    return enc(Rational(it->second));
  }
  PadicScaled operator()(const Neg& x) const { return -rec(x.operand); }
  PadicScaled operator()(const BinOp& x) const {
    PadicScaled a = rec(x.lhs);
    PadicScaled b = rec(x.rhs);
    switch (x.op) {
      case '+': return a + b;
      case '-': return a - b;
      case '*': return a * b;
      case '/':
        if (b.is_exact_zero()) throw DivisionByZero("division by zero");
        return a / b;
    }
    assert(false);
    return a;
  }
  PadicScaled operator()(const Pow& x) const {
    long long e = to_index(eval_rec(x.exponent, env), "exponent");
    return rec(x.base).pow(e);
  }
  PadicScaled operator()(const Poch& x) const {
    return padic_rising(x.base, to_index(eval_rec(x.index, env), "poch index"),
                        p, prec);
  }
  PadicScaled operator()(const Fact& x) const {
    return padic_rising(Rational(1),
                        to_index(eval_rec(x.index, env), "fact index"), p, prec);
  }
};

}  // namespace dsl_detail

inline PadicScaled eval_padic(const SummandAst& ast, const Bindings& bindings,
                              long long p, int prec) {
  return dsl_detail::PadicEval{bindings, p, prec}.rec(ast.root);
}

// ---------------------------------------------------------------------------
// Truncated sums over one variable.
// ---------------------------------------------------------------------------

inline Rational sum_series(const SummandAst& ast, const std::string& var,
                           long long N) {
  Rational acc(0);
  Bindings env;
  for (long long n = 0; n <= N; ++n) {
    env[var] = n;
    acc += eval_exact(ast, env);
  }
  return acc;
}

inline PadicScaled sum_series_padic(const SummandAst& ast, const std::string& var,
                                    long long N, long long p, int prec) {
  PadicScaled acc = PadicScaled::exact_zero(p, prec);
  Bindings env;
  for (long long n = 0; n <= N; ++n) {
    env[var] = n;
    acc = acc + eval_padic(ast, env, p, prec);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Printer: minimal parentheses, reparses to a structurally identical tree.
// ---------------------------------------------------------------------------

namespace dsl_detail {

// Precedence levels: 1 add, 2 mul, 3 unary minus, 4 power, 5 atom.
inline int level(const Expr& e) {
  struct V {
    int operator()(const IntLit&) const { return 5; }
    int operator()(const RatLit& x) const { return denominator(x.value) == 1 && numerator(x.value) >= 0 ? 5 : 2; }
    int operator()(const VarRef&) const { return 5; }
    int operator()(const Neg&) const { return 3; }
    int operator()(const BinOp& b) const { return b.op == '+' || b.op == '-' ? 1 : 2; }
    int operator()(const Pow&) const { return 4; }
    int operator()(const Poch&) const { return 5; }
    int operator()(const Fact&) const { return 5; }
  };
  return std::visit(V{}, e.node);
}

inline void print_rec(const ExprPtr& e, std::string& out, int min_level);

struct Printer {
  std::string& out;

  void child(const ExprPtr& e, int min_level) const { print_rec(e, out, min_level); }

  void operator()(const IntLit& x) const { out += x.value.str(); }
  void operator()(const RatLit& x) const {
    out += numerator(x.value).str();
    if (denominator(x.value) != 1) {
      out += '/';
      out += denominator(x.value).str();
    }
  }
  void operator()(const VarRef& x) const { out += x.name; }
  void operator()(const Neg& x) const {
    out += '-';
    child(x.operand, 3);
  }
  void operator()(const BinOp& x) const {
    const int lv = x.op == '+' || x.op == '-' ? 1 : 2;
    child(x.lhs, lv);
    out += x.op;
    child(x.rhs, lv + 1);  // left associativity
  }
  void operator()(const Pow& x) const {
    child(x.base, 5);
    out += '^';
    child(x.exponent, 3);  // exponent is a factor
  }
  void operator()(const Poch& x) const {
    out += "poch(";
    if (x.base < 0) out += '-';
    Rational a = x.base < 0 ? Rational(-x.base) : x.base;
    out += numerator(a).str();
    if (denominator(a) != 1) {
      out += '/';
      out += denominator(a).str();
    }
    out += ',';
    child(x.index, 1);
    out += ')';
  }
  void operator()(const Fact& x) const {
    out += "fact(";
    child(x.index, 1);
    out += ')';
  }
};

inline void print_rec(const ExprPtr& e, std::string& out, int min_level) {
  const bool parens = level(*e) < min_level;
  if (parens) out += '(';
  std::visit(Printer{out}, e->node);
  if (parens) out += ')';
}

}  // namespace dsl_detail

inline std::string pretty_print(const SummandAst& ast) {
  std::string out;
  dsl_detail::print_rec(ast.root, out, 1);
  return out;
}

// Structural equality of two expression trees (used by round-trip tests).
inline bool ast_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->node.index() != b->node.index()) return false;
  struct V {
    const ExprPtr& other;
    bool operator()(const IntLit& x) const {
      return x.value == std::get<IntLit>(other->node).value;
    }
    bool operator()(const RatLit& x) const {
      return x.value == std::get<RatLit>(other->node).value;
    }
    bool operator()(const VarRef& x) const {
      return x.name == std::get<VarRef>(other->node).name;
    }
    bool operator()(const Neg& x) const {
      return ast_equal(x.operand, std::get<Neg>(other->node).operand);
    }
    bool operator()(const BinOp& x) const {
      const auto& o = std::get<BinOp>(other->node);
      return x.op == o.op && ast_equal(x.lhs, o.lhs) && ast_equal(x.rhs, o.rhs);
    }
    bool operator()(const Pow& x) const {
      const auto& o = std::get<Pow>(other->node);
      return ast_equal(x.base, o.base) && ast_equal(x.exponent, o.exponent);
    }
    bool operator()(const Poch& x) const {
      const auto& o = std::get<Poch>(other->node);
      return x.base == o.base && ast_equal(x.index, o.index);
    }
    bool operator()(const Fact& x) const {
      return ast_equal(x.index, std::get<Fact>(other->node).index);
    }
  };
  return std::visit(V{b}, a->node);
}

}  // namespace supercong
