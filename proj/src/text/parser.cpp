#include <cctype>
#include <limits>
#include <optional>

#include "sshg/error.hpp"
#include "sshg/rewrite.hpp"
#include "sshg/text.hpp"

namespace sshg {
namespace {

struct Token {
  enum Kind { Number, Ident, Op, End } kind = End;
  std::string text;
  int line = 1;
  int column = 1;
};

std::vector<Token> tokenize(std::string_view s, int line0, int column0) {
  std::vector<Token> out;
  int line = line0, col = column0;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Token::Number;
      t.text = std::string(s.substr(i, j - i));
      out.push_back(t);
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Token::Ident;
      t.text = std::string(s.substr(i, j - i));
      out.push_back(t);
      advance(j - i);
    } else if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
      t.kind = Token::Op;
      t.text = std::string(1, c);
      out.push_back(t);
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  std::unique_ptr<ExprAST> parse() {
    auto e = expr();
    if (peek().kind != Token::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return t_[pos_]; }
  bool is_op(const char* op) const { return peek().kind == Token::Op && peek().text == op; }
  Token take() { return t_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(peek().kind == Token::End ? msg + " at end of input" : msg, peek().line, peek().column);
  }
  void expect(const char* op) {
    if (!is_op(op)) fail(std::string("expected '") + op + "'");
    ++pos_;
  }

  static std::unique_ptr<ExprAST> node(ExprAST::Kind k, const Token& at) {
    auto n = std::make_unique<ExprAST>();
    n->kind = k;
    n->line = at.line;
    n->column = at.column;
    return n;
  }

  std::unique_ptr<ExprAST> expr() {
    auto lhs = term();
    while (is_op("+") || is_op("-")) {
      Token op = take();
      auto n = node(op.text == "+" ? ExprAST::Kind::Add : ExprAST::Kind::Sub, op);
      n->args.push_back(std::move(lhs));
      n->args.push_back(term());
      lhs = std::move(n);
    }
    return lhs;
  }

  std::unique_ptr<ExprAST> term() {
    auto lhs = unary();
    while (is_op("*") || is_op("/")) {
      Token op = take();
      auto n = node(op.text == "*" ? ExprAST::Kind::Mul : ExprAST::Kind::Div, op);
      n->args.push_back(std::move(lhs));
      n->args.push_back(unary());
      lhs = std::move(n);
    }
    return lhs;
  }

  std::unique_ptr<ExprAST> unary() {
    if (is_op("-")) {
      Token op = take();
      auto n = node(ExprAST::Kind::Neg, op);
      n->args.push_back(unary());
      return n;
    }
    if (is_op("+")) {
      take();
      return unary();
    }
    return power();
  }

  std::int64_t integer() {
    if (peek().kind != Token::Number) fail("malformed exponent: expected an integer");
    Token n = take();
    if (n.text.size() > 18) throw ParseError("exponent literal too large", n.line, n.column);
    return std::stoll(n.text);
  }

  std::unique_ptr<ExprAST> power() {
    auto base = primary();
    if (!is_op("^")) return base;
    Token op = take();
    auto n = node(ExprAST::Kind::Pow, op);
    if (peek().kind == Token::Number) {
      n->exponent = Fraction(integer());
    } else if (is_op("(")) {
      take();
      bool neg = false;
      if (is_op("-") || is_op("+")) neg = take().text == "-";
      std::int64_t num = integer();
      std::int64_t den = 1;
      if (is_op("/")) {
        take();
        den = integer();
        if (den == 0) fail("malformed exponent: zero denominator");
      }
      expect(")");
      n->exponent = Fraction(neg ? -num : num, den);
    } else {
      fail("malformed exponent");
    }
    n->args.push_back(std::move(base));
    if (is_op("^")) fail("chained powers need parentheses");
    return n;
  }

  std::unique_ptr<ExprAST> primary() {
    const Token& tk = peek();
    if (tk.kind == Token::Number) {
      auto n = node(ExprAST::Kind::Number, tk);
      n->text = take().text;
      return n;
    }
    if (tk.kind == Token::Ident) {
      Token id = take();
      if (is_op("(")) {
        take();
        auto n = node(ExprAST::Kind::Call, id);
        n->text = id.text;
        n->args.push_back(expr());
        expect(")");
        return n;
      }
      auto n = node(ExprAST::Kind::Symbol, id);
      n->text = id.text;
      return n;
    }
    if (is_op("(")) {
      take();
      auto e = expr();
      expect(")");
      return e;
    }
    fail(tk.kind == Token::End ? "expected an operand" : "unexpected '" + tk.text + "'");
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
};

// exp argument: ordinary part plus rational multiples of logarithms
struct LogForm {
  Expression linear;
  std::vector<std::pair<Fraction, ExpImage>> logs;
};

[[noreturn]] void fail_at(const ExprAST& n, const std::string& msg) { throw ParseError(msg, n.line, n.column); }

std::optional<Fraction> rational_constant(const Expression& e) {
  auto s = e.as_scalar();
  if (!s || !s->is_rational()) return std::nullopt;
  mpq_class q = (*s)[0];
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) return std::nullopt;
  return Fraction(q.get_num().get_si(), q.get_den().get_si());
}

Expression lower_node(const ExprAST& n);

LogForm lower_log(const ExprAST& n) {
  using K = ExprAST::Kind;
  switch (n.kind) {
    case K::Add:
    case K::Sub: {
      LogForm a = lower_log(*n.args[0]);
      LogForm b = lower_log(*n.args[1]);
      bool sub = n.kind == K::Sub;
      a.linear = sub ? a.linear - b.linear : a.linear + b.linear;
      for (auto& [c, img] : b.logs) a.logs.emplace_back(sub ? -c : c, img);
      return a;
    }
    case K::Neg: {
      LogForm a = lower_log(*n.args[0]);
      a.linear = -a.linear;
      for (auto& l : a.logs) l.first = -l.first;
      return a;
    }
    case K::Mul:
    case K::Div: {
      LogForm a = lower_log(*n.args[0]);
      LogForm b = lower_log(*n.args[1]);
      if (a.logs.empty() && b.logs.empty()) return LogForm{lower_node(n), {}};
      bool div = n.kind == K::Div;
      LogForm& with_logs = a.logs.empty() ? b : a;
      LogForm& scale = a.logs.empty() ? a : b;
      if (!scale.logs.empty() || (div && &with_logs == &b))
        fail_at(n, "ln(...) may only be scaled by a rational constant");
      auto q = rational_constant(scale.linear);
      if (!q || q->is_zero()) fail_at(n, "ln(...) may only be scaled by a rational constant");
      Fraction k = div ? Fraction(1) / *q : *q;
      with_logs.linear = with_logs.linear * Expression::rational(k.num(), k.den());
      for (auto& l : with_logs.logs) l.first = l.first * k;
      return std::move(with_logs);
    }
    case K::Call:
      if (n.text == "ln") {
        Expression arg = lower_node(*n.args[0]);
        try {
          return LogForm{Expression(), {{Fraction(1), ExpImage::from_expression(arg)}}};
        } catch (const ParseError&) {
          throw;
        } catch (const Error& e) {
          fail_at(n, std::string("ln: ") + e.what());
        }
      }
      [[fallthrough]];
    default:
      return LogForm{lower_node(n), {}};
  }
}

Expression exp_of(const ExprAST& n, const LogForm& f, bool negate) {
  try {
    Expression out = ExpImage::exp_of(negate ? -f.linear : f.linear).expression();
    for (const auto& [c, img] : f.logs) out *= img.power(negate ? -c : c);
    return out;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail_at(n, e.what());
  }
}

Expression lower_node(const ExprAST& n) {
  using K = ExprAST::Kind;
  const Registry& reg = Registry::instance();
  try {
    switch (n.kind) {
      case K::Number: {
        mpz_class z(n.text, 10);
        return Expression(CycloScalar(mpq_class(z)));
      }
      case K::Symbol: {
        if (n.text == "i") return Expression::i();
        if (n.text == "omega") return Expression::omega();
        if (n.text == "r") return Expression::r();
        if (n.text == "D") return Expression::D(1);
        auto g = reg.find(n.text);
        if (!g) fail_at(n, "unknown symbol '" + n.text + "'");
        return Expression::generator(*g);
      }
      case K::Add: return lower_node(*n.args[0]) + lower_node(*n.args[1]);
      case K::Sub: return lower_node(*n.args[0]) - lower_node(*n.args[1]);
      case K::Neg: return -lower_node(*n.args[0]);
      case K::Mul: return lower_node(*n.args[0]) * lower_node(*n.args[1]);
      case K::Div: {
        Expression a = lower_node(*n.args[0]);
        Expression b = lower_node(*n.args[1]);
        auto inv = try_invert(b);
        if (!inv) fail_at(*n.args[1], "divisor is not invertible in the ring");
        return a * *inv;
      }
      case K::Pow: {
        const ExprAST& base = *n.args[0];
        // D^(1/2) etc. and generator powers go straight to the generator
        if (base.kind == K::Symbol && reg.find(base.text)) {
          GenId g = *reg.find(base.text);
          if (reg.at(g).kind != GenKind::Odd) return Expression::generator(g, n.exponent);
        }
        return pow(lower_node(base), n.exponent);
      }
      case K::Call: {
        const std::string& f = n.text;
        if (f == "ln") fail_at(n, "ln(...) is only allowed inside exp(...)");
        if (f != "exp" && f != "cosh" && f != "sinh" && f != "sech") fail_at(n, "unknown function '" + f + "'");
        LogForm arg = lower_log(*n.args[0]);
        if (f == "exp") return exp_of(n, arg, false);
        Expression plus = exp_of(n, arg, false);
        Expression minus = exp_of(n, arg, true);
        Expression half = Expression::rational(1, 2);
        if (f == "cosh") return half * (plus + minus);
        if (f == "sinh") return half * (plus - minus);
        auto inv = try_invert(half * (plus + minus));
        if (!inv) fail_at(n, "sech argument does not give an invertible cosh");
        return *inv;
      }
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail_at(n, e.what());
  } catch (const std::overflow_error& e) {
    fail_at(n, e.what());
  }
  fail_at(n, "unhandled node");
}

}  // namespace

std::unique_ptr<ExprAST> parse_ast(std::string_view text, int line0, int column0) {
  return Parser(tokenize(text, line0, column0)).parse();
}

Expression lower(const ExprAST& ast) { return lower_node(ast); }

Expression parse_expression(std::string_view text, int line0, int column0) {
  return lower(*parse_ast(text, line0, column0));
}

}  // namespace sshg
