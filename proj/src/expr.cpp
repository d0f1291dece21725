#include "curvelab/expr.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace curvelab {

namespace {

const std::array<std::string, 7> kFunctions = {"sin", "cos", "exp", "log",
                                               "sqrt", "cosh", "sinh"};

struct Token {
  enum class Kind { Number, Ident, Op, LParen, RParen, Comma, End };
  Kind kind;
  std::size_t offset;
  double number = 0.0;
  std::string text;
  char op = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_.offset = pos_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::Kind::End;
      return;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = text_.c_str() + pos_;
      char* end = nullptr;
      current_.number = std::strtod(begin, &end);
      if (end == begin) throw SyntaxError("malformed number", pos_);
      current_.kind = Token::Kind::Number;
      pos_ += static_cast<std::size_t>(end - begin);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      current_.kind = Token::Kind::Ident;
      current_.text = text_.substr(start, pos_ - start);
      return;
    }
    switch (c) {
      case '+': case '-': case '*': case '/': case '^':
        current_.kind = Token::Kind::Op;
        current_.op = c;
        break;
      case '(': current_.kind = Token::Kind::LParen; break;
      case ')': current_.kind = Token::Kind::RParen; break;
      case ',': current_.kind = Token::Kind::Comma; break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Token current_;
};

ExprPtr make_number(double v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Number;
  n->number = v;
  return n;
}

ExprPtr make_binary(char op, ExprPtr l, ExprPtr r) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Binary;
  n->op = op;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

class Parser {
 public:
  explicit Parser(Lexer& lex) : lex_(lex) {}

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (is_op('+') || is_op('-')) {
      const char op = lex_.next().op;
      lhs = make_binary(op, lhs, parse_term());
    }
    return lhs;
  }

  void expect_end() {
    if (lex_.peek().kind != Token::Kind::End)
      throw SyntaxError("expected end of expression", lex_.peek().offset);
  }

 private:
  bool is_op(char c) const {
    return lex_.peek().kind == Token::Kind::Op && lex_.peek().op == c;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_unary();
    while (is_op('*') || is_op('/')) {
      const char op = lex_.next().op;
      lhs = make_binary(op, lhs, parse_unary());
    }
    return lhs;
  }

  // Unary minus binds looser than '^': -x^2 parses as -(x^2).
  ExprPtr parse_unary() {
    if (is_op('-')) {
      lex_.next();
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::Unary;
      n->op = '-';
      n->lhs = parse_unary();
      return n;
    }
    return parse_power();
  }

  // '^' is right-associative: x^2^3 = x^(2^3).
  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (is_op('^')) {
      lex_.next();
      return make_binary('^', base, parse_unary());
    }
    return base;
  }

  ExprPtr parse_atom() {
    const Token t = lex_.next();
    switch (t.kind) {
      case Token::Kind::Number:
        return make_number(t.number);
      case Token::Kind::Ident: {
        if (t.text == "x") {
          auto n = std::make_shared<ExprNode>();
          n->kind = ExprNode::Kind::Variable;
          return n;
        }
        for (const auto& f : kFunctions) {
          if (t.text == f) {
            if (lex_.peek().kind != Token::Kind::LParen)
              throw SyntaxError("expected '(' after function '" + f + "'", lex_.peek().offset);
            lex_.next();
            auto n = std::make_shared<ExprNode>();
            n->kind = ExprNode::Kind::Call;
            n->func = f;
            n->lhs = parse_expr();
            if (lex_.peek().kind != Token::Kind::RParen)
              throw SyntaxError("expected ')'", lex_.peek().offset);
            lex_.next();
            return n;
          }
        }
        throw SyntaxError("unknown identifier '" + t.text + "'", t.offset);
      }
      case Token::Kind::LParen: {
        ExprPtr inner = parse_expr();
        if (lex_.peek().kind != Token::Kind::RParen)
          throw SyntaxError("expected ')'", lex_.peek().offset);
        lex_.next();
        return inner;
      }
      default:
        throw SyntaxError("expected number, 'x', function or '('", t.offset);
    }
  }

  Lexer& lex_;
};

Dual2 eval_node(const ExprNode& n, const Dual2& x) {
  switch (n.kind) {
    case ExprNode::Kind::Number:
      return Dual2(n.number);
    case ExprNode::Kind::Variable:
      return x;
    case ExprNode::Kind::Unary:
      return -eval_node(*n.lhs, x);
    case ExprNode::Kind::Binary: {
      const Dual2 a = eval_node(*n.lhs, x);
      const Dual2 b = eval_node(*n.rhs, x);
      switch (n.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/': return a / b;
        case '^': return pow(a, b);
      }
      throw Error("corrupt expression node");
    }
    case ExprNode::Kind::Call: {
      const Dual2 a = eval_node(*n.lhs, x);
      if (n.func == "sin") return sin(a);
      if (n.func == "cos") return cos(a);
      if (n.func == "exp") return exp(a);
      if (n.func == "log") return log(a);
      if (n.func == "sqrt") return sqrt(a);
      if (n.func == "cosh") return cosh(a);
      if (n.func == "sinh") return sinh(a);
      throw Error("corrupt expression node");
    }
  }
  throw Error("corrupt expression node");
}

}  // namespace

ExprPtr parse_expression(const std::string& text) {
  Lexer lex(text);
  Parser parser(lex);
  ExprPtr e = parser.parse_expr();
  parser.expect_end();
  return e;
}

std::tuple<double, double, double> eval_dual(const ExprPtr& ast, double x) {
  const Dual2 r = eval_node(*ast, Dual2::variable(x));
  return {r.v, r.d1, r.d2};
}

double eval_expr(const ExprPtr& ast, double x) {
  return eval_node(*ast, Dual2(x)).v;
}

std::string format_expr(const ExprPtr& ast) {
  std::ostringstream os;
  os.precision(17);
  switch (ast->kind) {
    case ExprNode::Kind::Number: os << ast->number; break;
    case ExprNode::Kind::Variable: os << "x"; break;
    case ExprNode::Kind::Unary:
      os << "(-" << format_expr(ast->lhs) << ")";
      break;
    case ExprNode::Kind::Binary:
      os << "(" << format_expr(ast->lhs) << ast->op << format_expr(ast->rhs) << ")";
      break;
    case ExprNode::Kind::Call:
      os << ast->func << "(" << format_expr(ast->lhs) << ")";
      break;
  }
  return os.str();
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprNode::Kind::Number: return a->number == b->number;
    case ExprNode::Kind::Variable: return true;
    case ExprNode::Kind::Unary: return expr_equal(a->lhs, b->lhs);
    case ExprNode::Kind::Binary:
      return a->op == b->op && expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    case ExprNode::Kind::Call:
      return a->func == b->func && expr_equal(a->lhs, b->lhs);
  }
  return false;
}

}  // namespace curvelab
