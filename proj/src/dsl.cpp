#include "curvelab/dsl.hpp"

#include <cctype>
#include <cstdlib>
#include <map>

namespace curvelab {

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

std::string read_ident(const std::string& s, std::size_t& i) {
  std::size_t start = i;
  while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
  if (i == start) throw SyntaxError("expected identifier", start);
  return s.substr(start, i - start);
}

// name=value pairs between '(' and ')'; values are plain signed numbers.
std::map<std::string, double> read_params(const std::string& s, std::size_t& i) {
  std::map<std::string, double> params;
  skip_ws(s, i);
  if (i >= s.size() || s[i] != '(') throw SyntaxError("expected '('", i);
  ++i;
  skip_ws(s, i);
  if (i < s.size() && s[i] == ')') {
    ++i;
    return params;
  }
  for (;;) {
    skip_ws(s, i);
    const std::string name = read_ident(s, i);
    skip_ws(s, i);
    if (i >= s.size() || s[i] != '=') throw SyntaxError("expected '=' after parameter name", i);
    ++i;
    skip_ws(s, i);
    const char* begin = s.c_str() + i;
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) throw SyntaxError("expected numeric parameter value", i);
    i += static_cast<std::size_t>(end - begin);
    if (params.count(name)) throw SyntaxError("duplicate parameter '" + name + "'", i);
    params[name] = value;
    skip_ws(s, i);
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    if (i < s.size() && s[i] == ')') {
      ++i;
      return params;
    }
    throw SyntaxError("expected ',' or ')'", i);
  }
}

double require(const std::map<std::string, double>& params, const std::string& name,
               std::size_t offset) {
  auto it = params.find(name);
  if (it == params.end()) throw SyntaxError("missing parameter '" + name + "'", offset);
  return it->second;
}

void reject_extras(const std::map<std::string, double>& params,
                   std::initializer_list<const char*> known, std::size_t offset) {
  for (const auto& [name, value] : params) {
    bool ok = false;
    for (const char* k : known) ok = ok || name == k;
    if (!ok) throw SyntaxError("unknown parameter '" + name + "'", offset);
  }
}

}  // namespace

Curve parse_curve_spec(const std::string& text) {
  std::size_t i = 0;
  skip_ws(text, i);
  const std::size_t head_off = i;
  const std::string head = read_ident(text, i);

  if (head == "expshift") {
    skip_ws(text, i);
    if (i != text.size()) throw SyntaxError("unexpected trailing input", i);
    return Curve(ExpShift{});
  }

  if (head == "expr") {
    skip_ws(text, i);
    if (i >= text.size() || text[i] != '(') throw SyntaxError("expected '(' after 'expr'", i);
    std::size_t close = text.find_last_of(')');
    if (close == std::string::npos || close <= i)
      throw SyntaxError("expected closing ')'", text.size());
    for (std::size_t j = close + 1; j < text.size(); ++j)
      if (!std::isspace(static_cast<unsigned char>(text[j])))
        throw SyntaxError("unexpected trailing input", j);
    const std::size_t base = i + 1;
    try {
      ExprPtr ast = parse_expression(text.substr(base, close - base));
      return Curve(Expression{std::move(ast)});
    } catch (const SyntaxError& e) {
      throw SyntaxError("in expression: " + std::string(e.what()), base + e.offset);
    }
  }

  auto finish = [&](Curve c) {
    skip_ws(text, i);
    if (i != text.size()) throw SyntaxError("unexpected trailing input", i);
    return c;
  };

  if (head == "parabola") {
    auto params = read_params(text, i);
    reject_extras(params, {"a"}, i);
    return finish(Curve(Parabola{require(params, "a", i)}));
  }
  if (head == "family") {
    auto params = read_params(text, i);
    reject_extras(params, {"a", "c"}, i);
    return finish(Curve(Family314{require(params, "a", i), require(params, "c", i)}));
  }
  if (head == "circle") {
    auto params = read_params(text, i);
    reject_extras(params, {"r"}, i);
    return finish(Curve(CircleArc{require(params, "r", i)}));
  }
  if (head == "ellipse") {
    auto params = read_params(text, i);
    reject_extras(params, {"p", "q"}, i);
    return finish(Curve(EllipseArc{require(params, "p", i), require(params, "q", i)}));
  }
  if (head == "piecewise") {
    auto params = read_params(text, i);
    reject_extras(params, {"a", "b"}, i);
    return finish(Curve(PiecewiseQuadratic{require(params, "a", i), require(params, "b", i)}));
  }
  throw SyntaxError("unknown curve kind '" + head + "'", head_off);
}

std::string format_curve_spec(const Curve& curve) { return curve.spec(); }

}  // namespace curvelab
