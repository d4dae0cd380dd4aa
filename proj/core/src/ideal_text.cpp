#include "monoclosure/ideal_text.hpp"

#include "monoclosure/errors.hpp"

#include <cctype>
#include <vector>

namespace monoclosure {

namespace {

struct Token {
  enum class Kind { ident, number, symbol, end };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isalpha(c)) {
      const std::size_t start = i;
      // Identifiers are a letter run plus an optional digit suffix (x12).
      while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Token::Kind::ident, std::string(text.substr(start, i - start)), start});
    } else if (std::isdigit(c)) {
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Token::Kind::number, std::string(text.substr(start, i - start)), start});
    } else if (text.substr(i, 3) == "\xE2\x88\xA9") {  // U+2229 INTERSECTION
      out.push_back({Token::Kind::symbol, "&", i});
      i += 3;
    } else if (std::string_view("()+*&:^,_{}").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::Kind::symbol, std::string(1, static_cast<char>(c)), i});
      ++i;
    } else {
      throw ParseError(i, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Token::Kind::end, "", text.size()});
  return out;
}

// 1-based variable index named by an identifier, or nullopt if it is not a variable.
std::optional<std::size_t> variable_index(const std::string& name, bool& alias) {
  alias = false;
  if (name == "x" || name == "y" || name == "z") {
    alias = true;
    return static_cast<std::size_t>(name[0] - 'x') + 1;
  }
  if (name.size() >= 2 && name[0] == 'x') {
    std::size_t idx = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
      idx = idx * 10 + static_cast<std::size_t>(name[i] - '0');
      if (idx > 1'000'000) return std::nullopt;
    }
    if (idx == 0) return std::nullopt;
    return idx;
  }
  return std::nullopt;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::size_t dim) : tokens_(std::move(tokens)), dim_(dim) {}

  IdealExpr parse_all() {
    IdealExpr e = expr();
    if (peek().kind != Token::Kind::end) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& next() { return tokens_[at_++]; }
  bool accept(const char* symbol) {
    if (peek().kind == Token::Kind::symbol && peek().text == symbol) {
      ++at_;
      return true;
    }
    return false;
  }
  void expect(const char* symbol) {
    if (!accept(symbol)) fail(std::string("expected '") + symbol + "'");
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(peek().pos, message); }

  IdealExpr expr() {
    IdealExpr e = inter();
    while (accept("+")) e = IdealExpr::binary(IdealExpr::Op::sum, std::move(e), inter());
    return e;
  }

  IdealExpr inter() {
    IdealExpr e = colon_level();
    while (accept("&")) e = IdealExpr::binary(IdealExpr::Op::intersection, std::move(e), colon_level());
    return e;
  }

  IdealExpr colon_level() {
    IdealExpr e = prod();
    while (accept(":")) e = IdealExpr::binary(IdealExpr::Op::colon, std::move(e), prod());
    return e;
  }

  IdealExpr prod() {
    IdealExpr e = pow();
    while (accept("*")) e = IdealExpr::binary(IdealExpr::Op::product, std::move(e), pow());
    return e;
  }

  IdealExpr pow() {
    IdealExpr e = atom();
    while (accept("^")) e = IdealExpr::power(std::move(e), integer());
    return e;
  }

  Integer integer() {
    if (peek().kind != Token::Kind::number) fail("expected a nonnegative integer");
    return Integer(next().text);
  }

  std::size_t variable(const Token& tok) {
    bool alias = false;
    const auto idx = tok.kind == Token::Kind::ident ? variable_index(tok.text, alias) : std::nullopt;
    if (!idx) throw ParseError(tok.pos, "unknown variable '" + tok.text + "'");
    if (alias && dim_ > 3) throw ParseError(tok.pos, "aliases x, y, z need dimension <= 3");
    if (*idx > dim_) {
      throw ParseError(tok.pos, "variable '" + tok.text + "' exceeds dimension " + std::to_string(dim_));
    }
    return *idx - 1;
  }

  IdealExpr atom() {
    const Token& tok = peek();
    if (accept("(")) {
      IdealExpr e = expr();
      while (accept(",")) e = IdealExpr::binary(IdealExpr::Op::sum, std::move(e), expr());
      expect(")");
      return e;
    }
    if (tok.kind == Token::Kind::number) {
      next();
      if (tok.text == "0") return IdealExpr::literal(MonomialIdeal::zero(dim_));
      if (tok.text == "1") return IdealExpr::literal(MonomialIdeal::unit(dim_));
      throw ParseError(tok.pos, "only 0 and 1 may stand alone as ideals");
    }
    if (tok.kind != Token::Kind::ident) fail(tok.kind == Token::Kind::end ? "unexpected end of input"
                                                                           : "unexpected '" + tok.text + "'");
    next();
    if (tok.text == "m") return maximal();
    if (tok.text == "rad" || tok.text == "sqrt") {
      expect("(");
      IdealExpr inner = expr();
      expect(")");
      return IdealExpr::radical(std::move(inner));
    }
    const std::size_t j = variable(tok);
    return IdealExpr::literal(MonomialIdeal::from_generators(dim_, {ExponentVector::unit(dim_, j)}));
  }

  IdealExpr maximal() {
    std::optional<std::vector<std::size_t>> vars;
    if (accept("_")) {
      expect("{");
      vars.emplace();
      do {
        const Token& v = next();
        if (v.kind == Token::Kind::number) {
          const std::size_t idx = std::stoul(v.text);
          if (idx == 0 || idx > dim_) {
            throw ParseError(v.pos, "variable index " + v.text + " out of range 1.." + std::to_string(dim_));
          }
          vars->push_back(idx - 1);
        } else {
          vars->push_back(variable(v));
        }
      } while (accept(","));
      expect("}");
    }
    return IdealExpr::literal(m_power(dim_, 1, std::move(vars)));
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
  std::size_t dim_;
};

}  // namespace

std::optional<std::size_t> infer_dimension(std::string_view text) {
  const auto tokens = tokenize(text);
  std::optional<std::size_t> best;
  bool in_floor_braces = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    std::optional<std::size_t> idx;
    if (t.kind == Token::Kind::ident) {
      bool alias = false;
      idx = variable_index(t.text, alias);
      if (t.text == "m" && i + 2 < tokens.size() && tokens[i + 1].text == "_" && tokens[i + 2].text == "{") {
        in_floor_braces = true;
      }
    } else if (t.kind == Token::Kind::number && in_floor_braces) {
      idx = std::stoul(t.text);
    } else if (t.kind == Token::Kind::symbol && t.text == "}") {
      in_floor_braces = false;
    }
    if (idx && (!best || *idx > *best)) best = idx;
  }
  return best;
}

IdealExpr parse_expression(std::string_view text, std::optional<std::size_t> dim) {
  auto tokens = tokenize(text);
  if (!dim) {
    dim = infer_dimension(text);
    if (!dim) throw ParseError(0, "cannot infer the dimension; no variable is mentioned");
  }
  if (*dim == 0) throw ParseError(0, "dimension must be positive");
  return Parser(std::move(tokens), *dim).parse_all();
}

MonomialIdeal parse_ideal(std::string_view text, std::optional<std::size_t> dim) {
  return parse_expression(text, dim).evaluate();
}

ExponentVector parse_monomial(std::string_view text, std::size_t dim) {
  const MonomialIdeal ideal = parse_ideal(text, dim);
  if (ideal.has_floors() || ideal.generators().size() != 1) {
    throw ParseError(0, "expected a single monomial");
  }
  return ideal.generators().front();
}

std::string variable_name(std::size_t index, std::size_t dim) {
  if (dim <= 3) return std::string(1, static_cast<char>('x' + index));
  return "x" + std::to_string(index + 1);
}

std::string format_monomial(const ExponentVector& u) {
  std::string out;
  for (std::size_t j = 0; j < u.dim(); ++j) {
    if (u[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(j, u.dim());
    if (u[j] != 1) out += "^" + u[j].str();
  }
  return out.empty() ? "1" : out;
}

std::string format_generators(const MonomialIdeal& ideal) {
  if (ideal.generators().empty()) return "0";
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += format_monomial(g);
  }
  return out;
}

std::string format_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out;
  if (!ideal.generators().empty()) out = "(" + format_generators(ideal) + ")";
  for (const auto& f : ideal.floors()) {
    if (!out.empty()) out += " + ";
    out += "m";
    if (f.vars.size() != ideal.dim()) {
      out += "_{";
      for (std::size_t i = 0; i < f.vars.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(f.vars[i] + 1);
      }
      out += "}";
    }
    if (f.degree != 1) out += "^" + f.degree.str();
  }
  return out;
}

}  // namespace monoclosure
