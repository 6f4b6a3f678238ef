#include "cremona/parser.hpp"

#include <cctype>
#include <optional>

#include "cremona/errors.hpp"

namespace cremona::io {

namespace {

enum class Tok { Int, Imag, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Comma, Colon, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

constexpr long kMaxExponent = 100000;

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t{Tok::End, "", line_, col_};
      if (pos_ >= s_.size()) {
        out.push_back(t);
        return out;
      }
      const unsigned char c = static_cast<unsigned char>(s_[pos_]);
      if (std::isdigit(c)) {
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) t.text += s_[advance()];
        t.kind = Tok::Int;
        if (pos_ < s_.size() && s_[pos_] == 'i' && !ident_char(pos_ + 1)) {
          advance();
          t.kind = Tok::Imag;
        }
      } else if (std::isalpha(c) || c == '_') {
        while (pos_ < s_.size() && ident_char(pos_)) t.text += s_[advance()];
        if (t.text == "i") {
          t.kind = Tok::Imag;
          t.text = "1";
        } else if (t.text == "x" || t.text == "y" || t.text == "z") {
          t.kind = Tok::Var;
        } else {
          throw ParseError("unknown identifier '" + t.text + "' (multiplication must be written with '*')", t.line,
                           t.column, {"x", "y", "i", "number"});
        }
      } else if (s_.compare(pos_, 3, "\xE2\x88\x92") == 0) {
        pos_ += 3;
        ++col_;
        t.kind = Tok::Minus;
        t.text = "-";
      } else {
        static const std::string ops = "+-*/^()[],:";
        static const Tok kinds[] = {Tok::Plus,   Tok::Minus,  Tok::Star,     Tok::Slash,    Tok::Caret, Tok::LParen,
                                    Tok::RParen, Tok::LBracket, Tok::RBracket, Tok::Comma, Tok::Colon};
        const auto k = ops.find(static_cast<char>(c));
        if (k == std::string::npos)
          throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", t.line, t.column);
        t.kind = kinds[k];
        t.text = std::string(1, s_[advance()]);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  bool ident_char(std::size_t p) const {
    return p < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p])) || s_[p] == '_');
  }
  std::size_t advance() {
    ++col_;
    return pos_++;
  }
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 0;
      }
      advance();
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(Lexer(text).run()) {}

  MapExpr expression_only() {
    MapExpr e = expr();
    expect(Tok::End, "end of input");
    return e;
  }

  // One or three component expressions, with the bracket kind.
  std::pair<std::vector<MapExpr>, bool> map() {
    std::vector<MapExpr> parts;
    if (peek().kind == Tok::LParen) {
      next();
      parts.push_back(expr());
      expect(Tok::Comma, "','");
      parts.push_back(expr());
      expect(Tok::RParen, "')'");
      expect(Tok::End, "end of input");
      return {std::move(parts), false};
    }
    if (peek().kind == Tok::LBracket) {
      next();
      parts.push_back(expr());
      expect(Tok::Colon, "':'");
      parts.push_back(expr());
      expect(Tok::Colon, "':'");
      parts.push_back(expr());
      expect(Tok::RBracket, "']'");
      expect(Tok::End, "end of input");
      return {std::move(parts), true};
    }
    fail({"'('", "'['"});
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError("unexpected " + describe(t), t.line, t.column, std::move(expected));
  }

  void expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail({what});
    next();
  }

  static MapExpr node(MapExpr::Kind k, const Token& at, std::vector<MapExpr> args) {
    MapExpr e;
    e.kind = k;
    e.args = std::move(args);
    e.line = at.line;
    e.column = at.column;
    return e;
  }

  MapExpr expr() {
    MapExpr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = next();
      MapExpr rhs = term();
      lhs = node(op.kind == Tok::Plus ? MapExpr::Kind::Add : MapExpr::Kind::Sub, op, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  MapExpr term() {
    MapExpr lhs = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = next();
      MapExpr rhs = unary();
      lhs = node(op.kind == Tok::Star ? MapExpr::Kind::Mul : MapExpr::Kind::Div, op, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  MapExpr unary() {
    if (peek().kind == Tok::Minus) {
      const Token& op = next();
      return node(MapExpr::Kind::Neg, op, {unary()});
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    return power();
  }

  MapExpr power() {
    MapExpr base = atom();
    if (peek().kind != Tok::Caret) return base;
    const Token& op = next();
    bool neg = false;
    if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) neg = next().kind == Tok::Minus;
    if (peek().kind != Tok::Int) fail({"integer exponent"});
    const Token& n = next();
    if (n.text.size() > 6 || std::stol(n.text) > kMaxExponent)
      throw ParseError("exponent too large", n.line, n.column);
    MapExpr e = node(MapExpr::Kind::Pow, op, {std::move(base)});
    e.exponent = neg ? -std::stol(n.text) : std::stol(n.text);
    return e;
  }

  MapExpr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int:
      case Tok::Imag: {
        next();
        MapExpr e = node(MapExpr::Kind::Number, t, {});
        const GaussRational v(mpq_class(mpz_class(t.text)));
        e.value = t.kind == Tok::Imag ? v * GaussRational::i() : v;
        return e;
      }
      case Tok::Var: {
        next();
        MapExpr e = node(MapExpr::Kind::Variable, t, {});
        e.var = t.text[0] - 'x';
        return e;
      }
      case Tok::LParen: {
        next();
        MapExpr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        fail({"number", "x", "y", "i", "'('", "'-'"});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

[[noreturn]] void fail_at(const MapExpr& e, const std::string& msg) { throw ParseError(msg, e.line, e.column); }

BiRatFunc eval_affine(const MapExpr& e) {
  using K = MapExpr::Kind;
  switch (e.kind) {
    case K::Number:
      return BiRatFunc(e.value);
    case K::Variable:
      if (e.var == 2) fail_at(e, "z is only allowed inside bracketed projective triples");
      return BiRatFunc::var(e.var);
    case K::Add:
      return eval_affine(e.args[0]) + eval_affine(e.args[1]);
    case K::Sub:
      return eval_affine(e.args[0]) - eval_affine(e.args[1]);
    case K::Mul:
      return eval_affine(e.args[0]) * eval_affine(e.args[1]);
    case K::Div: {
      const BiRatFunc d = eval_affine(e.args[1]);
      if (d.is_zero()) fail_at(e, "division by zero");
      return eval_affine(e.args[0]) / d;
    }
    case K::Neg:
      return -eval_affine(e.args[0]);
    case K::Pow: {
      const BiRatFunc b = eval_affine(e.args[0]);
      if (b.is_zero() && e.exponent < 0) fail_at(e, "division by zero");
      return b.pow(static_cast<int>(e.exponent));
    }
  }
  fail_at(e, "bad expression");
}

TriPoly eval_poly(const MapExpr& e) {
  using K = MapExpr::Kind;
  switch (e.kind) {
    case K::Number:
      return TriPoly::constant(e.value);
    case K::Variable:
      return TriPoly::var(e.var);
    case K::Add:
      return eval_poly(e.args[0]) + eval_poly(e.args[1]);
    case K::Sub:
      return eval_poly(e.args[0]) - eval_poly(e.args[1]);
    case K::Mul:
      return eval_poly(e.args[0]) * eval_poly(e.args[1]);
    case K::Div: {
      const TriPoly d = eval_poly(e.args[1]);
      if (!d.is_constant()) fail_at(e, "projective components must be polynomials");
      if (d.is_zero()) fail_at(e, "division by zero");
      return eval_poly(e.args[0]).scaled(d.constant_term().inverse());
    }
    case K::Neg:
      return -eval_poly(e.args[0]);
    case K::Pow:
      if (e.exponent < 0) fail_at(e, "projective components must be polynomials");
      return eval_poly(e.args[0]).pow(static_cast<int>(e.exponent));
  }
  fail_at(e, "bad expression");
}

RatFunc univariate(const std::string& text, const char* what) {
  const MapExpr e = parse_expr(text);
  const BiRatFunc f = eval_affine(e);
  const int v = f.depends_on(0) ? 0 : 1;
  auto r = f.to_ratfunc(v);
  if (!r) throw ParseError(std::string(what) + " must involve a single variable", e.line, e.column);
  return *r;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

MapExpr parse_expr(const std::string& text) { return Parser(text).expression_only(); }

BirMap parse_map(const std::string& text) {
  auto [parts, projective] = Parser(text).map();
  if (projective) {
    std::array<TriPoly, 3> comps{eval_poly(parts[0]), eval_poly(parts[1]), eval_poly(parts[2])};
    try {
      return ProjMap(std::move(comps));
    } catch (const Error& err) {
      throw ParseError(err.what(), parts[0].line, 1);
    }
  }
  const BiRatFunc fx = eval_affine(parts[0]);
  const BiRatFunc fy = eval_affine(parts[1]);
  if (auto j = jonq_from_affine(fx, fy)) return *j;
  return proj_from_affine(fx, fy);
}

RatFunc parse_ratfunc(const std::string& text) { return univariate(text, "rational function"); }

UniPoly parse_unipoly(const std::string& text) {
  const RatFunc r = univariate(text, "polynomial");
  if (!r.is_polynomial()) throw ParseError("expected a polynomial", 1, 1);
  return r.num().scaled(r.den().leading().inverse());
}

GaussRational parse_scalar(const std::string& text) {
  const MapExpr e = parse_expr(text);
  const auto v = eval_affine(e).constant_value();
  if (!v) throw ParseError("expected a constant", e.line, e.column);
  return *v;
}

Mobius parse_mobius(const std::string& text) {
  const RatFunc r = univariate(text, "Mobius map");
  auto m = mobius_from_ratfunc(r);
  if (!m) throw ParseError("not a Mobius map (degree must be 1)", 1, 1);
  return *m;
}

std::string render_map(const BirMap& f) { return to_string(f); }

std::vector<NamedMap> parse_maps_file(const std::string& content) {
  std::vector<NamedMap> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= content.size()) {
    auto end = content.find('\n', start);
    if (end == std::string::npos) end = content.size();
    std::string line = content.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'name = map'", line_no, 1, {"'='"});
    const std::string name = trim(line.substr(0, eq));
    if (!is_identifier(name)) throw ParseError("bad map name '" + name + "'", line_no, 1, {"identifier"});
    const std::string expr = trim(line.substr(eq + 1));
    const int offset = static_cast<int>(line.find(expr, eq + 1));
    try {
      out.push_back({name, expr, parse_map(expr), line_no});
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), line_no, e.column() + offset, e.expected());
    }
    if (end == content.size()) break;
  }
  return out;
}

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool in_word = false;
  char quote = 0;
  for (char c : line) {
    if (quote) {
      if (c == quote)
        quote = 0;
      else
        cur += c;
    } else if (c == '"' || c == '\'') {
      quote = c;
      in_word = true;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (in_word) out.push_back(std::move(cur));
      cur.clear();
      in_word = false;
    } else {
      cur += c;
      in_word = true;
    }
  }
  if (quote) throw ParseError("unterminated quote", 1, static_cast<int>(line.size()) + 1, {std::string(1, quote)});
  if (in_word) out.push_back(std::move(cur));
  return out;
}

}  // namespace cremona::io
