#pragma once

#include <string>
#include <vector>

#include "cremona/birmap.hpp"

namespace cremona::io {

/// Syntax tree of one expression in x, y (and z inside bracketed triples).
struct MapExpr {
  enum class Kind { Number, Variable, Add, Sub, Mul, Div, Neg, Pow };

  Kind kind = Kind::Number;
  GaussRational value;  // Number
  int var = 0;          // Variable: 0 = x, 1 = y, 2 = z
  long exponent = 0;    // Pow
  std::vector<MapExpr> args;
  int line = 1;
  int column = 1;
};

/// Grammar:
///   map     := "(" expr "," expr ")" | "[" expr ":" expr ":" expr "]"
///   expr    := term (("+" | "-") term)*
///   term    := unary (("*" | "/") unary)*
///   unary   := "-" unary | "+" unary | power
///   power   := atom ("^" ["-" | "+"] integer)?
///   atom    := integer ["i"] | "i" | "x" | "y" | "z" | "(" expr ")"
/// so "^" binds tighter than unary minus and multiplication is explicit.
/// Both '-' and U+2212 are accepted as minus. Errors are ParseError with
/// line, column and the expected tokens.
MapExpr parse_expr(const std::string& text);

/// Parses a map: affine pairs become JonqMap when they have de Jonquieres
/// shape and ProjMap otherwise; bracketed triples become ProjMap.
BirMap parse_map(const std::string& text);

/// Rational function of one variable (x or y; whichever occurs).
RatFunc parse_ratfunc(const std::string& text);
/// Polynomial of one variable (x or y; whichever occurs).
UniPoly parse_unipoly(const std::string& text);
/// Constant expression such as "3/2", "1 + 2*i", "-i".
GaussRational parse_scalar(const std::string& text);
/// Affine Mobius map of x such as "3 + 2*x" or a fraction "(x + 1)/(x - 1)".
Mobius parse_mobius(const std::string& text);

/// Canonical text, re-parseable: "(x, 2*x*y)", "[x*z : x*y : z^2]".
std::string render_map(const BirMap& f);

struct NamedMap {
  std::string name;
  std::string text;
  BirMap map;
  int line = 0;
};

/// `.maps` content: one `name = <map>` per line, '#' starts a comment.
std::vector<NamedMap> parse_maps_file(const std::string& content);

/// Splits a line into words; single or double quotes group words with blanks.
std::vector<std::string> split_words(const std::string& line);

}  // namespace cremona::io
