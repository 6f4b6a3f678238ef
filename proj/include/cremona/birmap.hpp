#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cremona/jonqmap.hpp"
#include "cremona/projmap.hpp"

namespace cremona {

/// A plane birational map in either representation. Operations stay in
/// de Jonquieres form whenever both operands allow it.
using BirMap = std::variant<JonqMap, ProjMap>;

ProjMap to_proj(const BirMap& f);
bool is_jonq(const BirMap& f);
int degree(const BirMap& f);
std::string to_string(const BirMap& f);

/// f o g. Falls back to the projective representation when the two maps
/// cannot be written over a common base axis.
BirMap compose(const BirMap& f, const BirMap& g);
/// Inverse for JonqMap, for linear ProjMap and for a ProjMap whose affine
/// form has de Jonquieres shape; InverseUnavailable otherwise.
BirMap inverse(const BirMap& f);
/// f^n for any integer n; negative powers need an inverse.
BirMap power(const BirMap& f, long n);
/// Projective equality of the underlying maps.
bool map_equal(const BirMap& f, const BirMap& g);
bool is_identity(const BirMap& f);

/// [f, g] = f o g o f^-1 o g^-1
BirMap commutator(const BirMap& f, const BirMap& g);

/// A word such as "f g f^-1 g^-1" or "f^2*g^-2".
struct MapWord {
  std::vector<std::pair<std::string, long>> letters;

  /// Symbols are identifiers, separated by blanks or '*'; exponents are
  /// optional signed integers after '^'. Throws ParseError.
  static MapWord parse(const std::string& text);
  /// f^k g^k f^-k g^-k
  static MapWord commutator_power(const std::string& f, const std::string& g, long k);
  std::string to_string() const;
};

/// A bound generator. For a ProjMap of degree > 1 the inverse must be
/// supplied explicitly to evaluate negative exponents.
struct Binding {
  BirMap map;
  std::optional<BirMap> inverse;

  Binding(BirMap m) : map(std::move(m)) {}  // NOLINT
  Binding(BirMap m, BirMap inv) : map(std::move(m)), inverse(std::move(inv)) {}
};
using Bindings = std::map<std::string, Binding>;

/// Left-to-right composition of the bound maps: "f g" evaluates to f o g.
/// Throws DomainError for an unbound symbol and InverseUnavailable when a
/// negative exponent has no inverse.
BirMap word_eval(const MapWord& w, const Bindings& bindings);

/// The same bindings in projective form, with inverses carried over from
/// the de Jonquieres originals.
Bindings projective_bindings(const Bindings& bindings);

}  // namespace cremona
