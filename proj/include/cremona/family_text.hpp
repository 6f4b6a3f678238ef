#pragma once

#include <string>
#include <vector>

#include "cremona/heisenberg.hpp"

namespace cremona::io {

/// `family <variant> key=value ...`, e.g. `family torus1 delta=1 gamma=2 s=+1 a=x`.
/// Variants and keys:
///   pgl3       alpha beta gamma delta
///   elem-a     a alpha c gamma P Q
///   elem-b     a alpha b beta gamma P Q
///   torus1     delta gamma s a
///   torus2     delta gamma s a
///   order2     delta gamma s b
///   torus-gen  lambda delta c d
/// Values with blanks are quoted. Unknown, repeated or missing keys are
/// ParseErrors naming the key. Parameter domains are checked later by
/// build_family.
heisenberg::FamilySpec parse_family(const std::string& text);
/// The same, from words already split (the leading "family" is optional).
heisenberg::FamilySpec parse_family_words(const std::vector<std::string>& words);

/// Canonical family text; parse_family(render_family(s)) reproduces s.
std::string render_family(const heisenberg::FamilySpec& spec);

/// Variant names in declaration order.
const std::vector<std::string>& family_variants();
/// Keys of a variant in canonical order; ParseError for an unknown variant.
const std::vector<std::string>& family_keys(const std::string& variant);

}  // namespace cremona::io
