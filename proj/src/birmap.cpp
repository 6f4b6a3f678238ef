#include "cremona/birmap.hpp"

#include <cctype>
#include <sstream>

#include "cremona/errors.hpp"

namespace cremona {

ProjMap to_proj(const BirMap& f) {
  if (const auto* j = std::get_if<JonqMap>(&f)) return to_proj(*j);
  return std::get<ProjMap>(f);
}

bool is_jonq(const BirMap& f) { return std::holds_alternative<JonqMap>(f); }

int degree(const BirMap& f) {
  if (const auto* j = std::get_if<JonqMap>(&f)) return degree(*j);
  return std::get<ProjMap>(f).degree();
}

std::string to_string(const BirMap& f) {
  return std::visit([](const auto& m) { return m.to_string(); }, f);
}

BirMap compose(const BirMap& f, const BirMap& g) {
  const auto* fj = std::get_if<JonqMap>(&f);
  const auto* gj = std::get_if<JonqMap>(&g);
  if (fj && gj) {
    if (fj->base() == gj->base()) return compose(*fj, *gj);
    if (auto r = rebase(*fj, gj->base())) return compose(*r, *gj);
    if (auto r = rebase(*gj, fj->base())) return compose(*fj, *r);
  }
  return compose(to_proj(f), to_proj(g));
}

BirMap inverse(const BirMap& f) {
  if (const auto* j = std::get_if<JonqMap>(&f)) return inverse(*j);
  const ProjMap& p = std::get<ProjMap>(f);
  if (p.degree() == 1) return invert_linear(p);
  // A triple of de Jonquieres shape is inverted in normal form.
  const BiRatFunc den(p[2].dehomogenize());
  if (auto j = jonq_from_affine(BiRatFunc(p[0].dehomogenize()) / den, BiRatFunc(p[1].dehomogenize()) / den))
    return to_proj(inverse(*j));
  throw InverseUnavailable("inverse is only available for linear and de Jonquieres maps");
}

BirMap power(const BirMap& f, long n) {
  const BirMap base = n < 0 ? inverse(f) : f;
  BirMap acc = is_jonq(f) ? BirMap(JonqMap::identity(std::get<JonqMap>(f).base())) : BirMap(ProjMap::identity());
  for (long k = 0; k < (n < 0 ? -n : n); ++k) acc = compose(base, acc);
  return acc;
}

bool map_equal(const BirMap& f, const BirMap& g) {
  const auto* fj = std::get_if<JonqMap>(&f);
  const auto* gj = std::get_if<JonqMap>(&g);
  if (fj && gj && fj->base() == gj->base()) return *fj == *gj;
  return proj_equal(to_proj(f), to_proj(g));
}

bool is_identity(const BirMap& f) {
  if (const auto* j = std::get_if<JonqMap>(&f)) return j->is_identity();
  return is_identity(std::get<ProjMap>(f));
}

BirMap commutator(const BirMap& f, const BirMap& g) {
  return compose(compose(f, g), compose(inverse(f), inverse(g)));
}

MapWord MapWord::parse(const std::string& text) {
  MapWord w;
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg, std::vector<std::string> expected) {
    throw ParseError(msg, 1, static_cast<int>(pos) + 1, std::move(expected));
  };
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*')) ++pos;
  };
  skip();
  while (pos < text.size()) {
    const std::size_t start = pos;
    if (!(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) fail("bad word", {"symbol"});
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    std::string name = text.substr(start, pos - start);
    long e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool neg = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) neg = text[pos++] == '-';
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("bad exponent", {"integer"});
      e = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        e = e * 10 + (text[pos++] - '0');
        if (e > 1000000) fail("exponent too large", {});
      }
      if (neg) e = -e;
    }
    w.letters.emplace_back(std::move(name), e);
    skip();
  }
  return w;
}

MapWord MapWord::commutator_power(const std::string& f, const std::string& g, long k) {
  return MapWord{{{f, k}, {g, k}, {f, -k}, {g, -k}}};
}

std::string MapWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ' ';
    os << letters[i].first;
    if (letters[i].second != 1) os << '^' << letters[i].second;
  }
  return os.str();
}

BirMap word_eval(const MapWord& w, const Bindings& bindings) {
  std::optional<BirMap> acc;
  for (const auto& [name, e] : w.letters) {
    auto it = bindings.find(name);
    if (it == bindings.end()) throw DomainError("unbound symbol '" + name + "'");
    if (e == 0) continue;
    const Binding& b = it->second;
    BirMap step = e > 0 ? b.map : (b.inverse ? *b.inverse : inverse(b.map));
    const BirMap piece = power(step, e > 0 ? e : -e);
    acc = acc ? compose(*acc, piece) : piece;
  }
  if (!acc) return JonqMap::identity();
  return *acc;
}

Bindings projective_bindings(const Bindings& bindings) {
  Bindings out;
  for (const auto& [name, b] : bindings) {
    std::optional<BirMap> inv = b.inverse;
    if (!inv && is_jonq(b.map)) inv = inverse(b.map);
    if (inv)
      out.emplace(name, Binding(to_proj(b.map), to_proj(*inv)));
    else
      out.emplace(name, Binding(to_proj(b.map)));
  }
  return out;
}

}  // namespace cremona
