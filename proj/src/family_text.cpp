#include "cremona/family_text.hpp"

#include <algorithm>
#include <map>
#include <type_traits>

#include "cremona/errors.hpp"
#include "cremona/parser.hpp"

namespace cremona::io {

namespace {

using heisenberg::FamilySpec;

const std::map<std::string, std::vector<std::string>>& key_table() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"pgl3", {"alpha", "beta", "gamma", "delta"}},
      {"elem-a", {"a", "alpha", "c", "gamma", "P", "Q"}},
      {"elem-b", {"a", "alpha", "b", "beta", "gamma", "P", "Q"}},
      {"torus1", {"delta", "gamma", "s", "a"}},
      {"torus2", {"delta", "gamma", "s", "a"}},
      {"order2", {"delta", "gamma", "s", "b"}},
      {"torus-gen", {"lambda", "delta", "c", "d"}},
  };
  return table;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

class Values {
 public:
  Values(std::string variant, std::map<std::string, std::string> kv) : variant_(std::move(variant)), kv_(std::move(kv)) {}

  GaussRational scalar(const std::string& k) const { return wrap(k, [&] { return parse_scalar(kv_.at(k)); }); }
  UniPoly poly(const std::string& k) const { return wrap(k, [&] { return parse_unipoly(kv_.at(k)); }); }
  RatFunc ratfunc(const std::string& k) const { return wrap(k, [&] { return parse_ratfunc(kv_.at(k)); }); }
  int sign(const std::string& k) const {
    const GaussRational v = scalar(k);
    if (v.is_one()) return 1;
    if (v == GaussRational(-1)) return -1;
    throw ParseError("family " + variant_ + ": key '" + k + "' must be +1 or -1", 1, 1);
  }

 private:
  template <class F>
  std::invoke_result_t<F> wrap(const std::string& k, F f) const {
    try {
      return f();
    } catch (const ParseError& e) {
      throw ParseError("family " + variant_ + ": bad value for key '" + k + "': " + e.detail(), 1, 1, e.expected());
    }
  }

  std::string variant_;
  std::map<std::string, std::string> kv_;
};

FamilySpec build(const std::string& variant, const Values& v) {
  using namespace heisenberg;
  if (variant == "pgl3") return PGL3{v.scalar("alpha"), v.scalar("beta"), v.scalar("gamma"), v.scalar("delta")};
  if (variant == "elem-a")
    return ElemA{v.scalar("a"), v.scalar("alpha"), v.scalar("c"), v.scalar("gamma"), v.poly("P"), v.poly("Q")};
  if (variant == "elem-b")
    return ElemB{v.scalar("a"), v.scalar("alpha"), v.scalar("b"), v.scalar("beta"), v.scalar("gamma"),
                 v.poly("P"),   v.poly("Q")};
  if (variant == "torus1") return TorusPM1{v.scalar("delta"), v.scalar("gamma"), v.sign("s"), v.ratfunc("a")};
  if (variant == "torus2") return TorusPM2{v.scalar("delta"), v.scalar("gamma"), v.sign("s"), v.ratfunc("a")};
  if (variant == "order2") return Order2{v.scalar("delta"), v.scalar("gamma"), v.sign("s"), v.ratfunc("b")};
  return TorusGen{v.scalar("lambda"), v.scalar("delta"), v.ratfunc("c"), v.ratfunc("d")};
}

std::string quoted(const std::string& s) { return s.find(' ') == std::string::npos ? s : "\"" + s + "\""; }

}  // namespace

const std::vector<std::string>& family_variants() {
  static const std::vector<std::string> names = {"pgl3", "elem-a", "elem-b", "torus1", "torus2", "order2", "torus-gen"};
  return names;
}

const std::vector<std::string>& family_keys(const std::string& variant) {
  const auto& table = key_table();
  auto it = table.find(variant);
  if (it == table.end())
    throw ParseError("unknown family variant '" + variant + "'", 1, 1, family_variants());
  return it->second;
}

FamilySpec parse_family_words(const std::vector<std::string>& words_in) {
  std::vector<std::string> words = words_in;
  if (!words.empty() && words.front() == "family") words.erase(words.begin());
  if (words.empty()) throw ParseError("missing family variant", 1, 1, family_variants());
  const std::string variant = words.front();
  const auto& keys = family_keys(variant);

  std::map<std::string, std::string> kv;
  for (std::size_t i = 1; i < words.size(); ++i) {
    const auto eq = words[i].find('=');
    if (eq == std::string::npos || eq == 0)
      throw ParseError("expected key=value, got '" + words[i] + "'", 1, 1, keys);
    const std::string key = words[i].substr(0, eq);
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ParseError("unknown key '" + key + "' for family " + variant + " (keys: " + join(keys) + ")", 1, 1, keys);
    if (!kv.emplace(key, words[i].substr(eq + 1)).second)
      throw ParseError("repeated key '" + key + "' for family " + variant, 1, 1);
  }
  for (const auto& k : keys)
    if (!kv.count(k)) throw ParseError("missing key '" + k + "' for family " + variant, 1, 1, {k});
  return build(variant, Values(variant, std::move(kv)));
}

FamilySpec parse_family(const std::string& text) { return parse_family_words(split_words(text)); }

std::string render_family(const FamilySpec& spec) {
  using namespace heisenberg;
  const std::string variant = variant_name(spec);
  std::vector<std::pair<std::string, std::string>> kv = std::visit(
      [](const auto& s) -> std::vector<std::pair<std::string, std::string>> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PGL3>) {
          return {{"alpha", s.alpha.to_string()},
                  {"beta", s.beta.to_string()},
                  {"gamma", s.gamma.to_string()},
                  {"delta", s.delta.to_string()}};
        } else if constexpr (std::is_same_v<T, ElemA>) {
          return {{"a", s.a.to_string()},     {"alpha", s.alpha.to_string()}, {"c", s.c.to_string()},
                  {"gamma", s.gamma.to_string()}, {"P", s.P.to_string('y')},     {"Q", s.Q.to_string('y')}};
        } else if constexpr (std::is_same_v<T, ElemB>) {
          return {{"a", s.a.to_string()},         {"alpha", s.alpha.to_string()}, {"b", s.b.to_string()},
                  {"beta", s.beta.to_string()},   {"gamma", s.gamma.to_string()}, {"P", s.P.to_string('y')},
                  {"Q", s.Q.to_string('y')}};
        } else if constexpr (std::is_same_v<T, TorusPM1> || std::is_same_v<T, TorusPM2>) {
          return {{"delta", s.delta.to_string()},
                  {"gamma", s.gamma.to_string()},
                  {"s", s.s > 0 ? "+1" : "-1"},
                  {"a", s.a.to_string()}};
        } else if constexpr (std::is_same_v<T, Order2>) {
          return {{"delta", s.delta.to_string()},
                  {"gamma", s.gamma.to_string()},
                  {"s", s.s > 0 ? "+1" : "-1"},
                  {"b", s.b.to_string()}};
        } else {
          return {{"lambda", s.lambda.to_string()},
                  {"delta", s.delta.to_string()},
                  {"c", s.c.to_string()},
                  {"d", s.d.to_string()}};
        }
      },
      spec);
  std::string out = "family " + variant;
  for (const auto& [k, v] : kv) out += " " + k + "=" + quoted(v);
  return out;
}

}  // namespace cremona::io
