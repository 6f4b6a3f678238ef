#include "cremona/report.hpp"

#include <sstream>

#include "cremona/errors.hpp"
#include "cremona/family_text.hpp"
#include "cremona/parser.hpp"
#include "report_schema.inc"

namespace cremona::io {

namespace {

Json header(const char* kind) {
  Json j;
  j["kind"] = kind;
  j["version"] = kReportVersion;
  return j;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json growth_summary(const dynamics::GrowthReport& r) {
  Json j;
  j["class"] = dynamics::to_string(r.growth);
  j["geometric"] = dynamics::geometric_name(r.growth);
  j["degrees"] = r.degrees;
  j["truncated"] = r.truncated;
  j["dyn_degree_estimate"] = optional_number(r.dyn_degree_estimate);
  j["growth_constant_estimate"] = optional_number(r.growth_constant_estimate);
  j["samples"] = r.samples;
  return j;
}

Json constraints_json(const std::vector<heisenberg::Constraint>& cs) {
  Json arr = Json::array();
  for (const auto& c : cs) {
    Json j;
    j["name"] = c.name;
    j["satisfied"] = c.satisfied;
    j["witness"] = c.witness ? Json(c.witness->to_string()) : Json(nullptr);
    arr.push_back(std::move(j));
  }
  return arr;
}

// ---- validation over the subset of JSON Schema used by the shipped schema

const Json& resolve(const Json& s) {
  if (s.is_object() && s.contains("$ref")) {
    const std::string ref = s["$ref"].get<std::string>();
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) throw Error("unsupported schema reference " + ref);
    return resolve(report_schema()["$defs"][ref.substr(prefix.size())]);
  }
  return s;
}

bool has_type(const Json& v, const std::string& t) {
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "null") return v.is_null();
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  return false;
}

std::string describe(const Json& v) {
  if (v.is_null()) return "null";
  if (v.is_boolean()) return "boolean";
  if (v.is_number_integer()) return "integer";
  if (v.is_number()) return "number";
  if (v.is_string()) return "string";
  if (v.is_array()) return "array";
  return "object";
}

const Json* kind_const(const Json& branch) {
  const Json& b = resolve(branch);
  if (!b.is_object() || !b.contains("properties")) return nullptr;
  const Json& props = b["properties"];
  if (!props.contains("kind") || !props["kind"].contains("const")) return nullptr;
  return &props["kind"]["const"];
}

void check(const Json& schema_in, const Json& v, const std::string& path) {
  const Json& s = resolve(schema_in);

  if (s.contains("oneOf")) {
    const Json& branches = s["oneOf"];
    if (v.is_object() && v.contains("kind") && v["kind"].is_string()) {
      bool discriminated = false;
      for (const auto& b : branches) {
        const Json* k = kind_const(b);
        if (!k) continue;
        discriminated = true;
        if (*k == v["kind"]) {
          check(b, v, path);
          return;
        }
      }
      if (discriminated) throw SchemaError(path + ".kind", "unexpected kind '" + v["kind"].get<std::string>() + "'");
    }
    int ok = 0;
    std::optional<SchemaError> first;
    for (const auto& b : branches) {
      try {
        check(b, v, path);
        ++ok;
      } catch (const SchemaError& e) {
        // Keep the message of a branch whose type fits the value.
        const Json& rb = resolve(b);
        const bool type_fits = !rb.contains("type") || (rb["type"].is_string() && has_type(v, rb["type"]));
        if (!first || type_fits) first = e;
      }
    }
    if (ok == 1) return;
    if (ok > 1) throw SchemaError(path, "value matches several alternatives");
    throw *first;
  }

  if (s.contains("type")) {
    const Json& t = s["type"];
    bool fits = false;
    if (t.is_string()) {
      fits = has_type(v, t.get<std::string>());
    } else {
      for (const auto& e : t) fits = fits || has_type(v, e.get<std::string>());
    }
    if (!fits) throw SchemaError(path, "expected " + t.dump() + ", got " + describe(v));
  }
  if (s.contains("const") && v != s["const"])
    throw SchemaError(path, "expected " + s["const"].dump() + ", got " + v.dump());
  if (s.contains("enum")) {
    bool found = false;
    for (const auto& e : s["enum"]) found = found || e == v;
    if (!found) throw SchemaError(path, "value " + v.dump() + " not in " + s["enum"].dump());
  }

  if (v.is_object()) {
    const Json empty = Json::object();
    const Json& props = s.contains("properties") ? s["properties"] : empty;
    if (s.contains("required"))
      for (const auto& key : s["required"])
        if (!v.contains(key.get<std::string>()))
          throw SchemaError(path + "." + key.get<std::string>(), "missing required field");
    const bool closed = s.contains("additionalProperties") && s["additionalProperties"] == false;
    for (const auto& [key, val] : v.items()) {
      if (props.contains(key))
        check(props[key], val, path + "." + key);
      else if (closed)
        throw SchemaError(path + "." + key, "unknown field");
    }
  }
  if (v.is_array() && s.contains("items")) {
    std::size_t k = 0;
    for (const auto& e : v) {
      check(s["items"], e, path + "[" + std::to_string(k) + "]");
      ++k;
    }
  }
}

// ---- human rendering

std::string yes_no(const Json& b) { return b.get<bool>() ? "yes" : "no"; }

std::string join_ints(const Json& arr) {
  std::string s;
  for (const auto& d : arr) {
    if (!s.empty()) s += ' ';
    s += std::to_string(d.get<long>());
  }
  return s;
}

std::string number_text(const Json& v) {
  if (v.is_null()) return "-";
  std::ostringstream o;
  o.precision(6);
  o << v.get<double>();
  return o.str();
}

void render_growth(std::ostringstream& o, const std::string& label, const Json& g) {
  o << label << g["class"].get<std::string>() << " (" << g["geometric"].get<std::string>() << ")";
  if (!g["dyn_degree_estimate"].is_null())
    o << ", dynamical degree ~ " << number_text(g["dyn_degree_estimate"]) << ", c ~ "
      << number_text(g["growth_constant_estimate"]);
  o << "\n  degrees: " << join_ints(g["degrees"]);
  if (g["truncated"].get<bool>()) o << " (truncated)";
  o << "\n";
}

void render_constraints(std::ostringstream& o, const Json& cs) {
  for (const auto& c : cs) {
    o << "  [" << (c["satisfied"].get<bool>() ? "ok" : "FAILED") << "] " << c["name"].get<std::string>();
    if (!c["witness"].is_null()) o << "  (" << c["witness"].get<std::string>() << ")";
    o << "\n";
  }
}

void render_embedding(std::ostringstream& o, const Json& b, bool with_constraints = true) {
  o << "h = " << b["h"].get<std::string>() << "\n";
  o << "[f,h] = id: " << yes_no(b["relations"]["fh"]) << "\n";
  o << "[g,h] = id: " << yes_no(b["relations"]["gh"]) << "\n";
  o << "h is identity: " << yes_no(b["h_is_identity"]) << "\n";
  const Json& ord = b["h_infinite_order"];
  o << "h infinite order: " << yes_no(ord["value"]) << " (" << ord["method"].get<std::string>();
  if (!ord["detail"].get<std::string>().empty()) o << ": " << ord["detail"].get<std::string>();
  o << ")\n";
  o << "faithful: " << yes_no(b["faithful"]) << "\n";
  for (const char* m : {"f", "g", "h"})
    if (!b["growth"][m].is_null()) render_growth(o, std::string("growth ") + m + ": ", b["growth"][m]);
  if (with_constraints && !b["constraints"].empty()) {
    o << "constraints:\n";
    render_constraints(o, b["constraints"]);
  }
}

void render_body(std::ostringstream& o, const Json& b) {
  const std::string kind = b["kind"].get<std::string>();
  if (kind == "map") {
    o << b["result"].get<std::string>() << "\n";
  } else if (kind == "degseq") {
    o << join_ints(b["degrees"]) << "\n";
    if (b["truncated"].get<bool>()) o << "truncated: " << b["stop_reason"].get<std::string>() << "\n";
  } else if (kind == "growth") {
    const Json& g = b["report"];
    render_growth(o, "", g);
    if (g["truncated"].get<bool>()) o << "truncated: " << b["stop_reason"].get<std::string>() << "\n";
  } else if (kind == "claim") {
    o << "dimension " << b["dimension"].get<int>() << "\n";
    for (const auto& p : b["basis"]) o << "basis: " << p.get<std::string>() << "\n";
  } else if (kind == "embedding") {
    render_embedding(o, b);
  } else if (kind == "family") {
    o << b["input"].get<std::string>() << "\n";
    o << "f = " << b["f"].get<std::string>() << "\n";
    o << "g = " << b["g"].get<std::string>() << "\n";
    if (!b["commutator_constant"].is_null())
      o << "commutator constant: " << b["commutator_constant"].get<std::string>() << "\n";
    o << "constraints:\n";
    render_constraints(o, b["constraints"]);
    if (!b["embedding"].is_null()) render_embedding(o, b["embedding"], false);
  } else if (kind == "batch") {
    for (const auto& item : b["results"]) {
      o << "== line " << item["line"].get<int>() << ": " << item["command"].get<std::string>() << " (exit "
        << item["exit_code"].get<int>() << ")\n";
      render_body(o, item["document"]);
    }
  } else if (kind == "error") {
    o << "error";
    if (!b["line"].is_null()) o << " at " << b["line"].get<int>() << ":" << b["column"].get<int>();
    o << ": " << b["message"].get<std::string>();
    if (!b["expected"].empty()) {
      o << " (expected";
      for (const auto& e : b["expected"]) o << " " << e.get<std::string>();
      o << ")";
    }
    o << "\n";
  }
}

}  // namespace

std::string ReportDoc::kind() const { return body.value("kind", ""); }

ReportDoc embedding_doc(const heisenberg::EmbeddingReport& r, const std::string& f_text, const std::string& g_text,
                        const std::optional<std::string>& family) {
  Json j = header("embedding");
  j["input"] = {{"f", f_text}, {"g", g_text}, {"family", family ? Json(*family) : Json(nullptr)}};
  j["h"] = render_map(r.h);
  j["h_is_identity"] = r.h_is_identity;
  j["relations"] = {{"fh", r.fh_commutes}, {"gh", r.gh_commutes}};
  j["failed_relations"] = r.failed_relations;
  const auto& ord = r.h_infinite_order;
  j["h_infinite_order"] = {{"value", ord.value},
                           {"method", ord.method},
                           {"bound", ord.bound ? Json(*ord.bound) : Json(nullptr)},
                           {"detail", ord.detail}};
  j["faithful"] = r.faithful;
  Json g;
  g["f"] = r.growth_f ? growth_summary(*r.growth_f) : Json(nullptr);
  g["g"] = r.growth_g ? growth_summary(*r.growth_g) : Json(nullptr);
  g["h"] = r.growth_h ? growth_summary(*r.growth_h) : Json(nullptr);
  j["growth"] = std::move(g);
  j["constraints"] = constraints_json(r.constraints);
  return {std::move(j)};
}

ReportDoc growth_doc(const std::string& map_text, int n_max, const dynamics::DegreeSequence& seq,
                     const dynamics::GrowthReport& r) {
  Json j = header("growth");
  j["input"] = {{"map", map_text}, {"n_max", n_max}};
  j["stop_reason"] = seq.stop_reason;
  j["report"] = growth_summary(r);
  return {std::move(j)};
}

ReportDoc degseq_doc(const std::string& map_text, int n_max, const dynamics::DegreeSequence& seq) {
  Json j = header("degseq");
  j["input"] = {{"map", map_text}, {"n_max", n_max}};
  j["degrees"] = seq.degrees;
  j["truncated"] = seq.truncated;
  j["stop_reason"] = seq.stop_reason;
  return {std::move(j)};
}

ReportDoc claim_doc(const std::string& mu_text, const std::string& lambda2_text, int max_deg,
                    const heisenberg::ClaimSolution& s) {
  Json j = header("claim");
  j["input"] = {{"mu", mu_text}, {"lambda2", lambda2_text}, {"max_deg", max_deg}};
  j["dimension"] = s.dimension;
  Json basis = Json::array();
  for (const auto& p : s.basis) basis.push_back(p.to_string());
  j["basis"] = std::move(basis);
  j["max_degree_searched"] = s.max_degree_searched;
  return {std::move(j)};
}

ReportDoc map_doc(const std::string& op, const std::vector<std::string>& args, const BirMap& result) {
  Json j = header("map");
  j["input"] = {{"op", op}, {"args", args}};
  j["result"] = render_map(result);
  j["representation"] = is_jonq(result) ? "jonquieres" : "projective";
  j["degree"] = degree(result);
  return {std::move(j)};
}

ReportDoc family_doc(const heisenberg::FamilySpec& spec, const std::string& f_text, const std::string& g_text,
                     const std::vector<heisenberg::Constraint>& constraints,
                     const std::optional<GaussRational>& kappa, const std::optional<ReportDoc>& embedding) {
  Json j = header("family");
  j["input"] = render_family(spec);
  j["variant"] = heisenberg::variant_name(spec);
  j["f"] = f_text;
  j["g"] = g_text;
  j["constraints"] = constraints_json(constraints);
  j["commutator_constant"] = kappa ? Json(kappa->to_string()) : Json(nullptr);
  j["embedding"] = embedding ? embedding->body : Json(nullptr);
  return {std::move(j)};
}

ReportDoc batch_doc(const std::string& input, const std::vector<BatchItem>& items) {
  Json j = header("batch");
  j["input"] = input;
  Json arr = Json::array();
  for (const auto& it : items) {
    Json e;
    e["line"] = it.line;
    e["command"] = it.command;
    e["exit_code"] = it.exit_code;
    e["document"] = it.document.body;
    arr.push_back(std::move(e));
  }
  j["results"] = std::move(arr);
  return {std::move(j)};
}

ReportDoc error_doc(const std::string& category, const std::string& message, std::optional<int> line,
                    std::optional<int> column, const std::vector<std::string>& expected) {
  Json j = header("error");
  j["category"] = category;
  j["message"] = message;
  j["line"] = line ? Json(*line) : Json(nullptr);
  j["column"] = column ? Json(*column) : Json(nullptr);
  j["expected"] = expected;
  return {std::move(j)};
}

std::string report_to_json(const ReportDoc& doc) { return doc.body.dump(2); }

ReportDoc report_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("$", std::string("malformed JSON: ") + e.what());
  }
  validate_report(j);
  return {std::move(j)};
}

void validate_report(const Json& body) { check(report_schema(), body, "$"); }

const Json& report_schema() {
  static const Json schema = Json::parse(kReportSchemaText);
  return schema;
}

std::string render_human(const ReportDoc& doc) {
  std::ostringstream o;
  render_body(o, doc.body);
  return o.str();
}

}  // namespace cremona::io
