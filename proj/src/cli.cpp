#include "cremona/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <thread>

#include "cremona/errors.hpp"
#include "cremona/family_text.hpp"
#include "cremona/heisenberg.hpp"
#include "cremona/parser.hpp"

namespace cremona::cli {

namespace {

// Unquoted map expressions such as `(y, y^2 + x)` arrive split at blanks;
// glue words back together until the brackets balance.
std::vector<std::string> join_brackets(const std::vector<std::string>& words) {
  std::vector<std::string> out;
  int depth = 0;
  for (const auto& w : words) {
    if (depth > 0)
      out.back() += " " + w;
    else
      out.push_back(w);
    for (char c : w) {
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') depth = std::max(0, depth - 1);
    }
  }
  return out;
}

constexpr char kShield = '\x1f';

struct Result {
  Outcome outcome;
  std::optional<std::string> help;  // --help output instead of a document
  CliConfig config;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::regex& name_pattern() {
  static const std::regex re("[A-Za-z_][A-Za-z0-9_]*");
  return re;
}

BirMap resolve_map(const std::string& text, const MapTable& names) {
  if (std::regex_match(text, name_pattern())) {
    const auto it = names.find(text);
    if (it == names.end()) throw ParseError("unknown map name '" + text + "'", 1, 1, {"(", "["});
    return it->second;
  }
  return io::parse_map(text);
}

Outcome failure(int code, const std::string& category, const std::string& message) {
  return {code, io::error_doc(category, message)};
}

// Exception to exit code and error document.
Outcome from_current_exception() {
  try {
    throw;
  } catch (const ParseError& e) {
    return {kUsage, io::error_doc("parse", e.detail(), e.line(), e.column(), e.expected())};
  } catch (const SchemaError& e) {
    return failure(kUsage, "schema", e.what());
  } catch (const CLI::ParseError& e) {
    return failure(kUsage, "usage", e.what());
  } catch (const std::ios_base::failure& e) {
    return failure(kUsage, "io", e.what());
  } catch (const InverseUnavailable& e) {
    return failure(kMathFailure, "inverse", e.what());
  } catch (const CapExceeded& e) {
    return failure(kMathFailure, "cap", e.what());
  } catch (const ShapeError& e) {
    return failure(kMathFailure, "shape", e.what());
  } catch (const DomainError& e) {
    return failure(kMathFailure, "domain", e.what());
  } catch (const std::exception& e) {
    return failure(kMathFailure, "domain", e.what());
  }
}

heisenberg::VerifyOptions verify_options(const CliConfig& c) {
  heisenberg::VerifyOptions o;
  o.n_max = c.n_max;
  o.caps = c.caps;
  o.relation_bound = c.relation_bound;
  return o;
}

int verdict_code(bool faithful, bool strict, const std::string& expect) {
  if (strict && !faithful) return kMathFailure;
  if (expect == "faithful" && !faithful) return kMathFailure;
  if (expect == "unfaithful" && faithful) return kMathFailure;
  return kOk;
}

Result execute_impl(const std::vector<std::string>& words, const CliConfig& base, const MapTable& base_names,
                    bool allow_batch) {
  Result res;
  CliConfig& cfg = res.config;
  cfg = base;
  MapTable names = base_names;

  CLI::App app{"Exact computations with plane Cremona maps", "cremona"};
  app.set_config("--config", "", "Read options from a TOML or INI file (keys as the long option names)");
  app.require_subcommand(1);

  std::string format = cfg.format == Format::Json ? "json" : "human";
  std::string maps_file;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--n-max", cfg.n_max, "Iterates for growth (0: 64 for de Jonquieres maps, 16 otherwise)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-degree", cfg.caps.max_degree, "Degree cap for iterates")->check(CLI::PositiveNumber);
  app.add_option("--max-terms", cfg.caps.max_terms, "Term cap for iterates")
      ->envname("CREMONA_MAX_TERMS")
      ->check(CLI::PositiveNumber);
  app.add_option("--bound", cfg.relation_bound, "Search bound for finite-order tests")->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs, "Batch worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--maps", maps_file, "File of `name = map` lines; names can replace map arguments");

  auto positional = [](CLI::App* s, const char* name, std::vector<std::string>& into, const char* desc) {
    return s->add_option(name, into, desc);
  };
  auto sub = [&app](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  std::vector<std::string> args;
  std::string expect;
  bool strict = false;
  bool with_verify = false;
  int n = 0;
  std::string path = "auto";
  std::string mu, lambda2;
  int max_deg = 0;
  std::string batch_file;

  CLI::App* c_compose = sub("compose", "Composition A o B (o C ...), applied right to left");
  positional(c_compose, "maps", args, "Maps")->required()->expected(2, -1);
  CLI::App* c_invert = sub("invert", "Inverse map");
  positional(c_invert, "map", args, "Map")->required()->expected(1);
  CLI::App* c_comm = sub("commutator", "[A, B] = A o B o A^-1 o B^-1");
  positional(c_comm, "maps", args, "Maps")->required()->expected(2);
  CLI::App* c_degseq = sub("degseq", "Degrees of the first iterates");
  positional(c_degseq, "map", args, "Map")->required()->expected(1);
  c_degseq->add_option("--n", n, "Number of iterates")->check(CLI::PositiveNumber);
  c_degseq->add_option("--path", path, "Iteration path")->check(CLI::IsMember({"auto", "jonquieres", "projective"}));
  CLI::App* c_classify = sub("classify", "Growth class of the iterate degrees");
  positional(c_classify, "map", args, "Map")->required()->expected(1);
  c_classify->add_option("--n", n, "Number of iterates")->check(CLI::PositiveNumber);
  CLI::App* c_verify = sub("verify", "Check the Heisenberg relations for (A, B)");
  positional(c_verify, "maps", args, "Maps")->required()->expected(2);
  c_verify->add_flag("--strict", strict, "Exit 1 unless the embedding is faithful");
  c_verify->add_option("--expect", expect, "Exit 1 unless the verdict matches")
      ->check(CLI::IsMember({"faithful", "unfaithful"}));
  CLI::App* c_family = sub("family", "Build a family instance: family <variant> key=value ...");
  positional(c_family, "words", args, "Variant and key=value pairs")->required()->expected(1, -1);
  c_family->add_flag("--verify", with_verify, "Also verify the embedding");
  c_family->add_flag("--strict", strict, "Exit 1 unless the embedding is faithful (implies --verify)");
  c_family->add_option("--expect", expect, "Exit 1 unless the verdict matches (implies --verify)")
      ->check(CLI::IsMember({"faithful", "unfaithful"}));
  CLI::App* c_claim = sub("claim-solve", "Polynomials P with P(mu(x)) = lambda2 * P(x)");
  c_claim->add_option("--mu", mu, "Affine map mu(x)")->required();
  c_claim->add_option("--lambda2", lambda2, "Multiplier lambda^2")->required();
  c_claim->add_option("--max-deg", max_deg, "Degree bound")->required()->check(CLI::PositiveNumber);
  CLI::App* c_batch = sub("batch", "Run the lines of a file");
  c_batch->add_option("file", batch_file, "Batch file")->required();

  try {
    // CLI11 splits a "[a,b]" word into a list; bracketed projective triples
    // are shielded with a marker byte and restored after parsing.
    std::vector<std::string> reversed;
    for (auto it = words.rbegin(); it != words.rend(); ++it)
      reversed.push_back(!it->empty() && it->front() == '[' ? kShield + *it : *it);
    app.parse(reversed);
    for (auto& a : args)
      if (a.rfind(kShield, 0) == 0) a.erase(0, 1);
  } catch (const CLI::CallForHelp&) {
    res.help = app.help();
    return res;
  } catch (const CLI::CallForAllHelp&) {
    res.help = app.help("", CLI::AppFormatMode::All);
    return res;
  } catch (...) {
    res.outcome = from_current_exception();
    return res;
  }
  cfg.format = format == "json" ? Format::Json : Format::Human;

  try {
    cfg.validate();
    if (!maps_file.empty())
      for (auto& nm : io::parse_maps_file(read_file(maps_file))) names.insert_or_assign(nm.name, std::move(nm.map));

    std::vector<BirMap> maps;
    auto load = [&] {
      for (const auto& a : args) maps.push_back(resolve_map(a, names));
    };
    Outcome& out = res.outcome;

    if (c_compose->parsed()) {
      load();
      BirMap acc = maps.back();
      for (auto it = maps.rbegin() + 1; it != maps.rend(); ++it) acc = compose(*it, acc);
      out.doc = io::map_doc("compose", args, acc);
    } else if (c_invert->parsed()) {
      load();
      out.doc = io::map_doc("invert", args, inverse(maps[0]));
    } else if (c_comm->parsed()) {
      load();
      out.doc = io::map_doc("commutator", args, commutator(maps[0], maps[1]));
    } else if (c_degseq->parsed()) {
      load();
      const int count = n > 0 ? n : (cfg.n_max > 0 ? cfg.n_max : dynamics::default_n_max(maps[0]));
      const auto p = path == "jonquieres"   ? dynamics::IterationPath::Jonquieres
                     : path == "projective" ? dynamics::IterationPath::Projective
                                            : dynamics::IterationPath::Automatic;
      out.doc = io::degseq_doc(args[0], count, dynamics::degree_sequence(maps[0], count, cfg.caps, p));
    } else if (c_classify->parsed()) {
      load();
      const int count = n > 0 ? n : (cfg.n_max > 0 ? cfg.n_max : dynamics::default_n_max(maps[0]));
      const auto seq = dynamics::degree_sequence(maps[0], count, cfg.caps);
      out.doc = io::growth_doc(args[0], count, seq, dynamics::growth_from_sequence(seq));
    } else if (c_verify->parsed()) {
      load();
      const auto r = heisenberg::verify_embedding(maps[0], maps[1], verify_options(cfg));
      out.doc = io::embedding_doc(r, args[0], args[1]);
      out.exit_code = verdict_code(r.faithful, strict, expect);
    } else if (c_family->parsed()) {
      const auto spec = io::parse_family_words(args);
      const auto [f, g] = heisenberg::build_family(spec);
      std::optional<GaussRational> kappa;
      try {
        kappa = heisenberg::commutator_constant(spec);
      } catch (const ShapeError&) {
      } catch (const DomainError&) {
      }
      std::optional<io::ReportDoc> emb;
      const std::string f_text = io::render_map(f), g_text = io::render_map(g);
      if (with_verify || strict || !expect.empty()) {
        const auto r = heisenberg::verify_family(spec, verify_options(cfg));
        emb = io::embedding_doc(r, f_text, g_text, io::render_family(spec));
        out.exit_code = verdict_code(r.faithful, strict, expect);
      }
      out.doc = io::family_doc(spec, f_text, g_text, heisenberg::check_family_constraints(spec), kappa, emb);
    } else if (c_claim->parsed()) {
      const auto s = heisenberg::claim_solve(io::parse_mobius(mu), io::parse_scalar(lambda2), max_deg);
      out.doc = io::claim_doc(mu, lambda2, max_deg, s);
    } else if (c_batch->parsed()) {
      if (!allow_batch) throw CLI::ValidationError("batch", "batch files cannot run other batch files");
      out = run_batch(read_file(batch_file), batch_file, cfg, names);
    }
  } catch (...) {
    res.outcome = from_current_exception();
  }
  return res;
}

struct BatchLine {
  int line = 0;
  std::string command;
  std::vector<std::string> words;
  std::shared_ptr<const MapTable> names;
  std::optional<Outcome> early;  // parse failure of the line itself
};

std::string strip_comment(const std::string& line) {
  char quote = 0;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quote) {
      if (c == quote) quote = 0;
    } else if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '#') {
      return line.substr(0, k);
    }
  }
  return line;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

void CliConfig::validate() const {
  if (n_max < 0) throw DomainError("n_max must not be negative");
  if (caps.max_degree < 1) throw DomainError("max_degree must be positive");
  if (caps.max_terms < 1) throw DomainError("max_terms must be positive");
  if (relation_bound < 1) throw DomainError("relation bound must be positive");
  if (jobs < 0) throw DomainError("jobs must not be negative");
}

Outcome execute(const std::vector<std::string>& words, const CliConfig& base, const MapTable& names) {
  Result r = execute_impl(words, base, names, true);
  if (r.help) return {kOk, io::error_doc("usage", *r.help)};
  return r.outcome;
}

Outcome run_batch(const std::string& content, const std::string& label, const CliConfig& config,
                  const MapTable& names) {
  static const std::regex binding(R"(\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*\S)\s*)");
  std::vector<BatchLine> lines;
  auto table = std::make_shared<const MapTable>(names);
  std::istringstream in(content);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string text = trim(strip_comment(raw));
    if (text.empty()) continue;
    std::smatch m;
    if (std::regex_match(text, m, binding)) {
      try {
        auto next = std::make_shared<MapTable>(*table);
        next->insert_or_assign(m[1].str(), io::parse_map(m[2].str()));
        table = std::move(next);
      } catch (...) {
        lines.push_back({number, text, {}, table, from_current_exception()});
      }
      continue;
    }
    BatchLine bl{number, text, {}, table, std::nullopt};
    try {
      bl.words = join_brackets(io::split_words(text));
    } catch (...) {
      bl.early = from_current_exception();
    }
    lines.push_back(std::move(bl));
  }

  std::vector<io::BatchItem> items(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < lines.size(); k = next++) {
      const BatchLine& bl = lines[k];
      Outcome o = bl.early ? *bl.early : execute_impl(bl.words, config, *bl.names, false).outcome;
      items[k] = {bl.line, bl.command, o.exit_code, std::move(o.doc)};
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t width =
      std::min<std::size_t>(config.jobs > 0 ? static_cast<std::size_t>(config.jobs) : hw, lines.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < width; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kOk;
  for (const auto& it : items) {
    if (it.exit_code == kUsage) code = kUsage;
    else if (it.exit_code == kMathFailure && code == kOk) code = kMathFailure;
  }
  return {code, io::batch_doc(label, items)};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Result r = execute_impl(args, CliConfig{}, MapTable{}, true);
  if (r.help) {
    out << *r.help;
    return kOk;
  }
  const Outcome& o = r.outcome;
  if (r.config.format == Format::Json) {
    out << io::report_to_json(o.doc) << "\n";
  } else if (o.doc.kind() == "error") {
    err << io::render_human(o.doc);
  } else {
    out << io::render_human(o.doc);
  }
  return o.exit_code;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace cremona::cli
