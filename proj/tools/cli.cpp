/*
  orbitnorm command-line front end.

  Subcommands
  -----------
    check    --eps E --partition P      normality verdict for one orbit
    survey   --eps E --size N           verdict for every orbit of size N
    hasse    --eps E --size N           cover graph of the degeneration order
    reduce   --eps E --top P --bottom Q cancel common rows/columns
    classify --eps E --top P --bottom Q family of a minimal degeneration
    dim      --eps E (--partition P | --top P --bottom Q)
                                        orbit dimension / codimension (matrix oracle)
    verify   --eps E --partition P      restriction-to-image check on a matrix model

  Common flags: --format {json|csv|text|dot}, --max-size N, --cache PATH
  (check, survey), --oracle (check, survey, classify). ORBIT_MAX_SIZE
  overrides the default enumeration bound when --max-size is absent.

  Exit codes
  ----------
    0  success / verdict Normal
    10 verdict NotNormal
    11 verdict Undetermined
    2  input error (bad flags, malformed or invalid partitions)
    3  a size bound was exceeded
    1  internal error
*/

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "orbitnorm/errors.hpp"
#include "orbitnorm/serialize.hpp"

namespace orbitnorm::cli {
namespace {

struct Config {
  std::string eps;
  std::optional<std::string> partition;
  std::optional<std::string> top;
  std::optional<std::string> bottom;
  std::optional<int> size;
  std::string format;
  std::string cache;
  std::optional<int> max_size;
  bool oracle = false;
};

FormType parse_eps(const std::string& text) {
  if (text == "+1" || text == "1") return FormType::Orthogonal;
  if (text == "-1") return FormType::Symplectic;
  throw ParseError("--eps must be +1 or -1, got '" + text + "'");
}

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (c.format == f) return;
  }
  throw ParseError("unsupported --format '" + c.format + "' for this command");
}

// --max-size, then ORBIT_MAX_SIZE (enumeration bounds only), then the default.
int resolve_bound(const Config& c, int fallback, bool honour_env) {
  if (c.max_size) return *c.max_size;
  if (honour_env) {
    if (const char* env = std::getenv("ORBIT_MAX_SIZE"); env && *env) {
      try {
        std::size_t used = 0;
        const int value = std::stoi(env, &used);
        if (used == std::string(env).size() && value >= 0) return value;
      } catch (const std::exception&) {
      }
      throw ParseError(std::string("ORBIT_MAX_SIZE is not a non-negative integer: '") +
                       env + "'");
    }
  }
  return fallback;
}

Partition require_partition(const std::optional<std::string>& text, const char* flag) {
  if (!text) throw ParseError(std::string(flag) + " is required");
  return parse_partition(*text);
}

EpsDiagram require_diagram(const std::optional<std::string>& text, const char* flag,
                           FormType eps) {
  Partition p = require_partition(text, flag);
  if (auto why = eps_violation(p, eps)) {
    throw ParseError("[" + p.to_string() + "] is not a valid " + to_string(eps) +
                     "-diagram: " + *why);
  }
  return EpsDiagram(std::move(p), eps);
}

DegenPair require_strict_pair(const Config& c, FormType eps) {
  const EpsDiagram top = require_diagram(c.top, "--top", eps);
  const EpsDiagram bottom = require_diagram(c.bottom, "--bottom", eps);
  if (top.partition.size() != bottom.partition.size()) {
    throw ParseError("--top and --bottom have different sizes");
  }
  if (top.partition == bottom.partition) {
    throw ParseError("--top and --bottom are equal");
  }
  if (!dominates(top.partition, bottom.partition)) {
    throw ParseError("[" + bottom.partition.to_string() + "] is not a degeneration of [" +
                     top.partition.to_string() + "]");
  }
  return DegenPair(eps, bottom.partition, top.partition);
}

int require_size(const Config& c) {
  if (!c.size) throw ParseError("--size is required");
  if (*c.size < 0) throw ParseError("--size must be non-negative");
  return *c.size;
}

std::string bracket(const Partition& p) { return "[" + p.to_string() + "]"; }

std::string bracket(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Normal: return static_cast<int>(ExitCode::kOk);
    case Verdict::NotNormal: return static_cast<int>(ExitCode::kNotNormal);
    case Verdict::Undetermined: return static_cast<int>(ExitCode::kUndetermined);
  }
  return static_cast<int>(ExitCode::kInternal);
}

std::string witness_families(const NormalityVerdict& v) {
  std::set<char> letters;
  for (const auto& w : v.witnesses) letters.insert(family_letter(w.type.family));
  std::string out;
  for (char l : letters) {
    if (!out.empty()) out += ',';
    out += l;
  }
  return out;
}

std::string reduction_text(const ReductionResult& r) {
  return "core " + bracket(r.core.top()) + "/" + bracket(r.core.bottom()) +
         ", eps'=" + to_string(r.core.eps()) + ", r=" + std::to_string(r.rows) +
         ", s=" + std::to_string(r.columns);
}

std::string type_text(const DegenType& t) {
  std::string out = std::string("family ") + family_letter(t.family);
  if (t.n) out += ", n=" + std::to_string(*t.n);
  return out;
}

void write_verdict_text(std::ostream& out, const NormalityVerdict& v) {
  out << "verdict " << to_string(v.verdict) << " for " << bracket(v.eta.partition)
      << " (eps=" << to_string(v.eta.eps) << ")\n";
  for (const auto& w : v.witnesses) {
    out << "  " << bracket(w.sigma) << ": " << reduction_text(w.reduction) << ", "
        << type_text(w.type) << ", codim " << w.codim;
    if (w.oracle_codim && *w.oracle_codim != w.type.codim_table) {
      out << " (table " << w.type.codim_table << ")";
    }
    out << "\n";
  }
}

constexpr const char* kSurveyCsvHeader = "partition;verdict;witness_families\n";

void write_verdict_csv_row(std::ostream& out, const NormalityVerdict& v) {
  out << v.eta.partition.to_string() << ';' << to_string(v.verdict) << ';'
      << witness_families(v) << '\n';
}

// Append-only JSONL file of verdict documents keyed by "<eps>:<partition>".
class VerdictCache {
 public:
  VerdictCache(std::string path, std::ostream& err) : path_(std::move(path)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      const Json entry = Json::parse(line, nullptr, /*allow_exceptions=*/false);
      if (entry.is_discarded() || !entry.is_object() || !entry.contains("key") ||
          !entry["key"].is_string() || !entry.contains("verdict")) {
        err << "warning: ignoring unparseable cache line " << line_no << " in " << path_
            << "\n";
        continue;
      }
      entries_.emplace(entry["key"].get<std::string>(), entry["verdict"]);
    }
  }

  static std::string key(const EpsDiagram& eta, bool oracle) {
    return to_string(eta.eps) + ":" + eta.partition.to_string() + (oracle ? ":oracle" : "");
  }

  std::optional<NormalityVerdict> find(const std::string& key, std::ostream& err) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    try {
      return verdict_from_json(it->second);
    } catch (const std::exception& e) {
      err << "warning: ignoring malformed cache entry for " << key << ": " << e.what() << "\n";
      return std::nullopt;
    }
  }

  void store(const std::string& key, const NormalityVerdict& v) {
    if (path_.empty()) return;
    const Json doc = to_json(v);
    entries_.emplace(key, doc);
    std::ofstream outfile(path_, std::ios::app);
    outfile << Json{{"key", key}, {"verdict", doc}}.dump() << '\n';
    if (!outfile) throw std::runtime_error("cannot write cache file " + path_);
  }

 private:
  std::string path_;
  std::map<std::string, Json> entries_;
};

DecideOptions decide_options(const Config& c) {
  DecideOptions options;
  options.bound = resolve_bound(c, kDefaultEnumerationBound, true);
  options.oracle = c.oracle;
  return options;
}

NormalityVerdict cached_decide(const EpsDiagram& eta, const DecideOptions& options,
                               VerdictCache& cache, std::ostream& err) {
  if (eta.partition.size() > options.bound) {
    throw CapacityError("enumeration", eta.partition.size(), options.bound);
  }
  const std::string key = VerdictCache::key(eta, options.oracle);
  if (auto hit = cache.find(key, err)) return *hit;
  NormalityVerdict v = decide(eta, options);
  cache.store(key, v);
  return v;
}

int run_check(Config c, std::ostream& out, std::ostream& err) {
  if (c.format.empty()) c.format = "text";
  require_format(c, {"text", "json", "csv"});
  const FormType eps = parse_eps(c.eps);
  const EpsDiagram eta = require_diagram(c.partition, "--partition", eps);
  VerdictCache cache(c.cache, err);
  const NormalityVerdict v = cached_decide(eta, decide_options(c), cache, err);
  if (c.format == "json") {
    out << to_json(v).dump() << '\n';
  } else if (c.format == "csv") {
    out << kSurveyCsvHeader;
    write_verdict_csv_row(out, v);
  } else {
    write_verdict_text(out, v);
  }
  return verdict_exit(v.verdict);
}

int run_survey(Config c, std::ostream& out, std::ostream& err) {
  if (c.format.empty()) c.format = "csv";
  require_format(c, {"csv", "json", "text"});
  const FormType eps = parse_eps(c.eps);
  const int n = require_size(c);
  const DecideOptions options = decide_options(c);
  VerdictCache cache(c.cache, err);
  SurveyResult result{eps, n, {}, {}};
  for (const auto& eta : enumerate_eps_diagrams(n, eps, options.bound)) {
    result.verdicts.push_back(cached_decide(eta, options, cache, err));
  }
  result.summary = summarize(result.verdicts);

  if (c.format == "json") {
    out << to_json(result).dump() << '\n';
  } else if (c.format == "csv") {
    out << kSurveyCsvHeader;
    for (const auto& v : result.verdicts) write_verdict_csv_row(out, v);
  } else {
    for (const auto& v : result.verdicts) {
      out << bracket(v.eta.partition) << ' ' << to_string(v.verdict) << ' '
          << witness_families(v) << '\n';
    }
    out << "summary Normal=" << result.summary.normal
        << " NotNormal=" << result.summary.not_normal
        << " Undetermined=" << result.summary.undetermined << '\n';
  }
  return 0;
}

int run_hasse(Config c, std::ostream& out, std::ostream&) {
  if (c.format.empty()) c.format = "dot";
  require_format(c, {"dot", "json", "csv", "text"});
  const FormType eps = parse_eps(c.eps);
  const int n = require_size(c);
  const PosetGraph g =
      classify_edges(hasse(n, eps, resolve_bound(c, kDefaultHasseBound, true)));
  if (c.format == "dot") {
    out << to_dot(g);
  } else if (c.format == "json") {
    out << to_json(g).dump() << '\n';
  } else if (c.format == "csv") {
    out << "top;bottom;family;n;codim\n";
    for (const auto& e : g.edges) {
      out << e.top.to_string() << ';' << e.bottom.to_string() << ';' << *e.family << ';'
          << (e.family_n ? std::to_string(*e.family_n) : "") << ';' << *e.codim << '\n';
    }
  } else {
    out << g.nodes.size() << " nodes, " << g.edges.size() << " edges\n";
    for (const auto& e : g.edges) {
      out << bracket(e.top) << " -> " << bracket(e.bottom) << ' ' << *e.family << ','
          << *e.codim << '\n';
    }
  }
  return 0;
}

int run_reduce(Config c, std::ostream& out, std::ostream&) {
  if (c.format.empty()) c.format = "text";
  require_format(c, {"text", "json"});
  const DegenPair pair = require_strict_pair(c, parse_eps(c.eps));
  const ReductionResult r = irreducible_core(pair);
  if (c.format == "json") {
    out << to_json(r).dump() << '\n';
  } else {
    out << reduction_text(r) << ", erased rows " << bracket(r.erased_rows)
        << ", erased columns " << bracket(r.erased_columns) << '\n';
  }
  return 0;
}

int run_classify(Config c, std::ostream& out, std::ostream&) {
  if (c.format.empty()) c.format = "text";
  require_format(c, {"text", "json"});
  const DegenPair pair = require_strict_pair(c, parse_eps(c.eps));
  const int bound = resolve_bound(c, kDefaultEnumerationBound, true);
  const auto minimal = minimal_degenerations(EpsDiagram(pair.top(), pair.eps()), bound);
  if (std::find(minimal.begin(), minimal.end(), pair) == minimal.end()) {
    throw ParseError(bracket(pair.bottom()) + " is not a minimal degeneration of " +
                     bracket(pair.top()));
  }
  const Classification cls = classify_minimal_degeneration(pair);
  std::optional<int> oracle;
  if (c.oracle) oracle = codim_oracle(pair, kDefaultOracleBound);

  if (c.format == "json") {
    Json doc{{"pair", to_json(pair)},
             {"reduction", to_json(cls.reduction)},
             {"type", to_json(cls.type)},
             {"algebra", cls.type.algebra_label}};
    if (oracle) doc["oracle_codim"] = *oracle;
    out << doc.dump() << '\n';
  } else {
    out << reduction_text(cls.reduction) << ", " << type_text(cls.type) << " ("
        << cls.type.algebra_label << "), table codim " << cls.type.codim_table;
    if (oracle) out << ", oracle codim " << *oracle;
    out << '\n';
  }
  return 0;
}

int run_dim(Config c, std::ostream& out, std::ostream&) {
  if (c.format.empty()) c.format = "text";
  require_format(c, {"text", "json"});
  const FormType eps = parse_eps(c.eps);
  const int bound = resolve_bound(c, kDefaultOracleBound, false);
  if (c.partition) {
    const EpsDiagram eta = require_diagram(c.partition, "--partition", eps);
    const NilpotentModel model = build_nilpotent_model(eta.partition, eps, bound);
    const int algebra = algebra_dim(model.dim, eps);
    const int centralizer = centralizer_dim(model);
    if (c.format == "json") {
      out << Json{{"eps", sign(eps)},
                  {"partition", to_json(eta.partition)},
                  {"algebra_dim", algebra},
                  {"centralizer_dim", centralizer},
                  {"orbit_dim", algebra - centralizer}}
                 .dump()
          << '\n';
    } else {
      out << "orbit dim " << algebra - centralizer << " (algebra dim " << algebra
          << ", centralizer dim " << centralizer << ")\n";
    }
    return 0;
  }
  const DegenPair pair = require_strict_pair(c, eps);
  const int codim = codim_oracle(pair, bound);
  if (c.format == "json") {
    out << Json{{"pair", to_json(pair)}, {"codim", codim}}.dump() << '\n';
  } else {
    out << "codim " << codim << '\n';
  }
  return 0;
}

int run_verify(Config c, std::ostream& out, std::ostream&) {
  if (c.format.empty()) c.format = "text";
  require_format(c, {"text", "json"});
  const FormType eps = parse_eps(c.eps);
  const EpsDiagram eta = require_diagram(c.partition, "--partition", eps);
  if (eta.partition.largest() <= 1) {
    throw ParseError("the zero orbit has an empty image; nothing to verify");
  }
  const NilpotentModel model =
      build_nilpotent_model(eta.partition, eps, resolve_bound(c, kDefaultOracleBound, false));
  const NilpotentModel image = restrict_to_image(model);
  const Partition got = jordan_type(image.nilpotent);
  const Partition expected = erase_first_column(eta.partition);
  const bool pass = got == expected && image.eps == flip(eps) &&
                    model_violations(image).empty();
  if (c.format == "json") {
    out << Json{{"eps", sign(eps)},
                {"partition", to_json(eta.partition)},
                {"image_eps", sign(image.eps)},
                {"image_type", to_json(got)},
                {"expected", to_json(expected)},
                {"pass", pass}}
               .dump()
        << '\n';
  } else {
    out << "restriction type " << bracket(got) << ", expected " << bracket(expected)
        << ": " << (pass ? "PASS" : "FAIL") << '\n';
    out << "form type " << to_string(image.eps) << ", expected " << to_string(flip(eps))
        << '\n';
  }
  return pass ? 0 : static_cast<int>(ExitCode::kInternal);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normality of orthogonal and symplectic nilpotent orbit closures", "orbitnorm"};
  app.require_subcommand(1);

  Config config;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--eps", config.eps, "form type: +1 orthogonal, -1 symplectic")
        ->required();
    sub->add_option("--format", config.format, "json | csv | text | dot");
    sub->add_option("--max-size", config.max_size, "override the size bound")
        ->check(CLI::NonNegativeNumber);
  };
  auto add_partition = [&](CLI::App* sub) {
    sub->add_option("--partition", config.partition, "comma-separated parts");
  };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--top", config.top, "the larger partition (eta)");
    sub->add_option("--bottom", config.bottom, "the degeneration (sigma)");
  };
  auto add_size = [&](CLI::App* sub) {
    sub->add_option("--size", config.size, "size of the partitions")->required();
  };

  using Handler = int (*)(Config, std::ostream&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> handlers;

  CLI::App* check = app.add_subcommand("check", "decide normality of one orbit closure");
  add_common(check);
  add_partition(check);
  check->add_option("--cache", config.cache, "JSONL verdict cache");
  check->add_flag("--oracle", config.oracle, "cross-check codimensions with the matrix oracle");
  handlers.emplace_back(check, run_check);

  CLI::App* survey_cmd = app.add_subcommand("survey", "decide every orbit of a given size");
  add_common(survey_cmd);
  add_size(survey_cmd);
  survey_cmd->add_option("--cache", config.cache, "JSONL verdict cache");
  survey_cmd->add_flag("--oracle", config.oracle,
                       "cross-check codimensions with the matrix oracle");
  handlers.emplace_back(survey_cmd, run_survey);

  CLI::App* hasse_cmd = app.add_subcommand("hasse", "export the degeneration cover graph");
  add_common(hasse_cmd);
  add_size(hasse_cmd);
  handlers.emplace_back(hasse_cmd, run_hasse);

  CLI::App* reduce = app.add_subcommand("reduce", "cancel common leading rows and columns");
  add_common(reduce);
  add_pair(reduce);
  handlers.emplace_back(reduce, run_reduce);

  CLI::App* classify = app.add_subcommand("classify", "classify a minimal degeneration");
  add_common(classify);
  add_pair(classify);
  classify->add_flag("--oracle", config.oracle, "also compute the oracle codimension");
  handlers.emplace_back(classify, run_classify);

  CLI::App* dim = app.add_subcommand("dim", "orbit dimension or codimension via matrices");
  add_common(dim);
  add_partition(dim);
  add_pair(dim);
  handlers.emplace_back(dim, run_dim);

  CLI::App* verify = app.add_subcommand("verify", "check the image restriction on a model");
  add_common(verify);
  add_partition(verify);
  handlers.emplace_back(verify, run_verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kInputError);
  }

  try {
    for (const auto& [sub, handler] : handlers) {
      if (sub->parsed()) return handler(config, out, err);
    }
    return static_cast<int>(ExitCode::kInternal);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kInputError);
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kInputError);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kCapacity);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kInternal);
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace orbitnorm::cli
