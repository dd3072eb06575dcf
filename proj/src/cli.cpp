#include "krammer/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "krammer/curves.hpp"
#include "krammer/errors.hpp"
#include "krammer/json_io.hpp"
#include "krammer/libgober.hpp"
#include "krammer/representations.hpp"

namespace krammer {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_all(std::istream& s) {
  std::ostringstream buf;
  buf << s.rdbuf();
  return buf.str();
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open input file \"" + path + "\"");
  return read_all(f);
}

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (text[pos] == '{' || text[pos] == '[');
}

int require_strands(const std::optional<int>& n) {
  if (!n) throw UsageError("--n is required");
  return *n;
}

// Braid words from --word flags, or from --input as JSON {n, words} or as
// plain text with one word per non-blank line.
MonodromyList load_words(const CliConfig& c, std::istream& in) {
  std::optional<int> n = c.strands;
  std::vector<std::string> texts = c.words;
  if (c.input) {
    if (!texts.empty()) throw UsageError("give either --word or --input, not both");
    const std::string body = read_input(*c.input, in);
    if (looks_like_json(body)) {
      const Json j = Json::parse(body);
      if (j.contains("n")) {
        const int jn = j["n"].get<int>();
        if (n && *n != jn) throw UsageError("--n disagrees with the n in the input");
        n = jn;
      }
      for (const auto& w : j.at("words")) texts.push_back(w.get<std::string>());
    } else {
      std::istringstream lines(body);
      std::string line;
      while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) texts.push_back(line);
      }
    }
  }
  const int strands = require_strands(n);
  if (texts.empty()) throw UsageError("no braid word given (use --word or --input)");
  std::vector<BraidWord> words;
  for (const auto& t : texts) words.push_back(parse_braid(t, strands));
  return MonodromyList(strands, std::move(words));
}

BraidWord single_word(const CliConfig& c, std::istream& in) {
  const MonodromyList m = load_words(c, in);
  if (m.fibers() != 1) throw UsageError("this command takes exactly one braid word");
  return m.words().front();
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_krammer_matrix(const CliConfig& c, std::istream& in, std::ostream& out) {
  const BraidWord w = single_word(c, in);
  const PolyMatrix k = krammer_word(w);
  if (c.format == OutputFormat::Json) {
    Json basis = Json::array();
    const KrammerBasis kb(w.strands());
    for (const auto& [i, j] : kb.pairs()) basis.push_back(Json::array({i, j}));
    Json j = to_json(k);
    j["n"] = w.strands();
    j["word"] = to_string(w);
    j["basis"] = std::move(basis);
    print(out, j);
  } else {
    out << to_string(k);
  }
  return kExitOk;
}

int cmd_invariant(const CliConfig& c, std::istream& in, std::ostream& out, std::ostream& err, bool burau) {
  const MonodromyList m = load_words(c, in);
  const InvariantResult r = burau ? alexander_polynomial(m, c.minor_cap) : krammer_polynomial(m, c.minor_cap);
  if (c.format == OutputFormat::Json) {
    print(out, to_json(r));
  } else {
    out << to_string(r.polynomial) << '\n';
  }
  if (!r.exact) {
    err << "warning: minor cap reached after " << r.minors_enumerated
        << " minors; the result is a multiple of the invariant\n";
    return kExitInexact;
  }
  return kExitOk;
}

int cmd_essential(const CliConfig& c, std::istream& in, std::ostream& out) {
  const BraidWord w = single_word(c, in);
  const auto missing = missing_generators(w);
  if (c.format == OutputFormat::Json) {
    print(out, Json{{"n", w.strands()}, {"word", to_string(w)}, {"essential", !missing.empty()}, {"missing", missing}});
    return kExitOk;
  }
  if (missing.empty()) {
    out << "essential: false\n";
    return kExitOk;
  }
  out << "essential: true (missing: ";
  for (std::size_t k = 0; k < missing.size(); ++k) out << (k ? ", " : "") << missing[k];
  out << ")\n";
  return kExitOk;
}

int cmd_eigenvector(const CliConfig& c, std::ostream& out) {
  if (!c.missing) throw UsageError("--missing is required");
  const EssentialEigenvector v = essential_eigenvector(require_strands(c.strands), *c.missing);
  if (c.format == OutputFormat::Json) {
    print(out, to_json(v));
    return kExitOk;
  }
  out << "x = (" << to_string(v.x_numerator) << ") / (" << to_string(v.scale) << ")\n";
  out << "y = (" << to_string(v.y_numerator) << ") / (" << to_string(v.scale) << ")\n";
  out << "scale = " << to_string(v.scale) << '\n';
  const KrammerBasis basis(v.strands);
  for (std::size_t k = 0; k < v.pattern.size(); ++k) {
    const auto [i, j] = basis.pairs()[k];
    out << "(" << i << "," << j << ")  " << to_string(v.pattern[k]) << "  "
        << to_string(v.entries(static_cast<Eigen::Index>(k))) << '\n';
  }
  return kExitOk;
}

int cmd_relations(const CliConfig& c, std::ostream& out) {
  const auto checks = check_krammer_relations(require_strands(c.strands));
  bool all = true;
  Json list = Json::array();
  for (const auto& r : checks) {
    all = all && r.holds;
    if (c.format == OutputFormat::Json) {
      list.push_back(Json{{"relation", r.relation}, {"holds", r.holds}});
    } else {
      out << (r.holds ? "ok    " : "FAIL  ") << r.relation << '\n';
    }
  }
  if (c.format == OutputFormat::Json) print(out, Json{{"n", *c.strands}, {"all_hold", all}, {"relations", list}});
  return all ? kExitOk : kExitRelationFailed;
}

void print_report(std::ostream& out, const CurveReport& r) {
  out << "components: " << r.strands << '\n';
  if (r.family) {
    const auto& f = *r.family;
    out << "family: one singular fiber at x = " << f.family.p << ", order d = " << f.family.d << '\n';
    out << "computed: " << to_string(f.computed) << '\n';
    out << "closed form (t^" << 2 * f.family.d << "*q^" << 6 * f.family.d << " - 1)^" << r.strands * (r.strands - 1) / 2
        << (f.formula_matches ? " agrees" : " differs") << (f.formula_established ? "" : " (closed form checked only for n = 3)")
        << '\n';
  } else {
    out << "family: none\n";
  }
  for (const auto& fr : r.fibers) {
    out << "fiber x = " << fr.fiber.x << ": parts";
    for (const auto& part : fr.fiber.parts) {
      out << " {";
      for (std::size_t k = 0; k < part.size(); ++k) out << (k ? "," : "") << part[k];
      out << "}";
    }
    out << ", local degree " << (fr.fiber.local_degree ? std::to_string(*fr.fiber.local_degree) : "mixed") << '\n';
    out << "  local polynomial: " << (fr.local_polynomial ? to_string(*fr.local_polynomial) : "unknown") << " ("
        << fr.reason << ")\n";
  }
  for (const auto& [pair, residual] : r.unresolved) {
    out << "unresolved: components " << pair.first << " and " << pair.second << " meet at the roots of "
        << to_string(residual) << '\n';
  }
  if (r.supplied) out << "supplied monodromy: " << to_string(r.supplied->polynomial) << '\n';
}

int cmd_curve(const CliConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
  if (!c.input) throw UsageError("curve-analyze needs --input with a JSON curve");
  const Json j = Json::parse(read_input(*c.input, in));
  const CompletelyReducibleCurve curve = curve_from_json(j);
  std::optional<MonodromyList> supplied;
  std::vector<std::string> texts = c.words;
  if (j.is_object() && j.contains("words")) {
    for (const auto& w : j["words"]) texts.push_back(w.get<std::string>());
  }
  if (!texts.empty()) {
    std::vector<BraidWord> words;
    for (const auto& t : texts) words.push_back(parse_braid(t, curve.degree()));
    supplied = MonodromyList(curve.degree(), std::move(words));
  }
  const CurveReport report = analyze(curve, supplied);
  if (c.format == OutputFormat::Json) {
    print(out, to_json(report));
  } else {
    print_report(out, report);
  }
  if (!report.unresolved.empty()) err << "note: some collisions are at non-rational x and are not listed as fibers\n";
  return kExitOk;
}

}  // namespace

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (config.minor_cap && config.command != Command::KrammerPoly) {
      throw UsageError("--minor-cap is only valid with krammer-poly");
    }
    switch (config.command) {
      case Command::KrammerMatrix: return cmd_krammer_matrix(config, in, out);
      case Command::KrammerPoly: return cmd_invariant(config, in, out, err, false);
      case Command::Alexander: return cmd_invariant(config, in, out, err, true);
      case Command::Essential: return cmd_essential(config, in, out);
      case Command::Eigenvector: return cmd_eigenvector(config, out);
      case Command::RelationsCheck: return cmd_relations(config, out);
      case Command::CurveAnalyze: return cmd_curve(config, in, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad JSON input: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Krammer polynomials of braid monodromies"};
  app.require_subcommand(1);
  CliConfig config;
  std::string format = "text";
  std::size_t cap = 0;

  const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::Text}, {"json", OutputFormat::Json}};
  auto add_common = [&](CLI::App* sub, bool takes_words) {
    sub->add_option("--n", config.strands, "number of strands")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    if (takes_words) {
      sub->add_option("--word", config.words, "braid word, e.g. \"s1 s2^-1\"; repeat for several fibers");
      sub->add_option("--input", config.input, "file with words or JSON, or - for standard input");
    }
  };

  struct Entry {
    const char* name;
    const char* help;
    Command command;
    bool takes_words;
  };
  const Entry entries[] = {
      {"krammer-matrix", "Krammer matrix of a braid word", Command::KrammerMatrix, true},
      {"krammer-poly", "Krammer polynomial of a monodromy list", Command::KrammerPoly, true},
      {"alexander", "Alexander polynomial via reduced Burau", Command::Alexander, true},
      {"essential", "whether a word omits a generator", Command::Essential, true},
      {"eigenvector", "common fixed vector of the essential subgroup", Command::Eigenvector, false},
      {"relations-check", "verify the Artin relations on Krammer matrices", Command::RelationsCheck, false},
      {"curve-analyze", "singular fibers and invariants of a completely reducible curve", Command::CurveAnalyze,
       true},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub, e.takes_words);
    if (e.command == Command::KrammerPoly) {
      sub->add_option("--minor-cap", cap, "stop after this many maximal minors")->check(CLI::PositiveNumber);
    }
    if (e.command == Command::Eigenvector) sub->add_option("--missing", config.missing, "omitted generator index");
    subs.emplace_back(sub, e.command);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (const auto& [sub, command] : subs) {
    if (sub->parsed()) config.command = command;
  }
  config.format = formats.at(format);
  if (cap > 0) config.minor_cap = cap;
  return run(config, in, out, err);
}

}  // namespace krammer
