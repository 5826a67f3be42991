#include "atomized/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "atomized/algebra.hpp"
#include "atomized/io.hpp"
#include "atomized/oracle.hpp"
#include "atomized/script.hpp"

namespace atomized::cli {

namespace {

struct Options {
  std::size_t cap = kDefaultEnumerationCap;
  std::string output;
  std::string reduce = "after_each";
};

// A loaded input: JSON models are taken as given, scripts are executed.
struct Loaded {
  Model model;
  std::optional<script::Script> script;
  std::optional<script::Result> result;
};

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

bool looks_like_json(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

io::Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return io::Json::parse(text);
  } catch (const io::Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, origin + ": " + e.what());
  }
}

ReducePolicy policy_of(const std::string& name) {
  if (name == "after_each") return ReducePolicy::AfterEach;
  if (name == "at_end") return ReducePolicy::AtEnd;
  return ReducePolicy::Never;
}

Loaded load(const std::string& path, const Options& opt, std::ostream& show_out, std::ostream& err) {
  const std::string text = read_source(path);
  if (looks_like_json(text)) {
    Model m = io::model_from_json(parse_json(text, path));
    if (m.repaired()) err << "warning: " << path << ": uncovered constants, zero atom added\n";
    return {std::move(m), std::nullopt, std::nullopt};
  }
  script::Script s = script::parse(text);
  script::Result r = script::execute(s, policy_of(opt.reduce), show_out, opt.cap);
  if (s.has_atoms() && Model::make(s.signature, s.atoms()).repaired())
    err << "warning: " << path << ": uncovered constants, zero atom added\n";
  Model m = r.model;
  return {std::move(m), std::move(s), std::move(r)};
}

void write_json(const io::Json& j, const Options& opt, std::ostream& out) {
  if (opt.output.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(opt.output);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + opt.output + "'");
  f << j.dump(2) << '\n';
}

void write_text(const std::string& text, const Options& opt, std::ostream& out) {
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opt.output);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + opt.output + "'");
  f << text;
}

int report_denials(const script::Result& r, const Signature& sig, std::ostream& out) {
  for (const auto& v : r.denials)
    out << "deny " << script::format_term(sig, v.duple.left) << " <= " << script::format_term(sig, v.duple.right)
        << ": " << (v.verdict == Verdict::Satisfiable ? "satisfiable" : "entailed (inconsistent)") << '\n';
  return r.consistent() ? kExitOk : kExitInconsistent;
}

// Compares the built model against the closure oracle (and, for |C| <= 3, the
// congruence oracle), then checks the axioms. Returns false on any mismatch.
bool oracle_check(const Loaded& in, const Options& opt, std::ostream& out) {
  bool ok = true;
  const Model& m = in.model;
  if (in.script) {
    const auto positives = in.script->positives();
    const auto built = enumerate_theory(m, opt.cap).positive_relation();
    const bool closure_ok = built == oracle::closure(m.signature(), positives, opt.cap);
    out << "oracle closure: " << (closure_ok ? "agree" : "DISAGREE") << '\n';
    ok = ok && closure_ok;
    if (m.constants() <= oracle::kCongruenceCap) {
      const bool cong_ok = built == oracle::congruence(m.signature(), positives);
      out << "oracle congruence: " << (cong_ok ? "agree" : "DISAGREE") << '\n';
      ok = ok && cong_ok;
    }
  }
  const auto report = oracle::axiom_check(m, opt.cap);
  for (const auto& r : report.results) out << r.axiom << ": " << to_string(r.status) << " (" << r.detail << ")\n";
  return ok && report.passed();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Atomized semilattices: build, reduce and transform finite models", "atomized"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--cap", opt.cap, "Largest |C| for element and theory enumeration")
      ->check(CLI::Range(std::size_t{1}, std::size_t{20}));
  app.add_option("-o,--output", opt.output, "Write the result to a file");

  std::string input, second, t1, t2, duple_text, map_arg;
  std::vector<std::string> keep, gens, names;
  bool identify_diagonal = false, use_oracle = false, as_json = false, as_dot = false;

  const CLI::IsMember policies({"after_each", "at_end", "never"});

  auto* build = app.add_subcommand("build", "Freest model of a script (or a JSON model), as JSON");
  build->add_option("input", input, "Script or model file ('-' for stdin)")->required();
  build->add_option("--reduce", opt.reduce, "after_each | at_end | never")->check(policies);

  auto* reduce_cmd = app.add_subcommand("reduce", "Drop redundant atoms");
  reduce_cmd->add_option("input", input)->required();

  auto* query = app.add_subcommand("query", "Whether a duple holds: prints positive or negative");
  query->add_option("input", input)->required();
  query->add_option("duple", duple_text, "\"<term> <= <term>\"")->required();

  auto* restrict_cmd = app.add_subcommand("restrict", "Keep only some constants");
  restrict_cmd->add_option("input", input)->required();
  restrict_cmd->add_option("--keep", keep, "Constants to keep")->required()->delimiter(',');

  auto* rename_cmd = app.add_subcommand("rename", "Rename constants through a map");
  rename_cmd->add_option("input", input)->required();
  rename_cmd->add_option("--map", map_arg, "Rename map as JSON text or a file")->required();

  auto* quotient_cmd = app.add_subcommand("quotient", "Identify two terms");
  quotient_cmd->add_option("input", input)->required();
  quotient_cmd->add_option("a", t1)->required();
  quotient_cmd->add_option("b", t2)->required();

  auto* join_cmd = app.add_subcommand("join", "Freest model satisfying both theories");
  join_cmd->add_option("m", input)->required();
  join_cmd->add_option("n", second)->required();

  auto* product_cmd = app.add_subcommand("product", "Direct product over pair constants");
  product_cmd->add_option("m", input)->required();
  product_cmd->add_option("n", second)->required();
  product_cmd->add_flag("--identify-diagonal", identify_diagonal, "Rename (c,c) back to c");

  auto* sub_cmd = app.add_subcommand("subalgebra", "Subalgebra generated by terms");
  sub_cmd->add_option("input", input)->required();
  sub_cmd->add_option("--gen", gens, "Generator terms (quote multi-constant terms)")->required();
  sub_cmd->add_option("--names", names, "Names of the generators")->required()->delimiter(',');

  auto* decompose_cmd = app.add_subcommand("decompose", "Subdirect decomposition into two-element factors");
  decompose_cmd->add_option("input", input)->required();

  auto* embed_cmd = app.add_subcommand("embed-free", "Embedding into a free semilattice");
  embed_cmd->add_option("input", input)->required();

  auto* check_cmd = app.add_subcommand("check", "Judge denials; exit 1 if any is entailed");
  check_cmd->add_option("input", input)->required();
  check_cmd->add_flag("--oracle", use_oracle, "Cross-check against brute-force oracles");

  auto* export_cmd = app.add_subcommand("export", "Export as JSON or Graphviz DOT");
  export_cmd->add_option("input", input)->required();
  auto* json_flag = export_cmd->add_flag("--json", as_json);
  auto* dot_flag = export_cmd->add_flag("--dot", as_dot);
  json_flag->excludes(dot_flag);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    // `show` output only matters for build and check; elsewhere it is discarded.
    std::ostringstream discard;
    auto load_one = [&](const std::string& path, bool shows) {
      return load(path, opt, shows ? out : static_cast<std::ostream&>(discard), err);
    };

    if (build->parsed()) {
      Loaded in = load_one(input, true);
      write_json(io::model_to_json(in.model), opt, out);
      return in.result ? report_denials(*in.result, in.model.signature(), err) : kExitOk;
    }
    if (reduce_cmd->parsed()) {
      write_json(io::model_to_json(reduce(load_one(input, false).model)), opt, out);
      return kExitOk;
    }
    if (query->parsed()) {
      const Model m = load_one(input, false).model;
      const Duple d = script::parse_duple(m.signature(), duple_text);
      write_text(entails(m, d.left, d.right) ? "positive\n" : "negative\n", opt, out);
      return kExitOk;
    }
    if (restrict_cmd->parsed()) {
      write_json(io::model_to_json(restrict(load_one(input, false).model, keep)), opt, out);
      return kExitOk;
    }
    if (rename_cmd->parsed()) {
      const Model m = load_one(input, false).model;
      const std::string map_text = looks_like_json(map_arg) ? map_arg : read_source(map_arg);
      const RenameMap map = io::rename_map_from_json(parse_json(map_text, "--map"));
      write_json(io::model_to_json(rename(m, map)), opt, out);
      return kExitOk;
    }
    if (quotient_cmd->parsed()) {
      const Model m = load_one(input, false).model;
      const Term a = script::parse_term(m.signature(), t1);
      const Term b = script::parse_term(m.signature(), t2);
      write_json(io::model_to_json(quotient(m, a, b)), opt, out);
      return kExitOk;
    }
    if (join_cmd->parsed()) {
      const Model m = load_one(input, false).model;
      const Model n = load_one(second, false).model;
      write_json(io::model_to_json(join(m, n)), opt, out);
      return kExitOk;
    }
    if (product_cmd->parsed()) {
      const Model m = load_one(input, false).model;
      const Model n = load_one(second, false).model;
      write_json(io::model_to_json(product(m, n, {identify_diagonal})), opt, out);
      return kExitOk;
    }
    if (sub_cmd->parsed()) {
      const Model m = load_one(input, false).model;
      if (gens.size() != names.size())
        throw Error(ErrorKind::InvalidArgument, "--gen and --names need the same number of entries");
      std::vector<Term> terms;
      for (const auto& g : gens) terms.push_back(script::parse_term(m.signature(), g));
      write_json(io::model_to_json(subalgebra(m, terms, names)), opt, out);
      return kExitOk;
    }
    if (decompose_cmd->parsed()) {
      write_json(io::decomposition_to_json(subdirect_decomposition(load_one(input, false).model)), opt, out);
      return kExitOk;
    }
    if (embed_cmd->parsed()) {
      const Model m = load_one(input, false).model;
      write_json(io::embedding_to_json(m.signature(), embed_in_free(m)), opt, out);
      return kExitOk;
    }
    if (check_cmd->parsed()) {
      const Loaded in = load_one(input, true);
      int code = in.result ? report_denials(*in.result, in.model.signature(), out) : kExitOk;
      if (use_oracle && !oracle_check(in, opt, out)) {
        err << "error: oracle check failed\n";
        return kExitUsage;
      }
      if (code == kExitOk) out << "consistent\n";
      return code;
    }
    if (export_cmd->parsed()) {
      const Model m = load_one(input, false).model;
      if (as_dot)
        write_text(io::to_dot(m, opt.cap), opt, out);
      else
        write_json(io::model_to_json(m), opt, out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace atomized::cli
