#include "nesy/cli.hpp"

#include <cstdlib>
#include <optional>

#include <CLI11.hpp>

#include "nesy/colimit.hpp"
#include "nesy/dsl.hpp"
#include "nesy/emitters.hpp"

namespace nesy {

namespace {

constexpr int kOk = 0;
constexpr int kDocumentError = 1;
constexpr int kEnvironmentError = 2;

struct Options {
  std::string catalog_path;
  bool allow_fetch = false;
  std::string file;
  std::string pattern;
  std::string format = "json";
  std::string from;
  std::string to;
};

bool is_environment_failure(ErrorKind kind) {
  return kind == ErrorKind::io_error || kind == ErrorKind::catalog_error;
}

int exit_code(const Diagnostics& diags) {
  int code = kOk;
  for (const auto& d : diags.items()) {
    if (d.severity != Severity::error) continue;
    if (is_environment_failure(d.kind)) return kEnvironmentError;
    code = kDocumentError;
  }
  return code;
}

/// Everything a subcommand needs after loading the document.
struct Session {
  Library lib;
  Diagnostics diags;
};

std::optional<Catalog> open_catalog(const Options& opt, std::ostream& err) {
  std::string path = opt.catalog_path;
  if (path.empty()) {
    if (const char* env = std::getenv("NESY_CATALOG"); env && *env) path = env;
  }
  try {
    Catalog cat = path.empty() ? Catalog{} : load_catalog(path);
    if (opt.allow_fetch) cat.allow_fetch = true;
    return cat;
  } catch (const Error& e) {
    err << (path.empty() ? std::string("catalog") : path)
        << ": error: " << e.what() << '\n';
    return std::nullopt;
  }
}

/// Reads, parses, resolves and evaluates; nullopt on I/O or catalog failure.
std::optional<Session> load(const Options& opt, std::ostream& err) {
  auto cat = open_catalog(opt, err);
  if (!cat) return std::nullopt;
  std::string text;
  try {
    text = read_file(opt.file);
  } catch (const Error& e) {
    err << opt.file << ": error: " << e.what() << '\n';
    return std::nullopt;
  }
  Session s;
  try {
    ast::Document doc = parse(text);
    Library lib = resolve(doc, *cat, s.diags);
    s.lib = evaluate_combines(lib, s.diags);
  } catch (const Error& e) {
    s.diags.error(e, {});
  }
  return s;
}

int cmd_check(const Options& opt, std::ostream& err) {
  auto s = load(opt, err);
  if (!s) return kEnvironmentError;
  print_diagnostics(err, opt.file, s->diags);
  return exit_code(s->diags);
}

int cmd_combine(const Options& opt, std::ostream& out, std::ostream& err) {
  auto s = load(opt, err);
  if (!s) return kEnvironmentError;
  print_diagnostics(err, opt.file, s->diags);
  if (int code = exit_code(s->diags); code == kEnvironmentError) return code;

  const Library& lib = s->lib;
  auto it = lib.patterns.find(opt.pattern);
  if (it == lib.patterns.end()) {
    if (!lib.combine_defs.contains(opt.pattern) && !lib.has_name(opt.pattern)) {
      err << opt.file << ": error: UnknownName: no pattern named '"
          << opt.pattern << "'\n";
    } else if (!s->diags.has_errors()) {
      err << opt.file << ": error: UnknownName: '" << opt.pattern
          << "' is not a pattern\n";
    }
    return kDocumentError;
  }
  const Pattern& p = it->second;
  if (opt.format == "json") {
    auto c = lib.combine_defs.find(opt.pattern);
    if (c != lib.combine_defs.end()) {
      out << emit_json(combine(lib.networks.at(c->second), opt.pattern));
    } else {
      out << emit_json(p);
    }
  } else if (opt.format == "dot") {
    out << emit_dot(p);
  } else if (opt.format == "dsl") {
    out << emit_dsl(p);
  } else {
    Diagnostics warnings;
    std::string text;
    try {
      text = render_abox(emit_abox(p, &warnings));
    } catch (const Error& e) {
      warnings.error(e, {});
    }
    SourcePos at = lib.entry(opt.pattern) ? lib.entry(opt.pattern)->pos : SourcePos{};
    Diagnostics positioned;
    for (auto d : warnings.items()) {
      d.pos = at;
      positioned.add(std::move(d));
    }
    print_diagnostics(err, opt.file, positioned);
    if (positioned.has_errors()) return kDocumentError;
    out << text;
  }
  return kOk;
}

int cmd_infer(const Options& opt, std::ostream& out, std::ostream& err) {
  auto s = load(opt, err);
  if (!s) return kEnvironmentError;
  print_diagnostics(err, opt.file, s->diags);
  if (int code = exit_code(s->diags); code == kEnvironmentError) return code;
  try {
    const Pattern& src = s->lib.pattern(opt.from);
    const Pattern& tgt = s->lib.pattern(opt.to);
    Refinement r = infer_refinement(opt.from + " -> " + opt.to, src, tgt);
    for (const auto& [from, to] : r.id_map()) {
      out << from.str() << " |-> " << to.str() << '\n';
    }
    return kOk;
  } catch (const Error& e) {
    err << opt.file << ": error: " << e.what() << '\n';
    return kDocumentError;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Check, combine and render neural-symbolic design patterns",
               "nesy"};
  Options opt;
  app.add_option("--catalog", opt.catalog_path,
                 "Catalog JSON (default: $NESY_CATALOG)");
  app.add_flag("--allow-fetch", opt.allow_fetch,
               "Fetch ontologies over HTTP when the catalog has no mapping");
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "Check a document for well-formedness");
  check->add_option("file", opt.file, "Pattern document")->required();

  auto* comb = app.add_subcommand("combine", "Render a (combined) pattern");
  comb->add_option("file", opt.file, "Pattern document")->required();
  comb->add_option("--pattern", opt.pattern, "Pattern name")->required();
  comb->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"dot", "json", "dsl", "abox"}));

  auto* infer = app.add_subcommand("infer", "Infer the refinement map between two patterns");
  infer->add_option("file", opt.file, "Pattern document")->required();
  infer->add_option("--from", opt.from, "Source pattern")->required();
  infer->add_option("--to", opt.to, "Target pattern")->required();

  // CLI11 expects the arguments in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "nesy: " << e.what() << '\n';
    return kEnvironmentError;
  }

  if (check->parsed()) return cmd_check(opt, err);
  if (comb->parsed()) return cmd_combine(opt, out, err);
  return cmd_infer(opt, out, err);
}

}  // namespace nesy
