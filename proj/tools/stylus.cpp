// stylus -- a toolbox for finitely presented monoids, string rewriting, and
// derivation certificates in the seven-relation semigroup family.
//
// Exit codes: 0 success, 1 negative-but-valid result (verification failed,
// nothing found within budget, ...), 2 usage or input errors.  Payloads go
// to standard output, diagnostics to standard error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "stylus/catalog.hpp"
#include "stylus/certificate_io.hpp"
#include "stylus/codec.hpp"
#include "stylus/compiler.hpp"
#include "stylus/derivation.hpp"
#include "stylus/error.hpp"
#include "stylus/pipeline.hpp"
#include "stylus/presentation.hpp"
#include "stylus/rewrite.hpp"
#include "stylus/word.hpp"

namespace {

using nlohmann::ordered_json;
using namespace stylus;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

bool color_enabled() {
  return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stderr)) != 0;
}

void log_error(std::string const& message) {
  if (color_enabled())
    std::cerr << "\x1b[31merror:\x1b[0m " << message << '\n';
  else
    std::cerr << "error: " << message << '\n';
}

void log_note(std::string const& message) { std::cerr << message << '\n'; }

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_payload(std::string const& text, std::string const& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + out_path);
  out << text;
}

// ---- input resolution --------------------------------------------------------

struct EntryArgs {
  std::string name;
  std::optional<std::uint32_t> i, j;
};

catalog::Entry resolve_entry(EntryArgs const& args) {
  if (args.name == "tseytin") {
    if (!args.i) throw std::invalid_argument("tseytin requires --i");
    if (args.j) throw std::invalid_argument("tseytin takes no --j");
    return catalog::tseytin(*args.i);
  }
  if (args.name == "tseytin-specific") {
    if (!args.i || !args.j) throw std::invalid_argument("tseytin-specific requires --i and --j");
    return catalog::tseytin_specific(*args.i, *args.j);
  }
  if (args.i || args.j)
    throw std::invalid_argument("--i/--j apply only to the tseytin family");
  if (auto entry = catalog::entry_by_name(args.name)) return *entry;
  throw std::invalid_argument("unknown catalog name: " + args.name);
}

// A presentation given either by catalog name or as a file.
struct SourceArgs {
  std::string name;
  std::string file;
};

void add_source_options(CLI::App* cmd, SourceArgs& args) {
  auto* name = cmd->add_option("--name", args.name, "catalog presentation name");
  auto* file = cmd->add_option("--file", args.file, "presentation file path");
  name->excludes(file);
}

Presentation resolve_source(SourceArgs const& args) {
  if (!args.name.empty()) {
    if (auto entry = catalog::entry_by_name(args.name)) return entry->presentation;
    throw std::invalid_argument("unknown catalog name: " + args.name);
  }
  if (!args.file.empty()) return parse_presentation(read_file(args.file));
  throw std::invalid_argument("one of --name or --file is required");
}

SymbolRanking ranking_from_tokens(Alphabet const& alphabet, std::string const& order) {
  if (order.empty()) return identity_ranking(alphabet);
  std::istringstream in(order);
  SymbolRanking ranking;
  ranking.rank_of.assign(alphabet.size(), 0);
  std::vector<bool> seen(alphabet.size(), false);
  std::string token;
  std::uint32_t rank = 0;
  while (in >> token) {
    auto symbol = alphabet.index_of(token);
    if (!symbol) throw std::invalid_argument("--order token not in alphabet: " + token);
    if (seen[*symbol]) throw std::invalid_argument("--order repeats token: " + token);
    seen[*symbol] = true;
    ranking.rank_of[*symbol] = rank++;
  }
  if (rank != alphabet.size())
    throw std::invalid_argument("--order must list every alphabet token once");
  return ranking;
}

// ---- report rendering --------------------------------------------------------

std::string presentation_reference(Presentation const& p) {
  if (!p.name.empty()) {
    if (auto entry = catalog::entry_by_name(p.name)) {
      auto const& q = entry->presentation;
      if (q.kind == p.kind && q.alphabet == p.alphabet && q.relations == p.relations)
        return p.name;
    }
  }
  return print_presentation(p);
}

ordered_json stats_json(std::string const& name, Presentation const& p) {
  auto stats = catalog::letter_statistics(p);
  ordered_json report;
  report["schema"] = "catalog-stats/v1";
  report["name"] = name;
  report["relations"] = stats.relation_count;
  report["letters"] = stats.letter_occurrence_count;
  report["per_relation"] = stats.per_relation;
  return report;
}

void emit_json(ordered_json const& object) { std::cout << object.dump(2) << '\n'; }

// ---- subcommand data ---------------------------------------------------------

struct Options {
  // catalog
  EntryArgs entry;
  // pipeline / compile
  SourceArgs source;
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::string mode = "compiler";
  std::string fresh_x = "x";
  std::string fresh_y = "y";
  std::string emit = "all";
  std::string u_text, v_text, word_text;
  std::uint64_t budget_nodes = 0;
  std::uint32_t budget_depth = 0;
  std::string out_path;
  // verify
  std::string certificate_path;
  // rewrite
  std::string system_path;
  std::uint64_t max_steps = 0;
  std::uint64_t join_budget = 0;
  std::size_t max_rules = 0;
  std::uint64_t max_pair_norms = 0;
  std::size_t max_closure = 0;
  std::string order;
};

RecordMode parse_mode(std::string const& mode) {
  return mode == "paper" ? RecordMode::PaperExample : RecordMode::CompilerSufficient;
}

// ---- commands ----------------------------------------------------------------

int run_catalog_list() {
  for (auto const& name : catalog::catalog_names()) std::cout << name << '\n';
  return kOk;
}

int run_catalog_show(Options const& opt) {
  catalog::Entry entry = resolve_entry(opt.entry);
  if (entry.flags == catalog::Completeness::Partial)
    std::cout << "# partial: " << entry.partial_note << '\n';
  std::cout << print_presentation(entry.presentation);
  return kOk;
}

int run_catalog_stats(Options const& opt) {
  catalog::Entry entry = resolve_entry(opt.entry);
  emit_json(stats_json(entry.presentation.name, entry.presentation));
  return kOk;
}

int run_pipeline_build(Options const& opt) {
  Presentation source = resolve_source(opt.source);
  PipelineBundle bundle = build_pipeline(source, opt.i, parse_mode(opt.mode), opt.fresh_x);
  if (opt.emit == "m1") {
    std::cout << print_presentation(bundle.augmented);
    return kOk;
  }
  if (opt.emit == "m1o") {
    std::cout << print_presentation(bundle.encoded);
    return kOk;
  }
  if (opt.emit == "record") {
    std::cout << print_word(record_alphabet(), bundle.record) << '\n';
    return kOk;
  }
  ordered_json report;
  report["schema"] = "pipeline-report/v1";
  report["mode"] = opt.mode;
  report["i"] = bundle.i;
  report["fresh"] = bundle.augmented.alphabet.token(bundle.x);
  ordered_json ranks;
  for (Symbol s = 0; s < bundle.augmented.alphabet.size(); ++s)
    ranks[bundle.augmented.alphabet.token(s)] = bundle.rank_encoder.rank(s);
  report["ranks"] = std::move(ranks);
  report["source"] = print_presentation(bundle.source);
  report["augmented"] = print_presentation(bundle.augmented);
  report["encoded"] = print_presentation(bundle.encoded);
  report["record"] = print_word(record_alphabet(), bundle.record);
  ordered_json spans = ordered_json::array();
  for (std::size_t k = 0; k < bundle.block_spans.size(); ++k) {
    ordered_json span;
    span["relator"] = k;
    span["offset"] = bundle.block_spans[k].offset;
    span["length"] = bundle.block_spans[k].length;
    spans.push_back(std::move(span));
  }
  report["block_spans"] = std::move(spans);
  emit_json(report);
  return kOk;
}

void log_compile_stats(CompileStats const& stats) {
  ordered_json line;
  line["source_steps"] = stats.source_steps;
  line["lifted_steps"] = stats.lifted_steps;
  line["encoded_steps"] = stats.encoded_steps;
  line["commutation_steps"] = stats.commutation_steps;
  line["stylus_steps"] = stats.stylus_steps;
  line["trigger_steps"] = stats.trigger_steps;
  line["wipe_steps"] = stats.wipe_steps;
  line["total_steps"] = stats.total_steps;
  log_note("compile stats: " + line.dump());
}

int run_compile_equality(Options const& opt) {
  Presentation source = resolve_source(opt.source);
  Word const u = parse_word(source.alphabet, opt.u_text);
  Word const v = parse_word(source.alphabet, opt.v_text);
  auto witness = search_equality(source, u, v, SearchBudget{opt.budget_nodes, opt.budget_depth});
  if (!witness) {
    log_note("no derivation of u = v found within the budget");
    ordered_json report;
    report["schema"] = "solve-report/v1";
    report["found"] = false;
    emit_json(report);
    return kNegative;
  }
  PipelineBundle bundle =
      build_pipeline(source, opt.i, RecordMode::CompilerSufficient, opt.fresh_x);
  CompileContext ctx = make_compile_context(std::move(bundle), catalog::tseytin(opt.i));
  CompileStats stats;
  Derivation compiled = compile_equality(ctx, *witness, &stats);
  log_compile_stats(stats);
  write_payload(certificate_to_json(compiled), opt.out_path);
  return kOk;
}

int run_compile_specific(Options const& opt) {
  Presentation source = resolve_source(opt.source);
  Word const w = parse_word(source.alphabet, opt.word_text);
  auto witness = search_equality(source, w, Word::epsilon(),
                                 SearchBudget{opt.budget_nodes, opt.budget_depth});
  if (!witness) {
    log_note("no derivation of w = 1 found within the budget");
    ordered_json report;
    report["schema"] = "solve-report/v1";
    report["found"] = false;
    emit_json(report);
    return kNegative;
  }
  PipelineBundle bundle = build_specific_pipeline(source, opt.i, opt.j,
                                                  RecordMode::CompilerSufficient,
                                                  opt.fresh_x, opt.fresh_y);
  CompileContext ctx =
      make_compile_context(std::move(bundle), catalog::tseytin_specific(opt.i, opt.j));
  CompileStats stats;
  Derivation compiled = compile_specific(ctx, *witness, &stats);
  log_compile_stats(stats);
  write_payload(certificate_to_json(compiled), opt.out_path);
  return kOk;
}

int run_verify(Options const& opt) {
  Derivation d = certificate_from_json(read_file(opt.certificate_path));
  CheckReport report = check_derivation(d);
  ordered_json out;
  out["schema"] = "verify-report/v1";
  out["ok"] = report.ok;
  out["steps"] = d.steps.size();
  out["start"] = print_word(d.presentation.alphabet, d.start);
  out["end"] = print_word(d.presentation.alphabet, d.end);
  if (!report.ok) {
    out["failed_step"] = *report.failed_step;
    if (report.failure)
      out["failure"] = *report.failure == StepFailure::Range ? "range" : "mismatch";
    else
      out["failure"] = "end-mismatch";
    log_error("verification failed at step " + std::to_string(*report.failed_step));
  }
  emit_json(out);
  return report.ok ? kOk : kNegative;
}

int run_solve(Options const& opt) {
  Presentation source = resolve_source(opt.source);
  Word const u = parse_word(source.alphabet, opt.u_text);
  Word const v = parse_word(source.alphabet, opt.v_text);
  auto witness = search_equality(source, u, v, SearchBudget{opt.budget_nodes, opt.budget_depth});
  if (!witness) {
    log_note("no derivation found within the budget (this does not prove inequality)");
    ordered_json report;
    report["schema"] = "solve-report/v1";
    report["found"] = false;
    emit_json(report);
    return kNegative;
  }
  write_payload(certificate_to_json(*witness), opt.out_path);
  return kOk;
}

int run_rewrite_normalize(Options const& opt) {
  RewriteSystem system = parse_rewrite_system(read_file(opt.system_path));
  Word const w = parse_word(system.alphabet, opt.word_text);
  NormalizeResult result = normalize(system, w, opt.max_steps);
  std::cout << print_word(system.alphabet, result.word) << '\n';
  if (!result.irreducible) {
    log_note("step budget exhausted before reaching an irreducible word");
    return kNegative;
  }
  return kOk;
}

int run_rewrite_critical_pairs(Options const& opt) {
  RewriteSystem system = parse_rewrite_system(read_file(opt.system_path));
  auto pairs = critical_pairs(system);
  ordered_json report;
  report["schema"] = "critical-pairs/v1";
  ordered_json list = ordered_json::array();
  for (auto const& pair : pairs) {
    ordered_json item;
    item["peak"] = print_word(system.alphabet, pair.peak);
    item["left"] = print_word(system.alphabet, pair.left);
    item["right"] = print_word(system.alphabet, pair.right);
    item["rule_a"] = pair.rule_a;
    item["rule_b"] = pair.rule_b;
    item["offset"] = pair.offset;
    item["kind"] = pair.kind == OverlapKind::Inner ? "inner" : "boundary";
    list.push_back(std::move(item));
  }
  report["pairs"] = std::move(list);
  emit_json(report);
  return kOk;
}

int run_rewrite_confluence(Options const& opt) {
  RewriteSystem system = parse_rewrite_system(read_file(opt.system_path));
  LocalConfluenceReport report = check_local_confluence(system, opt.join_budget);
  ordered_json out;
  out["schema"] = "confluence-report/v1";
  switch (report.status) {
    case LocalConfluenceStatus::LocallyConfluent: out["status"] = "locally-confluent"; break;
    case LocalConfluenceStatus::NotLocallyConfluent:
      out["status"] = "not-locally-confluent";
      break;
    case LocalConfluenceStatus::Unknown: out["status"] = "unknown"; break;
  }
  if (report.witness) {
    out["peak"] = print_word(system.alphabet, report.witness->peak);
    out["left_normal_form"] = print_word(system.alphabet, report.left_normal_form);
    out["right_normal_form"] = print_word(system.alphabet, report.right_normal_form);
  }
  emit_json(out);
  return report.status == LocalConfluenceStatus::LocallyConfluent ? kOk : kNegative;
}

int run_rewrite_complete(Options const& opt) {
  Presentation source = resolve_source(opt.source);
  SymbolRanking ranking = ranking_from_tokens(source.alphabet, opt.order);
  CompletionResult result = complete_knuth_bendix(
      source, ranking, CompletionBudget{opt.max_rules, opt.max_pair_norms});
  if (result.status == CompletionStatus::Completed) {
    std::cout << print_rewrite_system(result.system);
    return kOk;
  }
  log_note(result.reason);
  ordered_json report;
  report["schema"] = "complete-report/v1";
  report["status"] =
      result.status == CompletionStatus::Failed ? "failed" : "budget-exhausted";
  report["reason"] = result.reason;
  report["rules"] = result.system.rules.size();
  emit_json(report);
  return kNegative;
}

int run_rewrite_termination(Options const& opt) {
  RewriteSystem system = parse_rewrite_system(read_file(opt.system_path));
  Word const w = parse_word(system.alphabet, opt.word_text);
  TerminationVerdict verdict = decide_termination_on_word(system, w, opt.max_closure);
  ordered_json out;
  out["schema"] = "termination-report/v1";
  switch (verdict.status) {
    case TerminationStatus::Terminates:
      out["verdict"] = "terminates";
      out["closure"] = verdict.closure_size;
      out["max_chain"] = verdict.max_chain;
      break;
    case TerminationStatus::NonTerminating:
      out["verdict"] = "non-terminating";
      out["witness"] = ordered_json::parse(certificate_to_json(*verdict.cycle_witness));
      break;
    case TerminationStatus::Unknown:
      out["verdict"] = "unknown";
      out["explored"] = verdict.explored;
      break;
  }
  emit_json(out);
  return verdict.status == TerminationStatus::Unknown ? kNegative : kOk;
}

int run_classify(Options const& opt) {
  Presentation source = resolve_source(opt.source);
  ClassificationReport report = classify(source);
  ordered_json out;
  out["schema"] = "classify-report/v1";
  out["kind"] = to_string(source.kind);
  out["special"] = report.is_special;
  out["positive"] = report.is_positive;
  out["monadic"] = report.is_monadic;
  out["relations"] = report.relation_count;
  out["letter_occurrences"] = report.letter_occurrence_count;
  emit_json(out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stylus: finitely presented monoids, rewriting, and derivation "
               "certificates in the seven-relation semigroup family"};
  app.require_subcommand(1);
  Options opt;
  int result = kOk;
  auto run = [&result](auto&& fn) {
    return [&result, fn]() { result = fn(); };
  };

  // catalog ---------------------------------------------------------------
  auto* cat = app.add_subcommand("catalog", "browse the presentation catalog");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list catalog names");
  cat_list->callback(run([]() { return run_catalog_list(); }));
  auto add_entry_options = [&opt](CLI::App* cmd) {
    cmd->add_option("name", opt.entry.name, "catalog entry name")->required();
    cmd->add_option("--i", opt.entry.i, "tseytin family parameter i");
    cmd->add_option("--j", opt.entry.j, "tseytin-specific parameter j");
  };
  auto* cat_show = cat->add_subcommand("show", "print a presentation");
  add_entry_options(cat_show);
  cat_show->callback(run([&opt]() { return run_catalog_show(opt); }));
  auto* cat_stats = cat->add_subcommand("stats", "relation and letter counts");
  add_entry_options(cat_stats);
  cat_stats->callback(run([&opt]() { return run_catalog_stats(opt); }));

  // pipeline --------------------------------------------------------------
  auto* pipe = app.add_subcommand("pipeline", "special-monoid encoding pipeline");
  pipe->require_subcommand(1);
  auto* build = pipe->add_subcommand("build", "augment, encode, and build the record");
  add_source_options(build, opt.source);
  build->add_option("--i", opt.i, "rank of the fresh letter")->required();
  build->add_option("--mode", opt.mode, "record layout")
      ->check(CLI::IsMember({"paper", "compiler"}))
      ->required();
  build->add_option("--fresh", opt.fresh_x, "fresh letter token (default x)");
  build->add_option("--emit", opt.emit, "what to print")
      ->check(CLI::IsMember({"m1", "m1o", "record", "all"}));
  build->callback(run([&opt]() { return run_pipeline_build(opt); }));

  // compile ---------------------------------------------------------------
  auto* compile = app.add_subcommand("compile", "compile derivation certificates");
  compile->require_subcommand(1);
  auto* ceq = compile->add_subcommand(
      "equality", "search for u = v in the source monoid and compile it");
  add_source_options(ceq, opt.source);
  ceq->add_option("--i", opt.i, "rank of the fresh letter")->required();
  ceq->add_option("--u", opt.u_text, "left word")->required();
  ceq->add_option("--v", opt.v_text, "right word")->required();
  ceq->add_option("--budget-nodes", opt.budget_nodes, "search node budget")->required();
  ceq->add_option("--budget-depth", opt.budget_depth, "search depth budget")->required();
  ceq->add_option("--fresh", opt.fresh_x, "fresh letter token (default x)");
  ceq->add_option("-o,--out", opt.out_path, "write the certificate here instead of stdout");
  ceq->callback(run([&opt]() { return run_compile_equality(opt); }));
  auto* csp = compile->add_subcommand(
      "specific", "compile w = 1 down to the fixed specific word");
  add_source_options(csp, opt.source);
  csp->add_option("--i", opt.i, "rank of the fresh letter")->required();
  csp->add_option("--j", opt.j, "rank of the free frame letter")->required();
  csp->add_option("--word", opt.word_text, "source word w")->required();
  csp->add_option("--budget-nodes", opt.budget_nodes, "search node budget")->required();
  csp->add_option("--budget-depth", opt.budget_depth, "search depth budget")->required();
  csp->add_option("--fresh-x", opt.fresh_x, "fresh letter token (default x)");
  csp->add_option("--fresh-y", opt.fresh_y, "free frame letter token (default y)");
  csp->add_option("-o,--out", opt.out_path, "write the certificate here instead of stdout");
  csp->callback(run([&opt]() { return run_compile_specific(opt); }));

  // verify ----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "replay a certificate");
  verify->add_option("certificate", opt.certificate_path, "certificate JSON file")
      ->required();
  verify->callback(run([&opt]() { return run_verify(opt); }));

  // solve -----------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "bounded bidirectional equality search");
  add_source_options(solve, opt.source);
  solve->add_option("--u", opt.u_text, "left word")->required();
  solve->add_option("--v", opt.v_text, "right word")->required();
  solve->add_option("--budget-nodes", opt.budget_nodes, "search node budget")->required();
  solve->add_option("--budget-depth", opt.budget_depth, "search depth budget")->required();
  solve->add_option("-o,--out", opt.out_path, "write the certificate here instead of stdout");
  solve->callback(run([&opt]() { return run_solve(opt); }));

  // rewrite ---------------------------------------------------------------
  auto* rewrite = app.add_subcommand("rewrite", "string rewriting tools");
  rewrite->require_subcommand(1);
  auto* rnorm = rewrite->add_subcommand("normalize", "leftmost-first normalization");
  rnorm->add_option("--system", opt.system_path, "rewriting system file")->required();
  rnorm->add_option("--word", opt.word_text, "word to normalize")->required();
  rnorm->add_option("--max-steps", opt.max_steps, "rewrite step budget")->required();
  rnorm->callback(run([&opt]() { return run_rewrite_normalize(opt); }));
  auto* rcp = rewrite->add_subcommand("critical-pairs", "enumerate critical pairs");
  rcp->add_option("--system", opt.system_path, "rewriting system file")->required();
  rcp->callback(run([&opt]() { return run_rewrite_critical_pairs(opt); }));
  auto* rconf = rewrite->add_subcommand("confluence", "check local confluence");
  rconf->add_option("--system", opt.system_path, "rewriting system file")->required();
  rconf->add_option("--join-budget", opt.join_budget, "normalization budget per branch")
      ->required();
  rconf->callback(run([&opt]() { return run_rewrite_confluence(opt); }));
  auto* rcomp = rewrite->add_subcommand("complete", "Knuth-Bendix completion");
  add_source_options(rcomp, opt.source);
  rcomp->add_option("--order", opt.order,
                    "alphabet tokens from smallest to largest (default: given order)");
  rcomp->add_option("--max-rules", opt.max_rules, "rule count budget")->required();
  rcomp->add_option("--max-pair-norms", opt.max_pair_norms,
                    "pair normalization budget")
      ->required();
  rcomp->callback(run([&opt]() { return run_rewrite_complete(opt); }));
  auto* rterm = rewrite->add_subcommand("termination", "termination from one word");
  rterm->add_option("--system", opt.system_path, "rewriting system file")->required();
  rterm->add_option("--word", opt.word_text, "start word")->required();
  rterm->add_option("--max-closure", opt.max_closure, "distinct word budget")->required();
  rterm->callback(run([&opt]() { return run_rewrite_termination(opt); }));

  // classify ----------------------------------------------------------------
  auto* cls = app.add_subcommand("classify", "structural presentation classes");
  add_source_options(cls, opt.source);
  cls->callback(run([&opt]() { return run_classify(opt); }));

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    log_error(e.what());
    log_note("run with --help for usage");
    return kUsage;
  } catch (std::exception const& e) {
    log_error(e.what());
    return kUsage;
  }
  return result;
}
