// acceptance -- end-to-end acceptance checks for the stylus library and CLI.
//
// Each criterion is a self-contained scenario with its own wall-clock limit;
// the binary prints one [PASS]/[FAIL] line per criterion and exits 0 only
// when every criterion passes.  Where a scenario validates derivations it
// replays them twice: once through the library checker and once through an
// independent splice-based replayer defined here, so a checker bug cannot
// vouch for itself.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include <json.hpp>

#include "stylus/catalog.hpp"
#include "stylus/certificate_io.hpp"
#include "stylus/codec.hpp"
#include "stylus/compiler.hpp"
#include "stylus/derivation.hpp"
#include "stylus/pipeline.hpp"
#include "stylus/presentation.hpp"
#include "stylus/rewrite.hpp"
#include "stylus/word.hpp"

namespace {

using namespace stylus;
using nlohmann::json;

std::string g_cli_path;
std::string g_goldens_dir;

// ---- infrastructure ---------------------------------------------------------

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with `args`, capturing stdout; stderr is discarded so
// diagnostic notes do not interleave with payload comparisons.
RunResult run_cli(std::string const& args) {
  std::string command = g_cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + command);
  std::string out;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
  int status = pclose(pipe);
  RunResult result;
  result.out = std::move(out);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string golden(std::string const& name) { return read_file(g_goldens_dir + "/" + name); }

// Collects failures within one criterion; every failed expectation is
// reported, not just the first.
struct Scenario {
  bool ok = true;

  bool require(bool condition, std::string const& what) {
    if (!condition) {
      ok = false;
      std::cerr << "       failed: " << what << '\n';
    }
    return condition;
  }

  bool require_equal(std::string const& got, std::string const& want,
                     std::string const& what) {
    if (got == want) return true;
    ok = false;
    std::cerr << "       failed: " << what << "\n         want: " << json(want)
              << "\n          got: " << json(got) << '\n';
    return false;
  }
};

// Independent certificate replay: direct vector surgery, no calls into the
// derivation checker.  Returns the index of the first failing step,
// steps.size() when all steps apply but the end word differs, or nullopt
// when the derivation is clean.
std::optional<std::size_t> replay_failure(Derivation const& d) {
  std::vector<Symbol> w = d.start.letters;
  for (std::size_t index = 0; index < d.steps.size(); ++index) {
    DerivationStep const& step = d.steps[index];
    if (step.relation >= d.presentation.relations.size()) return index;
    Relation const& rel = d.presentation.relations[step.relation];
    bool const forward = step.direction == StepDirection::Forward;
    Word const& from = forward ? rel.lhs : rel.rhs;
    Word const& to = forward ? rel.rhs : rel.lhs;
    if (step.position > w.size() || from.size() > w.size() - step.position)
      return index;
    if (!std::equal(from.begin(), from.end(), w.begin() + step.position))
      return index;
    std::vector<Symbol> next(w.begin(), w.begin() + step.position);
    next.insert(next.end(), to.begin(), to.end());
    next.insert(next.end(), w.begin() + step.position + from.size(), w.end());
    w = std::move(next);
  }
  if (w != d.end.letters) return d.steps.size();
  return std::nullopt;
}

// Both validation routes must agree that the derivation is clean.
bool doubly_valid(Scenario& s, Derivation const& d, std::string const& what) {
  bool const checker = check_derivation(d).ok;
  bool const replayer = !replay_failure(d).has_value();
  s.require(checker, what + ": library checker rejects it");
  s.require(replayer, what + ": independent replay rejects it");
  return checker && replayer;
}

bool is_prefix(Word const& prefix, Word const& w) {
  return prefix.size() <= w.size() &&
         std::equal(prefix.begin(), prefix.end(), w.begin());
}

// ---- criterion 1: golden two-letter pipeline for the bicyclic monoid --------

bool criterion_pipeline_goldens() {
  Scenario s;
  struct Case {
    char const* emit;
    char const* file;
  };
  for (Case c : {Case{"m1", "bicyclic_m1.txt"}, Case{"m1o", "bicyclic_m1o.txt"},
                 Case{"record", "bicyclic_record.txt"}}) {
    RunResult r = run_cli(std::string("pipeline build --name bicyclic --i 0 "
                                      "--mode paper --emit ") +
                          c.emit);
    s.require(r.exit_code == 0, std::string("pipeline build --emit ") + c.emit +
                                    " exited with " + std::to_string(r.exit_code));
    s.require_equal(r.out, golden(c.file),
                    std::string("pipeline --emit ") + c.emit + " output vs " + c.file);
  }
  return s.ok;
}

// ---- criterion 2: catalog text goldens and the cce letter count -------------

bool criterion_catalog_goldens() {
  Scenario s;
  struct Case {
    char const* args;
    char const* file;
  };
  for (Case c : {
           Case{"tseytin --i 0", "catalog_tseytin_i0.txt"},
           Case{"tseytin --i 1", "catalog_tseytin_i1.txt"},
           Case{"tseytin-specific --i 1 --j 0", "catalog_tseytin_specific_i1_j0.txt"},
           Case{"scott", "catalog_scott.txt"},
           Case{"matiyasevich5", "catalog_matiyasevich5.txt"},
           Case{"makanin5", "catalog_makanin5.txt"},
           Case{"matiyasevich3", "catalog_matiyasevich3.txt"},
           Case{"tseytin-cce", "catalog_tseytin_cce.txt"},
       }) {
    RunResult r = run_cli(std::string("catalog show ") + c.args);
    s.require(r.exit_code == 0, std::string("catalog show ") + c.args +
                                    " exited with " + std::to_string(r.exit_code));
    s.require_equal(r.out, golden(c.file),
                    std::string("catalog show ") + c.args + " output vs " + c.file);
  }

  auto const base = catalog::letter_statistics(catalog::tseytin(0).presentation);
  auto const cce = catalog::letter_statistics(
      catalog::named_entry(catalog::Named::TseytinCCE).presentation);
  s.require(base.letter_occurrence_count == 33,
            "tseytin(0) letter count != 33: got " +
                std::to_string(base.letter_occurrence_count));
  s.require(cce.letter_occurrence_count == 32,
            "tseytin-cce letter count != 32: got " +
                std::to_string(cce.letter_occurrence_count));
  s.require(base.letter_occurrence_count - cce.letter_occurrence_count == 1,
            "cce variant does not save exactly one letter");
  return s.ok;
}

// ---- criterion 3: encode/decode and factorization round trips ---------------

bool criterion_codec_roundtrip() {
  Scenario s;
  std::mt19937 rng(0x5eed0003);
  Alphabet const& code = code_alphabet();
  Symbol const a = *code.index_of("a");
  Symbol const b = *code.index_of("b");

  for (int trial = 0; trial < 1000 && s.ok; ++trial) {
    std::size_t const n = 1 + rng() % 10;
    std::vector<std::string> tokens;
    for (std::size_t k = 0; k < n; ++k) tokens.push_back("g" + std::to_string(k));

    std::vector<std::uint32_t> pool(31);
    for (std::uint32_t k = 0; k <= 30; ++k) pool[k] = k;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<std::uint32_t> ranks(pool.begin(), pool.begin() + n);

    RankEncoder enc = make_rank_encoder(Alphabet{tokens}, ranks);

    Word w;
    std::size_t const length = rng() % 21;
    for (std::size_t k = 0; k < length; ++k)
      w.push_back(static_cast<Symbol>(rng() % n));

    Word const coded = encode_word(enc, w);
    s.require(decode_word(enc, coded) == w,
              "decode(encode(w)) != w on trial " + std::to_string(trial));

    std::vector<std::uint32_t> const blocks = factorize_over_rank_code(coded);
    Word rebuilt;
    rebuilt.push_back(a);
    for (std::uint32_t r : blocks) {
      for (std::uint32_t k = 0; k < r; ++k) rebuilt.push_back(b);
      rebuilt.push_back(a);
    }
    s.require(rebuilt == coded,
              "re-concatenated factorization != encoded word on trial " +
                  std::to_string(trial));
  }
  return s.ok;
}

// ---- criterion 4: stylus sweeps for every short data word -------------------

bool criterion_stylus_sweeps() {
  Scenario s;
  Presentation const target = catalog::tseytin(0).presentation;
  Symbol const e = *target.alphabet.index_of("e");

  std::size_t cases = 0;
  for (std::size_t len = 1; len <= 6; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      Word X;
      for (std::size_t k = 0; k < len; ++k)
        X.push_back(static_cast<Symbol>((bits >> k) & 1));  // a = 0, b = 1
      ++cases;

      Derivation const d = compile_stylus(target, X);
      std::string const label = "stylus X=" + print_word(target.alphabet, X);
      doubly_valid(s, d, label);

      Word expected;
      expected.push_back(e);
      for (Symbol x : X) expected.push_back(static_cast<Symbol>(x + 2));  // c = 2, d = 3
      expected.append(X);
      s.require(d.end == expected, label + ": endpoint is not e sigma(X) X");
      s.require(d.steps.size() <= len * (len + 1) / 2,
                label + ": step count exceeds |X|(|X|+1)/2");
    }
  }
  s.require(cases == 126, "expected 126 data words, enumerated " + std::to_string(cases));
  return s.ok;
}

// ---- criterion 5: compiled equality certificates for the bicyclic monoid ----

bool criterion_compile_equality() {
  Scenario s;
  Presentation const bicyclic = catalog::named_entry(catalog::Named::Bicyclic).presentation;
  PipelineBundle bundle = build_pipeline(bicyclic, 0, RecordMode::CompilerSufficient);
  CompileContext const ctx = make_compile_context(std::move(bundle), catalog::tseytin(0));
  Word const record = record_in_target(ctx.bundle);

  for (char const* u_text : {"b c", "b b c c"}) {
    Word const u = parse_word(bicyclic.alphabet, u_text);
    Word const v = Word::epsilon();
    auto witness = search_equality(bicyclic, u, v, SearchBudget{100000, 4});
    if (!s.require(witness.has_value(),
                   std::string("no witness for ") + u_text + " => 1 within depth 4"))
      continue;

    Derivation const compiled = compile_equality(ctx, *witness);
    std::string const label = std::string("compiled certificate for ") + u_text + " => 1";
    doubly_valid(s, compiled, label);
    s.require(compiled.start == work_word_for(ctx, u),
              label + ": start is not S . encode(interleaved u)");
    s.require(compiled.end == work_word_for(ctx, v),
              label + ": end is not S . encode(interleaved 1)");
    s.require(is_prefix(record, compiled.start),
              label + ": record is not a prefix of the start word");
    s.require(is_prefix(record, compiled.end),
              label + ": record is not a prefix of the end word");
  }
  return s.ok;
}

// ---- criterion 6: the specific-word compilation ends at a a a ---------------

bool criterion_compile_specific() {
  Scenario s;
  Presentation const bicyclic = catalog::named_entry(catalog::Named::Bicyclic).presentation;
  Word const u = parse_word(bicyclic.alphabet, "b c");
  auto witness = search_equality(bicyclic, u, Word::epsilon(), SearchBudget{100000, 4});
  if (!s.require(witness.has_value(), "no witness for b c => 1 within depth 4"))
    return false;

  PipelineBundle bundle =
      build_specific_pipeline(bicyclic, 1, 0, RecordMode::CompilerSufficient);
  CompileContext const ctx =
      make_compile_context(std::move(bundle), catalog::tseytin_specific(1, 0));
  Derivation const compiled = compile_specific(ctx, *witness);

  doubly_valid(s, compiled, "specific-word certificate");
  Word const specific = parse_word(ctx.target.presentation.alphabet, "a a a");
  s.require(compiled.end == specific,
            "specific-word certificate does not end at a a a: got " +
                print_word(ctx.target.presentation.alphabet, compiled.end));
  return s.ok;
}

// ---- criterion 7: completion of the free commutative monoid -----------------

bool criterion_knuth_bendix() {
  Scenario s;
  Presentation const commutative =
      catalog::named_entry(catalog::Named::Commutative).presentation;
  Symbol const a = *commutative.alphabet.index_of("a");
  Symbol const b = *commutative.alphabet.index_of("b");

  SymbolRanking order;  // b below a
  order.rank_of.assign(commutative.alphabet.size(), 0);
  order.rank_of[a] = 1;
  order.rank_of[b] = 0;

  CompletionResult const completion =
      complete_knuth_bendix(commutative, order, CompletionBudget{16, 100000});
  s.require(completion.status == CompletionStatus::Completed,
            "completion did not finish: " + completion.reason);
  s.require(completion.system.rules.size() == 1,
            "completed system has " + std::to_string(completion.system.rules.size()) +
                " rules, expected exactly one");
  if (completion.system.rules.size() == 1) {
    RewriteRule const& rule = completion.system.rules.front();
    s.require(rule.lhs == Word{{a, b}} && rule.rhs == Word{{b, a}},
              "completed rule is not a b -> b a");
  }
  if (!s.ok) return false;

  // Every word over {a, b} of length <= 6, in one fixed order.
  std::vector<Word> words;
  words.push_back(Word::epsilon());
  for (std::size_t len = 1; len <= 6; ++len)
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      Word w;
      for (std::size_t k = 0; k < len; ++k)
        w.push_back(((bits >> k) & 1) ? b : a);
      words.push_back(w);
    }
  s.require(words.size() == 127,
            "expected 127 words, enumerated " + std::to_string(words.size()));

  std::vector<Word> normal_forms;
  normal_forms.reserve(words.size());
  for (Word const& w : words) {
    NormalizeResult nf = normalize(completion.system, w, 10000);
    s.require(nf.irreducible, "normalization budget exhausted on " +
                                  print_word(commutative.alphabet, w));
    normal_forms.push_back(nf.word);
  }

  SearchBudget const budget{1000000, 14};
  std::size_t disagreements = 0;
  for (std::size_t iu = 0; iu < words.size() && disagreements < 5; ++iu) {
    for (std::size_t iv = 0; iv < words.size(); ++iv) {
      bool const nf_equal = normal_forms[iu] == normal_forms[iv];
      bool const found =
          search_equality(commutative, words[iu], words[iv], budget).has_value();
      bool const counts_equal =
          count_occurrences(words[iu], a) == count_occurrences(words[iv], a) &&
          count_occurrences(words[iu], b) == count_occurrences(words[iv], b);
      if (nf_equal != found || found != counts_equal) {
        ++disagreements;
        s.require(false, "equivalence routes disagree on (" +
                             print_word(commutative.alphabet, words[iu]) + ", " +
                             print_word(commutative.alphabet, words[iv]) +
                             "): normal forms " + (nf_equal ? "equal" : "differ") +
                             ", search " + (found ? "found" : "missed") +
                             ", letter counts " + (counts_equal ? "equal" : "differ"));
        if (disagreements >= 5) break;
      }
    }
  }
  return s.ok;
}

// ---- criterion 8: critical pairs and termination ----------------------------

bool criterion_rewrite_analysis() {
  Scenario s;
  Alphabet const ab{{"a", "b"}};
  Alphabet const bc{{"b", "c"}};

  RewriteSystem commute{ab, {RewriteRule{Word{{0, 1}}, Word{{1, 0}}}}};
  s.require(critical_pairs(commute).empty(),
            "a b -> b a unexpectedly has critical pairs");

  RewriteSystem cancel{bc, {RewriteRule{Word{{0, 1}}, Word::epsilon()}}};
  s.require(critical_pairs(cancel).empty(),
            "b c -> 1 unexpectedly has critical pairs");
  s.require(check_local_confluence(cancel, 1000).status ==
                LocalConfluenceStatus::LocallyConfluent,
            "b c -> 1 not reported locally confluent");

  RewriteSystem loop{ab, {RewriteRule{Word{{0}}, Word{{0}}}}};
  TerminationVerdict const spin =
      decide_termination_on_word(loop, Word{{0}}, 100);
  s.require(spin.status == TerminationStatus::NonTerminating,
            "a -> a on a not reported non-terminating");
  if (s.require(spin.cycle_witness.has_value(),
                "non-termination verdict carries no cycle witness")) {
    doubly_valid(s, *spin.cycle_witness, "cycle witness");
    s.require(spin.cycle_witness->start == spin.cycle_witness->end,
              "cycle witness endpoints differ");
    s.require(!spin.cycle_witness->steps.empty(), "cycle witness has no steps");
  }

  std::size_t words = 0;
  for (std::size_t len = 0; len <= 8; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      Word w;
      for (std::size_t k = 0; k < len; ++k)
        w.push_back(static_cast<Symbol>((bits >> k) & 1));
      ++words;
      TerminationVerdict const verdict = decide_termination_on_word(commute, w, 100000);
      if (verdict.status != TerminationStatus::Terminates) {
        s.require(false, "a b -> b a reported non-terminating on " +
                             print_word(ab, w));
        return s.ok;
      }
    }
  }
  s.require(words == 511, "expected 511 words, enumerated " + std::to_string(words));
  return s.ok;
}

// ---- criterion 9: derivation algebra preserves validity ---------------------

bool criterion_derivation_algebra() {
  Scenario s;
  Presentation const commutative =
      catalog::named_entry(catalog::Named::Commutative).presentation;
  std::mt19937 rng(0x5eed0009);
  SearchBudget const budget{1000000, 20};

  auto random_word = [&](std::size_t max_len, std::size_t min_len) {
    Word w;
    std::size_t const len = min_len + rng() % (max_len - min_len + 1);
    for (std::size_t k = 0; k < len; ++k)
      w.push_back(static_cast<Symbol>(rng() % 2));
    return w;
  };

  for (int trial = 0; trial < 500 && s.ok; ++trial) {
    Word const u = random_word(8, 1);
    Word v = u;
    std::shuffle(v.letters.begin(), v.letters.end(), rng);
    Word w = u;
    std::shuffle(w.letters.begin(), w.letters.end(), rng);

    auto d1 = search_equality(commutative, u, v, budget);
    auto d2 = search_equality(commutative, v, w, budget);
    std::string const tag = " on trial " + std::to_string(trial);
    if (!s.require(d1.has_value() && d2.has_value(),
                   "equal-count words not connected by search" + tag))
      break;

    Derivation const inverted = invert_derivation(*d1);
    doubly_valid(s, inverted, "inverted derivation" + tag);
    s.require(inverted.start == v && inverted.end == u,
              "inversion does not swap endpoints" + tag);
    s.require(inverted.steps.size() == d1->steps.size(),
              "inversion changes the step count" + tag);

    Word const left = random_word(3, 0);
    Word const right = random_word(3, 0);
    Derivation const framed = embed_in_context(*d1, left, right);
    doubly_valid(s, framed, "embedded derivation" + tag);
    s.require(framed.start == concat(left, u, right) &&
                  framed.end == concat(left, v, right),
              "embedding produces wrong endpoints" + tag);
    s.require(framed.steps.size() == d1->steps.size(),
              "embedding changes the step count" + tag);

    Derivation const chained = concat_derivations(*d1, *d2);
    doubly_valid(s, chained, "concatenated derivation" + tag);
    s.require(chained.start == u && chained.end == w,
              "concatenation produces wrong endpoints" + tag);
    s.require(chained.steps.size() == d1->steps.size() + d2->steps.size(),
              "concatenation step count is not the sum" + tag);
  }
  return s.ok;
}

// ---- criterion 10: tampered certificates are rejected at the right step -----

bool criterion_tamper_fuzz() {
  Scenario s;
  Presentation const commutative =
      catalog::named_entry(catalog::Named::Commutative).presentation;
  std::mt19937 rng(0x5eed000a);
  SearchBudget const budget{1000000, 20};

  // A pool of valid certificates with at least one step each.
  std::vector<Derivation> pool;
  while (pool.size() < 25) {
    Word u;
    std::size_t const len = 2 + rng() % 7;
    for (std::size_t k = 0; k < len; ++k)
      u.push_back(static_cast<Symbol>(rng() % 2));
    Word v = u;
    std::shuffle(v.letters.begin(), v.letters.end(), rng);
    if (v == u) continue;
    auto d = search_equality(commutative, u, v, budget);
    if (!d || d->steps.empty()) continue;
    pool.push_back(std::move(*d));
  }

  char tmp_template[] = "/tmp/stylus-acceptance-XXXXXX";
  char const* tmp_dir = mkdtemp(tmp_template);
  if (!s.require(tmp_dir != nullptr, "mkdtemp failed")) return false;
  std::string const cert_path = std::string(tmp_dir) + "/tampered.json";

  int tampered = 0;
  int guard = 0;
  while (tampered < 200 && s.ok && guard < 4000) {
    ++guard;
    Derivation mutant = pool[rng() % pool.size()];
    std::size_t const which = rng() % mutant.steps.size();
    char const* kind = "";

    switch (tampered % 4) {
      case 0: {  // relation index
        kind = "relation";
        std::size_t const bump = 1 + rng() % (mutant.presentation.relations.size() + 1);
        mutant.steps[which].relation += bump;  // may leave or stay in range
        break;
      }
      case 1: {  // direction
        kind = "direction";
        auto& dir = mutant.steps[which].direction;
        dir = dir == StepDirection::Forward ? StepDirection::Reverse
                                            : StepDirection::Forward;
        break;
      }
      case 2: {  // position
        kind = "position";
        std::size_t const old = mutant.steps[which].position;
        std::size_t candidate = rng() % (mutant.start.size() + 3);
        if (candidate == old) candidate = old + 1;
        mutant.steps[which].position = candidate;
        break;
      }
      default: {  // end word
        kind = "end";
        if (mutant.end.empty() || rng() % 2 == 0) {
          mutant.end.push_back(static_cast<Symbol>(rng() % 2));
        } else {
          std::size_t const at = rng() % mutant.end.size();
          mutant.end.letters[at] = static_cast<Symbol>(1 - mutant.end.letters[at]);
        }
        break;
      }
    }

    std::optional<std::size_t> const expected = replay_failure(mutant);
    if (!expected) continue;  // the mutation happened to stay valid; redraw
    ++tampered;

    std::ofstream out(cert_path, std::ios::binary | std::ios::trunc);
    out << certificate_to_json(mutant);
    out.close();

    RunResult const r = run_cli("verify " + cert_path);
    std::string const tag = std::string(" (tamper #") + std::to_string(tampered) +
                            ", field " + kind + ")";
    if (!s.require(r.exit_code == 1,
                   "verify exited with " + std::to_string(r.exit_code) +
                       ", expected 1" + tag))
      continue;
    json const report = json::parse(r.out, nullptr, false);
    if (!s.require(!report.is_discarded(), "verify emitted unparsable JSON" + tag))
      continue;
    s.require(report.at("ok").get<bool>() == false, "verify reported ok" + tag);
    s.require(report.at("failed_step").get<std::size_t>() == *expected,
              "verify failed_step " + report.at("failed_step").dump() +
                  " != independent replay index " + std::to_string(*expected) + tag);
  }
  s.require(tampered == 200,
            "only produced " + std::to_string(tampered) + " effective tamperings");

  std::remove(cert_path.c_str());
  rmdir(tmp_dir);
  return s.ok;
}

// ---- runner ------------------------------------------------------------------

struct Criterion {
  int number;
  char const* label;
  double limit_seconds;
  std::function<bool()> run;
};

}  // namespace

int main(int argc, char** argv) {
  for (int k = 1; k + 1 < argc; k += 2) {
    std::string const flag = argv[k];
    if (flag == "--cli")
      g_cli_path = argv[k + 1];
    else if (flag == "--goldens")
      g_goldens_dir = argv[k + 1];
  }
  if (g_cli_path.empty() || g_goldens_dir.empty()) {
    std::cerr << "usage: acceptance --cli <stylus binary> --goldens <dir>\n";
    return 2;
  }

  std::vector<Criterion> const criteria = {
      {1, "bicyclic pipeline output matches the goldens", 1.0, criterion_pipeline_goldens},
      {2, "catalog text and letter counts match the goldens", 1.0, criterion_catalog_goldens},
      {3, "encode/decode and factorization round-trip 1000 random words", 5.0,
       criterion_codec_roundtrip},
      {4, "stylus sweeps are valid and tight for all 126 short data words", 5.0,
       criterion_stylus_sweeps},
      {5, "bicyclic equalities compile to verifiable certificates", 30.0,
       criterion_compile_equality},
      {6, "specific-word compilation lands exactly on a a a", 30.0,
       criterion_compile_specific},
      {7, "completion and search agree on every short commutative pair", 60.0,
       criterion_knuth_bendix},
      {8, "critical pairs and termination verdicts are exact", 10.0,
       criterion_rewrite_analysis},
      {9, "invert/embed/concat preserve validity on 500 random derivations", 10.0,
       criterion_derivation_algebra},
      {10, "200 single-field tamperings fail verification at the right step", 5.0,
       criterion_tamper_fuzz},
  };

  bool all_ok = true;
  for (Criterion const& c : criteria) {
    auto const begin = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run();
    } catch (std::exception const& ex) {
      std::cerr << "       exception: " << ex.what() << '\n';
      ok = false;
    }
    double const elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    if (elapsed > c.limit_seconds) {
      std::cerr << "       over time budget: " << elapsed << "s > " << c.limit_seconds
                << "s\n";
      ok = false;
    }
    std::printf("[%s] %2d %s (%.2fs / %.0fs)\n", ok ? "PASS" : "FAIL", c.number,
                c.label, elapsed, c.limit_seconds);
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
