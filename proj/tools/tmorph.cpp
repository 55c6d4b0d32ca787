// Copyright 2026 The tmorph Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tmorph: compile a lexicon, then analyze or generate words with it.
//
// Exit status: 0 on success, 1 when analyze finds none of its input words,
// 2 on any error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tmorph/tmorph.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNothingFound = 1;
constexpr int kError = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  return tmorph::read_file(path);
}

int run_compile(const std::string& lexicon, const std::string& roots_file, const std::string& out,
                const tmorph::CompileOptions& opts) {
  tmorph::SeedBundle seed = tmorph::load_seed(lexicon);
  std::vector<tmorph::Root> roots = tmorph::load_roots(roots_file);
  tmorph::CompiledLexicon cl = tmorph::compile_all(seed.lexicon, roots, opts);
  tmorph::save_cache(out, cl);
  std::size_t states = 0;
  for (const auto& [name, a] : cl.categories) states += a.size();
  std::cerr << "compiled " << cl.categories.size() << " categories (" << states << " states) from "
            << cl.counts.rules << " rules and " << roots.size() << " roots into " << out << "\n";
  return kOk;
}

int run_analyze(const std::string& cache, const std::string& script, const std::string& format,
                const std::string& input) {
  tmorph::CompiledLexicon cl = tmorph::load_cache(cache);
  tmorph::Script s = script == "arabic"  ? tmorph::Script::kArabic
                     : script == "latin" ? tmorph::Script::kLatin
                                         : tmorph::Script::kAuto;
  tmorph::AnalysisReport report = tmorph::analyze_text(cl, read_input(input), s);
  std::cout << tmorph::export_report(report, format == "json" ? tmorph::Format::kJson : tmorph::Format::kTsv);
  for (const auto& w : report.not_found) std::cerr << "not found: " << w << "\n";
  return report.rows.empty() && !report.not_found.empty() ? kNothingFound : kOk;
}

int run_generate(const std::string& cache, const tmorph::GenerateConstraints& c, std::size_t max_len,
                 const std::string& format) {
  tmorph::CompiledLexicon cl = tmorph::load_cache(cache);
  tmorph::AnalysisReport report;
  for (auto& g : tmorph::generate(cl, c, max_len)) report.rows.push_back(std::move(g.analysis));
  std::cout << tmorph::export_report(report, format == "json" ? tmorph::Format::kJson : tmorph::Format::kTsv);
  return kOk;
}

int run_validate(const std::string& dir) {
  tmorph::Lexicon lex = tmorph::load_lexicon_dir(dir);
  tmorph::ValidationReport report = tmorph::validate_lexicon(lex);
  for (const auto& v : report.violations) std::cout << v.str() << "\n";
  if (!report.ok()) {
    std::cerr << report.violations.size() << " violation(s)\n";
    return kError;
  }
  std::cout << "ok: " << lex.classes.size() << " classes, " << lex.component_count() << " components, "
            << lex.rule_count() << " rules\n";
  return kOk;
}

int run_stats(const std::string& cache) {
  tmorph::CompiledLexicon cl = tmorph::load_cache(cache);
  std::cout << "category\tstates\taccepting\ttransitions\tpayloads\tdeterministic\n";
  for (const auto& [name, a] : cl.categories) {
    std::cout << name << "\t" << a.size() << "\t" << a.accept_count() << "\t" << a.transition_count() << "\t"
              << a.payload_count() << "\t" << (a.is_deterministic() ? "yes" : "no") << "\n";
  }
  for (const auto& [name, n] : tmorph::counts_by_name(cl.counts)) std::cout << name << " " << n << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arabic morphological analysis and generation over compiled lexicons"};
  app.require_subcommand(1);

  std::string lexicon, roots, out, cache, script = "auto", format = "tsv", input = "-";
  bool determinize = false, minimize = false;

  auto* compile = app.add_subcommand("compile", "Compile a lexicon directory into a cache file");
  compile->add_option("--lexicon", lexicon, "Lexicon directory")->required()->check(CLI::ExistingDirectory);
  compile->add_option("--roots", roots, "Root list, one root per line")->required()->check(CLI::ExistingFile);
  compile->add_option("--out", out, "Cache file to write")->required();
  compile->add_flag("--determinize", determinize, "Determinize each category automaton");
  compile->add_flag("--minimize", minimize, "Minimize each category automaton (implies --determinize)");

  auto* analyze = app.add_subcommand("analyze", "Analyze words from a file or standard input");
  analyze->add_option("--compiled", cache, "Cache file")->required();
  analyze->add_option("--script", script, "Input script")->check(CLI::IsMember({"auto", "arabic", "latin"}));
  analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  analyze->add_option("input", input, "Input file, '-' for standard input");

  tmorph::GenerateConstraints constraints;
  std::string root, scheme, category, prefix, suffix;
  std::size_t max_len = 12;
  auto* gen = app.add_subcommand("generate", "List the words matching the given constraints");
  gen->add_option("--compiled", cache, "Cache file")->required();
  gen->add_option("--root", root, "Root letters");
  gen->add_option("--scheme", scheme, "Stem template or original scheme");
  gen->add_option("--descriptor", constraints.descriptors, "Required descriptor code (repeatable)");
  gen->add_option("--category", category, "Category name or part of speech");
  gen->add_option("--prefix", prefix, "Required prefix");
  gen->add_option("--suffix", suffix, "Required suffix");
  gen->add_option("--max-len", max_len, "Longest word to list")->required()->check(CLI::PositiveNumber);
  gen->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));

  auto* validate = app.add_subcommand("validate", "Check a lexicon directory for violations");
  validate->add_option("--lexicon", lexicon, "Lexicon directory")->required();

  auto* stats = app.add_subcommand("stats", "Print automaton sizes and lexicon counts of a cache file");
  stats->add_option("--compiled", cache, "Cache file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*compile) return run_compile(lexicon, roots, out, {determinize || minimize, minimize});
    if (*analyze) return run_analyze(cache, script, format, input);
    if (*gen) {
      auto opt = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional<std::string>(s); };
      constraints.root = opt(root);
      constraints.scheme = opt(scheme);
      constraints.category = opt(category);
      constraints.prefix = opt(prefix);
      constraints.suffix = opt(suffix);
      return run_generate(cache, constraints, max_len, format);
    }
    if (*validate) return run_validate(lexicon);
    if (*stats) return run_stats(cache);
  } catch (const std::exception& e) {
    std::cerr << "tmorph: error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
