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

// Loading a lexicon directory together with its root inventory and manifest.
//
// A lexicon directory holds the XMODEL documents (*.xml), bundles.tsv,
// roots.txt (one root per line, '#' starts a comment) and MANIFEST, a list of
// "name count" lines giving the expected classes, components, rules_classes,
// rules, properties and roots.

#ifndef TMORPH_SEED_HPP_
#define TMORPH_SEED_HPP_

#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tmorph/compiler.hpp"
#include "tmorph/lexicon.hpp"
#include "tmorph/scheme.hpp"

namespace tmorph {

inline constexpr std::string_view kRootsFile = "roots.txt";
inline constexpr std::string_view kManifestFile = "MANIFEST";

inline std::vector<Root> parse_roots(std::string_view text) {
  std::vector<Root> roots;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    for (std::string r; fields >> r;) roots.emplace_back(r);
  }
  return roots;
}

inline std::vector<Root> load_roots(const std::filesystem::path& path) {
  return parse_roots(read_file(path));
}

inline std::map<std::string, std::uint64_t> parse_manifest(std::string_view text) {
  std::map<std::string, std::uint64_t> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string name;
    std::uint64_t n = 0;
    if (!(fields >> name) || name[0] == '#') continue;
    if (!(fields >> n)) {
      throw LexiconError(LexiconError::Kind::kInvalidAttribute, "bad manifest line: " + line);
    }
    out[name] = n;
  }
  return out;
}

inline LexiconCounts count_lexicon(const Lexicon& lex, std::size_t roots) {
  LexiconCounts c;
  c.classes = lex.classes.size();
  c.components = lex.component_count();
  c.rules_classes = lex.rules_classes.size();
  c.rules = lex.rule_count();
  c.properties = lex.properties.size();
  c.roots = roots;
  return c;
}

inline std::map<std::string, std::uint64_t> counts_by_name(const LexiconCounts& c) {
  return {{"classes", c.classes},   {"components", c.components}, {"rules_classes", c.rules_classes},
          {"rules", c.rules},       {"properties", c.properties}, {"roots", c.roots}};
}

struct SeedBundle {
  Lexicon lexicon;
  std::vector<Root> roots;
  std::map<std::string, std::uint64_t> manifest;
};

// Parses and validates a lexicon directory; violations are raised as a
// CompileError of kind kInvalidLexicon.
inline SeedBundle load_seed(const std::filesystem::path& dir) {
  SeedBundle seed;
  seed.lexicon = load_lexicon_dir(dir);
  if (auto roots = dir / kRootsFile; std::filesystem::exists(roots)) seed.roots = load_roots(roots);
  if (auto m = dir / kManifestFile; std::filesystem::exists(m)) seed.manifest = parse_manifest(read_file(m));
  if (auto report = validate_lexicon(seed.lexicon); !report.ok()) {
    std::string msg = "lexicon " + dir.string() + " is invalid:";
    for (const auto& v : report.violations) msg += "\n  " + v.str();
    throw CompileError(CompileError::Kind::kInvalidLexicon, msg);
  }
  return seed;
}

}  // namespace tmorph

#endif  // TMORPH_SEED_HPP_
