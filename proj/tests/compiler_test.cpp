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

#include "tmorph/compiler.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fixtures.hpp"

namespace tmorph {
namespace {

const SeedBundle& seed() {
  static const SeedBundle s = load_seed(TMORPH_SEED_DIR);
  return s;
}

const CompiledLexicon& compiled() {
  static const CompiledLexicon cl = compile_all(seed().lexicon, seed().roots);
  return cl;
}

constexpr std::size_t kLongest = 40;

using Words = std::map<std::string, std::set<MorphPayload>>;

Words as_words(const MorphAutomaton& a) {
  Words out;
  for (auto& [w, ps] : enumerate_with_payloads(a, kLongest)) out[w] = {ps.begin(), ps.end()};
  return out;
}

// Reference expansion of one rule written directly from the lexicon: the
// Cartesian product of the selected components, with scheme templates
// filled in by hand from the root letters.
std::string fill(const std::string& templ, const std::string& root) {
  std::string out;
  std::size_t slot = 0;
  char prev = 0;
  for (char c : templ) {
    bool var = c == 'f' || c == 'c' || c == 'l';
    if (var && c == prev) {
      out += out.back();
      continue;
    }
    if (var) out += root[slot++];
    else out += c;
    prev = var ? c : 0;
  }
  return out;
}

std::size_t slots(const std::string& templ) {
  std::size_t n = 0;
  char prev = 0;
  for (char c : templ) {
    bool var = c == 'f' || c == 'c' || c == 'l';
    if (var && c != prev) ++n;
    prev = var ? c : 0;
  }
  return n;
}

Words reference_rule(const Lexicon& lex, const MorphRule& rule, const std::vector<Root>& roots) {
  auto props = property_table(lex);
  std::vector<std::pair<std::string, MorphPayload>> acc = {{"", MorphPayload{}}};
  for (const auto& m : rule.morphemes) {
    const MorphClass& cls = require_class(lex, m.class_name());
    std::vector<std::pair<std::string, MorphPayload>> options;
    for (std::size_t i : select_components(lex, m)) {
      const MorphComponent& comp = cls.components[i];
      Segment seg;
      seg.cls = cls.name;
      seg.component = comp.surface;
      seg.role = role_of(cls.kind);
      seg.templatic = cls.kind == ClassKind::kScheme;
      seg.has_ref = cls.ref.has_value();
      if (cls.ref && comp.key) {
        for (const auto& o : require_class(lex, *cls.ref).components) {
          if (o.id == comp.key) seg.originals.push_back(o.surface);
        }
      }
      MorphPayload p;
      p.descriptors = effective_descriptors(lex, cls, comp);
      if (seg.templatic) {
        for (const Root& r : roots) {
          if (r.arity() != slots(comp.surface)) continue;
          Segment s = seg;
          s.surface = fill(comp.surface, r.radicals());
          s.root = r.radicals();
          MorphPayload q = p;
          q.segments = {s};
          options.emplace_back(s.surface, q);
        }
      } else {
        seg.surface = comp.surface;
        MorphPayload q = p;
        q.segments = {seg};
        options.emplace_back(seg.surface, q);
      }
    }
    std::vector<std::pair<std::string, MorphPayload>> next;
    for (const auto& [w, p] : acc) {
      for (const auto& [v, q] : options) {
        MorphPayload r = p;
        for (Segment s : q.segments) {
          s.offset = static_cast<std::uint32_t>(w.size());
          r.segments.push_back(s);
        }
        r.descriptors.insert(q.descriptors.begin(), q.descriptors.end());
        if (respects_exclusivity(r.descriptors, props)) next.emplace_back(w + v, r);
      }
    }
    acc = std::move(next);
  }
  Words out;
  for (auto& [w, p] : acc) {
    p.rule_id = rule.id;
    for (const auto& b : rule.idp) {
      for (const auto& d : lex.bundles.at(b)) p.descriptors.insert(d);
    }
    if (respects_exclusivity(p.descriptors, props)) out[w].insert(p);
  }
  return out;
}

TEST(CompileMorpheme, SingleSuffix) {
  const Lexicon& lex = seed().lexicon;
  MorphAutomaton a = compile_morpheme(lex, {"CasSuffixe.SCID", "un"}, {});
  auto words = as_words(a);
  ASSERT_EQ(words.size(), 1u);
  const MorphPayload& p = *words.at("un").begin();
  ASSERT_EQ(p.segments.size(), 1u);
  EXPECT_EQ(p.segments[0].role, Role::kSuffix);
  EXPECT_EQ(p.segments[0].cls, "CasSuffixe");
  EXPECT_TRUE(p.descriptors.count({"Selector", "SCID"}));
}

TEST(CompileMorpheme, UnresolvedKey) {
  try {
    compile_morpheme(seed().lexicon, {"CasSuffixe.SCID", "zz"}, {});
    FAIL();
  } catch (const CompileError& e) {
    EXPECT_EQ(e.kind(), CompileError::Kind::kUnresolvedKey);
  }
  EXPECT_THROW(compile_morpheme(seed().lexicon, {"Nowhere", std::nullopt}, {}), CompileError);
}

TEST(ExpandSchemes, TriliteralTable) {
  std::vector<Root> roots = {Root("ktb")};
  auto words = as_words(expand_schemes(seed().lexicon, "DerivedNounNTWS", roots));
  EXPECT_EQ(words.size(), 3u);
  EXPECT_TRUE(words.count("kitAb"));
  EXPECT_TRUE(words.count("maktab"));
  EXPECT_TRUE(words.count("maktUb"));
  EXPECT_EQ(words.at("maktUb").begin()->segments[0].component, "mafcUl");
  EXPECT_EQ(words.at("maktUb").begin()->segments[0].root, "ktb");
}

TEST(ExpandSchemes, EmptyRootsGiveEmptyLanguage) {
  MorphAutomaton a = expand_schemes(seed().lexicon, "OriginSchemeS", {});
  EXPECT_TRUE(enumerate_language(a, kLongest).empty());
  EXPECT_EQ(a.accept_count(), 0u);
}

TEST(ExpandSchemes, ArityFiltersRoots) {
  std::vector<Root> roots = {Root("ktb"), Root("dHrj")};
  auto words = as_words(expand_schemes(seed().lexicon, "OriginSchemeS", roots));
  // 10 triliteral templates for ktb and 2 quadriliteral ones for dHrj.
  EXPECT_EQ(words.size(), 12u);
  EXPECT_TRUE(words.count("daHraja"));
  EXPECT_TRUE(words.count("tadaHraja"));
  EXPECT_TRUE(words.count("kataba"));
  EXPECT_FALSE(words.count("dHrj"));
}

TEST(ExpandSchemes, InvalidTemplate) {
  Lexicon lex = seed().lexicon;
  lex.classes.at("DerivedNounNTWS").components.push_back({"mactab", std::nullopt, std::nullopt, {}});
  try {
    expand_schemes(lex, "DerivedNounNTWS", {Root("ktb")});
    FAIL();
  } catch (const CompileError& e) {
    EXPECT_EQ(e.kind(), CompileError::Kind::kInvalidTemplate);
  }
}

TEST(CompileRule, UnknownBundle) {
  Lexicon lex = seed().lexicon;
  MorphRule r = lex.rules_classes.at("adverbRules").rules.front();
  r.idp = {"Missing"};
  try {
    compile_rule(lex, r, {});
    FAIL();
  } catch (const CompileError& e) {
    EXPECT_EQ(e.kind(), CompileError::Kind::kUnknownBundle);
  }
}

TEST(CompileRule, NumberFixture) {
  Lexicon lex = testing::number_rules_lexicon();
  CompiledLexicon cl = compile_all(lex, {});
  ASSERT_EQ(cl.categories.size(), 1u);
  auto words = as_words(cl.categories.at("noun.particular"));
  ASSERT_EQ(words.size(), 2u);
  const MorphPayload& un = *words.at("wAHidun").begin();
  EXPECT_EQ(un.rule_id, "rule_1");
  EXPECT_TRUE(un.has_code("Ind"));
  EXPECT_TRUE(un.has_code("Raf"));
  const MorphPayload& an = *words.at("wAHidan").begin();
  EXPECT_EQ(an.rule_id, "rule_2");
  EXPECT_TRUE(an.has_code("NaS"));
  EXPECT_FALSE(an.has_code("Raf"));
}

// Every seed rule compiles to exactly the reference product.
TEST(CompileRule, MatchesReferenceProductForEverySeedRule) {
  const auto& lex = seed().lexicon;
  std::size_t checked = 0;
  for (const auto& [name, rc] : lex.rules_classes) {
    for (const auto& rule : rc.rules) {
      Words expected = reference_rule(lex, rule, seed().roots);
      Words got = as_words(compile_rule(lex, rule, seed().roots));
      EXPECT_EQ(got.size(), expected.size()) << rule.id;
      EXPECT_TRUE(got == expected) << rule.id;
      ++checked;
    }
  }
  EXPECT_EQ(checked, lex.rule_count());
}

TEST(CompileAll, CategoriesAndIndex) {
  const auto& cl = compiled();
  EXPECT_GE(cl.categories.size(), 4u);
  for (const char* c : {"verb", "noun.derived", "noun.particular", "particle"}) {
    EXPECT_TRUE(cl.categories.count(c)) << c;
  }
  EXPECT_EQ(cl.rule_index.size(), seed().lexicon.rule_count());
  EXPECT_EQ(cl.category_of_rule("rule_1"), "noun.particular");
  EXPECT_EQ(cl.category_of_rule("prefixeSuffixes.2"), "particle");
  EXPECT_EQ(cl.counts, count_lexicon(seed().lexicon, seed().roots.size()));
}

TEST(CompileAll, RuleIdsAreDisjointAcrossCategories) {
  std::map<std::string, std::string> owner;
  for (const auto& [cat, a] : compiled().categories) {
    for (const auto& st : a.states()) {
      for (const auto& p : st.payloads) {
        auto [it, fresh] = owner.emplace(p.rule_id, cat);
        EXPECT_EQ(it->second, cat) << p.rule_id;
        EXPECT_EQ(compiled().category_of_rule(p.rule_id), cat);
      }
    }
  }
  EXPECT_EQ(owner.size(), seed().lexicon.rule_count());
}

TEST(CompileAll, PayloadsMatchTheirTemplates) {
  for (const auto& [cat, a] : compiled().categories) {
    for (const auto& st : a.states()) {
      for (const auto& p : st.payloads) {
        for (const auto& s : p.segments) {
          if (!s.templatic) continue;
          auto hits = match_scheme(s.surface, {Scheme(s.component)});
          ASSERT_EQ(hits.size(), 1u) << s.surface;
          EXPECT_EQ(hits[0].second.radicals(), s.root);
        }
      }
    }
  }
}

TEST(CompileAll, SegmentOffsetsPartitionTheWord) {
  for (const auto& [cat, a] : compiled().categories) {
    for (const auto& [word, payloads] : enumerate_with_payloads(a, kLongest)) {
      for (const auto& p : payloads) {
        std::uint32_t at = 0;
        for (const auto& s : p.segments) {
          EXPECT_EQ(s.offset, at) << word;
          EXPECT_EQ(word.substr(s.offset, s.surface.size()), s.surface);
          at = s.end();
        }
        EXPECT_EQ(at, word.size()) << word;
      }
    }
  }
}

TEST(CompileAll, InvalidLexiconIsRejected) {
  Lexicon lex = seed().lexicon;
  lex.classes.at("VerbSainMADI").components.front().key = 42;
  try {
    compile_all(lex, seed().roots);
    FAIL();
  } catch (const CompileError& e) {
    EXPECT_EQ(e.kind(), CompileError::Kind::kInvalidLexicon);
  }
}

TEST(CompileAll, DeterminizeAndMinimizeKeepLanguage) {
  const auto& lex = seed().lexicon;
  std::vector<Root> roots = {Root("ktb"), Root("xrj"), Root("dHrj")};
  CompiledLexicon plain = compile_all(lex, roots);
  CompiledLexicon det = compile_all(lex, roots, {.determinize = true});
  CompiledLexicon min = compile_all(lex, roots, {.determinize = true, .minimize = true});
  for (const auto& [cat, a] : plain.categories) {
    EXPECT_TRUE(det.categories.at(cat).is_deterministic());
    EXPECT_LE(min.categories.at(cat).size(), det.categories.at(cat).size());
    auto words = as_words(a);
    EXPECT_TRUE(as_words(det.categories.at(cat)) == words) << cat;
    EXPECT_TRUE(as_words(min.categories.at(cat)) == words) << cat;
  }
}

TEST(CompileAll, GoldenWordsLandInTheirCategories) {
  std::map<std::string, std::string> expected = {
      {"Sifrun", "noun.particular"}, {"xArijUna", "noun.derived"}, {"murtaddI", "noun.derived"},
      {"fuSiltu", "verb"},           {"euxrijtumA", "verb"},       {"maca", "particle"},
      {"eamAma", "particle"},        {"ealcA^ira", "noun.particular"}, {"bihimA", "particle"},
      {"yujAdilUna", "verb"}};
  for (const auto& [word, cat] : expected) {
    std::set<std::string> hit;
    for (const auto& [name, a] : compiled().categories) {
      if (!lookup(a, word).empty()) hit.insert(name);
    }
    EXPECT_EQ(hit, std::set<std::string>{cat}) << word;
  }
}

}  // namespace
}  // namespace tmorph
