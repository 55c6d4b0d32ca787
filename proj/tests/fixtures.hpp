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

// Shared test data: published words with their printed transliterations,
// the expected analyses of those words and a small rules fixture.

#ifndef TMORPH_TESTS_FIXTURES_HPP_
#define TMORPH_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "tmorph/tmorph.hpp"

namespace tmorph::testing {

struct PrintedWord {
  std::string arabic;
  std::string latin;  // exactly as printed next to the Arabic form
};

inline const std::vector<PrintedWord>& printed_words() {
  static const std::vector<PrintedWord> words = {
      {"صِفْرٌ", "Sifrun"},
      {"خَارِجُونَ", "xArijUna"},
      {"مُرْتَدِّي", "murtaddI"},
      {"فُصِّلْتُ", "fuSiltu"},
      {"أُخْرِجْتُمَا", "euxrijtumA"},
      {"مَعَ", "maca"},
      {"أَمَامَ", "eamAma"},
      {"العَاشِرَ", "ealCA^ira"},
      {"بِهِمَا", "bihimA"},
      {"يُجَادِلُونَ", "yujAdilUna"},
  };
  return words;
}

using Codes = std::set<std::string>;

// Expected analysis of one word, every column taken as the union over all of
// the word's analysis rows.
struct GoldenRow {
  std::string word;
  std::string pos;
  Codes original_schemes;
  Codes scheme;
  Codes gender;
  Codes person;
  Codes number;
  Codes properties;
  Codes descriptors;
  std::vector<std::string> prefixes;
  std::vector<std::string> suffixes;
};

inline const std::vector<GoldenRow>& golden_rows() {
  static const std::vector<GoldenRow> rows = {
      {"Sifrun", "noun", {}, {}, {"GMa"}, {}, {}, {"Particular Noun"}, {"V0", "Ind", "Raf"}, {}, {"un"}},
      {"xArijUna", "noun", {"facala", "facila", "facula"}, {"fAcil"}, {"GMa"}, {}, {"NPl"},
       {"Derived Noun", "accepteSC", "acceptel"}, {"efc", "Raf"}, {}, {"Una"}},
      {"murtaddI", "noun", {"eifcalla"}, {"mufcall"}, {"GMa"}, {"Pr1"}, {"NDl", "NSg"},
       {"Derived Noun", "accepteSC", "acceptel"}, {"emf", "mmi8", "KaS"}, {}, {"I"}},
      {"fuSiltu", "verb", {"facala", "facila", "facula"}, {}, {"GFe", "GMa"}, {"Pr1"}, {"NSg"},
       {"Strong Verb", "MAD", "PAS"}, {}, {}, {"tu"}},
      {"euxrijtumA", "verb", {"eafcala"}, {}, {"GFe", "GMa"}, {"Pr2"}, {"NDl"},
       {"Strong Verb", "MAD", "PAS"}, {}, {}, {"tumA"}},
      {"maca", "particle", {}, {}, {}, {}, {}, {"Particle", "acceptel"}, {"zam", "mak", "Def", "NaS"}, {}, {"a"}},
      {"eamAma", "particle", {}, {}, {}, {}, {}, {"Particle", "acceptel"}, {"mak", "Def", "NaS"}, {}, {"a"}},
      {"ealcA^ira", "noun", {}, {}, {}, {}, {}, {"Particular Noun"}, {"V10", "Def", "NaS"}, {"eal"}, {"a"}},
      {"bihimA", "particle", {}, {}, {"GFe", "GMa"}, {"Pr3"}, {"NPl"}, {}, {"KaS"}, {"bi"}, {"himA"}},
      {"yujAdilUna", "verb", {"fAcala"}, {}, {"GMa"}, {"Pr3"}, {"NPl"}, {"Strong Verb", "MOD", "ACT"},
       {"Raf"}, {"y"}, {"Una"}},
  };
  return rows;
}

// Column-wise union of a word's analyses, in the shape of GoldenRow.
inline GoldenRow collapse(const std::string& word, const std::vector<Analysis>& rows) {
  GoldenRow g;
  g.word = word;
  std::set<std::string> pos;
  auto add = [](Codes& into, const std::vector<std::string>& from) { into.insert(from.begin(), from.end()); };
  for (const auto& a : rows) {
    pos.insert(a.pos);
    add(g.original_schemes, a.original_schemes);
    if (a.scheme) g.scheme.insert(*a.scheme);
    add(g.gender, a.gender);
    add(g.person, a.person);
    add(g.number, a.number);
    add(g.properties, a.properties);
    add(g.descriptors, a.descriptors);
    for (const auto& p : a.prefixes) {
      if (std::find(g.prefixes.begin(), g.prefixes.end(), p) == g.prefixes.end()) g.prefixes.push_back(p);
    }
    for (const auto& s : a.suffixes) {
      if (std::find(g.suffixes.begin(), g.suffixes.end(), s) == g.suffixes.end()) g.suffixes.push_back(s);
    }
  }
  for (const auto& p : pos) g.pos += (g.pos.empty() ? "" : "|") + p;
  return g;
}

inline bool operator==(const GoldenRow& a, const GoldenRow& b) {
  return a.word == b.word && a.pos == b.pos && a.original_schemes == b.original_schemes &&
         a.scheme == b.scheme && a.gender == b.gender && a.person == b.person && a.number == b.number &&
         a.properties == b.properties && a.descriptors == b.descriptors && a.prefixes == b.prefixes &&
         a.suffixes == b.suffixes;
}

inline std::string describe(const GoldenRow& g) {
  auto set = [](const Codes& c) {
    std::string s = "{";
    for (const auto& x : c) s += (s.size() > 1 ? "," : "") + x;
    return s + "}";
  };
  auto list = [](const std::vector<std::string>& c) {
    std::string s = "[";
    for (const auto& x : c) s += (s.size() > 1 ? "," : "") + x;
    return s + "]";
  };
  return g.word + " " + g.pos + " B" + set(g.original_schemes) + " C" + set(g.scheme) + " D" + set(g.gender) +
         " E" + set(g.person) + " F" + set(g.number) + " G" + set(g.properties) + " H" + set(g.descriptors) +
         " I" + list(g.prefixes) + " J" + list(g.suffixes);
}

// Number rules with one number component and the two published suffixes.
inline const char* kNumberRulesXml = R"(<?xml version="1.0" encoding="UTF-8"?>
<package name="NumbersPackage">
  <morphological_properties>
    <property name="Definiteness" type="exclusive">
      <descriptor name="Def"/>
      <descriptor name="Ind"/>
    </property>
    <property name="Case" type="exclusive">
      <descriptor name="Raf"/>
      <descriptor name="NaS"/>
      <descriptor name="KaS"/>
    </property>
    <property name="Selector" type="additive">
      <descriptor name="CNAccepteSCID"/>
      <descriptor name="SCID"/>
    </property>
  </morphological_properties>
  <morphological_class name="CardNumber">
    <properties>
      <uses>Selector</uses>
    </properties>
    <component name="wAHid">
      <md key="CNAccepteSCID"/>
    </component>
  </morphological_class>
  <morphological_class name="CasSuffixe" kind="suffix">
    <properties>
      <uses>Selector</uses>
    </properties>
    <component name="un">
      <md key="SCID"/>
    </component>
    <component name="an">
      <md key="SCID"/>
    </component>
  </morphological_class>
  <rules_class name="cardNbCRules" category="noun.particular">
    <rule id="rule_1">
      <morpheme key="CardNumber.CNAccepteSCID"/>
      <morpheme key="CasSuffixe.SCID" component="un"/>
      <idp name="CNIndefMarfUc"/>
    </rule>
    <rule id="rule_2">
      <morpheme key="CardNumber.CNAccepteSCID"/>
      <morpheme key="CasSuffixe.SCID" component="an"/>
      <idp name="CNIndefManSub"/>
    </rule>
  </rules_class>
</package>
)";

inline const char* kNumberBundles =
    "CNIndefMarfUc\tDefiniteness.Ind\tCase.Raf\n"
    "CNIndefManSub\tDefiniteness.Ind\tCase.NaS\n";

inline Lexicon number_rules_lexicon() {
  Lexicon lex = parse_lexicon({{"numbers.xml", kNumberRulesXml}});
  lex.bundles = parse_bundles(kNumberBundles);
  return lex;
}

}  // namespace tmorph::testing

#endif  // TMORPH_TESTS_FIXTURES_HPP_
