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

// Analysis and generation over a compiled lexicon, and report export.
//
// Analysis tokenizes the input, looks every token up in every category
// automaton and turns each payload into one row with the columns
//
//   A word, B original scheme, C scheme, D gender, E person, F number,
//   G properties, H morphological descriptors, I prefixes, J suffixes.

#ifndef TMORPH_PIPELINE_HPP_
#define TMORPH_PIPELINE_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tmorph/automaton.hpp"
#include "tmorph/compiler.hpp"
#include "tmorph/payload.hpp"
#include "tmorph/translit.hpp"

namespace tmorph {

enum class Column { kGender, kPerson, kNumber, kProperties, kDescriptors, kHidden };

// Which output column each property's codes go to.
struct ColumnMap {
  std::map<std::string, Column, std::less<>> by_property;
  Column fallback = Column::kDescriptors;

  Column of(std::string_view property) const {
    auto it = by_property.find(property);
    return it == by_property.end() ? fallback : it->second;
  }

  static ColumnMap standard() {
    ColumnMap m;
    m.by_property = {{"Gender", Column::kGender},         {"Person", Column::kPerson},
                     {"Number", Column::kNumber},         {"WordType", Column::kProperties},
                     {"Tense", Column::kProperties},      {"Voice", Column::kProperties},
                     {"Acceptance", Column::kProperties}, {"Selector", Column::kHidden}};
    return m;
  }
};

inline constexpr std::string_view kNotExist = "Not exist";

struct Analysis {
  std::string word;
  std::string pos;
  std::string category;
  std::string rule;
  std::vector<std::string> original_schemes;
  bool original_missing = false;
  std::optional<std::string> scheme;
  std::vector<std::string> gender;
  std::vector<std::string> person;
  std::vector<std::string> number;
  std::vector<std::string> properties;
  std::vector<std::string> descriptors;
  std::vector<std::string> prefixes;
  std::string stem;
  std::vector<std::string> suffixes;
  std::string root;

  friend bool operator==(const Analysis&, const Analysis&) = default;
};

struct AnalysisReport {
  std::vector<Analysis> rows;
  std::vector<std::string> not_found;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

class PipelineError : public std::runtime_error {
 public:
  enum class Kind { kUnknownCategory, kBadReport };
  PipelineError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Splits on everything outside the canonical alphabet.
inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (translit::is_symbol(c)) {
      current += c;
    } else if (!current.empty()) {
      out.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

inline std::string pos_of(std::string_view category) {
  return std::string(category.substr(0, category.find('.')));
}

inline Analysis to_analysis(const CompiledLexicon& cl, const std::string& category, std::string_view word,
                            const MorphPayload& p, const ColumnMap& columns = ColumnMap::standard()) {
  Analysis a;
  a.word = std::string(word);
  a.category = category;
  a.pos = pos_of(category);
  a.rule = p.rule_id;
  for (const Segment& s : p.segments) {
    switch (s.role) {
      case Role::kPrefix: a.prefixes.push_back(s.surface); break;
      case Role::kSuffix: a.suffixes.push_back(s.surface); break;
      case Role::kStem:
        a.stem += s.surface;
        if (!s.root.empty()) a.root = s.root;
        for (const auto& o : s.originals) {
          if (std::find(a.original_schemes.begin(), a.original_schemes.end(), o) ==
              a.original_schemes.end()) {
            a.original_schemes.push_back(o);
          }
        }
        if (s.templatic && !s.has_ref) a.original_missing = true;
        if (s.templatic && a.pos == "noun") a.scheme = s.component;
        break;
    }
  }
  for (const PropertyInfo& prop : cl.properties) {
    std::vector<std::string>* target = nullptr;
    switch (columns.of(prop.name)) {
      case Column::kGender: target = &a.gender; break;
      case Column::kPerson: target = &a.person; break;
      case Column::kNumber: target = &a.number; break;
      case Column::kProperties: target = &a.properties; break;
      case Column::kDescriptors: target = &a.descriptors; break;
      case Column::kHidden: break;
    }
    if (!target) continue;
    for (const auto& code : prop.codes) {
      if (p.descriptors.count(FeatureDescriptor{prop.name, code})) target->push_back(code);
    }
  }
  return a;
}

// One row per (category, payload), ordered by category, rule id and
// decomposition. Empty iff the word is in no category automaton.
inline std::vector<Analysis> analyze_word(const CompiledLexicon& cl, std::string_view word,
                                          const ColumnMap& columns = ColumnMap::standard()) {
  std::vector<Analysis> out;
  if (word.empty()) return out;
  for (const auto& [category, automaton] : cl.categories) {
    for (const MorphPayload& p : lookup(automaton, word)) {
      out.push_back(to_analysis(cl, category, word, p, columns));
    }
  }
  return out;
}

enum class Script { kAuto, kArabic, kLatin };

// Each distinct token is analyzed once, in order of first occurrence.
inline AnalysisReport analyze_text(const CompiledLexicon& cl, std::string_view text,
                                   Script script = Script::kAuto,
                                   const ColumnMap& columns = ColumnMap::standard()) {
  std::string latin;
  bool arabic = script == Script::kArabic || (script == Script::kAuto && translit::contains_arabic(text));
  if (arabic) latin = to_latin(text);
  AnalysisReport report;
  std::set<std::string> seen;
  for (const auto& token : tokenize(arabic ? std::string_view(latin) : text)) {
    if (!seen.insert(token).second) continue;
    auto rows = analyze_word(cl, token, columns);
    if (rows.empty()) {
      report.not_found.push_back(token);
    } else {
      report.rows.insert(report.rows.end(), rows.begin(), rows.end());
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Generation.

struct GenerateConstraints {
  std::optional<std::string> category;  // a category name or a POS such as "noun"
  std::optional<std::string> root;
  std::optional<std::string> scheme;    // a stem template or one of its original schemes
  std::vector<std::string> descriptors;
  std::optional<std::string> prefix;
  std::optional<std::string> suffix;
};

struct Generated {
  std::string surface;
  Analysis analysis;
  MorphPayload payload;
};

inline bool satisfies(const MorphPayload& p, const GenerateConstraints& c) {
  auto any_segment = [&](auto&& pred) { return std::any_of(p.segments.begin(), p.segments.end(), pred); };
  if (c.root && !any_segment([&](const Segment& s) { return s.role == Role::kStem && s.root == *c.root; })) {
    return false;
  }
  if (c.scheme && !any_segment([&](const Segment& s) {
        return s.role == Role::kStem && (s.component == *c.scheme ||
                                         std::find(s.originals.begin(), s.originals.end(), *c.scheme) !=
                                             s.originals.end());
      })) {
    return false;
  }
  for (const auto& code : c.descriptors) {
    if (!p.has_code(code)) return false;
  }
  if (c.prefix && !any_segment([&](const Segment& s) { return s.role == Role::kPrefix && s.surface == *c.prefix; })) {
    return false;
  }
  if (c.suffix && !any_segment([&](const Segment& s) { return s.role == Role::kSuffix && s.surface == *c.suffix; })) {
    return false;
  }
  return true;
}

// True if two required codes belong to the same exclusive property.
inline bool contradictory(const std::vector<PropertyInfo>& props, const std::vector<std::string>& codes) {
  for (const auto& p : props) {
    if (p.kind != PropertyKind::kExclusive) continue;
    std::set<std::string> hit;
    for (const auto& code : codes) {
      if (std::find(p.codes.begin(), p.codes.end(), code) != p.codes.end()) hit.insert(code);
    }
    if (hit.size() > 1) return true;
  }
  return false;
}

// Every word of length <= max_len with a payload satisfying the constraints,
// ordered by category, word and payload.
inline std::vector<Generated> generate(const CompiledLexicon& cl, const GenerateConstraints& c,
                                       std::size_t max_len,
                                       const ColumnMap& columns = ColumnMap::standard()) {
  std::vector<const std::string*> selected;
  for (const auto& [name, a] : cl.categories) {
    if (!c.category || *c.category == name || *c.category == pos_of(name)) selected.push_back(&name);
  }
  if (selected.empty()) {
    throw PipelineError(PipelineError::Kind::kUnknownCategory, "unknown category '" + *c.category + "'");
  }
  std::vector<Generated> out;
  if (contradictory(cl.properties, c.descriptors)) return out;
  for (const std::string* name : selected) {
    for (auto& [word, payloads] : enumerate_with_payloads(cl.categories.at(*name), max_len)) {
      for (const auto& p : payloads) {
        if (satisfies(p, c)) out.push_back({word, to_analysis(cl, *name, word, p, columns), p});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Export.

enum class Format { kTsv, kJson };

inline constexpr std::string_view kEmptySet = "\xE2\x88\x85";  // U+2205

inline const std::vector<std::string_view>& report_header() {
  static const std::vector<std::string_view> header = {
      "Morphological component", "Original Scheme", "Scheme",     "Gender",
      "Person",                  "Number",          "Properties", "Morphological Descriptors",
      "Prefixes",                "Suffixes"};
  return header;
}

namespace pipeline_detail {

inline std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

inline std::string set_cell(const std::vector<std::string>& items) {
  return items.empty() ? std::string(kEmptySet) : join(items, ", ");
}

inline std::string list_cell(const std::vector<std::string>& items) {
  return items.empty() ? std::string(kEmptySet) : "[" + join(items, ", ") + "]";
}

inline nlohmann::ordered_json list_or_null(const std::vector<std::string>& items) {
  if (items.empty()) return nullptr;
  return items;
}

inline std::vector<std::string> list_from(const nlohmann::ordered_json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return {};
  return j.at(key).get<std::vector<std::string>>();
}

}  // namespace pipeline_detail

inline std::string original_cell(const Analysis& a) {
  std::vector<std::string> items = a.original_schemes;
  if (a.original_missing) items.emplace_back(kNotExist);
  return pipeline_detail::set_cell(items);
}

inline std::string export_tsv(const AnalysisReport& rep) {
  using namespace pipeline_detail;
  std::string out;
  std::vector<std::string> header(report_header().begin(), report_header().end());
  out += join(header, "\t") + "\n";
  for (const auto& a : rep.rows) {
    std::vector<std::string> cells = {a.word,
                                      original_cell(a),
                                      a.scheme ? *a.scheme : std::string(kEmptySet),
                                      set_cell(a.gender),
                                      set_cell(a.person),
                                      set_cell(a.number),
                                      set_cell(a.properties),
                                      set_cell(a.descriptors),
                                      list_cell(a.prefixes),
                                      list_cell(a.suffixes)};
    out += join(cells, "\t") + "\n";
  }
  return out;
}

inline nlohmann::ordered_json report_to_json(const AnalysisReport& rep) {
  using pipeline_detail::list_or_null;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& a : rep.rows) {
    nlohmann::ordered_json j;
    j["word"] = a.word;
    j["pos"] = a.pos;
    j["category"] = a.category;
    j["rule"] = a.rule;
    j["original_schemes"] = list_or_null(a.original_schemes);
    j["original_missing"] = a.original_missing;
    j["scheme"] = a.scheme ? nlohmann::ordered_json(*a.scheme) : nlohmann::ordered_json(nullptr);
    j["gender"] = list_or_null(a.gender);
    j["person"] = list_or_null(a.person);
    j["number"] = list_or_null(a.number);
    j["properties"] = list_or_null(a.properties);
    j["descriptors"] = list_or_null(a.descriptors);
    j["prefixes"] = list_or_null(a.prefixes);
    j["stem"] = a.stem;
    j["suffixes"] = list_or_null(a.suffixes);
    j["root"] = a.root.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(a.root);
    rows.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["rows"] = std::move(rows);
  out["not_found"] = rep.not_found;
  return out;
}

inline std::string export_json(const AnalysisReport& rep) { return report_to_json(rep).dump(2) + "\n"; }

inline std::string export_report(const AnalysisReport& rep, Format format) {
  return format == Format::kTsv ? export_tsv(rep) : export_json(rep);
}

inline AnalysisReport report_from_json(std::string_view text) {
  using pipeline_detail::list_from;
  AnalysisReport rep;
  try {
    auto j = nlohmann::ordered_json::parse(text);
    for (const auto& r : j.at("rows")) {
      Analysis a;
      a.word = r.at("word").get<std::string>();
      a.pos = r.at("pos").get<std::string>();
      a.category = r.at("category").get<std::string>();
      a.rule = r.at("rule").get<std::string>();
      a.original_schemes = list_from(r, "original_schemes");
      a.original_missing = r.at("original_missing").get<bool>();
      if (!r.at("scheme").is_null()) a.scheme = r.at("scheme").get<std::string>();
      a.gender = list_from(r, "gender");
      a.person = list_from(r, "person");
      a.number = list_from(r, "number");
      a.properties = list_from(r, "properties");
      a.descriptors = list_from(r, "descriptors");
      a.prefixes = list_from(r, "prefixes");
      a.stem = r.at("stem").get<std::string>();
      a.suffixes = list_from(r, "suffixes");
      if (!r.at("root").is_null()) a.root = r.at("root").get<std::string>();
      rep.rows.push_back(std::move(a));
    }
    rep.not_found = j.at("not_found").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw PipelineError(PipelineError::Kind::kBadReport, std::string("malformed report: ") + e.what());
  }
  return rep;
}

}  // namespace tmorph

#endif  // TMORPH_PIPELINE_HPP_
