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

// The XMODEL lexicon: morphological component classes, morphological
// property classes and morphological rules classes.
//
// A lexicon is read from one or more XML documents, each rooted at <package>,
// plus an optional idp bundle table (bundles.tsv) that expands the names used
// in <idp name="..."/> into descriptor sets. Descriptor references are kept as
// written and resolved on demand; validate_lexicon() reports every reference
// that does not resolve.

#ifndef TMORPH_LEXICON_HPP_
#define TMORPH_LEXICON_HPP_

#include <expat.h>

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tmorph/scheme.hpp"
#include "tmorph/translit.hpp"

namespace tmorph {

struct Location {
  std::string document;
  long line = 0;
  long column = 0;
  std::string str() const {
    return document + ":" + std::to_string(line) + ":" + std::to_string(column);
  }
};

class LexiconError : public std::runtime_error {
 public:
  enum class Kind {
    kXmlSyntax,
    kUnknownTag,
    kInvalidAttribute,
    kDuplicateClass,
    kDuplicateProperty,
    kUnknownClass,
    kUnknownComponent,
    kNoReference,
    kKeyNotFound,
    kIo,
  };
  LexiconError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

enum class PropertyKind { kExclusive, kAdditive };

struct PropertyDef {
  std::string name;
  PropertyKind kind = PropertyKind::kExclusive;
  std::vector<std::string> descriptors;
  std::string package;

  bool has(std::string_view code) const {
    return std::find(descriptors.begin(), descriptors.end(), code) != descriptors.end();
  }
  friend bool operator==(const PropertyDef&, const PropertyDef&) = default;
};

struct FeatureDescriptor {
  std::string property;
  std::string code;
  friend bool operator==(const FeatureDescriptor&, const FeatureDescriptor&) = default;
  friend auto operator<=>(const FeatureDescriptor&, const FeatureDescriptor&) = default;
};

using DescriptorSet = std::set<FeatureDescriptor>;

struct MorphComponent {
  std::string surface;
  std::optional<int> id;
  std::optional<int> key;
  std::vector<std::string> md;  // descriptor codes, resolved through the class's `uses`
  friend bool operator==(const MorphComponent&, const MorphComponent&) = default;
};

// What a class's components are, which decides how rules compile them.
enum class ClassKind {
  kStem,    // literal stems
  kScheme,  // templates expanded over the root inventory
  kPrefix,
  kSuffix,
};

inline std::string_view to_string(ClassKind k) {
  switch (k) {
    case ClassKind::kStem: return "stem";
    case ClassKind::kScheme: return "scheme";
    case ClassKind::kPrefix: return "prefix";
    case ClassKind::kSuffix: return "suffix";
  }
  return "stem";
}

struct MorphClass {
  std::string name;
  std::string package;
  ClassKind kind = ClassKind::kStem;
  std::vector<std::string> modifiers;             // stored, no semantics
  std::vector<std::string> markers;               // undotted <is> entries
  std::vector<FeatureDescriptor> class_descriptors;  // dotted <is> entries
  std::vector<std::string> uses;
  std::optional<std::string> ref;
  std::vector<MorphComponent> components;
  friend bool operator==(const MorphClass&, const MorphClass&) = default;
};

struct MorphemeRef {
  std::string key;  // ClassName or ClassName.Selector
  std::optional<std::string> fixed_component;

  std::string class_name() const { return key.substr(0, key.find('.')); }
  std::string selector() const {
    auto dot = key.find('.');
    return dot == std::string::npos ? std::string() : key.substr(dot + 1);
  }
  friend bool operator==(const MorphemeRef&, const MorphemeRef&) = default;
};

struct MorphRule {
  std::string id;
  std::vector<MorphemeRef> morphemes;
  std::vector<std::string> idp;
  friend bool operator==(const MorphRule&, const MorphRule&) = default;
};

struct RulesClass {
  std::string name;
  std::string package;
  std::string category;
  std::vector<MorphRule> rules;
  friend bool operator==(const RulesClass&, const RulesClass&) = default;
};

struct Lexicon {
  std::vector<std::string> packages;          // first-appearance order
  std::vector<PropertyDef> properties;        // declaration order
  std::map<std::string, MorphClass> classes;
  std::map<std::string, RulesClass> rules_classes;
  std::map<std::string, std::vector<FeatureDescriptor>> bundles;

  const PropertyDef* find_property(std::string_view name) const {
    for (const auto& p : properties) {
      if (p.name == name) return &p;
    }
    return nullptr;
  }
  const MorphClass* find_class(std::string_view name) const {
    auto it = classes.find(std::string(name));
    return it == classes.end() ? nullptr : &it->second;
  }
  // True if some property declares `code`.
  bool is_descriptor_code(std::string_view code) const {
    for (const auto& p : properties) {
      if (p.has(code)) return true;
    }
    return false;
  }
  std::size_t component_count() const {
    std::size_t n = 0;
    for (const auto& [name, c] : classes) n += c.components.size();
    return n;
  }
  std::size_t rule_count() const {
    std::size_t n = 0;
    for (const auto& [name, rc] : rules_classes) n += rc.rules.size();
    return n;
  }
  friend bool operator==(const Lexicon&, const Lexicon&) = default;
};

struct XmlDocument {
  std::string name;
  std::string text;
};

namespace lexicon_detail {

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline std::optional<FeatureDescriptor> split_descriptor(std::string_view dotted) {
  auto dot = dotted.find('.');
  if (dot == std::string_view::npos) return std::nullopt;
  return FeatureDescriptor{std::string(dotted.substr(0, dot)), std::string(dotted.substr(dot + 1))};
}

class Parser {
 public:
  Parser(Lexicon& lex, const XmlDocument& doc) : lex_(lex), doc_(doc) {}

  void run() {
    std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> parser(
        XML_ParserCreate("UTF-8"), &XML_ParserFree);
    parser_ = parser.get();
    XML_SetUserData(parser_, this);
    XML_SetElementHandler(parser_, &Parser::on_start, &Parser::on_end);
    XML_SetCharacterDataHandler(parser_, &Parser::on_text);
    auto status = XML_Parse(parser_, doc_.text.data(), static_cast<int>(doc_.text.size()), 1);
    if (error_) std::rethrow_exception(error_);
    if (status != XML_STATUS_OK) {
      throw LexiconError(LexiconError::Kind::kXmlSyntax,
                         here().str() + ": " + XML_ErrorString(XML_GetErrorCode(parser_)));
    }
  }

 private:
  using Attrs = std::map<std::string, std::string>;

  Location here() const {
    return {doc_.name, static_cast<long>(XML_GetCurrentLineNumber(parser_)),
            static_cast<long>(XML_GetCurrentColumnNumber(parser_))};
  }

  [[noreturn]] void fail(LexiconError::Kind kind, const std::string& msg) const {
    throw LexiconError(kind, here().str() + ": " + msg);
  }

  std::string required(const Attrs& attrs, const std::string& tag, const std::string& name) const {
    auto it = attrs.find(name);
    if (it == attrs.end() || it->second.empty()) {
      fail(LexiconError::Kind::kInvalidAttribute, "<" + tag + "> needs a '" + name + "' attribute");
    }
    return it->second;
  }

  std::optional<int> number(const Attrs& attrs, const std::string& name) const {
    auto it = attrs.find(name);
    if (it == attrs.end()) return std::nullopt;
    try {
      std::size_t used = 0;
      int v = std::stoi(it->second, &used);
      if (used == it->second.size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    fail(LexiconError::Kind::kInvalidAttribute,
         "'" + name + "' must be a non-negative integer, got '" + it->second + "'");
  }

  std::string surface(const std::string& raw) const {
    try {
      if (translit::contains_arabic(raw)) return to_latin(raw);
      check_canonical(raw);
      return raw;
    } catch (const TranslitError& e) {
      fail(LexiconError::Kind::kInvalidAttribute, "component '" + raw + "': " + e.what());
    }
  }

  void expect_parent(const std::string& tag, std::initializer_list<std::string_view> parents) const {
    std::string_view parent = stack_.empty() ? std::string_view() : std::string_view(stack_.back());
    for (auto p : parents) {
      if (p == parent) return;
    }
    fail(LexiconError::Kind::kUnknownTag,
         "<" + tag + "> is not allowed inside <" + std::string(parent) + ">");
  }

  void start(const std::string& tag, const Attrs& attrs) {
    text_.clear();
    if (stack_.empty()) {
      if (tag != "package") fail(LexiconError::Kind::kXmlSyntax, "root element must be <package>");
      package_ = attrs.count("name") ? attrs.at("name") : doc_.name;
      if (std::find(lex_.packages.begin(), lex_.packages.end(), package_) == lex_.packages.end()) {
        lex_.packages.push_back(package_);
      }
    } else if (tag == "morphological_class") {
      expect_parent(tag, {"package"});
      MorphClass c;
      c.name = required(attrs, tag, "name");
      c.package = package_;
      if (auto it = attrs.find("kind"); it != attrs.end()) {
        const std::string& k = it->second;
        if (k == "stem") c.kind = ClassKind::kStem;
        else if (k == "scheme") c.kind = ClassKind::kScheme;
        else if (k == "prefix") c.kind = ClassKind::kPrefix;
        else if (k == "suffix") c.kind = ClassKind::kSuffix;
        else fail(LexiconError::Kind::kInvalidAttribute, "unknown class kind '" + k + "'");
      }
      if (lex_.classes.count(c.name) || lex_.rules_classes.count(c.name)) {
        fail(LexiconError::Kind::kDuplicateClass, "duplicate class '" + c.name + "'");
      }
      class_ = &lex_.classes.emplace(c.name, std::move(c)).first->second;
    } else if (tag == "properties") {
      expect_parent(tag, {"morphological_class"});
    } else if (tag == "modifier" || tag == "is" || tag == "uses" || tag == "ref") {
      expect_parent(tag, {"properties"});
    } else if (tag == "component") {
      expect_parent(tag, {"morphological_class"});
      MorphComponent comp;
      comp.surface = surface(required(attrs, tag, "name"));
      comp.id = number(attrs, "id");
      comp.key = number(attrs, "key");
      class_->components.push_back(std::move(comp));
    } else if (tag == "md") {
      expect_parent(tag, {"component"});
      class_->components.back().md.push_back(required(attrs, tag, "key"));
    } else if (tag == "morphological_properties") {
      expect_parent(tag, {"package"});
    } else if (tag == "property") {
      expect_parent(tag, {"morphological_properties"});
      PropertyDef p;
      p.name = required(attrs, tag, "name");
      p.package = package_;
      std::string type = attrs.count("type") ? attrs.at("type") : "exclusive";
      if (type == "exclusive") p.kind = PropertyKind::kExclusive;
      else if (type == "additive") p.kind = PropertyKind::kAdditive;
      else fail(LexiconError::Kind::kInvalidAttribute, "property type must be exclusive or additive");
      if (lex_.find_property(p.name)) {
        fail(LexiconError::Kind::kDuplicateProperty, "duplicate property '" + p.name + "'");
      }
      lex_.properties.push_back(std::move(p));
    } else if (tag == "descriptor") {
      expect_parent(tag, {"property"});
      lex_.properties.back().descriptors.push_back(required(attrs, tag, "name"));
    } else if (tag == "rules_class") {
      expect_parent(tag, {"package"});
      RulesClass rc;
      rc.name = required(attrs, tag, "name");
      rc.package = package_;
      rc.category = attrs.count("category") ? attrs.at("category") : rc.name;
      if (lex_.rules_classes.count(rc.name) || lex_.classes.count(rc.name)) {
        fail(LexiconError::Kind::kDuplicateClass, "duplicate class '" + rc.name + "'");
      }
      rules_ = &lex_.rules_classes.emplace(rc.name, std::move(rc)).first->second;
    } else if (tag == "rule") {
      expect_parent(tag, {"rules_class"});
      MorphRule r;
      r.id = attrs.count("id") ? attrs.at("id")
                               : rules_->name + "." + std::to_string(rules_->rules.size() + 1);
      rules_->rules.push_back(std::move(r));
    } else if (tag == "morpheme") {
      expect_parent(tag, {"rule"});
      MorphemeRef m;
      m.key = required(attrs, tag, "key");
      if (auto it = attrs.find("component"); it != attrs.end()) m.fixed_component = surface(it->second);
      rules_->rules.back().morphemes.push_back(std::move(m));
    } else if (tag == "idp") {
      expect_parent(tag, {"rule"});
      rules_->rules.back().idp.push_back(required(attrs, tag, "name"));
    } else {
      fail(LexiconError::Kind::kUnknownTag, "unknown tag <" + tag + ">");
    }
    stack_.push_back(tag);
  }

  void end(const std::string& tag) {
    std::string value = trim(text_);
    text_.clear();
    stack_.pop_back();
    if (tag == "modifier") {
      class_->modifiers.push_back(value);
    } else if (tag == "is") {
      if (auto d = split_descriptor(value)) {
        class_->class_descriptors.push_back(std::move(*d));
      } else {
        class_->markers.push_back(value);
      }
    } else if (tag == "uses") {
      class_->uses.push_back(value);
    } else if (tag == "ref") {
      class_->ref = value;
    } else if (tag == "rule") {
      if (rules_->rules.back().morphemes.empty()) {
        fail(LexiconError::Kind::kInvalidAttribute,
             "rule '" + rules_->rules.back().id + "' has no morphemes");
      }
    }
  }

  static void XMLCALL on_start(void* self, const XML_Char* name, const XML_Char** atts) {
    auto* p = static_cast<Parser*>(self);
    if (p->error_) return;
    try {
      Attrs attrs;
      for (int i = 0; atts[i]; i += 2) attrs[atts[i]] = atts[i + 1];
      p->start(name, attrs);
    } catch (...) {
      p->error_ = std::current_exception();
      XML_StopParser(p->parser_, XML_FALSE);
    }
  }

  static void XMLCALL on_end(void* self, const XML_Char* name) {
    auto* p = static_cast<Parser*>(self);
    if (p->error_) return;
    try {
      p->end(name);
    } catch (...) {
      p->error_ = std::current_exception();
      XML_StopParser(p->parser_, XML_FALSE);
    }
  }

  static void XMLCALL on_text(void* self, const XML_Char* s, int len) {
    static_cast<Parser*>(self)->text_.append(s, static_cast<std::size_t>(len));
  }

  Lexicon& lex_;
  const XmlDocument& doc_;
  XML_Parser parser_ = nullptr;
  std::exception_ptr error_;
  std::vector<std::string> stack_;
  std::string text_;
  std::string package_;
  MorphClass* class_ = nullptr;
  RulesClass* rules_ = nullptr;
};

}  // namespace lexicon_detail

inline Lexicon parse_lexicon(const std::vector<XmlDocument>& documents) {
  Lexicon lex;
  for (const auto& doc : documents) lexicon_detail::Parser(lex, doc).run();
  return lex;
}

// Bundle table: one bundle per line, "Name Property.Code Property.Code ...".
// Blank lines and lines starting with '#' are ignored.
inline std::map<std::string, std::vector<FeatureDescriptor>> parse_bundles(std::string_view text,
                                                                          std::string_view name = "bundles") {
  std::map<std::string, std::vector<FeatureDescriptor>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string bundle;
    if (!(fields >> bundle) || bundle[0] == '#') continue;
    std::vector<FeatureDescriptor> ds;
    // Descriptor codes may contain spaces ("WordType.Strong Verb"), so fields
    // are separated by tabs when present.
    std::string rest;
    std::getline(fields, rest);
    std::vector<std::string> parts;
    if (rest.find('\t') != std::string::npos) {
      std::istringstream tabs(rest);
      for (std::string part; std::getline(tabs, part, '\t');) parts.push_back(part);
    } else {
      std::istringstream words(rest);
      for (std::string part; words >> part;) parts.push_back(part);
    }
    for (const auto& part : parts) {
      std::string p = lexicon_detail::trim(part);
      if (p.empty()) continue;
      auto d = lexicon_detail::split_descriptor(p);
      if (!d) {
        throw LexiconError(LexiconError::Kind::kInvalidAttribute,
                           std::string(name) + ":" + std::to_string(lineno) +
                               ": expected Property.Code, got '" + p + "'");
      }
      ds.push_back(std::move(*d));
    }
    if (!out.emplace(bundle, std::move(ds)).second) {
      throw LexiconError(LexiconError::Kind::kDuplicateClass,
                         std::string(name) + ":" + std::to_string(lineno) + ": duplicate bundle '" +
                             bundle + "'");
    }
  }
  return out;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexiconError(LexiconError::Kind::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline constexpr std::string_view kBundleFile = "bundles.tsv";

// Loads every *.xml under `dir` (sorted by path) and `dir`/bundles.tsv.
inline Lexicon load_lexicon_dir(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw LexiconError(LexiconError::Kind::kIo, dir.string() + " is not a directory");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".xml") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<XmlDocument> docs;
  for (const auto& f : files) {
    docs.push_back({fs::relative(f, dir).generic_string(), read_file(f)});
  }
  Lexicon lex = parse_lexicon(docs);
  if (fs::path b = dir / kBundleFile; fs::exists(b)) lex.bundles = parse_bundles(read_file(b), b.string());
  return lex;
}

// ---------------------------------------------------------------------------
// Queries.

// Resolves a component's `md` code against the properties its class uses.
inline std::optional<FeatureDescriptor> resolve_md(const Lexicon& lex, const MorphClass& cls,
                                                   std::string_view code) {
  for (const auto& used : cls.uses) {
    if (const PropertyDef* p = lex.find_property(used); p && p->has(code)) {
      return FeatureDescriptor{p->name, std::string(code)};
    }
  }
  return std::nullopt;
}

// Class descriptors plus the component's own; unresolved references are
// skipped (validate_lexicon reports them).
inline DescriptorSet effective_descriptors(const Lexicon& lex, const MorphClass& cls,
                                           const MorphComponent& comp) {
  DescriptorSet out;
  for (const auto& d : cls.class_descriptors) {
    if (const PropertyDef* p = lex.find_property(d.property); p && p->has(d.code)) out.insert(d);
  }
  for (const auto& code : comp.md) {
    if (auto d = resolve_md(lex, cls, code)) out.insert(std::move(*d));
  }
  return out;
}

inline const MorphClass& require_class(const Lexicon& lex, std::string_view name) {
  const MorphClass* c = lex.find_class(name);
  if (!c) throw LexiconError(LexiconError::Kind::kUnknownClass, "unknown class '" + std::string(name) + "'");
  return *c;
}

// Uses the first component with that surface.
inline DescriptorSet effective_descriptors(const Lexicon& lex, std::string_view class_name,
                                           std::string_view surface) {
  const MorphClass& cls = require_class(lex, class_name);
  for (const auto& comp : cls.components) {
    if (comp.surface == surface) return effective_descriptors(lex, cls, comp);
  }
  throw LexiconError(LexiconError::Kind::kUnknownComponent,
                     "no component '" + std::string(surface) + "' in " + cls.name);
}

// Original components of one referencing component, in declaration order.
inline std::vector<MorphComponent> originals_of(const Lexicon& lex, const MorphClass& cls,
                                                const MorphComponent& comp) {
  if (!cls.ref) {
    throw LexiconError(LexiconError::Kind::kNoReference, "class " + cls.name + " declares no <ref>");
  }
  const MorphClass& target = require_class(lex, *cls.ref);
  std::vector<MorphComponent> out;
  if (comp.key) {
    for (const auto& o : target.components) {
      if (o.id == comp.key) out.push_back(o);
    }
  }
  if (out.empty()) {
    throw LexiconError(LexiconError::Kind::kKeyNotFound,
                       "component '" + comp.surface + "' of " + cls.name + " has key " +
                           (comp.key ? std::to_string(*comp.key) : std::string("(none)")) +
                           " with no match in " + target.name);
  }
  return out;
}

// Originals of every component of `class_name` with that surface.
inline std::vector<MorphComponent> resolve_original(const Lexicon& lex, std::string_view class_name,
                                                    std::string_view surface) {
  const MorphClass& cls = require_class(lex, class_name);
  if (!cls.ref) {
    throw LexiconError(LexiconError::Kind::kNoReference, "class " + cls.name + " declares no <ref>");
  }
  std::vector<MorphComponent> out;
  bool found = false;
  for (const auto& comp : cls.components) {
    if (comp.surface != surface) continue;
    found = true;
    for (auto& o : originals_of(lex, cls, comp)) out.push_back(std::move(o));
  }
  if (!found) {
    throw LexiconError(LexiconError::Kind::kUnknownComponent,
                       "no component '" + std::string(surface) + "' in " + cls.name);
  }
  return out;
}

// Indices of the components a morpheme reference selects. A selector that is
// a declared descriptor code keeps only components carrying it; any other
// selector keeps the whole class. A fixed component narrows to that surface.
inline std::vector<std::size_t> select_components(const Lexicon& lex, const MorphemeRef& m) {
  const MorphClass* cls = lex.find_class(m.class_name());
  if (!cls) return {};
  std::string sel = m.selector();
  bool filter = !sel.empty() && lex.is_descriptor_code(sel);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cls->components.size(); ++i) {
    const auto& comp = cls->components[i];
    if (filter) {
      bool carries = false;
      for (const auto& d : effective_descriptors(lex, *cls, comp)) carries |= d.code == sel;
      if (!carries) continue;
    }
    if (m.fixed_component && comp.surface != *m.fixed_component) continue;
    out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation.

struct Violation {
  enum class Kind {
    kDanglingRef,
    kUnknownDescriptor,
    kUnknownProperty,
    kExclusiveViolation,
    kUnresolvedMorphemeKey,
    kFixedComponentNotInClass,
    kUnknownBundle,
    kDuplicateDescriptor,
    kDuplicateRule,
    kInvalidTemplate,
  };
  Kind kind;
  std::string subject;  // class, component, rule or bundle
  std::string detail;   // key, code, property or surface

  std::string str() const {
    static constexpr const char* kNames[] = {
        "DanglingRef",           "UnknownDescriptor",        "UnknownProperty",
        "ExclusiveViolation",    "UnresolvedMorphemeKey",    "FixedComponentNotInClass",
        "UnknownBundle",         "DuplicateDescriptor",      "DuplicateRule",
        "InvalidTemplate"};
    return std::string(kNames[static_cast<int>(kind)]) + "(" + subject + ", " + detail + ")";
  }
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::size_t count(Violation::Kind k) const {
    return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                  [k](const Violation& v) { return v.kind == k; }));
  }
};

inline ValidationReport validate_lexicon(const Lexicon& lex) {
  using K = Violation::Kind;
  ValidationReport report;
  auto add = [&](K k, std::string subject, std::string detail) {
    report.violations.push_back({k, std::move(subject), std::move(detail)});
  };
  auto descriptor_known = [&](const FeatureDescriptor& d) {
    const PropertyDef* p = lex.find_property(d.property);
    return p && p->has(d.code);
  };

  for (const auto& p : lex.properties) {
    std::set<std::string> seen;
    for (const auto& d : p.descriptors) {
      if (!seen.insert(d).second) add(K::kDuplicateDescriptor, p.name, d);
    }
  }

  for (const auto& [name, cls] : lex.classes) {
    for (const auto& u : cls.uses) {
      if (!lex.find_property(u)) add(K::kUnknownProperty, name, u);
    }
    for (const auto& d : cls.class_descriptors) {
      if (!descriptor_known(d)) add(K::kUnknownDescriptor, name, d.property + "." + d.code);
    }
    const MorphClass* target = cls.ref ? lex.find_class(*cls.ref) : nullptr;
    if (cls.ref && !target) {
      bool any_key = false;
      for (const auto& comp : cls.components) {
        if (comp.key) {
          any_key = true;
          add(K::kDanglingRef, name, std::to_string(*comp.key));
        }
      }
      if (!any_key) add(K::kDanglingRef, name, *cls.ref);
    }
    for (const auto& comp : cls.components) {
      if (comp.key && target) {
        bool hit = std::any_of(target->components.begin(), target->components.end(),
                               [&](const MorphComponent& o) { return o.id == comp.key; });
        if (!hit) add(K::kDanglingRef, name, std::to_string(*comp.key));
      } else if (comp.key && !cls.ref) {
        add(K::kDanglingRef, name, std::to_string(*comp.key));
      }
      for (const auto& code : comp.md) {
        if (!resolve_md(lex, cls, code)) add(K::kUnknownDescriptor, name, code);
      }
      std::map<std::string, int> per_property;
      for (const auto& d : effective_descriptors(lex, cls, comp)) ++per_property[d.property];
      for (const auto& [prop, n] : per_property) {
        const PropertyDef* p = lex.find_property(prop);
        if (n > 1 && p->kind == PropertyKind::kExclusive) {
          add(K::kExclusiveViolation, name + ":" + comp.surface, prop);
        }
      }
      if (cls.kind == ClassKind::kScheme && !is_valid_template(comp.surface)) {
        add(K::kInvalidTemplate, name, comp.surface);
      }
    }
  }

  std::set<std::string> rule_ids;
  for (const auto& [name, rc] : lex.rules_classes) {
    for (const auto& rule : rc.rules) {
      if (!rule_ids.insert(rule.id).second) add(K::kDuplicateRule, rule.id, name);
      for (const auto& m : rule.morphemes) {
        const MorphClass* cls = lex.find_class(m.class_name());
        if (!cls) {
          add(K::kUnresolvedMorphemeKey, rule.id, m.key);
          continue;
        }
        MorphemeRef unfixed{m.key, std::nullopt};
        auto selected = select_components(lex, unfixed);
        if (selected.empty()) {
          add(K::kUnresolvedMorphemeKey, rule.id, m.key);
          continue;
        }
        if (m.fixed_component && select_components(lex, m).empty()) {
          add(K::kFixedComponentNotInClass, rule.id, *m.fixed_component);
        }
      }
      for (const auto& b : rule.idp) {
        if (!lex.bundles.count(b)) add(K::kUnknownBundle, rule.id, b);
      }
    }
  }
  for (const auto& [name, ds] : lex.bundles) {
    for (const auto& d : ds) {
      if (!descriptor_known(d)) add(K::kUnknownDescriptor, "bundle:" + name, d.property + "." + d.code);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Serialization back to XMODEL, one document per package.

namespace lexicon_detail {

inline std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace lexicon_detail

inline std::vector<XmlDocument> serialize_lexicon(const Lexicon& lex) {
  using lexicon_detail::escape;
  std::vector<XmlDocument> docs;
  for (const auto& pkg : lex.packages) {
    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<package name=\"" << escape(pkg) << "\">\n";
    bool open = false;
    for (const auto& p : lex.properties) {
      if (p.package != pkg) continue;
      if (!open) o << "  <morphological_properties>\n";
      open = true;
      o << "    <property name=\"" << escape(p.name) << "\" type=\""
        << (p.kind == PropertyKind::kExclusive ? "exclusive" : "additive") << "\">\n";
      for (const auto& d : p.descriptors) o << "      <descriptor name=\"" << escape(d) << "\"/>\n";
      o << "    </property>\n";
    }
    if (open) o << "  </morphological_properties>\n";
    for (const auto& [name, c] : lex.classes) {
      if (c.package != pkg) continue;
      o << "  <morphological_class name=\"" << escape(name) << "\"";
      if (c.kind != ClassKind::kStem) o << " kind=\"" << to_string(c.kind) << "\"";
      o << ">\n    <properties>\n";
      for (const auto& m : c.modifiers) o << "      <modifier>" << escape(m) << "</modifier>\n";
      for (const auto& m : c.markers) o << "      <is>" << escape(m) << "</is>\n";
      for (const auto& d : c.class_descriptors) {
        o << "      <is>" << escape(d.property) << "." << escape(d.code) << "</is>\n";
      }
      for (const auto& u : c.uses) o << "      <uses>" << escape(u) << "</uses>\n";
      if (c.ref) o << "      <ref>" << escape(*c.ref) << "</ref>\n";
      o << "    </properties>\n";
      for (const auto& comp : c.components) {
        o << "    <component name=\"" << escape(comp.surface) << "\"";
        if (comp.id) o << " id=\"" << *comp.id << "\"";
        if (comp.key) o << " key=\"" << *comp.key << "\"";
        if (comp.md.empty()) {
          o << "/>\n";
          continue;
        }
        o << ">\n";
        for (const auto& k : comp.md) o << "      <md key=\"" << escape(k) << "\"/>\n";
        o << "    </component>\n";
      }
      o << "  </morphological_class>\n";
    }
    for (const auto& [name, rc] : lex.rules_classes) {
      if (rc.package != pkg) continue;
      o << "  <rules_class name=\"" << escape(name) << "\" category=\"" << escape(rc.category)
        << "\">\n";
      for (const auto& r : rc.rules) {
        o << "    <rule id=\"" << escape(r.id) << "\">\n";
        for (const auto& m : r.morphemes) {
          o << "      <morpheme key=\"" << escape(m.key) << "\"";
          if (m.fixed_component) o << " component=\"" << escape(*m.fixed_component) << "\"";
          o << "/>\n";
        }
        for (const auto& b : r.idp) o << "      <idp name=\"" << escape(b) << "\"/>\n";
        o << "    </rule>\n";
      }
      o << "  </rules_class>\n";
    }
    o << "</package>\n";
    docs.push_back({pkg + ".xml", o.str()});
  }
  return docs;
}

inline std::string serialize_bundles(const std::map<std::string, std::vector<FeatureDescriptor>>& bundles) {
  std::string out;
  for (const auto& [name, ds] : bundles) {
    out += name;
    for (const auto& d : ds) out += "\t" + d.property + "." + d.code;
    out += "\n";
  }
  return out;
}

}  // namespace tmorph

#endif  // TMORPH_LEXICON_HPP_
