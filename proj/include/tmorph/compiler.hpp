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

// Compiles lexicon rules into payload automata.
//
// A morpheme reference becomes the union of atoms over the components it
// selects (scheme classes are first expanded over the root inventory), a rule
// the concatenation of its morphemes, and a rules class the union of its rules.
// Rules classes sharing a category are united into one category automaton.

#ifndef TMORPH_COMPILER_HPP_
#define TMORPH_COMPILER_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tmorph/automaton.hpp"
#include "tmorph/lexicon.hpp"
#include "tmorph/payload.hpp"
#include "tmorph/scheme.hpp"

namespace tmorph {

using MorphAutomaton = Automaton<MorphPayload>;

class CompileError : public std::runtime_error {
 public:
  enum class Kind { kUnresolvedKey, kInvalidTemplate, kUnknownBundle, kInvalidLexicon };
  CompileError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct CompileOptions {
  bool determinize = false;
  bool minimize = false;
};

struct LexiconCounts {
  std::uint64_t classes = 0;
  std::uint64_t components = 0;
  std::uint64_t rules_classes = 0;
  std::uint64_t rules = 0;
  std::uint64_t properties = 0;
  std::uint64_t roots = 0;
  friend bool operator==(const LexiconCounts&, const LexiconCounts&) = default;
};

struct CompiledLexicon {
  std::vector<PropertyInfo> properties;
  std::map<std::string, MorphAutomaton> categories;
  std::map<std::string, std::string> rule_index;  // rule id -> rules class
  std::map<std::string, std::string> rules_class_category;
  LexiconCounts counts;

  std::string category_of_rule(const std::string& rule_id) const {
    return rules_class_category.at(rule_index.at(rule_id));
  }
  friend bool operator==(const CompiledLexicon&, const CompiledLexicon&) = default;
};

namespace compiler_detail {

inline Segment segment_for(const Lexicon& lex, const MorphClass& cls, const MorphComponent& comp) {
  Segment s;
  s.cls = cls.name;
  s.component = comp.surface;
  s.surface = comp.surface;
  s.role = role_of(cls.kind);
  s.templatic = cls.kind == ClassKind::kScheme;
  s.has_ref = cls.ref.has_value();
  if (cls.ref && comp.key) {
    try {
      for (const auto& o : originals_of(lex, cls, comp)) s.originals.push_back(o.surface);
    } catch (const LexiconError& e) {
      throw CompileError(CompileError::Kind::kUnresolvedKey, e.what());
    }
  }
  return s;
}

inline const MorphClass& class_or_throw(const Lexicon& lex, const std::string& name) {
  const MorphClass* cls = lex.find_class(name);
  if (!cls) throw CompileError(CompileError::Kind::kUnresolvedKey, "unknown class '" + name + "'");
  return *cls;
}

}  // namespace compiler_detail

// Atoms of one scheme component instantiated over every root of matching
// arity.
inline std::vector<MorphAutomaton> scheme_atoms(const Lexicon& lex, const MorphClass& cls,
                                                const MorphComponent& comp,
                                                const std::vector<Root>& roots) {
  std::vector<MorphAutomaton> out;
  std::optional<Scheme> scheme;
  try {
    scheme.emplace(comp.surface);
  } catch (const SchemeError& e) {
    throw CompileError(CompileError::Kind::kInvalidTemplate, cls.name + ": " + e.what());
  }
  Segment base = compiler_detail::segment_for(lex, cls, comp);
  DescriptorSet ds = effective_descriptors(lex, cls, comp);
  for (const Root& root : roots) {
    if (root.arity() != scheme->arity()) continue;
    Stem stem = instantiate_scheme(root, *scheme);
    MorphPayload p;
    Segment s = base;
    s.surface = stem.surface;
    s.root = root.radicals();
    p.segments.push_back(std::move(s));
    p.descriptors = ds;
    out.push_back(atom(stem.surface, std::move(p)));
  }
  return out;
}

// Union over (root, scheme) of the instantiated stems of `scheme_class`.
inline MorphAutomaton expand_schemes(const Lexicon& lex, const std::string& scheme_class,
                                     const std::vector<Root>& roots) {
  const MorphClass& cls = compiler_detail::class_or_throw(lex, scheme_class);
  std::vector<MorphAutomaton> parts;
  for (const auto& comp : cls.components) {
    for (auto& a : scheme_atoms(lex, cls, comp, roots)) parts.push_back(std::move(a));
  }
  return unite_all(parts);
}

// Union of atoms over a class's component surfaces taken literally, without
// root expansion.
inline MorphAutomaton compile_literal(const Lexicon& lex, const std::string& class_name) {
  const MorphClass& cls = compiler_detail::class_or_throw(lex, class_name);
  std::vector<MorphAutomaton> parts;
  for (const auto& comp : cls.components) {
    MorphPayload p;
    p.segments.push_back(compiler_detail::segment_for(lex, cls, comp));
    p.descriptors = effective_descriptors(lex, cls, comp);
    parts.push_back(atom(comp.surface, std::move(p)));
  }
  return unite_all(parts);
}

inline MorphAutomaton compile_morpheme(const Lexicon& lex, const MorphemeRef& m,
                                       const std::vector<Root>& roots) {
  const MorphClass& cls = compiler_detail::class_or_throw(lex, m.class_name());
  auto selected = select_components(lex, m);
  if (selected.empty()) {
    throw CompileError(CompileError::Kind::kUnresolvedKey,
                       "morpheme '" + m.key + "'" +
                           (m.fixed_component ? " component '" + *m.fixed_component + "'" : "") +
                           " selects no component");
  }
  std::vector<MorphAutomaton> parts;
  for (std::size_t i : selected) {
    const MorphComponent& comp = cls.components[i];
    if (cls.kind == ClassKind::kScheme) {
      for (auto& a : scheme_atoms(lex, cls, comp, roots)) parts.push_back(std::move(a));
      continue;
    }
    MorphPayload p;
    p.segments.push_back(compiler_detail::segment_for(lex, cls, comp));
    p.descriptors = effective_descriptors(lex, cls, comp);
    parts.push_back(atom(comp.surface, std::move(p)));
  }
  return unite_all(parts);
}

inline DescriptorSet bundle_descriptors(const Lexicon& lex, const MorphRule& r) {
  DescriptorSet out;
  for (const auto& name : r.idp) {
    auto it = lex.bundles.find(name);
    if (it == lex.bundles.end()) {
      throw CompileError(CompileError::Kind::kUnknownBundle,
                         "rule '" + r.id + "' uses unknown bundle '" + name + "'");
    }
    out.insert(it->second.begin(), it->second.end());
  }
  return out;
}

inline MorphAutomaton compile_rule(const Lexicon& lex, const MorphRule& r, const std::vector<Root>& roots) {
  std::vector<PropertyInfo> props = property_table(lex);
  ExclusiveCompose compose{&props};
  MorphAutomaton acc = compile_morpheme(lex, r.morphemes.front(), roots);
  for (std::size_t i = 1; i < r.morphemes.size(); ++i) {
    acc = trim(concat(acc, compile_morpheme(lex, r.morphemes[i], roots), compose));
  }
  DescriptorSet extra = bundle_descriptors(lex, r);
  return acc.map_payloads([&](const MorphPayload& p) -> std::optional<MorphPayload> {
    MorphPayload q = p;
    q.rule_id = r.id;
    q.descriptors.insert(extra.begin(), extra.end());
    if (!respects_exclusivity(q.descriptors, props)) return std::nullopt;
    return q;
  });
}

inline MorphAutomaton compile_rules_class(const Lexicon& lex, const std::vector<MorphRule>& rules,
                                          const std::vector<Root>& roots) {
  std::vector<MorphAutomaton> parts;
  for (const auto& r : rules) parts.push_back(compile_rule(lex, r, roots));
  return unite_all(parts);
}

inline MorphAutomaton finish(MorphAutomaton a, const CompileOptions& opts) {
  a = trim(a);
  if (opts.determinize || opts.minimize) a = determinize(a);
  if (opts.minimize) a = minimize(a);
  return a;
}

inline CompiledLexicon compile_all(const Lexicon& lex, const std::vector<Root>& roots,
                                   const CompileOptions& opts = {}) {
  if (auto report = validate_lexicon(lex); !report.ok()) {
    throw CompileError(CompileError::Kind::kInvalidLexicon,
                       "lexicon has " + std::to_string(report.violations.size()) +
                           " violation(s), first: " + report.violations.front().str());
  }
  CompiledLexicon out;
  out.properties = property_table(lex);
  std::map<std::string, std::vector<MorphAutomaton>> parts;
  for (const auto& [name, rc] : lex.rules_classes) {
    out.rules_class_category[name] = rc.category;
    for (const auto& r : rc.rules) out.rule_index[r.id] = name;
    parts[rc.category].push_back(compile_rules_class(lex, rc.rules, roots));
  }
  for (auto& [category, automata] : parts) out.categories[category] = finish(unite_all(automata), opts);
  out.counts.classes = lex.classes.size();
  out.counts.components = lex.component_count();
  out.counts.rules_classes = lex.rules_classes.size();
  out.counts.rules = lex.rule_count();
  out.counts.properties = lex.properties.size();
  out.counts.roots = roots.size();
  return out;
}

}  // namespace tmorph

#endif  // TMORPH_COMPILER_HPP_
