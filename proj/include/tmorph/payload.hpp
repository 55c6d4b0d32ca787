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

// Accept-state payloads of compiled lexicon automata: the rule that produced a
// word, its morpheme decomposition, and its feature descriptors.

#ifndef TMORPH_PAYLOAD_HPP_
#define TMORPH_PAYLOAD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tmorph/lexicon.hpp"

namespace tmorph {

enum class Role : std::uint8_t { kPrefix, kStem, kSuffix };

inline Role role_of(ClassKind k) {
  switch (k) {
    case ClassKind::kPrefix: return Role::kPrefix;
    case ClassKind::kSuffix: return Role::kSuffix;
    default: return Role::kStem;
  }
}

// One morpheme of a decomposed word.
struct Segment {
  std::string cls;
  std::string component;  // as declared; the template for scheme classes
  std::string surface;    // as realized in the word
  std::uint32_t offset = 0;
  Role role = Role::kStem;
  std::string root;                    // set for scheme-expanded stems
  std::vector<std::string> originals;  // original components via <ref>
  bool templatic = false;              // component is a scheme template
  bool has_ref = false;

  std::uint32_t end() const { return offset + static_cast<std::uint32_t>(surface.size()); }
  friend bool operator==(const Segment&, const Segment&) = default;
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

struct MorphPayload {
  std::string rule_id;
  std::vector<Segment> segments;
  DescriptorSet descriptors;

  std::size_t length() const { return segments.empty() ? 0 : segments.back().end(); }

  // Decomposition of this word followed by `next`'s, descriptors unioned.
  MorphPayload then(const MorphPayload& next) const {
    MorphPayload out = *this;
    auto shift = static_cast<std::uint32_t>(length());
    for (Segment s : next.segments) {
      s.offset += shift;
      out.segments.push_back(std::move(s));
    }
    out.descriptors.insert(next.descriptors.begin(), next.descriptors.end());
    if (out.rule_id.empty()) out.rule_id = next.rule_id;
    return out;
  }

  bool has_code(std::string_view code) const {
    for (const auto& d : descriptors) {
      if (d.code == code) return true;
    }
    return false;
  }

  friend bool operator==(const MorphPayload&, const MorphPayload&) = default;
  friend auto operator<=>(const MorphPayload& a, const MorphPayload& b) {
    if (auto c = a.rule_id <=> b.rule_id; c != 0) return c;
    if (auto c = a.segments <=> b.segments; c != 0) return c;
    return a.descriptors <=> b.descriptors;
  }
};

// The part of a property declaration that compiled automata still need.
struct PropertyInfo {
  std::string name;
  PropertyKind kind = PropertyKind::kExclusive;
  std::vector<std::string> codes;
  friend bool operator==(const PropertyInfo&, const PropertyInfo&) = default;
};

inline std::vector<PropertyInfo> property_table(const Lexicon& lex) {
  std::vector<PropertyInfo> out;
  for (const auto& p : lex.properties) out.push_back({p.name, p.kind, p.descriptors});
  return out;
}

// True if no exclusive property contributes two codes.
inline bool respects_exclusivity(const DescriptorSet& ds, const std::vector<PropertyInfo>& props) {
  const FeatureDescriptor* prev = nullptr;
  for (const auto& d : ds) {
    if (prev && prev->property == d.property) {
      for (const auto& p : props) {
        if (p.name == d.property && p.kind == PropertyKind::kExclusive) return false;
      }
    }
    prev = &d;
  }
  return true;
}

// Concatenation composer that drops combinations an exclusive property
// forbids, e.g. a Pr1 prefix with a Pr3 suffix.
struct ExclusiveCompose {
  const std::vector<PropertyInfo>* properties;
  std::optional<MorphPayload> operator()(const MorphPayload& a, const MorphPayload& b) const {
    MorphPayload out = a.then(b);
    if (!respects_exclusivity(out.descriptors, *properties)) return std::nullopt;
    return out;
  }
};

}  // namespace tmorph

#endif  // TMORPH_PAYLOAD_HPP_
