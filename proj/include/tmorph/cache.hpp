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

// Binary cache of a CompiledLexicon.
//
// Layout: the 8-byte magic "TMORPHC\0", a u32 format version, then the
// property table, rule index, rules class categories, lexicon counts and the
// category automata (state, transition and payload tables). Integers are
// little-endian; strings are a u32 byte length followed by the bytes. Writing
// the same CompiledLexicon always yields the same bytes.

#ifndef TMORPH_CACHE_HPP_
#define TMORPH_CACHE_HPP_

#include <array>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tmorph/compiler.hpp"

namespace tmorph {

class CacheError : public std::runtime_error {
 public:
  enum class Kind { kIo, kBadMagic, kUnsupportedVersion, kCorrupt };
  CacheError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline constexpr std::array<char, 8> kCacheMagic = {'T', 'M', 'O', 'R', 'P', 'H', 'C', '\0'};
inline constexpr std::uint32_t kCacheVersion = 1;

namespace cache_detail {

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void u8(std::uint8_t v) { out_.put(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void str(const std::string& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    out_.write(s.data(), static_cast<std::streamsize>(s.size()));
  }
  template <typename T, typename F>
  void list(const T& items, F&& each) {
    u32(static_cast<std::uint32_t>(items.size()));
    for (const auto& item : items) each(item);
  }

 private:
  std::ostream& out_;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {
    auto here = in_.tellg();
    if (here != std::istream::pos_type(-1) && in_.seekg(0, std::ios::end)) {
      remaining_ = static_cast<std::uint64_t>(in_.tellg() - here);
      in_.seekg(here);
    }
    in_.clear();
  }

  std::uint64_t remaining() const { return remaining_; }

  // Rejects a count of n items that cannot fit in the bytes left.
  std::uint32_t bounded(std::uint32_t n, std::uint64_t min_item_bytes) const {
    if (static_cast<std::uint64_t>(n) * min_item_bytes > remaining_) {
      throw CacheError(CacheError::Kind::kCorrupt, "cache file is truncated");
    }
    return n;
  }

  std::uint8_t u8() {
    int c = in_.get();
    if (c == std::char_traits<char>::eof()) {
      throw CacheError(CacheError::Kind::kCorrupt, "cache file is truncated");
    }
    if (remaining_ > 0) --remaining_;
    return static_cast<std::uint8_t>(c);
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(u8()) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(u8()) << (8 * i);
    return v;
  }
  std::string str() {
    std::uint32_t n = bounded(u32(), 1);
    std::string s(n, '\0');
    if (n && !in_.read(s.data(), n)) {
      throw CacheError(CacheError::Kind::kCorrupt, "cache file is truncated");
    }
    remaining_ -= n;
    return s;
  }

 private:
  std::istream& in_;
  std::uint64_t remaining_ = ~std::uint64_t{0};
};

inline void write_payload(Writer& w, const MorphPayload& p) {
  w.str(p.rule_id);
  w.list(p.segments, [&](const Segment& s) {
    w.str(s.cls);
    w.str(s.component);
    w.str(s.surface);
    w.u32(s.offset);
    w.u8(static_cast<std::uint8_t>(s.role));
    w.str(s.root);
    w.list(s.originals, [&](const std::string& o) { w.str(o); });
    w.u8(s.templatic ? 1 : 0);
    w.u8(s.has_ref ? 1 : 0);
  });
  w.list(p.descriptors, [&](const FeatureDescriptor& d) {
    w.str(d.property);
    w.str(d.code);
  });
}

inline MorphPayload read_payload(Reader& r) {
  MorphPayload p;
  p.rule_id = r.str();
  for (std::uint32_t n = r.u32(); n > 0; --n) {
    Segment s;
    s.cls = r.str();
    s.component = r.str();
    s.surface = r.str();
    s.offset = r.u32();
    std::uint8_t role = r.u8();
    if (role > static_cast<std::uint8_t>(Role::kSuffix)) {
      throw CacheError(CacheError::Kind::kCorrupt, "bad segment role");
    }
    s.role = static_cast<Role>(role);
    s.root = r.str();
    for (std::uint32_t k = r.u32(); k > 0; --k) s.originals.push_back(r.str());
    s.templatic = r.u8() != 0;
    s.has_ref = r.u8() != 0;
    p.segments.push_back(std::move(s));
  }
  for (std::uint32_t n = r.u32(); n > 0; --n) {
    FeatureDescriptor d;
    d.property = r.str();
    d.code = r.str();
    p.descriptors.insert(std::move(d));
  }
  return p;
}

inline void write_automaton(Writer& w, const MorphAutomaton& a) {
  w.u32(a.start());
  w.list(a.states(), [&](const MorphAutomaton::State& st) {
    w.list(st.arcs, [&](const MorphAutomaton::Arc& arc) {
      w.u8(static_cast<std::uint8_t>(arc.symbol));
      w.u32(arc.target);
    });
    w.list(st.epsilon, [&](MorphAutomaton::StateId e) { w.u32(e); });
    w.list(st.payloads, [&](const MorphPayload& p) { write_payload(w, p); });
  });
}

inline MorphAutomaton read_automaton(Reader& r) {
  MorphAutomaton a;
  std::uint32_t start = r.u32();
  std::uint32_t n = r.bounded(r.u32(), 12);
  a.reset(n);
  if (start >= a.size()) throw CacheError(CacheError::Kind::kCorrupt, "start state out of range");
  a.set_start(start);
  auto target = [&](std::uint32_t t) {
    if (t >= n) throw CacheError(CacheError::Kind::kCorrupt, "transition target out of range");
    return t;
  };
  for (std::uint32_t s = 0; s < n; ++s) {
    for (std::uint32_t k = r.u32(); k > 0; --k) {
      char sym = static_cast<char>(r.u8());
      a.add_arc(s, sym, target(r.u32()));
    }
    for (std::uint32_t k = r.u32(); k > 0; --k) a.add_epsilon(s, target(r.u32()));
    for (std::uint32_t k = r.u32(); k > 0; --k) a.add_payload(s, read_payload(r));
  }
  return a;
}

}  // namespace cache_detail

inline void write_cache(std::ostream& out, const CompiledLexicon& cl) {
  cache_detail::Writer w(out);
  out.write(kCacheMagic.data(), kCacheMagic.size());
  w.u32(kCacheVersion);
  w.list(cl.properties, [&](const PropertyInfo& p) {
    w.str(p.name);
    w.u8(p.kind == PropertyKind::kExclusive ? 0 : 1);
    w.list(p.codes, [&](const std::string& c) { w.str(c); });
  });
  auto pairs = [&](const std::map<std::string, std::string>& m) {
    w.list(m, [&](const auto& kv) {
      w.str(kv.first);
      w.str(kv.second);
    });
  };
  pairs(cl.rule_index);
  pairs(cl.rules_class_category);
  for (std::uint64_t v : {cl.counts.classes, cl.counts.components, cl.counts.rules_classes,
                          cl.counts.rules, cl.counts.properties, cl.counts.roots}) {
    w.u64(v);
  }
  w.list(cl.categories, [&](const auto& kv) {
    w.str(kv.first);
    cache_detail::write_automaton(w, kv.second);
  });
  if (!out) throw CacheError(CacheError::Kind::kIo, "cannot write cache");
}

inline CompiledLexicon read_cache(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kCacheMagic) {
    throw CacheError(CacheError::Kind::kBadMagic, "not a tmorph cache file");
  }
  cache_detail::Reader r(in);
  if (std::uint32_t v = r.u32(); v != kCacheVersion) {
    throw CacheError(CacheError::Kind::kUnsupportedVersion,
                     "cache format version " + std::to_string(v) + " is not supported (expected " +
                         std::to_string(kCacheVersion) + ")");
  }
  CompiledLexicon cl;
  for (std::uint32_t n = r.u32(); n > 0; --n) {
    PropertyInfo p;
    p.name = r.str();
    p.kind = r.u8() == 0 ? PropertyKind::kExclusive : PropertyKind::kAdditive;
    for (std::uint32_t k = r.u32(); k > 0; --k) p.codes.push_back(r.str());
    cl.properties.push_back(std::move(p));
  }
  for (auto* m : {&cl.rule_index, &cl.rules_class_category}) {
    for (std::uint32_t n = r.u32(); n > 0; --n) {
      std::string k = r.str();
      (*m)[k] = r.str();
    }
  }
  cl.counts.classes = r.u64();
  cl.counts.components = r.u64();
  cl.counts.rules_classes = r.u64();
  cl.counts.rules = r.u64();
  cl.counts.properties = r.u64();
  cl.counts.roots = r.u64();
  for (std::uint32_t n = r.u32(); n > 0; --n) {
    std::string name = r.str();
    cl.categories.emplace(std::move(name), cache_detail::read_automaton(r));
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw CacheError(CacheError::Kind::kCorrupt, "trailing bytes after cache data");
  }
  return cl;
}

inline std::string cache_bytes(const CompiledLexicon& cl) {
  std::ostringstream out(std::ios::binary);
  write_cache(out, cl);
  return out.str();
}

inline void save_cache(const std::filesystem::path& path, const CompiledLexicon& cl) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CacheError(CacheError::Kind::kIo, "cannot open " + path.string() + " for writing");
  write_cache(out, cl);
}

inline CompiledLexicon load_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError(CacheError::Kind::kIo, "cannot open " + path.string());
  return read_cache(in);
}

}  // namespace tmorph

#endif  // TMORPH_CACHE_HPP_
