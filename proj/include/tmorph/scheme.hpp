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

// Root-and-scheme word formation.
//
// A scheme is a template over the canonical alphabet in which the letters
// f, c and l stand for the first, second and third radical of a root. A run of
// the same variable letter ("eifcalla", "faccala") is one geminated slot. A
// second, separate l ("faclala") is the fourth radical of a quadriliteral root.

#ifndef TMORPH_SCHEME_HPP_
#define TMORPH_SCHEME_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tmorph/translit.hpp"

namespace tmorph {

class SchemeError : public std::runtime_error {
 public:
  enum class Kind { kInvalidRoot, kInvalidTemplate, kArityMismatch };
  SchemeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class Root {
 public:
  explicit Root(std::string radicals) : radicals_(std::move(radicals)) {
    if (radicals_.size() < 3 || radicals_.size() > 4) {
      throw SchemeError(SchemeError::Kind::kArityMismatch,
                        "root '" + radicals_ + "' must have 3 or 4 radicals");
    }
    for (char c : radicals_) {
      if (!translit::is_consonant(c)) {
        throw SchemeError(SchemeError::Kind::kInvalidRoot,
                          "root '" + radicals_ + "' contains a non-consonant");
      }
    }
  }

  const std::string& radicals() const { return radicals_; }
  std::size_t arity() const { return radicals_.size(); }

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

 private:
  std::string radicals_;
};

class Scheme {
 public:
  explicit Scheme(std::string tmpl) : template_(std::move(tmpl)) {
    std::string order;
    for (std::size_t i = 0; i < template_.size(); ++i) {
      char c = template_[i];
      if (!translit::is_symbol(c)) {
        throw SchemeError(SchemeError::Kind::kInvalidTemplate,
                          "template '" + template_ + "' has a non-alphabet symbol");
      }
      if (!is_variable(c)) {
        slot_.push_back(-1);
      } else if (i > 0 && template_[i - 1] == c) {
        slot_.push_back(slot_.back());
      } else {
        slot_.push_back(static_cast<int>(order.size()));
        order += c;
      }
    }
    if (order != "fcl" && order != "fcll") {
      throw SchemeError(SchemeError::Kind::kInvalidTemplate,
                        "template '" + template_ + "' must place slots as f..c..l(..l)");
    }
    arity_ = order.size();
  }

  static bool is_variable(char c) { return c == 'f' || c == 'c' || c == 'l'; }

  const std::string& templ() const { return template_; }
  // Number of radicals this scheme consumes.
  std::size_t arity() const { return arity_; }
  // Radical index for position i, or -1 for a constant.
  int slot(std::size_t i) const { return slot_[i]; }

  friend bool operator==(const Scheme& a, const Scheme& b) { return a.template_ == b.template_; }
  friend auto operator<=>(const Scheme& a, const Scheme& b) { return a.template_ <=> b.template_; }

 private:
  std::string template_;
  std::vector<int> slot_;
  std::size_t arity_ = 0;
};

inline bool is_valid_template(std::string_view tmpl) {
  try {
    Scheme s{std::string(tmpl)};
    return true;
  } catch (const SchemeError&) {
    return false;
  }
}

struct Stem {
  std::string surface;
  Root root;
  Scheme scheme;
};

inline Stem instantiate_scheme(const Root& root, const Scheme& scheme) {
  if (root.arity() != scheme.arity()) {
    throw SchemeError(SchemeError::Kind::kArityMismatch,
                      "root '" + root.radicals() + "' does not fit scheme '" + scheme.templ() + "'");
  }
  std::string surface = scheme.templ();
  for (std::size_t i = 0; i < surface.size(); ++i) {
    if (int s = scheme.slot(i); s >= 0) surface[i] = root.radicals()[s];
  }
  return Stem{std::move(surface), root, scheme};
}

// Every (scheme, root) pair that instantiates to `stem`, in the order of
// `schemes`.
inline std::vector<std::pair<Scheme, Root>> match_scheme(std::string_view stem,
                                                         const std::vector<Scheme>& schemes) {
  std::vector<std::pair<Scheme, Root>> out;
  for (const Scheme& scheme : schemes) {
    const std::string& t = scheme.templ();
    if (t.size() != stem.size()) continue;
    std::string radicals(scheme.arity(), '\0');
    bool ok = true;
    for (std::size_t i = 0; ok && i < t.size(); ++i) {
      int s = scheme.slot(i);
      if (s < 0) {
        ok = t[i] == stem[i];
      } else if (!translit::is_consonant(stem[i])) {
        ok = false;
      } else if (radicals[s] == '\0') {
        radicals[s] = stem[i];
      } else {
        ok = radicals[s] == stem[i];
      }
    }
    if (ok) out.emplace_back(scheme, Root(radicals));
  }
  return out;
}

}  // namespace tmorph

#endif  // TMORPH_SCHEME_HPP_
