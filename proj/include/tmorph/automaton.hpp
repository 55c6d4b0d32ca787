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

// Finite-state acceptors over the canonical alphabet whose accept states carry
// payloads, and the algebra used to build them from lexicon rules.
//
// An automaton has exactly one start state. A state is accepting iff its
// payload list is non-empty; payload lists are kept sorted and duplicate-free.
// Payload must be copyable and totally ordered.

#ifndef TMORPH_AUTOMATON_HPP_
#define TMORPH_AUTOMATON_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace tmorph {

class AutomatonError : public std::runtime_error {
 public:
  enum class Kind { kEmptySurface, kNotDeterministic };
  AutomatonError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

template <typename Payload>
class Automaton {
 public:
  using StateId = std::uint32_t;
  using payload_type = Payload;

  struct Arc {
    char symbol;
    StateId target;
    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
  };

  struct State {
    std::vector<Arc> arcs;
    std::vector<StateId> epsilon;
    std::vector<Payload> payloads;
    bool accepting() const { return !payloads.empty(); }
    friend bool operator==(const State&, const State&) = default;
  };

  // The empty-language automaton: a lone, non-accepting start state.
  Automaton() : states_(1) {}

  StateId start() const { return start_; }
  void set_start(StateId s) { start_ = s; }
  std::size_t size() const { return states_.size(); }
  const State& state(StateId s) const { return states_[s]; }
  const std::vector<State>& states() const { return states_; }

  StateId add_state() {
    states_.emplace_back();
    return static_cast<StateId>(states_.size() - 1);
  }
  void add_arc(StateId from, char symbol, StateId to) { states_[from].arcs.push_back({symbol, to}); }
  void add_epsilon(StateId from, StateId to) { states_[from].epsilon.push_back(to); }

  void add_payload(StateId s, Payload p) {
    auto& v = states_[s].payloads;
    auto it = std::lower_bound(v.begin(), v.end(), p);
    if (it == v.end() || *it != p) v.insert(it, std::move(p));
  }
  void clear_payloads(StateId s) { states_[s].payloads.clear(); }

  // Appends `other`'s states, renumbered; returns the id offset.
  StateId append(const Automaton& other) {
    StateId offset = static_cast<StateId>(states_.size());
    states_.reserve(states_.size() + other.states_.size());
    for (const State& st : other.states_) {
      State copy = st;
      for (Arc& a : copy.arcs) a.target += offset;
      for (StateId& e : copy.epsilon) e += offset;
      states_.push_back(std::move(copy));
    }
    return offset;
  }

  bool is_deterministic() const {
    for (const State& st : states_) {
      if (!st.epsilon.empty()) return false;
      std::vector<char> seen;
      for (const Arc& a : st.arcs) seen.push_back(a.symbol);
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    }
    return true;
  }

  std::size_t accept_count() const {
    return static_cast<std::size_t>(
        std::count_if(states_.begin(), states_.end(), [](const State& s) { return s.accepting(); }));
  }
  std::size_t transition_count() const {
    std::size_t n = 0;
    for (const State& st : states_) n += st.arcs.size() + st.epsilon.size();
    return n;
  }
  std::size_t payload_count() const {
    std::size_t n = 0;
    for (const State& st : states_) n += st.payloads.size();
    return n;
  }

  // Rewrites every payload through `f`. If `f` returns an optional, empty
  // results are dropped.
  template <typename F>
  auto map_payloads(F&& f) const {
    using R = std::invoke_result_t<F&, const Payload&>;
    using Q = typename detail_unwrap<R>::type;
    Automaton<Q> out;
    out.reset(states_.size());
    out.set_start(start_);
    for (StateId s = 0; s < states_.size(); ++s) {
      for (const Arc& a : states_[s].arcs) out.add_arc(s, a.symbol, a.target);
      for (StateId e : states_[s].epsilon) out.add_epsilon(s, e);
      for (const Payload& p : states_[s].payloads) {
        if constexpr (detail_unwrap<R>::optional) {
          if (auto q = f(p)) out.add_payload(s, std::move(*q));
        } else {
          out.add_payload(s, f(p));
        }
      }
    }
    return out;
  }

  // Discards all states and creates `n` empty ones.
  void reset(std::size_t n) {
    states_.assign(std::max<std::size_t>(n, 1), State{});
    start_ = 0;
  }

  friend bool operator==(const Automaton&, const Automaton&) = default;

 private:
  template <typename T>
  struct detail_unwrap {
    using type = T;
    static constexpr bool optional = false;
  };
  template <typename T>
  struct detail_unwrap<std::optional<T>> {
    using type = T;
    static constexpr bool optional = true;
  };

  std::vector<State> states_;
  StateId start_ = 0;
};

// Default payload composition for concat: `a.then(b)`, which may return either
// a Payload or an std::optional<Payload> (empty = the combination is invalid).
template <typename Payload>
struct PayloadCompose {
  auto operator()(const Payload& a, const Payload& b) const { return a.then(b); }
};

namespace automaton_detail {

template <typename T>
std::optional<T> as_optional(T v) {
  return std::optional<T>(std::move(v));
}
template <typename T>
std::optional<T> as_optional(std::optional<T> v) {
  return v;
}

template <typename P>
void epsilon_closure(const Automaton<P>& a, std::vector<typename Automaton<P>::StateId>& set) {
  using StateId = typename Automaton<P>::StateId;
  std::vector<StateId> stack(set.begin(), set.end());
  std::set<StateId> seen(set.begin(), set.end());
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (StateId e : a.state(s).epsilon) {
      if (seen.insert(e).second) stack.push_back(e);
    }
  }
  set.assign(seen.begin(), seen.end());
}

template <typename P>
std::vector<P> payloads_of(const Automaton<P>& a,
                           const std::vector<typename Automaton<P>::StateId>& set) {
  std::vector<P> out;
  for (auto s : set) {
    const auto& ps = a.state(s).payloads;
    out.insert(out.end(), ps.begin(), ps.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Successor subsets of `set`, keyed by symbol, each epsilon-closed.
template <typename P>
std::map<char, std::vector<typename Automaton<P>::StateId>> step_all(
    const Automaton<P>& a, const std::vector<typename Automaton<P>::StateId>& set) {
  std::map<char, std::vector<typename Automaton<P>::StateId>> next;
  for (auto s : set) {
    for (const auto& arc : a.state(s).arcs) next[arc.symbol].push_back(arc.target);
  }
  for (auto& [sym, targets] : next) epsilon_closure(a, targets);
  return next;
}

}  // namespace automaton_detail

// Linear chain accepting exactly {surface}.
template <typename Payload>
Automaton<Payload> atom(std::string_view surface, Payload payload) {
  if (surface.empty()) {
    throw AutomatonError(AutomatonError::Kind::kEmptySurface, "atom of an empty surface");
  }
  Automaton<Payload> a;
  auto prev = a.start();
  for (char c : surface) {
    auto next = a.add_state();
    a.add_arc(prev, c, next);
    prev = next;
  }
  a.add_payload(prev, std::move(payload));
  return a;
}

// L = L(a)L(b). For every accepting run u in `a` with payload p and v in `b`
// with payload q, uv is accepted with payload compose(p, q). `b` is copied
// once per distinct payload of `a` so that composition stays exact.
template <typename Payload, typename Compose = PayloadCompose<Payload>>
Automaton<Payload> concat(const Automaton<Payload>& a, const Automaton<Payload>& b,
                          Compose compose = Compose{}) {
  using StateId = typename Automaton<Payload>::StateId;
  Automaton<Payload> out = a;
  std::map<Payload, StateId> copies;
  for (StateId s = 0; s < a.size(); ++s) {
    if (!a.state(s).accepting()) continue;
    out.clear_payloads(s);
    for (const Payload& p : a.state(s).payloads) {
      auto it = copies.find(p);
      if (it == copies.end()) {
        Automaton<Payload> tail = b.map_payloads(
            [&](const Payload& q) { return automaton_detail::as_optional(compose(p, q)); });
        StateId offset = out.append(tail);
        it = copies.emplace(p, offset + b.start()).first;
      }
      out.add_epsilon(s, it->second);
    }
  }
  return out;
}

// L = union of the inputs' languages; payloads keep their origin.
template <typename Payload>
Automaton<Payload> unite_all(const std::vector<Automaton<Payload>>& parts) {
  Automaton<Payload> out;
  for (const auto& part : parts) {
    auto offset = out.append(part);
    out.add_epsilon(out.start(), offset + part.start());
  }
  return out;
}

template <typename Payload>
Automaton<Payload> unite(const Automaton<Payload>& a, const Automaton<Payload>& b) {
  return unite_all(std::vector<Automaton<Payload>>{a, b});
}

// Subset construction. An accepting subset carries the union of its members'
// payloads. States are numbered in breadth-first order from the start.
template <typename Payload>
Automaton<Payload> determinize(const Automaton<Payload>& a) {
  using StateId = typename Automaton<Payload>::StateId;
  using Subset = std::vector<StateId>;
  Automaton<Payload> out;
  std::map<Subset, StateId> ids;
  std::vector<Subset> queue;

  Subset init{a.start()};
  automaton_detail::epsilon_closure(a, init);
  ids.emplace(init, out.start());
  queue.push_back(init);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Subset current = queue[head];
    StateId from = ids.at(current);
    for (Payload& p : automaton_detail::payloads_of(a, current)) out.add_payload(from, std::move(p));
    for (auto& [sym, next] : automaton_detail::step_all(a, current)) {
      auto it = ids.find(next);
      if (it == ids.end()) {
        it = ids.emplace(next, out.add_state()).first;
        queue.push_back(next);
      }
      out.add_arc(from, sym, it->second);
    }
  }
  return out;
}

// Drops states that are unreachable from the start or cannot reach an accept
// state. The start state is always kept.
template <typename Payload>
Automaton<Payload> trim(const Automaton<Payload>& a) {
  using StateId = typename Automaton<Payload>::StateId;
  std::vector<bool> reach(a.size(), false), live(a.size(), false);
  std::vector<std::vector<StateId>> reverse(a.size());
  std::vector<StateId> stack{a.start()};
  reach[a.start()] = true;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    auto visit = [&](StateId t) {
      reverse[t].push_back(s);
      if (!reach[t]) {
        reach[t] = true;
        stack.push_back(t);
      }
    };
    for (const auto& arc : a.state(s).arcs) visit(arc.target);
    for (StateId e : a.state(s).epsilon) visit(e);
  }
  for (StateId s = 0; s < a.size(); ++s) {
    if (reach[s] && a.state(s).accepting()) {
      live[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (StateId p : reverse[s]) {
      if (!live[p]) {
        live[p] = true;
        stack.push_back(p);
      }
    }
  }
  std::vector<StateId> remap(a.size(), 0);
  std::vector<StateId> keep;
  keep.push_back(a.start());
  for (StateId s = 0; s < a.size(); ++s) {
    if (s != a.start() && reach[s] && live[s]) keep.push_back(s);
  }
  for (StateId i = 0; i < keep.size(); ++i) remap[keep[i]] = i;
  Automaton<Payload> out;
  out.reset(keep.size());
  for (StateId i = 0; i < keep.size(); ++i) {
    const auto& st = a.state(keep[i]);
    for (const auto& arc : st.arcs) {
      if (live[arc.target]) out.add_arc(i, arc.symbol, remap[arc.target]);
    }
    for (StateId e : st.epsilon) {
      if (live[e]) out.add_epsilon(i, remap[e]);
    }
    for (const Payload& p : st.payloads) out.add_payload(i, p);
  }
  return out;
}

// Moore partition refinement on a trimmed DFA. Two states are merged only if
// they carry the same payload list and agree on every transition, so
// payload-distinct accept states always survive.
template <typename Payload>
Automaton<Payload> minimize(const Automaton<Payload>& input) {
  using StateId = typename Automaton<Payload>::StateId;
  if (!input.is_deterministic()) {
    throw AutomatonError(AutomatonError::Kind::kNotDeterministic,
                         "minimize requires a deterministic automaton");
  }
  Automaton<Payload> a = trim(input);
  const std::size_t n = a.size();

  std::vector<std::size_t> block(n);
  {
    std::map<std::vector<Payload>, std::size_t> initial;
    for (StateId s = 0; s < n; ++s) {
      block[s] = initial.emplace(a.state(s).payloads, initial.size()).first->second;
    }
  }
  std::size_t blocks = 0;
  for (;;) {
    using Signature = std::pair<std::size_t, std::vector<std::pair<char, std::size_t>>>;
    std::map<Signature, std::size_t> refined;
    std::vector<std::size_t> next(n);
    for (StateId s = 0; s < n; ++s) {
      Signature sig{block[s], {}};
      for (const auto& arc : a.state(s).arcs) sig.second.emplace_back(arc.symbol, block[arc.target]);
      std::sort(sig.second.begin(), sig.second.end());
      next[s] = refined.emplace(std::move(sig), refined.size()).first->second;
    }
    std::size_t count = refined.size();
    block.swap(next);
    if (count == blocks) break;
    blocks = count;
  }

  // Number blocks breadth-first from the start for a canonical layout.
  constexpr StateId kUnset = ~StateId{0};
  std::vector<StateId> id_of(blocks, kUnset);
  std::vector<StateId> representative;
  Automaton<Payload> out;
  id_of[block[a.start()]] = out.start();
  representative.push_back(a.start());
  for (std::size_t head = 0; head < representative.size(); ++head) {
    StateId rep = representative[head];
    std::vector<typename Automaton<Payload>::Arc> arcs = a.state(rep).arcs;
    std::sort(arcs.begin(), arcs.end());
    for (const auto& arc : arcs) {
      std::size_t b = block[arc.target];
      if (id_of[b] == kUnset) {
        id_of[b] = out.add_state();
        representative.push_back(arc.target);
      }
      out.add_arc(static_cast<StateId>(head), arc.symbol, id_of[b]);
    }
    for (const Payload& p : a.state(rep).payloads) out.add_payload(static_cast<StateId>(head), p);
  }
  return out;
}

// All payloads of accepting runs on `word`, sorted.
template <typename Payload>
std::vector<Payload> lookup(const Automaton<Payload>& a, std::string_view word) {
  using StateId = typename Automaton<Payload>::StateId;
  std::vector<StateId> current{a.start()};
  automaton_detail::epsilon_closure(a, current);
  for (char c : word) {
    std::vector<StateId> next;
    for (StateId s : current) {
      for (const auto& arc : a.state(s).arcs) {
        if (arc.symbol == c) next.push_back(arc.target);
      }
    }
    if (next.empty()) return {};
    automaton_detail::epsilon_closure(a, next);
    current.swap(next);
  }
  return automaton_detail::payloads_of(a, current);
}

// Every accepted word of length <= max_len with its payloads.
template <typename Payload>
std::map<std::string, std::vector<Payload>> enumerate_with_payloads(const Automaton<Payload>& a,
                                                                    std::size_t max_len) {
  using StateId = typename Automaton<Payload>::StateId;
  std::map<std::string, std::vector<Payload>> out;
  std::string word;
  std::vector<StateId> init{a.start()};
  automaton_detail::epsilon_closure(a, init);

  auto walk = [&](auto&& self, const std::vector<StateId>& set) -> void {
    auto payloads = automaton_detail::payloads_of(a, set);
    if (!payloads.empty()) out.emplace(word, std::move(payloads));
    if (word.size() == max_len) return;
    for (auto& [sym, next] : automaton_detail::step_all(a, set)) {
      word.push_back(sym);
      self(self, next);
      word.pop_back();
    }
  };
  walk(walk, init);
  return out;
}

template <typename Payload>
std::set<std::string> enumerate_language(const Automaton<Payload>& a, std::size_t max_len) {
  std::set<std::string> out;
  for (auto& [w, ps] : enumerate_with_payloads(a, max_len)) out.insert(w);
  return out;
}

}  // namespace tmorph

#endif  // TMORPH_AUTOMATON_HPP_
