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

#include "tmorph/automaton.hpp"

#include <gtest/gtest.h>

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"

namespace tmorph {
namespace {

using testing::Language;
using A = Automaton<std::string>;

auto tags = [](const std::string& p, const std::string& q) { return testing::compose_tags(p, q); };

std::set<std::string> words(std::initializer_list<const char*> ws) { return {ws.begin(), ws.end()}; }

TEST(Atom, AcceptsExactlyItsSurface) {
  A a = atom<std::string>("un", "p");
  EXPECT_EQ(enumerate_language(a, 2), words({"un"}));
  EXPECT_EQ(enumerate_language(a, 10), words({"un"}));
  EXPECT_EQ(atom<std::string>("a", "p").size(), 2u);
  EXPECT_EQ(lookup(a, "un"), std::vector<std::string>{"p"});
  EXPECT_TRUE(lookup(a, "u").empty());
  EXPECT_TRUE(lookup(a, "").empty());
}

TEST(Atom, EmptySurfaceIsRejected) {
  try {
    atom<std::string>("", "p");
    FAIL() << "expected AutomatonError";
  } catch (const AutomatonError& e) {
    EXPECT_EQ(e.kind(), AutomatonError::Kind::kEmptySurface);
  }
}

TEST(Atom, RandomStrings) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(1, 8), sym(0, 25);
  for (int n = 0; n < 50; ++n) {
    std::string s;
    for (int k = len(rng); k > 0; --k) s += static_cast<char>('a' + sym(rng));
    EXPECT_EQ(enumerate_language(atom<std::string>(s, "p"), s.size()), std::set<std::string>{s});
  }
}

TEST(Union, TwoAtoms) {
  A u = unite(atom<std::string>("un", "p"), atom<std::string>("an", "q"));
  EXPECT_EQ(enumerate_language(u, 2), words({"un", "an"}));
  A same = unite(atom<std::string>("un", "p"), atom<std::string>("un", "q"));
  EXPECT_EQ(lookup(same, "un"), (std::vector<std::string>{"p", "q"}));
}

TEST(Union, Idempotent) {
  A a = unite(atom<std::string>("ab", "p"), atom<std::string>("b", "q"));
  EXPECT_EQ(enumerate_language(unite(a, a), 6), enumerate_language(a, 6));
}

TEST(Concat, ComposesPayloads) {
  A num = unite(atom<std::string>("wAHid", "n1"), atom<std::string>("~amAn", "n8"));
  A c = concat(num, atom<std::string>("un", "un"), tags);
  EXPECT_EQ(enumerate_language(c, 10), words({"wAHidun", "~amAnun"}));
  EXPECT_EQ(lookup(c, "wAHidun"), std::vector<std::string>{"n1.un"});
}

TEST(Concat, DroppedCompositionsLeaveNoWord) {
  A a = unite(atom<std::string>("x", "keep"), atom<std::string>("y", "drop"));
  A c = concat(a, atom<std::string>("z", "z"), [](const std::string& p, const std::string& q) {
    return p == "drop" ? std::nullopt : std::optional<std::string>(p + q);
  });
  EXPECT_EQ(enumerate_language(c, 3), words({"xz"}));
}

TEST(Determinize, FourSchemes) {
  A u = unite_all<std::string>({atom<std::string>("facala", "1"), atom<std::string>("facila", "2"),
                                atom<std::string>("facula", "3"), atom<std::string>("faclala", "4")});
  A d = determinize(u);
  EXPECT_TRUE(d.is_deterministic());
  EXPECT_EQ(d.accept_count(), 4u);
  EXPECT_EQ(enumerate_language(d, 7), words({"facala", "facila", "facula", "faclala"}));
  EXPECT_EQ(lookup(d, "facila"), std::vector<std::string>{"2"});
}

TEST(Determinize, DeterministicInputKeepsLanguage) {
  A a = determinize(unite(atom<std::string>("ab", "p"), atom<std::string>("ac", "q")));
  A again = determinize(a);
  EXPECT_EQ(testing::observed(again, 4), testing::observed(a, 4));
  EXPECT_EQ(again.size(), a.size());
}

TEST(Minimize, RequiresDeterministicInput) {
  A u = unite(atom<std::string>("ab", "p"), atom<std::string>("ab", "q"));
  try {
    minimize(u);
    FAIL() << "expected AutomatonError";
  } catch (const AutomatonError& e) {
    EXPECT_EQ(e.kind(), AutomatonError::Kind::kNotDeterministic);
  }
}

TEST(Minimize, MergesEqualSuffixesKeepsDistinctPayloads) {
  A same = determinize(unite(atom<std::string>("ab", "p"), atom<std::string>("cb", "p")));
  EXPECT_EQ(minimize(same).size(), 3u);
  A distinct = determinize(unite(atom<std::string>("ab", "p"), atom<std::string>("cb", "q")));
  A m = minimize(distinct);
  EXPECT_EQ(m.accept_count(), 2u);
  EXPECT_EQ(lookup(m, "ab"), std::vector<std::string>{"p"});
  EXPECT_EQ(lookup(m, "cb"), std::vector<std::string>{"q"});
}

TEST(Trim, DropsDeadStates) {
  A a = atom<std::string>("ab", "p");
  auto dead = a.add_state();
  a.add_arc(a.start(), 'z', dead);
  EXPECT_EQ(trim(a).size(), 3u);
  EXPECT_EQ(enumerate_language(trim(a), 3), words({"ab"}));
}

TEST(MapPayloads, OptionalResultsDrop) {
  A a = unite(atom<std::string>("a", "keep"), atom<std::string>("b", "drop"));
  A m = a.map_payloads([](const std::string& p) -> std::optional<std::string> {
    if (p == "drop") return std::nullopt;
    return p + "!";
  });
  EXPECT_EQ(enumerate_language(m, 1), words({"a"}));
  EXPECT_EQ(lookup(m, "a"), std::vector<std::string>{"keep!"});
}

// Algebra against the brute-force oracle on random machines.
class RandomPairs : public ::testing::TestWithParam<unsigned> {};

TEST_P(RandomPairs, AgreeWithOracle) {
  constexpr std::size_t kLen = 6;
  const std::string sigma = "abc";
  std::mt19937 rng(GetParam());
  for (int n = 0; n < 25; ++n) {
    auto sa = testing::random_nfa(rng, sigma.substr(0, 1 + rng() % 3), 6, "a");
    auto sb = testing::random_nfa(rng, sigma.substr(0, 1 + rng() % 3), 6, "b");
    A a = testing::build(sa), b = testing::build(sb);
    Language la = testing::language(sa, sigma, kLen), lb = testing::language(sb, sigma, kLen);

    EXPECT_EQ(testing::observed(a, kLen), la);
    EXPECT_EQ(testing::observed(determinize(a), kLen), la);
    EXPECT_EQ(testing::observed(minimize(determinize(a)), kLen), la);
    EXPECT_EQ(testing::observed(trim(a), kLen), la);
    EXPECT_LE(minimize(determinize(a)).size(), determinize(a).size());

    Language lu = testing::union_language(la, lb);
    A u = unite(a, b);
    EXPECT_EQ(testing::observed(u, kLen), lu);
    EXPECT_EQ(testing::observed(minimize(determinize(u)), kLen), lu);

    Language lc = testing::concat_language(la, lb, kLen);
    A c = concat(a, b, tags);
    EXPECT_EQ(testing::observed(c, kLen), lc);
    EXPECT_EQ(testing::observed(minimize(determinize(c)), kLen), lc);

    for (const auto& w : testing::all_words(sigma, 4)) {
      auto hits = lookup(c, w);
      auto it = lc.find(w);
      if (it == lc.end()) {
        EXPECT_TRUE(hits.empty()) << w;
      } else {
        EXPECT_EQ(std::set<std::string>(hits.begin(), hits.end()), it->second) << w;
      }
    }
  }
}

TEST(Lookup, NonEmptyExactlyOnEnumeratedWords) {
  std::mt19937 rng(99);
  for (int n = 0; n < 100; ++n) {
    A a = testing::build(testing::random_nfa(rng, "ab", 6, "t"));
    for (const auto& w : testing::all_words("ab", 5)) {
      EXPECT_EQ(!lookup(a, w).empty(), enumerate_language(a, w.size()).count(w) == 1) << w;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomPairs, ::testing::Range(1u, 9u));

}  // namespace
}  // namespace tmorph
