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

#ifndef TMORPH_TMORPH_HPP_
#define TMORPH_TMORPH_HPP_

#include "tmorph/automaton.hpp"
#include "tmorph/cache.hpp"
#include "tmorph/compiler.hpp"
#include "tmorph/lexicon.hpp"
#include "tmorph/payload.hpp"
#include "tmorph/pipeline.hpp"
#include "tmorph/scheme.hpp"
#include "tmorph/seed.hpp"
#include "tmorph/translit.hpp"

#endif  // TMORPH_TMORPH_HPP_
