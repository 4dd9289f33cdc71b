// Copyright 2026 The chroma Authors
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

#ifndef CHROMA_CHROMA_HPP
#define CHROMA_CHROMA_HPP

#include "chroma/dimacs.hpp"
#include "chroma/freeness.hpp"
#include "chroma/generators.hpp"
#include "chroma/graph.hpp"
#include "chroma/isomorphism.hpp"
#include "chroma/twins.hpp"

#include "chroma/oracle/clique.hpp"
#include "chroma/oracle/coloring.hpp"
#include "chroma/oracle/cover.hpp"
#include "chroma/oracle/matching.hpp"
#include "chroma/oracle/separators.hpp"
#include "chroma/oracle/strong_stable.hpp"

#include "chroma/structure/blowup.hpp"
#include "chroma/structure/bracelet.hpp"
#include "chroma/structure/catalog.hpp"
#include "chroma/structure/json.hpp"

#include "chroma/color/bracelet.hpp"
#include "chroma/color/c7.hpp"
#include "chroma/color/classes.hpp"
#include "chroma/color/dispatch.hpp"
#include "chroma/color/driver.hpp"
#include "chroma/color/emerald.hpp"
#include "chroma/color/spec.hpp"

#endif  // CHROMA_CHROMA_HPP
