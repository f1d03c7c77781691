// Copyright 2026 The Coxtour Authors.
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

#ifndef COXTOUR_IO_H_
#define COXTOUR_IO_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "coxtour/rational.h"
#include "coxtour/roots.h"
#include "coxtour/score.h"
#include "coxtour/sgraph.h"

namespace coxtour {

using Json = nlohmann::ordered_json;

// {"kind": "C", "n": 7}
Json root_type_to_json(const RootType& t);
RootType root_type_from_json(const Json& j);

// {"root_type": ..., "neg_edges": [[2, 1], ...], "pos_edges": ...,
//  "half_edges": [...], "loops": [...]}, 1-based. Pairs may come in either
// order on input; the graph is validated after loading.
Json graph_to_json(const SignedGraph& g);
SignedGraph graph_from_json(const Json& j);

// {"graph": ..., "probs": {"neg:2-1": "3/4", ...}, "mean_score": ["1/2", ...]}.
// A stored probability on "neg:i-j" is the chance that i beats j.
Json tournament_to_json(const Tournament& t);
// Missing edges default to 1/2. If "mean_score" is present it must match the
// recomputed value exactly (kParse otherwise).
Tournament tournament_from_json(const Json& j);

Json rationals_to_json(std::span<const Rational> v);

// Whole file as text; kParse (with the path) on failure.
std::string read_file(const std::string& path);
Json parse_json(std::string_view text);

// A score list given inline ("(0, 5/2)") or as the path of a file holding one.
RationalVector load_scores(const std::string& arg);
std::vector<int> load_integers(const std::string& arg);

}  // namespace coxtour

#endif  // COXTOUR_IO_H_
