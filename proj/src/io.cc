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

#include "coxtour/io.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "coxtour/error.h"

namespace coxtour {
namespace {

int vertex_from_json(const Json& v) {
  if (!v.is_number_integer())
    fail(ErrorCode::kParse, "vertex must be an integer, got " + v.dump());
  int i = v.get<int>();
  if (i < 1) fail(ErrorCode::kParse, "vertices are 1-based, got " + std::to_string(i));
  return i - 1;
}

std::vector<VertexPair> pairs_from_json(const Json& j, const char* key) {
  std::vector<VertexPair> out;
  if (!j.contains(key)) return out;
  for (const Json& p : j.at(key)) {
    if (!p.is_array() || p.size() != 2)
      fail(ErrorCode::kParse, std::string(key) + " entries must be pairs");
    out.emplace_back(vertex_from_json(p[0]), vertex_from_json(p[1]));
  }
  return out;
}

std::vector<int> vertices_from_json(const Json& j, const char* key) {
  std::vector<int> out;
  if (!j.contains(key)) return out;
  for (const Json& v : j.at(key)) out.push_back(vertex_from_json(v));
  return out;
}

Rational rational_from_json(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  // Reparse the literal so decimals stay exact.
  if (v.is_number()) return parse_rational(v.dump());
  fail(ErrorCode::kParse, "expected a number, got " + v.dump());
}

}  // namespace

Json root_type_to_json(const RootType& t) {
  return Json{{"kind", to_string(t.kind)}, {"n", t.n}};
}

RootType root_type_from_json(const Json& j) {
  try {
    return RootType::make(parse_root_kind(j.at("kind").get<std::string>()),
                          j.at("n").get<int>());
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParse, std::string("bad root_type: ") + e.what());
  }
}

Json graph_to_json(const SignedGraph& g) {
  Json j;
  j["root_type"] = root_type_to_json(g.root_type());
  auto pairs = [](const std::vector<VertexPair>& v) {
    Json a = Json::array();
    for (auto [i, k] : v) a.push_back({i + 1, k + 1});
    return a;
  };
  auto singles = [](const std::vector<int>& v) {
    Json a = Json::array();
    for (int i : v) a.push_back(i + 1);
    return a;
  };
  j["neg_edges"] = pairs(g.neg_edges());
  j["pos_edges"] = pairs(g.pos_edges());
  j["half_edges"] = singles(g.half_edges());
  j["loops"] = singles(g.loops());
  return j;
}

SignedGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("root_type"))
    fail(ErrorCode::kParse, "graph JSON needs a root_type");
  SignedGraph g;
  try {
    g = SignedGraph(root_type_from_json(j.at("root_type")),
                    pairs_from_json(j, "neg_edges"), pairs_from_json(j, "pos_edges"),
                    vertices_from_json(j, "half_edges"), vertices_from_json(j, "loops"));
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParse, std::string("bad graph: ") + e.what());
  }
  require_valid(g);
  return g;
}

Json rationals_to_json(std::span<const Rational> v) {
  Json a = Json::array();
  for (const Rational& q : v) a.push_back(format_rational(q));
  return a;
}

Json tournament_to_json(const Tournament& t) {
  Json j;
  j["graph"] = graph_to_json(t.graph());
  Json probs = Json::object();
  for (std::size_t e = 0; e < t.graph().edge_count(); ++e)
    probs[edge_id(t.graph().edges()[e])] = format_rational(t.probs()[e]);
  j["probs"] = std::move(probs);
  j["mean_score"] = rationals_to_json(mean_score(t));
  return j;
}

Tournament tournament_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("graph"))
    fail(ErrorCode::kParse, "tournament JSON needs a graph");
  SignedGraph g = graph_from_json(j.at("graph"));
  RationalVector probs(g.edge_count(), Rational(1, 2));
  if (j.contains("probs")) {
    for (const auto& [key, value] : j.at("probs").items()) {
      auto index = g.edge_index(parse_edge_id(key));
      if (!index) fail(ErrorCode::kParse, "edge " + key + " is not in the graph");
      probs[*index] = rational_from_json(value);
    }
  }
  Tournament t(std::move(g), std::move(probs));
  if (j.contains("mean_score")) {
    RationalVector stated;
    for (const Json& v : j.at("mean_score")) stated.push_back(rational_from_json(v));
    if (stated != mean_score(t))
      fail(ErrorCode::kParse, "stated mean_score " + format_vector(stated) +
                                  " differs from " + format_vector(mean_score(t)));
  }
  return t;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kParse, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
}

RationalVector load_scores(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return parse_rational_list(read_file(arg));
  return parse_rational_list(arg);
}

std::vector<int> load_integers(const std::string& arg) {
  std::vector<int> out;
  for (const Rational& q : load_scores(arg)) {
    if (q.get_den() != 1 || !q.get_num().fits_sint_p())
      fail(ErrorCode::kParse, "expected integers, got " + format_rational(q));
    out.push_back(static_cast<int>(q.get_num().get_si()));
  }
  return out;
}

}  // namespace coxtour
