// Copyright 2026 The cosetlab Authors.
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

#include "cosetlab/report.hpp"

#include <cstdio>
#include <sstream>

namespace cosetlab {

nlohmann::json to_json(const OrbitBall& ball) {
  nlohmann::json j;
  j["base"] = {{"level", ball.base().level()}, {"tail", to_string(ball.base().tail())}};
  j["radius"] = ball.radius();
  j["generators"] = nlohmann::json::array();
  for (const GElement& g : ball.generators()) j["generators"].push_back(to_string(g));
  j["nodes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < ball.size(); ++i) {
    j["nodes"].push_back({{"idx", i}, {"level", ball.node(i).level()}, {"tail", to_string(ball.node(i).tail())}});
  }
  j["edges"] = nlohmann::json::array();
  for (const OrbitEdge& e : ball.edges()) j["edges"].push_back({e.src, e.gen, e.dst});
  j["boundary"] = nlohmann::json::array();
  for (const BoundaryMark& b : ball.boundary()) j["boundary"].push_back({b.src, b.gen});
  return j;
}

nlohmann::json to_json(const SpectralProfile& profile) {
  return {{"generators", profile.generators},
          {"radii", profile.radii},
          {"ball_sizes", profile.ball_sizes},
          {"estimates", profile.estimates}};
}

nlohmann::json to_json(const ReiterCertificate& cert) {
  nlohmann::json j;
  j["window"] = {{"start", cert.window_start + 1},
                 {"end", cert.window_start + static_cast<GenIndex>(cert.window_size)},
                 {"size", cert.window_size}};
  j["epsilon"] = cert.epsilon;
  j["norm"] = cert.norm;
  j["amplitude"] = cert.vector.empty() ? 0.0 : cert.vector.front().second;
  j["deviations"] = nlohmann::json::array();
  for (const auto& [g, d] : cert.deviations) j["deviations"].push_back({{"generator", to_string(g)}, {"deviation", d}});
  j["max_deviation"] = cert.max_deviation();
  return j;
}

nlohmann::json to_json(const DeltaInvarianceReport& report) {
  nlohmann::json j;
  j["level"] = report.level;
  j["coset"] = to_string(Coset::base(report.level));
  j["deviations"] = nlohmann::json::array();
  for (const auto& [w, d] : report.deviations) {
    nlohmann::json row = {{"word", to_string(w)}, {"deviation", d}, {"fixed", d == 0.0}};
    if (!w.is_identity()) row["minimal_level"] = minimal_level(w);
    j["deviations"].push_back(std::move(row));
  }
  j["invariant"] = report.invariant();
  return j;
}

nlohmann::json to_json(const FiniteGroup& group) {
  nlohmann::json j;
  j["order"] = group.order();
  j["kind"] = group.shape().kind == GroupKind::Permutation ? "permutation" : "matrix";
  j["size"] = group.shape().size;
  if (group.shape().kind == GroupKind::Matrix) j["modulus"] = group.shape().modulus;
  j["classes"] = nlohmann::json::array();
  for (std::size_t c = 0; c < group.class_count(); ++c) {
    const std::size_t rep = group.class_rep(c);
    j["classes"].push_back({{"size", group.class_size(c)},
                            {"element_order", group.element_order(rep)},
                            {"representative", to_string(group.element(rep), group.shape())}});
  }
  return j;
}

std::string to_csv(const SpectralProfile& profile) {
  std::ostringstream os;
  os << "radius,ball_size,estimate\n";
  char buf[64];
  for (std::size_t i = 0; i < profile.radii.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.15g", profile.estimates[i]);
    os << profile.radii[i] << ',' << profile.ball_sizes[i] << ',' << buf << '\n';
  }
  return os.str();
}

}  // namespace cosetlab
