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

#pragma once

// JSON and CSV renderings of the verification results.

#include <string>

#include <nlohmann/json.hpp>

#include "cosetlab/coset_space.hpp"
#include "cosetlab/finite_group.hpp"
#include "cosetlab/spectral.hpp"

namespace cosetlab {

nlohmann::json to_json(const OrbitBall& ball);
nlohmann::json to_json(const SpectralProfile& profile);
nlohmann::json to_json(const ReiterCertificate& cert);
nlohmann::json to_json(const DeltaInvarianceReport& report);
nlohmann::json to_json(const FiniteGroup& group);

// `radius,ball_size,estimate` rows with a header line.
std::string to_csv(const SpectralProfile& profile);

}  // namespace cosetlab
