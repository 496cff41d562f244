// Copyright 2026 The Torelli Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON encodings of reports, partial fractions and normal-form results.
// Key order is fixed (insertion order) so output is byte-reproducible.

#ifndef TORELLI_REPORT_H_
#define TORELLI_REPORT_H_

#include <cstdint>
#include <string>

#include "json.hpp"
#include "torelli/curves.h"
#include "torelli/poly.h"
#include "torelli/tangent.h"

namespace torelli {

using Json = nlohmann::ordered_json;

Json to_json(const RankDims& dims);
// {"char", "field", "genus", "observed", "expected", "pass", "curve", "seed"}
Json rank_report_json(const RankReport& report, const std::string& curve, std::uint64_t seed);
Json to_json(const PartialFraction& pf);
Json to_json(const TransformLog& log);
Json to_json(const RamificationData& data);

struct NormalFormOutput {
  RawASCurve raw;
  NormalFormResult result;
  PartialFraction initial_decomposition;  // of c / b^2 after y -> y/sqrt(a)
  bool replay_ok;
};

Json to_json(const NormalFormOutput& out);

}  // namespace torelli

#endif  // TORELLI_REPORT_H_
