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

#include "torelli/report.h"

namespace torelli {

Json to_json(const RankDims& dims) {
  Json j;
  j["mult_rank"] = dims.mult_rank;
  j["ker_mu0_dim"] = dims.ker_mu0_dim;
  j["im_mu1_dim"] = dims.im_mu1_dim;
  j["combined_rank"] = dims.combined_rank;
  j["cokernel_dim"] = dims.cokernel_dim;
  return j;
}

Json rank_report_json(const RankReport& report, const std::string& curve, std::uint64_t seed) {
  Json j;
  j["char"] = report.characteristic;
  j["field"] = report.field;
  j["genus"] = report.genus;
  j["observed"] = to_json(report.observed);
  j["expected"] = to_json(report.expected);
  j["pass"] = report.pass;
  j["curve"] = curve;
  j["seed"] = seed;
  return j;
}

Json to_json(const PartialFraction& pf) {
  Json j;
  j["poly_part"] = pf.poly_part.to_string();
  j["terms"] = Json::array();
  for (const auto& t : pf.terms) {
    Json term;
    term["root"] = t.root.to_string();
    term["multiplicity"] = t.multiplicity;
    term["numerator"] = t.numerator.to_string();
    j["terms"].push_back(std::move(term));
  }
  return j;
}

Json to_json(const TransformLog& log) {
  Json j = Json::array();
  for (const auto& step : log.steps) {
    Json s;
    s["kind"] = std::string(step_kind_name(step.kind));
    s["value"] = step.value.to_string();
    s["reason"] = step.reason;
    j.push_back(std::move(s));
  }
  return j;
}

Json to_json(const RamificationData& data) {
  Json j;
  j["points"] = Json::array();
  for (const auto& p : data.points) {
    Json point;
    point["x"] = p.x ? p.x->to_string() : std::string("inf");
    point["order"] = p.order;
    j["points"].push_back(std::move(point));
  }
  j["total"] = data.total;
  return j;
}

Json to_json(const NormalFormOutput& out) {
  const ASModel& m = out.result.model;
  Json j;
  j["field"] = m.field->spec();
  j["input"] = {{"a", out.raw.a.to_string()},
                {"b", out.raw.b.to_string()},
                {"c", out.raw.c.to_string()}};
  j["partial_fraction"] = to_json(out.initial_decomposition);
  j["genus"] = m.genus;
  j["alpha0"] = m.alpha0.to_string();
  j["branch"] = Json::array();
  for (const auto& t : m.branch) {
    j["branch"].push_back({{"a", t.point.to_string()}, {"alpha", t.residue.to_string()}});
  }
  j["f"] = normal_form_string(m);
  j["curve"] = curve_spec(CurveModel(m));
  j["ramification"] = to_json(ramification_data(m));
  j["log"] = to_json(out.result.log);
  j["replay_ok"] = out.replay_ok;
  return j;
}

}  // namespace torelli
