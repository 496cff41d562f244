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

#include "torelli/cli.h"

#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "torelli/curves.h"
#include "torelli/errors.h"

namespace torelli::cli {
namespace {

using json = nlohmann::ordered_json;

struct Output {
  int code;
  std::string out;
  std::string err;
};

Output Exec(const RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> Lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
  return out;
}

RunConfig Verify(const std::string& field, const std::string& genus, int trials) {
  RunConfig cfg;
  cfg.command = Command::kVerify;
  cfg.field = field;
  cfg.genus = genus;
  cfg.trials = trials;
  cfg.seed = 42;
  return cfg;
}

RunConfig NormalForm(const std::string& field, const std::string& b, const std::string& c) {
  RunConfig cfg;
  cfg.command = Command::kNormalForm;
  cfg.field = field;
  cfg.b = b;
  cfg.c = c;
  return cfg;
}

TEST(GenusRange, Parsing) {
  EXPECT_EQ(parse_genus_range("5"), std::make_pair(5, 5));
  EXPECT_EQ(parse_genus_range("2..6"), std::make_pair(2, 6));
  EXPECT_THROW(parse_genus_range("6..2"), ParseError);
  EXPECT_THROW(parse_genus_range("two"), ParseError);
  EXPECT_THROW(parse_genus_range("2.."), ParseError);
}

TEST(TrialSeed, DistinctAndStable) {
  EXPECT_EQ(trial_seed(1, 3, 4), trial_seed(1, 3, 4));
  EXPECT_NE(trial_seed(1, 3, 4), trial_seed(1, 4, 3));
  EXPECT_NE(trial_seed(1, 3, 4), trial_seed(2, 3, 4));
}

TEST(Verify, OddCharacteristic) {
  const Output o = Exec(Verify("GF(101)", "2..6", 10));
  EXPECT_EQ(o.code, kExitOk) << o.err;
  const auto lines = Lines(o.out);
  ASSERT_EQ(lines.size(), 51u);
  for (std::size_t i = 0; i < 50; ++i) {
    EXPECT_TRUE(lines[i]["pass"].get<bool>());
    EXPECT_EQ(lines[i]["observed"]["cokernel_dim"], 0);
    EXPECT_EQ(lines[i]["char"], "101");
  }
  EXPECT_EQ(lines[50]["summary"]["passed"], 50);
  EXPECT_EQ(lines[50]["summary"]["failed"], 0);
  // Reports come out in (g, trial) order.
  EXPECT_EQ(lines[0]["genus"], 2);
  EXPECT_EQ(lines[49]["genus"], 6);
}

TEST(Verify, CharacteristicTwo) {
  const Output o = Exec(Verify("GF(2^4)", "2..6", 10));
  EXPECT_EQ(o.code, kExitOk) << o.err;
  const auto lines = Lines(o.out);
  ASSERT_EQ(lines.size(), 51u);
  for (std::size_t i = 0; i < 50; ++i) {
    const int g = lines[i]["genus"];
    EXPECT_EQ(lines[i]["observed"]["cokernel_dim"], g - 2);
    EXPECT_EQ(lines[i]["observed"]["combined_rank"], 2 * g - 1);
    EXPECT_TRUE(lines[i]["pass"].get<bool>());
  }
}

TEST(Verify, InvalidInput) {
  Output o = Exec(Verify("GF(2)", "3", 1));
  EXPECT_EQ(o.code, kExitInvalid);
  EXPECT_NE(o.err.find("FieldTooSmall"), std::string::npos);
  EXPECT_EQ(Exec(Verify("GF(6)", "3", 1)).code, kExitInvalid);
  EXPECT_EQ(Exec(Verify("GF(101)", "1", 1)).code, kExitInvalid);
  EXPECT_EQ(Exec(Verify("GF(101)", "2", 0)).code, kExitInvalid);
  EXPECT_EQ(Exec(Verify("GF(101)", "x", 1)).code, kExitInvalid);
}

TEST(Verify, InjectedFailuresExitOne) {
  for (int g_bad = 2; g_bad <= 4; ++g_bad) {
    RunConfig cfg = Verify("GF(101)", "2..4", 3);
    cfg.audit = [g_bad](RankReport& r) {
      if (r.genus == g_bad) r.pass = false;
    };
    const Output o = Exec(cfg);
    EXPECT_EQ(o.code, kExitFailed);
    EXPECT_EQ(Lines(o.out).back()["summary"]["failed"], 3);
  }
  RunConfig cfg = Verify("GF(2^4)", "3", 2);
  cfg.audit = [](RankReport& r) { r.checks.containment = false; };
  EXPECT_EQ(Exec(cfg).code, kExitFailed);
  cfg.audit = [](RankReport& r) { r.checks.kernel_verified = false; };
  EXPECT_EQ(Exec(cfg).code, kExitFailed);
  cfg.audit = [](RankReport&) {};
  EXPECT_EQ(Exec(cfg).code, kExitOk);
}

TEST(Verify, DeterministicAcrossThreadCounts) {
  RunConfig cfg = Verify("Q", "2..5", 4);
  cfg.threads = 1;
  const Output a = Exec(cfg);
  cfg.threads = 3;
  const Output b = Exec(cfg);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, Exec(cfg).out);
  cfg.format = Format::kTable;
  EXPECT_EQ(Exec(cfg).out, Exec(cfg).out);
  cfg.format = Format::kJson;
  cfg.seed = 43;
  EXPECT_NE(Exec(cfg).out, a.out);
}

TEST(Report, SingleCurve) {
  RunConfig cfg;
  cfg.command = Command::kReport;
  cfg.curve = "char=7;f=x^5+3x+1";
  Output o = Exec(cfg);
  EXPECT_EQ(o.code, kExitOk);
  const auto lines = Lines(o.out);
  ASSERT_EQ(lines.size(), 1u);
  std::vector<std::string> keys;
  for (auto it = lines[0].begin(); it != lines[0].end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"char", "field", "genus", "observed", "expected",
                                            "pass", "curve", "seed"}));
  EXPECT_EQ(lines[0]["curve"], "char=7;f=x^5+3*x+1");

  cfg.audit = [](RankReport& r) { r.observed.cokernel_dim = 1; r.pass = false; };
  EXPECT_EQ(Exec(cfg).code, kExitFailed);

  cfg.audit = nullptr;
  cfg.curve = "char=7;f=x^4+1";
  o = Exec(cfg);
  EXPECT_EQ(o.code, kExitInvalid);
  EXPECT_NE(o.err.find("WrongDegree"), std::string::npos);
  cfg.curve = "char=7;f=x^5+";
  EXPECT_EQ(Exec(cfg).code, kExitInvalid);
}

TEST(NormalForm, WorkedExample) {
  RunConfig cfg = NormalForm("GF(2)", "x^2+x", "x^5+1");
  Output o = Exec(cfg);
  EXPECT_EQ(o.code, kExitOk);
  const json j = json::parse(o.out);
  EXPECT_EQ(j["f"], "x + 1/x + 1/(x+1)");
  EXPECT_EQ(j["alpha0"], "1");
  EXPECT_TRUE(j["replay_ok"].get<bool>());
  EXPECT_EQ(j["ramification"]["total"], 6);

  cfg.format = Format::kTable;
  o = Exec(cfg);
  EXPECT_EQ(o.out.rfind("f = x + 1/x + 1/(x+1)\n", 0), 0u);
}

TEST(NormalForm, ExitCodes) {
  Output o = Exec(NormalForm("GF(2)", "x^2", "x^5+1"));
  EXPECT_EQ(o.code, kExitFailed);
  EXPECT_EQ(json::parse(o.out)["error"], "NonGenericB");

  o = Exec(NormalForm("GF(2)", "x^2+x", "x^5"));
  EXPECT_EQ(o.code, kExitFailed);
  EXPECT_EQ(json::parse(o.out)["error"], "DegenerateCurve");

  o = Exec(NormalForm("GF(7)", "x^2+x", "x^5+1"));
  EXPECT_EQ(o.code, kExitInvalid);
  EXPECT_NE(o.err.find("WrongCharacteristic"), std::string::npos);

  EXPECT_EQ(Exec(NormalForm("GF(2)", "x^2+", "x^5+1")).code, kExitInvalid);
  RunConfig zero_a = NormalForm("GF(2)", "x^2+x", "x^5+1");
  zero_a.a = "0";
  EXPECT_EQ(Exec(zero_a).code, kExitInvalid);
}

TEST(NormalForm, MobiusPreStep) {
  // Pullback of y^2 - y = x + 1/(x+1) + 1/(x+t) along x' = 1/(x - t^2).
  const Field f4 = make_ext_field(2, 2);
  const FieldElem rho = f4.generator() * f4.generator();
  const ASModel m = validate_as_model(
      f4.one(), {{f4.one(), f4.one()}, {f4.generator(), f4.one()}}, 2);
  const RawASCurve target = encode_as_raw(m);
  RunConfig cfg = NormalForm("GF(2^2)", target.b.reversed(3).taylor_shift(-rho).to_string(),
                             target.c.reversed(6).taylor_shift(-rho).to_string());
  cfg.mobius_root = "t^2";
  const Output o = Exec(cfg);
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const json j = json::parse(o.out);
  EXPECT_TRUE(j["replay_ok"].get<bool>());
  EXPECT_EQ(j["f"], normal_form_string(m));
  cfg.mobius_root = "1";
  EXPECT_EQ(Exec(cfg).code, kExitInvalid);
}

TEST(Hirzebruch, Table) {
  RunConfig cfg;
  cfg.command = Command::kHirzebruch;
  cfg.genus = "2..50";
  Output o = Exec(cfg);
  EXPECT_EQ(o.code, kExitOk);
  const auto lines = Lines(o.out);
  ASSERT_EQ(lines.size(), 49u);
  EXPECT_EQ(lines[0]["class"], "2E+6F (F_3)");
  EXPECT_EQ(lines[0]["dim_hg"], 3);
  EXPECT_EQ(lines[48]["h0"], 3 * 50 + 6);
  for (const auto& l : lines) EXPECT_TRUE(l["pass"].get<bool>());
  cfg.format = Format::kTable;
  o = Exec(cfg);
  EXPECT_NE(o.out.find("2E+8F (F_4)"), std::string::npos);
}

}  // namespace
}  // namespace torelli::cli
