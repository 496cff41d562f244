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

// Batch front end: verify / report / normal-form / hirzebruch.
//
// Exit codes: 0 all checks passed, 1 a check failed (or a normal-form
// reduction was rejected), 2 invalid input.

#ifndef TORELLI_CLI_H_
#define TORELLI_CLI_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "torelli/tangent.h"

namespace torelli::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalid = 2;

enum class Command { kVerify, kReport, kNormalForm, kHirzebruch };
enum class Format { kJson, kTable };

struct RunConfig {
  Command command = Command::kVerify;
  std::string field;
  std::string genus;  // "5" or "2..6"
  int trials = 1;
  std::uint64_t seed = 0;
  Format format = Format::kJson;
  std::string curve;
  std::string b;
  std::string c;
  std::string a = "1";
  std::optional<std::string> mobius_root;
  // 0: TORELLI_LAB_THREADS, else hardware concurrency.
  unsigned threads = 0;
  // Runs on every rank report before it is judged. Tests use it to inject
  // failing fixtures.
  std::function<void(RankReport&)> audit;
};

// "5" -> (5, 5), "2..6" -> (2, 6). Throws ParseError.
std::pair<int, int> parse_genus_range(const std::string& s);

// Deterministic per-trial seed.
std::uint64_t trial_seed(std::uint64_t seed, int genus, int trial);

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_report(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_normal_form(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_hirzebruch(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace torelli::cli

#endif  // TORELLI_CLI_H_
