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

// torelli_lab: verify rank statements over random hyperelliptic curves,
// report on a single curve, reduce characteristic-2 curves to normal form,
// and print Hirzebruch surface dimension counts.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "torelli/cli.h"

int main(int argc, char** argv) {
  using torelli::cli::Format;
  CLI::App app{"Exact verification of tangent-map ranks for hyperelliptic curves"};
  app.require_subcommand(1);

  torelli::cli::RunConfig cfg;
  std::string format = "json";
  const std::map<std::string, Format> formats{{"json", Format::kJson}, {"table", Format::kTable}};

  auto* verify = app.add_subcommand("verify", "rank reports over random curves");
  verify->add_option("--field", cfg.field, "Q, GF(p) or GF(p^k)")->required();
  verify->add_option("--genus", cfg.genus, "genus or range a..b")->default_val("2..6");
  verify->add_option("--trials", cfg.trials, "curves per genus")->default_val(10);
  verify->add_option("--seed", cfg.seed, "64-bit seed")->default_val(0);
  verify->add_option("--threads", cfg.threads, "worker threads (0: TORELLI_LAB_THREADS or all)");

  auto* report = app.add_subcommand("report", "rank report for one curve");
  report->add_option("--curve", cfg.curve, "e.g. char=7;f=x^5+3x+1")->required();
  report->add_option("--seed", cfg.seed, "seed for the rank oracle")->default_val(0);

  auto* normal = app.add_subcommand("normal-form", "reduce a y^2 + b y + c to Artin-Schreier form");
  normal->add_option("--field", cfg.field, "GF(2) or GF(2^k)")->required();
  normal->add_option("--a", cfg.a, "leading coefficient")->default_val("1");
  normal->add_option("--b", cfg.b, "polynomial b(x)")->required();
  normal->add_option("--c", cfg.c, "polynomial c(x)")->required();
  normal->add_option("--mobius-root", cfg.mobius_root,
                     "first send this root of b to infinity (x -> rho + 1/x)");

  auto* hirz = app.add_subcommand("hirzebruch", "dimension counts on F_{g+1}");
  hirz->add_option("--genus", cfg.genus, "genus or range a..b")->default_val("2..10");

  for (auto* sub : {verify, report, normal, hirz}) {
    sub->add_option("--format", format, "json or table")
        ->default_val("json")
        ->check(CLI::IsMember({"json", "table"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : torelli::cli::kExitInvalid;
  }
  cfg.format = formats.at(format);
  if (verify->parsed()) cfg.command = torelli::cli::Command::kVerify;
  if (report->parsed()) cfg.command = torelli::cli::Command::kReport;
  if (normal->parsed()) cfg.command = torelli::cli::Command::kNormalForm;
  if (hirz->parsed()) cfg.command = torelli::cli::Command::kHirzebruch;
  return torelli::cli::run(cfg, std::cout, std::cerr);
}
