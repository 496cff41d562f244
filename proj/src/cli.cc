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

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "torelli/curves.h"
#include "torelli/errors.h"
#include "torelli/hirzebruch.h"
#include "torelli/parse.h"
#include "torelli/report.h"
#include "torelli/tangent.h"

namespace torelli::cli {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

unsigned thread_count(const RunConfig& cfg) {
  unsigned n = cfg.threads;
  if (n == 0) {
    if (const char* env = std::getenv("TORELLI_LAB_THREADS")) {
      try {
        n = static_cast<unsigned>(std::stoul(env));
      } catch (const std::exception&) {
        n = 0;
      }
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

// Runs fn(i) for i in [0, count) on up to `threads` workers.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

void print_error(std::ostream& err, const std::exception& e) { err << "error: " << e.what() << "\n"; }

std::string dims_cell(const RankDims& d) {
  std::ostringstream s;
  s << "(" << d.mult_rank << "," << d.ker_mu0_dim << "," << d.im_mu1_dim << ","
    << d.combined_rank << "," << d.cokernel_dim << ")";
  return s.str();
}

struct TrialResult {
  int genus = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::string curve;
  std::optional<RankReport> report;
  std::string error;

  bool ok() const { return report && report->pass && report->checks.all(); }
};

}  // namespace

std::pair<int, int> parse_genus_range(const std::string& s) {
  auto parse_int = [&](const std::string& part, std::size_t offset) {
    if (part.empty() || part.size() > 6 ||
        !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError(offset, "expected a genus, got '" + part + "'");
    }
    return std::stoi(part);
  };
  const std::size_t dots = s.find("..");
  if (dots == std::string::npos) {
    const int g = parse_int(s, 0);
    return {g, g};
  }
  const int lo = parse_int(s.substr(0, dots), 0);
  const int hi = parse_int(s.substr(dots + 2), dots + 2);
  if (lo > hi) throw ParseError(0, "empty genus range " + s);
  return {lo, hi};
}

std::uint64_t trial_seed(std::uint64_t seed, int genus, int trial) {
  return splitmix64(splitmix64(seed) ^ (static_cast<std::uint64_t>(genus) << 32) ^
                    static_cast<std::uint64_t>(trial));
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Field field = Field::rationals();
  int g_lo = 0;
  int g_hi = 0;
  try {
    field = parse_field_spec(cfg.field);
    std::tie(g_lo, g_hi) = parse_genus_range(cfg.genus.empty() ? "2" : cfg.genus);
    if (g_lo < 2) throw Error(ErrorCode::kInvalidArgument, "genus must be >= 2");
    if (cfg.trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
    require_field_size(field, g_hi);
  } catch (const Error& e) {
    print_error(err, e);
    return kExitInvalid;
  }

  std::vector<TrialResult> results;
  for (int g = g_lo; g <= g_hi; ++g) {
    for (int t = 0; t < cfg.trials; ++t) {
      results.push_back({g, t, trial_seed(cfg.seed, g, t), {}, std::nullopt, {}});
    }
  }
  parallel_for(results.size(), thread_count(cfg), [&](std::size_t i) {
    TrialResult& r = results[i];
    try {
      const CurveModel model = random_curve(field, r.genus, r.seed);
      r.curve = curve_spec(model);
      r.report = rank_report(model, splitmix64(r.seed));
      if (cfg.audit) cfg.audit(*r.report);
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  });

  std::size_t passed = 0;
  if (cfg.format == Format::kTable) {
    out << std::left << std::setw(4) << "g" << std::setw(7) << "trial" << std::setw(20)
        << "observed" << std::setw(20) << "expected" << std::setw(7) << "pass"
        << "curve\n";
  }
  for (const auto& r : results) {
    passed += r.ok() ? 1 : 0;
    if (!r.report) {
      err << "error: genus " << r.genus << " trial " << r.trial << ": " << r.error << "\n";
      if (cfg.format == Format::kJson) {
        Json j;
        j["genus"] = r.genus;
        j["seed"] = r.seed;
        j["error"] = r.error;
        out << j.dump() << "\n";
      }
      continue;
    }
    if (cfg.format == Format::kJson) {
      out << rank_report_json(*r.report, r.curve, r.seed).dump() << "\n";
    } else {
      out << std::left << std::setw(4) << r.genus << std::setw(7) << r.trial << std::setw(20)
          << dims_cell(r.report->observed) << std::setw(20) << dims_cell(r.report->expected)
          << std::setw(7) << (r.ok() ? "yes" : "NO") << r.curve << "\n";
    }
  }
  const std::size_t failed = results.size() - passed;
  if (cfg.format == Format::kJson) {
    Json summary;
    summary["summary"] = {{"field", field->spec()},
                          {"total", results.size()},
                          {"passed", passed},
                          {"failed", failed}};
    out << summary.dump() << "\n";
  } else {
    out << passed << "/" << results.size() << " passed on " << field->spec() << "\n";
  }
  return failed == 0 ? kExitOk : kExitFailed;
}

int run_report(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  CurveModel model = OddModel{Field::rationals(), Poly(Field::rationals()), 0};
  try {
    model = parse_curve_spec(cfg.curve);
  } catch (const Error& e) {
    print_error(err, e);
    return kExitInvalid;
  }
  RankReport report = rank_report(model, splitmix64(cfg.seed));
  if (cfg.audit) cfg.audit(report);
  const std::string spec = curve_spec(model);
  if (cfg.format == Format::kJson) {
    out << rank_report_json(report, spec, cfg.seed).dump() << "\n";
  } else {
    const RankChecks& c = report.checks;
    out << "curve          " << spec << "\n"
        << "field          " << report.field << "\n"
        << "genus          " << report.genus << "\n"
        << "observed       " << dims_cell(report.observed) << "\n"
        << "expected       " << dims_cell(report.expected) << "\n"
        << "coker mu0      " << report.coker_mu0_dim << "\n"
        << "kernel check   " << (c.kernel_verified ? "ok" : "FAILED") << "\n"
        << "mu1 sign       " << (c.mu1_sign_identity ? "ok" : "FAILED") << "\n"
        << "rank oracle    " << (c.rank_invariant ? "ok" : "FAILED") << "\n";
    if (c.containment) {
      out << "containment    " << (*c.containment ? "ok" : "FAILED") << "\n";
    }
    if (c.parity_additive) {
      out << "parity         " << (*c.parity_additive ? "ok" : "FAILED") << "\n";
    }
    out << "pass           " << (report.pass && c.all() ? "yes" : "NO") << "\n";
  }
  return report.pass && report.checks.all() ? kExitOk : kExitFailed;
}

int run_normal_form(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<RawASCurve> raw;
  try {
    const Field field = parse_field_spec(cfg.field);
    if (field->characteristic() != 2) {
      throw Error(ErrorCode::kWrongCharacteristic,
                  "normal-form needs a characteristic 2 field, got " + field->spec());
    }
    raw = RawASCurve{field, parse_element(field, cfg.a), parse_poly(field, cfg.b),
                     parse_poly(field, cfg.c)};
    if (cfg.mobius_root) raw = apply_mobius(*raw, parse_element(field, *cfg.mobius_root));
  } catch (const Error& e) {
    print_error(err, e);
    return kExitInvalid;
  }
  try {
    NormalFormResult result = reduce_to_normal_form(*raw);
    const Poly b1 = raw->b.scale(sqrt_char2(raw->a).inverse());
    NormalFormOutput nf{*raw, result, partial_fractions(RatFunc(raw->c, b1 * b1)),
                        replay(*raw, result.log) == normal_form_equation(result.model)};
    if (cfg.format == Format::kJson) {
      out << to_json(nf).dump() << "\n";
    } else {
      out << "f = " << normal_form_string(result.model) << "\n";
      out << "curve = " << curve_spec(CurveModel(result.model)) << "\n";
      for (const auto& step : result.log.steps) {
        out << "  " << step_kind_name(step.kind) << " " << step.value.to_string() << "  ("
            << step.reason << ")\n";
      }
      out << "replay " << (nf.replay_ok ? "ok" : "FAILED") << "\n";
    }
    return nf.replay_ok ? kExitOk : kExitFailed;
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::kNonGenericB:
      case ErrorCode::kDegenerateCurve:
      case ErrorCode::kUnsolvableConstant: {
        if (cfg.format == Format::kJson) {
          Json j;
          j["error"] = std::string(error_name(e.code()));
          j["message"] = e.what();
          out << j.dump() << "\n";
        } else {
          out << "error: " << e.what() << "\n";
        }
        print_error(err, e);
        return kExitFailed;
      }
      default:
        print_error(err, e);
        return kExitInvalid;
    }
  }
}

int run_hirzebruch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  int g_lo = 0;
  int g_hi = 0;
  try {
    std::tie(g_lo, g_hi) = parse_genus_range(cfg.genus.empty() ? "2..10" : cfg.genus);
    if (g_lo < 2) throw Error(ErrorCode::kInvalidArgument, "genus must be >= 2");
  } catch (const Error& e) {
    print_error(err, e);
    return kExitInvalid;
  }
  namespace hz = hirzebruch;
  bool all_ok = true;
  if (cfg.format == Format::kTable) {
    out << std::left << std::setw(5) << "g" << std::setw(16) << "class" << std::setw(8) << "C.C"
        << std::setw(7) << "genus" << std::setw(6) << "h0" << std::setw(10) << "proj_dim"
        << std::setw(9) << "aut_dim" << "dim_Hg\n";
  }
  for (int g = g_lo; g <= g_hi; ++g) {
    const hz::DivisorClass c = hz::hyperelliptic_class(g);
    const std::int64_t self = hz::intersect(c, c);
    const std::int64_t genus = hz::adjunction_genus(c);
    const hz::LinearSystemDim ls = hz::linear_system_dim(g);
    const std::int64_t aut = hz::aut_dim(c.n);
    const std::int64_t dim_hg = hz::hg_dimension(g);
    const bool ok = self == 4 * g + 4 && genus == g && ls.h0 == 3 * g + 6 &&
                    ls.proj_dim == 3 * g + 5 && dim_hg == 2 * g - 1 &&
                    hz::intersect(c, hz::fiber(c.n)) == 2;
    all_ok = all_ok && ok;
    const std::string cls =
        "2E+" + std::to_string(c.b) + "F (F_" + std::to_string(c.n) + ")";
    if (cfg.format == Format::kJson) {
      Json j;
      j["genus"] = g;
      j["class"] = cls;
      j["self_intersection"] = self;
      j["adjunction_genus"] = genus;
      j["h0"] = ls.h0;
      j["proj_dim"] = ls.proj_dim;
      j["aut_dim"] = aut;
      j["dim_hg"] = dim_hg;
      j["pass"] = ok;
      out << j.dump() << "\n";
    } else {
      out << std::left << std::setw(5) << g << std::setw(16) << cls << std::setw(8) << self
          << std::setw(7) << genus << std::setw(6) << ls.h0 << std::setw(10) << ls.proj_dim
          << std::setw(9) << aut << dim_hg << (ok ? "" : "  MISMATCH") << "\n";
    }
  }
  return all_ok ? kExitOk : kExitFailed;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::kVerify: return run_verify(cfg, out, err);
    case Command::kReport: return run_report(cfg, out, err);
    case Command::kNormalForm: return run_normal_form(cfg, out, err);
    case Command::kHirzebruch: return run_hirzebruch(cfg, out, err);
  }
  return kExitInvalid;
}

}  // namespace torelli::cli
