// Copyright 2026 The Chaoslab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// chaoslab — batch front-end for the exact-arithmetic block-shift laboratory.
//
// Exit codes: 0 on success, 1 when a verification or witness construction
// fails, 2 on malformed input.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "chaoslab/density.hpp"
#include "chaoslab/dyadic.hpp"
#include "chaoslab/errors.hpp"
#include "chaoslab/operator_t.hpp"
#include "chaoslab/schedule.hpp"
#include "chaoslab/seqspace.hpp"
#include "chaoslab/serialize.hpp"
#include "chaoslab/suites.hpp"
#include "chaoslab/verify.hpp"

namespace {

using namespace chaoslab;

constexpr std::uint64_t kDefaultSeed = 1729;

struct sched_opts {
  std::string preset = "small-2";
  int prefix = 8;
  std::string file;
};

void add_sched_opts(CLI::App* cmd, sched_opts& o) {
  auto* preset = cmd->add_option("--preset", o.preset, "schedule preset")
                     ->check(CLI::IsMember({"canonical", "small-2"}))
                     ->capture_default_str();
  auto* prefix =
      cmd->add_option("--prefix", o.prefix, "number of generated blocks")
          ->check(CLI::Range(1, 48))
          ->capture_default_str();
  cmd->add_option("--schedule", o.file, "load the schedule from a JSON file")
      ->excludes(preset)
      ->excludes(prefix);
}

int preset_cap(const std::string& preset) { return preset == "canonical" ? 14 : 48; }

schedule make_schedule(const sched_opts& o) {
  if (!o.file.empty()) return schedule_from_json(load_json_file(o.file));
  if (o.preset == "canonical") {
    if (o.prefix > 14) {
      throw malformed_input("canonical preset supports prefix in [1, 14]");
    }
    return schedule::canonical(o.prefix);
  }
  return schedule::small2(o.prefix);
}

// Witness constructions report prefix_too_short when the generated blocks run
// out; for preset schedules we double the prefix (up to the preset cap) and
// retry, which preserves all previously generated blocks.
template <typename Fn>
auto with_prefix_extension(const sched_opts& o, Fn&& fn) {
  sched_opts cur = o;
  for (;;) {
    try {
      return fn(make_schedule(cur));
    } catch (const prefix_too_short& e) {
      const int cap = preset_cap(cur.preset);
      if (!cur.file.empty() || cur.prefix >= cap) throw;
      cur.prefix = std::min(cap, 2 * cur.prefix);
      std::cerr << "note: " << e.what() << "; extending prefix to " << cur.prefix
                << "\n";
    }
  }
}

sparse_vec load_vec(const std::string& path) {
  return sparse_vec_from_json(load_json_file(path));
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw malformed_input("cannot open for writing: " + path);
  os << text;
}

std::string i64_list(const std::vector<std::int64_t>& xs, std::size_t count) {
  std::string out = "[";
  for (std::size_t i = 0; i < count && i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

bool print_condition_report(const condition_report& rep) {
  for (const auto& e : rep.entries) {
    std::cout << "  [" << (e.pass ? "pass" : "FAIL") << "] " << e.name;
    if (!e.pass && e.first_violation) {
      std::cout << " (first violation at n = " << *e.first_violation << ")";
    }
    if (!e.note.empty()) std::cout << " — " << e.note;
    std::cout << "\n";
  }
  return rep.all_pass();
}

bool print_witness_report(const witness_report& rep) {
  std::cout << "claim: " << rep.claim << "\n";
  std::cout << "objects: " << rep.objects.dump(2) << "\n";
  for (const auto& q : rep.inequalities) {
    std::cout << "  [" << (q.holds ? "ok" : "FAIL") << "] " << q.description << ": "
              << q.lhs << " " << q.relation << " " << q.rhs << "\n";
  }
  std::cout << (rep.all_hold() ? "all inequalities hold" : "VERIFICATION FAILED")
            << "\n";
  return rep.all_hold();
}

void maybe_write_report(const std::string& path, const witness_report& rep) {
  if (!path.empty()) write_text_file(path, witness_report_to_json(rep).dump(2) + "\n");
}

bigint parse_exponent(const std::string& text) {
  if (text.empty()) throw malformed_input("empty exponent");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (!(c >= '0' && c <= '9') && !(i == 0 && c == '+')) {
      throw malformed_input("exponent must be a non-negative integer: " + text);
    }
  }
  return bigint(text);
}

int run(int argc, char** argv) {
  CLI::App app{
      "chaoslab — exact-arithmetic laboratory for a perturbed block shift with "
      "dyadic feedback"};
  app.require_subcommand(1);
  int rc = 0;

  // schedule ---------------------------------------------------------------
  auto* sc_schedule = app.add_subcommand(
      "schedule", "generate or load a schedule and check its defining conditions");
  sched_opts schedule_opts;
  add_sched_opts(sc_schedule, schedule_opts);
  bool check41 = false;
  sc_schedule->add_flag("--check-41", check41,
                        "also check the summability strengthening");
  std::string schedule_out;
  sc_schedule->add_option("--out", schedule_out, "write the schedule JSON here");
  sc_schedule->callback([&] {
    const schedule s = make_schedule(schedule_opts);
    if (schedule_opts.file.empty()) {
      std::cout << "preset " << schedule_opts.preset << ", prefix "
                << schedule_opts.prefix << "\n";
    } else {
      std::cout << "schedule loaded from " << schedule_opts.file << "\n";
    }
    std::cout << "b = "
              << i64_list(s.b_table(), static_cast<std::size_t>(s.prefix()) + 1)
              << "\n";
    std::cout << "index limit = " << s.index_limit() << "\n";
    std::cout << "conditions:\n";
    bool ok = print_condition_report(s.validate());
    if (check41) {
      std::cout << "summability strengthening:\n";
      ok = print_condition_report(s.validate_41()) && ok;
    }
    const std::string dumped = schedule_to_json(s).dump(2);
    if (schedule_out.empty()) {
      std::cout << dumped << "\n";
    } else {
      write_text_file(schedule_out, dumped + "\n");
      std::cout << "schedule JSON written to " << schedule_out << "\n";
    }
    if (!ok) rc = 1;
  });

  // orbit ------------------------------------------------------------------
  auto* sc_orbit =
      app.add_subcommand("orbit", "emit per-step orbit norms as CSV");
  sched_opts orbit_opts;
  add_sched_opts(sc_orbit, orbit_opts);
  std::string orbit_vec;
  std::int64_t orbit_steps = 0;
  std::string orbit_norm = "l1";
  int orbit_p = 2;
  std::string orbit_csv;
  sc_orbit->add_option("--vec", orbit_vec, "vector JSON file")->required();
  sc_orbit->add_option("--steps", orbit_steps, "number of steps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sc_orbit->add_option("--norm", orbit_norm, "norm kind")
      ->check(CLI::IsMember({"l1", "sup", "lp"}))
      ->capture_default_str();
  sc_orbit->add_option("--p", orbit_p, "exponent for the lp norm")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  sc_orbit->add_option("--csv", orbit_csv, "write the CSV here (default stdout)");
  sc_orbit->callback([&] {
    const operator_t op(make_schedule(orbit_opts));
    const sparse_vec v = load_vec(orbit_vec);
    norm_kind kind = norm_kind::l1();
    if (orbit_norm == "sup") kind = norm_kind::sup();
    if (orbit_norm == "lp") kind = norm_kind::lp(orbit_p);
    if (orbit_csv.empty()) {
      write_orbit_csv(std::cout, op, v, orbit_steps, kind);
    } else {
      std::ofstream os(orbit_csv);
      if (!os) throw malformed_input("cannot open for writing: " + orbit_csv);
      write_orbit_csv(os, op, v, orbit_steps, kind);
      std::cout << "orbit CSV written to " << orbit_csv << "\n";
    }
  });

  // period -----------------------------------------------------------------
  auto* sc_period =
      app.add_subcommand("period", "exact orbit period of a basis vector or vector");
  sched_opts period_opts;
  add_sched_opts(sc_period, period_opts);
  std::int64_t period_basis = -1;
  std::string period_vec;
  auto* period_basis_opt =
      sc_period->add_option("--basis", period_basis, "basis index k")
          ->check(CLI::NonNegativeNumber);
  sc_period->add_option("--vec", period_vec, "vector JSON file")
      ->excludes(period_basis_opt);
  sc_period->callback([&] {
    const schedule s = make_schedule(period_opts);
    sparse_vec v;
    if (period_basis >= 0) {
      v = sparse_vec::basis(period_basis);
    } else if (!period_vec.empty()) {
      v = load_vec(period_vec);
    } else {
      throw malformed_input("period needs --basis or --vec");
    }
    std::cout << "period = " << period_of(v, s) << "\n";
  });

  // power ------------------------------------------------------------------
  auto* sc_power = app.add_subcommand(
      "power", "apply an arbitrary-precision power of the operator");
  sched_opts power_opts;
  add_sched_opts(sc_power, power_opts);
  std::int64_t power_basis = -1;
  std::string power_vec;
  std::string power_exp;
  std::string power_out;
  auto* power_basis_opt =
      sc_power->add_option("--basis", power_basis, "basis index k")
          ->check(CLI::NonNegativeNumber);
  sc_power->add_option("--vec", power_vec, "vector JSON file")
      ->excludes(power_basis_opt);
  sc_power->add_option("--exp", power_exp, "iteration count (arbitrary precision)")
      ->required();
  sc_power->add_option("--out", power_out, "write the resulting vector JSON here");
  sc_power->callback([&] {
    const operator_t op(make_schedule(power_opts));
    const bigint e = parse_exponent(power_exp);
    sparse_vec v;
    std::string label;
    if (power_basis >= 0) {
      v = sparse_vec::basis(power_basis);
      label = "e_" + std::to_string(power_basis);
    } else if (!power_vec.empty()) {
      v = load_vec(power_vec);
      label = "x";
    } else {
      throw malformed_input("power needs --basis or --vec");
    }
    const sparse_vec result = op.apply_power(v, e);
    std::cout << "T^" << e.str() << " " << label << " = " << pretty(result) << "\n";
    if (!power_out.empty()) {
      write_text_file(power_out, sparse_vec_to_json(result).dump(2) + "\n");
    }
  });

  // hyp0 -------------------------------------------------------------------
  auto* sc_hyp0 = app.add_subcommand(
      "hyp0", "single-coordinate approximation witness in a residue class");
  sched_opts hyp0_opts;
  add_sched_opts(sc_hyp0, hyp0_opts);
  std::string hyp0_eps = "1/2";
  std::int64_t hyp0_k = 0;
  std::int64_t hyp0_n = 1;
  std::int64_t hyp0_m = 0;
  std::string hyp0_xk = "1";
  std::string hyp0_out;
  sc_hyp0->add_option("--eps", hyp0_eps, "tolerance (exact dyadic)")->required();
  sc_hyp0->add_option("--k", hyp0_k, "target coordinate")->required();
  sc_hyp0->add_option("--N", hyp0_n, "residue modulus")->capture_default_str();
  sc_hyp0->add_option("--M", hyp0_m, "residue class")->capture_default_str();
  sc_hyp0->add_option("--xk", hyp0_xk, "target coefficient (exact dyadic)")
      ->required();
  sc_hyp0->add_option("--out", hyp0_out, "write the witness report JSON here");
  sc_hyp0->callback([&] {
    const dyadic eps = dyadic::parse(hyp0_eps);
    const dyadic xk = dyadic::parse(hyp0_xk);
    const hyp0_result res = with_prefix_extension(hyp0_opts, [&](const schedule& s) {
      return hyp0_witness(eps, hyp0_k, hyp0_n, hyp0_m, xk, s);
    });
    if (!print_witness_report(res.report)) rc = 1;
    maybe_write_report(hyp0_out, res.report);
  });

  // transit ----------------------------------------------------------------
  auto* sc_transit = app.add_subcommand(
      "transit", "perturbation carrying one vector into a ball around another");
  sched_opts transit_opts;
  add_sched_opts(sc_transit, transit_opts);
  std::string transit_from;
  std::string transit_to;
  std::string transit_eps;
  std::string transit_out;
  sc_transit->add_option("--from", transit_from, "source vector JSON file")
      ->required();
  sc_transit->add_option("--to", transit_to, "target vector JSON file")->required();
  sc_transit->add_option("--eps", transit_eps, "tolerance (exact dyadic)")
      ->required();
  sc_transit->add_option("--out", transit_out, "write the witness report JSON here");
  sc_transit->callback([&] {
    const dyadic eps = dyadic::parse(transit_eps);
    const sparse_vec y = load_vec(transit_from);
    const sparse_vec x = load_vec(transit_to);
    const transitivity_result res =
        with_prefix_extension(transit_opts, [&](const schedule& s) {
          return transitivity_witness(y, x, eps, s);
        });
    std::cout << "perturbation z = " << pretty(res.z) << "\n";
    std::cout << "iterate n = " << res.n.str() << "\n";
    if (!print_witness_report(res.report)) rc = 1;
    maybe_write_report(transit_out, res.report);
  });

  // reiterate ----------------------------------------------------------------
  auto* sc_reiterate = app.add_subcommand(
      "reiterate", "orbit that re-enters a ball along an arithmetic progression");
  sched_opts reiterate_opts;
  add_sched_opts(sc_reiterate, reiterate_opts);
  std::string re_center;
  std::string re_radius;
  int re_depth = 0;
  std::string re_out;
  sc_reiterate->add_option("--center", re_center, "ball center vector JSON file")
      ->required();
  sc_reiterate->add_option("--radius", re_radius, "ball radius (exact dyadic)")
      ->required();
  sc_reiterate->add_option("--depth", re_depth, "number of extra returns")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sc_reiterate->add_option("--out", re_out, "write the witness report JSON here");
  sc_reiterate->callback([&] {
    const dyadic radius = dyadic::parse(re_radius);
    const sparse_vec center = load_vec(re_center);
    const reiterative_result res =
        with_prefix_extension(reiterate_opts, [&](const schedule& s) {
          return reiterative_witness(center, radius, re_depth, s);
        });
    std::cout << "perturbation y = " << pretty(res.y) << "\n";
    std::cout << "first return = " << res.kstar.str() << ", step = " << res.step
              << ", returns = " << res.hits.size() << "\n";
    if (!print_witness_report(res.report)) rc = 1;
    maybe_write_report(re_out, res.report);
  });

  // verify -------------------------------------------------------------------
  auto* sc_verify =
      app.add_subcommand("verify", "run the randomized claim-verification suites");
  sched_opts verify_opts;
  add_sched_opts(sc_verify, verify_opts);
  std::string verify_claim;
  std::uint64_t verify_seed = kDefaultSeed;
  int verify_trials = 100;
  sc_verify
      ->add_option("--claim", verify_claim,
                   "periodicity, fhc0, fhc1, fhc2, cool or all")
      ->required();
  sc_verify->add_option("--seed", verify_seed, "RNG seed")->capture_default_str();
  sc_verify->add_option("--trials", verify_trials, "cases per suite")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sc_verify->callback([&] {
    const schedule s = make_schedule(verify_opts);
    const std::vector<suite_result> suites =
        run_claim_suites(s, verify_claim, verify_seed, verify_trials);
    bool ok = true;
    for (const auto& r : suites) {
      std::cout << r.name << ": " << (r.pass ? "pass" : "FAIL") << " ("
                << r.cases << " cases) — " << r.detail << "\n";
      ok = ok && r.pass;
    }
    if (!ok) rc = 1;
  });

  // density --------------------------------------------------------------
  auto* sc_density = app.add_subcommand(
      "density", "window counts and density brackets of an index set");
  std::string density_set;
  std::int64_t density_window = 0;
  std::string density_profile_path;
  sc_density->add_option("--set", density_set, "index set JSON file")->required();
  sc_density->add_option("--window", density_window, "window length")
      ->required()
      ->check(CLI::PositiveNumber);
  sc_density->add_option("--profile", density_profile_path,
                         "write the density profile CSV here");
  sc_density->callback([&] {
    const index_set a = index_set_from_json(load_json_file(density_set));
    std::cout << "size = " << a.size() << ", horizon = " << a.horizon() << "\n";
    const banach_result bw = banach_window(a, density_window);
    std::cout << "best window of length " << density_window << ": count = "
              << bw.count << ", ratio = " << bw.ratio << ", starting at "
              << bw.window_start << "\n";
    const density_estimate est = empirical_density(a);
    std::cout << "prefix ratios from N = " << est.tail_begin << ": lower = "
              << est.lower << ", upper = " << est.upper << "\n";
    if (a.progressions()) {
      std::cout << "exact progression density = "
                << exact_ap_density(*a.progressions()) << "\n";
    }
    if (!density_profile_path.empty()) {
      std::ofstream os(density_profile_path);
      if (!os) {
        throw malformed_input("cannot open for writing: " + density_profile_path);
      }
      write_profile_csv(os, a);
      std::cout << "profile CSV written to " << density_profile_path << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const malformed_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const prefix_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const prefix_too_short& e) {
    std::cerr << "error: " << e.what()
              << " (the preset cap was reached; try another schedule)\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
