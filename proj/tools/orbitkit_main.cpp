// SPDX-License-Identifier: Apache-2.0
// Command-line front end: exact period counts, tangent loci, bubble/point
// detection, branch continuation, orbit diagrams, and a one-shot paper
// verification report.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitkit/continuation.hpp"
#include "orbitkit/diagram.hpp"
#include "orbitkit/scan_detect.hpp"
#include "orbitkit/verify.hpp"
#include "orbitkit/version.hpp"

namespace {

using namespace orbitkit;

struct FamilyArgs {
  std::string family;
  std::string a;  // rational string or "sqrt7"
  std::string spec;
};

void add_family_flags(CLI::App* cmd, FamilyArgs& fa) {
  cmd->add_option("--family", fa.family, "family name");
  cmd->add_option("--a", fa.a, "fixed parameter a (rational or 'sqrt7')");
  cmd->add_option("--spec", fa.spec, "mini-format spec: family=<name>;a=<p/q>");
}

bool is_sqrt7(const FamilyArgs& fa) { return fa.a == "sqrt7"; }

MapFamily build_family(const FamilyArgs& fa) {
  if (!fa.spec.empty()) return parse_family_spec(fa.spec);
  if (fa.family.empty()) throw ParseError("missing --family (or --spec)");
  std::vector<Rational> fixed;
  if (!fa.a.empty()) {
    if (is_sqrt7(fa))
      throw ParseError("a=sqrt7 is supported by 'detect' only (closed-form route)");
    fixed.push_back(parse_rational(fa.a));
  }
  return builtin(fa.family, fixed);
}

std::pair<Rational, Rational> parse_range(const std::string& s) {
  auto sep = s.find("..");
  if (sep == std::string::npos) throw ParseError("range must look like lo..hi");
  Rational lo = parse_rational(s.substr(0, sep));
  Rational hi = parse_rational(s.substr(sep + 2));
  if (lo > hi) throw ParseError("range lo must be <= hi");
  return {lo, hi};
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbitkit: exact + numerical bifurcation toolkit for polynomial maps"};
  app.require_subcommand(1);

  FamilyArgs fa;
  int n = 3;
  std::string param, range_str, out_path, format = "text";
  Rational point_tol(1, 1000000000);
  int grid = 2000;
  ContinuationOptions copts;
  DiagramSettings dset;
  int width = 800, height = 600;
  std::string golden_dir = "tests/golden";
  bool selftest_break = false;
  std::string only_claim;
  bool fast = false;

  auto* count_cmd = app.add_subcommand("period-count", "distinct period-n points at a parameter");
  add_family_flags(count_cmd, fa);
  count_cmd->add_option("--n", n);
  count_cmd->add_option("--param", param)->required();

  auto* tangent_cmd = app.add_subcommand("tangent", "parameters with a real multiple root");
  add_family_flags(tangent_cmd, fa);
  tangent_cmd->add_option("--n", n);
  bool all_signs = false;
  tangent_cmd->add_flag("--all-signs", all_signs, "include non-positive parameters");

  auto* detect_cmd = app.add_subcommand("detect", "bubble / point bifurcation report");
  add_family_flags(detect_cmd, fa);
  detect_cmd->add_option("--n", n);
  detect_cmd->add_option("--range", range_str);
  std::string point_tol_str = "1/1000000000";
  detect_cmd->add_option("--point-tol", point_tol_str);
  int detect_grid = 97;
  detect_cmd->add_option("--grid", detect_grid);
  detect_cmd->add_option("--out", out_path);

  auto* scan_cmd = app.add_subcommand("scan", "exact period-point counts over a grid");
  add_family_flags(scan_cmd, fa);
  scan_cmd->add_option("--n", n);
  scan_cmd->add_option("--range", range_str)->required();
  scan_cmd->add_option("--grid", grid);
  scan_cmd->add_option("--out", out_path);

  auto* cont_cmd = app.add_subcommand("continue", "track a periodic orbit across a range");
  add_family_flags(cont_cmd, fa);
  cont_cmd->add_option("--n", n);
  cont_cmd->add_option("--param", param, "rational anchor parameter for exact seeding")
      ->required();
  cont_cmd->add_option("--range", range_str)->required();
  cont_cmd->add_option("--step0", copts.step0);
  cont_cmd->add_option("--newton-tol", copts.newton_tol);
  cont_cmd->add_option("--event-tol", copts.event_tol);
  cont_cmd->add_option("--out", out_path);

  auto* diag_cmd = app.add_subcommand("diagram", "orbit (bifurcation) diagram");
  add_family_flags(diag_cmd, fa);
  diag_cmd->add_option("--range", range_str)->required();
  diag_cmd->add_option("--params", dset.n_params);
  diag_cmd->add_option("--transient", dset.transient);
  diag_cmd->add_option("--keep", dset.keep);
  double seed_x0 = 0;
  auto* x0_opt = diag_cmd->add_option("--x0", seed_x0, "fixed seed (default: critical points)");
  diag_cmd->add_option("--format", format, "csv or svg");
  diag_cmd->add_option("--width", width);
  diag_cmd->add_option("--height", height);
  diag_cmd->add_option("--out", out_path);

  auto* verify_cmd = app.add_subcommand("verify-paper", "replay every checkable claim");
  verify_cmd->add_option("--format", format, "text or json");
  verify_cmd->add_option("--golden-dir", golden_dir);
  verify_cmd->add_option("--only", only_claim, "run a single claim by id");
  verify_cmd->add_flag("--fast", fast, "skip the slower diagram-band/property claims");
  verify_cmd->add_flag("--selftest-break", selftest_break)->group("");  // test harness hook

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (count_cmd->parsed()) {
      MapFamily f = build_family(fa);
      PeriodCount pc = count_period_points(f, n, parse_rational(param));
      std::cout << pc.count << "\n";
      if (pc.lower_period_flag)
        std::cerr << "note: a root of lower exact period is present at this parameter\n";
      if (pc.degree_dropped)
        std::cerr << "note: leading coefficient vanishes here (degree dropped)\n";
      return 0;
    }

    if (tangent_cmd->parsed()) {
      MapFamily f = build_family(fa);
      TangentLocus locus = tangent_parameters(f, n, !all_signs);
      for (AlgebraicRoot r : locus.params) {
        r.refine(Rational(1, Integer(1000000000000)));
        std::cout << "param ~ " << r.approx() << "  root of " << r.defining().str("t")
                  << "  in (" << to_double(r.isolator().lo) << ", "
                  << to_double(r.isolator().hi) << "]\n";
      }
      if (locus.params.empty()) std::cout << "(no certified tangent parameters)\n";
      return 0;
    }

    if (detect_cmd->parsed()) {
      DetectOptions dopts;
      dopts.point_tol = parse_rational(point_tol_str);
      dopts.grid = detect_grid;
      std::ostringstream body;
      if (is_sqrt7(fa)) {
        BubbleReport rep = bubble_closed_form(AlgebraicRoot::sqrt_of(Rational(7)), n);
        body << bubble_report_json(rep) << "\n";
      } else {
        MapFamily f = build_family(fa);
        Interval range{Rational(0), Rational(0)};
        if (!range_str.empty()) {
          auto [lo, hi] = parse_range(range_str);
          range = {lo, hi};
        } else if (f.name == "T-fixed-a" && f.fixed_param) {
          range = {Rational(1, 100), *f.fixed_param};
        } else {
          throw ParseError("--range is required for this family");
        }
        for (const BubbleReport& rep : detect(f, n, range, dopts))
          body << bubble_report_json(rep) << "\n";
      }
      write_output(out_path, body.str());
      return 0;
    }

    if (scan_cmd->parsed()) {
      MapFamily f = build_family(fa);
      auto [lo, hi] = parse_range(range_str);
      CountGrid g = scan_counts(f, n, Interval{lo, hi}, grid);
      std::ostringstream body;
      body << "param,count,lower_period\n";
      for (size_t i = 0; i < g.params.size(); ++i)
        body << to_double(g.params[i]) << "," << g.counts[i].count << ","
             << (g.counts[i].lower_period_flag ? 1 : 0) << "\n";
      write_output(out_path, body.str());
      return 0;
    }

    if (cont_cmd->parsed()) {
      MapFamily f = build_family(fa);
      auto [lo, hi] = parse_range(range_str);
      Rational anchor = parse_rational(param);
      auto seeds = seed_orbits(f, n, anchor, copts.newton_tol);
      std::ostringstream body;
      body << "branch,param,x0,multiplier,residual,event\n";
      body.precision(17);
      int id = 0;
      for (const OrbitPoint& s : seeds) {
        OrbitBranch b = continue_branch(f, n, s, to_double(lo), to_double(hi), copts);
        for (const OrbitPoint& p : b.points)
          body << id << "," << p.param << "," << p.cycle[0] << "," << p.multiplier
               << "," << p.residual << ",\n";
        for (const BifurcationEvent& e : b.events)
          body << id << "," << e.param << ",,,," << to_string(e.kind) << "\n";
        ++id;
      }
      write_output(out_path, body.str());
      return 0;
    }

    if (diag_cmd->parsed()) {
      MapFamily f = build_family(fa);
      auto [lo, hi] = parse_range(range_str);
      if (x0_opt->count()) dset.x0 = seed_x0;
      DiagramDataset d = orbit_diagram(f, to_double(lo), to_double(hi), dset);
      if (format == "svg") {
        write_output(out_path, render_svg(d, width, height));
      } else {
        std::ostringstream body;
        write_csv(d, body);
        write_output(out_path, body.str());
      }
      std::cerr << "escaped parameters: " << d.escaped_params << "/" << d.params.size()
                << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      VerifyOptions vopts;
      vopts.golden_dir = std::ifstream(golden_dir + "/cubic_point_c_star.txt").good()
                             ? golden_dir
                             : "";
      vopts.inject_wrong_threshold = selftest_break;
      vopts.include_slow = !fast;
      auto results = run_paper_claims(vopts);
      bool all = true;
      if (format == "json") {
        nlohmann::json j;
        j["tool_version"] = kVersion;
        j["claims"] = nlohmann::json::array();
        for (const auto& r : results) {
          if (!only_claim.empty() && r.id != only_claim) continue;
          j["claims"].push_back({{"id", r.id},
                                 {"description", r.description},
                                 {"pass", r.pass},
                                 {"detail", r.detail}});
          all = all && r.pass;
        }
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& r : results) {
          if (!only_claim.empty() && r.id != only_claim) continue;
          std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.description;
          if (!r.detail.empty()) std::cout << " -- " << r.detail;
          std::cout << "\n";
        }
        for (const auto& r : results)
          if (only_claim.empty() || r.id == only_claim) all = all && r.pass;
      }
      return all ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
