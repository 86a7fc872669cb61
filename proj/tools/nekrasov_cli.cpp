// Command-line front end: series, blowup equations, recursion, the
// prepotential checks and the Hilbert-series identities.
//
// Exit codes: 0 all verified, 1 a verification failed, 2 usage error,
// 3 internal consistency failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nekrasov/nekrasov.hpp"

namespace {

using nek::json;
using Clock = std::chrono::steady_clock;

struct RunConfig {
  std::string command;
  int rank = 2;
  int order = 2;
  int d_max = -1;  // -1: 2r - 1
  int t_deg_max = 2;
  std::string mode = "symbolic";
  int trials = 20;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out_path;
  int threads = 0;
  bool timing = false;
};

json config_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  if (c.command != "hilbert") j["rank"] = c.rank;
  j["order"] = c.order;
  if (c.command == "blowup-check") {
    j["d_max"] = c.d_max;
    j["mode"] = c.mode;
    if (c.mode == "sampled") {
      j["trials"] = c.trials;
      j["seed"] = c.seed;
    }
  }
  if (c.command == "sw-check") j["t_deg_max"] = c.t_deg_max;
  return j;
}

class Timer {
 public:
  Timer(nek::Report& report, std::string name) : report_(report), name_(std::move(name)), start_(Clock::now()) {}
  ~Timer() {
    report_.timing_ms[name_] += std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  nek::Report& report_;
  std::string name_;
  Clock::time_point start_;
};

std::string first_nonzero(const nek::QSeries& s, const nek::VariableSpace& vars) {
  const int n = s.first_nonzero();
  if (n < 0) return "";
  return "q^" + nek::q_exponent_json(s.offset(), n).dump() + " coefficient " + s[n].render(vars);
}

nek::Verdict zero_verdict(const std::string& name, const nek::QSeries& s, const nek::VariableSpace& vars) {
  return {name, s.is_zero(), first_nonzero(s, vars)};
}

void cmd_z(const RunConfig& c, nek::Report& report) {
  nek::QSeries z, f;
  {
    Timer t(report, "z_series");
    z = nek::z_series(c.rank, c.order);
  }
  {
    Timer t(report, "f_inst_series");
    f = nek::f_inst_series(c.rank, c.order);
  }
  report.series.push_back({"Z", z});
  report.series.push_back({"F_inst", f});
}

void cmd_blowup_check(const RunConfig& c, nek::Report& report) {
  const nek::VariableSpace vars(c.rank);
  const unsigned d_max = static_cast<unsigned>(c.d_max);
  if (c.mode == "symbolic") {
    std::vector<nek::QSeries> residuals;
    {
      Timer t(report, "residuals");
      residuals = nek::blowup_equation_residuals(c.rank, d_max, c.order);
    }
    report.verdicts.push_back(zero_verdict("zind_residual", residuals[0], vars));
    for (unsigned d = 1; d <= d_max; ++d) {
      report.verdicts.push_back(zero_verdict("blowup_residual_d" + std::to_string(d), residuals[d], vars));
    }
    return;
  }
  nek::SampledResidual s;
  {
    Timer t(report, "sampled_residuals");
    s = nek::blowup_residual_sampled(c.rank, d_max, c.order, c.trials, c.seed);
  }
  report.config["degree_bound"] = s.degree_bound;
  report.config["redraws"] = s.redraws;
  for (unsigned d = 0; d <= d_max; ++d) {
    nek::Verdict v{d == 0 ? "zind_residual_sampled" : "blowup_residual_sampled_d" + std::to_string(d), true, ""};
    for (std::size_t trial = 0; trial < s.residual.size() && v.ok; ++trial) {
      for (std::size_t n = 0; n < s.residual[trial][d].size(); ++n) {
        if (s.residual[trial][d][n] != 0) {
          v.ok = false;
          v.detail = "trial " + std::to_string(trial) + " q^" + std::to_string(n) + " value " +
                     nek::to_string(s.residual[trial][d][n]);
          break;
        }
      }
    }
    report.verdicts.push_back(std::move(v));
  }
}

void cmd_recurse(const RunConfig& c, nek::Report& report) {
  nek::RecursionResult rec;
  nek::QSeries direct;
  {
    Timer t(report, "recursion");
    rec = nek::recursive_solve_z_checked(c.rank, c.order);
  }
  {
    Timer t(report, "localization");
    direct = nek::z_series(c.rank, c.order);
  }
  report.series.push_back({"Z_recursive", rec.z});
  std::string detail;
  for (int n = 0; n <= c.order; ++n) {
    if (!(rec.z[n] == direct[n])) {
      detail = "first difference at q^" + std::to_string(n);
      break;
    }
  }
  report.verdicts.push_back({"recursion_matches_localization", detail.empty(), detail});
  report.verdicts.push_back({"second_chart_consistent", rec.second_chart_consistent, ""});
}

void cmd_sw_check(const RunConfig& c, nek::Report& report) {
  const nek::VariableSpace vars(c.rank);
  nek::QSeries f;
  {
    Timer t(report, "f_lowest");
    f = nek::f_lowest(c.rank, c.order);
  }
  report.series.push_back({"F", f});
  report.series.push_back({"u2", nek::u2_series(f, c.rank)});
  if (c.rank >= 2) {
    {
      Timer t(report, "contact_residual");
      report.verdicts.push_back(zero_verdict("contact_residual", nek::contact_residual(f, c.rank, c.order), vars));
    }
    if (c.order >= 1) {
      Timer t(report, "uniqueness_probe");
      const auto probe = nek::contact_residual_perturbed(c.rank, c.order, nek::FactoredRational::one(vars.size()));
      report.verdicts.push_back({"uniqueness_probe_nonzero", !probe.is_zero(), first_nonzero(probe, vars)});
    }
  }
  {
    Timer t(report, "chart_limits");
    for (const auto& lc : nek::chart_limit_checks(c.rank, c.order)) {
      const std::string k = lc.k.render();
      report.verdicts.push_back({"chart_limit_1 k=" + k, lc.first, ""});
      report.verdicts.push_back({"chart_limit_2 k=" + k, lc.second, ""});
      report.verdicts.push_back({"chart_limit_3 k=" + k, lc.third, ""});
    }
  }
  {
    Timer t(report, "blowup_limit");
    const nek::BlowupLimit lim = nek::blowup_limit_check(c.rank, 0, static_cast<unsigned>(c.t_deg_max), c.order);
    report.series.push_back({"blowup_limit", lim.lhs});
    report.verdicts.push_back({"blowup_limit", lim.equal, lim.report});
  }
}

void cmd_hilbert(const RunConfig& c, nek::Report& report) {
  {
    Timer t(report, "haiman");
    const auto h = nek::check_haiman(c.order);
    report.verdicts.push_back({"haiman", h.ok, h.report});
  }
  {
    Timer t(report, "m21");
    const auto m = nek::check_m21();
    report.verdicts.push_back({"m21", m.ok, m.report});
  }
}

void validate(RunConfig& c) {
  if (c.rank < 1 || c.rank > 5) throw nek::UsageError("--rank must be between 1 and 5");
  if (c.order < 0) throw nek::UsageError("--order must be nonnegative");
  if (c.t_deg_max < 0) throw nek::UsageError("--t-deg-max must be nonnegative");
  if (c.d_max < 0) c.d_max = 2 * c.rank - 1;
  if (c.mode == "sampled" && c.trials < 1) throw nek::UsageError("--trials must be at least 1 in sampled mode");
  if (c.threads < 0) throw nek::UsageError("--threads must be nonnegative");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Instanton partition functions and blowup equations"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* sub, bool ranked) {
    if (ranked) sub->add_option("--rank,-r", c.rank, "gauge rank r")->capture_default_str();
    sub->add_option("--order,-n", c.order, "q-order")->capture_default_str();
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_option("--out,-o", c.out_path, "write the report to this file instead of stdout");
    sub->add_option("--threads", c.threads, "worker cap (0: NEK_THREADS or hardware)");
    sub->add_flag("--timing", c.timing, "include wall-clock timings");
  };
  auto* z = app.add_subcommand("z", "Z and F^inst series");
  common(z, true);
  auto* blowup = app.add_subcommand("blowup-check", "blowup-equation residuals");
  common(blowup, true);
  blowup->add_option("--d-max", c.d_max, "largest insertion degree (default 2r-1)");
  blowup->add_option("--mode", c.mode, "symbolic or sampled")->check(CLI::IsMember({"symbolic", "sampled"}))->capture_default_str();
  blowup->add_option("--trials", c.trials, "sample points in sampled mode")->capture_default_str();
  blowup->add_option("--seed", c.seed, "sampler seed")->capture_default_str();
  auto* recurse = app.add_subcommand("recurse", "Z from the blowup recursion vs localization");
  common(recurse, true);
  auto* sw = app.add_subcommand("sw-check", "prepotential checks");
  common(sw, true);
  sw->add_option("--t-deg-max", c.t_deg_max, "t-degree kept in the blowup limit")->capture_default_str();
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert-series identities");
  common(hilbert, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  nek::Report report;
  report.with_timing = c.timing;
  int rank_for_render = 1;
  try {
    c.command = app.get_subcommands().front()->get_name();
    validate(c);
    if (c.threads > 0) nek::set_worker_count(c.threads);
    report.config = config_json(c);
    rank_for_render = c.command == "hilbert" ? 1 : c.rank;
    if (c.command == "z") cmd_z(c, report);
    else if (c.command == "blowup-check") cmd_blowup_check(c, report);
    else if (c.command == "recurse") cmd_recurse(c, report);
    else if (c.command == "sw-check") cmd_sw_check(c, report);
    else cmd_hilbert(c, report);
  } catch (const nek::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const nek::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }

  const nek::VariableSpace vars(rank_for_render);
  const std::string text = c.format == "json" ? report.to_json(vars).dump(2) + "\n" : report.to_text(vars);
  if (c.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << c.out_path << "\n";
      return 2;
    }
    out << text;
  }
  for (const auto& v : report.verdicts) {
    if (!v.ok) std::cerr << "verification failed: " << v.name << (v.detail.empty() ? "" : " : " + v.detail) << "\n";
  }
  return report.all_ok() ? 0 : 1;
}
