#include "tscale_cli/commands.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tscale/calculus.hpp"
#include "tscale/error.hpp"
#include "tscale/format.hpp"
#include "tscale/functions.hpp"
#include "tscale/regressive.hpp"
#include "tscale/report.hpp"
#include "tscale/scale_spec.hpp"
#include "tscale/scenario.hpp"
#include "tscale_cli/logging.hpp"

namespace tscale::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kUsage =
    "usage:\n"
    "  tscale calc <sigma|mu|dderiv|dint|exp|compare> --scale DESC [options]\n"
    "  tscale verify <config>\n"
    "  tscale converge <config>\n";

void print_row(std::ostream& out, double t, double value) {
  out << format_double(t) << ',' << format_double(value) << '\n';
}

void print_rows(std::ostream& out, const GridFn1& g) {
  for (std::size_t i = 0; i < g.size(); ++i) print_row(out, g.t(i), g[i]);
}

// Runs body and maps library exceptions onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kDomainError;
  } catch (const fs::filesystem_error& e) {
    err << "cannot write report: " << e.what() << '\n';
    return kConfigError;
  }
}

void remove_quietly(const fs::path& p) {
  std::error_code ec;
  fs::remove(p, ec);
}

void refuse_overwrite(const fs::path& config, const fs::path& report) {
  std::error_code ec;
  if (fs::equivalent(config, report, ec)) {
    throw ConfigError("output path " + report.string() + " would overwrite the scenario file");
  }
}

fs::path strip_report_extension(fs::path p) {
  if (p.extension() == ".csv" || p.extension() == ".json") p.replace_extension();
  return p;
}

}  // namespace

std::pair<fs::path, fs::path> verify_outputs(const fs::path& configured) {
  const fs::path base = strip_report_extension(configured);
  return {fs::path(base.string() + ".csv"), fs::path(base.string() + ".json")};
}

int cmd_calc(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"time-scale calculus on a single scale", "tscale calc"};
  std::string op;
  std::string scale_desc;
  std::string fn_desc;
  std::string g_desc;
  std::optional<double> from, to, t0, a;
  double x0 = 0.0;
  app.add_option("operation", op, "sigma | mu | dderiv | dint | exp | compare")
      ->required()
      ->check(CLI::IsMember({"sigma", "mu", "dderiv", "dint", "exp", "compare"}));
  app.add_option("--scale", scale_desc, "scale descriptor, e.g. integer:0..5 or q:2,4")->required();
  app.add_option("--fn", fn_desc, "function descriptor (f for compare), e.g. poly:0,1");
  app.add_option("--g", g_desc, "coefficient g for compare");
  app.add_option("--from", from, "lower integration limit (a point of the scale)");
  app.add_option("--to", to, "upper integration limit (a point of the scale)");
  app.add_option("--t0", t0, "initial point of the exponential");
  app.add_option("--a", a, "initial point of the comparison bound");
  app.add_option("--x0", x0, "initial value of the comparison bound");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }

  return guarded(err, [&]() -> int {
    const ScalePtr ts = share(ScaleSpec::parse(scale_desc).build());
    auto need_fn = [&](const std::string& desc, const char* flag) {
      if (desc.empty()) throw ConfigError(std::string("calc ") + op + " needs " + flag);
      return Function1D::parse(desc).sample(ts);
    };
    auto index = [&](const std::optional<double>& t, std::size_t fallback) {
      return t ? ts->index_of(*t) : fallback;
    };

    if (op == "sigma") {
      for (std::size_t i = 0; i < ts->size(); ++i) print_row(out, (*ts)[i], (*ts)[ts->sigma(i)]);
    } else if (op == "mu") {
      for (std::size_t i = 0; i < ts->size(); ++i) print_row(out, (*ts)[i], ts->mu(i));
    } else if (op == "dderiv") {
      print_rows(out, delta_derivative(need_fn(fn_desc, "--fn")));
    } else if (op == "dint") {
      const GridFn1 f = need_fn(fn_desc, "--fn");
      out << format_double(cauchy_integral(f, index(from, 0), index(to, ts->last_index()))) << '\n';
    } else if (op == "exp") {
      print_rows(out, exp_fn(need_fn(fn_desc, "--fn"), index(t0, 0)));
    } else {
      const GridFn1 f = need_fn(fn_desc, "--fn");
      const GridFn1 g = need_fn(g_desc, "--g");
      print_rows(out, comparison_bound(x0, f, g, index(a, 0)));
    }
    return kOk;
  });
}

int cmd_verify(const fs::path& config, std::ostream& out, std::ostream& err) {
  fs::path csv_path, json_path;
  bool writing = false;
  const int code = guarded(err, [&]() -> int {
    const VerifyScenario scenario = load_verify_scenario(config);
    std::tie(csv_path, json_path) = verify_outputs(scenario.output.path);
    refuse_overwrite(config, csv_path);
    refuse_overwrite(config, json_path);
    log_info("verify: " + std::string(to_string(scenario.instances.theorem)) + ", " +
             std::to_string(scenario.instances.count) + " instances on " +
             scenario.instances.scale1.describe() + " x " + scenario.instances.scale2.describe());

    const auto started = std::chrono::steady_clock::now();
    const VerifySummary summary = run_verification(scenario.instances);
    const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - started;

    const std::string csv = render_verify_csv(summary);
    const std::string json =
        render_verify_json(summary, scenario.instances.count, scenario.instances.variants);
    writing = true;
    write_file_atomic(csv_path, csv);
    write_file_atomic(json_path, json);
    writing = false;

    for (const auto& d : summary.digests) {
      if (!d.dominated) {
        log_debug("instance " + std::to_string(d.index) + ": " +
                  std::to_string(d.violation_count) + " violations");
      }
    }
    out << "instances_run=" << summary.instances_run
        << " instances_with_violation=" << summary.instances_with_violation
        << " worst_relative_violation=" << format_double(summary.worst_relative_violation)
        << " wall_time_s=" << format_double(wall.count()) << '\n';
    out << "wrote " << csv_path.string() << " and " << json_path.string() << '\n';
    return summary.instances_with_violation == 0 ? kOk : kViolations;
  });
  if (code != kOk && code != kViolations) {
    if (writing) {
      remove_quietly(csv_path);
      remove_quietly(json_path);
    }
  }
  return code;
}

int cmd_converge(const fs::path& config, std::ostream& out, std::ostream& err) {
  fs::path path;
  bool writing = false;
  const int code = guarded(err, [&]() -> int {
    const ConvergeScenario scenario = load_converge_scenario(config);
    const fs::path base = strip_report_extension(scenario.output.path);
    path = fs::path(base.string() + (scenario.output.format == ReportFormat::Csv ? ".csv" : ".json"));
    refuse_overwrite(config, path);
    const auto rows = run_convergence(scenario.study);
    for (const auto& r : rows) {
      log_info("h=" + format_double(r.h) + " max_error=" + format_double(r.max_error));
    }
    writing = true;
    write_file_atomic(path, scenario.output.format == ReportFormat::Csv
                                ? render_converge_csv(rows)
                                : render_converge_json(scenario.study, rows));
    writing = false;
    out << render_converge_csv(rows);
    return kOk;
  });
  if (code != kOk && writing) remove_quietly(path);
  return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.size() < 2) {
    err << kUsage;
    return kConfigError;
  }
  const std::string& command = args[1];
  if (command == "-h" || command == "--help") {
    out << kUsage;
    return kOk;
  }
  if (command == "calc") {
    return cmd_calc(std::vector<std::string>(args.begin() + 2, args.end()), out, err);
  }
  if (command == "verify" || command == "converge") {
    if (args.size() != 3) {
      err << "usage: tscale " << command << " <config>\n";
      return kConfigError;
    }
    return command == "verify" ? cmd_verify(args[2], out, err) : cmd_converge(args[2], out, err);
  }
  err << "unknown command '" << command << "'\n" << kUsage;
  return kConfigError;
}

}  // namespace tscale::cli
