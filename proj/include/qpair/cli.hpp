#pragma once

// Command-line front end: scenario sweeps to CSV/JSON, single-time
// measurements, gnuplot script emission and the cross-validation report.
// Exit codes: 0 ok, 1 verification failure, 2 usage/config error, 3 I/O.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpair/scenarios.hpp"

namespace qpair {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kCsvHeader =
    "t,doe,purity_joint,purity_a,purity_b,entropy_a,entropy_b,entropy_joint,"
    "sx,sy,sz,tx,ty,tz";

// 12 significant digits, locale-independent, -0 canonicalized. Both the CSV
// and JSON emitters go through here so the two formats agree byte-for-byte
// on every value.
inline std::string format_value(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace cli_detail {

inline std::array<std::pair<const char*, double>, 14> record_fields(const SweepRecord& r,
                                                                    bool bits) {
  const double u = bits ? 1.0 / std::log(2.0) : 1.0;
  return {{{"t", r.t},
           {"doe", r.measures.doe},
           {"purity_joint", r.measures.purity_joint},
           {"purity_a", r.measures.purity_a},
           {"purity_b", r.measures.purity_b},
           {"entropy_a", r.measures.entropy_a * u},
           {"entropy_b", r.measures.entropy_b * u},
           {"entropy_joint", r.measures.entropy_joint * u},
           {"sx", r.s_tilde.x},
           {"sy", r.s_tilde.y},
           {"sz", r.s_tilde.z},
           {"tx", r.t_tilde.x},
           {"ty", r.t_tilde.y},
           {"tz", r.t_tilde.z}}};
}

}  // namespace cli_detail

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records,
                            bool bits) {
  os << kCsvHeader << '\n';
  for (const SweepRecord& r : records) {
    const auto fields = cli_detail::record_fields(r, bits);
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) os << ',';
      os << format_value(fields[i].second);
    }
    os << '\n';
  }
}

inline void write_record_json(std::ostream& os, const SweepRecord& r, bool bits) {
  const auto fields = cli_detail::record_fields(r, bits);
  os << '{';
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << '"' << fields[i].first << "\":" << format_value(fields[i].second);
  }
  os << '}';
}

inline void write_sweep_json(std::ostream& os, const std::vector<SweepRecord>& records,
                             bool bits) {
  os << "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    os << "  ";
    write_record_json(os, records[i], bits);
    if (i + 1 < records.size()) os << ',';
    os << '\n';
  }
  os << "]\n";
}

inline std::string gnuplot_script(const std::string& csv_path, const std::string& png_path,
                                  const std::string& title) {
  std::ostringstream gp;
  gp << "# " << title << ": degree of entanglement, reduced purities and entropies\n"
     << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set terminal pngcairo size 1000,1200\n"
     << "set output '" << png_path << "'\n"
     << "set multiplot layout 3,1 title '" << title << "'\n"
     << "set xlabel 'scaled time t'\n"
     << "set ylabel 'DOE'\n"
     << "plot '" << csv_path << "' using 1:2 with lines lw 2 title 'degree of entanglement'\n"
     << "set ylabel 'purity'\n"
     << "plot '" << csv_path << "' using 1:4 with lines lw 2 title 'qubit a', \\\n"
     << "     '" << csv_path << "' using 1:5 with lines lw 2 dt 2 title 'qubit b'\n"
     << "set ylabel 'entropy'\n"
     << "plot '" << csv_path << "' using 1:6 with lines lw 2 title 'qubit a', \\\n"
     << "     '" << csv_path << "' using 1:7 with lines lw 2 dt 2 title 'qubit b'\n"
     << "unset multiplot\n";
  return gp.str();
}

inline void write_verify_text(std::ostream& os, const VerifyReport& rep) {
  int passed = 0;
  for (const VerifyCheck& c : rep.checks) {
    os << (c.pass ? "  PASS  " : "  FAIL  ") << c.name;
    for (std::size_t pad = c.name.size(); pad < 36; ++pad) os << ' ';
    os << " observed " << format_value(c.observed) << "  tol " << format_value(c.tol)
       << "  (vs " << c.expected << ")\n";
    passed += c.pass ? 1 : 0;
  }
  if (!rep.errata.empty()) {
    os << "errata — published claims at odds with the dynamics (informational):\n";
    for (const Erratum& e : rep.errata) {
      os << "  * " << e.claim << "\n    where: " << e.paper_location
         << "; observed: " << format_value(e.observed) << '\n';
    }
  }
  os << "summary: " << passed << '/' << rep.checks.size() << " checks passed, "
     << rep.errata.size() << " errata recorded\n";
}

inline nlohmann::ordered_json verify_report_json(const VerifyReport& rep) {
  nlohmann::ordered_json j;
  j["checks"] = nlohmann::ordered_json::array();
  for (const VerifyCheck& c : rep.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"expected", c.expected},
                           {"observed", c.observed},
                           {"residual", c.residual},
                           {"tol", c.tol},
                           {"pass", c.pass}});
  }
  j["errata"] = nlohmann::ordered_json::array();
  for (const Erratum& e : rep.errata) {
    j["errata"].push_back(
        {{"claim", e.claim}, {"paper_location", e.paper_location}, {"observed", e.observed}});
  }
  return j;
}

namespace cli_detail {

inline std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  return f;
}

inline void finish_output(std::ofstream& f, const std::string& path) {
  f.flush();
  if (!f) throw IoError("write to '" + path + "' failed");
}

}  // namespace cli_detail

/// Parses and runs one invocation. `args` holds the arguments without the
/// program name; normal and error text go to `out` / `err`.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"two-qubit entanglement, purity and entropy dynamics"};
  app.require_subcommand(1);

  std::string scenario_name;
  ScenarioSpec spec;
  SweepConfig cfg;
  double t_single = 0.0;
  std::string out_path;
  std::string format = "csv";
  std::string units = "nats";
  double tol_override = 0.0;

  const auto add_scenario_flags = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", scenario_name, "class1|class2|class3|entangled")
        ->required()
        ->check(CLI::IsMember({"class1", "class2", "class3", "entangled"}));
    cmd->add_option("--sx", spec.sx, "qubit-a x polarization (class1, class3)");
    cmd->add_option("--tx", spec.tx, "qubit-b x polarization (class3)");
    cmd->add_option("--ty", spec.ty, "qubit-b y polarization (class3)");
    cmd->add_option("--p", spec.p, "entangled-class parameter in [0,1]; q = sqrt(1-p^2)");
  };
  const auto add_coupling_flags = [&](CLI::App* cmd) {
    // decimal radians only; the default is pi/6 to 16 digits
    cmd->add_option("--alpha1", cfg.params.alpha1, "x-x coupling, radians per unit scaled time")
        ->capture_default_str();
    cmd->add_option("--alpha2", cfg.params.alpha2, "y-y coupling")->capture_default_str();
    cmd->add_option("--alpha3", cfg.params.alpha3, "z-z coupling")->capture_default_str();
  };
  const auto add_grid_flags = [&](CLI::App* cmd) {
    cmd->add_option("--t-start", cfg.t_start, "sweep start time")->capture_default_str();
    cmd->add_option("--t-end", cfg.t_end, "sweep end time")->capture_default_str();
    cmd->add_option("--steps", cfg.steps, "grid points (>= 2)")->capture_default_str();
  };
  const auto add_units_flag = [&](CLI::App* cmd) {
    cmd->add_option("--entropy-units", units, "nats|bits (display only)")
        ->check(CLI::IsMember({"nats", "bits"}));
  };

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep a scenario over a time grid");
  add_scenario_flags(sweep_cmd);
  add_coupling_flags(sweep_cmd);
  add_grid_flags(sweep_cmd);
  add_units_flag(sweep_cmd);
  sweep_cmd->add_option("--out", out_path, "output path (default: standard output)");
  sweep_cmd->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* measure_cmd = app.add_subcommand("measure", "measures at a single time, JSON");
  add_scenario_flags(measure_cmd);
  add_coupling_flags(measure_cmd);
  add_units_flag(measure_cmd);
  measure_cmd->add_option("--t", t_single, "evaluation time")->required();

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "cross-validation report with published-claim errata");
  add_coupling_flags(verify_cmd);
  add_grid_flags(verify_cmd);
  verify_cmd->add_option("--out", out_path, "JSON report path")
      ->default_str("verify_report.json");
  verify_cmd->add_option("--tol", tol_override,
                         "override tolerance for the residual checks");

  CLI::App* plot_cmd = app.add_subcommand("plot", "emit a gnuplot script plus its CSV data");
  add_scenario_flags(plot_cmd);
  add_coupling_flags(plot_cmd);
  add_grid_flags(plot_cmd);
  plot_cmd->add_option("--out", out_path, "script path (default: <scenario>.gp)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    // Scenario parameters only make sense for the class that reads them.
    const auto reject_stray = [&](CLI::App* cmd) {
      spec.kind = scenario_from_string(scenario_name);
      const bool is_class3 = spec.kind == ScenarioKind::Class3;
      const bool takes_sx =
          spec.kind == ScenarioKind::Class1 || is_class3;
      if (cmd->count("--sx") && !takes_sx)
        throw InvalidSpecError("--sx does not apply to " + scenario_name);
      if ((cmd->count("--tx") || cmd->count("--ty")) && !is_class3)
        throw InvalidSpecError("--tx/--ty only apply to class3");
      if (cmd->count("--p") && spec.kind != ScenarioKind::Entangled)
        throw InvalidSpecError("--p only applies to entangled");
    };
    const bool bits = units == "bits";

    if (sweep_cmd->parsed()) {
      reject_stray(sweep_cmd);
      const auto records = sweep(spec, cfg);
      const auto emit = [&](std::ostream& os) {
        format == "json" ? write_sweep_json(os, records, bits)
                         : write_sweep_csv(os, records, bits);
      };
      if (out_path.empty()) {
        emit(out);
      } else {
        auto f = cli_detail::open_output(out_path);
        emit(f);
        cli_detail::finish_output(f, out_path);
      }
      return 0;
    }

    if (measure_cmd->parsed()) {
      reject_stray(measure_cmd);
      const TwoQubitBloch st = evolve(initial_state(spec), cfg.params, t_single);
      write_record_json(out, SweepRecord{t_single, measure_all(st), st.s, st.t}, bits);
      out << '\n';
      return 0;
    }

    if (verify_cmd->parsed()) {
      VerifyOptions opts;
      opts.grid = cfg;
      opts.tol_override = tol_override;
      const VerifyReport rep = verify(opts);
      write_verify_text(out, rep);
      const std::string report_path = out_path.empty() ? "verify_report.json" : out_path;
      auto f = cli_detail::open_output(report_path);
      f << verify_report_json(rep).dump(2) << '\n';
      cli_detail::finish_output(f, report_path);
      out << "report written to " << report_path << '\n';
      return rep.all_checks_pass() ? 0 : 1;
    }

    if (plot_cmd->parsed()) {
      reject_stray(plot_cmd);
      const auto records = sweep(spec, cfg);
      std::string script_path = out_path.empty() ? scenario_name + ".gp" : out_path;
      std::string stem = script_path;
      if (const auto dot = stem.rfind('.'); dot != std::string::npos && dot > 0)
        stem = stem.substr(0, dot);
      const std::string csv_path = stem + ".csv";
      {
        auto f = cli_detail::open_output(csv_path);
        write_sweep_csv(f, records, bits);
        cli_detail::finish_output(f, csv_path);
      }
      {
        auto f = cli_detail::open_output(script_path);
        f << gnuplot_script(csv_path, stem + ".png", scenario_name);
        cli_detail::finish_output(f, script_path);
      }
      out << "wrote " << script_path << " and " << csv_path << '\n';
      return 0;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace qpair
