#include "icup/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "icup/errors.hpp"
#include "icup/parallel.hpp"
#include "icup/upper_bounds.hpp"

namespace icup::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSweepColumns[] = {"P",           "a",          "c12",
                                         "regime",      "scheme",     "achievable_bits",
                                         "upper_bits",  "bound_label", "gap_bits"};

// Round-trips the 12-digit text so JSON and CSV carry the same value.
double rounded(double value) { return std::stod(format_number(value)); }

void require_param(double value, const char* flag) {
  if (!std::isfinite(value) || value < 0.0) {
    throw UsageError(std::string(flag) + " must be a finite number >= 0");
  }
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_double(const std::string& text, std::string_view what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(value)) {
    throw UsageError("bad number '" + text + "' in " + std::string(what));
  }
  return value;
}

Json report_json(const RateReport& r) {
  Json row;
  row["P"] = rounded(r.params.power);
  row["a"] = rounded(r.params.gain);
  row["c12"] = rounded(r.params.c12);
  row["regime"] = std::string(to_string(r.regime));
  row["scheme"] = std::string(to_string(r.scheme));
  row["achievable_bits"] = rounded(r.achievable);
  row["upper_bits"] = rounded(r.upper);
  row["bound_label"] = r.bound_label;
  row["gap_bits"] = rounded(r.gap);
  return row;
}

void write_rate_text(const RateReport& r, std::ostream& out) {
  const BoundReport bounds = best_bound(r.params);
  auto line = [&out](std::string_view key, const std::string& value) {
    out << std::left << std::setw(14) << key << value << '\n';
  };
  line("P", format_number(r.params.power));
  line("a", format_number(r.params.gain));
  line("C12", format_number(r.params.c12));
  line("regime", std::string(to_string(r.regime)));
  line("scheme", std::string(to_string(r.scheme)));
  line("achievable", format_number(r.achievable) + " bits");
  line("upper", format_number(r.upper) + " bits (" + r.bound_label + ")");
  line("gap", format_number(r.gap) + " bits");
  if (bounds.ub1) line("  ub1", format_number(*bounds.ub1));
  if (bounds.ub_cgrc_exact) line("  cgrc_exact", format_number(*bounds.ub_cgrc_exact));
  line("  ub2", format_number(bounds.ub2));
  if (bounds.ub3) line("  ub3", format_number(*bounds.ub3));
}

int cmd_rate(double p, double a, double c12, const std::string& scheme, bool json,
             std::ostream& out) {
  require_param(p, "--p");
  require_param(a, "--a");
  require_param(c12, "--c12");
  const RateReport report = gap_report({p, a, c12}, parse_scheme(scheme));
  if (json) {
    out << report_json(report).dump(2) << '\n';
  } else {
    write_rate_text(report, out);
  }
  return kOk;
}

int cmd_sweep(const SweepSpec& spec, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    write_sweep(spec, out);
    return kOk;
  }
  // Render first so a precondition failure leaves no partial file behind.
  std::ostringstream buffer;
  write_sweep(spec, buffer);
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::ios_base::failure("cannot open '" + out_path + "' for writing");
  file << buffer.str();
  file.flush();
  if (!file) throw std::ios_base::failure("failed writing '" + out_path + "'");
  return kOk;
}

void write_suite(const SuiteResult& result, std::ostream& out) {
  out << "suite " << to_string(result.suite) << ": points=" << result.grid_points
      << " in_hypotheses=" << result.in_hypotheses
      << " violations=" << result.violations.size() << ' '
      << (result.passed() ? "PASS" : "FAIL") << '\n';
  for (const CheckResult& c : result.checks) {
    out << "  " << std::left << std::setw(40) << c.name << " max="
        << std::setw(20) << (c.max_observed ? format_number(*c.max_observed) : "n/a")
        << " claimed<=" << format_number(c.claimed) << " (+" << format_number(c.tolerance)
        << ") samples=" << c.samples << " violations=" << c.violations << '\n';
  }
  constexpr std::size_t kShown = 5;
  for (std::size_t i = 0; i < result.violations.size() && i < kShown; ++i) {
    const Violation& v = result.violations[i];
    out << "  violation " << v.suite << " at P=" << format_number(v.params.power)
        << " a=" << format_number(v.params.gain) << " c12=" << format_number(v.params.c12)
        << ": observed " << format_number(v.observed_gap) << " > "
        << format_number(v.claimed_bound) << '\n';
  }
}

int cmd_verify(const std::string& suite_name, const std::string& grid_name,
               double gdof_power, std::ostream& out) {
  const std::vector<Suite> suites = parse_suites(suite_name);
  if (!(std::isfinite(gdof_power) && gdof_power > 1.0)) {
    throw UsageError("--gdof-power must be > 1");
  }
  const Grid grid = make_grid(grid_name);
  VerifyOptions options;
  options.gdof_power = gdof_power;
  std::size_t failed = 0;
  for (Suite s : suites) {
    const SuiteResult result = verify_suite(s, grid, options);
    write_suite(result, out);
    if (!result.passed()) ++failed;
  }
  out << (failed == 0 ? "all suites passed" : std::to_string(failed) + " suite(s) failed")
      << " (grid " << grid.name << ", " << grid.points.size() << " points)\n";
  return failed == 0 ? kOk : kVerifyFailed;
}

int cmd_gdof(double beta, double alpha_min, double alpha_max, double step,
             std::optional<double> numeric_power, std::ostream& out) {
  std::vector<GdofPoint> curve;
  try {
    curve = gdof_curve(beta, alpha_min, alpha_max, step, numeric_power);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  write_gdof_table(curve, out);
  return kOk;
}

}  // namespace

std::vector<double> AxisRange::values() const {
  return scale == Scale::Log ? log_space(min, max, count) : lin_space(min, max, count);
}

AxisRange parse_range(std::string_view text) {
  const auto parts = split(text, ':');
  AxisRange r;
  if (parts.size() == 1) {
    r.min = r.max = parse_double(parts[0], text);
    return r;
  }
  if (parts.size() != 3 && parts.size() != 4) {
    throw UsageError("range must be MIN:MAX:COUNT[:linear|log], got '" + std::string(text) + "'");
  }
  r.min = parse_double(parts[0], text);
  r.max = parse_double(parts[1], text);
  const double count = parse_double(parts[2], text);
  if (count < 1.0 || count != std::floor(count) || count > 1e7) {
    throw UsageError("range count must be a positive integer in '" + std::string(text) + "'");
  }
  r.count = static_cast<std::size_t>(count);
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      r.scale = Scale::Log;
    } else if (parts[3] != "linear" && parts[3] != "lin") {
      throw UsageError("range scale must be linear or log, got '" + parts[3] + "'");
    }
  }
  if (r.min > r.max) throw UsageError("range min exceeds max in '" + std::string(text) + "'");
  if (r.scale == Scale::Log && r.min <= 0.0) {
    throw UsageError("log range needs min > 0 in '" + std::string(text) + "'");
  }
  return r;
}

std::optional<SchemeLabel> parse_scheme(std::string_view text) {
  if (text == "auto") return std::nullopt;
  if (text == "tin") return SchemeLabel::TreatAsNoise;
  if (text == "universal") return SchemeLabel::UniversalPA;
  if (text == "full-coop") return SchemeLabel::FullCoopPA;
  if (text == "optimal-gamma") return SchemeLabel::OptimalGamma;
  if (text == "strong") return SchemeLabel::CommonOnly;
  throw UsageError("unknown scheme '" + std::string(text) +
                   "' (expected auto, tin, universal, full-coop, optimal-gamma, strong)");
}

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_sweep(const SweepSpec& spec, std::ostream& out) {
  std::vector<ChannelParams> points;
  for (double p : spec.p_range.values()) {
    for (double a : spec.a_range.values()) {
      for (double c : spec.c12_range.values()) points.push_back({p, a, c});
    }
  }
  for (const auto& pt : points) validate(pt);
  const auto reports = parallel_map(points.size(), [&](std::size_t i) {
    return gap_report(points[i], spec.scheme);
  });

  if (spec.format == OutputFormat::Json) {
    Json rows = Json::array();
    for (const auto& r : reports) rows.push_back(report_json(r));
    out << rows.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < std::size(kSweepColumns); ++i) {
    out << (i ? "," : "") << kSweepColumns[i];
  }
  out << '\n';
  for (const auto& r : reports) {
    out << format_number(r.params.power) << ',' << format_number(r.params.gain) << ','
        << format_number(r.params.c12) << ',' << to_string(r.regime) << ','
        << to_string(r.scheme) << ',' << format_number(r.achievable) << ','
        << format_number(r.upper) << ',' << r.bound_label << ',' << format_number(r.gap)
        << '\n';
  }
}

void write_gdof_table(const std::vector<GdofPoint>& curve, std::ostream& out) {
  const bool numeric = !curve.empty() && curve.front().numeric.has_value();
  out << "alpha,beta,d_formula" << (numeric ? ",d_numeric_ach,d_numeric_ub" : "") << '\n';
  for (const GdofPoint& pt : curve) {
    out << format_number(pt.alpha) << ',' << format_number(pt.beta) << ','
        << format_number(pt.d_formula);
    if (numeric) {
      if (pt.numeric) {
        out << ',' << format_number(pt.numeric->achievable) << ','
            << format_number(pt.numeric->bound);
      } else {
        out << ",,";
      }
    }
    out << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sum-rate bounds and gap verification for the symmetric Gaussian "
               "interference channel with a unidirectional cooperative link",
               "icup"};
  app.require_subcommand(1);

  double p = 0.0, a = 0.0, c12 = 0.0;
  std::string scheme = "auto";
  bool json = false;
  auto* rate = app.add_subcommand("rate", "Achievable rate, best upper bound and gap at one point");
  rate->add_option("--p", p, "Transmit power P (linear)")->required();
  rate->add_option("--a", a, "Interference gain a (linear)")->required();
  rate->add_option("--c12", c12, "Cooperative link capacity C12 (bits)")->required();
  rate->add_option("--scheme", scheme,
                   "auto | tin | universal | full-coop | optimal-gamma | strong");
  rate->add_flag("--json", json, "Emit JSON instead of text");

  std::string p_range, a_range, c12_range, format = "csv", out_path;
  auto* sweep = app.add_subcommand(
      "sweep", "Grid sweep; ranges are MIN:MAX:COUNT[:linear|log] or a single value");
  sweep->add_option("--p-range", p_range, "P axis")->required();
  sweep->add_option("--a-range", a_range, "a axis")->required();
  sweep->add_option("--c12-range", c12_range, "C12 axis")->required();
  sweep->add_option("--scheme", scheme, "auto | tin | universal | full-coop | optimal-gamma | strong");
  sweep->add_option("--format", format, "csv | json");
  sweep->add_option("--out", out_path, "Output file (default stdout)");

  std::string suite = "all", grid = "default";
  double gdof_power = 1e9;
  auto* verify = app.add_subcommand(
      "verify",
      "Check every gap claim over a grid. Grids: default = P log-spaced on [1e-2,1e6] "
      "(25 pts) x a log-spaced on [1e-3,1e4] (25 pts) x C12 in {0,0.1,0.5,1,2,5,10,"
      "1.01*C(bP)}; dense = 15 pts/decade plus boundary points");
  verify->add_option("--suite", suite,
                     "theorem1 | theorem2 | strong | noise-limited | appendix | oracle | "
                     "soundness | gdof | all");
  verify->add_option("--grid", grid, "default | dense");
  verify->add_option("--gdof-power", gdof_power, "P used for the GDOF sandwich (default 1e9)");

  double beta = 0.0, alpha_min = 0.0, alpha_max = 0.0, step = 0.0;
  std::optional<double> numeric_power;
  auto* gdof = app.add_subcommand("gdof", "GDOF table d(alpha, beta) as CSV");
  gdof->add_option("--beta", beta, "Cooperation exponent beta = C12 / C(P)")->required();
  gdof->add_option("--alpha-min", alpha_min)->required();
  gdof->add_option("--alpha-max", alpha_max)->required();
  gdof->add_option("--step", step)->required();
  gdof->add_option("--numeric-p", numeric_power, "Also evaluate the rate sandwich at this P");

  std::vector<const char*> argv{"icup"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*rate) return cmd_rate(p, a, c12, scheme, json, out);
    if (*sweep) {
      SweepSpec spec;
      spec.p_range = parse_range(p_range);
      spec.a_range = parse_range(a_range);
      spec.c12_range = parse_range(c12_range);
      spec.scheme = parse_scheme(scheme);
      if (format == "json") {
        spec.format = OutputFormat::Json;
      } else if (format != "csv") {
        throw UsageError("--format must be csv or json");
      }
      return cmd_sweep(spec, out_path, out);
    }
    if (*verify) return cmd_verify(suite, grid, gdof_power, out);
    if (*gdof) return cmd_gdof(beta, alpha_min, alpha_max, step, numeric_power, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}

}  // namespace icup::cli
