#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icup/gap_analysis.hpp"
#include "icup/gdof.hpp"
#include "icup/strong_scheme.hpp"

namespace icup::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kPrecondition = 3,
  kIo = 4,
};

enum class Scale { Linear, Log };

struct AxisRange {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 1;
  Scale scale = Scale::Linear;

  std::vector<double> values() const;
};

/// "MIN:MAX:COUNT[:linear|log]" or a single number. Throws UsageError.
AxisRange parse_range(std::string_view text);

enum class OutputFormat { Csv, Json };

struct SweepSpec {
  AxisRange p_range;
  AxisRange a_range;
  AxisRange c12_range;
  std::optional<SchemeLabel> scheme;  ///< empty = auto
  OutputFormat format = OutputFormat::Csv;
};

/// "auto", "tin", "universal", "full-coop", "optimal-gamma", "strong".
std::optional<SchemeLabel> parse_scheme(std::string_view text);

/// 12 significant digits, printf %g style; negative zero prints as 0.
std::string format_number(double value);

/// CSV header and rows for a sweep, P outer, a middle, C12 inner.
void write_sweep(const SweepSpec& spec, std::ostream& out);

/// alpha,beta,d_formula[,d_numeric_ach,d_numeric_ub]; numeric columns appear
/// when the first point carries a sandwich.
void write_gdof_table(const std::vector<GdofPoint>& curve, std::ostream& out);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icup::cli
