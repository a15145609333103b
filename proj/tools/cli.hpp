#ifndef POWERSUMS_TOOLS_CLI_HPP
#define POWERSUMS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "powersums/pipeline.hpp"

namespace powersums::cli {

/// Process exit codes. These are part of the tool's interface.
enum ExitCode : int {
  kSuccess = 0,
  kConfigError = 2,
  kCurveError = 3,
  kNoSolutions = 4,
  kVerificationFailed = 5,
};

enum class OutputFormat { Human, Records };

/// The on-disk configuration: a JSON object mirroring PipelineConfig.
///
///   {
///     "method": "direct",
///     "equation": {"a": "1", "b": "1", "quintic_coeffs": ["1"], "cubic_coeffs": ["1"]},
///     "parametrization": {"x1": "1", "alphas": ["2"], "betas": ["2"]},
///     "search_height": 100,
///     "family_size": 10,
///     "seed_points": [{"frame": "completed", "x": "-44/3", "y": "20/3"}],
///     "format": "human"
///   }
///
/// With "method": "paired" the equation holds "quintic_pair_coeffs" and
/// "cubic_pair_coeffs" and the parametrization "xs" and "ys". Rationals are
/// "p" or "p/q" strings (plain JSON integers are accepted too).
struct ConfigDocument {
  PipelineConfig pipeline;
  OutputFormat format = OutputFormat::Human;

  friend bool operator==(const ConfigDocument&, const ConfigDocument&) = default;
};

/// Throws Error(Parse) or Error(InvalidArgument).
ConfigDocument parse_config(std::string_view json_text);
std::string serialize_config(const ConfigDocument& doc);

int cmd_derive(const ConfigDocument& doc, std::ostream& out, std::ostream& err);
int cmd_solve(const ConfigDocument& doc, std::ostream& out, std::ostream& err);
/// Reads solution records or plain identities, one per line.
int cmd_verify(std::istream& in, std::ostream& out, std::ostream& err);

/// Entry point behind main(); argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace powersums::cli

#endif  // POWERSUMS_TOOLS_CLI_HPP
