#pragma once

// Command-line surface: mechanism specs, the subcommands behind the
// `skewlab` tool and its exit-code contract.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewlab/mechanisms.hpp"

namespace skewlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// A family name plus its named parameters, e.g. marshall-olkin {gamma: 2}.
struct MechanismSpec {
  std::string family;
  std::map<std::string, double> params;
};

/// Families and the parameter names each one takes, in display order.
const std::map<std::string, std::vector<std::string>>& known_families();

/// Parses "name=value" into the spec; throws ParameterError on bad syntax.
void add_param(MechanismSpec& spec, const std::string& assignment);

/// Builds the mechanism; unknown families, missing or extra parameters and
/// out-of-range values raise ParameterError.
MechanismPtr make_mechanism(const MechanismSpec& spec, const Tolerance& tol = {});

/// Default tolerance with abs_tol taken from SKEWLAB_TOL when it is set.
Tolerance tolerance_from_env();

/// "lo:hi:n" with n >= 2, evenly spaced and inclusive of both ends.
std::vector<double> parse_grid(const std::string& text);
/// Comma-separated reals.
std::vector<double> parse_list(const std::string& text);

/// Runs one invocation. `args` excludes the program name. Returns the exit
/// code; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewlab::cli
