#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bitscatter {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::string_view kEnvPrefix = "BITSCATTER_";

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Reads the process environment.
EnvLookup process_env();

/// Entry point behind the `bitscatter` executable. `args` excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const EnvLookup& env = process_env());

/// "1..10", "100..10000:100" or "1,2,5". Throws std::invalid_argument.
std::vector<long long> parse_int_list(std::string_view text);

/// key=value lines; blank lines and '#' comments ignored. Throws std::runtime_error.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

}  // namespace bitscatter
