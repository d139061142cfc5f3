#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twistcolor/coloring.hpp"
#include "twistcolor/io.hpp"

namespace twistcolor {

enum class OutputFormat { json, text };

struct RunConfig {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t brute_force_cap = kDefaultBruteForceCap;
  std::size_t automorphism_cap = kDefaultAutomorphismCap;
  bool verify = true;
  OutputFormat format = OutputFormat::json;
  std::uint64_t seed = 1;
};

/// Keys: node_budget, brute_force_cap, automorphism_cap, verify, format,
/// seed. Unknown keys and non-positive caps throw parse.
void apply_config_json(RunConfig& cfg, const Json& j);

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;
/// Reads TWISTCOLOR_NODE_BUDGET, TWISTCOLOR_BRUTE_FORCE_CAP,
/// TWISTCOLOR_AUTOMORPHISM_CAP, TWISTCOLOR_VERIFY, TWISTCOLOR_FORMAT and
/// TWISTCOLOR_SEED.
void apply_env(RunConfig& cfg, const EnvLookup& env);
EnvLookup process_env();

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int usage = 2;
inline constexpr int resource = 3;
}  // namespace exit_code

int exit_code_for(ErrorKind kind) noexcept;

/// Runs one command line (args exclude the program name). Settings are
/// layered: defaults, --config file, environment, explicit flags.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
            const EnvLookup& env = process_env());

}  // namespace twistcolor
