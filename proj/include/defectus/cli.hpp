#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "defectus/backend.hpp"

namespace defectus {

/// Everything one command invocation needs. run_cli fills this from flags;
/// tests may construct it directly and call the cmd_* entry points.
struct RunConfig {
    Backend backend = Backend::int_local(5);
    bool backend_explicit = false;
    std::optional<std::string> input_path;
    std::optional<int> m, n;
    std::optional<std::vector<long>> exponents;
    long count = 1;
    uint64_t seed = 1;
    std::string format = "json"; // json | csv | table
    bool transforms = false;     // normalize: include the unimodular factors
    bool quick = false;          // verify: reduced grid
    std::vector<Backend> suite_backends; // verify: backends to sweep
};

/// Exit codes shared by every command:
///   0 success, 1 input/usage error, 2 a mathematical check failed.
int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_normalize(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (program name excluded) and dispatches to one
/// of the commands above. The DEFECTUS_SEED environment variable, when set,
/// replaces the built-in default seed of 1; an explicit --seed wins over both.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace defectus
