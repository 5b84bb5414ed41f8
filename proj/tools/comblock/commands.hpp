#pragma once

// Subcommands of the `comblock` tool. Each returns the process exit code:
//   0  success
//   1  validation error (bad config, bad parameter, range error, table mismatch)
//   2  unreadable input (scenario syntax, missing file, command-line usage)

#include "comblock/comblock.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace comblock::cli {

enum class Format { Text, Csv };

/// Fully resolved, validated settings shared by all subcommands.
struct CliConfig {
    LockConfig lock;
    SimOptions sim;
    CircuitParams circuit;
    Amperes load{0.5};
    std::optional<Format> format;
    std::optional<std::filesystem::path> out;
    std::set<std::string> overridden;  // circuit parameter names set on the command line
};

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    bool prompt = false;  // print "> " before each REPL line
};

int cmd_simulate(const std::filesystem::path& scenario, std::optional<Millis> t_end, const CliConfig& cfg,
                 Streams io);
int cmd_table1(const CliConfig& cfg, Streams io);
int cmd_analyze(int l_min, int l_max, const CliConfig& cfg, Streams io);
int cmd_circuit(const CliConfig& cfg, Streams io);
int cmd_repl(const CliConfig& cfg, Streams io);

/// Parses argv (argv[0] is the program name) and dispatches.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace comblock::cli
