#pragma once

#include "comblock/sim.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace comblock {

/// Malformed scenario text. `line()` is 1-based.
class ScenarioParseError : public std::runtime_error {
public:
    ScenarioParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Scenario format: one `<t_ms> <key-digit>` per line, `#` starts a comment,
/// blank lines are ignored. Ordering is not checked here; run_scenario does.
std::vector<KeyEvent> parse_scenario(std::istream& in);

/// Throws std::runtime_error if the file cannot be opened.
std::vector<KeyEvent> load_scenario(const std::filesystem::path& path);

}  // namespace comblock
