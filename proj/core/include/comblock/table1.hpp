#pragma once

// Replay of the twenty bench-test key combinations against the model and a
// cell-by-cell comparison with the recorded multimeter readings.

#include "comblock/analog.hpp"
#include "comblock/sim.hpp"

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

namespace comblock {

inline constexpr std::size_t kTable1Latches = 4;
using LatchLevels = std::array<bool, kTable1Latches>;

struct PublishedRow {
    int number;  // 1-based test number
    std::vector<KeyId> sequence;
    LatchLevels q;
    OutputState outputs;
};

/// The twenty recorded bench tests, in order.
std::span<const PublishedRow> published_table1();

struct Table1Row {
    const PublishedRow* published = nullptr;
    LatchLevels simulated_q{};
    OutputState simulated_outputs;
    LatchLevels q_match{};
    bool solenoid_match = false;
    bool green_match = false;
    bool red_match = false;

    bool q_row_match() const noexcept;
    bool indicators_match() const noexcept { return green_match && red_match; }
};

struct Table1Report {
    std::vector<Table1Row> rows;
    std::size_t solenoid_matches = 0;
    std::size_t indicator_matches = 0;
    std::size_t q_row_matches = 0;

    /// Solenoid and both indicator columns agree on every row.
    bool outputs_reproduced() const noexcept;

    /// Rows whose Q columns differ from the recorded values.
    std::vector<const Table1Row*> discrepancies() const;
};

/// Replays every row with 1 ms between presses (well inside the hold
/// window). The config must have a four-key code.
Table1Report reproduce_table1(const LockConfig& cfg);

/// Human-readable report; HIGH/LOW cells are annotated with the given levels.
void write_table1_text(std::ostream& os, const Table1Report& report, Volts v_high, Volts v_low);

void write_table1_csv(std::ostream& os, const Table1Report& report);

}  // namespace comblock
