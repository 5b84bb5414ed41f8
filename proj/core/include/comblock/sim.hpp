#pragma once

// =============================================================================
// Timed simulation of the lock
// =============================================================================
// Key presses arrive at integer-millisecond timestamps. When the last latch
// rises the relay energizes and the RC hold window starts; at the end of the
// window every latch is cleared and the relay drops out again.
// =============================================================================

#include "comblock/lock.hpp"

#include <chrono>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace comblock {

using Millis = std::chrono::milliseconds;

struct KeyEvent {
    Millis t{0};
    KeyId key{0};

    friend bool operator==(const KeyEvent&, const KeyEvent&) = default;
};

enum class Solenoid { Open, Close };
enum class Indicator { On, Off };

struct OutputState {
    Solenoid solenoid = Solenoid::Close;
    Indicator green = Indicator::Off;
    Indicator red = Indicator::On;

    friend bool operator==(const OutputState&, const OutputState&) = default;
};

/// Double-pole relay: solenoid released and green lit iff the last latch is set.
OutputState outputs_of(const LatchVector& state) noexcept;

enum class StimulusKind { Start, Press, HoldExpired };

struct Stimulus {
    StimulusKind kind = StimulusKind::Start;
    std::optional<KeyId> key;  // set for Press only

    friend bool operator==(const Stimulus&, const Stimulus&) = default;
};

struct TraceRecord {
    Millis t{0};
    Stimulus stimulus;
    LatchVector latches;
    OutputState outputs;
    PressEffect effect;  // NoOp for Start; ResetAll for HoldExpired
};

struct SimTrace {
    std::vector<TraceRecord> records;

    const TraceRecord& back() const { return records.back(); }
    std::size_t count(StimulusKind kind) const noexcept;
};

/// When the hold window is armed.
enum class TimerMode {
    OnUnlock,      // at the rising edge of the last latch
    OnFirstPress,  // at the first press while no window is pending
};

struct SimOptions {
    TimerMode timer_mode = TimerMode::OnUnlock;
};

/// Event-driven lock with a virtual clock. Time only moves forward; every
/// stimulus and every hold expiry is appended to the trace.
class LockSession {
public:
    explicit LockSession(LockConfig cfg, SimOptions options = {});

    Millis now() const noexcept { return now_; }
    const LatchVector& latches() const noexcept { return latches_; }
    OutputState outputs() const noexcept { return outputs_of(latches_); }
    std::optional<Millis> pending_expiry() const noexcept { return expiry_; }
    const SimTrace& trace() const noexcept { return trace_; }
    const LockConfig& config() const noexcept { return cfg_; }

    /// Processes expiries strictly before `t`, moves the clock to `t`, then
    /// presses. Expiries scheduled exactly at `t` fire after the press.
    const TraceRecord& press(Millis t, KeyId key);

    /// Press at the current clock.
    const TraceRecord& press(KeyId key) { return press(now_, key); }

    /// Advances the clock to `t`, firing every expiry at or before `t`.
    void advance_to(Millis t);

    void wait(Millis dt) { advance_to(now_ + dt); }

private:
    void fire_expiries_before(Millis t, bool inclusive);
    void record(Stimulus s, PressEffect effect);

    LockConfig cfg_;
    SimOptions options_;
    LatchVector latches_;
    Millis now_{0};
    std::optional<Millis> expiry_;
    SimTrace trace_;
};

/// Runs a whole scenario. Events must be sorted by time (ties keep their
/// order), non-negative, and not later than `t_end`.
/// Throws Error with UnsortedEvents, NegativeTime or EndBeforeLastEvent.
SimTrace run_scenario(const LockConfig& cfg, std::span<const KeyEvent> events, Millis t_end,
                      SimOptions options = {});

std::string_view to_string(Solenoid s) noexcept;
std::string_view to_string(Indicator i) noexcept;
std::string to_string(const Stimulus& s);
std::string_view level_label(bool high) noexcept;

/// CSV trace: `t_ms,stimulus,q0,...,q{N-1},solenoid,green,red`.
void write_trace_csv(std::ostream& os, const SimTrace& trace);

/// Fixed-width text rendering of the same columns.
void write_trace_text(std::ostream& os, const SimTrace& trace);

}  // namespace comblock
