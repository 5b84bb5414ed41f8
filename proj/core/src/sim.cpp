#include "comblock/sim.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace comblock {

OutputState outputs_of(const LatchVector& state) noexcept {
    if (state.last()) return {Solenoid::Open, Indicator::On, Indicator::Off};
    return {Solenoid::Close, Indicator::Off, Indicator::On};
}

std::size_t SimTrace::count(StimulusKind kind) const noexcept {
    return static_cast<std::size_t>(std::count_if(
        records.begin(), records.end(), [kind](const TraceRecord& r) { return r.stimulus.kind == kind; }));
}

LockSession::LockSession(LockConfig cfg, SimOptions options)
    : cfg_(std::move(cfg)), options_(options), latches_(validate_config(cfg_).code_length()) {
    record({StimulusKind::Start, std::nullopt}, {});
}

void LockSession::record(Stimulus s, PressEffect effect) {
    trace_.records.push_back({now_, std::move(s), latches_, outputs_of(latches_), effect});
}

void LockSession::fire_expiries_before(Millis t, bool inclusive) {
    // at most one window is ever pending
    if (!expiry_) return;
    if (*expiry_ < t || (inclusive && *expiry_ == t)) {
        now_ = *expiry_;
        expiry_.reset();
        latches_.clear_all();
        record({StimulusKind::HoldExpired, std::nullopt}, {EffectKind::ResetAll, 0});
    }
}

const TraceRecord& LockSession::press(Millis t, KeyId key) {
    if (t.count() < 0) throw Error(ErrorCode::NegativeTime, "event at " + std::to_string(t.count()) + " ms");
    if (t < now_)
        throw Error(ErrorCode::UnsortedEvents, "event at " + std::to_string(t.count()) +
                                                   " ms precedes the clock at " +
                                                   std::to_string(now_.count()) + " ms");
    fire_expiries_before(t, false);
    now_ = t;

    const auto outcome = press_key(cfg_, latches_, key);
    latches_ = outcome.new_state;

    switch (options_.timer_mode) {
        case TimerMode::OnUnlock:
            if (outcome.effect.kind == EffectKind::UnlockEdge) expiry_ = t + cfg_.hold_time;
            else if (outcome.effect.kind == EffectKind::ResetAll) expiry_.reset();
            break;
        case TimerMode::OnFirstPress:
            if (outcome.effect.kind == EffectKind::ResetAll) expiry_.reset();
            else if (!expiry_) expiry_ = t + cfg_.hold_time;
            break;
    }

    record({StimulusKind::Press, key}, outcome.effect);
    return trace_.records.back();
}

void LockSession::advance_to(Millis t) {
    if (t < now_)
        throw Error(ErrorCode::UnsortedEvents, "cannot move the clock backwards to " +
                                                   std::to_string(t.count()) + " ms");
    fire_expiries_before(t, true);
    now_ = t;
}

SimTrace run_scenario(const LockConfig& cfg, std::span<const KeyEvent> events, Millis t_end,
                      SimOptions options) {
    validate_config(cfg);
    Millis prev{0};
    for (std::size_t i = 0; i < events.size(); ++i) {
        const Millis t = events[i].t;
        if (t.count() < 0)
            throw Error(ErrorCode::NegativeTime,
                        "event " + std::to_string(i) + " at " + std::to_string(t.count()) + " ms");
        if (t < prev)
            throw Error(ErrorCode::UnsortedEvents, "event " + std::to_string(i) + " at " +
                                                       std::to_string(t.count()) + " ms comes after " +
                                                       std::to_string(prev.count()) + " ms");
        prev = t;
    }
    if (t_end < prev)
        throw Error(ErrorCode::EndBeforeLastEvent,
                    "end time " + std::to_string(t_end.count()) + " ms is before the last event");
    if (t_end.count() < 0) throw Error(ErrorCode::NegativeTime, "negative end time");

    LockSession session(cfg, options);
    for (const auto& ev : events) session.press(ev.t, ev.key);
    session.advance_to(t_end);
    return session.trace();
}

std::string_view to_string(Solenoid s) noexcept { return s == Solenoid::Open ? "OPEN" : "CLOSE"; }
std::string_view to_string(Indicator i) noexcept { return i == Indicator::On ? "ON" : "OFF"; }
std::string_view level_label(bool high) noexcept { return high ? "HIGH" : "LOW"; }

std::string to_string(const Stimulus& s) {
    switch (s.kind) {
        case StimulusKind::Start: return "Start";
        case StimulusKind::HoldExpired: return "HoldExpired";
        case StimulusKind::Press: return "Press(" + std::to_string(s.key ? s.key->label() : -1) + ")";
    }
    return "?";
}

void write_trace_csv(std::ostream& os, const SimTrace& trace) {
    const std::size_t n = trace.records.empty() ? 0 : trace.records.front().latches.size();
    os << "t_ms,stimulus";
    for (std::size_t i = 0; i < n; ++i) os << ",q" << i;
    os << ",solenoid,green,red\n";
    for (const auto& r : trace.records) {
        os << r.t.count() << ',' << to_string(r.stimulus);
        for (std::size_t i = 0; i < n; ++i) os << ',' << level_label(r.latches[i]);
        os << ',' << to_string(r.outputs.solenoid) << ',' << to_string(r.outputs.green) << ','
           << to_string(r.outputs.red) << '\n';
    }
}

void write_trace_text(std::ostream& os, const SimTrace& trace) {
    const std::size_t n = trace.records.empty() ? 0 : trace.records.front().latches.size();
    os << std::left << std::setw(9) << "t_ms" << std::setw(13) << "stimulus";
    for (std::size_t i = 0; i < n; ++i) os << std::setw(6) << ("Q" + std::to_string(i));
    os << std::setw(10) << "solenoid" << std::setw(7) << "green" << "red\n";
    for (const auto& r : trace.records) {
        os << std::setw(9) << r.t.count() << std::setw(13) << to_string(r.stimulus);
        for (std::size_t i = 0; i < n; ++i) os << std::setw(6) << level_label(r.latches[i]);
        os << std::setw(10) << to_string(r.outputs.solenoid) << std::setw(7) << to_string(r.outputs.green)
           << to_string(r.outputs.red) << '\n';
    }
}

}  // namespace comblock
