#include "comblock/lock.hpp"

#include <bit>
#include <charconv>

namespace comblock {

std::size_t KeySet::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<KeyId> KeySet::keys() const {
    std::vector<KeyId> out;
    for (int l = 0; l < kKeypadSize; ++l)
        if ((mask_ >> l) & 1u) out.emplace_back(l);
    return out;
}

const LockConfig& validate_config(const LockConfig& cfg) {
    if (cfg.code.empty()) throw Error(ErrorCode::EmptyCode, "the code needs at least one key");

    KeySet code_keys;
    for (KeyId k : cfg.code) {
        if (code_keys.contains(k))
            throw Error(ErrorCode::DuplicateCodeKey,
                        "key " + std::to_string(k.label()) + " appears twice in the code");
        code_keys.insert(k);
    }
    if (code_keys.intersects(cfg.reset_keys))
        throw Error(ErrorCode::OverlappingRoles, "a code key is also a reset key");
    if (code_keys.intersects(cfg.dummy_keys))
        throw Error(ErrorCode::OverlappingRoles, "a code key is also a dummy key");
    if (cfg.reset_keys.intersects(cfg.dummy_keys))
        throw Error(ErrorCode::OverlappingRoles, "a reset key is also a dummy key");
    if (cfg.hold_time.count() <= 0)
        throw Error(ErrorCode::InvalidHoldTime, "hold time must be positive");
    return cfg;
}

LatchVector::LatchVector(std::size_t size) : size_(static_cast<std::uint8_t>(size)) {
    if (size == 0 || size > kMaxCodeLength)
        throw Error(ErrorCode::InvalidArgument, "latch bank size must be in 1..10");
}

LatchVector::LatchVector(std::initializer_list<bool> q) : LatchVector(q.size()) {
    std::size_t i = 0;
    for (bool b : q) {
        if (b) set(i);
        ++i;
    }
}

std::size_t LatchVector::count() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
}

bool LatchVector::is_prefix() const noexcept {
    // a prefix mask has the form 0b0..01..1
    return (bits_ & (bits_ + 1u)) == 0;
}

KeyRole classify_key(const LockConfig& cfg, KeyId key) noexcept {
    for (std::size_t i = 0; i < cfg.code.size(); ++i)
        if (cfg.code[i] == key) return CodePosition{i};
    if (cfg.reset_keys.contains(key)) return ResetKey{};
    return DummyKey{};
}

PressOutcome press_key(const LockConfig& cfg, const LatchVector& state, KeyId key) noexcept {
    PressOutcome out{state, {}};
    const KeyRole role = classify_key(cfg, key);

    if (std::holds_alternative<ResetKey>(role)) {
        out.new_state.clear_all();
        out.effect = {EffectKind::ResetAll, 0};
        return out;
    }
    if (const auto* pos = std::get_if<CodePosition>(&role)) {
        const std::size_t i = pos->index;
        const bool enabled = (i == 0) || state[i - 1];
        if (enabled && !state[i]) {
            out.new_state.set(i);
            const bool unlock = (i + 1 == state.size());
            out.effect = {unlock ? EffectKind::UnlockEdge : EffectKind::Advanced, i};
        }
    }
    return out;
}

SequenceResult run_sequence(const LockConfig& cfg, std::span<const KeyId> keys) noexcept {
    SequenceResult r{LatchVector(cfg.code_length()), false};
    for (KeyId k : keys) {
        auto step = press_key(cfg, r.final_state, k);
        r.final_state = step.new_state;
        if (step.effect.kind == EffectKind::UnlockEdge) r.unlocked = true;
    }
    return r;
}

std::vector<KeyId> parse_key_list(std::string_view text) {
    std::vector<KeyId> keys;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    if (trim(text).empty()) return keys;

    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string_view token =
            trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw Error(ErrorCode::InvalidArgument, "'" + std::string(token) + "' is not a key digit");
        keys.emplace_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return keys;
}

std::vector<KeyId> to_keys(std::initializer_list<int> labels) {
    std::vector<KeyId> keys;
    keys.reserve(labels.size());
    for (int l : labels) keys.emplace_back(l);
    return keys;
}

std::string format_key_list(std::span<const KeyId> keys) {
    std::string s;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i) s += ',';
        s += static_cast<char>('0' + keys[i].label());
    }
    return s;
}

std::string_view to_string(EffectKind kind) noexcept {
    switch (kind) {
        case EffectKind::Advanced: return "Advanced";
        case EffectKind::ResetAll: return "ResetAll";
        case EffectKind::NoOp: return "NoOp";
        case EffectKind::UnlockEdge: return "UnlockEdge";
    }
    return "?";
}

std::string to_string(const KeyRole& role) {
    if (const auto* pos = std::get_if<CodePosition>(&role))
        return "CodePosition(" + std::to_string(pos->index) + ")";
    if (std::holds_alternative<ResetKey>(role)) return "ResetKey";
    return "DummyKey";
}

}  // namespace comblock
