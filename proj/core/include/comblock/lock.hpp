#pragma once

// =============================================================================
// Latch-cascade combination lock: time-free automaton
// =============================================================================
// Each code key drives the set input of one RS latch. Latch i can only be set
// while latch i-1 is already set, reset keys clear the whole bank and dummy
// keys are not wired to anything. The state of the bank is therefore always
// a prefix of set latches.
// =============================================================================

#include "comblock/error.hpp"

#include <chrono>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace comblock {

inline constexpr int kKeypadSize = 10;
inline constexpr std::size_t kMaxCodeLength = kKeypadSize;

/// A key on the ten-switch keypad, identified by its legend digit 0..9.
class KeyId {
public:
    constexpr explicit KeyId(int label) : label_(checked(label)) {}

    static constexpr std::optional<KeyId> try_make(int label) noexcept {
        if (label < 0 || label >= kKeypadSize) return std::nullopt;
        return KeyId(label);
    }

    constexpr int label() const noexcept { return label_; }

    friend constexpr auto operator<=>(KeyId, KeyId) noexcept = default;

private:
    static constexpr std::uint8_t checked(int label) {
        if (label < 0 || label >= kKeypadSize)
            throw Error(ErrorCode::KeyOutOfRange,
                        "key " + std::to_string(label) + " is not on the 0..9 keypad");
        return static_cast<std::uint8_t>(label);
    }

    std::uint8_t label_;
};

/// Set of keypad keys, stored as a 10-bit mask.
class KeySet {
public:
    constexpr KeySet() noexcept = default;
    KeySet(std::initializer_list<int> labels) {
        for (int l : labels) insert(KeyId(l));
    }
    explicit KeySet(std::span<const KeyId> keys) noexcept {
        for (KeyId k : keys) insert(k);
    }

    constexpr void insert(KeyId k) noexcept {
        mask_ = static_cast<std::uint16_t>(mask_ | (1u << k.label()));
    }
    constexpr bool contains(KeyId k) const noexcept { return (mask_ >> k.label()) & 1u; }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    constexpr bool intersects(KeySet other) const noexcept { return (mask_ & other.mask_) != 0; }
    constexpr std::uint16_t mask() const noexcept { return mask_; }
    std::size_t size() const noexcept;
    std::vector<KeyId> keys() const;

    friend constexpr bool operator==(KeySet, KeySet) noexcept = default;

private:
    std::uint16_t mask_ = 0;
};

/// The lock's identity: which keys form the code, which reset, which are decoys.
struct LockConfig {
    std::vector<KeyId> code{KeyId{9}, KeyId{5}, KeyId{0}, KeyId{2}};
    KeySet reset_keys{3, 4, 7, 8};
    KeySet dummy_keys{1, 6};
    std::chrono::milliseconds hold_time{4700};

    std::size_t code_length() const noexcept { return code.size(); }

    friend bool operator==(const LockConfig&, const LockConfig&) = default;
};

/// Returns `cfg` unchanged when every invariant holds, otherwise throws
/// Error with EmptyCode, DuplicateCodeKey, OverlappingRoles or
/// InvalidHoldTime.
const LockConfig& validate_config(const LockConfig& cfg);

/// Q outputs of the latch bank; q[i] is HIGH when latch i is set.
class LatchVector {
public:
    /// All latches clear. `size` must be in 1..10.
    explicit LatchVector(std::size_t size);
    LatchVector(std::initializer_list<bool> q);

    std::size_t size() const noexcept { return size_; }
    bool operator[](std::size_t i) const noexcept { return (bits_ >> i) & 1u; }

    void set(std::size_t i) noexcept { bits_ = static_cast<std::uint16_t>(bits_ | (1u << i)); }
    void clear_all() noexcept { bits_ = 0; }

    bool any() const noexcept { return bits_ != 0; }
    bool last() const noexcept { return (*this)[size_ - 1]; }
    std::size_t count() const noexcept;

    /// True when the set latches form a prefix q[0..k).
    bool is_prefix() const noexcept;

    std::uint16_t bits() const noexcept { return bits_; }

    friend bool operator==(const LatchVector&, const LatchVector&) noexcept = default;

private:
    std::uint16_t bits_ = 0;
    std::uint8_t size_ = 0;
};

struct CodePosition {
    std::size_t index;
    friend bool operator==(const CodePosition&, const CodePosition&) = default;
};
struct ResetKey {
    friend bool operator==(const ResetKey&, const ResetKey&) = default;
};
struct DummyKey {
    friend bool operator==(const DummyKey&, const DummyKey&) = default;
};
using KeyRole = std::variant<CodePosition, ResetKey, DummyKey>;

/// Keys that are neither in the code nor reset keys classify as DummyKey.
KeyRole classify_key(const LockConfig& cfg, KeyId key) noexcept;

enum class EffectKind { Advanced, ResetAll, NoOp, UnlockEdge };

struct PressEffect {
    EffectKind kind = EffectKind::NoOp;
    std::size_t index = 0;  // latch index for Advanced / UnlockEdge

    friend bool operator==(const PressEffect&, const PressEffect&) = default;
};

struct PressOutcome {
    LatchVector new_state;
    PressEffect effect;
};

/// Single key press. Precondition: `state` has the code's length and is a prefix.
PressOutcome press_key(const LockConfig& cfg, const LatchVector& state, KeyId key) noexcept;

struct SequenceResult {
    LatchVector final_state;
    bool unlocked = false;  // the last latch rose at some press
};

/// Folds press_key over `keys` starting from all latches clear.
SequenceResult run_sequence(const LockConfig& cfg, std::span<const KeyId> keys) noexcept;

/// Parses "9,5,0,2" (whitespace tolerated) into keys.
std::vector<KeyId> parse_key_list(std::string_view text);

std::vector<KeyId> to_keys(std::initializer_list<int> labels);

std::string format_key_list(std::span<const KeyId> keys);
std::string_view to_string(EffectKind kind) noexcept;
std::string to_string(const KeyRole& role);

}  // namespace comblock
