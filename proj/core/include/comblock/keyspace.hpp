#pragma once

// =============================================================================
// Keyspace audit
// =============================================================================
// Counts, for each sequence length L, how many of the 10^L key sequences an
// intruder could type would energize the relay at some point. The nominal
// "n choose k" figure is reported next to it for comparison.
// =============================================================================

#include "comblock/lock.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace comblock {

inline constexpr int kMinAuditLength = 1;
inline constexpr int kMaxAuditLength = 8;

/// Exact non-negative ratio. Kept unreduced so it reads as "hits/total".
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    Ratio reduced() const;
    double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct KeyspaceStats {
    int length = 0;
    std::uint64_t total_sequences = 0;
    std::uint64_t unlocking = 0;
    Ratio probability;
    std::uint64_t nominal_claim = 0;  // C(10, code length)
};

/// n! / (k! (n-k)!). Throws KOutOfRange unless 0 <= k <= n, Overflow if the
/// result does not fit in 64 bits.
std::uint64_t nominal_combinations(std::int64_t n, std::int64_t k);

/// Same as run_sequence(cfg, seq).unlocked.
bool is_unlocking(const LockConfig& cfg, std::span<const KeyId> seq) noexcept;

struct EnumerationOptions {
    unsigned workers = 0;  // 0 = std::thread::hardware_concurrency()
};

/// Exhaustive count over all 10^length sequences. 1 <= length <= 8, else
/// LengthOutOfRange. The result does not depend on the worker count.
KeyspaceStats count_unlocking(const LockConfig& cfg, int length, EnumerationOptions options = {});

/// Unlocking sequences of `length` keys that start with `prefix`.
std::uint64_t count_unlocking_with_prefix(const LockConfig& cfg, int length, std::span<const KeyId> prefix);

std::vector<KeyspaceStats> analyze_range(const LockConfig& cfg, int l_min, int l_max,
                                         EnumerationOptions options = {});

/// `length,total,unlocking,probability,nominal_claim`
void write_keyspace_csv(std::ostream& os, std::span<const KeyspaceStats> stats);

void write_keyspace_text(std::ostream& os, std::span<const KeyspaceStats> stats, const LockConfig& cfg);

}  // namespace comblock
