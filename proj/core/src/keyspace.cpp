#include "comblock/keyspace.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <thread>

namespace comblock {

namespace {

constexpr std::array<std::uint64_t, kMaxAuditLength + 1> kPow10 = [] {
    std::array<std::uint64_t, kMaxAuditLength + 1> p{};
    p[0] = 1;
    for (std::size_t i = 1; i < p.size(); ++i) p[i] = p[i - 1] * 10;
    return p;
}();

void check_length(int length) {
    if (length < kMinAuditLength || length > kMaxAuditLength)
        throw Error(ErrorCode::LengthOutOfRange, "length out of range: " + std::to_string(length) +
                                                     " (allowed " + std::to_string(kMinAuditLength) + ".." +
                                                     std::to_string(kMaxAuditLength) + ")");
}

// Depth-first walk of the sequence tree below `state`. Once the relay has
// energized every completion counts, so that whole subtree is added at once.
std::uint64_t count_below(const LockConfig& cfg, const LatchVector& state, int remaining) {
    if (remaining == 0) return 0;
    std::uint64_t hits = 0;
    for (int k = 0; k < kKeypadSize; ++k) {
        const auto step = press_key(cfg, state, KeyId(k));
        if (step.effect.kind == EffectKind::UnlockEdge)
            hits += kPow10[static_cast<std::size_t>(remaining - 1)];
        else
            hits += count_below(cfg, step.new_state, remaining - 1);
    }
    return hits;
}

// Prefix number `index` (base-10 digits, most significant first) of width `width`.
std::vector<KeyId> prefix_from_index(std::uint64_t index, int width) {
    std::vector<KeyId> keys(static_cast<std::size_t>(width), KeyId(0));
    for (int i = width - 1; i >= 0; --i) {
        keys[static_cast<std::size_t>(i)] = KeyId(static_cast<int>(index % 10));
        index /= 10;
    }
    return keys;
}

}  // namespace

Ratio Ratio::reduced() const {
    if (num == 0) return {0, 1};
    const std::uint64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

std::uint64_t nominal_combinations(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n)
        throw Error(ErrorCode::KOutOfRange, "need 0 <= k <= n, got n=" + std::to_string(n) +
                                                " k=" + std::to_string(k));
    const auto kk = static_cast<std::uint64_t>(std::min(k, n - k));
    const auto nn = static_cast<std::uint64_t>(n);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= kk; ++i) {
        // result * (nn - kk + i) / i stays integral; cancel first to delay overflow
        std::uint64_t factor = nn - kk + i;
        std::uint64_t divisor = i;
        const std::uint64_t g1 = std::gcd(result, divisor);
        result /= g1;
        divisor /= g1;
        const std::uint64_t g2 = std::gcd(factor, divisor);
        factor /= g2;
        divisor /= g2;
        if (__builtin_mul_overflow(result, factor, &result))
            throw Error(ErrorCode::Overflow, "C(" + std::to_string(n) + "," + std::to_string(k) +
                                                 ") does not fit in 64 bits");
        result /= divisor;  // divisor is 1 here
    }
    return result;
}

bool is_unlocking(const LockConfig& cfg, std::span<const KeyId> seq) noexcept {
    return run_sequence(cfg, seq).unlocked;
}

std::uint64_t count_unlocking_with_prefix(const LockConfig& cfg, int length, std::span<const KeyId> prefix) {
    check_length(length);
    validate_config(cfg);
    if (prefix.size() > static_cast<std::size_t>(length))
        throw Error(ErrorCode::InvalidArgument, "prefix is longer than the sequence length");

    LatchVector state(cfg.code_length());
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        const auto step = press_key(cfg, state, prefix[i]);
        if (step.effect.kind == EffectKind::UnlockEdge)
            return kPow10[static_cast<std::size_t>(length) - i - 1];
        state = step.new_state;
    }
    return count_below(cfg, state, length - static_cast<int>(prefix.size()));
}

KeyspaceStats count_unlocking(const LockConfig& cfg, int length, EnumerationOptions options) {
    check_length(length);
    validate_config(cfg);

    // one task per two-key prefix (or per key at length 1); partial counts are
    // written to fixed slots and summed in slot order
    const int width = std::min(length, 2);
    const std::size_t tasks = static_cast<std::size_t>(kPow10[static_cast<std::size_t>(width)]);
    std::vector<std::uint64_t> partial(tasks, 0);

    unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
    workers = std::clamp(workers, 1u, static_cast<unsigned>(tasks));

    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t t = next++; t < tasks; t = next++)
            partial[t] = count_unlocking_with_prefix(cfg, length, prefix_from_index(t, width));
    };
    if (workers == 1) {
        run();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    }

    KeyspaceStats stats;
    stats.length = length;
    stats.total_sequences = kPow10[static_cast<std::size_t>(length)];
    stats.unlocking = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
    stats.probability = {stats.unlocking, stats.total_sequences};
    stats.nominal_claim =
        nominal_combinations(kKeypadSize, static_cast<std::int64_t>(cfg.code_length()));
    return stats;
}

std::vector<KeyspaceStats> analyze_range(const LockConfig& cfg, int l_min, int l_max,
                                         EnumerationOptions options) {
    check_length(l_min);
    check_length(l_max);
    if (l_min > l_max)
        throw Error(ErrorCode::LengthOutOfRange, "length out of range: l_min " + std::to_string(l_min) +
                                                     " > l_max " + std::to_string(l_max));
    std::vector<KeyspaceStats> out;
    for (int l = l_min; l <= l_max; ++l) out.push_back(count_unlocking(cfg, l, options));
    return out;
}

void write_keyspace_csv(std::ostream& os, std::span<const KeyspaceStats> stats) {
    os << "length,total,unlocking,probability,nominal_claim\n";
    for (const auto& s : stats)
        os << s.length << ',' << s.total_sequences << ',' << s.unlocking << ',' << s.probability.str() << ','
           << s.nominal_claim << '\n';
}

void write_keyspace_text(std::ostream& os, std::span<const KeyspaceStats> stats, const LockConfig& cfg) {
    const std::uint64_t nominal =
        nominal_combinations(kKeypadSize, static_cast<std::int64_t>(cfg.code_length()));
    os << "code " << format_key_list(cfg.code) << ", keypad of " << kKeypadSize << " keys\n";
    os << "nominal combinations C(" << kKeypadSize << "," << cfg.code_length() << ") = " << nominal
       << "  (order-insensitive; guess probability 1/" << nominal << ")\n\n";
    os << std::left << std::setw(8) << "length" << std::setw(12) << "total" << std::setw(11) << "unlocking"
       << std::setw(16) << "probability" << "decimal\n";
    for (const auto& s : stats) {
        os << std::setw(8) << s.length << std::setw(12) << s.total_sequences << std::setw(11) << s.unlocking
           << std::setw(16) << s.probability.str() << std::scientific << std::setprecision(4)
           << s.probability.to_double() << std::defaultfloat << '\n';
    }
}

}  // namespace comblock
