#include "zr/primes.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <mutex>

namespace zr {
namespace {

std::mutex g_prime_mutex;
std::shared_ptr<const std::vector<std::uint32_t>> g_primes =
    std::make_shared<const std::vector<std::uint32_t>>();
std::uint64_t g_sieved_to = 1; // primes complete through this bound

// Sieve (lo, hi] given base primes covering sqrt(hi), appending results.
void sieve_segment(std::uint64_t lo, std::uint64_t hi,
                   const std::vector<std::uint32_t>& base,
                   std::vector<std::uint32_t>& out) {
    const std::uint64_t span = hi - lo;
    std::vector<std::uint8_t> composite(span, 0);
    for (std::uint32_t p : base) {
        const std::uint64_t p2 = std::uint64_t(p) * p;
        if (p2 > hi) break;
        std::uint64_t start = std::max(p2, ((lo / p) + 1) * std::uint64_t(p));
        for (std::uint64_t m = start; m <= hi; m += p) composite[m - lo - 1] = 1;
    }
    for (std::uint64_t i = 0; i < span; ++i)
        if (!composite[i]) out.push_back(static_cast<std::uint32_t>(lo + i + 1));
}

void grow_primes_locked(std::uint64_t target) {
    auto next = std::make_shared<std::vector<std::uint32_t>>(*g_primes);
    if (g_sieved_to < 2 && target >= 2) {
        // bootstrap with a classic sieve; 65536^2 exceeds any later segment end
        std::uint64_t hi = std::max<std::uint64_t>(target, 65536);
        std::vector<std::uint8_t> comp(hi + 1, 0);
        for (std::uint64_t p = 2; p * p <= hi; ++p)
            if (!comp[p])
                for (std::uint64_t m = p * p; m <= hi; m += p) comp[m] = 1;
        next->clear();
        for (std::uint64_t p = 2; p <= hi; ++p)
            if (!comp[p]) next->push_back(static_cast<std::uint32_t>(p));
        g_sieved_to = hi;
    }
    while (g_sieved_to < target) {
        const std::uint64_t lo = g_sieved_to;
        const std::uint64_t hi = std::min(target, std::max(lo * 2, lo + (1u << 20)));
        // base primes must reach sqrt(hi); guaranteed since we double at most
        sieve_segment(lo, hi, *next, *next);
        g_sieved_to = hi;
    }
    g_primes = std::shared_ptr<const std::vector<std::uint32_t>>(std::move(next));
}

std::mutex g_log_mutex;
std::shared_ptr<const std::vector<double>> g_logs =
    std::make_shared<const std::vector<double>>(std::vector<double>{0.0});

} // namespace

std::shared_ptr<const std::vector<std::uint32_t>> primes_up_to(double x) {
    const std::uint64_t target = x < 2.0 ? 1 : static_cast<std::uint64_t>(std::floor(x));
    {
        std::lock_guard<std::mutex> lock(g_prime_mutex);
        if (g_sieved_to < target) grow_primes_locked(target);
        auto snapshot = g_primes;
        if (x < 2.0) return std::make_shared<const std::vector<std::uint32_t>>();
        // trim to <= x
        auto it = std::upper_bound(snapshot->begin(), snapshot->end(), target);
        if (it == snapshot->end()) return snapshot;
        return std::make_shared<const std::vector<std::uint32_t>>(snapshot->begin(), it);
    }
}

std::size_t prime_count_up_to(double x) { return primes_up_to(x)->size(); }

std::shared_ptr<const std::vector<double>> log_table(std::size_t n) {
    std::lock_guard<std::mutex> lock(g_log_mutex);
    if (g_logs->size() <= n) {
        auto next = std::make_shared<std::vector<double>>(*g_logs);
        std::size_t target = std::max<std::size_t>(n + 1, next->size() * 2);
        next->reserve(target);
        for (std::size_t k = next->size(); k < target; ++k)
            next->push_back(std::log(static_cast<double>(k)));
        g_logs = std::shared_ptr<const std::vector<double>>(std::move(next));
    }
    return g_logs;
}

} // namespace zr
