#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace zr {

// All primes p <= x, from a process-wide cache grown by a segmented sieve.
// The returned vector is immutable; callers may hold it across cache growth.
// Thread-safe.
std::shared_ptr<const std::vector<std::uint32_t>> primes_up_to(double x);

// pi(x) for the same cache.
std::size_t prime_count_up_to(double x);

// Natural logarithms of 1..n from a shared cache (entry [k] = log k, [0] = 0).
// Thread-safe; returned vector has size > n.
std::shared_ptr<const std::vector<double>> log_table(std::size_t n);

} // namespace zr
