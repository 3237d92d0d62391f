#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

#include "zr/errors.hpp"
#include "zr/kahan.hpp"

namespace zr {

// Composite Simpson rule with interval doubling until two successive
// refinements agree to rel_tol (with a small absolute floor).  initial_n
// should resolve the fastest oscillation of f; it is rounded up to even.
template <class F>
auto integrate_simpson_auto(F&& f, double a, double b, double rel_tol,
                            std::size_t initial_n = 512,
                            std::size_t max_n = (1u << 24)) {
    using R = decltype(f(a));
    std::size_t n = initial_n + (initial_n & 1);
    if (n < 8) n = 8;

    auto composite = [&](std::size_t m) -> R {
        const double h = (b - a) / static_cast<double>(m);
        CompensatedSum<R> acc;
        acc += f(a) + f(b);
        for (std::size_t j = 1; j < m; ++j) {
            const double w = (j & 1) ? 4.0 : 2.0;
            acc += w * f(a + h * static_cast<double>(j));
        }
        return acc.value() * (h / 3.0);
    };

    R prev = composite(n);
    while (true) {
        n *= 2;
        if (n > max_n)
            throw CapacityError("integrate_simpson_auto: refinement budget exhausted");
        R cur = composite(n);
        const double scale = std::max(std::abs(cur), 1e-300);
        if (std::abs(cur - prev) <= rel_tol * scale) return cur;
        prev = cur;
    }
}

} // namespace zr
