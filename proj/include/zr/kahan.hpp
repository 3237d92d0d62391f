#pragma once

#include <complex>

namespace zr {

// Kahan compensated accumulator.  Works for double and std::complex<double>;
// the correction recurrence is componentwise for complex values.
template <class T>
class CompensatedSum {
public:
    CompensatedSum() : sum_{}, carry_{} {}

    void add(const T& x) {
        const T y = x - carry_;
        const T t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }

    CompensatedSum& operator+=(const T& x) {
        add(x);
        return *this;
    }

    T value() const { return sum_; }

private:
    T sum_;
    T carry_;
};

using KahanReal = CompensatedSum<double>;
using KahanComplex = CompensatedSum<std::complex<double>>;

} // namespace zr
