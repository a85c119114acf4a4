// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace evap {

/**
 * @brief Signed real number stored as (sign, log2|x|).
 *
 * Purity formulas at astrophysical scales involve quantities like
 * 2^(-200) whose ratios and sums are still well conditioned in the log
 * domain.  Addition orders its operands canonically before combining, so
 * a + b and b + a are bit-identical; expressions assembled from the same
 * term multiset therefore evaluate to the same bits.
 */
class LogReal {
public:
    LogReal() = default;  // zero

    static LogReal zero() { return LogReal(); }
    static LogReal one() { return from_log2(0.0); }
    static LogReal from_double(double value);
    static LogReal from_log2(double log2_abs, int sign = 1);

    int sign() const { return sign_; }

    /// log2 of the absolute value; requires a nonzero value.
    double log2_abs() const;

    /// log2 of the value; requires a positive value.
    double log2() const;

    /// May overflow to +/-inf or underflow to 0 outside double range.
    double to_double() const;

    bool is_zero() const { return sign_ == 0; }

    friend LogReal operator*(const LogReal& a, const LogReal& b);
    friend LogReal operator/(const LogReal& a, const LogReal& b);
    friend LogReal operator+(const LogReal& a, const LogReal& b);
    friend LogReal operator-(const LogReal& a, const LogReal& b);
    LogReal operator-() const;

private:
    int sign_ = 0;
    double log2_ = 0.0;
};

/// 2^x - 1 as a LogReal, stable for both tiny and huge x >= 0.
LogReal pow2_minus_one(double x);

} // namespace evap
