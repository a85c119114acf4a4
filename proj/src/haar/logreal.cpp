// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#include "evap/haar/logreal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace evap {

namespace {
constexpr double kLn2 = 0.6931471805599453;
}

LogReal LogReal::from_double(double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("LogReal requires a finite value");
    if (value == 0.0) return LogReal();
    LogReal r;
    r.sign_ = value > 0.0 ? 1 : -1;
    r.log2_ = std::log2(std::abs(value));
    return r;
}

LogReal LogReal::from_log2(double log2_abs, int sign) {
    if (sign == 0 || log2_abs == -std::numeric_limits<double>::infinity()) return LogReal();
    if (sign != 1 && sign != -1) throw std::invalid_argument("LogReal sign must be -1, 0, or 1");
    if (std::isnan(log2_abs)) throw std::invalid_argument("LogReal requires a finite exponent");
    LogReal r;
    r.sign_ = sign;
    r.log2_ = log2_abs;
    return r;
}

double LogReal::log2_abs() const {
    if (sign_ == 0) throw std::domain_error("log2_abs of zero");
    return log2_;
}

double LogReal::log2() const {
    if (sign_ <= 0) throw std::domain_error("log2 requires a positive value");
    return log2_;
}

double LogReal::to_double() const {
    return sign_ == 0 ? 0.0 : static_cast<double>(sign_) * std::exp2(log2_);
}

LogReal operator*(const LogReal& a, const LogReal& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return LogReal();
    return LogReal::from_log2(a.log2_ + b.log2_, a.sign_ * b.sign_);
}

LogReal operator/(const LogReal& a, const LogReal& b) {
    if (b.sign_ == 0) throw std::domain_error("LogReal division by zero");
    if (a.sign_ == 0) return LogReal();
    return LogReal::from_log2(a.log2_ - b.log2_, a.sign_ * b.sign_);
}

LogReal operator+(const LogReal& a, const LogReal& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    // Canonical operand order makes addition exactly commutative.
    const LogReal* hi = &a;
    const LogReal* lo = &b;
    if (a.log2_ < b.log2_ || (a.log2_ == b.log2_ && a.sign_ < b.sign_)) {
        hi = &b;
        lo = &a;
    }
    const double delta = lo->log2_ - hi->log2_;  // <= 0
    if (hi->sign_ == lo->sign_) {
        return LogReal::from_log2(hi->log2_ + std::log1p(std::exp2(delta)) / kLn2, hi->sign_);
    }
    if (delta == 0.0) return LogReal();  // exact cancellation
    return LogReal::from_log2(hi->log2_ + std::log1p(-std::exp2(delta)) / kLn2, hi->sign_);
}

LogReal operator-(const LogReal& a, const LogReal& b) { return a + (-b); }

LogReal LogReal::operator-() const {
    LogReal r = *this;
    r.sign_ = -r.sign_;
    return r;
}

LogReal pow2_minus_one(double x) {
    if (x < 0.0) throw std::invalid_argument("pow2_minus_one requires x >= 0");
    if (x == 0.0) return LogReal::zero();
    if (x > 49.0) {
        // 2^x dominates; the -1 shifts the exponent by less than 2^-49.
        return LogReal::from_log2(x + std::log1p(-std::exp2(-x)) / kLn2);
    }
    return LogReal::from_log2(std::log2(std::expm1(x * kLn2)));
}

} // namespace evap
