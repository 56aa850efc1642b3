#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "tlab/error.hpp"

namespace tlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ScalarMode { Rational, F64 };

/// A coordinate or radius. Either an exact rational (arbitrary precision,
/// kept in lowest terms with positive denominator) or a finite binary64.
/// Arithmetic and comparisons require both operands to share a mode;
/// mixing modes throws UsageError.
class Scalar {
public:
    Scalar() : value_(0.0) {}

    static Scalar rational(Rational value);
    static Scalar rational(long long numerator, long long denominator = 1);
    static Scalar f64(double value); // rejects NaN/Inf

    /// Parses "p/q" or "p" in Rational mode, a decimal literal in F64 mode.
    static Scalar parse(const std::string& text, ScalarMode mode);

    ScalarMode mode() const {
        return std::holds_alternative<Rational>(value_) ? ScalarMode::Rational
                                                        : ScalarMode::F64;
    }
    bool is_rational() const { return mode() == ScalarMode::Rational; }

    const Rational& rat() const;
    double value_f64() const;
    double to_double() const; // numeric value in either mode

    /// Canonical text: "p/q" for rationals, shortest round-trip decimal for f64.
    std::string to_string() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar operator-() const;

    /// Three-way compare, -1/0/+1. Throws on mode mismatch.
    int cmp(const Scalar& other) const;
    bool operator==(const Scalar& o) const { return cmp(o) == 0; }
    bool operator!=(const Scalar& o) const { return cmp(o) != 0; }
    bool operator<(const Scalar& o) const { return cmp(o) < 0; }
    bool operator<=(const Scalar& o) const { return cmp(o) <= 0; }
    bool operator>(const Scalar& o) const { return cmp(o) > 0; }
    bool operator>=(const Scalar& o) const { return cmp(o) >= 0; }

    static void require_same_mode(const Scalar& a, const Scalar& b);

private:
    explicit Scalar(Rational r) : value_(std::move(r)) {}
    explicit Scalar(double d) : value_(d) {}

    std::variant<Rational, double> value_;
};

/// Exact integer square root test: value of sqrt(r) when r is the square
/// of a rational, otherwise throws UsageError. r must be nonnegative.
Rational exact_sqrt(const Rational& r);

} // namespace tlab
