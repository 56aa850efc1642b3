#include "tlab/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace tlab {

Scalar Scalar::rational(Rational value) { return Scalar(std::move(value)); }

Scalar Scalar::rational(long long numerator, long long denominator) {
    if (denominator == 0) throw UsageError("rational with zero denominator");
    return Scalar(Rational(BigInt(numerator), BigInt(denominator)));
}

Scalar Scalar::f64(double value) {
    if (!std::isfinite(value)) throw UsageError("non-finite f64 scalar");
    return Scalar(value);
}

Scalar Scalar::parse(const std::string& text, ScalarMode mode) {
    if (text.empty()) throw UsageError("empty scalar literal");
    if (mode == ScalarMode::Rational) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return Scalar(Rational(BigInt(text)));
            const BigInt num(text.substr(0, slash));
            const BigInt den(text.substr(slash + 1));
            if (den <= 0) throw UsageError("rational denominator must be positive: " + text);
            return Scalar(Rational(num, den));
        } catch (const std::runtime_error&) {
            throw UsageError("malformed rational literal: " + text);
        }
    }
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) throw UsageError("malformed f64 literal: " + text);
    return f64(value);
}

const Rational& Scalar::rat() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return *r;
    throw UsageError("scalar is not rational");
}

double Scalar::value_f64() const {
    if (const auto* d = std::get_if<double>(&value_)) return *d;
    throw UsageError("scalar is not f64");
}

double Scalar::to_double() const {
    if (const auto* d = std::get_if<double>(&value_)) return *d;
    return std::get<Rational>(value_).convert_to<double>();
}

std::string Scalar::to_string() const {
    if (const auto* r = std::get_if<Rational>(&value_)) {
        return numerator(*r).str() + "/" + denominator(*r).str();
    }
    // shortest representation that round-trips
    char buf[32];
    const double d = std::get<double>(value_);
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), d);
    (void)ec;
    return std::string(buf, ptr);
}

void Scalar::require_same_mode(const Scalar& a, const Scalar& b) {
    if (a.mode() != b.mode()) throw UsageError("scalar-mode mismatch");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::require_same_mode(a, b);
    if (a.is_rational()) return Scalar(Rational(a.rat() + b.rat()));
    return Scalar::f64(a.value_f64() + b.value_f64());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar::require_same_mode(a, b);
    if (a.is_rational()) return Scalar(Rational(a.rat() - b.rat()));
    return Scalar::f64(a.value_f64() - b.value_f64());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::require_same_mode(a, b);
    if (a.is_rational()) return Scalar(Rational(a.rat() * b.rat()));
    return Scalar::f64(a.value_f64() * b.value_f64());
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(Rational(-rat()));
    return Scalar(-value_f64());
}

int Scalar::cmp(const Scalar& other) const {
    require_same_mode(*this, other);
    if (is_rational()) return rat().compare(other.rat());
    const double a = value_f64();
    const double b = other.value_f64();
    return a < b ? -1 : (a > b ? 1 : 0);
}

Rational exact_sqrt(const Rational& r) {
    if (r < 0) throw UsageError("square root of negative rational");
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    const BigInt sn = sqrt(num);
    const BigInt sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) {
        throw UsageError("rational has no exact square root");
    }
    return Rational(sn, sd);
}

} // namespace tlab
