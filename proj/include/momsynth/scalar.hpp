#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace momsynth {

using Rational = mpq_class;
using ComplexDouble = std::complex<double>;

/// Complex number over arbitrary-precision rationals.
struct ComplexRational {
    Rational re;
    Rational im;

    ComplexRational() = default;
    ComplexRational(Rational real, Rational imag = 0) : re(std::move(real)), im(std::move(imag)) {
        re.canonicalize();
        im.canonicalize();
    }
    ComplexRational(long value) : re(value), im(0) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    ComplexRational& operator+=(const ComplexRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ComplexRational& operator-=(const ComplexRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    ComplexRational& operator*=(const ComplexRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    ComplexRational& operator/=(const ComplexRational& o);

    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
    friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
    friend ComplexRational operator-(const ComplexRational& a) {
        return ComplexRational(Rational(-a.re), Rational(-a.im));
    }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

enum class Backend { rational, floating };

std::string_view backend_name(Backend b);
Backend parse_backend(std::string_view name);

/// Canonical "p/q" (or "p" for integers) form.
std::string format_rational(const Rational& q);
/// Accepts "p", "p/q" with optional sign; throws SchemaError otherwise.
Rational parse_rational(std::string_view text);

/// Per-backend arithmetic helpers used by the templated algorithms.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<ComplexRational> {
    static constexpr Backend backend = Backend::rational;
    static ComplexRational zero() { return ComplexRational(0); }
    static ComplexRational one() { return ComplexRational(1); }
    static bool is_zero(const ComplexRational& v) { return v.is_zero(); }
    static ComplexRational times_integer(const ComplexRational& v, std::uint64_t k) {
        mpz_class z(static_cast<unsigned long>(k));
        return ComplexRational(Rational(v.re * z), Rational(v.im * z));
    }
    static ComplexDouble to_complex(const ComplexRational& v) { return {v.re.get_d(), v.im.get_d()}; }
    static double magnitude(const ComplexRational& v) { return std::abs(to_complex(v)); }
};

template <>
struct ScalarTraits<ComplexDouble> {
    static constexpr Backend backend = Backend::floating;
    static ComplexDouble zero() { return {0.0, 0.0}; }
    static ComplexDouble one() { return {1.0, 0.0}; }
    static bool is_zero(const ComplexDouble& v) { return v == ComplexDouble(0.0, 0.0); }
    static ComplexDouble times_integer(const ComplexDouble& v, std::uint64_t k) {
        return v * static_cast<double>(k);
    }
    static ComplexDouble to_complex(const ComplexDouble& v) { return v; }
    static double magnitude(const ComplexDouble& v) { return std::abs(v); }
};

} // namespace momsynth
