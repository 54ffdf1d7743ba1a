#ifndef TORAL_NUMERIC_HPP
#define TORAL_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "toral/errors.hpp"

namespace toral {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// All floating-point work runs on a fixed 120-decimal-digit MPFR substrate.
// The user-facing precision parameter P (30 <= P <= 100) selects tolerances
// derived from P; the substrate keeps at least 20 guard digits beyond it.
inline constexpr int kSubstrateDigits = 120;
inline constexpr int kMinPrecisionDigits = 30;
inline constexpr int kMaxPrecisionDigits = 100;

using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<kSubstrateDigits>,
    boost::multiprecision::et_off>;

const Real& pi();

// 10^e for possibly negative e.
Real pow10(int e);

// x reduced mod 1 into [0, 1).
Real frac01(const Real& x);

// Distance on the circle R/Z between a, b in [0, 1).
Real circular_distance(const Real& a, const Real& b);

// Decimal string with `digits` significant digits (deterministic formatting).
std::string real_str(const Real& x, int digits);

void validate_precision(int precision_digits);

// Complex number over the high-precision real type. std::complex requires a
// builtin floating-point type, so we carry our own minimal arithmetic.
struct Cplx {
    Real re{};
    Real im{};

    Cplx() = default;
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Cplx(Real r) : re(std::move(r)), im(0) {}

    Cplx conj() const { return {re, -im}; }

    Cplx& operator+=(const Cplx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Cplx& operator-=(const Cplx& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Cplx& operator*=(const Cplx& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }

    friend Cplx operator+(Cplx a, const Cplx& b) { return a += b; }
    friend Cplx operator-(Cplx a, const Cplx& b) { return a -= b; }
    friend Cplx operator*(Cplx a, const Cplx& b) { return a *= b; }

    friend Cplx operator*(const Real& s, Cplx a) {
        a.re *= s;
        a.im *= s;
        return a;
    }

    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        Real n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
};

inline Real abs(const Cplx& z) { return hypot(z.re, z.im); }
inline Real norm(const Cplx& z) { return z.re * z.re + z.im * z.im; }

// Argument in (-pi, pi].
inline Real arg(const Cplx& z) { return atan2(z.im, z.re); }

// e^{2 pi i a}.
Cplx unit_circle_point(const Real& a);

// z^n for n >= 0 by binary powering.
Cplx cplx_pow(Cplx z, long n);

}  // namespace toral

#endif
