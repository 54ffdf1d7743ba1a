#include "toral/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>

namespace toral {

const Real& pi() {
    static const Real value = boost::math::constants::pi<Real>();
    return value;
}

Real pow10(int e) {
    return pow(Real(10), e);
}

Real frac01(const Real& x) {
    Real f = x - floor(x);
    if (f < 0) f += 1;
    if (f >= 1) f -= 1;
    return f;
}

Real circular_distance(const Real& a, const Real& b) {
    Real d = abs(a - b);
    if (d > Real(0.5)) d = 1 - d;
    return d;
}

std::string real_str(const Real& x, int digits) {
    if (digits < 1) digits = 1;
    return x.str(digits);
}

void validate_precision(int precision_digits) {
    if (precision_digits < kMinPrecisionDigits || precision_digits > kMaxPrecisionDigits) {
        std::ostringstream os;
        os << "precision_digits must lie in [" << kMinPrecisionDigits << ", "
           << kMaxPrecisionDigits << "], got " << precision_digits;
        throw ParseError(os.str());
    }
}

Cplx unit_circle_point(const Real& a) {
    Real t = 2 * pi() * a;
    return {cos(t), sin(t)};
}

Cplx cplx_pow(Cplx z, long n) {
    Cplx acc(Real(1));
    while (n > 0) {
        if (n & 1) acc *= z;
        z *= z;
        n >>= 1;
    }
    return acc;
}

}  // namespace toral
