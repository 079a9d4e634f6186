#pragma once

// Deterministic transcendental math. Every data-facing code path (rendering,
// noise draws, embeddings, softmax) goes through these instead of libm so that
// outputs are reproducible bit-for-bit across platforms and libm versions.
// Fixed polynomial evaluation order, IEEE double arithmetic only.
// Accuracy is ~1e-12 relative over the argument ranges used here, which is far
// below every tolerance in the test suite; determinism is the contract.

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

namespace wf::dm {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647692;
inline constexpr double kHalfPi = 1.57079632679489661923;
inline constexpr double kQuarterPi = 0.78539816339744830962;

namespace detail {

inline constexpr double kLn2Hi = 6.93147180369123816490e-01;
inline constexpr double kLn2Lo = 1.90821492927058770002e-10;
inline constexpr double kInvLn2 = 1.44269504088896338700e+00;

// pi/2 split: A has 26 significant bits so k*A is exact for |k| < 2^26,
// C is the tail of the true pi/2 beyond double precision.
inline double split_hi26(double v) {
    auto bits = std::bit_cast<std::uint64_t>(v);
    bits &= ~((std::uint64_t{1} << 27) - 1);
    return std::bit_cast<double>(bits);
}
inline const double kPio2A = split_hi26(kHalfPi);
inline const double kPio2B = kHalfPi - kPio2A;
inline constexpr double kPio2C = 6.123233995736766e-17;

// sin(r) = r + r*r2*P(r2), |r| <= pi/4
inline double sin_poly(double r) {
    const double r2 = r * r;
    double p = 1.60590438368216145994e-10; // 1/13!
    p = p * r2 - 2.50521083854417187751e-08;
    p = p * r2 + 2.75573192239858906526e-06;
    p = p * r2 - 1.98412698412698412698e-04;
    p = p * r2 + 8.33333333333333333333e-03;
    p = p * r2 - 1.66666666666666666667e-01;
    return r + r * (r2 * p);
}

// cos(r) = 1 + r2*P(r2), |r| <= pi/4
inline double cos_poly(double r) {
    const double r2 = r * r;
    double p = -1.14707455977297247139e-11; // -1/14!
    p = p * r2 + 2.08767569878680989792e-09;
    p = p * r2 - 2.75573192239858906526e-07;
    p = p * r2 + 2.48015873015873015873e-05;
    p = p * r2 - 1.38888888888888888889e-03;
    p = p * r2 + 4.16666666666666666667e-02;
    p = p * r2 - 0.5;
    return 1.0 + r2 * p;
}

} // namespace detail

inline double exp_det(double x) {
    if (std::isnan(x)) return x;
    if (x > 709.782712893384) return std::numeric_limits<double>::infinity();
    if (x < -745.133219101941) return 0.0;
    const double kd = std::round(x * detail::kInvLn2);
    const int k = static_cast<int>(kd);
    const double r = (x - kd * detail::kLn2Hi) - kd * detail::kLn2Lo;
    // Taylor series for e^r, |r| <= ln2/2
    double p = 1.60590438368216145994e-10; // 1/13!
    p = p * r + 2.08767569878680989792e-09;
    p = p * r + 2.50521083854417187751e-08;
    p = p * r + 2.75573192239858906526e-07;
    p = p * r + 2.75573192239858906526e-06;
    p = p * r + 2.48015873015873015873e-05;
    p = p * r + 1.98412698412698412698e-04;
    p = p * r + 1.38888888888888888889e-03;
    p = p * r + 8.33333333333333333333e-03;
    p = p * r + 4.16666666666666666667e-02;
    p = p * r + 1.66666666666666666667e-01;
    p = p * r + 5.00000000000000000000e-01;
    p = p * r + 1.0;
    p = p * r + 1.0;
    return std::ldexp(p, k);
}

inline double log_det(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.0) return std::numeric_limits<double>::quiet_NaN();
    if (x == 0.0) return -std::numeric_limits<double>::infinity();
    if (std::isinf(x)) return x;
    int e = 0;
    double m = std::frexp(x, &e); // m in [0.5, 1)
    if (m < 0.70710678118654752440) {
        m *= 2.0;
        e -= 1;
    }
    const double s = (m - 1.0) / (m + 1.0);
    const double s2 = s * s;
    double p = 1.0 / 19.0;
    p = p * s2 + 1.0 / 17.0;
    p = p * s2 + 1.0 / 15.0;
    p = p * s2 + 1.0 / 13.0;
    p = p * s2 + 1.0 / 11.0;
    p = p * s2 + 1.0 / 9.0;
    p = p * s2 + 1.0 / 7.0;
    p = p * s2 + 1.0 / 5.0;
    p = p * s2 + 1.0 / 3.0;
    p = p * s2 + 1.0;
    const double lnm = 2.0 * s * p;
    const double ed = static_cast<double>(e);
    return ed * detail::kLn2Hi + (lnm + ed * detail::kLn2Lo);
}

// Valid for |x| up to ~1e6; reduction error grows as ~1e-17*|x/pi|.
inline void sincos_det(double x, double& s, double& c) {
    const double kd = std::round(x * (2.0 / kPi));
    const double r = ((x - kd * detail::kPio2A) - kd * detail::kPio2B) - kd * detail::kPio2C;
    const long long k = static_cast<long long>(kd);
    const int j = static_cast<int>(((k % 4) + 4) % 4);
    const double sp = detail::sin_poly(r);
    const double cp = detail::cos_poly(r);
    switch (j) {
        case 0: s = sp; c = cp; break;
        case 1: s = cp; c = -sp; break;
        case 2: s = -sp; c = -cp; break;
        default: s = -cp; c = sp; break;
    }
}

inline double sin_det(double x) {
    double s, c;
    sincos_det(x, s, c);
    return s;
}

inline double cos_det(double x) {
    double s, c;
    sincos_det(x, s, c);
    return c;
}

inline double tan_det(double x) {
    double s, c;
    sincos_det(x, s, c);
    return s / c;
}

namespace detail {

// atan on [0, tan(pi/8)]
inline double atan_poly(double u) {
    const double u2 = u * u;
    double p = -1.0 / 25.0;
    p = p * u2 + 1.0 / 23.0;
    p = p * u2 + -1.0 / 21.0;
    p = p * u2 + 1.0 / 19.0;
    p = p * u2 + -1.0 / 17.0;
    p = p * u2 + 1.0 / 15.0;
    p = p * u2 + -1.0 / 13.0;
    p = p * u2 + 1.0 / 11.0;
    p = p * u2 + -1.0 / 9.0;
    p = p * u2 + 1.0 / 7.0;
    p = p * u2 + -1.0 / 5.0;
    p = p * u2 + 1.0 / 3.0;
    return u - u * (u2 * p);
}

inline double atan01(double t) { // t in [0, 1]
    constexpr double kTanPi8 = 0.41421356237309504880;
    if (t > kTanPi8) return kQuarterPi + atan_poly((t - 1.0) / (t + 1.0));
    return atan_poly(t);
}

} // namespace detail

inline double atan_det(double x) {
    if (std::isnan(x)) return x;
    const double t = std::fabs(x);
    double r;
    if (t > 1.0) {
        r = std::isinf(t) ? kHalfPi : kHalfPi - detail::atan01(1.0 / t);
    } else {
        r = detail::atan01(t);
    }
    return x < 0.0 ? -r : r;
}

inline double atan2_det(double y, double x) {
    if (x > 0.0) return atan_det(y / x);
    if (x < 0.0) {
        if (y >= 0.0) return atan_det(y / x) + kPi;
        return atan_det(y / x) - kPi;
    }
    if (y > 0.0) return kHalfPi;
    if (y < 0.0) return -kHalfPi;
    return 0.0;
}

inline double acos_det(double x) {
    if (x >= 1.0) return 0.0;
    if (x <= -1.0) return kPi;
    return atan2_det(std::sqrt((1.0 - x) * (1.0 + x)), x);
}

inline double pow_det(double x, double y) {
    if (x > 0.0) return exp_det(y * log_det(x));
    if (x == 0.0) return y > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::numeric_limits<double>::quiet_NaN();
}

inline double tanh_det(double x) {
    const double t = std::fabs(x);
    double r;
    if (t < 1e-4) {
        r = t * (1.0 - t * t / 3.0);
    } else if (t > 20.0) {
        r = 1.0;
    } else {
        const double e = exp_det(2.0 * t);
        r = (e - 1.0) / (e + 1.0);
    }
    return x < 0.0 ? -r : r;
}

inline double sigmoid_det(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + exp_det(-x));
    const double e = exp_det(x);
    return e / (1.0 + e);
}

} // namespace wf::dm
