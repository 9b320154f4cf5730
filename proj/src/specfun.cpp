#include "irsfield/specfun.hpp"

#include <cmath>
#include <cstddef>

#include "irsfield/errors.hpp"
#include "irsfield/geometry.hpp"

namespace irsfield {

namespace {

// Chebyshev-T coefficients of the Fresnel auxiliary functions on x >= 1.35,
// in the variable t = 2 (1.35/x)^2 - 1:
//   f(x) = F(t) / (pi x),   g(x) = G(t) / (pi^2 x^3),
//   C(x) = 0.5 + f sin(pi x^2/2) - g cos(pi x^2/2),
//   S(x) = 0.5 - f cos(pi x^2/2) - g sin(pi x^2/2).
// Fitted against 50-digit reference values of C and S; the interpolation
// error is below 1e-19 over the whole branch domain.
constexpr double kAuxMatchPoint = 1.35;

constexpr double kAuxF[] = {
    0.976525658814074326,
    -0.0292607196556864943,
    -0.00462476865027482587,
    0.00107026169264216861,
    -0.000110943780402369920,
    -8.87310041844024288e-6,
    7.99610586679033092e-6,
    -2.37282860563112798e-6,
    4.13164163560863682e-7,
    6.76360829631662484e-10,
    -3.51875142690112262e-8,
    1.73188063640968541e-8,
    -5.48401178812139853e-9,
    1.12397199972389784e-9,
    -9.48043961803812689e-12,
    -1.30565265900716239e-10,
    8.05355800300269068e-11,
    -3.29755704127297950e-11,
    9.98816101885386185e-12,
    -1.80837976390613660e-12,
    -2.80543430350735893e-13,
    4.74532438402708278e-13,
    -2.88771553672598392e-13,
    1.28527498697403752e-13,
    -4.46689189830272289e-14,
    1.07001113465129776e-14,
    -7.14850339842423722e-17,
    -1.90314163991982566e-15,
    1.48749921748569827e-15,
    -8.03809864011486863e-16,
    3.48814208348116970e-16,
    -1.20797594126550316e-16,
    2.76656121454965464e-17,
    2.12794443966945766e-18,
    -7.56034195415219671e-18,
    5.89004536045462449e-18,
    -3.35504285909452360e-18,
    1.57591824014569979e-18,
};

constexpr double kAuxG[] = {
    0.905019362716195313,
    -0.113751872540071531,
    -0.0120954076221875704,
    0.00567712716597571593,
    -0.00103809821970287490,
    0.0000402537076844165667,
    0.0000499006477525655982,
    -0.0000232019566425040400,
    6.19300998854992445e-6,
    -8.42278926088496405e-7,
    -1.86567010740284694e-7,
    1.88675855262917120e-7,
    -8.35244199845183584e-8,
    2.54765747254191588e-8,
    -4.61469739743905348e-9,
    -5.53371937395176881e-10,
    9.97548324596192403e-10,
    -5.71931992774612288e-10,
    2.32627336011045370e-10,
    -7.00245704220204633e-11,
    1.14434341539975636e-11,
    3.48988482386669559e-12,
    -4.49783321952802776e-12,
    2.71314925435572558e-12,
    -1.22820399221995806e-12,
    4.36267581969213806e-13,
    -1.05792359969703742e-13,
    -1.13714625286501903e-15,
    2.17231869811162528e-14,
    -1.72471061670143218e-14,
    9.59763751711728619e-15,
    -4.31137595002586577e-15,
    1.55593891349992609e-15,
    -3.80642261337258355e-16,
    -1.66716346303904823e-17,
    9.85788428953721176e-17,
    -8.14063550632252430e-17,
    4.84697693085872606e-17,
};

double clenshaw(const double* c, std::size_t n, double t) {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t i = n; i-- > 1;) {
        const double b0 = 2.0 * t * b1 - b2 + c[i];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + c[0];
}

constexpr double kSqrtTwoOverPi = 0.7978845608028653559;

}  // namespace

double sinc(double x) {
    const double ax = std::fabs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

namespace detail {

FresnelCS fresnel_cs_series(double x) {
    const double x2 = x * x;
    const double q = (kPi / 2.0) * x2;  // pi x^2 / 2
    const double q2 = q * q;
    // C: sum (-1)^n (pi/2)^{2n} x^{4n+1} / ((2n)! (4n+1))
    // S: sum (-1)^n (pi/2)^{2n+1} x^{4n+3} / ((2n+1)! (4n+3))
    double pc = x;                      // running C term, starts at x / (0! * 1)
    double ps = (kPi / 2.0) * x * x2;   // running S term, starts at (pi/2) x^3
    double c = pc;
    double s = ps / 3.0;
    for (int n = 1; n < 40; ++n) {
        pc *= -q2 / double((2 * n - 1) * (2 * n));
        ps *= -q2 / double((2 * n) * (2 * n + 1));
        const double dc = pc / double(4 * n + 1);
        const double ds = ps / double(4 * n + 3);
        c += dc;
        s += ds;
        if (std::fabs(pc) + std::fabs(ps) < 1e-18)
            break;
    }
    return {c, s};
}

FresnelCS fresnel_cs_auxiliary(double x) {
    const double ax = std::fabs(x);
    const double sratio = kAuxMatchPoint / ax;
    const double t = 2.0 * sratio * sratio - 1.0;
    const double f = clenshaw(kAuxF, std::size(kAuxF), t) / (kPi * ax);
    const double g = clenshaw(kAuxG, std::size(kAuxG), t) / (kPi * kPi * ax * ax * ax);
    const double u = (kPi / 2.0) * ax * ax;
    const double su = std::sin(u), cu = std::cos(u);
    FresnelCS r{0.5 + f * su - g * cu, 0.5 - f * cu - g * su};
    if (x < 0.0) {
        r.c = -r.c;
        r.s = -r.s;
    }
    return r;
}

}  // namespace detail

FresnelCS fresnel_cs(double x) {
    if (std::fabs(x) <= 1.6)
        return detail::fresnel_cs_series(x);
    return detail::fresnel_cs_auxiliary(x);
}

Complex erf_ray(double x, ErfRay ray) {
    const FresnelCS cs = fresnel_cs(x * kSqrtTwoOverPi);
    const Complex plus{cs.c + cs.s, cs.c - cs.s};  // (1+i)(C - iS)
    return ray == ErfRay::plus45 ? plus : std::conj(plus);
}

Complex gaussian_phase_antiderivative(double a, double b, double k, double y) {
    if (a == 0.0)
        throw DomainError("gaussian_phase_antiderivative: a == 0, use the linear-phase path");
    if (!(k > 0.0))
        throw DomainError("gaussian_phase_antiderivative: wavenumber must be positive");
    const double sa = std::sqrt(k * std::fabs(a));
    const double chi = y - b / (2.0 * a);
    const Complex w = erf_ray(sa * chi, a > 0.0 ? ErfRay::plus45 : ErfRay::minus45);
    // sqrt(pi) / (2 sqrt(jka)) = sqrt(pi)/(2 sa) e^{-+ i pi/4}
    const double mag = std::sqrt(kPi) / (2.0 * sa);
    const double half = mag * 0.70710678118654752440;  // mag / sqrt(2)
    const Complex prefactor = a > 0.0 ? Complex{half, -half} : Complex{half, half};
    return prefactor * w;
}

Complex gaussian_phase_integral(double a, double b, double k, double y0, double y1) {
    if (!(k > 0.0))
        throw DomainError("gaussian_phase_integral: wavenumber must be positive");
    if (a == 0.0) {
        // int e^{jkby} dy = (y1-y0) e^{jkb(y0+y1)/2} sinc(kb(y1-y0)/2)
        const double half_span = 0.5 * (y1 - y0);
        const double mid = 0.5 * (y0 + y1);
        return 2.0 * half_span * std::polar(1.0, k * b * mid) * sinc(k * b * half_span);
    }
    const Complex phase = std::polar(1.0, k * b * b / (4.0 * a));
    return phase * (gaussian_phase_antiderivative(a, b, k, y1) -
                    gaussian_phase_antiderivative(a, b, k, y0));
}

}  // namespace irsfield
