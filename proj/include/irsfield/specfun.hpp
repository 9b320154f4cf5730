#ifndef IRSFIELD_SPECFUN_HPP
#define IRSFIELD_SPECFUN_HPP

#include <complex>

namespace irsfield {

using Complex = std::complex<double>;

// sin(x)/x with the removable singularity handled by a short series.
double sinc(double x);

struct FresnelCS {
    double c;  // C(x) = int_0^x cos(pi t^2 / 2) dt
    double s;  // S(x) = int_0^x sin(pi t^2 / 2) dt
};

// Fresnel integrals, absolute accuracy better than 1e-12 on the real line.
// Power series for |x| <= 1.6, auxiliary-function form beyond.
FresnelCS fresnel_cs(double x);

enum class ErfRay { plus45, minus45 };

// erf(x e^{+-i pi/4}) for real x, via the Fresnel-integral identity
// erf((1+i)/sqrt(2) x) = (1+i) [C(u) - i S(u)], u = x sqrt(2/pi).
// Bounded for all real x; no overflow region on these rays.
Complex erf_ray(double x, ErfRay ray);

// Antiderivative of exp(-j k (a y^2 - b y)) up to the constant-phase factor
// exp(j k b^2 / (4a)) from completing the square:
//   sqrt(pi)/(2 sqrt(jka)) erf(sqrt(jka)(y - b/(2a))),
// with sqrt(jka) = sqrt(k|a|) e^{+i pi/4} for a > 0 and e^{-i pi/4} for a < 0.
Complex gaussian_phase_antiderivative(double a, double b, double k, double y);

// Definite integral of exp(-j k (a y^2 - b y)) over [y0, y1], exact phase
// included. a == 0 falls back to the closed-form linear-phase integral.
Complex gaussian_phase_integral(double a, double b, double k, double y0, double y1);

namespace detail {
// Both branches exposed so the switchover window can be tested.
FresnelCS fresnel_cs_series(double x);
FresnelCS fresnel_cs_auxiliary(double x);
}  // namespace detail

}  // namespace irsfield

#endif
