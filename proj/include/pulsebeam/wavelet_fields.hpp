#ifndef PULSEBEAM_WAVELET_FIELDS_HPP
#define PULSEBEAM_WAVELET_FIELDS_HPP

#include <functional>

#include "pulsebeam/complex_geometry.hpp"

namespace pulsebeam {

// Complex time t~ = t - i b.
struct ComplexTime {
    double t = 0.0;
    double b = 0.0;

    Complex value() const { return {t, -b}; }
};

// Complex spacetime center z = (r0 + i a, t0 + i b) of a translated wavelet.
// Timelike: |b| > |a|.
struct EmissionCenter {
    Vec3 r0;
    double t0 = 0.0;
    Vec3 a;
    double b = 0.0;

    bool timelike() const { return std::fabs(b) > norm(a); }
    void validate() const;
};

// Extended delta: the Cauchy kernel 1/(2 pi i t~).
Complex cauchy_kernel(const ComplexTime& t);
Complex cauchy_kernel(Complex t);

// Basic wavelet Psi(rho~, t~) = 1 / (2 pi i rho~ (t~ - rho~)).
Complex psi(Complex rho, Complex t);
inline Complex psi(const ComplexDistance& rho, const ComplexTime& t) {
    return psi(rho.value(), t.value());
}

// Translated wavelet evaluated at the real spacetime point x.
Complex wavelet(const SpacetimePoint& x, const EmissionCenter& z, const BranchCut& cut);

// Interior (branch-averaged) field 1 / (2 pi i (t~^2 - rho~^2)).
Complex psi_interior(Complex rho, Complex t);

// Average of the upper/lower hemispheroidal-cut wavelets: interior field
// inside S_alpha, plain wavelet outside.  Throws within the S_alpha band.
Complex psi_avg(const SpacetimePoint& x, const EmissionCenter& z, double alpha);

// Jump field Psi_2 - Psi_1 = t~ / (2 pi i rho~ (t~^2 - rho~^2)) across S_alpha.
Complex psi_jump(Complex rho, Complex t);

// Complex derivative of the jump field in rho~:
//   d/drho~ [ t~ / (2 pi i rho~ (t~^2 - rho~^2)) ]
//     = -t~ (t~^2 - 3 rho~^2) / (2 pi i rho~^2 (t~^2 - rho~^2)^2).
Complex psi_jump_prime(Complex rho, Complex t);

// d^n/dt^n Psi = n! (-1)^n / (2 pi i rho~ (t~ - rho~)^(n+1)), 0 <= n <= 3.
Complex psi_time_derivative(Complex rho, Complex t, int order);

// Source density on a compact spacetime box W.
struct SourceDensityFn {
    std::function<double(const SpacetimePoint&)> g;
    Vec3 lo;          // spatial box corner
    Vec3 hi;
    double t_lo = 0.0;
    double t_hi = 0.0;
};

struct BoxQuadratureSpec {
    int n_space = 8;       // midpoint nodes per spatial axis
    int n_time = 8;
    int refinements = 1;   // node-doubling levels for the error estimate
};

struct ExtendedFieldResult {
    Complex value;
    double error_estimate = 0.0;
};

// Convolution extension f~(x - i y) = int_W G~(x - x' - i y) g(x') dx'
// by tensor midpoint quadrature with one node-doubling refinement.
ExtendedFieldResult extended_field(const SourceDensityFn& g, const Vec3& a, double b,
                                   const SpacetimePoint& x, const BranchCut& cut,
                                   const BoxQuadratureSpec& spec);

// | int [d~(t - ib) - d~(t + ib)] phi(t) dt - phi(0) |, the kernel pair
// difference being the Poisson kernel (1/pi) b / (t^2 + b^2).
double hyperfunction_limit_error(double b, const std::function<double(double)>& phi,
                                 double t_lo, double t_hi, double tol);

struct BeamMetrics {
    double angular_fwhm = 0.0;       // radians, at radius R_far at the pulse peak
    double axial_pulse_width = 0.0;  // FWHM of |Psi(t)| at the on-axis far point
};

BeamMetrics beam_metrics(const EmissionCenter& z, double t_obs, double r_far);

} // namespace pulsebeam

#endif
