#ifndef PULSEBEAM_SHELL_SOURCES_HPP
#define PULSEBEAM_SHELL_SOURCES_HPP

#include <functional>
#include <vector>

#include "pulsebeam/wavelet_fields.hpp"

namespace pulsebeam {

// Quintic smoothstep transition in p between p1 and p2.  C^2 at the joins,
// so the pointwise source (which needs h2'') is well defined.
struct TransitionProfile {
    double p1 = 0.0;
    double p2 = 0.0;

    TransitionProfile(double p_inner, double p_outer);

    double h2(double p) const;
    double h2_prime(double p) const;
    double h2_double_prime(double p) const;
    double h1(double p) const { return 1.0 - h2(p); }
};

// h1 Psi_1 + h2 Psi_2 with Psi_1 the interior branch average and Psi_2 the
// plain wavelet.
Complex interpolated_field(const SpacetimePoint& x, const TransitionProfile& profile,
                           const EmissionCenter& z);

// Smooth shell source:  (1/4pi) Box of the interpolated field,
//   [-2 h2' |grad p|^2 Psi_J' - (h2'' |grad p|^2 + h2' lap p) Psi_J] / 4pi.
// Exactly zero outside p in [p1, p2].
Complex shell_source_density(const SpacetimePoint& x, const TransitionProfile& profile,
                             const EmissionCenter& z);

// Caller-supplied field with consistent value / gradient / time-derivative
// evaluators.
struct FieldEvaluators {
    std::function<Complex(const SpacetimePoint&)> value;
    std::function<std::array<Complex, 3>(const SpacetimePoint&)> gradient;
    std::function<Complex(const SpacetimePoint&)> time_derivative;
};

struct FieldPair {
    FieldEvaluators f1;
    FieldEvaluators f2;
};

// Transition profile as a spacetime function, for time-dependent h2.
struct ProfileEvaluators {
    std::function<double(const SpacetimePoint&)> value;
    std::function<double(const SpacetimePoint&)> time_derivative;
    std::function<Vec3(const SpacetimePoint&)> gradient;
    std::function<double(const SpacetimePoint&)> dalembertian;
};

// Generic transitional source
//   g_T = 2 h2_t fJ_t - 2 grad h2 . grad fJ + (Box h2) fJ,   fJ = f2 - f1.
// Equals 4pi * shell_source_density for (Psi_1, Psi_2) and a static profile.
Complex transitional_source_general(const FieldPair& fp, const ProfileEvaluators& h2,
                                    const SpacetimePoint& x);

// h1 g1 + h2 g2.
Complex interpolated_source(const std::function<Complex(const SpacetimePoint&)>& g1,
                            const std::function<Complex(const SpacetimePoint&)>& g2,
                            const std::function<double(const SpacetimePoint&)>& h2,
                            const SpacetimePoint& x);

// Coefficients of delta(p - alpha) and delta'(p - alpha) in the abrupt-limit
// source on S_alpha.
struct SurfaceLayerDensity {
    Complex single_layer;
    Complex double_layer;
};

SurfaceLayerDensity abrupt_layer_coefficients(const Vec3& r, double t, double alpha,
                                              const EmissionCenter& z);

struct ShellQuadratureSpec {
    int n_p = 64;
    int n_q = 32;
    int n_phi = 64;
};

struct ReproductionResult {
    SpacetimePoint probe;
    Complex analytic;       // interpolated field at the probe (Psi_2 outside the shell)
    Complex reconstructed;  // retarded integral of the shell source
    double rel_error = 0.0;
};

// Retarded-potential integral of the shell source over the transition shell
// in oblate coordinates; the time integral is collapsed against
// delta(t - |x - x'|)/|x - x'|, so the density is evaluated at emission time.
// The integral alone reproduces the interpolated field everywhere: the
// equivalent source replaces the wavelet's own sources, interior part
// included.
std::vector<ReproductionResult> huygens_reproduction(const TransitionProfile& profile,
                                                     const EmissionCenter& z,
                                                     const std::vector<SpacetimePoint>& probes,
                                                     const ShellQuadratureSpec& spec);

} // namespace pulsebeam

#endif
