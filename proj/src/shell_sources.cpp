#include "pulsebeam/shell_sources.hpp"

#include <cmath>
#include <thread>

namespace pulsebeam {

namespace {

constexpr double kFourPi = 4.0 * M_PI;

struct LocalFrame {
    ComplexDistance rho;
    Complex t;       // t~ relative to the emission center
    double a = 0.0;  // |a|
};

// rho~ relative to the center, bypassing the branch-circle guard: the shell
// quantities that need it are finite there.
LocalFrame local_frame(const SpacetimePoint& x, const EmissionCenter& z) {
    z.validate();
    const Vec3 dr = x.r - z.r0;
    const double am = norm(z.a);
    const Complex w(dot(dr, dr) - am * am, -2.0 * dot(z.a, dr));
    const Complex root = std::sqrt(w);
    double p = root.real(), q = -root.imag();
    if (p == 0.0) q = std::fabs(q);
    return {{p, q}, Complex(x.t - z.t0, -z.b), am};
}

} // namespace

TransitionProfile::TransitionProfile(double p_inner, double p_outer)
    : p1(p_inner), p2(p_outer) {
    if (!(0.0 < p1 && p1 < p2))
        throw InvalidParameterError("transition profile requires 0 < p1 < p2");
}

double TransitionProfile::h2(double p) const {
    if (p <= p1) return 0.0;
    if (p >= p2) return 1.0;
    const double u = (p - p1) / (p2 - p1);
    return ((6.0 * u - 15.0) * u + 10.0) * u * u * u;
}

double TransitionProfile::h2_prime(double p) const {
    if (p <= p1 || p >= p2) return 0.0;
    const double u = (p - p1) / (p2 - p1);
    return 30.0 * u * u * (u - 1.0) * (u - 1.0) / (p2 - p1);
}

double TransitionProfile::h2_double_prime(double p) const {
    if (p <= p1 || p >= p2) return 0.0;
    const double u = (p - p1) / (p2 - p1);
    return 60.0 * u * (2.0 * u - 1.0) * (u - 1.0) / ((p2 - p1) * (p2 - p1));
}

Complex interpolated_field(const SpacetimePoint& x, const TransitionProfile& profile,
                           const EmissionCenter& z) {
    const LocalFrame lf = local_frame(x, z);
    const Complex rho = lf.rho.value();
    const double w2 = profile.h2(lf.rho.p);
    Complex out = 0.0;
    if (w2 < 1.0) out += (1.0 - w2) * psi_interior(rho, lf.t);
    if (w2 > 0.0) out += w2 * psi(rho, lf.t);
    return out;
}

Complex shell_source_density(const SpacetimePoint& x, const TransitionProfile& profile,
                             const EmissionCenter& z) {
    const LocalFrame lf = local_frame(x, z);
    const double p = lf.rho.p, q = lf.rho.q;
    if (p <= profile.p1 || p >= profile.p2) return 0.0;

    const double pq2 = p * p + q * q;
    const double grad_norm_sq = (p * p + lf.a * lf.a) / pq2;
    const double lap = 2.0 * p / pq2;
    const double d1 = profile.h2_prime(p);
    const double d2 = profile.h2_double_prime(p);

    const Complex rho = lf.rho.value();
    const Complex jump = psi_jump(rho, lf.t);
    const Complex jump_prime = psi_jump_prime(rho, lf.t);

    return (-2.0 * d1 * grad_norm_sq * jump_prime -
            (d2 * grad_norm_sq + d1 * lap) * jump) / kFourPi;
}

Complex transitional_source_general(const FieldPair& fp, const ProfileEvaluators& h2,
                                    const SpacetimePoint& x) {
    const Complex fj = fp.f2.value(x) - fp.f1.value(x);
    const Complex fj_dot = fp.f2.time_derivative(x) - fp.f1.time_derivative(x);
    const auto g2 = fp.f2.gradient(x);
    const auto g1 = fp.f1.gradient(x);
    const Vec3 gh = h2.gradient(x);
    const Complex grad_term = gh.x1 * (g2[0] - g1[0]) + gh.x2 * (g2[1] - g1[1]) +
                              gh.x3 * (g2[2] - g1[2]);
    return 2.0 * h2.time_derivative(x) * fj_dot - 2.0 * grad_term +
           h2.dalembertian(x) * fj;
}

Complex interpolated_source(const std::function<Complex(const SpacetimePoint&)>& g1,
                            const std::function<Complex(const SpacetimePoint&)>& g2,
                            const std::function<double(const SpacetimePoint&)>& h2,
                            const SpacetimePoint& x) {
    const double w2 = h2(x);
    return (1.0 - w2) * g1(x) + w2 * g2(x);
}

SurfaceLayerDensity abrupt_layer_coefficients(const Vec3& r, double t, double alpha,
                                              const EmissionCenter& z) {
    if (!(alpha > 0.0)) throw InvalidParameterError("layer coefficients require alpha > 0");
    const LocalFrame lf = local_frame({r, t}, z);
    if (std::fabs(lf.rho.p - alpha) > 1e-6 * alpha)
        throw InvalidParameterError("point not on the spheroid S_alpha");

    const double p = lf.rho.p, q = lf.rho.q;
    const double pq2 = p * p + q * q;
    const double grad_norm_sq = (p * p + lf.a * lf.a) / pq2;
    const double lap = 2.0 * p / pq2;

    const Complex rho = lf.rho.value();
    const Complex jump = psi_jump(rho, lf.t);
    const Complex jump_prime = psi_jump_prime(rho, lf.t);

    return {(-2.0 * grad_norm_sq * jump_prime - lap * jump) / kFourPi,
            -grad_norm_sq * jump / kFourPi};
}

std::vector<ReproductionResult> huygens_reproduction(const TransitionProfile& profile,
                                                     const EmissionCenter& z,
                                                     const std::vector<SpacetimePoint>& probes,
                                                     const ShellQuadratureSpec& spec) {
    z.validate();
    if (spec.n_p < 2 || spec.n_q < 2 || spec.n_phi < 2)
        throw InvalidParameterError("shell quadrature requires >= 2 nodes per axis");
    const double am = norm(z.a);

    const double dp = (profile.p2 - profile.p1) / spec.n_p;
    const double dq = 2.0 * am / spec.n_q;
    const double dphi = 2.0 * M_PI / spec.n_phi;
    const double cell = dp * dq * dphi;

    std::vector<ReproductionResult> results(probes.size());

    auto evaluate_probe = [&](std::size_t pi) {
        const SpacetimePoint& probe = probes[pi];
        // Partial sums per p-slice, accumulated in slice order, so the
        // result does not depend on how work is scheduled.
        Complex integral = 0.0;
        for (int i = 0; i < spec.n_p; ++i) {
            const double pp = profile.p1 + (i + 0.5) * dp;
            Complex slice = 0.0;
            for (int j = 0; j < spec.n_q; ++j) {
                const double qq = -am + (j + 0.5) * dq;
                const double jac = (pp * pp + qq * qq) / am;
                for (int k = 0; k < spec.n_phi; ++k) {
                    const double phi = (k + 0.5) * dphi;
                    const Vec3 node = z.r0 + from_oblate({pp, qq, phi}, z.a);
                    const double dist = norm(probe.r - node);
                    const double t_emit = probe.t - dist;
                    const Complex dens = shell_source_density({node, t_emit}, profile, z);
                    slice += dens / dist * jac;
                }
            }
            integral += slice * cell;
        }

        const Complex reconstructed = integral;
        const Complex analytic = interpolated_field(probe, profile, z);
        results[pi] = {probe, analytic, reconstructed,
                       std::abs(reconstructed - analytic) / std::abs(analytic)};
    };

    const std::size_t workers =
        std::min<std::size_t>(probes.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t pi = w; pi < probes.size(); pi += workers) evaluate_probe(pi);
        });
    for (auto& th : pool) th.join();
    return results;
}

} // namespace pulsebeam
