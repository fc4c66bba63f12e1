#include "pulsebeam/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "pulsebeam/shell_sources.hpp"
#include "pulsebeam/wavelet_fields.hpp"

namespace pulsebeam {

namespace {

Complex dalembertian_pass(const SpacetimeField& f, const SpacetimePoint& x, double h) {
    const double h2 = h * h;
    const Complex center = f(x);
    Complex lap = 0.0;
    const Vec3 axes[3] = {{h, 0, 0}, {0, h, 0}, {0, 0, h}};
    for (const Vec3& e : axes)
        lap += (f({x.r + e, x.t}) + f({x.r - e, x.t}) - 2.0 * center) / h2;
    const Complex tt = (f({x.r, x.t + h}) + f({x.r, x.t - h}) - 2.0 * center) / h2;
    return tt - lap;
}

} // namespace

Complex fd_dalembertian(const SpacetimeField& f, const SpacetimePoint& x,
                        const StencilSpec& spec) {
    if (!(spec.h > 0.0)) throw InvalidParameterError("stencil step must be positive");
    const Complex coarse = dalembertian_pass(f, x, spec.h);
    if (!spec.richardson) return coarse;
    const Complex fine = dalembertian_pass(f, x, spec.h / 2.0);
    return (4.0 * fine - coarse) / 3.0;
}

double fd_local_scale(const SpacetimeField& f, const SpacetimePoint& x,
                      const StencilSpec& spec) {
    const double h = spec.h;
    double scale = 0.0;
    const Vec3 offsets[7] = {{0, 0, 0}, {h, 0, 0}, {-h, 0, 0}, {0, h, 0},
                             {0, -h, 0}, {0, 0, h}, {0, 0, -h}};
    for (const Vec3& d : offsets) {
        const Vec3 r = x.r + d;
        const Complex tt =
            (f({r, x.t + h}) + f({r, x.t - h}) - 2.0 * f({r, x.t})) / (h * h);
        scale = std::max(scale, std::abs(tt));
    }
    return scale;
}

namespace {

Vec3 gradient_pass(const ScalarField& f, const Vec3& r, double h) {
    return {(f({r.x1 + h, r.x2, r.x3}) - f({r.x1 - h, r.x2, r.x3})) / (2 * h),
            (f({r.x1, r.x2 + h, r.x3}) - f({r.x1, r.x2 - h, r.x3})) / (2 * h),
            (f({r.x1, r.x2, r.x3 + h}) - f({r.x1, r.x2, r.x3 - h})) / (2 * h)};
}

} // namespace

Vec3 fd_gradient(const ScalarField& f, const Vec3& r, const StencilSpec& spec) {
    if (!(spec.h > 0.0)) throw InvalidParameterError("stencil step must be positive");
    const Vec3 coarse = gradient_pass(f, r, spec.h);
    if (!spec.richardson) return coarse;
    const Vec3 fine = gradient_pass(f, r, spec.h / 2.0);
    return (4.0 * fine - coarse) / 3.0;
}

std::array<Complex, 3> fd_gradient_complex(const std::function<Complex(const Vec3&)>& f,
                                           const Vec3& r, const StencilSpec& spec) {
    auto pass = [&](double h) {
        return std::array<Complex, 3>{
            (f({r.x1 + h, r.x2, r.x3}) - f({r.x1 - h, r.x2, r.x3})) / (2 * h),
            (f({r.x1, r.x2 + h, r.x3}) - f({r.x1, r.x2 - h, r.x3})) / (2 * h),
            (f({r.x1, r.x2, r.x3 + h}) - f({r.x1, r.x2, r.x3 - h})) / (2 * h)};
    };
    const auto coarse = pass(spec.h);
    if (!spec.richardson) return coarse;
    const auto fine = pass(spec.h / 2.0);
    return {(4.0 * fine[0] - coarse[0]) / 3.0, (4.0 * fine[1] - coarse[1]) / 3.0,
            (4.0 * fine[2] - coarse[2]) / 3.0};
}

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double fm, double whole, double tol, int depth,
                     double& err_acc) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol) {
        err_acc += std::fabs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    if (depth <= 0) throw QuadratureError("adaptive quadrature: max depth exceeded");
    return adaptive_step(f, a, fa, m, fm, flm, left, tol / 2.0, depth - 1, err_acc) +
           adaptive_step(f, m, fm, b, fb, frm, right, tol / 2.0, depth - 1, err_acc);
}

} // namespace

QuadResult adaptive_quadrature_1d(const std::function<double(double)>& f, double lo,
                                  double hi, double tol, int max_depth) {
    if (!(hi > lo)) throw InvalidParameterError("quadrature bounds require hi > lo");
    const double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
    const double whole = simpson(lo, fa, hi, fb, fm);
    double err = 0.0;
    const double value = adaptive_step(f, lo, fa, hi, fb, fm, whole, tol, max_depth, err);
    return {value, err};
}

std::string CheckReport::line() const {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s\t%d\t%.5e\t%g\t%s", name.c_str(), samples,
                  max_rel_error, threshold, pass ? "PASS" : "FAIL");
    return buf;
}

// ---------------------------------------------------------------------------
// Invariant suites
// ---------------------------------------------------------------------------

namespace {

double distance_to_disk(const Vec3& r, const Vec3& a) {
    const double am = norm(a);
    const double z = dot(a, r) / am;
    const double rho = std::sqrt(std::max(dot(r, r) - z * z, 0.0));
    if (rho <= am) return std::fabs(z);
    return std::hypot(rho - am, z);
}

// Random source vector and observer with margins from the singular set.
struct SampleGeometry {
    Vec3 a;
    Vec3 r;
    double am;
};

SampleGeometry sample_geometry(CounterRng& rng, double circle_margin, double disk_margin) {
    for (;;) {
        const double am = rng.uniform(0.4, 1.6);
        const Vec3 a = rng.unit_vector() * am;
        const Vec3 r = rng.in_ball(4.0 * am);
        if (distance_to_branch_circle(r, a) < circle_margin * am) continue;
        if (disk_margin > 0.0 && distance_to_disk(r, a) < disk_margin * am) continue;
        return {a, r, am};
    }
}

CheckReport suite_identities(std::uint64_t seed) {
    CounterRng rng(seed);
    const int n = 10000;
    double worst = 0.0;
    bool pass = true;
    for (int i = 0; i < n; ++i) {
        const auto s = sample_geometry(rng, 1e-3, 0.0);
        const ComplexDistance cd = complex_distance(s.r, s.a);
        const double rr = dot(s.r, s.r), aa = s.am * s.am;
        const double e1 = std::fabs(cd.p * cd.p - cd.q * cd.q - (rr - aa)) / (rr + aa);
        const double e2 = std::fabs(cd.p * cd.q - dot(s.a, s.r)) /
                          (s.am * norm(s.r) + aa);
        worst = std::max({worst, e1, e2});
        if (cd.p < 0.0) pass = false;
        if (cd.p * cd.p > rr * (1.0 + 1e-12)) pass = false;
        if (cd.q * cd.q > aa * (1.0 + 1e-12)) pass = false;
    }
    // Limit a -> 0: the complex distance collapses to the real distance.
    for (int i = 0; i < 100; ++i) {
        const Vec3 a = rng.unit_vector() * 1e-8;
        const Vec3 r = rng.in_ball(3.0) + Vec3{0.0, 0.0, 2.0};
        const ComplexDistance cd = complex_distance(r, a);
        const double rm = norm(r);
        if (std::abs(cd.value() - Complex(rm, 0.0)) > 1e-7 * (1.0 + rm)) pass = false;
    }
    // Axial points: q = +-a exactly up to rounding.
    for (int i = 0; i < 50; ++i) {
        const Vec3 dir = rng.unit_vector();
        const double am = rng.uniform(0.5, 1.5);
        const double z = rng.uniform(0.2, 3.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
        const ComplexDistance cd = complex_distance(dir * z, dir * am);
        if (std::fabs(std::fabs(cd.q) - am) > 1e-12 * am) pass = false;
    }
    pass = pass && worst <= 1e-12;
    return {"identities", n, worst, 1e-12, pass, seed};
}

CheckReport suite_gradients(std::uint64_t seed) {
    CounterRng rng(seed);
    const int n = 1000;
    double worst = 0.0;
    bool pass = true;
    for (int i = 0; i < n; ++i) {
        const auto s = sample_geometry(rng, 0.3, 0.3);
        const double scale = s.am + norm(s.r);
        const auto p_of = [&](const Vec3& r) { return complex_distance(r, s.a).p; };
        const auto q_of = [&](const Vec3& r) { return complex_distance(r, s.a).q; };

        const Vec3 g = grad_p(s.r, s.a);
        const Vec3 g_fd = fd_gradient(p_of, s.r, {1e-5 * scale, true});
        worst = std::max(worst, norm(g - g_fd) / norm(g_fd));

        // Laplacian by central second differences, one Richardson level.
        const auto lap_fd = [&](double h) {
            double acc = 0.0;
            const Vec3 axes[3] = {{h, 0, 0}, {0, h, 0}, {0, 0, h}};
            const double c = p_of(s.r);
            for (const Vec3& e : axes)
                acc += (p_of(s.r + e) + p_of(s.r - e) - 2.0 * c) / (h * h);
            return acc;
        };
        const double h = 1e-3 * scale;
        const double lap_oracle = (4.0 * lap_fd(h / 2.0) - lap_fd(h)) / 3.0;
        worst = std::max(worst,
                         std::fabs(laplacian_p(s.r, s.a) - lap_oracle) / std::fabs(lap_oracle));

        const double nsq = grad_p_norm_sq(s.r, s.a);
        if (std::fabs(dot(g, g) - nsq) > 1e-12 * nsq) pass = false;

        const Vec3 gq = fd_gradient(q_of, s.r, {1e-5 * scale, true});
        if (std::fabs(dot(g, gq)) > 1e-10 * std::max(1.0, norm(g) * norm(gq))) pass = false;
    }
    pass = pass && worst <= 1e-6;
    return {"gradients", n, worst, 1e-6, pass, seed};
}

CheckReport suite_wave_operator(std::uint64_t seed) {
    CounterRng rng(seed);
    const int n = 200;
    double worst = 0.0;
    const BranchCut cut = BranchCut::standard_disk();

    for (int i = 0; i < n; ++i) {
        const double am = rng.uniform(0.5, 1.5);
        const EmissionCenter z{{}, 0.0, rng.unit_vector() * am, rng.uniform(1.2, 2.0) * am};
        Vec3 r;
        do {
            r = rng.in_ball(4.0 * am);
        } while (distance_to_disk(r, z.a) < 0.5 * am);
        const double t = rng.uniform(-2.0, 2.0) * (am + z.b);
        const StencilSpec spec{1e-3 * (am + z.b), true};
        const SpacetimeField f = [&](const SpacetimePoint& x) { return wavelet(x, z, cut); };
        const double residual = std::abs(fd_dalembertian(f, {r, t}, spec));
        worst = std::max(worst, residual / fd_local_scale(f, {r, t}, spec));
    }

    // Same annihilation check for the averaged field off S_alpha.
    for (int i = 0; i < n; ++i) {
        const double am = rng.uniform(0.5, 1.5);
        const EmissionCenter z{{}, 0.0, rng.unit_vector() * am, rng.uniform(1.2, 2.0) * am};
        const double alpha = 2.0 * am;
        Vec3 r;
        double p;
        do {
            r = rng.in_ball(4.0 * am);
            p = std::sqrt(Complex(dot(r, r) - am * am, -2.0 * dot(z.a, r))).real();
        } while (std::fabs(p - alpha) < 0.1 * am ||
                 distance_to_branch_circle(r, z.a) < 0.1 * am);
        const double t = rng.uniform(-2.0, 2.0) * (am + z.b);
        const StencilSpec spec{1e-3 * (am + z.b), true};
        const SpacetimeField f = [&](const SpacetimePoint& x) {
            return psi_avg(x, z, alpha);
        };
        const double residual = std::abs(fd_dalembertian(f, {r, t}, spec));
        worst = std::max(worst, residual / fd_local_scale(f, {r, t}, spec));
    }
    return {"wave-operator", 2 * n, worst, 1e-4, worst <= 1e-4, seed};
}

CheckReport suite_jumps(std::uint64_t seed) {
    CounterRng rng(seed);
    const int n = 1000;
    double worst = 0.0;
    bool pass = true;

    for (int i = 0; i < n; ++i) {
        const double am = rng.uniform(0.5, 1.5);
        const double b = rng.uniform(1.1, 2.5) * am;
        const Complex rho(rng.uniform(0.1, 3.0) * am, -rng.uniform(-0.95, 0.95) * am);
        const Complex t(rng.uniform(-3.0, 3.0) * (am + b), -b);

        const Complex half_diff = 0.5 * (psi(rho, t) - psi(-rho, t));
        const Complex jump = psi_jump(rho, t);
        worst = std::max(worst, std::abs(jump - half_diff) / std::abs(jump));

        const Complex half_sum = 0.5 * (psi(rho, t) + psi(-rho, t));
        const Complex interior = psi_interior(rho, t);
        worst = std::max(worst, std::abs(interior - half_sum) / std::abs(interior));

        // Derivative in rho~ against central differences along the real part.
        const double h = 1e-5 * std::abs(rho);
        const Complex fd = (psi_jump(rho + h, t) - psi_jump(rho - h, t)) / (2.0 * h);
        const Complex prime = psi_jump_prime(rho, t);
        if (std::abs(prime - fd) / std::abs(fd) > 1e-6) pass = false;
    }

    // Straddle jump across S_alpha and continuity across the apron.
    const EmissionCenter z{{}, 0.0, {0.0, 0.0, 1.0}, 1.3};
    const double alpha = 2.0;
    for (const double eps : {1e-4, 1e-5}) {
        for (int i = 0; i < 50; ++i) {
            const double q = rng.uniform(-0.9, 0.9);
            const double phi = rng.uniform(0.0, 2.0 * M_PI);
            const double t = rng.uniform(0.0, 3.0);
            const SpacetimePoint out{from_oblate({alpha + eps, q, phi}, z.a), t};
            const SpacetimePoint in{from_oblate({alpha - eps, q, phi}, z.a), t};
            const Complex jump_fd = psi_avg(out, z, alpha) - psi_avg(in, z, alpha);
            const Complex rho = complex_distance(from_oblate({alpha, q, phi}, z.a), z.a).value();
            const Complex jump = psi_jump(rho, Complex(t, -z.b));
            if (std::abs(jump_fd - jump) > 1.0 * eps) pass = false;

            // Apron plane segment a <= r <= sqrt(alpha^2 + a^2), z = 0.
            const double rc = rng.uniform(1.05, 0.95 * std::sqrt(alpha * alpha + 1.0));
            const Vec3 above{rc * std::cos(phi), rc * std::sin(phi), eps};
            const Vec3 below{rc * std::cos(phi), rc * std::sin(phi), -eps};
            const Complex da = psi_avg({above, t}, z, alpha) - psi_avg({below, t}, z, alpha);
            if (std::abs(da) > 1.0 * eps) pass = false;
        }
    }

    // Boundedness of the average near the branch circle where the plain
    // wavelet diverges.  delta is |rho~| = sqrt(p^2 + q^2), the natural
    // distance in the complexified geometry; |Psi| ~ 1/delta there while the
    // branch average stays O(1).
    double max_psi[2] = {0.0, 0.0}, max_avg[2] = {0.0, 0.0};
    const double deltas[2] = {1e-1, 1e-3};
    for (int d = 0; d < 2; ++d) {
        for (int i = 0; i < 200; ++i) {
            const double phi = rng.uniform(0.0, 2.0 * M_PI);
            const double gamma = rng.uniform(-0.49 * M_PI, 0.49 * M_PI);
            const Vec3 pt = from_oblate(
                {deltas[d] * std::cos(gamma), deltas[d] * std::sin(gamma), phi}, z.a);
            const double t = rng.uniform(0.0, 2.0);
            max_psi[d] = std::max(max_psi[d], std::abs(wavelet({pt, t}, z,
                                                               BranchCut::standard_disk())));
            max_avg[d] = std::max(max_avg[d], std::abs(psi_avg({pt, t}, z, alpha)));
        }
    }
    if (!(max_psi[1] >= 50.0 * max_psi[0])) pass = false;
    if (!(max_avg[1] <= 10.0 * max_avg[0])) pass = false;

    pass = pass && worst <= 1e-13;
    return {"jumps", n, worst, 1e-13, pass, seed};
}

CheckReport suite_farfield(std::uint64_t seed) {
    CounterRng rng(seed);
    const int n = 100;
    double worst = 0.0;
    bool pass = true;
    for (int i = 0; i < n; ++i) {
        const double am = rng.uniform(0.5, 1.5);
        const Vec3 a = rng.unit_vector() * am;
        const Vec3 dir = rng.unit_vector();
        const double rm = 100.0 * am;
        const Vec3 r = dir * rm;
        const ComplexDistance cd = complex_distance(r, a);
        const double cos_theta = dot(a, r) / (am * rm);
        const double err = std::abs(cd.value() - Complex(rm, -am * cos_theta));
        worst = std::max(worst, err / (am * am / rm));

        // Cauchy-tail decay: |Psi| * |t| approaches 1 / (2 pi |rho~|).
        const double b = rng.uniform(1.2, 2.0) * am;
        const double t = 1e4 * (am + b) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
        const double lhs = std::abs(psi(cd.value(), Complex(t, -b))) * std::fabs(t);
        const double rhs = 1.0 / (2.0 * M_PI * std::abs(cd.value()));
        if (std::fabs(lhs - rhs) > 0.01 * rhs) pass = false;
    }
    pass = pass && worst <= 1.0;
    return {"farfield", n, worst, 1.0, pass, seed};
}

CheckReport suite_limits(std::uint64_t seed) {
    const auto gaussian = [](double t) { return std::exp(-t * t); };
    const double e1 = hyperfunction_limit_error(1e-2, gaussian, -60.0, 60.0, 1e-10);
    const double e2 = hyperfunction_limit_error(5e-3, gaussian, -60.0, 60.0, 1e-10);
    const double ratio = e1 / e2;
    const bool pass = e1 <= 0.02 && ratio >= 1.6 && ratio <= 2.4;
    return {"limits", 2, e1, 0.02, pass, seed};
}

CheckReport suite_shell(std::uint64_t seed) {
    CounterRng rng(seed);
    const EmissionCenter z{{}, 0.0, rng.unit_vector(), 1.3};
    const TransitionProfile profile(1.8, 2.2);
    const int n = 100;
    double worst = 0.0;
    bool pass = true;

    const StencilSpec spec{1e-3 * (1.0 + z.b), true};
    for (int i = 0; i < n; ++i) {
        const double p = rng.uniform(profile.p1 + 0.06, profile.p2 - 0.06);
        const double q = rng.uniform(-0.9, 0.9);
        const double phi = rng.uniform(0.0, 2.0 * M_PI);
        const double t = rng.uniform(-1.0, 4.0);
        const SpacetimePoint x{from_oblate({p, q, phi}, z.a), t};

        const SpacetimeField f = [&](const SpacetimePoint& pt) {
            return interpolated_field(pt, profile, z);
        };
        const Complex box = fd_dalembertian(f, x, spec);
        const Complex expected = 4.0 * M_PI * shell_source_density(x, profile, z);
        worst = std::max(worst, std::abs(box - expected) / std::abs(expected));
    }

    // Exact support and the specialization chain.
    for (int i = 0; i < 50; ++i) {
        const double q = rng.uniform(-0.95, 0.95);
        const double phi = rng.uniform(0.0, 2.0 * M_PI);
        const double t = rng.uniform(-1.0, 4.0);
        const double p_out = (i % 2 == 0) ? rng.uniform(0.2, profile.p1 - 0.01)
                                          : rng.uniform(profile.p2 + 0.01, 4.0);
        const SpacetimePoint outside{from_oblate({p_out, q, phi}, z.a), t};
        if (shell_source_density(outside, profile, z) != Complex(0.0, 0.0)) pass = false;

        const double p_in = rng.uniform(profile.p1 + 0.02, profile.p2 - 0.02);
        const SpacetimePoint x{from_oblate({p_in, q, phi}, z.a), t};
        const auto field_of = [&z](bool exterior) {
            auto value = [&z, exterior](const SpacetimePoint& pt) {
                const Complex rho = complex_distance(pt.r - z.r0, z.a).value();
                const Complex tt(pt.t - z.t0, -z.b);
                return exterior ? psi(rho, tt) : psi_interior(rho, tt);
            };
            const double h = 1e-5 * (1.0 + z.b);
            FieldEvaluators ev;
            ev.value = value;
            ev.gradient = [value, h](const SpacetimePoint& pt) {
                return fd_gradient_complex(
                    [&](const Vec3& r) { return value({r, pt.t}); }, pt.r, {h, true});
            };
            ev.time_derivative = [value, h](const SpacetimePoint& pt) {
                return (value({pt.r, pt.t + h}) - value({pt.r, pt.t - h})) / (2.0 * h);
            };
            return ev;
        };
        // Static profile as a spacetime function of p.
        ProfileEvaluators h2;
        h2.value = [&](const SpacetimePoint& pt) {
            return profile.h2(complex_distance(pt.r - z.r0, z.a).p);
        };
        h2.time_derivative = [](const SpacetimePoint&) { return 0.0; };
        h2.gradient = [&](const SpacetimePoint& pt) {
            const ComplexDistance cd = complex_distance(pt.r - z.r0, z.a);
            return profile.h2_prime(cd.p) * grad_p(pt.r - z.r0, z.a);
        };
        h2.dalembertian = [&](const SpacetimePoint& pt) {
            const Vec3 dr = pt.r - z.r0;
            const ComplexDistance cd = complex_distance(dr, z.a);
            return -(profile.h2_double_prime(cd.p) * grad_p_norm_sq(dr, z.a) +
                     profile.h2_prime(cd.p) * laplacian_p(dr, z.a));
        };
        const FieldPair fp{field_of(false), field_of(true)};
        const Complex general = transitional_source_general(fp, h2, x);
        const Complex special = 4.0 * M_PI * shell_source_density(x, profile, z);
        // The general route uses FD evaluators for grad fJ, so it carries the
        // oracle tolerance rather than the 1e-13 exact-specialization one;
        // the exact chain is asserted separately in the unit tests.
        if (std::abs(general - special) / std::abs(special) > 1e-4) pass = false;
    }

    pass = pass && worst <= 1e-3;
    return {"shell", n, worst, 1e-3, pass, seed};
}

CheckReport suite_huygens(std::uint64_t seed) {
    CounterRng rng(seed);
    const EmissionCenter z{{}, 0.0, {0.0, 0.0, 1.0}, 1.3};
    const TransitionProfile profile(1.8, 2.2);

    std::vector<SpacetimePoint> probes;
    for (int i = 0; i < 8; ++i) {
        const Vec3 dir = rng.unit_vector();
        const double rm = rng.uniform(5.0, 8.0);
        probes.push_back({dir * rm, rm});
    }

    const auto coarse = huygens_reproduction(profile, z, probes, {64, 32, 64});
    const auto fine = huygens_reproduction(profile, z, probes, {128, 64, 128});
    double worst = 0.0;
    bool pass = true;
    for (std::size_t i = 0; i < probes.size(); ++i) {
        worst = std::max(worst, coarse[i].rel_error);
        if (fine[i].rel_error >= coarse[i].rel_error) pass = false;
    }
    pass = pass && worst <= 0.05;
    return {"huygens", static_cast<int>(probes.size()), worst, 0.05, pass, seed};
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "identities", "gradients", "wave-operator", "jumps",
        "farfield",   "limits",    "shell",         "huygens"};
    return names;
}

CheckReport run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "identities") return suite_identities(seed);
    if (name == "gradients") return suite_gradients(seed);
    if (name == "wave-operator") return suite_wave_operator(seed);
    if (name == "jumps") return suite_jumps(seed);
    if (name == "farfield") return suite_farfield(seed);
    if (name == "limits") return suite_limits(seed);
    if (name == "shell") return suite_shell(seed);
    if (name == "huygens") return suite_huygens(seed);
    throw UnknownSuiteError("unknown suite: " + name);
}

} // namespace pulsebeam
