#include "pulsebeam/wavelet_fields.hpp"

#include <cmath>
#include <vector>

#include "pulsebeam/verification.hpp"

namespace pulsebeam {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
const Complex kTwoPiI(0.0, kTwoPi);

} // namespace

void EmissionCenter::validate() const {
    if (!timelike())
        throw InvalidParameterError("emission center requires |b| > |a|");
}

Complex cauchy_kernel(Complex t) {
    if (std::abs(t) == 0.0)
        throw InvalidParameterError("Cauchy kernel: zero argument");
    return 1.0 / (kTwoPiI * t);
}

Complex cauchy_kernel(const ComplexTime& t) { return cauchy_kernel(t.value()); }

Complex psi(Complex rho, Complex t) {
    const double scale = std::abs(rho) + std::abs(t);
    if (std::abs(rho) < 1e-14 * scale || std::abs(t - rho) < 1e-14 * scale)
        throw SingularPointError("wavelet evaluated on its singular set");
    return 1.0 / (kTwoPiI * rho * (t - rho));
}

Complex wavelet(const SpacetimePoint& x, const EmissionCenter& z, const BranchCut& cut) {
    z.validate();
    const ComplexDistance rho = branch_distance(x.r - z.r0, z.a, cut);
    return psi(rho.value(), Complex(x.t - z.t0, -z.b));
}

Complex psi_interior(Complex rho, Complex t) {
    return 1.0 / (kTwoPiI * (t * t - rho * rho));
}

Complex psi_avg(const SpacetimePoint& x, const EmissionCenter& z, double alpha) {
    z.validate();
    const Vec3 dr = x.r - z.r0;
    const Complex t(x.t - z.t0, -z.b);
    switch (region_classify(dr, z.a, alpha)) {
        case Region::Shell:
            throw SingularPointError("psi_avg within the S_alpha guard band");
        case Region::Exterior:
            return psi(complex_distance(dr, z.a).value(), t);
        default: {
            // Interior field depends on rho~ only through rho~^2, which is
            // available without the square root; this keeps the average
            // finite arbitrarily close to the branch circle.
            const double am = norm(z.a);
            const Complex rho_sq(dot(dr, dr) - am * am, -2.0 * dot(z.a, dr));
            return 1.0 / (kTwoPiI * (t * t - rho_sq));
        }
    }
}

Complex psi_jump(Complex rho, Complex t) {
    return t / (kTwoPiI * rho * (t * t - rho * rho));
}

Complex psi_jump_prime(Complex rho, Complex t) {
    const Complex d = t * t - rho * rho;
    return -t * (t * t - 3.0 * rho * rho) / (kTwoPiI * rho * rho * d * d);
}

Complex psi_time_derivative(Complex rho, Complex t, int order) {
    if (order < 0 || order > 3)
        throw InvalidParameterError("psi_time_derivative supports orders 0..3");
    const double scale = std::abs(rho) + std::abs(t);
    if (std::abs(rho) < 1e-14 * scale || std::abs(t - rho) < 1e-14 * scale)
        throw SingularPointError("wavelet evaluated on its singular set");
    static const double factorial[4] = {1.0, 1.0, 2.0, 6.0};
    const double sign = (order % 2 == 0) ? 1.0 : -1.0;
    return sign * factorial[order] / (kTwoPiI * rho * std::pow(t - rho, order + 1));
}

namespace {

Complex box_quadrature_pass(const SourceDensityFn& g, const Vec3& a, double b,
                            const SpacetimePoint& x, const BranchCut& cut,
                            int ns, int nt) {
    const double d1 = (g.hi.x1 - g.lo.x1) / ns;
    const double d2 = (g.hi.x2 - g.lo.x2) / ns;
    const double d3 = (g.hi.x3 - g.lo.x3) / ns;
    const double dt = (g.t_hi - g.t_lo) / nt;
    const double cell = d1 * d2 * d3 * dt;
    Complex acc = 0.0;
    for (int i = 0; i < ns; ++i) {
        const double x1 = g.lo.x1 + (i + 0.5) * d1;
        for (int j = 0; j < ns; ++j) {
            const double x2 = g.lo.x2 + (j + 0.5) * d2;
            for (int k = 0; k < ns; ++k) {
                const double x3 = g.lo.x3 + (k + 0.5) * d3;
                const Vec3 rp{x1, x2, x3};
                for (int m = 0; m < nt; ++m) {
                    const double tp = g.t_lo + (m + 0.5) * dt;
                    const double w = g.g({rp, tp});
                    if (w == 0.0) continue;
                    Complex kern;
                    try {
                        kern = psi(branch_distance(x.r - rp, a, cut).value(),
                                   Complex(x.t - tp, -b));
                    } catch (const SingularPointError& e) {
                        throw SingularEncounterError(e.what());
                    }
                    acc += kern * w;
                }
            }
        }
    }
    return acc * cell;
}

} // namespace

ExtendedFieldResult extended_field(const SourceDensityFn& g, const Vec3& a, double b,
                                   const SpacetimePoint& x, const BranchCut& cut,
                                   const BoxQuadratureSpec& spec) {
    if (std::fabs(b) <= norm(a))
        throw InvalidParameterError("extended_field requires |b| > |a|");
    if (spec.n_space < 2 || spec.n_time < 2 || spec.refinements < 1)
        throw InvalidParameterError("quadrature spec requires >= 2 nodes and >= 1 refinement");

    Complex prev = box_quadrature_pass(g, a, b, x, cut, spec.n_space, spec.n_time);
    Complex cur = prev;
    int ns = spec.n_space, nt = spec.n_time;
    for (int level = 0; level < spec.refinements; ++level) {
        ns *= 2;
        nt *= 2;
        prev = cur;
        cur = box_quadrature_pass(g, a, b, x, cut, ns, nt);
    }
    return {cur, std::abs(cur - prev)};
}

double hyperfunction_limit_error(double b, const std::function<double(double)>& phi,
                                 double t_lo, double t_hi, double tol) {
    if (!(b > 0.0)) throw InvalidParameterError("hyperfunction limit requires b > 0");
    const auto integrand = [&](double t) {
        return b / (M_PI * (t * t + b * b)) * phi(t);
    };
    const QuadResult q = adaptive_quadrature_1d(integrand, t_lo, t_hi, tol);
    return std::fabs(q.value - phi(0.0));
}

namespace {

struct PeakScan {
    int index = -1;
    double fwhm = 0.0;
};

// Peak position and full width at half maximum of a sampled profile.
// Requires an interior peak with both half crossings inside the scan.
PeakScan peak_and_fwhm(const std::vector<double>& values, double step) {
    PeakScan out;
    int imax = 0;
    for (int i = 1; i < static_cast<int>(values.size()); ++i)
        if (values[i] > values[imax]) imax = i;
    if (imax == 0 || imax == static_cast<int>(values.size()) - 1)
        throw PeakNotFoundError("pulse peak not interior to the scan window");
    const double half = 0.5 * values[imax];

    auto cross = [&](int dir) {
        for (int i = imax; i >= 0 && i < static_cast<int>(values.size()); i += dir) {
            if (values[i] < half) {
                // linear interpolation between i-dir and i
                const double v0 = values[i - dir], v1 = values[i];
                const double frac = (v0 - half) / (v0 - v1);
                return (std::fabs(i - dir - imax) + frac) * step;
            }
        }
        throw PeakNotFoundError("half-maximum crossing outside the scan window");
    };

    out.index = imax;
    out.fwhm = cross(-1) + cross(+1);
    return out;
}

} // namespace

BeamMetrics beam_metrics(const EmissionCenter& z, double t_obs, double r_far) {
    z.validate();
    const double am = norm(z.a);
    const double span = am + std::fabs(z.b);
    const Vec3 axis = (z.b >= 0.0 ? 1.0 : -1.0) * normalized(z.a);
    const BranchCut cut = BranchCut::standard_disk();

    // Temporal scan at the on-axis far point.
    const SpacetimePoint on_axis{z.r0 + r_far * axis, 0.0};
    const int nt = 4001;
    const double t_half_window = 8.0 * span;
    const double dt = 2.0 * t_half_window / (nt - 1);
    std::vector<double> profile(nt);
    for (int i = 0; i < nt; ++i) {
        const double t = t_obs - t_half_window + i * dt;
        profile[i] = std::abs(wavelet({on_axis.r, t}, z, cut));
    }
    const PeakScan temporal = peak_and_fwhm(profile, dt);
    const double t_peak = t_obs - t_half_window + temporal.index * dt;

    // Angular scan at radius r_far at the peak time.
    const auto frame = orthonormal_frame(axis);
    const int na = 4001;
    const double theta_max = 0.999 * M_PI;
    const double dtheta = theta_max / (na - 1);
    std::vector<double> angular(na);
    for (int i = 0; i < na; ++i) {
        const double theta = i * dtheta;
        const Vec3 pos = z.r0 + r_far * (std::cos(theta) * axis + std::sin(theta) * frame[0]);
        angular[i] = std::abs(wavelet({pos, t_peak}, z, cut));
    }
    // The angular peak sits on the axis; mirror it so the FWHM scan sees an
    // interior maximum.
    std::vector<double> mirrored(2 * na - 1);
    for (int i = 0; i < na; ++i) {
        mirrored[na - 1 + i] = angular[i];
        mirrored[na - 1 - i] = angular[i];
    }
    const PeakScan ang = peak_and_fwhm(mirrored, dtheta);

    return {ang.fwhm, temporal.fwhm};
}

} // namespace pulsebeam
