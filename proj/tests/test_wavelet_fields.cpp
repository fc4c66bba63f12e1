#include <doctest.h>

#include <cmath>

#include "pulsebeam/verification.hpp"
#include "pulsebeam/wavelet_fields.hpp"

using namespace pulsebeam;

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

TEST_CASE("cauchy kernel values and conjugation") {
    CHECK(std::abs(cauchy_kernel(ComplexTime{0.0, 1.0}) - Complex(1.0 / kTwoPi, 0.0)) < 1e-15);
    CHECK(std::abs(cauchy_kernel(ComplexTime{1.0, 0.0}) - Complex(0.0, -1.0 / kTwoPi)) < 1e-15);
    CHECK_THROWS_AS(cauchy_kernel(Complex(0.0, 0.0)), InvalidParameterError);

    CounterRng rng(3);
    for (int i = 0; i < 100; ++i) {
        const double t = rng.uniform(-5.0, 5.0), b = rng.uniform(0.1, 3.0);
        // Reflecting b conjugates the kernel up to sign: 1/(2 pi i conj(t~))
        // = -conj(1/(2 pi i t~)).
        const Complex k1 = cauchy_kernel(Complex(t, -b));
        const Complex k2 = cauchy_kernel(Complex(t, b));
        CHECK(std::abs(k1 + std::conj(k2)) < 1e-15);
    }
}

TEST_CASE("basic wavelet value") {
    // rho~ = 2 - i, t~ = -2i: 1 / (2 pi i (2-i)(-2-i)) = i / (10 pi).
    const Complex v = psi(Complex(2.0, -1.0), Complex(0.0, -2.0));
    CHECK(std::abs(v - Complex(0.0, 1.0 / (10.0 * M_PI))) < 1e-15);
    CHECK_THROWS_AS(psi(Complex(0.0, 0.0), Complex(1.0, -1.0)), SingularPointError);
    CHECK_THROWS_AS(psi(Complex(1.0, 0.0), Complex(1.0, 0.0)), SingularPointError);
}

TEST_CASE("partial-fraction identity") {
    CounterRng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const Complex rho(rng.uniform(0.1, 3.0), -rng.uniform(-0.9, 0.9));
        const Complex t(rng.uniform(-4.0, 4.0), -rng.uniform(1.0, 3.0));
        const Complex avg = 0.5 * (psi(rho, t) + psi(-rho, t));
        const Complex interior = psi_interior(rho, t);
        CHECK(std::abs(avg - interior) <= 1e-13 * std::abs(interior));
        const Complex jump = psi_jump(rho, t);
        const Complex half_diff = 0.5 * (psi(rho, t) - psi(-rho, t));
        CHECK(std::abs(jump - half_diff) <= 1e-13 * std::abs(jump));
    }
}

TEST_CASE("translated wavelet") {
    const EmissionCenter z{{0, 0, 0}, 0.0, {0, 0, 1}, 2.0};
    const BranchCut cut = BranchCut::standard_disk();

    SUBCASE("composes the distance and the kernel") {
        const Complex v = wavelet({{0, 0, 2}, 0.0}, z, cut);
        CHECK(std::abs(v - Complex(0.0, 1.0 / (10.0 * M_PI))) < 1e-15);
    }

    SUBCASE("translation covariance") {
        CounterRng rng(5);
        for (int i = 0; i < 200; ++i) {
            const Vec3 shift = rng.in_ball(3.0);
            const double tshift = rng.uniform(-2.0, 2.0);
            const SpacetimePoint x{rng.in_ball(4.0) + Vec3{0, 0, 2.5}, rng.uniform(-2.0, 2.0)};
            EmissionCenter zs = z;
            zs.r0 = z.r0 + shift;
            zs.t0 = z.t0 + tshift;
            Complex a, b;
            try {
                a = wavelet({x.r + shift, x.t + tshift}, zs, cut);
                b = wavelet(x, z, cut);
            } catch (const SingularPointError&) {
                continue;
            }
            CHECK(std::abs(a - b) <= 1e-13 * std::abs(b));
        }
    }

    SUBCASE("b < 0 is the reflected conjugate field") {
        // Negating b and reflecting through the disk plane (q -> -q)
        // conjugates rho~ and t~ jointly, so the past-cone wavelet is
        // -conj of the future-cone one at the mirrored point.
        EmissionCenter past = z;
        past.b = -z.b;
        for (const double zc : {1.5, 2.5, -1.8}) {
            for (const double t : {0.5, 1.5, -0.7}) {
                const Complex fwd = wavelet({{0.4, 0.0, zc}, t}, z, cut);
                const Complex mir = wavelet({{0.4, 0.0, -zc}, t}, past, cut);
                CHECK(std::abs(mir + std::conj(fwd)) <= 1e-13 * std::abs(fwd));
            }
        }
    }

    SUBCASE("non-timelike center is rejected") {
        EmissionCenter bad = z;
        bad.b = 0.5;
        CHECK_THROWS_AS(wavelet({{0, 0, 2}, 0.0}, bad, cut), InvalidParameterError);
    }
}

TEST_CASE("interior field and averaged field") {
    const Complex rho(2.0, -1.0);
    const Complex t(0.0, -2.0);
    // 1 / (2 pi i (-4 - (3 - 4i))) = 1 / (2 pi i (-7 + 4i))
    const Complex expected = 1.0 / (Complex(0.0, kTwoPi) * Complex(-7.0, 4.0));
    CHECK(std::abs(psi_interior(rho, t) - expected) < 1e-15);

    const EmissionCenter z{{0, 0, 0}, 0.0, {0, 0, 1}, 1.3};
    SUBCASE("dispatch by region") {
        // Exterior: plain wavelet; interior: branch-independent average.
        const SpacetimePoint far{{0, 0, 5}, 1.0};
        CHECK(std::abs(psi_avg(far, z, 2.0) -
                       wavelet(far, z, BranchCut::standard_disk())) < 1e-16);
        const SpacetimePoint in{{0, 0, 1}, 1.0};
        const Complex rho_in = complex_distance(in.r, z.a).value();
        CHECK(std::abs(psi_avg(in, z, 2.0) -
                       psi_interior(rho_in, Complex(1.0, -1.3))) < 1e-16);
    }
    SUBCASE("shell band is rejected") {
        const Vec3 on_shell = from_oblate({2.0, 0.3, 0.4}, z.a);
        CHECK_THROWS_AS(psi_avg({on_shell, 1.0}, z, 2.0), SingularPointError);
    }
    SUBCASE("average is branch independent in the interior") {
        const Complex a1 = psi_interior(rho, t);
        const Complex a2 = psi_interior(-rho, t);
        CHECK(std::abs(a1 - a2) < 1e-16);
    }
}

TEST_CASE("jump derivative matches finite differences") {
    CounterRng rng(13);
    for (int i = 0; i < 500; ++i) {
        const Complex rho(rng.uniform(0.2, 3.0), -rng.uniform(-0.9, 0.9));
        const Complex t(rng.uniform(-4.0, 4.0), -rng.uniform(1.05, 3.0));
        const double h = 1e-6 * std::abs(rho);
        const Complex fd = (psi_jump(rho + h, t) - psi_jump(rho - h, t)) / (2.0 * h);
        CHECK(std::abs(psi_jump_prime(rho, t) - fd) <= 1e-6 * std::abs(fd));
    }
}

TEST_CASE("time derivatives") {
    const Complex rho(2.0, -1.0);
    const Complex t(0.0, -2.0);
    CHECK(std::abs(psi_time_derivative(rho, t, 0) - psi(rho, t)) == 0.0);

    const Complex d1 = psi_time_derivative(rho, t, 1);
    const Complex expected = -1.0 / (Complex(0.0, kTwoPi) * rho * (t - rho) * (t - rho));
    CHECK(std::abs(d1 - expected) < 1e-15);

    for (int order = 1; order <= 3; ++order) {
        const double h = 1e-4;
        const Complex fd = (psi_time_derivative(rho, t + h, order - 1) -
                            psi_time_derivative(rho, t - h, order - 1)) /
                           (2.0 * h);
        const Complex an = psi_time_derivative(rho, t, order);
        CHECK(std::abs(an - fd) <= 1e-6 * std::abs(an));
    }
    CHECK_THROWS_AS(psi_time_derivative(rho, t, 4), InvalidParameterError);
}

TEST_CASE("extended field") {
    const Vec3 a{0, 0, 1};
    const double b = 2.0;
    const BranchCut cut = BranchCut::standard_disk();

    SUBCASE("zero source integrates to zero") {
        SourceDensityFn g{[](const SpacetimePoint&) { return 0.0; },
                          {-1, -1, -1}, {1, 1, 1}, -1.0, 1.0};
        const auto res = extended_field(g, a, b, {{0, 0, 5}, 6.0}, cut, {4, 4, 1});
        CHECK(std::abs(res.value) == 0.0);
    }

    SUBCASE("narrow bump reproduces the analytic wavelet") {
        const double sigma = 1e-2;
        const double w = 5.0 * sigma;
        const double nrm = 1.0 / std::pow(2.0 * M_PI * sigma * sigma, 2.0);
        SourceDensityFn g{[=](const SpacetimePoint& x) {
                              const double s2 = 2.0 * sigma * sigma;
                              return nrm * std::exp(-(dot(x.r, x.r) + x.t * x.t) / s2);
                          },
                          {-w, -w, -w}, {w, w, w}, -w, w};
        const SpacetimePoint probe{{0, 0, 5}, 6.0};
        const auto res = extended_field(g, a, b, probe, cut, {12, 12, 1});
        const Complex analytic = wavelet(probe, {{0, 0, 0}, 0.0, a, b}, cut);
        CHECK(std::abs(res.value - analytic) <= 1e-3 * std::abs(analytic));
        CHECK(res.error_estimate <= 1e-2 * std::abs(analytic));
    }

    SUBCASE("linearity") {
        const auto bump = [](Vec3 c) {
            return [c](const SpacetimePoint& x) {
                const Vec3 d = x.r - c;
                return std::exp(-25.0 * (dot(d, d) + x.t * x.t));
            };
        };
        const Vec3 lo{-1, -1, -1}, hi{1, 1, 1};
        SourceDensityFn g1{bump({0.3, 0, 0}), lo, hi, -1.0, 1.0};
        SourceDensityFn g2{bump({-0.2, 0.1, 0}), lo, hi, -1.0, 1.0};
        SourceDensityFn gsum{[&](const SpacetimePoint& x) { return g1.g(x) + g2.g(x); },
                             lo, hi, -1.0, 1.0};
        const SpacetimePoint probe{{0, 0, 6}, 7.0};
        const BoxQuadratureSpec spec{8, 8, 1};
        const auto r1 = extended_field(g1, a, b, probe, cut, spec);
        const auto r2 = extended_field(g2, a, b, probe, cut, spec);
        const auto rs = extended_field(gsum, a, b, probe, cut, spec);
        CHECK(std::abs(rs.value - r1.value - r2.value) <= 1e-12 * std::abs(rs.value));
    }
}

TEST_CASE("hyperfunction limit") {
    const auto gaussian = [](double t) { return std::exp(-t * t); };

    const double e1 = hyperfunction_limit_error(1e-2, gaussian, -60.0, 60.0, 1e-10);
    CHECK(e1 <= 0.02);
    const double e2 = hyperfunction_limit_error(5e-3, gaussian, -60.0, 60.0, 1e-10);
    CHECK(e2 < e1);
    CHECK(e1 / e2 >= 1.6);
    CHECK(e1 / e2 <= 2.4);

    // Poisson kernel mass: phi = 1 on a huge truncation window.
    const auto one = [](double) { return 1.0; };
    const double b = 0.01, half = 50.0;
    const double mass_err = hyperfunction_limit_error(b, one, -half, half, 1e-10);
    const double expected_defect = 1.0 - 2.0 / M_PI * std::atan(half / b);
    CHECK(mass_err == doctest::Approx(expected_defect).epsilon(1e-6));
}

TEST_CASE("beam metrics") {
    const Vec3 a{0, 0, 1};
    const double r_far = 100.0;

    const BeamMetrics m11 = beam_metrics({{0, 0, 0}, 0.0, a, 1.1}, r_far, r_far);
    const BeamMetrics m15 = beam_metrics({{0, 0, 0}, 0.0, a, 1.5}, r_far, r_far);
    const BeamMetrics m20 = beam_metrics({{0, 0, 0}, 0.0, a, 2.0}, r_far, r_far);
    CHECK(m11.angular_fwhm < m15.angular_fwhm);
    CHECK(m11.axial_pulse_width < m15.axial_pulse_width);
    CHECK(m15.axial_pulse_width < m20.axial_pulse_width);

    // Axisymmetry: rotating a about itself changes nothing; a rotated frame
    // with the same geometry gives the same metrics.
    const Vec3 a_rot{1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0)};
    const BeamMetrics m_rot = beam_metrics({{0, 0, 0}, 0.0, a_rot, 1.5}, r_far, r_far);
    CHECK(m_rot.angular_fwhm == doctest::Approx(m15.angular_fwhm).epsilon(1e-9));
    CHECK(m_rot.axial_pulse_width == doctest::Approx(m15.axial_pulse_width).epsilon(1e-9));

    CHECK_THROWS_AS(beam_metrics({{0, 0, 0}, 0.0, a, 1.5}, 1000.0, r_far),
                    PeakNotFoundError);
}
