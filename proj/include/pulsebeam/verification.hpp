#ifndef PULSEBEAM_VERIFICATION_HPP
#define PULSEBEAM_VERIFICATION_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "pulsebeam/complex_geometry.hpp"

namespace pulsebeam {

struct StencilSpec {
    double h = 1e-3;
    bool richardson = true;
};

// Counter-based generator: splitmix64 of (seed, counter).  Reproducible
// across platforms and safe to fork by offsetting the counter.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * ++counter_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    Vec3 unit_vector() {
        // Marsaglia rejection on the cube keeps the stream counter-based.
        for (;;) {
            const Vec3 v{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            const double n2 = dot(v, v);
            if (n2 > 1e-6 && n2 <= 1.0) return v / std::sqrt(n2);
        }
    }

    Vec3 in_ball(double radius) {
        for (;;) {
            const Vec3 v{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            if (dot(v, v) <= 1.0) return v * radius;
        }
    }

  private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

using SpacetimeField = std::function<Complex(const SpacetimePoint&)>;
using ScalarField = std::function<double(const Vec3&)>;

// Central-difference d'Alembertian (d_tt - Laplacian), 7-point spatial plus
// 3-point temporal stencil, optional one-level Richardson (h, h/2).
Complex fd_dalembertian(const SpacetimeField& f, const SpacetimePoint& x,
                        const StencilSpec& spec);

// Largest |d^2/dt^2 f| over the stencil, the per-probe scale the residual
// checks normalize by.
double fd_local_scale(const SpacetimeField& f, const SpacetimePoint& x,
                      const StencilSpec& spec);

Vec3 fd_gradient(const ScalarField& f, const Vec3& r, const StencilSpec& spec);

// Complex-valued field variant used by the shell oracles.
std::array<Complex, 3> fd_gradient_complex(const std::function<Complex(const Vec3&)>& f,
                                           const Vec3& r, const StencilSpec& spec);

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Adaptive Simpson; throws QuadratureError past max_depth.
QuadResult adaptive_quadrature_1d(const std::function<double(double)>& f, double lo,
                                  double hi, double tol, int max_depth = 40);

struct CheckReport {
    std::string name;
    int samples = 0;
    double max_rel_error = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::uint64_t seed = 0;

    // name, n_samples, max_rel_error (6 significant digits), threshold, verdict.
    std::string line() const;
};

// Named invariant batteries: identities | gradients | wave-operator | jumps
// | farfield | limits | shell | huygens.  Deterministic for a fixed seed.
CheckReport run_suite(const std::string& name, std::uint64_t seed = 1);

const std::vector<std::string>& suite_names();

} // namespace pulsebeam

#endif
