#include "pulsebeam/complex_geometry.hpp"

#include <cmath>

namespace pulsebeam {

namespace {

constexpr double kSingularFactor = 1e-9;   // eps_sing = 1e-9 * (a + r)
constexpr double kBandFactor = 1e-6;       // classification / guard bands

double magnitude_or_throw(const Vec3& a) {
    const double am = norm(a);
    if (am == 0.0) throw ZeroSourceVectorError("source vector a must be nonzero");
    return am;
}

} // namespace

BranchCut BranchCut::upper_spheroid(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw InvalidParameterError("spheroidal cut requires finite alpha > 0");
    return {CutKind::UpperSpheroid, alpha};
}

BranchCut BranchCut::lower_spheroid(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw InvalidParameterError("spheroidal cut requires finite alpha > 0");
    return {CutKind::LowerSpheroid, alpha};
}

double distance_to_branch_circle(const Vec3& r, const Vec3& a) {
    const double am = magnitude_or_throw(a);
    const double z = dot(a, r) / am;
    const double rr = dot(r, r);
    const double rho_sq = std::max(rr - z * z, 0.0);
    return std::hypot(std::sqrt(rho_sq) - am, z);
}

ComplexDistance complex_distance(const Vec3& r, const Vec3& a) {
    const double am = magnitude_or_throw(a);
    const double rm = norm(r);
    if (distance_to_branch_circle(r, a) < kSingularFactor * (am + rm))
        throw SingularPointError("observer on the branch circle C");

    const Complex w(dot(r, r) - am * am, -2.0 * dot(a, r));
    const Complex rho = std::sqrt(w);            // principal root, Re >= 0
    double p = rho.real();
    double q = -rho.imag();
    // On the open disk the principal root of a negative real lands on the
    // z -> 0- side; the convention here is the z -> 0+ limit, q > 0.
    if (p == 0.0) q = std::fabs(q);
    return {p, q};
}

ComplexDistance branch_distance(const Vec3& r, const Vec3& a, const BranchCut& cut) {
    const ComplexDistance rho = complex_distance(r, a);
    if (cut.kind == CutKind::StandardDisk) return rho;

    const double z = dot(a, r) / norm(a);
    const bool swept = rho.p < cut.alpha &&
                       (cut.kind == CutKind::UpperSpheroid ? z > 0.0 : z < 0.0);
    return swept ? rho.negated() : rho;
}

OblatePoint to_oblate(const Vec3& r, const Vec3& a) {
    const ComplexDistance rho = complex_distance(r, a);
    const auto frame = orthonormal_frame(a);
    double phi = std::atan2(dot(r, frame[1]), dot(r, frame[0]));
    if (phi < 0.0) phi += 2.0 * M_PI;
    return {rho.p, rho.q, phi};
}

Vec3 from_oblate(const OblatePoint& o, const Vec3& a) {
    const double am = magnitude_or_throw(a);
    if (o.p < 0.0 || std::fabs(o.q) > am)
        throw InvalidParameterError("oblate point outside p >= 0, |q| <= a");
    const double rho_cyl = std::sqrt((am * am + o.p * o.p) * (am * am - o.q * o.q)) / am;
    const double z = o.p * o.q / am;
    const auto frame = orthonormal_frame(a);
    return frame[0] * (rho_cyl * std::cos(o.phi)) +
           frame[1] * (rho_cyl * std::sin(o.phi)) +
           frame[2] * z;
}

namespace {

// Shared guard for the gradient quantities: p is non-differentiable on the
// open disk and fields diverge on C.
ComplexDistance differentiable_distance(const Vec3& r, const Vec3& a) {
    const ComplexDistance rho = complex_distance(r, a);
    if (rho.p < kBandFactor * norm(a))
        throw SingularPointError("gradients of p undefined on the disk D");
    return rho;
}

} // namespace

Vec3 grad_p(const Vec3& r, const Vec3& a) {
    const ComplexDistance rho = differentiable_distance(r, a);
    return (rho.p * r + rho.q * a) / (rho.p * rho.p + rho.q * rho.q);
}

double laplacian_p(const Vec3& r, const Vec3& a) {
    const ComplexDistance rho = differentiable_distance(r, a);
    return 2.0 * rho.p / (rho.p * rho.p + rho.q * rho.q);
}

double grad_p_norm_sq(const Vec3& r, const Vec3& a) {
    const ComplexDistance rho = differentiable_distance(r, a);
    const double am = norm(a);
    return (rho.p * rho.p + am * am) / (rho.p * rho.p + rho.q * rho.q);
}

Region region_classify(const Vec3& r, const Vec3& a, double alpha) {
    if (!(alpha > 0.0)) throw InvalidParameterError("region_classify requires alpha > 0");
    const double am = magnitude_or_throw(a);
    const double rm = norm(r);
    if (distance_to_branch_circle(r, a) < kBandFactor * (am + rm)) return Region::NearCircle;

    const Complex w(dot(r, r) - am * am, -2.0 * dot(a, r));
    const double p = std::sqrt(w).real();
    if (p < kBandFactor * am) return Region::OnDisk;
    if (std::fabs(p - alpha) < kBandFactor * alpha) return Region::Shell;
    if (p > alpha) return Region::Exterior;
    return dot(a, r) >= 0.0 ? Region::InteriorUpper : Region::InteriorLower;
}

double volume_element(const OblatePoint& o, double a) {
    return (o.p * o.p + o.q * o.q) / a;
}

std::vector<Vec3> sample_spheroid(double p, int n_q, int n_phi, const Vec3& a) {
    if (!(p > 0.0)) throw InvalidParameterError("spheroid level requires p > 0");
    const double am = magnitude_or_throw(a);
    std::vector<Vec3> out;
    if (n_q <= 0 || n_phi <= 0) return out;
    out.reserve(static_cast<std::size_t>(n_q) * n_phi);
    for (int j = 0; j < n_q; ++j) {
        const double q = -am + (j + 0.5) * 2.0 * am / n_q;
        for (int k = 0; k < n_phi; ++k) {
            const double phi = 2.0 * M_PI * k / n_phi;
            out.push_back(from_oblate({p, q, phi}, a));
        }
    }
    return out;
}

std::vector<Vec3> sample_hyperboloid(double q, int n_p, int n_phi, const Vec3& a) {
    const double am = magnitude_or_throw(a);
    if (!(q * q > 0.0 && q * q < am * am))
        throw InvalidParameterError("hyperboloid level requires 0 < q^2 < a^2");
    std::vector<Vec3> out;
    if (n_p <= 0 || n_phi <= 0) return out;
    const double p_max = 3.0 * am;
    out.reserve(static_cast<std::size_t>(n_p) * n_phi);
    for (int j = 0; j < n_p; ++j) {
        const double p = (j + 0.5) * p_max / n_p;
        for (int k = 0; k < n_phi; ++k) {
            const double phi = 2.0 * M_PI * k / n_phi;
            out.push_back(from_oblate({p, q, phi}, a));
        }
    }
    return out;
}

} // namespace pulsebeam
