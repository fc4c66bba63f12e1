#ifndef PULSEBEAM_COMPLEX_GEOMETRY_HPP
#define PULSEBEAM_COMPLEX_GEOMETRY_HPP

#include <complex>
#include <vector>

#include "pulsebeam/errors.hpp"
#include "pulsebeam/vec3.hpp"

namespace pulsebeam {

using Complex = std::complex<double>;

// Complex distance rho = p - i q from the imaginary source point i*a to a
// real observer at r.  On the standard branch p >= 0 everywhere and
//   p^2 - q^2 = r^2 - a^2,   p q = a . r.
struct ComplexDistance {
    double p = 0.0;
    double q = 0.0;

    Complex value() const { return {p, -q}; }
    ComplexDistance negated() const { return {-p, -q}; }
};

enum class CutKind { StandardDisk, UpperSpheroid, LowerSpheroid };

// Branch cut selector: the flat disk D spanning the branch circle, or a
// hemispheroidal cut at level p = alpha (plus its apron) on one side.
struct BranchCut {
    CutKind kind = CutKind::StandardDisk;
    double alpha = 0.0;

    static BranchCut standard_disk() { return {CutKind::StandardDisk, 0.0}; }
    static BranchCut upper_spheroid(double alpha);
    static BranchCut lower_spheroid(double alpha);
};

// Oblate spheroidal coordinates about the a-axis: p >= 0, q in [-a, a],
// phi in [0, 2*pi).
struct OblatePoint {
    double p = 0.0;
    double q = 0.0;
    double phi = 0.0;
};

enum class Region { InteriorUpper, InteriorLower, Shell, Exterior, OnDisk, NearCircle };

// Euclidean distance from r to the branch circle C (radius |a|, plane
// orthogonal to a, centered at the origin).
double distance_to_branch_circle(const Vec3& r, const Vec3& a);

// Standard-branch complex distance.  Throws SingularPointError within
// 1e-9*(a+r) of C and ZeroSourceVectorError for a = 0.  On the open disk
// (p = 0) the value is the limit from the z > 0 side, i.e. q > 0.
ComplexDistance complex_distance(const Vec3& r, const Vec3& a);

// Complex distance with the given branch cut: the standard value, with the
// sign flipped inside the swept volume of the cut deformation.
ComplexDistance branch_distance(const Vec3& r, const Vec3& a, const BranchCut& cut);

OblatePoint to_oblate(const Vec3& r, const Vec3& a);
Vec3 from_oblate(const OblatePoint& o, const Vec3& a);

// Closed forms for the gradient data of p on the standard branch:
//   grad p = (p r + q a) / (p^2 + q^2)
//   lap  p = 2 p / (p^2 + q^2)
//   |grad p|^2 = (p^2 + a^2) / (p^2 + q^2)
// Undefined on the disk and the circle; both throw SingularPointError.
Vec3 grad_p(const Vec3& r, const Vec3& a);
double laplacian_p(const Vec3& r, const Vec3& a);
double grad_p_norm_sq(const Vec3& r, const Vec3& a);

Region region_classify(const Vec3& r, const Vec3& a, double alpha);

// Jacobian density (p^2 + q^2)/a for dp dq dphi integration.
double volume_element(const OblatePoint& o, double a);

// Points on the level spheroid p = const / hyperboloid q = const, laid out
// on a midpoint (q, phi) resp. (p, phi) lattice.
std::vector<Vec3> sample_spheroid(double p, int n_q, int n_phi, const Vec3& a);
std::vector<Vec3> sample_hyperboloid(double q, int n_p, int n_phi, const Vec3& a);

} // namespace pulsebeam

#endif
