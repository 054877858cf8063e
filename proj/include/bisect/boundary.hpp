#pragma once

#include <optional>
#include <vector>

#include "bisect/core.hpp"
#include "bisect/standard.hpp"

namespace bisect {

/// Point of the projective plane over the working field, rescaled so the last
/// nonzero coordinate is 1.
class ProjectivePoint {
public:
    ProjectivePoint(const FieldElement& x, const FieldElement& y, const FieldElement& z);

    const FieldElement& x() const { return x_; }
    const FieldElement& y() const { return y_; }
    const FieldElement& z() const { return z_; }
    const FieldDescriptor& field() const { return x_.field(); }

    bool operator==(const ProjectivePoint& rhs) const;
    bool operator!=(const ProjectivePoint& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    FieldElement x_, y_, z_;
};

/// Envelope swept by the one-bisector-per-slope family: a single point for
/// linear fields, a parabola for quadratic ones, a cuspidal quartic for cubic
/// ones.  Curves are scaled so the leading coefficient (largest X power
/// first, then largest Y power) is 1.
struct BoundaryCurve {
    enum class Variant { Point, Parabola, Quartic };

    Variant variant;
    std::optional<PlanePoint> point;  ///< engaged exactly for Variant::Point
    std::optional<Poly2> curve;       ///< engaged for Parabola and Quartic
};

/// The unique family member at `slope`, present when the reduced quadratic
/// phi does not vanish there: (t*phi, u*phi, psi) evaluated at the slope.
std::optional<Line> moving_bisector(const FieldPolynomials& fp, const P1Point& slope);

/// Membership in the one-per-slope family: psi(t,u) = v * phi(t,u) on the
/// reduced pair.  At a pencil slope this selects the single member lying on
/// the dual curve, unlike the unreduced test which accepts the whole pencil.
bool is_moving_bisector(const FieldPolynomials& fp, const Line& ell);

/// Envelope of the moving bisectors of a standard field.  For cubic fields
/// the eliminant of the family is checked against its closed form and
/// IdentityCheckFailed is thrown on disagreement.
BoundaryCurve boundary(const StandardFormField& f);

/// Envelope in the original frame of the quadrilateral: standardize, build
/// the standard envelope, pull back through the standardizing map.
BoundaryCurve boundary_of(const Quadrilateral& q);

/// Composition poly(m(x, y)).
Poly2 substitute_affine(const Poly2& poly, const AffineMap& m);

/// Homogenization with a third variable up to the total degree.
Poly3 homogenize(const Poly2& curve);

/// Affine map carrying the parabola envelope of a quadratic field onto a
/// scalar multiple of X^2 - Y; the doubled-slope direction goes horizontal.
/// Throws WrongClass for non-quadratic fields.
AffineMap parabola_normalizer(const StandardFormField& f);

/// Gradient map of the dual cubic psi - V*phi: sends a member line, read as
/// the point [t:u:v], to its contact point on the envelope.  Throws
/// PointNotOnCurve off the dual curve and SingularPoint where the gradient
/// vanishes ([0:0:1] always does).
ProjectivePoint dual_image(const FieldPolynomials& fp, const ProjectivePoint& p);

/// Gradient map of the homogenized envelope, inverse to dual_image away from
/// the cusps.  Throws PointNotOnCurve off the curve and SingularPoint where
/// the gradient vanishes.
ProjectivePoint dual_preimage(const Poly3& envelope, const ProjectivePoint& p);

/// Singular points of the envelope: the contact points of the members whose
/// slopes are roots of the center form.  Each returned point is verified to
/// kill the curve and both partials; IdentityCheckFailed otherwise.  A
/// parabola has none; for a point envelope the point itself is returned.
std::vector<PlanePoint> singular_points(const StandardFormField& f);

/// Whether `ell` is tangent to `curve` at the finite point `pt`: at a smooth
/// point the gradient must be normal to the line; at a singular point the
/// line direction must kill the lowest-degree form of the translated curve.
/// Throws PointNotOnCurve when pt is not on the curve.
bool tangency_check(const Poly2& curve, const Line& ell, const PlanePoint& pt);

/// All affine zeros of a curve over a prime field, row by row.  Throws
/// UnsupportedInMode over the rationals or emulated reals, FieldTooLarge for
/// p > 31.
std::vector<PlanePoint> affine_zeros(const Poly2& curve);

}  // namespace bisect
