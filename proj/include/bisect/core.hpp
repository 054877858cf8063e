#pragma once

#include <optional>

#include "bisect/forms.hpp"
#include "bisect/mpoly.hpp"
#include "bisect/plane.hpp"

namespace bisect {

/// Coarse shape of the family of bisecting lines, named after the degree of
/// the reduced dual polynomial psi - V*phi.
enum class BisectorClass { Linear, Quadratic, Cubic };

std::string to_string(BisectorClass cls);

/// The degree-4 product of the four side-slope factors together with the four
/// signed degree-3 forms obtained by deleting one factor.  The deleted-factor
/// forms for the second pair of opposite sides carry a minus sign.
struct ThetaForms {
    BinaryForm theta;
    BinaryForm a, b, a1, b1;
};

ThetaForms theta_factors(const Quadrilateral& q);

/// Phi, the quadratic form in the slope variables T, U whose zeros are the
/// null slopes.  Verifies the two defining contraction identities against the
/// theta forms and throws IdentityCheckFailed if either fails.
BinaryForm shape_polynomial(const Quadrilateral& q);

/// Psi, the cubic companion of Phi built from the side offsets.
BinaryForm position_polynomial(const Quadrilateral& q);

/// The full algebraic description of the bisecting family of a quadrilateral:
/// a line (t, u, v) bisects exactly when Psi(t,u) - v*Phi(t,u) = 0.  phi and
/// psi are Phi and Psi divided by their gcd and scaled jointly so that the
/// first nonzero coefficient of phi from the T side is 1; when Psi vanishes
/// identically phi = 1 and psi = 0.
struct FieldPolynomials {
    BinaryForm Phi; ///< degree 2
    BinaryForm Psi; ///< degree 3
    BinaryForm phi; ///< degree 2 - deg gcd(Phi, Psi)
    BinaryForm psi; ///< degree 3 - deg gcd(Phi, Psi)
    int f_degree = 3; ///< degree of psi - V*phi, between 1 and 3
    BisectorClass cls = BisectorClass::Cubic;

    const FieldDescriptor& field() const { return Phi.field(); }
};

/// Reduces an unreduced (Phi, Psi) pair; Phi must be a nonzero quadratic and
/// Psi a cubic over the same field.
FieldPolynomials reduce_dual(const BinaryForm& Phi, const BinaryForm& Psi);

/// shape_polynomial + position_polynomial + reduce_dual in one call.
FieldPolynomials bisector_field(const Quadrilateral& q);

/// The dual-side bisector test: Psi(t,u) = v * Phi(t,u).
bool is_bisector_dual(const FieldPolynomials& fp, const Line& ell);

/// Whether two quadrilaterals have the same family of bisecting lines, i.e.
/// their (Phi, Psi) pairs agree up to one common nonzero scalar.
bool same_bisector_field(const FieldPolynomials& f1, const FieldPolynomials& f2);

/// A slope is null when Phi vanishes there.
bool is_null(const FieldPolynomials& fp, const P1Point& slope);

/// How the family meets the pencil of lines of one fixed slope.
enum class SlopeStatus {
    Unique, ///< Phi != 0: exactly one bisector, v = Psi/Phi
    Pencil, ///< Phi = Psi = 0: every line of this slope bisects
    Dead,   ///< Phi = 0 != Psi: no bisector of this slope
};

struct SlopeInfo {
    SlopeStatus status;
    std::optional<Line> line; ///< engaged exactly for SlopeStatus::Unique
};

SlopeInfo bisector_at_slope(const FieldPolynomials& fp, const P1Point& slope);

/// Number of slopes (points of the projective line over the coefficient
/// field) whose whole pencil bisects.  Real-emulated mode counts through the
/// discriminant sign instead of enumerating roots.
int count_parallel_pencils(const FieldPolynomials& fp);

/// The conic traced by the bisecting family: Phi(Y - k, X - h) = c where
/// (h, k) is the vertex centroid and c is calibrated so the intersection
/// points of the two opposite-side pairs and of the diagonals lie on it.
/// Throws NoFiniteDiagonalPoint if no calibration point is finite.
Poly2 bisector_locus(const Quadrilateral& q);

} // namespace bisect
