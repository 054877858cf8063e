#include "bisect/boundary.hpp"

#include <sstream>

#include "bisect/error.hpp"

namespace bisect {

namespace {

Poly2 normalized_curve(Poly2 curve) {
    const FieldElement lead = curve.leading_term().second;
    return curve * lead.inverse();
}

/// The quartic envelope of a cubic standard field, written out monomial by
/// monomial; the eliminant of the moving family must reproduce it exactly.
Poly2 closed_form_quartic(const StandardFormField& f) {
    const FieldDescriptor desc = f.field();
    const FieldElement h = f.h(), k = f.k(), mu = f.mu();
    const FieldElement h2 = h * h, k2 = k * k, mu2 = mu * mu;

    Poly2 inner(desc);
    auto term = [&](int i, int j, const FieldElement& c) {
        inner.add_term({i, j}, c);
    };
    term(4, 0, mu2);
    term(3, 0, -12 * h * mu2);
    term(2, 2, -2 * mu);
    term(2, 1, -20 * k * mu);
    term(2, 0, 4 * mu * (12 * h2 * mu + k2));
    term(1, 2, -20 * h * mu);
    term(1, 1, 88 * h * k * mu);
    term(1, 0, -32 * h * mu * (2 * h2 * mu + k2));
    term(0, 4, FieldElement::one(desc));
    term(0, 3, -12 * k);
    term(0, 2, 4 * (h2 * mu + 12 * k2));
    term(0, 1, -32 * k * (h2 * mu + 2 * k2));
    term(0, 0, 64 * h2 * k2 * mu);
    return 4 * mu * inner;
}

bool on_line(const Line& ell, const PlanePoint& pt) {
    return (ell.t() * pt.x() - ell.u() * pt.y() + ell.v()).is_zero();
}

}  // namespace

ProjectivePoint::ProjectivePoint(const FieldElement& x, const FieldElement& y,
                                 const FieldElement& z)
    : x_(x), y_(y), z_(z) {
    if (x_.field() != y_.field() || x_.field() != z_.field())
        throw FieldMismatch("projective coordinates must share a field");
    const FieldElement* pivot = nullptr;
    if (!z_.is_zero()) pivot = &z_;
    else if (!y_.is_zero()) pivot = &y_;
    else if (!x_.is_zero()) pivot = &x_;
    else throw BothZero("projective point needs a nonzero coordinate");
    const FieldElement inv = pivot->inverse();
    x_ *= inv;
    y_ *= inv;
    z_ *= inv;
}

bool ProjectivePoint::operator==(const ProjectivePoint& rhs) const {
    return x_ == rhs.x_ && y_ == rhs.y_ && z_ == rhs.z_;
}

std::string ProjectivePoint::to_string() const {
    std::ostringstream out;
    out << "[" << x_.to_string() << " : " << y_.to_string() << " : " << z_.to_string() << "]";
    return out.str();
}

std::optional<Line> moving_bisector(const FieldPolynomials& fp, const P1Point& slope) {
    const FieldElement c = fp.phi.eval(slope);
    if (c.is_zero()) return std::nullopt;
    return Line(slope.t() * c, slope.u() * c, fp.psi.eval(slope));
}

bool is_moving_bisector(const FieldPolynomials& fp, const Line& ell) {
    return fp.psi.eval(ell.t(), ell.u()) == ell.v() * fp.phi.eval(ell.t(), ell.u());
}

BoundaryCurve boundary(const StandardFormField& f) {
    const FieldDescriptor desc = f.field();
    const Poly2 X = Poly2::variable(desc, 0);
    const Poly2 Y = Poly2::variable(desc, 1);

    switch (f.cls()) {
        case BisectorClass::Linear:
            return BoundaryCurve{BoundaryCurve::Variant::Point, f.center(), std::nullopt};
        case BisectorClass::Quadratic: {
            // Family member at [T:U]: X*T^2 + (4k - sX - Y)*T*U + sY*U^2
            // with s = k/h the doubled slope.
            const FieldElement s = f.k() / f.h();
            const Poly2 a = X;
            const Poly2 b = Poly2::constant(desc, 4 * f.k()) - Poly2::constant(desc, s) * X - Y;
            const Poly2 c = Poly2::constant(desc, s) * Y;
            return BoundaryCurve{BoundaryCurve::Variant::Parabola, std::nullopt,
                                 normalized_curve(disc_quadratic(a, b, c))};
        }
        case BisectorClass::Cubic: {
            // Family member: X*T^3 + (4k - Y)*T^2*U + mu*(4h - X)*T*U^2 + mu*Y*U^3.
            const Poly2 a = X;
            const Poly2 b = Poly2::constant(desc, 4 * f.k()) - Y;
            const Poly2 c =
                Poly2::constant(desc, f.mu()) * (Poly2::constant(desc, 4 * f.h()) - X);
            const Poly2 d = Poly2::constant(desc, f.mu()) * Y;
            const Poly2 delta = disc_cubic(a, b, c, d);
            if (delta != closed_form_quartic(f))
                throw IdentityCheckFailed("quartic eliminant disagrees with its closed form");
            return BoundaryCurve{BoundaryCurve::Variant::Quartic, std::nullopt,
                                 normalized_curve(delta)};
        }
    }
    throw IdentityCheckFailed("unreachable boundary variant");
}

BoundaryCurve boundary_of(const Quadrilateral& q) {
    const Standardization std1 = standardize(q);
    BoundaryCurve bc = boundary(std1.field);
    if (bc.variant == BoundaryCurve::Variant::Point) {
        bc.point = std1.map.inverse().apply(*bc.point);
        return bc;
    }
    bc.curve = normalized_curve(substitute_affine(*bc.curve, std1.map));
    return bc;
}

Poly2 substitute_affine(const Poly2& poly, const AffineMap& m) {
    const FieldDescriptor desc = poly.field();
    const Poly2 X = Poly2::variable(desc, 0);
    const Poly2 Y = Poly2::variable(desc, 1);
    const Poly2 xs = Poly2::constant(desc, m.a()) * X + Poly2::constant(desc, m.b()) * Y +
                     Poly2::constant(desc, m.e());
    const Poly2 ys = Poly2::constant(desc, m.c()) * X + Poly2::constant(desc, m.d()) * Y +
                     Poly2::constant(desc, m.f());
    return poly.eval_poly<2>({xs, ys});
}

Poly3 homogenize(const Poly2& curve) {
    const int deg = curve.total_degree();
    Poly3 out(curve.field());
    for (const auto& [e, c] : curve.terms())
        out.add_term({e[0], e[1], deg - e[0] - e[1]}, c);
    return out;
}

AffineMap parabola_normalizer(const StandardFormField& f) {
    if (f.cls() != BisectorClass::Quadratic)
        throw WrongClass("parabola normalizer needs a quadratic field");
    const FieldElement s = f.k() / f.h();
    const FieldElement ek = 8 * f.k();
    // (x, y) -> (s*x - y, 8k*(s*x + y - 2k)); the envelope becomes X^2 - Y
    // up to the normalization scalar.
    return AffineMap(s, -FieldElement::one(f.field()), ek * s, ek, FieldElement::zero(f.field()),
                     -2 * f.k() * ek);
}

ProjectivePoint dual_image(const FieldPolynomials& fp, const ProjectivePoint& p) {
    const FieldElement& t = p.x();
    const FieldElement& u = p.y();
    const FieldElement& v = p.z();
    if (fp.psi.eval(t, u) != v * fp.phi.eval(t, u))
        throw PointNotOnCurve("dual point " + p.to_string() + " is not on psi = V*phi");
    const FieldElement a = fp.psi.derivative_T().eval(t, u) - v * fp.phi.derivative_T().eval(t, u);
    const FieldElement b = fp.psi.derivative_U().eval(t, u) - v * fp.phi.derivative_U().eval(t, u);
    const FieldElement c = fp.phi.eval(t, u);
    if (a.is_zero() && b.is_zero() && c.is_zero())
        throw SingularPoint("gradient vanishes at " + p.to_string());
    return ProjectivePoint(a, -b, -c);
}

ProjectivePoint dual_preimage(const Poly3& envelope, const ProjectivePoint& p) {
    const std::array<FieldElement, 3> at = {p.x(), p.y(), p.z()};
    if (!envelope.eval(at).is_zero())
        throw PointNotOnCurve("point " + p.to_string() + " is not on the envelope");
    const FieldElement gx = envelope.partial(0).eval(at);
    const FieldElement gy = envelope.partial(1).eval(at);
    const FieldElement gz = envelope.partial(2).eval(at);
    if (gx.is_zero() && gy.is_zero() && gz.is_zero())
        throw SingularPoint("envelope gradient vanishes at " + p.to_string());
    return ProjectivePoint(gx, -gy, gz);
}

std::vector<PlanePoint> singular_points(const StandardFormField& f) {
    const BoundaryCurve bc = boundary(f);
    switch (bc.variant) {
        case BoundaryCurve::Variant::Point:
            return {*bc.point};
        case BoundaryCurve::Variant::Parabola:
            return {};
        case BoundaryCurve::Variant::Quartic:
            break;
    }

    const FieldPolynomials fp = standard_polynomials(f);
    const Poly2& delta = *bc.curve;
    const Poly2 dx = delta.partial(0);
    const Poly2 dy = delta.partial(1);

    std::vector<PlanePoint> out;
    for (const P1Point& r : p1_roots(center_form(f))) {
        const FieldElement v = fp.psi.eval(r) / fp.phi.eval(r);
        const ProjectivePoint cusp = dual_image(fp, ProjectivePoint(r.t(), r.u(), v));
        if (cusp.z().is_zero())
            throw IdentityCheckFailed("cusp escaped to infinity at slope " + r.to_string());
        const PlanePoint pt = PlanePoint::finite(cusp.x(), cusp.y());
        const std::array<FieldElement, 2> at = {pt.x(), pt.y()};
        if (!delta.eval(at).is_zero() || !dx.eval(at).is_zero() || !dy.eval(at).is_zero())
            throw IdentityCheckFailed("claimed cusp " + pt.to_string() +
                                      " is not a singular point of the envelope");
        out.push_back(pt);
    }
    return out;
}

bool tangency_check(const Poly2& curve, const Line& ell, const PlanePoint& pt) {
    if (!pt.is_finite()) throw PointNotOnCurve("tangency is tested at finite points");
    const std::array<FieldElement, 2> at = {pt.x(), pt.y()};
    if (!curve.eval(at).is_zero())
        throw PointNotOnCurve("point " + pt.to_string() + " is not on the curve");
    if (!on_line(ell, pt)) return false;

    const FieldElement gx = curve.partial(0).eval(at);
    const FieldElement gy = curve.partial(1).eval(at);
    if (!gx.is_zero() || !gy.is_zero()) {
        // Smooth point: gradient parallel to the line normal (t, -u).
        return (gx * (-ell.u()) - gy * ell.t()).is_zero();
    }

    // Singular point: the direction must kill the lowest-degree form of the
    // curve translated to the point.
    const Poly2 shifted =
        substitute_affine(curve, AffineMap::translation(pt.x(), pt.y()));
    int low = -1;
    for (const auto& [e, c] : shifted.terms()) {
        const int deg = e[0] + e[1];
        if (low < 0 || deg < low) low = deg;
    }
    FieldElement acc = FieldElement::zero(curve.field());
    const FieldElement du = ell.u(), dt = ell.t();
    for (const auto& [e, c] : shifted.terms()) {
        if (e[0] + e[1] != low) continue;
        acc += c * du.pow(e[0]) * dt.pow(e[1]);
    }
    return acc.is_zero();
}

std::vector<PlanePoint> affine_zeros(const Poly2& curve) {
    const FieldDescriptor desc = curve.field();
    if (desc.kind != FieldKind::Prime)
        throw UnsupportedInMode("affine zero enumeration needs a prime field");
    if (desc.p > 31) throw FieldTooLarge("affine zero enumeration is capped at p = 31");
    std::vector<PlanePoint> out;
    for (std::int64_t x = 0; x < desc.p; ++x)
        for (std::int64_t y = 0; y < desc.p; ++y) {
            const FieldElement ex = FieldElement::from_int(desc, x);
            const FieldElement ey = FieldElement::from_int(desc, y);
            if (curve.eval({ex, ey}).is_zero()) out.push_back(PlanePoint::finite(ex, ey));
        }
    return out;
}

}  // namespace bisect
