#include "bisect/core.hpp"

namespace bisect {
namespace {

// Product of the slope factors of all sides except the one at skip_index,
// multiplied by sign.
BinaryForm deleted_product(const std::array<BinaryForm, 4>& factors, int skip_index, int sign) {
    BinaryForm out = BinaryForm::one(factors[0].field());
    for (int i = 0; i < 4; ++i)
        if (i != skip_index) out = out * factors[static_cast<std::size_t>(i)];
    return sign < 0 ? -out : out;
}

} // namespace

std::string to_string(BisectorClass cls) {
    switch (cls) {
        case BisectorClass::Linear: return "linear";
        case BisectorClass::Quadratic: return "quadratic";
        case BisectorClass::Cubic: return "cubic";
    }
    return "?";
}

ThetaForms theta_factors(const Quadrilateral& q) {
    const auto sides = q.sides();
    std::array<BinaryForm, 4> factors = {
        BinaryForm::vanishing_at(sides[0].slope()), BinaryForm::vanishing_at(sides[1].slope()),
        BinaryForm::vanishing_at(sides[2].slope()), BinaryForm::vanishing_at(sides[3].slope())};
    return ThetaForms{factors[0] * factors[1] * factors[2] * factors[3],
                      deleted_product(factors, 0, +1), deleted_product(factors, 1, -1),
                      deleted_product(factors, 2, +1), deleted_product(factors, 3, -1)};
}

BinaryForm shape_polynomial(const Quadrilateral& q) {
    const FieldDescriptor desc = q.field();
    const auto s = q.sides();
    const FieldElement tA = s[0].t(), tB = s[1].t(), tA1 = s[2].t(), tB1 = s[3].t();
    const FieldElement uA = s[0].u(), uB = s[1].u(), uA1 = s[2].u(), uB1 = s[3].u();

    const FieldElement alpha =
        tA * uB * uA1 * uB1 - uA * tB * uA1 * uB1 + uA * uB * tA1 * uB1 - uA * uB * uA1 * tB1;
    const FieldElement beta = tA * uB * tA1 * uB1 - uA * tB * uA1 * tB1;
    const FieldElement gamma =
        tA * tB * tA1 * uB1 - tA * tB * uA1 * tB1 + tA * uB * tA1 * tB1 - uA * tB * tA1 * tB1;

    BinaryForm phi(desc, {alpha, -2 * beta, gamma});

    // The closed form above must agree with the two contractions of the
    // deleted-factor forms; a failure here means the side data is corrupt.
    const ThetaForms th = theta_factors(q);
    const BinaryForm T = BinaryForm::linear(FieldElement::one(desc), FieldElement::zero(desc));
    const BinaryForm U = BinaryForm::linear(FieldElement::zero(desc), FieldElement::one(desc));
    if (phi * T != tA * th.a + tB * th.b + tA1 * th.a1 + tB1 * th.b1 ||
        phi * U != uA * th.a + uB * th.b + uA1 * th.a1 + uB1 * th.b1)
        throw IdentityCheckFailed("slope contraction identities for the quadratic form failed");
    return phi;
}

BinaryForm position_polynomial(const Quadrilateral& q) {
    const auto s = q.sides();
    const ThetaForms th = theta_factors(q);
    return s[0].v() * th.a + s[1].v() * th.b + s[2].v() * th.a1 + s[3].v() * th.b1;
}

FieldPolynomials reduce_dual(const BinaryForm& Phi, const BinaryForm& Psi) {
    if (Phi.field() != Psi.field()) throw FieldMismatch("Phi and Psi over different fields");
    if (Phi.degree() != 2 || Psi.degree() != 3)
        throw DegreeMismatch("reduce_dual expects a quadratic and a cubic");
    if (Phi.is_zero()) throw ZeroForm("the quadratic form of a valid quadrilateral is nonzero");

    FieldPolynomials fp{Phi, Psi, BinaryForm::one(Phi.field()), BinaryForm(Phi.field(), 1),
                        1, BisectorClass::Linear};
    if (Psi.is_zero()) return fp; // phi = 1, psi = 0 of degree 1

    const BinaryForm g = gcd_forms(Phi, Psi);
    BinaryForm phi0 = Phi.divide_exact(g);
    BinaryForm psi0 = Psi.divide_exact(g);
    FieldElement lead = FieldElement::zero(Phi.field());
    for (int i = 0; i <= phi0.degree(); ++i)
        if (!phi0.coeff(i).is_zero()) {
            lead = phi0.coeff(i);
            break;
        }
    fp.phi = phi0 * lead.inverse();
    fp.psi = psi0 * lead.inverse();
    fp.f_degree = 1 + fp.phi.degree();
    fp.cls = fp.phi.degree() == 0   ? BisectorClass::Linear
             : fp.phi.degree() == 1 ? BisectorClass::Quadratic
                                    : BisectorClass::Cubic;
    return fp;
}

FieldPolynomials bisector_field(const Quadrilateral& q) {
    return reduce_dual(shape_polynomial(q), position_polynomial(q));
}

bool is_bisector_dual(const FieldPolynomials& fp, const Line& ell) {
    if (fp.field() != ell.field()) throw FieldMismatch("line over a different field");
    return (fp.Psi.eval(ell.t(), ell.u()) - ell.v() * fp.Phi.eval(ell.t(), ell.u())).is_zero();
}

bool same_bisector_field(const FieldPolynomials& f1, const FieldPolynomials& f2) {
    if (f1.field() != f2.field()) throw FieldMismatch("families over different fields");
    std::vector<FieldElement> c1, c2;
    for (int i = 0; i <= 2; ++i) c1.push_back(f1.Phi.coeff(i)), c2.push_back(f2.Phi.coeff(i));
    for (int i = 0; i <= 3; ++i) c1.push_back(f1.Psi.coeff(i)), c2.push_back(f2.Psi.coeff(i));

    std::optional<FieldElement> lambda;
    for (std::size_t i = 0; i < c1.size(); ++i) {
        if (c2[i].is_zero()) {
            if (!c1[i].is_zero()) return false;
            continue;
        }
        if (!lambda) lambda = c1[i] / c2[i];
        if (c1[i] != *lambda * c2[i]) return false;
    }
    return lambda && !lambda->is_zero();
}

bool is_null(const FieldPolynomials& fp, const P1Point& slope) {
    return fp.Phi.eval(slope).is_zero();
}

SlopeInfo bisector_at_slope(const FieldPolynomials& fp, const P1Point& slope) {
    const FieldElement phi_val = fp.Phi.eval(slope);
    const FieldElement psi_val = fp.Psi.eval(slope);
    if (!phi_val.is_zero())
        return {SlopeStatus::Unique, Line(slope.t(), slope.u(), psi_val / phi_val)};
    return {psi_val.is_zero() ? SlopeStatus::Pencil : SlopeStatus::Dead, std::nullopt};
}

int count_parallel_pencils(const FieldPolynomials& fp) {
    const BinaryForm g =
        fp.Psi.is_zero() ? fp.Phi.normalized() : gcd_forms(fp.Phi, fp.Psi);
    if (g.degree() == 0) return 0;
    if (fp.field().kind != FieldKind::RealEmulated)
        return static_cast<int>(p1_roots(g).size());
    if (g.degree() == 1) return 1;
    // degree 2: count real roots by discriminant sign
    const FieldElement d = disc_quadratic(g);
    if (d.is_zero()) return 1;
    return d > FieldElement::zero(fp.field()) ? 2 : 0;
}

Poly2 bisector_locus(const Quadrilateral& q) {
    const FieldDescriptor desc = q.field();
    const BinaryForm Phi = shape_polynomial(q);
    const PlanePoint center = q.centroid();
    const FieldElement h = center.x(), k = center.y();

    std::optional<PlanePoint> anchor;
    const auto diag = q.diagonals();
    const std::array<std::pair<Line, Line>, 3> pairs = {
        std::pair{q.A(), q.A1()}, std::pair{q.B(), q.B1()}, std::pair{diag[0], diag[1]}};
    for (const auto& [l1, l2] : pairs) {
        try {
            const PlanePoint p = intersect(l1, l2);
            if (p.is_finite()) {
                anchor = p;
                break;
            }
        } catch (const IdenticalLines&) {
            // degenerate diagonal coincidence; try the next pair
        }
    }
    if (!anchor)
        throw NoFiniteDiagonalPoint("no finite opposite-side or diagonal intersection");

    const Poly2 X = Poly2::variable(desc, 0), Y = Poly2::variable(desc, 1);
    const Poly2 dx = X - Poly2::constant(desc, h);
    const Poly2 dy = Y - Poly2::constant(desc, k);
    const Poly2 lhs = Phi.coeff(0) * (dy * dy) + Phi.coeff(1) * (dy * dx) + Phi.coeff(2) * (dx * dx);
    const FieldElement rhs = Phi.eval(anchor->y() - k, anchor->x() - h);
    return lhs - Poly2::constant(desc, rhs);
}

} // namespace bisect
