#pragma once

#include <vector>

#include "bisect/field.hpp"

namespace bisect {

/// A point of the projective line, normalized to [t:1] or [1:0].
/// Used both for slopes of affine lines and for roots of binary forms.
class P1Point {
public:
    P1Point(const FieldElement& t, const FieldElement& u);

    static P1Point infinity(FieldDescriptor desc) {
        return P1Point(FieldElement::one(desc), FieldElement::zero(desc));
    }
    static P1Point finite(const FieldElement& slope) {
        return P1Point(slope, FieldElement::one(slope.field()));
    }

    const FieldElement& t() const { return t_; }
    const FieldElement& u() const { return u_; }
    bool at_infinity() const { return u_.is_zero(); }

    bool operator==(const P1Point& rhs) const { return t_ == rhs.t_ && u_ == rhs.u_; }
    bool operator<(const P1Point& rhs) const;

    std::string to_string() const { return "[" + t_.to_string() + ":" + u_.to_string() + "]"; }

private:
    FieldElement t_, u_;
};

/// Homogeneous polynomial of fixed degree d in two variables T, U, stored
/// densely as c[0] T^d + c[1] T^(d-1) U + ... + c[d] U^d.  The nominal degree
/// is kept even when leading coefficients vanish; the zero form of any degree
/// is allowed and must be queried with is_zero before root finding.
class BinaryForm {
public:
    BinaryForm(FieldDescriptor desc, int degree);
    BinaryForm(FieldDescriptor desc, std::vector<FieldElement> coeffs);

    /// c0 T + c1 U
    static BinaryForm linear(const FieldElement& c0, const FieldElement& c1) {
        return BinaryForm(c0.field(), {c0, c1});
    }
    static BinaryForm one(FieldDescriptor desc) {
        return BinaryForm(desc, {FieldElement::one(desc)});
    }
    /// u0 T - t0 U, the linear form vanishing exactly at [t0:u0].
    static BinaryForm vanishing_at(const P1Point& pt) {
        return linear(pt.u(), -pt.t());
    }

    const FieldDescriptor& field() const { return desc_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of T^(degree-i) U^i.
    const FieldElement& coeff(int i) const { return coeffs_.at(i); }
    void set_coeff(int i, const FieldElement& c);
    bool is_zero() const;

    FieldElement eval(const FieldElement& t, const FieldElement& u) const;
    FieldElement eval(const P1Point& pt) const { return eval(pt.t(), pt.u()); }

    BinaryForm operator-() const;
    BinaryForm& operator+=(const BinaryForm& rhs);
    BinaryForm& operator-=(const BinaryForm& rhs);
    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
    friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(BinaryForm a, const FieldElement& s);
    friend BinaryForm operator*(const FieldElement& s, BinaryForm a) { return std::move(a) * s; }
    friend BinaryForm operator*(std::int64_t n, BinaryForm a) {
        return std::move(a) * FieldElement::from_int(a.desc_, n);
    }

    BinaryForm derivative_T() const;
    BinaryForm derivative_U() const;

    /// Quotient of an exact division; throws NotDivisible when the remainder
    /// is nonzero and ZeroForm when dividing by the zero form.
    BinaryForm divide_exact(const BinaryForm& divisor) const;

    /// Scales so the first nonzero coefficient from the T side becomes 1
    /// ("monic in T" whenever the T-degree is positive).
    BinaryForm normalized() const;

    bool operator==(const BinaryForm& rhs) const;
    bool operator!=(const BinaryForm& rhs) const { return !(*this == rhs); }
    /// Equal up to a nonzero scalar.
    bool proportional_to(const BinaryForm& rhs) const;

    std::string to_string() const;

private:
    FieldDescriptor desc_;
    std::vector<FieldElement> coeffs_;
};

/// Greatest common divisor, normalized per BinaryForm::normalized.
/// gcd(f, 0) = normalized f; gcd(0, 0) throws BothZero.
BinaryForm gcd_forms(const BinaryForm& f, const BinaryForm& g);

/// All roots of a nonzero form in the projective line over its field, sorted
/// and without repetition.  GF(p) enumerates the p+1 points; the rational
/// field uses integer divisor search on the dehomogenized polynomial.
/// Real-emulated mode throws UnsupportedInMode, zero forms throw ZeroForm.
std::vector<P1Point> p1_roots(const BinaryForm& f);

/// Multiplicity of pt as a root of the nonzero form f (0 when not a root).
int root_multiplicity(const BinaryForm& f, const P1Point& pt);

/// Discriminant b^2 - 4ac of a T^2 + b TU + c U^2, over any coefficient ring
/// with + - * and small-integer scaling.
template <class R>
R disc_quadratic(const R& a, const R& b, const R& c) {
    return b * b - 4 * (a * c);
}

/// Discriminant 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2 of
/// a T^3 + b T^2 U + c TU^2 + d U^3.
template <class R>
R disc_cubic(const R& a, const R& b, const R& c, const R& d) {
    return 18 * (a * b * c * d) - 4 * (b * b * b * d) + b * b * c * c - 4 * (a * c * c * c) -
           27 * (a * a * d * d);
}

FieldElement disc_quadratic(const BinaryForm& f);
FieldElement disc_cubic(const BinaryForm& f);

} // namespace bisect
