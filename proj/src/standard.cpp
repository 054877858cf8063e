#include "bisect/standard.hpp"

#include <sstream>

#include "bisect/error.hpp"

namespace bisect {

namespace {

Line axis_horizontal(const FieldDescriptor& desc) {
    return Line(FieldElement::zero(desc), FieldElement::one(desc), FieldElement::zero(desc));
}

Line axis_vertical(const FieldDescriptor& desc) {
    return Line(FieldElement::one(desc), FieldElement::zero(desc), FieldElement::zero(desc));
}

}  // namespace

BisectorClass classify_triple(const FieldElement& h, const FieldElement& k,
                              const FieldElement& mu) {
    if (h.is_zero() && k.is_zero()) return BisectorClass::Linear;
    if (k * k == h * h * mu) return BisectorClass::Quadratic;
    return BisectorClass::Cubic;
}

StandardFormField::StandardFormField(const FieldElement& h, const FieldElement& k,
                                     const FieldElement& mu)
    : h_(h), k_(k), mu_(mu), cls_(BisectorClass::Linear) {
    if (h.field() != k.field() || h.field() != mu.field())
        throw FieldMismatch("standard data must live in one field");
    if (mu.is_zero()) throw ZeroForm("mu = 0 degenerates the null form T^2 - mu*U^2");
    cls_ = classify_triple(h_, k_, mu_);
}

bool StandardFormField::operator==(const StandardFormField& rhs) const {
    return h_ == rhs.h_ && k_ == rhs.k_ && mu_ == rhs.mu_;
}

std::string StandardFormField::to_string() const {
    std::ostringstream out;
    out << "(h=" << h_.to_string() << ", k=" << k_.to_string() << ", mu=" << mu_.to_string()
        << ", " << bisect::to_string(cls_) << ")";
    return out.str();
}

Standardization standardize(const Quadrilateral& q) {
    const auto diag = q.diagonals();

    // First non-parallel pair: opposite sides, then the diagonals.
    const std::array<std::pair<Line, Line>, 3> candidates = {
        std::pair<Line, Line>{q.A(), q.A1()},
        std::pair<Line, Line>{q.B(), q.B1()},
        std::pair<Line, Line>{diag[0], diag[1]},
    };
    const std::pair<Line, Line>* chosen = nullptr;
    for (const auto& cand : candidates) {
        if (!cand.first.parallel_to(cand.second)) {
            chosen = &cand;
            break;
        }
    }
    if (chosen == nullptr)
        throw ParallelPair("no non-parallel line pair available");  // unreachable

    const PlanePoint origin = intersect(chosen->first, chosen->second);
    // Columns are the two line directions; the inverse sends them to (1,0)
    // and (0,1), so the first line lands on the horizontal axis and the
    // second on the vertical axis.
    const AffineMap columns = AffineMap::linear(chosen->first.u(), chosen->second.u(),
                                               chosen->first.t(), chosen->second.t());
    const AffineMap map =
        columns.inverse().after(AffineMap::translation(-origin.x(), -origin.y()));

    const Quadrilateral image = apply(map, q);
    const BinaryForm Phi = shape_polynomial(image);
    const BinaryForm Psi = position_polynomial(image);

    const FieldElement alpha = Phi.coeff(0);
    if (alpha.is_zero() || !Phi.coeff(1).is_zero())
        throw IdentityCheckFailed("transported null form is not a*(T^2 - mu*U^2)");
    if (!Psi.coeff(0).is_zero() || !Psi.coeff(3).is_zero())
        throw IdentityCheckFailed("transported offset form is not divisible by TU");

    const FieldElement mu = -Phi.coeff(2) / alpha;
    const FieldElement four_alpha = 4 * alpha;
    const FieldElement k = Psi.coeff(1) / four_alpha;
    const FieldElement h = Psi.coeff(2) / (four_alpha * mu);

    StandardFormField field(h, k, mu);
    if (field.cls() != reduce_dual(Phi, Psi).cls)
        throw IdentityCheckFailed("standard data class disagrees with the reduced dual degree");
    return Standardization{map, image, field};
}

FieldPolynomials standard_polynomials(const StandardFormField& f) {
    const FieldDescriptor desc = f.field();
    const FieldElement zero = FieldElement::zero(desc);
    const BinaryForm Phi(desc, {FieldElement::one(desc), zero, -f.mu()});
    const BinaryForm Psi(desc, {zero, 4 * f.k(), 4 * f.mu() * f.h(), zero});
    return reduce_dual(Phi, Psi);
}

bool equal_standard(const StandardFormField& lhs, const StandardFormField& rhs) {
    return lhs == rhs;
}

BinaryForm center_form(const StandardFormField& f) {
    return BinaryForm(f.field(), {f.h(), 3 * f.k(), 3 * f.h() * f.mu(), f.k() * f.mu()});
}

bool well_centered(const StandardFormField& f) {
    if (f.cls() != BisectorClass::Cubic) return true;
    if (f.field().kind == FieldKind::RealEmulated) return true;  // odd real degree
    return !p1_roots(center_form(f)).empty();
}

std::optional<Quadrilateral> quadrilateral_from_triple(const StandardFormField& f) {
    const FieldDescriptor desc = f.field();
    const FieldElement one = FieldElement::one(desc);
    const Line A = axis_horizontal(desc);
    const Line A1 = axis_vertical(desc);

    switch (f.cls()) {
        case BisectorClass::Linear: {
            // Parallelogram centered at the origin with sides on the two null
            // slopes; exists only when mu is a square.
            std::optional<FieldElement> s;
            try {
                s = sqrt_opt(f.mu());
            } catch (const UnsupportedInMode&) {
                return std::nullopt;
            }
            if (!s) return std::nullopt;
            return Quadrilateral(Line(*s, one, one), Line(-*s, one, one),
                                 Line(*s, one, -one), Line(-*s, one, -one));
        }
        case BisectorClass::Quadratic: {
            // Trapezoid: axes plus the parallel pair at the doubled null
            // slope s = -k/h, with offsets 0 and 4k.
            const FieldElement s = -f.k() / f.h();
            return Quadrilateral(A, Line(s, one, FieldElement::zero(desc)), A1,
                                 Line(s, one, 4 * f.k()));
        }
        case BisectorClass::Cubic: {
            // Axes plus a non-parallel pair with slope product mu.  s must
            // avoid 0 and the null slopes; over GF(3) with mu = 1 no such s
            // exists.
            FieldElement s = one;
            if (s * s == f.mu()) {
                s = FieldElement::from_int(desc, 2);
                if (s * s == f.mu()) return std::nullopt;
            }
            const FieldElement vB = -4 * s * (f.h() * f.mu() + f.k() * s) / (f.mu() - s * s);
            const FieldElement vB1 = 4 * f.k() - vB;
            return Quadrilateral(A, Line(s, one, vB), A1, Line(f.mu() / s, one, vB1));
        }
    }
    return std::nullopt;  // unreachable
}

Line partner_line(const StandardFormField& f, const Line& ell) {
    const FieldPolynomials fp = standard_polynomials(f);
    if (!is_bisector_dual(fp, ell))
        throw NotAPair("line " + ell.to_string() + " is not a member of the field");
    const FieldElement phi_here = fp.Phi.eval(ell.t(), ell.u());
    if (!phi_here.is_zero()) {
        // Slope pairing [t:u] <-> [mu*u : t]; the partner slope is never null.
        const FieldElement t1 = f.mu() * ell.u();
        const FieldElement u1 = ell.t();
        const FieldElement v1 = fp.Psi.eval(t1, u1) / fp.Phi.eval(t1, u1);
        return Line(t1, u1, v1);
    }
    // Null member: the partner is the parallel line symmetric about the
    // center.  Null lines in standard position are never vertical, so u = 1.
    const FieldElement v1 = 2 * (ell.u() * f.k() - ell.t() * f.h()) - ell.v();
    return Line(ell.t(), ell.u(), v1);
}

AffineMap retarget(const StandardFormField& f, const FieldElement& mu2, const Line& ell,
                   const Line& ell1, std::optional<FieldElement> theta) {
    const FieldDescriptor desc = f.field();
    if (mu2.field() != desc || ell.field() != desc || ell1.field() != desc)
        throw FieldMismatch("retarget arguments must share the field of the data");
    if (mu2.is_zero()) throw ZeroForm("target mu must be nonzero");
    if (ell.parallel_to(ell1)) throw ParallelPair("cannot retarget a parallel pair");
    if (ell.t() * ell1.t() != f.mu() * ell.u() * ell1.u())
        throw NotAPair("slope product does not match the pairing of the field");

    FieldElement th = FieldElement::one(desc);
    if (theta) {
        th = *theta;
        if (th * th * f.mu() * mu2 != FieldElement::one(desc))
            throw NotASquare("supplied theta fails theta^2 * mu1 * mu2 = 1");
    } else {
        std::optional<FieldElement> root;
        try {
            root = sqrt_opt((f.mu() * mu2).inverse());
        } catch (const UnsupportedInMode&) {
            root = std::nullopt;
        }
        if (!root) throw NotASquare("mu1 * mu2 is not a square; no valid theta");
        th = *root;
    }

    const PlanePoint origin = intersect(ell, ell1);
    const FieldElement a = f.mu() * th * ell.t();
    const FieldElement b = -f.mu() * th * ell.u();
    const FieldElement c = -f.mu() * ell.u();
    const FieldElement d = ell.t();
    return AffineMap::linear(a, b, c, d)
        .after(AffineMap::translation(-origin.x(), -origin.y()));
}

std::string to_string(Equivalence e) {
    switch (e) {
        case Equivalence::No: return "no";
        case Equivalence::Yes: return "yes";
        case Equivalence::Undecided: return "undecided";
    }
    return "?";
}

Equivalence affinely_equivalent(const StandardFormField& f1, const StandardFormField& f2) {
    if (f1.field() != f2.field())
        throw FieldMismatch("cannot compare fields over different coefficient fields");
    if (f1.cls() != f2.cls()) return Equivalence::No;
    if (f1.cls() != BisectorClass::Cubic) return Equivalence::Yes;
    if (!is_square(f1.mu() * f2.mu())) return Equivalence::No;
    if (well_centered(f1) && well_centered(f2)) return Equivalence::Yes;
    return Equivalence::Undecided;
}

namespace {

/// Map carrying a well-centered cubic standard field onto the reference
/// position (h, k) = (0, 1/2) with the same mu: send the member pair at the
/// first rational slope of the center form onto the axes, then scale
/// uniformly so the center lands at (0, 1/2).
AffineMap cubic_canonicalizer(const StandardFormField& f) {
    const std::vector<P1Point> roots = p1_roots(center_form(f));
    if (roots.empty()) throw IdentityCheckFailed("well-centered cubic with rootless center form");
    const P1Point r = roots.front();

    // The unique member at a center-form slope passes through the center.
    const Line A(r.t(), r.u(), r.u() * f.k() - r.t() * f.h());
    const Line A1 = partner_line(f, A);
    const AffineMap M = retarget(f, f.mu(), A, A1, f.mu().inverse());

    const PlanePoint image_center = M.apply(f.center());
    if (!image_center.x().is_zero())
        throw IdentityCheckFailed("retargeted center moved off the vertical axis");
    const FieldElement k1 = image_center.y();
    if (k1.is_zero())
        throw IdentityCheckFailed("retargeted cubic center collapsed onto the origin");

    const FieldElement scale = (2 * k1).inverse();
    const FieldElement zero = FieldElement::zero(f.field());
    return AffineMap::linear(scale, zero, zero, scale).after(M);
}

}  // namespace

std::optional<AffineMap> equivalence_witness(const StandardFormField& f1,
                                             const StandardFormField& f2) {
    if (affinely_equivalent(f1, f2) != Equivalence::Yes) return std::nullopt;
    const FieldDescriptor desc = f1.field();
    const FieldElement zero = FieldElement::zero(desc);
    const FieldElement one = FieldElement::one(desc);

    switch (f1.cls()) {
        case BisectorClass::Linear: {
            // x-scaling moving the null slopes; needs mu1/mu2 to be a square.
            std::optional<FieldElement> c;
            try {
                c = sqrt_opt(f1.mu() / f2.mu());
            } catch (const UnsupportedInMode&) {
                return std::nullopt;
            }
            if (!c) return std::nullopt;
            return AffineMap::linear(*c, zero, zero, one);
        }
        case BisectorClass::Quadratic:
            // Axis scalings moving the center; mu follows automatically since
            // mu = (k/h)^2 on both sides.
            return AffineMap::linear(f2.h() / f1.h(), zero, zero, f2.k() / f1.k());
        case BisectorClass::Cubic: {
            if (desc.kind == FieldKind::RealEmulated) return std::nullopt;
            const AffineMap C1 = cubic_canonicalizer(f1);
            const AffineMap C2 = cubic_canonicalizer(f2);
            std::optional<FieldElement> c;
            try {
                c = sqrt_opt(f1.mu() / f2.mu());
            } catch (const UnsupportedInMode&) {
                return std::nullopt;
            }
            if (!c) return std::nullopt;
            const AffineMap g = AffineMap::linear(*c, zero, zero, one);
            return C2.inverse().after(g.after(C1));
        }
    }
    return std::nullopt;  // unreachable
}

}  // namespace bisect
