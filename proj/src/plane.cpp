#include "bisect/plane.hpp"

#include <sstream>

namespace bisect {

Line::Line(const FieldElement& t, const FieldElement& u, const FieldElement& v)
    : t_(t), u_(u), v_(v) {
    if (t.field() != u.field() || u.field() != v.field())
        throw FieldMismatch("line coefficients in different fields");
    if (t_.is_zero() && u_.is_zero())
        throw BothZero("a line needs t or u nonzero");
    const FieldElement scale = u_.is_zero() ? t_.inverse() : u_.inverse();
    t_ *= scale;
    u_ *= scale;
    v_ *= scale;
}

bool Line::operator<(const Line& rhs) const {
    if (u_ != rhs.u_) return u_ < rhs.u_;
    if (t_ != rhs.t_) return t_ < rhs.t_;
    return v_ < rhs.v_;
}

std::string Line::to_string() const {
    return "(" + t_.to_string() + ")X - (" + u_.to_string() + ")Y + (" + v_.to_string() + ") = 0";
}

PlanePoint PlanePoint::finite(const FieldElement& x, const FieldElement& y) {
    if (x.field() != y.field()) throw FieldMismatch("point coordinates in different fields");
    return PlanePoint(true, x, y, std::nullopt);
}

PlanePoint PlanePoint::at_infinity(const P1Point& direction) {
    const FieldDescriptor desc = direction.t().field();
    return PlanePoint(false, FieldElement::zero(desc), FieldElement::zero(desc), direction);
}

const FieldElement& PlanePoint::x() const {
    if (!finite_) throw VertexAtInfinity("point at infinity has no x coordinate");
    return x_;
}

const FieldElement& PlanePoint::y() const {
    if (!finite_) throw VertexAtInfinity("point at infinity has no y coordinate");
    return y_;
}

const P1Point& PlanePoint::direction() const {
    if (finite_) throw Error("finite point has no direction at infinity");
    return *dir_;
}

bool PlanePoint::operator==(const PlanePoint& rhs) const {
    if (finite_ != rhs.finite_) return false;
    if (finite_) return x_ == rhs.x_ && y_ == rhs.y_;
    return *dir_ == *rhs.dir_;
}

std::string PlanePoint::to_string() const {
    if (finite_) return "(" + x_.to_string() + ", " + y_.to_string() + ")";
    return "infinity" + dir_->to_string();
}

Line line_through(const PlanePoint& p, const PlanePoint& q) {
    if (p == q) throw CoincidentPoints("no unique line through a single point");
    if (!p.is_finite() && !q.is_finite())
        throw VertexAtInfinity("no affine line through two points at infinity");
    if (!p.is_finite()) return line_through(q, p);

    if (q.is_finite()) {
        const FieldElement dx = q.x() - p.x();
        const FieldElement dy = q.y() - p.y();
        // normal direction (dy, -dx), anchored at p
        return Line(dy, dx, dx * p.y() - dy * p.x());
    }
    const FieldElement& t = q.direction().t();
    const FieldElement& u = q.direction().u();
    return Line(t, u, u * p.y() - t * p.x());
}

PlanePoint intersect(const Line& a, const Line& b) {
    if (a == b) throw IdenticalLines("intersection of a line with itself");
    const FieldElement den = a.t() * b.u() - b.t() * a.u();
    if (den.is_zero()) return PlanePoint::at_infinity(a.slope());
    const FieldElement x = (a.u() * b.v() - b.u() * a.v()) / den;
    const FieldElement y = (a.t() * b.v() - b.t() * a.v()) / den;
    return PlanePoint::finite(x, y);
}

PlanePoint midpoint(const PlanePoint& p, const PlanePoint& q) {
    const FieldDescriptor desc = p.x().field();
    const FieldElement half = FieldElement::from_int(desc, 2).inverse();
    return PlanePoint::finite((p.x() + q.x()) * half, (p.y() + q.y()) * half);
}

std::optional<PlanePoint> mid_pair(const Line& a, const Line& b, const Line& ell) {
    if (ell == a || ell == b) return std::nullopt;
    const PlanePoint pa = intersect(ell, a);
    const PlanePoint pb = intersect(ell, b);
    if (!pa.is_finite() && !pb.is_finite()) return std::nullopt;
    if (!pa.is_finite() || !pb.is_finite()) return PlanePoint::at_infinity(ell.slope());
    return midpoint(pa, pb);
}

AffineMap::AffineMap(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                     const FieldElement& d, const FieldElement& e, const FieldElement& f)
    : a_(a), b_(b), c_(c), d_(d), e_(e), f_(f) {
    if (det().is_zero()) throw SingularMap("affine map with zero determinant");
}

AffineMap AffineMap::identity(FieldDescriptor desc) {
    const FieldElement zero = FieldElement::zero(desc);
    const FieldElement one = FieldElement::one(desc);
    return AffineMap(one, zero, zero, one, zero, zero);
}

AffineMap AffineMap::translation(const FieldElement& e, const FieldElement& f) {
    const FieldDescriptor desc = e.field();
    const FieldElement zero = FieldElement::zero(desc);
    const FieldElement one = FieldElement::one(desc);
    return AffineMap(one, zero, zero, one, e, f);
}

AffineMap AffineMap::linear(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                            const FieldElement& d) {
    const FieldElement zero = FieldElement::zero(a.field());
    return AffineMap(a, b, c, d, zero, zero);
}

AffineMap AffineMap::inverse() const {
    const FieldElement dt = det();
    const FieldElement ia = d_ / dt;
    const FieldElement ib = -b_ / dt;
    const FieldElement ic = -c_ / dt;
    const FieldElement id = a_ / dt;
    return AffineMap(ia, ib, ic, id, -(ia * e_ + ib * f_), -(ic * e_ + id * f_));
}

AffineMap AffineMap::after(const AffineMap& rhs) const {
    return AffineMap(a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_,
                     c_ * rhs.a_ + d_ * rhs.c_, c_ * rhs.b_ + d_ * rhs.d_,
                     a_ * rhs.e_ + b_ * rhs.f_ + e_, c_ * rhs.e_ + d_ * rhs.f_ + f_);
}

PlanePoint AffineMap::apply(const PlanePoint& p) const {
    if (p.is_finite())
        return PlanePoint::finite(a_ * p.x() + b_ * p.y() + e_, c_ * p.x() + d_ * p.y() + f_);
    // directions transform by the linear part; slope [t:u] has direction (u, t)
    const FieldElement w1 = a_ * p.direction().u() + b_ * p.direction().t();
    const FieldElement w2 = c_ * p.direction().u() + d_ * p.direction().t();
    return PlanePoint::at_infinity(P1Point(w2, w1));
}

Line AffineMap::apply(const Line& ell) const {
    // substitute the inverse map into t x - u y + v = 0
    const AffineMap inv = inverse();
    const FieldElement t2 = ell.t() * inv.a_ - ell.u() * inv.c_;
    const FieldElement u2 = ell.u() * inv.d_ - ell.t() * inv.b_;
    const FieldElement v2 = ell.v() + ell.t() * inv.e_ - ell.u() * inv.f_;
    return Line(t2, u2, v2);
}

bool AffineMap::operator==(const AffineMap& rhs) const {
    return a_ == rhs.a_ && b_ == rhs.b_ && c_ == rhs.c_ && d_ == rhs.d_ && e_ == rhs.e_ &&
           f_ == rhs.f_;
}

std::string AffineMap::to_string() const {
    std::ostringstream out;
    out << "(x,y) -> (" << a_.to_string() << " x + " << b_.to_string() << " y + " << e_.to_string()
        << ", " << c_.to_string() << " x + " << d_.to_string() << " y + " << f_.to_string() << ")";
    return out.str();
}

Quadrilateral::Quadrilateral(Line a, Line b, Line a1, Line b1)
    : a_(std::move(a)), b_(std::move(b)), a1_(std::move(a1)), b1_(std::move(b1)) {
    const std::array<Line, 4> s = {a_, b_, a1_, b1_};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (s[i] == s[j]) throw InvalidQuadrilateral("sides must be pairwise distinct");
    const std::array<std::pair<int, int>, 4> adjacent = {{{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
    for (auto [i, j] : adjacent)
        if (s[i].parallel_to(s[j]))
            throw InvalidQuadrilateral("adjacent sides must not be parallel");
    const PlanePoint corner = intersect(a_, b_);
    bool all_through = true;
    for (const Line& side : {a1_, b1_})
        if (!(side.t() * corner.x() - side.u() * corner.y() + side.v()).is_zero())
            all_through = false;
    if (all_through) throw InvalidQuadrilateral("the four sides must not share a point");
}

std::array<PlanePoint, 4> Quadrilateral::vertices() const {
    return {intersect(a_, b_), intersect(b_, a1_), intersect(a1_, b1_), intersect(b1_, a_)};
}

std::array<Line, 2> Quadrilateral::diagonals() const {
    const auto vs = vertices();
    return {line_through(vs[0], vs[2]), line_through(vs[1], vs[3])};
}

PlanePoint Quadrilateral::centroid() const {
    const FieldDescriptor desc = field();
    FieldElement sx = FieldElement::zero(desc);
    FieldElement sy = FieldElement::zero(desc);
    for (const PlanePoint& vtx : vertices()) {
        sx += vtx.x();
        sy += vtx.y();
    }
    const FieldElement quarter = FieldElement::from_int(desc, 4).inverse();
    return PlanePoint::finite(sx * quarter, sy * quarter);
}

bool Quadrilateral::has_side(const Line& ell) const {
    return ell == a_ || ell == b_ || ell == a1_ || ell == b1_;
}

bool Quadrilateral::operator==(const Quadrilateral& rhs) const {
    return a_ == rhs.a_ && b_ == rhs.b_ && a1_ == rhs.a1_ && b1_ == rhs.b1_;
}

Quadrilateral apply(const AffineMap& m, const Quadrilateral& q) {
    return Quadrilateral(m.apply(q.A()), m.apply(q.B()), m.apply(q.A1()), m.apply(q.B1()));
}

std::vector<Line> all_lines(FieldDescriptor desc) {
    if (desc.kind != FieldKind::Prime)
        throw UnsupportedInMode("line enumeration needs a finite field");
    std::vector<Line> out;
    out.reserve(static_cast<std::size_t>(desc.p) * static_cast<std::size_t>(desc.p + 1));
    const FieldElement one = FieldElement::one(desc);
    const FieldElement zero = FieldElement::zero(desc);
    for (std::int64_t v = 0; v < desc.p; ++v)
        out.emplace_back(one, zero, FieldElement::from_int(desc, v));
    for (std::int64_t t = 0; t < desc.p; ++t)
        for (std::int64_t v = 0; v < desc.p; ++v)
            out.emplace_back(FieldElement::from_int(desc, t), one, FieldElement::from_int(desc, v));
    return out;
}

bool bisects_direct(const Quadrilateral& q, const Line& ell) {
    if (q.has_side(ell)) return true;

    const bool a_pair_parallel = q.A().parallel_to(q.A1());
    const bool b_pair_parallel = q.B().parallel_to(q.B1());
    if (a_pair_parallel && ell.parallel_to(q.A())) return true;
    if (b_pair_parallel && ell.parallel_to(q.B())) return true;

    for (const Line& side : q.sides())
        if (ell.parallel_to(side)) return false;

    const auto m1 = mid_pair(q.A(), q.A1(), ell);
    const auto m2 = mid_pair(q.B(), q.B1(), ell);
    return *m1 == *m2; // both defined: ell crosses all four sides finitely
}

} // namespace bisect
