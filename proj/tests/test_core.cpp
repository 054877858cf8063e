#include <doctest.h>

#include <random>

#include "bisect/core.hpp"
#include "test_util.hpp"

using namespace bisect;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

FieldElement qq(std::int64_t n, std::int64_t d = 1) { return {Q, make_rational(n, d)}; }

Line ln(FieldDescriptor desc, std::int64_t t, std::int64_t u, std::int64_t v) {
    return Line(FieldElement::from_int(desc, t), FieldElement::from_int(desc, u),
                FieldElement::from_int(desc, v));
}

// One quadrilateral reused across the suites: sides Y=0, X-Y+1=0, X=0,
// 2X-Y-1=0 with vertices (-1,0), (0,1), (0,-1), (1/2,0).
Quadrilateral sample_quad(FieldDescriptor desc) {
    return Quadrilateral(ln(desc, 0, 1, 0), ln(desc, 1, 1, 1), ln(desc, 1, 0, 0),
                         ln(desc, 2, 1, -1));
}

BinaryForm form(FieldDescriptor desc, std::vector<std::int64_t> c) {
    std::vector<FieldElement> coeffs;
    for (auto x : c) coeffs.push_back(FieldElement::from_int(desc, x));
    return BinaryForm(desc, std::move(coeffs));
}

} // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("quadratic and cubic invariants of the sample quadrilateral") {
    const Quadrilateral q = sample_quad(Q);
    CHECK(shape_polynomial(q) == form(Q, {1, 0, -2}));     // T^2 - 2U^2
    CHECK(position_polynomial(q) == form(Q, {0, 0, -1, 0})); // -TU^2

    const FieldPolynomials fp = bisector_field(q);
    CHECK(fp.phi == fp.Phi); // coprime pair stays put, already monic in T
    CHECK(fp.psi == fp.Psi);
    CHECK(fp.f_degree == 3);
    CHECK(fp.cls == BisectorClass::Cubic);
    CHECK(count_parallel_pencils(fp) == 0);
}

TEST_CASE("deleted-factor forms of the sample quadrilateral") {
    const ThetaForms th = theta_factors(sample_quad(Q));
    CHECK(th.theta == form(Q, {0, -1, 3, -2, 0})); // T(T-U)(-U)(T-2U)
    CHECK(th.a == form(Q, {0, -1, 3, -2}));       // -U(T-U)(T-2U)
    CHECK(th.b == form(Q, {0, 1, -2, 0}));        // TU(T-2U)
    CHECK(th.a1 == form(Q, {1, -3, 2, 0}));       // T(T-U)(T-2U)
    CHECK(th.b1 == form(Q, {0, 1, -1, 0}));       // TU(T-U)
}

TEST_CASE("unique bisectors, pencils and dead slopes") {
    const FieldPolynomials fp = bisector_field(sample_quad(Q));

    // no rational null slope: every slope carries exactly one bisector
    const auto at3 = bisector_at_slope(fp, P1Point::finite(qq(3)));
    REQUIRE(at3.status == SlopeStatus::Unique);
    CHECK(*at3.line == Line(qq(3), qq(1), qq(-3, 7)));
    CHECK(is_bisector_dual(fp, *at3.line));
    CHECK_FALSE(is_bisector_dual(fp, Line(qq(3), qq(1), qq(0))));
    CHECK_FALSE(is_null(fp, P1Point::finite(qq(3))));

    // over GF(7) the same side data acquires null slopes at t = +-3
    const FieldDescriptor F7 = FieldDescriptor::prime(7);
    const FieldPolynomials fp7 = bisector_field(sample_quad(F7));
    const P1Point t3 = P1Point::finite(FieldElement::from_int(F7, 3));
    CHECK(is_null(fp7, t3));
    CHECK(bisector_at_slope(fp7, t3).status == SlopeStatus::Dead);
    CHECK(bisector_at_slope(fp7, P1Point::finite(FieldElement::from_int(F7, 4))).status ==
          SlopeStatus::Dead);
    CHECK(count_parallel_pencils(fp7) == 0); // dead slopes are not pencils

    // at a non-null slope the unique bisector through side B is B itself
    const auto at1 = bisector_at_slope(fp7, P1Point::finite(FieldElement::one(F7)));
    REQUIRE(at1.status == SlopeStatus::Unique);
    CHECK(*at1.line == ln(F7, 1, 1, 1));
}

TEST_CASE("a parallelogram has a linear family with two pencils") {
    // unit square: Y=0, X=1, Y=1, X=0
    const Quadrilateral sq(ln(Q, 0, 1, 0), ln(Q, 1, 0, -1), ln(Q, 0, 1, 1), ln(Q, 1, 0, 0));
    const FieldPolynomials fp = bisector_field(sq);
    CHECK(fp.Phi == form(Q, {0, 2, 0}));      // 2TU
    CHECK(fp.Psi == form(Q, {0, -1, 1, 0}));  // -T^2 U + TU^2
    CHECK(fp.cls == BisectorClass::Linear);
    CHECK(fp.phi == BinaryForm::one(Q));
    CHECK(fp.psi == BinaryForm(Q, {qq(-1, 2), qq(1, 2)}));
    CHECK(fp.f_degree == 1);
    CHECK(count_parallel_pencils(fp) == 2);

    // every line of a side slope bisects; any other slope bisects through the center
    CHECK(bisector_at_slope(fp, P1Point::infinity(Q)).status == SlopeStatus::Pencil);
    CHECK(bisector_at_slope(fp, P1Point::finite(qq(0))).status == SlopeStatus::Pencil);
    const auto diag = bisector_at_slope(fp, P1Point::finite(qq(1)));
    REQUIRE(diag.status == SlopeStatus::Unique);
    CHECK(*diag.line == Line(qq(1), qq(1), qq(0))); // X - Y = 0 through (1/2, 1/2)
}

TEST_CASE("a trapezoid has a quadratic family with one pencil and a dead slope") {
    // Y=0, X=0, Y=2, X+Y=3
    const Quadrilateral tr(ln(Q, 0, 1, 0), ln(Q, 1, 0, 0), ln(Q, 0, 1, 2), ln(Q, -1, 1, 3));
    const FieldPolynomials fp = bisector_field(tr);
    CHECK(fp.Phi == form(Q, {-1, -2, 0}));    // -T^2 - 2TU
    CHECK(fp.Psi == form(Q, {0, 1, -2, 0}));  // T^2 U - 2TU^2
    CHECK(fp.cls == BisectorClass::Quadratic);
    CHECK(fp.phi == form(Q, {1, 2}));
    CHECK(fp.psi == form(Q, {0, -1, 2}));
    CHECK(count_parallel_pencils(fp) == 1);
    CHECK(bisector_at_slope(fp, P1Point::finite(qq(0))).status == SlopeStatus::Pencil);
    CHECK(bisector_at_slope(fp, P1Point::finite(qq(-2))).status == SlopeStatus::Dead);
    CHECK(is_null(fp, P1Point::finite(qq(-2))));
}

TEST_CASE("dual test matches the direct midpoint test on every line") {
    for (std::int64_t p : {5, 7}) {
        const FieldDescriptor F = FieldDescriptor::prime(p);
        const auto lines = all_lines(F);
        testutil::Rng rng(910 + static_cast<unsigned>(p));
        for (int trial = 0; trial < 25; ++trial) {
            const Quadrilateral q = testutil::random_quadrilateral(F, rng);
            const FieldPolynomials fp = bisector_field(q);
            for (const Line& ell : lines)
                REQUIRE(is_bisector_dual(fp, ell) == bisects_direct(q, ell));
        }
    }
}

TEST_CASE("dual test matches the direct midpoint test over the rationals") {
    testutil::Rng rng(2026);
    for (int trial = 0; trial < 60; ++trial) {
        const Quadrilateral q = testutil::random_quadrilateral(Q, rng);
        const FieldPolynomials fp = bisector_field(q);

        for (const Line& side : q.sides()) CHECK(is_bisector_dual(fp, side));
        for (const Line& diag : q.diagonals()) CHECK(is_bisector_dual(fp, diag));

        for (int i = 0; i < 10; ++i) {
            const Line ell = testutil::random_line(Q, rng);
            REQUIRE(is_bisector_dual(fp, ell) == bisects_direct(q, ell));
        }
        // lines manufactured to bisect: v = Psi/Phi at a non-null slope
        const FieldElement t = testutil::random_element(Q, rng);
        const auto info = bisector_at_slope(fp, P1Point::finite(t));
        if (info.status == SlopeStatus::Unique) {
            CHECK(is_bisector_dual(fp, *info.line));
            CHECK(bisects_direct(q, *info.line));
        }
    }
}

TEST_CASE("swapping the opposite-side pairs flips both polynomials") {
    const Quadrilateral q = sample_quad(Q);
    const Quadrilateral swapped(q.B(), q.A1(), q.B1(), q.A());
    CHECK(shape_polynomial(swapped) == -shape_polynomial(q));
    CHECK(position_polynomial(swapped) == -position_polynomial(q));
    CHECK(same_bisector_field(bisector_field(q), bisector_field(swapped)));

    // reversing one pair changes nothing at all
    const Quadrilateral reversed(q.A1(), q.B(), q.A(), q.B1());
    CHECK(shape_polynomial(reversed) == shape_polynomial(q));
    CHECK(position_polynomial(reversed) == position_polynomial(q));

    const Quadrilateral other(ln(Q, 0, 1, 0), ln(Q, 1, 0, -1), ln(Q, 0, 1, 1), ln(Q, 1, 0, 0));
    CHECK_FALSE(same_bisector_field(bisector_field(q), bisector_field(other)));
    CHECK_THROWS_AS(
        same_bisector_field(bisector_field(q), bisector_field(sample_quad(FieldDescriptor::prime(7)))),
        FieldMismatch);
}

TEST_CASE("the locus conic passes through the three pair points and the diagonal midpoints") {
    const Quadrilateral q = sample_quad(Q);
    const Poly2 locus = bisector_locus(q);

    auto value_at = [&](const FieldElement& x, const FieldElement& y) {
        return locus.eval({x, y});
    };
    CHECK(value_at(qq(0), qq(0)).is_zero());          // A meets A1 at the origin
    CHECK(value_at(qq(2), qq(3)).is_zero());          // B meets B1
    CHECK(value_at(qq(2), qq(-3)).is_zero());         // diagonal crossing
    CHECK(value_at(qq(-1, 2), qq(-1, 2)).is_zero());  // midpoint of one diagonal
    CHECK(value_at(qq(1, 4), qq(1, 2)).is_zero());    // midpoint of the other
    CHECK_FALSE(value_at(qq(0), qq(1)).is_zero());

    // same five incidences for random quadrilaterals
    testutil::Rng rng(4242);
    for (FieldDescriptor desc : {Q, FieldDescriptor::prime(11)}) {
        for (int trial = 0; trial < 20; ++trial) {
            const Quadrilateral r = testutil::random_quadrilateral(desc, rng);
            const Poly2 conic = bisector_locus(r);
            const auto diag = r.diagonals();
            std::vector<PlanePoint> anchors = {intersect(r.A(), r.A1()),
                                               intersect(r.B(), r.B1())};
            if (diag[0] != diag[1]) anchors.push_back(intersect(diag[0], diag[1]));
            for (const auto& pt : anchors)
                if (pt.is_finite()) CHECK(conic.eval({pt.x(), pt.y()}).is_zero());
            const auto v = r.vertices();
            for (const auto& m : {midpoint(v[0], v[2]), midpoint(v[1], v[3])})
                CHECK(conic.eval({m.x(), m.y()}).is_zero());
        }
    }
}

TEST_SUITE_END();
