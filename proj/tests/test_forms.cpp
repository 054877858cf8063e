#include <doctest.h>

#include "bisect/forms.hpp"
#include "bisect/mpoly.hpp"
#include "test_util.hpp"

using namespace bisect;

namespace {
const FieldDescriptor Q = FieldDescriptor::rationals();

BinaryForm form(FieldDescriptor desc, std::initializer_list<std::int64_t> coeffs) {
    std::vector<FieldElement> c;
    for (std::int64_t v : coeffs) c.push_back(FieldElement::from_int(desc, v));
    return BinaryForm(desc, std::move(c));
}

FieldElement fe(std::int64_t n) { return FieldElement::from_int(Q, n); }
} // namespace

TEST_SUITE_BEGIN("forms");

TEST_CASE("projective line points normalize") {
    CHECK(P1Point(fe(4), fe(2)) == P1Point::finite(fe(2)));
    CHECK(P1Point(fe(3), fe(0)) == P1Point::infinity(Q));
    CHECK_THROWS_AS(P1Point(fe(0), fe(0)), BothZero);
    CHECK(P1Point::infinity(Q) < P1Point::finite(fe(-100)));
}

TEST_CASE("form evaluation and arithmetic") {
    // T^2 - 2U^2
    const BinaryForm phi = form(Q, {1, 0, -2});
    CHECK(phi.eval(fe(3), fe(1)) == fe(7));
    CHECK(phi.eval(fe(1), fe(0)) == fe(1));
    CHECK((phi + phi).coeff(2) == fe(-4));
    CHECK((phi - phi).is_zero());
    CHECK((phi - phi).degree() == 2); // nominal degree survives cancellation

    const BinaryForm product = phi * form(Q, {1, -1}); // (T^2 - 2U^2)(T - U)
    CHECK(product.degree() == 3);
    CHECK(product == form(Q, {1, -1, -2, 2}));

    const BinaryForm scaled = phi * fe(0);
    CHECK(scaled.is_zero());
    CHECK(scaled.degree() == 2);
}

TEST_CASE("derivatives") {
    // f = T^3 + 4T^2U - TU^2 + 5U^3
    const BinaryForm f = form(Q, {1, 4, -1, 5});
    CHECK(f.derivative_T() == form(Q, {3, 8, -1}));
    CHECK(f.derivative_U() == form(Q, {4, -2, 15}));
    // Euler relation: T f_T + U f_U = deg(f) * f
    const BinaryForm t_part = BinaryForm::linear(fe(1), fe(0)) * f.derivative_T();
    const BinaryForm u_part = BinaryForm::linear(fe(0), fe(1)) * f.derivative_U();
    CHECK(t_part + u_part == 3 * fe(1) * f);
}

TEST_CASE("exact division") {
    const BinaryForm diff = form(Q, {1, 0, -1});   // (T-U)(T+U)
    CHECK(diff.divide_exact(form(Q, {1, -1})) == form(Q, {1, 1}));
    CHECK(form(Q, {0, 1, 0}).divide_exact(form(Q, {0, 1})) == form(Q, {1, 0})); // TU / U = T
    CHECK_THROWS_AS(diff.divide_exact(form(Q, {1, 1, 1})), NotDivisible);
    CHECK_THROWS_AS(diff.divide_exact(form(Q, {0, 1})), NotDivisible); // U does not divide
    CHECK_THROWS_AS(diff.divide_exact(BinaryForm(Q, 1)), ZeroForm);
}

TEST_CASE("gcd of forms") {
    // (T-U)(T+U) and (T+U)^2 share exactly T+U
    CHECK(gcd_forms(form(Q, {1, 0, -1}), form(Q, {1, 2, 1})) == form(Q, {1, 1}));
    // common U power: TU^2 and T^2U share TU
    CHECK(gcd_forms(form(Q, {0, 0, 1, 0}), form(Q, {0, 1, 0, 0})) == form(Q, {0, 1, 0}));
    // coprime: the running-example pair below has trivial gcd
    const BinaryForm phi = form(Q, {1, 0, -2});
    const BinaryForm psi = form(Q, {0, 0, -1, 0}); // -TU^2
    const BinaryForm g = gcd_forms(phi, psi);
    CHECK(g.degree() == 0);
    CHECK(g.coeff(0).is_one());
    // gcd with the zero form returns the other input, normalized
    CHECK(gcd_forms(BinaryForm(Q, 3), 7 * phi) == phi);
    CHECK_THROWS_AS(gcd_forms(BinaryForm(Q, 2), BinaryForm(Q, 2)), BothZero);
    // result is monic in T whenever its T-degree is positive
    CHECK(gcd_forms(form(Q, {4, 4}), form(Q, {2, 2})) == form(Q, {1, 1}));
}

TEST_CASE("projective roots over GF(p)") {
    const FieldDescriptor F7 = FieldDescriptor::prime(7);
    // T^3 + 3T^2U + 6TU^2 + 2U^3 has no roots over GF(7)
    CHECK(p1_roots(form(F7, {1, 3, 6, 2})).empty());
    // TU(T - 2U): three distinct roots
    const auto roots = p1_roots(form(F7, {0, 1, -2, 0}));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == P1Point::infinity(F7));
    CHECK(roots[1] == P1Point::finite(FieldElement::from_int(F7, 0)));
    CHECK(roots[2] == P1Point::finite(FieldElement::from_int(F7, 2)));
    // T^2 - 2U^2 splits over GF(7) (2 = 3^2) but not over GF(5)
    CHECK(p1_roots(form(F7, {1, 0, -2})).size() == 2);
    CHECK(p1_roots(form(FieldDescriptor::prime(5), {1, 0, -2})).empty());
}

TEST_CASE("projective roots over the rationals") {
    // (T + U)^3
    const auto triple = p1_roots(form(Q, {1, 3, 3, 1}));
    REQUIRE(triple.size() == 1);
    CHECK(triple[0] == P1Point::finite(fe(-1)));
    CHECK(root_multiplicity(form(Q, {1, 3, 3, 1}), triple[0]) == 3);

    CHECK(p1_roots(form(Q, {1, 0, -2})).empty()); // sqrt(2) is irrational

    // (2T - 3U)(T + 5U) U: roots 3/2, -5, and infinity... U = 0 is [1:0]
    const BinaryForm f = form(Q, {0, 2, 7, -15}); // U(2T^2 + 7TU - 15U^2)
    const auto roots = p1_roots(f);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == P1Point::infinity(Q));
    CHECK(roots[1] == P1Point::finite(fe(-5)));
    CHECK(roots[2] == P1Point::finite(FieldElement(Q, BigRational(3, 2))));

    CHECK_THROWS_AS(p1_roots(BinaryForm(Q, 2)), ZeroForm);
    CHECK_THROWS_AS(p1_roots(form(FieldDescriptor::reals(), {1, 0, -2})), UnsupportedInMode);
}

TEST_CASE("roots of a product are the union of roots") {
    std::mt19937_64 rng(77);
    const FieldDescriptor F7 = FieldDescriptor::prime(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto rand_form = [&](FieldDescriptor desc, int deg) {
            for (;;) {
                BinaryForm f(desc, deg);
                for (int i = 0; i <= deg; ++i)
                    f.set_coeff(i, testutil::random_element(desc, rng));
                if (!f.is_zero()) return f;
            }
        };
        for (FieldDescriptor desc : {F7, Q}) {
            const BinaryForm f = rand_form(desc, 2);
            const BinaryForm g = rand_form(desc, 1);
            auto lhs = p1_roots(f * g);
            auto rf = p1_roots(f);
            auto rg = p1_roots(g);
            std::set<P1Point> expect(rf.begin(), rf.end());
            expect.insert(rg.begin(), rg.end());
            CHECK(lhs == std::vector<P1Point>(expect.begin(), expect.end()));
        }
    }
}

TEST_CASE("quadratic and cubic discriminants") {
    CHECK(disc_quadratic(form(Q, {1, 0, 1})) == fe(-4));
    CHECK(disc_quadratic(form(Q, {1, -3, 2})) == fe(1));       // distinct rational roots
    CHECK(disc_quadratic(form(Q, {1, -2, 1})) == fe(0));       // double root
    CHECK(disc_cubic(form(Q, {1, 0, 0, 0})) == fe(0));         // T^3
    CHECK(disc_cubic(form(Q, {1, 0, -1, 0})) == fe(4));        // T(T-U)(T+U)
    CHECK_THROWS_AS(disc_cubic(form(Q, {1, 0, 1})), DegreeMismatch);
    CHECK_THROWS_AS(disc_quadratic(form(Q, {1, 0, 0, 1})), DegreeMismatch);
}

TEST_CASE("cubic discriminant vanishes exactly on repeated roots") {
    // For a cubic, a repeated factor is forced to be linear and rational, so
    // checking multiplicities over GF(p) itself is a complete test.
    for (std::int64_t p : {3, 5, 7}) {
        const FieldDescriptor F = FieldDescriptor::prime(p);
        for (std::int64_t b = 0; b < p; ++b)
            for (std::int64_t c = 0; c < p; ++c)
                for (std::int64_t d = 0; d < p; ++d) {
                    const BinaryForm f = form(F, {1, b, c, d});
                    int max_mult = 0;
                    for (const P1Point& r : p1_roots(f))
                        max_mult = std::max(max_mult, root_multiplicity(f, r));
                    CHECK(disc_cubic(f).is_zero() == (max_mult >= 2));
                }
    }
}

TEST_CASE("discriminant of the center-slope cubic in closed form") {
    // disc(h T^3 + 3k T^2 U + 3h mu T U^2 + k mu U^3) = -108 mu (h^2 mu - k^2)^2,
    // as an identity of polynomials in (h, k, mu).
    using P3 = MPoly<3>;
    const P3 h = P3::variable(Q, 0), k = P3::variable(Q, 1), mu = P3::variable(Q, 2);
    const P3 lhs = disc_cubic(h, 3 * k, 3 * (h * mu), k * mu);
    const P3 delta = h * h * mu - k * k;
    const P3 rhs = -108 * (mu * delta * delta);
    CHECK(lhs == rhs);
}

TEST_CASE("multivariate polynomial basics") {
    const Poly2 x = Poly2::variable(Q, 0);
    const Poly2 y = Poly2::variable(Q, 1);
    const Poly2 p = x * x * y - 2 * (y * y) + Poly2::constant(Q, 5);
    CHECK(p.total_degree() == 3);
    CHECK(p.eval({fe(2), fe(3)}) == fe(-1)); // 12 - 18 + 5
    CHECK(p.partial(0) == 2 * (x * y));
    CHECK(p.partial(1) == x * x - 4 * y);
    CHECK(p.leading_term().first == Poly2::Exps{2, 1});

    // composition: substitute (x + 1, x - y) into x*y
    const Poly2 composed = (x * y).eval_poly<2>({x + Poly2::constant(Q, 1), x - y});
    CHECK(composed == x * x - x * y + x - y);

    CHECK((p - p).is_zero());
    CHECK((p - p).total_degree() == -1);
}

TEST_SUITE_END();
