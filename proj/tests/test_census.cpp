#include "bisect/census.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "bisect/core.hpp"
#include "bisect/error.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bisect;
using bisect::testutil::Rng;

namespace {

StandardFormField triple_p(std::int64_t p, std::int64_t h, std::int64_t k, std::int64_t m) {
    const FieldDescriptor desc = FieldDescriptor::prime(p);
    return StandardFormField(FieldElement::from_int(desc, h), FieldElement::from_int(desc, k),
                             FieldElement::from_int(desc, m));
}

/// Every report field except wall time, for determinism comparisons.
bool same_report(const CensusReport& a, const CensusReport& b) {
    if (a.p != b.p || a.full != b.full || a.triples != b.triples) return false;
    if (a.linear != b.linear || a.quadratic != b.quadratic || a.cubic != b.cubic) return false;
    if (a.well_centered_cubic != b.well_centered_cubic || a.dickson_hits != b.dickson_hits)
        return false;
    if (a.undecided_pairs != b.undecided_pairs || a.realized != b.realized ||
        a.unrealized != b.unrealized || a.validated_pairs != b.validated_pairs)
        return false;
    if (a.classes.size() != b.classes.size()) return false;
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
        const CensusClass& ca = a.classes[i];
        const CensusClass& cb = b.classes[i];
        if (ca.square_mu != cb.square_mu || ca.size != cb.size || ca.realized != cb.realized)
            return false;
        if (ca.representative.has_value() != cb.representative.has_value()) return false;
        if (ca.representative && *ca.representative != *cb.representative) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("census") {

TEST_CASE("GF(3) summary counts are frozen") {
    const CensusReport r = run_census(3);
    CHECK(r.p == 3);
    CHECK(!r.full);
    CHECK(r.triples == 18);
    CHECK(r.linear == 2);
    CHECK(r.quadratic == 4);
    CHECK(r.cubic == 12);
    CHECK(r.well_centered_cubic == 12);
    // -108 vanishes mod 3, so the discriminant shortcut certifies nothing here.
    CHECK(r.dickson_hits == 0);
    CHECK(r.undecided_pairs == 0);
    REQUIRE(r.classes.size() == 2);
    CHECK(r.classes[0].square_mu);
    CHECK(r.classes[0].size == 4);
    CHECK(!r.classes[1].square_mu);
    CHECK(r.classes[1].size == 8);
    REQUIRE(r.classes[0].representative.has_value());
    CHECK(*r.classes[0].representative == triple_p(3, 0, 1, 1));
    REQUIRE(r.classes[1].representative.has_value());
    CHECK(*r.classes[1].representative == triple_p(3, 0, 1, 2));
    // Summary mode leaves realization untouched.
    CHECK(r.realized == 0);
    CHECK(r.unrealized == 0);
    CHECK(r.validated_pairs == 0);
}

TEST_CASE("GF(3) full census realizes all but the square-mu cubics and one linear") {
    CensusOptions opts;
    opts.full = true;
    const CensusReport r = run_census(3, opts);
    CHECK(r.realized == 13);
    CHECK(r.unrealized == 5);
    // square-mu cubic triples admit no quadrilateral over GF(3)
    CHECK(r.classes[0].realized == 0);
    CHECK(r.classes[1].realized == 8);
    CHECK(r.validated_pairs == 10);
}

TEST_CASE("count laws hold for p = 5 and p = 7") {
    for (std::int64_t p : {5, 7}) {
        CAPTURE(p);
        const CensusReport r = run_census(p);
        CHECK(r.triples == p * p * (p - 1));
        CHECK(r.linear == p - 1);
        CHECK(r.quadratic == (p - 1) * (p - 1));
        CHECK(r.cubic == p * (p - 1) * (p - 1));
        CHECK(r.linear + r.quadratic + r.cubic == r.triples);
        REQUIRE(r.classes.size() == 2);
        CHECK(r.classes[0].size + r.classes[1].size == r.well_centered_cubic);
        CHECK(r.well_centered_cubic <= r.cubic);
        CHECK(r.dickson_hits <= r.well_centered_cubic);
    }
    // (1, 1, 2) over GF(7) has no rational center slope, so some pairs stay open.
    const CensusReport seven = run_census(7);
    CHECK(seven.well_centered_cubic < seven.cubic);
    CHECK(seven.undecided_pairs > 0);
    CHECK(!well_centered(triple_p(7, 1, 1, 2)));
}

TEST_CASE("thread count never changes the report") {
    CensusOptions solo;
    solo.full = true;
    CensusOptions many = solo;
    many.threads = 4;
    const CensusReport a = run_census(7, solo);
    const CensusReport b = run_census(7, many);
    CHECK(same_report(a, b));
}

TEST_CASE("size caps are enforced") {
    CHECK_THROWS_AS(run_census(17), FieldTooLarge);          // soft bound, default 13
    CensusOptions wide;
    wide.max_p = 100;
    CHECK_THROWS_AS(run_census(37, wide), FieldTooLarge);    // hard cap 31
    wide.max_p = 31;
    const CensusReport r = run_census(17, wide);             // raised soft bound works
    CHECK(r.triples == 17 * 17 * 16);

    Rng rng(11);
    const Quadrilateral q17 = testutil::random_quadrilateral(FieldDescriptor::prime(17), rng);
    CHECK_THROWS_AS(brute_force_bisectors(q17), FieldTooLarge);
    const Quadrilateral qr = testutil::random_quadrilateral(FieldDescriptor::rationals(), rng);
    CHECK_THROWS_AS(brute_force_bisectors(qr), UnsupportedInMode);
}

TEST_CASE("exhaustive search agrees with the dual-polynomial test") {
    for (std::int64_t p : {5, 7, 11}) {
        CAPTURE(p);
        const FieldDescriptor desc = FieldDescriptor::prime(p);
        Rng rng(100 + static_cast<unsigned>(p));
        for (int trial = 0; trial < 5; ++trial) {
            const Quadrilateral quad = testutil::random_quadrilateral(desc, rng);
            std::vector<Line> direct = brute_force_bisectors(quad);
            const FieldPolynomials fp = bisector_field(quad);
            std::vector<Line> dual;
            for (const Line& ell : all_lines(desc))
                if (is_bisector_dual(fp, ell)) dual.push_back(ell);
            std::sort(direct.begin(), direct.end());
            std::sort(dual.begin(), dual.end());
            CHECK(direct == dual);
        }
    }
}

TEST_CASE("discriminant shortcut certifies center slopes") {
    // For a cubic triple h^2*mu - k^2 != 0, so away from characteristic 3 the
    // discriminant -108*mu*(h^2*mu - k^2)^2 is a square exactly when mu is.
    CHECK(!dickson_check(triple_p(7, 1, 1, 2)));  // mu = 2 = 3^2, disc square
    CHECK(!dickson_check(triple_p(7, 0, 1, 1)));  // disc = -108 = 4 mod 7
    CHECK(dickson_check(triple_p(7, 1, 0, 3)));   // disc = 4*3*2 = 3, non-square
    CHECK(well_centered(triple_p(7, 1, 0, 3)));
    CHECK(dickson_check(triple_p(7, 1, 1, 3)));
    CHECK(well_centered(triple_p(7, 1, 1, 3)));

    // The shortcut is sound on every cubic triple over GF(5).
    const FieldDescriptor five = FieldDescriptor::prime(5);
    for (std::int64_t h = 0; h < 5; ++h)
        for (std::int64_t k = 0; k < 5; ++k)
            for (std::int64_t m = 1; m < 5; ++m) {
                if (classify_triple(FieldElement::from_int(five, h),
                                    FieldElement::from_int(five, k),
                                    FieldElement::from_int(five, m)) != BisectorClass::Cubic)
                    continue;
                const StandardFormField f = triple_p(5, h, k, m);
                if (dickson_check(f)) CHECK(well_centered(f));
            }
}

TEST_CASE("witness transport validation") {
    // Same square class over GF(7): canonical witnesses move one bisector set
    // exactly onto the other.
    CHECK(witness_transports_bisectors(triple_p(7, 0, 1, 1), triple_p(7, 0, 1, 2)));
    CHECK(witness_transports_bisectors(triple_p(7, 0, 1, 1), triple_p(7, 0, 1, 1)));
    // Class mismatch and undecided pairs yield no witness.
    CHECK(!witness_transports_bisectors(triple_p(7, 0, 1, 1), triple_p(7, 1, 1, 1)));
    CHECK(!witness_transports_bisectors(triple_p(7, 1, 1, 2), triple_p(7, 0, 1, 1)));
}

TEST_CASE("csv listing walks triples in scan order") {
    const std::string csv = census_csv(3);
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        const std::size_t next = csv.find('\n', pos);
        lines.push_back(csv.substr(pos, next - pos));
        pos = next + 1;
    }
    REQUIRE(lines.size() == 19);  // header + 18 triples
    CHECK(lines[0] == "p,h,k,mu,class,well_centered,square_mu");
    CHECK(lines[1] == "3,0,0,1,linear,1,1");
    CHECK(lines[2] == "3,0,0,2,linear,1,0");
    CHECK(lines[3] == "3,0,1,1,cubic,1,1");
    // (1, 1, 1) satisfies k^2 = h^2*mu.
    CHECK(lines[9] == "3,1,1,1,quadratic,1,1");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 19);
    CHECK_THROWS_AS(census_csv(37), FieldTooLarge);
}

}  // TEST_SUITE("census")
