#include "bisect/io.hpp"

#include "bisect/error.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bisect;
using bisect::testutil::Rng;

namespace {

FieldElement q(std::int64_t n, std::int64_t d = 1) {
    return FieldElement(FieldDescriptor::rationals(), make_rational(n, d));
}

Line line_q(std::int64_t t, std::int64_t u, std::int64_t v) {
    return Line(q(t), q(u), q(v));
}

/// Sides Y=0, X-Y+1=0, X=0, 2X-Y-1=0; standard data (-1/8, 0, 2).
Quadrilateral sample_quad() {
    return Quadrilateral(line_q(0, 1, 0), line_q(1, 1, 1), line_q(1, 0, 0), line_q(2, 1, -1));
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("field descriptors round-trip through their flag syntax") {
    CHECK(parse_field_descriptor("rational") == FieldDescriptor::rationals());
    CHECK(parse_field_descriptor("real") == FieldDescriptor::reals());
    CHECK(parse_field_descriptor("prime:7") == FieldDescriptor::prime(7));
    CHECK(parse_field_descriptor(FieldDescriptor::prime(13).describe()) ==
          FieldDescriptor::prime(13));
    CHECK_THROWS_AS(parse_field_descriptor("complex"), BadDescriptor);
    CHECK_THROWS_AS(parse_field_descriptor("prime:"), BadDescriptor);
    CHECK_THROWS_AS(parse_field_descriptor("prime:6"), BadDescriptor);
    CHECK_THROWS_AS(parse_field_descriptor("prime:2"), BadDescriptor);
}

TEST_CASE("elements serialize as exact strings") {
    const FieldDescriptor Q = FieldDescriptor::rationals();
    CHECK(to_json(q(-1, 8)) == Json("-1/8"));
    CHECK(element_from_json(Q, Json("-1/8")) == q(-1, 8));
    CHECK(element_from_json(Q, Json(5)) == q(5));       // bare integers accepted
    CHECK_THROWS_AS(element_from_json(Q, Json("x")), ParseError);
    CHECK_THROWS_AS(element_from_json(Q, Json(Json::object())), ParseError);
    const FieldDescriptor F7 = FieldDescriptor::prime(7);
    CHECK(element_from_json(F7, Json("12")) == FieldElement::from_int(F7, 5));
    CHECK_THROWS_AS(element_from_json(F7, Json("1/2")), ParseError);
}

TEST_CASE("lines and quadrilaterals round-trip") {
    const FieldDescriptor Q = FieldDescriptor::rationals();
    const Line ell = line_q(2, 1, -1);
    CHECK(line_from_json(Q, to_json(ell)) == ell);
    CHECK(to_json(ell) == parse_json(R"({"t":"2","u":"1","v":"-1"})"));
    CHECK_THROWS_AS(line_from_json(Q, parse_json(R"({"t":"2","u":"1"})")), ParseError);

    const Quadrilateral quad = sample_quad();
    CHECK(quadrilateral_from_json(Q, to_json(quad)) == quad);
    // A degenerate quadrilateral is a constructor error, not a parse error.
    const Json bad = parse_json(
        R"({"A":{"t":"0","u":"1","v":"0"},"B":{"t":"0","u":"1","v":"1"},)"
        R"("A1":{"t":"0","u":"1","v":"2"},"B1":{"t":"1","u":"0","v":"0"}})");
    CHECK_THROWS_AS(quadrilateral_from_json(Q, bad), InvalidQuadrilateral);
}

TEST_CASE("affine maps and triples round-trip") {
    const FieldDescriptor Q = FieldDescriptor::rationals();
    const AffineMap m(q(1), q(2), q(3), q(7), q(-1), q(1, 2));
    CHECK(affine_from_json(Q, to_json(m)) == m);
    CHECK_THROWS_AS(affine_from_json(Q, parse_json(R"({"m":[[1,2],[3,7]]})")), ParseError);
    CHECK_THROWS_AS(affine_from_json(Q, parse_json(R"({"m":[[1,2]],"tr":[0,0]})")), ParseError);

    const StandardFormField f(q(-1, 8), q(0), q(2));
    const Json j = to_json(f);
    CHECK(j["class"] == Json("cubic"));
    CHECK(equal_standard(standard_from_json(Q, j), f));
    // Stated class is validated.
    Json wrong = j;
    wrong["class"] = "linear";
    CHECK_THROWS_AS(standard_from_json(Q, wrong), ParseError);
    CHECK_THROWS_AS(
        standard_from_json(Q, parse_json(R"({"h":"0","k":"0","mu":"0"})")), ZeroForm);
}

TEST_CASE("monomial keys name powers compactly") {
    CHECK(monomial_key(0, 0) == "1");
    CHECK(monomial_key(1, 0) == "X");
    CHECK(monomial_key(0, 2) == "Y2");
    CHECK(monomial_key(2, 2) == "X2Y2");
    CHECK(monomial_key(1, 3) == "XY3");
}

TEST_CASE("curves round-trip with highest X power first") {
    const FieldDescriptor Q = FieldDescriptor::rationals();
    Poly2 curve = Poly2::constant(Q, q(16));
    curve.add_term({2, 0}, q(1));
    curve.add_term({1, 1}, q(-2));
    curve.add_term({0, 2}, q(1));
    curve.add_term({1, 0}, q(-8));
    curve.add_term({0, 1}, q(-8));
    const Json j = to_json(curve);
    const std::vector<std::string> keys = [&] {
        std::vector<std::string> out;
        for (const auto& [key, value] : j.items()) out.push_back(key);
        return out;
    }();
    CHECK(keys == std::vector<std::string>{"X2", "XY", "X", "Y2", "Y", "1"});
    CHECK(poly2_from_json(Q, j) == curve);
    CHECK_THROWS_AS(poly2_from_json(Q, parse_json(R"({"Z2":"1"})")), ParseError);
    CHECK_THROWS_AS(poly2_from_json(Q, parse_json(R"({"X2 ":"1"})")), ParseError);
}

TEST_CASE("envelope documents carry variant and data") {
    const Json pt = to_json(boundary(StandardFormField(q(0), q(0), q(2))));
    CHECK(pt["variant"] == Json("point"));
    CHECK(pt["point"] == parse_json(R"({"x":"0","y":"0"})"));

    const Json par = to_json(boundary(StandardFormField(q(1), q(1), q(1))));
    CHECK(par["variant"] == Json("parabola"));
    CHECK(par["coeffs"]["X2"] == Json("1"));

    const Json quartic = to_json(boundary(StandardFormField(q(0), q(1, 2), q(-1))));
    CHECK(quartic["variant"] == Json("quartic"));
    CHECK(quartic["coeffs"]["X4"] == Json("1"));
    CHECK(quartic["coeffs"]["X2Y2"] == Json("2"));
    CHECK(quartic["coeffs"]["Y"] == Json("-8"));
}

TEST_CASE("analysis of the sample quadrilateral") {
    const AnalysisDocument doc = analyze(sample_quad());
    const Json j = to_json(doc);
    CHECK(j["tool"] == Json(kToolName));
    CHECK(j["field"] == Json("rational"));
    CHECK(j["class"] == Json("cubic"));
    CHECK(j["well_centered"] == Json(true));
    CHECK(j["standard"] == parse_json(R"({"h":"-1/8","k":"0","mu":"2","class":"cubic"})"));
    CHECK(j["polynomials"]["degree"] == Json(3));
    CHECK(j["envelope"]["variant"] == Json("quartic"));
    CHECK(j["input"].contains("quadrilateral"));
    CHECK(j["singular_points"].is_array());
    // Singular points come back in the input frame: on the input envelope.
    REQUIRE(doc.envelope.curve.has_value());
    for (const Json& sp : j["singular_points"]) {
        const FieldElement x = element_from_json(doc.field, sp["x"]);
        const FieldElement y = element_from_json(doc.field, sp["y"]);
        CHECK(doc.envelope.curve->eval({x, y}).is_zero());
    }

    const AnalysisDocument tdoc = analyze(StandardFormField(q(0), q(1, 2), q(-1)));
    const Json tj = to_json(tdoc);
    CHECK(tj["input"].contains("triple"));
    CHECK(!tj.contains("standardizing_map"));
    CHECK(tj["singular_points"].size() == 1);  // one rational cusp
}

TEST_CASE("census reports serialize completely") {
    CensusOptions opts;
    opts.full = true;
    const Json j = to_json(run_census(3, opts));
    CHECK(j["p"] == Json(3));
    CHECK(j["triples"] == Json(18));
    CHECK(j["classes"].size() == 2);
    CHECK(j["classes"][0]["square_mu"] == Json(true));
    CHECK(j["classes"][0]["representative"]["mu"] == Json("1"));
    CHECK(j["realized"] == Json(13));
    CHECK(j["validated_pairs"] == Json(10));
    CHECK(j.contains("wall_time_seconds"));
}

TEST_CASE("emit-parse-emit is a fixed point") {
    const Json docs[] = {
        to_json(analyze(sample_quad())),
        to_json(analyze(StandardFormField(q(0), q(1, 2), q(1)))),
        to_json(run_census(5)),
        to_json(sample_quad()),
    };
    for (const Json& doc : docs) {
        const std::string once = emit(doc);
        const std::string twice = emit(parse_json(once));
        CHECK(once == twice);
    }
    CHECK_THROWS_AS(parse_json("{not json"), ParseError);
}

}  // TEST_SUITE("io")
