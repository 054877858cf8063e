#include "bisect/io.hpp"

#include <cctype>

#include "bisect/error.hpp"

namespace bisect {

namespace {

const Json& member(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::string text_of(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
    throw ParseError("expected a field element as a string");
}

}  // namespace

FieldDescriptor parse_field_descriptor(const std::string& text) {
    if (text == "rational") return FieldDescriptor::rationals();
    if (text == "real") return FieldDescriptor::reals();
    const std::string prefix = "prime:";
    if (text.rfind(prefix, 0) == 0) {
        const std::string digits = text.substr(prefix.size());
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            throw BadDescriptor("bad prime in field descriptor \"" + text + "\"");
        return FieldDescriptor::prime(std::stoll(digits));
    }
    throw BadDescriptor("unknown field descriptor \"" + text +
                        "\" (want rational, real, or prime:P)");
}

Json to_json(const FieldElement& x) { return Json(x.to_string()); }

FieldElement element_from_json(const FieldDescriptor& desc, const Json& j) {
    return FieldElement::parse(desc, text_of(j));
}

Json to_json(const Line& ell) {
    return Json{{"t", to_json(ell.t())}, {"u", to_json(ell.u())}, {"v", to_json(ell.v())}};
}

Line line_from_json(const FieldDescriptor& desc, const Json& j) {
    return Line(element_from_json(desc, member(j, "t")), element_from_json(desc, member(j, "u")),
                element_from_json(desc, member(j, "v")));
}

Json to_json(const Quadrilateral& q) {
    return Json{{"A", to_json(q.A())},
                {"B", to_json(q.B())},
                {"A1", to_json(q.A1())},
                {"B1", to_json(q.B1())}};
}

Quadrilateral quadrilateral_from_json(const FieldDescriptor& desc, const Json& j) {
    return Quadrilateral(
        line_from_json(desc, member(j, "A")), line_from_json(desc, member(j, "B")),
        line_from_json(desc, member(j, "A1")), line_from_json(desc, member(j, "B1")));
}

Json to_json(const AffineMap& m) {
    return Json{{"m", Json::array({Json::array({to_json(m.a()), to_json(m.b())}),
                                   Json::array({to_json(m.c()), to_json(m.d())})})},
                {"tr", Json::array({to_json(m.e()), to_json(m.f())})}};
}

AffineMap affine_from_json(const FieldDescriptor& desc, const Json& j) {
    const Json& m = member(j, "m");
    const Json& tr = member(j, "tr");
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
        !m[1].is_array() || m[1].size() != 2 || !tr.is_array() || tr.size() != 2)
        throw ParseError("affine map wants \"m\" as a 2x2 array and \"tr\" as a pair");
    return AffineMap(element_from_json(desc, m[0][0]), element_from_json(desc, m[0][1]),
                     element_from_json(desc, m[1][0]), element_from_json(desc, m[1][1]),
                     element_from_json(desc, tr[0]), element_from_json(desc, tr[1]));
}

Json to_json(const PlanePoint& p) {
    if (p.is_finite()) return Json{{"x", to_json(p.x())}, {"y", to_json(p.y())}};
    return Json{{"direction", Json::array({to_json(p.direction().t()), to_json(p.direction().u())})}};
}

Json to_json(const StandardFormField& f) {
    return Json{{"h", to_json(f.h())},
                {"k", to_json(f.k())},
                {"mu", to_json(f.mu())},
                {"class", to_string(f.cls())}};
}

StandardFormField standard_from_json(const FieldDescriptor& desc, const Json& j) {
    const StandardFormField f(element_from_json(desc, member(j, "h")),
                              element_from_json(desc, member(j, "k")),
                              element_from_json(desc, member(j, "mu")));
    if (j.is_object() && j.contains("class")) {
        const std::string stated = member(j, "class").get<std::string>();
        if (stated != to_string(f.cls()))
            throw ParseError("triple is " + to_string(f.cls()) + ", not \"" + stated + "\"");
    }
    return f;
}

Json to_json(const BinaryForm& form) {
    Json out = Json::array();
    for (int i = 0; i <= form.degree(); ++i) out.push_back(to_json(form.coeff(i)));
    return out;
}

Json to_json(const FieldPolynomials& fp) {
    return Json{{"Phi", to_json(fp.Phi)}, {"Psi", to_json(fp.Psi)}, {"phi", to_json(fp.phi)},
                {"psi", to_json(fp.psi)}, {"degree", fp.f_degree},  {"class", to_string(fp.cls)}};
}

std::string monomial_key(int i, int j) {
    if (i == 0 && j == 0) return "1";
    std::string out;
    if (i > 0) {
        out += 'X';
        if (i > 1) out += std::to_string(i);
    }
    if (j > 0) {
        out += 'Y';
        if (j > 1) out += std::to_string(j);
    }
    return out;
}

Json to_json(const Poly2& curve) {
    Json out = Json::object();
    const auto& terms = curve.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        out[monomial_key(it->first[0], it->first[1])] = to_json(it->second);
    return out;
}

Poly2 poly2_from_json(const FieldDescriptor& desc, const Json& j) {
    if (!j.is_object()) throw ParseError("expected a monomial-to-coefficient object");
    Poly2 out = Poly2::constant(desc, FieldElement::zero(desc));
    for (const auto& [key, value] : j.items()) {
        int exps[2] = {0, 0};
        std::size_t pos = 0;
        if (key == "1") {
            pos = 1;
        } else {
            for (int var = 0; var < 2; ++var) {
                const char name = var == 0 ? 'X' : 'Y';
                if (pos < key.size() && key[pos] == name) {
                    ++pos;
                    std::size_t digits = pos;
                    while (digits < key.size() &&
                           std::isdigit(static_cast<unsigned char>(key[digits])))
                        ++digits;
                    exps[var] = digits == pos ? 1 : std::stoi(key.substr(pos, digits - pos));
                    pos = digits;
                }
            }
        }
        if (pos != key.size() || (exps[0] == 0 && exps[1] == 0 && key != "1"))
            throw ParseError("bad monomial key \"" + key + "\"");
        out.add_term({exps[0], exps[1]}, element_from_json(desc, value));
    }
    return out;
}

Json to_json(const BoundaryCurve& c) {
    switch (c.variant) {
        case BoundaryCurve::Variant::Point:
            return Json{{"variant", "point"}, {"point", to_json(*c.point)}};
        case BoundaryCurve::Variant::Parabola:
            return Json{{"variant", "parabola"}, {"coeffs", to_json(*c.curve)}};
        case BoundaryCurve::Variant::Quartic:
        default:
            return Json{{"variant", "quartic"}, {"coeffs", to_json(*c.curve)}};
    }
}

Json to_json(const CensusClass& c) {
    Json out{{"square_mu", c.square_mu}};
    out["representative"] = c.representative ? to_json(*c.representative) : Json(nullptr);
    out["size"] = c.size;
    out["realized"] = c.realized;
    return out;
}

Json to_json(const CensusReport& r) {
    Json classes = Json::array();
    for (const CensusClass& c : r.classes) classes.push_back(to_json(c));
    return Json{{"p", r.p},
                {"full", r.full},
                {"triples", r.triples},
                {"linear", r.linear},
                {"quadratic", r.quadratic},
                {"cubic", r.cubic},
                {"well_centered_cubic", r.well_centered_cubic},
                {"dickson_hits", r.dickson_hits},
                {"classes", classes},
                {"undecided_pairs", r.undecided_pairs},
                {"realized", r.realized},
                {"unrealized", r.unrealized},
                {"validated_pairs", r.validated_pairs},
                {"wall_time_seconds", r.wall_time_seconds}};
}

AnalysisDocument analyze(const Quadrilateral& q) {
    const Standardization s = standardize(q);
    AnalysisDocument doc{q.field(),
                         q,
                         std::nullopt,
                         bisector_field(q),
                         s.map,
                         s.field,
                         well_centered(s.field),
                         boundary_of(q),
                         {}};
    const AffineMap back = s.map.inverse();
    for (const PlanePoint& pt : singular_points(s.field))
        doc.singular_points.push_back(back.apply(pt));
    return doc;
}

AnalysisDocument analyze(const StandardFormField& f) {
    return AnalysisDocument{f.field(),           std::nullopt, f,
                            standard_polynomials(f), std::nullopt, f,
                            well_centered(f),    boundary(f),  singular_points(f)};
}

Json to_json(const AnalysisDocument& doc) {
    Json out{{"tool", kToolName}, {"version", kToolVersion}, {"field", doc.field.describe()}};
    Json input = Json::object();
    if (doc.input_quadrilateral) input["quadrilateral"] = to_json(*doc.input_quadrilateral);
    if (doc.input_triple) input["triple"] = to_json(*doc.input_triple);
    out["input"] = input;
    out["class"] = to_string(doc.standard.cls());
    out["well_centered"] = doc.well_centered;
    out["standard"] = to_json(doc.standard);
    if (doc.standardizing_map) out["standardizing_map"] = to_json(*doc.standardizing_map);
    out["polynomials"] = to_json(doc.polynomials);
    out["envelope"] = to_json(doc.envelope);
    Json singular = Json::array();
    for (const PlanePoint& pt : doc.singular_points) singular.push_back(to_json(pt));
    out["singular_points"] = singular;
    return out;
}

std::string emit(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace bisect
