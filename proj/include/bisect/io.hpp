#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bisect/boundary.hpp"
#include "bisect/census.hpp"
#include "bisect/core.hpp"
#include "bisect/plane.hpp"
#include "bisect/standard.hpp"

namespace bisect {

/// Insertion-ordered JSON so emitted documents keep a stable field order and
/// emit -> parse -> emit is byte-identical.
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "bisector";
inline constexpr const char* kToolVersion = "0.1.0";

/// Inverse of FieldDescriptor::describe: "rational", "real", or "prime:P".
/// Throws BadDescriptor on anything else.
FieldDescriptor parse_field_descriptor(const std::string& text);

/// Elements travel as strings: "a" or "a/b" for rational kinds, the decimal
/// residue for GF(p).
Json to_json(const FieldElement& x);
FieldElement element_from_json(const FieldDescriptor& desc, const Json& j);

/// {"t": ..., "u": ..., "v": ...}
Json to_json(const Line& ell);
Line line_from_json(const FieldDescriptor& desc, const Json& j);

/// {"A": line, "B": line, "A1": line, "B1": line}
Json to_json(const Quadrilateral& q);
Quadrilateral quadrilateral_from_json(const FieldDescriptor& desc, const Json& j);

/// {"m": [[a, b], [c, d]], "tr": [e, f]}
Json to_json(const AffineMap& m);
AffineMap affine_from_json(const FieldDescriptor& desc, const Json& j);

/// Finite: {"x": ..., "y": ...}; at infinity: {"direction": [t, u]}.
Json to_json(const PlanePoint& p);

/// {"h": ..., "k": ..., "mu": ..., "class": ...}
Json to_json(const StandardFormField& f);
/// The "class" entry is optional on input and validated when present.
StandardFormField standard_from_json(const FieldDescriptor& desc, const Json& j);

/// Coefficient strings from the T-power side down: c0 T^d, ..., cd U^d.
Json to_json(const BinaryForm& form);

/// {"Phi": [...], "Psi": [...], "phi": [...], "psi": [...],
///  "degree": deg(psi - V*phi), "class": ...}
Json to_json(const FieldPolynomials& fp);

/// Monomial key of X^i Y^j in curve JSON: "1", "X", "Y2", "X2Y2", ...
std::string monomial_key(int i, int j);

/// Two-variable curves as {"X2": ..., "XY": ..., ...}, highest X power first.
Json to_json(const Poly2& curve);
Poly2 poly2_from_json(const FieldDescriptor& desc, const Json& j);

/// {"variant": "point", "point": {...}} or
/// {"variant": "parabola" | "quartic", "coeffs": {...}}
Json to_json(const BoundaryCurve& c);

Json to_json(const CensusClass& c);
Json to_json(const CensusReport& r);

/// Everything the library can say about one bisector field, assembled for
/// emission: inputs, classification, standard data, reduced polynomials,
/// envelope, and the envelope's singular points, all in the input frame.
struct AnalysisDocument {
    FieldDescriptor field;
    std::optional<Quadrilateral> input_quadrilateral;  ///< quadrilateral runs
    std::optional<StandardFormField> input_triple;     ///< triple runs
    FieldPolynomials polynomials;
    std::optional<AffineMap> standardizing_map;        ///< quadrilateral runs
    StandardFormField standard;
    bool well_centered = false;
    BoundaryCurve envelope;
    std::vector<PlanePoint> singular_points;
};

AnalysisDocument analyze(const Quadrilateral& q);
AnalysisDocument analyze(const StandardFormField& f);

/// Self-describing document: embeds tool name, version, and field descriptor.
Json to_json(const AnalysisDocument& doc);

/// to_json with a trailing newline, the canonical file form.
std::string emit(const Json& j);

/// Parse with nlohmann errors converted to ParseError.
Json parse_json(const std::string& text);

}  // namespace bisect
