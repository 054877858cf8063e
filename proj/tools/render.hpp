#pragma once

#include <optional>
#include <string>

#include "bisect/boundary.hpp"
#include "bisect/core.hpp"
#include "bisect/plane.hpp"

namespace bisect::render {

/// Axis-aligned view rectangle in plane coordinates.
struct Window {
    double x0 = -5, y0 = -5, x1 = 5, y1 = 5;
};

/// Everything one figure shows.  All members are exact; doubles appear only
/// when coordinates are written out.
struct Scene {
    FieldPolynomials polynomials;
    BoundaryCurve envelope;
    PlanePoint center;
    std::optional<Quadrilateral> quad;  ///< enables bisector midpoints
};

/// Deterministic standalone SVG: `samples` moving bisectors, parallel pencils
/// where present, the envelope as marched polylines (or a point), midpoints
/// of the drawn bisectors, and the center.
std::string render_svg(const Scene& scene, const Window& window, int samples);

}  // namespace bisect::render
