#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "bisect/forms.hpp"

namespace bisect::render {

namespace {

constexpr int kCanvas = 600;      // square canvas, pixels
constexpr int kColumns = 480;     // marching resolution in x
constexpr int kScanSteps = 240;   // sign-change scan resolution in y

double to_double(const FieldElement& x) { return x.rational_value().convert_to<double>(); }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    // avoid the two representations of zero
    if (std::string(buf) == "-0.00") return "0.00";
    return buf;
}

struct Mapper {
    Window w;
    double px(double x) const { return (x - w.x0) / (w.x1 - w.x0) * kCanvas; }
    double py(double y) const { return (w.y1 - y) / (w.y1 - w.y0) * kCanvas; }
    bool inside(double x, double y) const {
        return x >= w.x0 && x <= w.x1 && y >= w.y0 && y <= w.y1;
    }
};

/// Segment of t*x - u*y + v = 0 inside the window, or false when it misses.
bool clip_line(double t, double u, double v, const Window& w, double seg[4]) {
    std::vector<std::pair<double, double>> pts;
    const double eps = 1e-9 * (std::abs(w.x1 - w.x0) + std::abs(w.y1 - w.y0));
    auto push = [&](double x, double y) {
        if (x < w.x0 - eps || x > w.x1 + eps || y < w.y0 - eps || y > w.y1 + eps) return;
        for (const auto& [px, py] : pts)
            if (std::abs(px - x) < eps && std::abs(py - y) < eps) return;
        pts.emplace_back(x, y);
    };
    if (u != 0) {
        push(w.x0, (t * w.x0 + v) / u);
        push(w.x1, (t * w.x1 + v) / u);
    }
    if (t != 0) {
        push((u * w.y0 - v) / t, w.y0);
        push((u * w.y1 - v) / t, w.y1);
    }
    if (pts.size() < 2) return false;
    seg[0] = pts[0].first;
    seg[1] = pts[0].second;
    seg[2] = pts[1].first;
    seg[3] = pts[1].second;
    return true;
}

void emit_line(std::ostringstream& svg, const Mapper& map, const Line& ell, const char* cls) {
    double seg[4];
    if (!clip_line(to_double(ell.t()), to_double(ell.u()), to_double(ell.v()), map.w, seg))
        return;
    svg << "  <line class=\"" << cls << "\" x1=\"" << fmt(map.px(seg[0])) << "\" y1=\""
        << fmt(map.py(seg[1])) << "\" x2=\"" << fmt(map.px(seg[2])) << "\" y2=\""
        << fmt(map.py(seg[3])) << "\"/>\n";
}

void emit_dot(std::ostringstream& svg, const Mapper& map, double x, double y, const char* cls,
              double r) {
    if (!map.inside(x, y)) return;
    svg << "  <circle class=\"" << cls << "\" cx=\"" << fmt(map.px(x)) << "\" cy=\""
        << fmt(map.py(y)) << "\" r=\"" << fmt(r) << "\"/>\n";
}

/// Double coefficients of the curve, exact until this point.
struct CurveTerms {
    struct Term {
        int i, j;
        double c;
    };
    std::vector<Term> terms;
    int y_degree = 0;

    explicit CurveTerms(const Poly2& curve) {
        for (const auto& [e, c] : curve.terms()) {
            terms.push_back({e[0], e[1], to_double(c)});
            y_degree = std::max(y_degree, e[1]);
        }
    }

    /// Coefficients of y^0..y^d at a fixed x.
    std::vector<double> at_x(double x) const {
        std::vector<double> out(static_cast<std::size_t>(y_degree) + 1, 0.0);
        for (const Term& t : terms) out[static_cast<std::size_t>(t.j)] += t.c * std::pow(x, t.i);
        return out;
    }
};

double eval_poly(const std::vector<double>& c, double y) {
    double out = 0;
    for (std::size_t j = c.size(); j-- > 0;) out = out * y + c[j];
    return out;
}

/// Ascending y-roots in [y0, y1] by scan + bisection.
std::vector<double> column_roots(const std::vector<double>& c, double y0, double y1) {
    std::vector<double> roots;
    const double step = (y1 - y0) / kScanSteps;
    double prev = eval_poly(c, y0);
    for (int s = 1; s <= kScanSteps; ++s) {
        const double y = y0 + step * s;
        const double cur = eval_poly(c, y);
        if (prev == 0) roots.push_back(y - step);
        if ((prev < 0 && cur > 0) || (prev > 0 && cur < 0)) {
            double lo = y - step, hi = y, flo = prev;
            for (int it = 0; it < 48; ++it) {
                const double mid = (lo + hi) / 2, fm = eval_poly(c, mid);
                if ((flo < 0) == (fm < 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back((lo + hi) / 2);
        }
        prev = cur;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// March the curve column by column, threading roots into polyline chains.
void emit_curve(std::ostringstream& svg, const Mapper& map, const Poly2& curve) {
    const CurveTerms terms(curve);
    if (terms.y_degree == 0) return;
    struct Chain {
        std::vector<std::pair<double, double>> pts;
        bool open = true;
    };
    std::vector<Chain> chains;
    const double dx = (map.w.x1 - map.w.x0) / kColumns;
    const double join = 4.0 * (map.w.y1 - map.w.y0) / kScanSteps;
    for (int col = 0; col < kColumns; ++col) {
        const double x = map.w.x0 + dx * (col + 0.5);
        const std::vector<double> roots = column_roots(terms.at_x(x), map.w.y0, map.w.y1);
        std::vector<bool> used(roots.size(), false);
        for (Chain& chain : chains) {
            if (!chain.open) continue;
            const double last = chain.pts.back().second;
            int best = -1;
            double gap = join;
            for (std::size_t r = 0; r < roots.size(); ++r) {
                if (used[r]) continue;
                const double d = std::abs(roots[r] - last);
                if (d < gap) {
                    gap = d;
                    best = static_cast<int>(r);
                }
            }
            if (best >= 0) {
                used[static_cast<std::size_t>(best)] = true;
                chain.pts.emplace_back(x, roots[static_cast<std::size_t>(best)]);
            } else {
                chain.open = false;
            }
        }
        for (std::size_t r = 0; r < roots.size(); ++r)
            if (!used[r]) chains.push_back(Chain{{{x, roots[r]}}, true});
    }
    for (const Chain& chain : chains) {
        if (chain.pts.size() < 2) continue;
        svg << "  <polyline class=\"envelope\" points=\"";
        for (std::size_t i = 0; i < chain.pts.size(); ++i) {
            if (i) svg << ' ';
            svg << fmt(map.px(chain.pts[i].first)) << ',' << fmt(map.py(chain.pts[i].second));
        }
        svg << "\"/>\n";
    }
}

}  // namespace

std::string render_svg(const Scene& scene, const Window& window, int samples) {
    const FieldDescriptor desc = scene.polynomials.field();
    const Mapper map{window};
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
        << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n"
        << "  <style>\n"
        << "    .bisector { stroke: #7aa6c2; stroke-width: 0.8; }\n"
        << "    .pencil { stroke: #b0b0b0; stroke-width: 0.8; stroke-dasharray: 6 4; }\n"
        << "    .envelope { stroke: #202020; stroke-width: 2; fill: none; }\n"
        << "    .midpoint { fill: #e08030; }\n"
        << "    .center { fill: #c03030; }\n"
        << "    .envelope-point { fill: #202020; }\n"
        << "  </style>\n"
        << "  <rect width=\"" << kCanvas << "\" height=\"" << kCanvas << "\" fill=\"white\"/>\n";

    // Sampled moving bisectors: slopes spread uniformly over [-10, 10], plus
    // the vertical direction.  Slopes stay exact rationals.
    std::vector<P1Point> slopes;
    for (int i = 0; i < samples; ++i)
        slopes.push_back(P1Point::finite(FieldElement(
            desc, make_rational(BigInt(-10 * samples + 10 * (2 * i + 1)), BigInt(samples)))));
    slopes.push_back(P1Point::infinity(desc));
    std::vector<Line> drawn;
    for (const P1Point& slope : slopes)
        if (const auto ell = moving_bisector(scene.polynomials, slope)) {
            emit_line(svg, map, *ell, "bisector");
            drawn.push_back(*ell);
        }

    // Pencils: at each projective root of Phi whose whole pencil bisects,
    // a sheaf of dashed parallels with small integer offsets.
    for (const P1Point& root : p1_roots(scene.polynomials.Phi)) {
        if (bisector_at_slope(scene.polynomials, root).status != SlopeStatus::Pencil) continue;
        for (int off = -3; off <= 3; ++off)
            emit_line(svg, map, Line(root.t(), root.u(), FieldElement::from_int(desc, off)),
                      "pencil");
    }

    // Envelope.
    if (scene.envelope.variant == BoundaryCurve::Variant::Point) {
        emit_dot(svg, map, to_double(scene.envelope.point->x()),
                 to_double(scene.envelope.point->y()), "envelope-point", 5.0);
    } else {
        emit_curve(svg, map, *scene.envelope.curve);
    }

    // Midpoints of the drawn bisectors, when a quadrilateral provides the
    // opposite-side pair that cuts them.
    if (scene.quad)
        for (const Line& ell : drawn)
            if (const auto mid = mid_pair(scene.quad->A(), scene.quad->A1(), ell))
                if (mid->is_finite())
                    emit_dot(svg, map, to_double(mid->x()), to_double(mid->y()), "midpoint", 2.5);

    if (scene.center.is_finite())
        emit_dot(svg, map, to_double(scene.center.x()), to_double(scene.center.y()), "center",
                 4.0);

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace bisect::render
