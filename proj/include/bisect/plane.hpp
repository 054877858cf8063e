#pragma once

#include <array>
#include <optional>
#include <string>

#include "bisect/forms.hpp"

namespace bisect {

/// An affine line t*X - u*Y + v = 0 in canonical form: u = 1 whenever the
/// line is not vertical, otherwise t = 1.  The slope is [t:u] as a point of
/// the projective line ([1:0] for vertical lines).
class Line {
public:
    Line(const FieldElement& t, const FieldElement& u, const FieldElement& v);

    const FieldElement& t() const { return t_; }
    const FieldElement& u() const { return u_; }
    const FieldElement& v() const { return v_; }
    const FieldDescriptor& field() const { return t_.field(); }

    P1Point slope() const { return P1Point(t_, u_); }
    bool vertical() const { return u_.is_zero(); }
    bool parallel_to(const Line& rhs) const { return slope() == rhs.slope(); }

    bool operator==(const Line& rhs) const { return t_ == rhs.t_ && u_ == rhs.u_ && v_ == rhs.v_; }
    bool operator!=(const Line& rhs) const { return !(*this == rhs); }
    bool operator<(const Line& rhs) const;

    std::string to_string() const;

private:
    FieldElement t_, u_, v_;
};

/// A point of the affine plane or a direction at infinity.
class PlanePoint {
public:
    static PlanePoint finite(const FieldElement& x, const FieldElement& y);
    static PlanePoint at_infinity(const P1Point& direction);

    bool is_finite() const { return finite_; }
    const FieldElement& x() const;
    const FieldElement& y() const;
    const P1Point& direction() const;

    bool operator==(const PlanePoint& rhs) const;
    bool operator!=(const PlanePoint& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    PlanePoint(bool finite, FieldElement x, FieldElement y, std::optional<P1Point> dir)
        : finite_(finite), x_(std::move(x)), y_(std::move(y)), dir_(std::move(dir)) {}

    bool finite_;
    FieldElement x_, y_;
    std::optional<P1Point> dir_;
};

/// The line through two distinct points; when one of them is at infinity,
/// the line through the finite one with that slope.
Line line_through(const PlanePoint& p, const PlanePoint& q);

/// Intersection point; at infinity for parallel lines, IdenticalLines error
/// for equal ones.
PlanePoint intersect(const Line& a, const Line& b);

/// Midpoint of two finite points (characteristic is never 2 here).
PlanePoint midpoint(const PlanePoint& p, const PlanePoint& q);

/// Midpoint of the two intersection points of ell with the pair {a, b}.
/// Conventions: undefined (nullopt) when ell is a member of the pair or both
/// intersections are at infinity; the at-infinity point in ell's direction
/// when exactly one intersection is at infinity.
std::optional<PlanePoint> mid_pair(const Line& a, const Line& b, const Line& ell);

/// Invertible affine map (x, y) -> (a x + b y + e, c x + d y + f).
class AffineMap {
public:
    AffineMap(const FieldElement& a, const FieldElement& b, const FieldElement& c,
              const FieldElement& d, const FieldElement& e, const FieldElement& f);

    static AffineMap identity(FieldDescriptor desc);
    static AffineMap translation(const FieldElement& e, const FieldElement& f);
    /// Linear map with zero translation.
    static AffineMap linear(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                            const FieldElement& d);

    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    const FieldElement& c() const { return c_; }
    const FieldElement& d() const { return d_; }
    const FieldElement& e() const { return e_; }
    const FieldElement& f() const { return f_; }
    const FieldDescriptor& field() const { return a_.field(); }

    FieldElement det() const { return a_ * d_ - b_ * c_; }
    AffineMap inverse() const;
    /// Composition: (*this after rhs), i.e. apply rhs first.
    AffineMap after(const AffineMap& rhs) const;

    PlanePoint apply(const PlanePoint& p) const;
    Line apply(const Line& ell) const;

    bool operator==(const AffineMap& rhs) const;

    std::string to_string() const;

private:
    FieldElement a_, b_, c_, d_, e_, f_;
};

/// Four lines A, B, A1, B1 in cyclic order; opposite sides are (A, A1) and
/// (B, B1).  Validity: sides pairwise distinct, adjacent sides never
/// parallel, and the four sides not all through one point.  Opposite sides
/// may be parallel (trapezoids and parallelograms are allowed).
class Quadrilateral {
public:
    Quadrilateral(Line a, Line b, Line a1, Line b1);

    const Line& A() const { return a_; }
    const Line& B() const { return b_; }
    const Line& A1() const { return a1_; }
    const Line& B1() const { return b1_; }
    const FieldDescriptor& field() const { return a_.field(); }

    std::array<Line, 4> sides() const { return {a_, b_, a1_, b1_}; }
    /// Vertices A*B, B*A1, A1*B1, B1*A; always finite for a valid quadrilateral.
    std::array<PlanePoint, 4> vertices() const;
    /// The two lines through opposite vertex pairs.
    std::array<Line, 2> diagonals() const;
    /// Average of the four vertices.
    PlanePoint centroid() const;

    bool has_side(const Line& ell) const;

    bool operator==(const Quadrilateral& rhs) const;

private:
    Line a_, b_, a1_, b1_;
};

Quadrilateral apply(const AffineMap& m, const Quadrilateral& q);

/// Decides from first principles whether ell meets the defining midpoint
/// condition for q: it is a side, or it is parallel to a parallel pair of
/// opposite sides, or it crosses all four sides and the two point-pairs cut
/// out by the opposite-side pairs share their midpoint.  This is the slow
/// reference predicate the algebraic machinery is tested against.
bool bisects_direct(const Quadrilateral& q, const Line& ell);

/// All p^2 + p lines of the plane over GF(p), in canonical form and sorted.
/// Only meaningful for prime descriptors.
std::vector<Line> all_lines(FieldDescriptor desc);

} // namespace bisect
