#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "bisect/error.hpp"

namespace bisect {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// num/den as a canonical rational; unlike the BigRational(n, d) constructor
/// this accepts negative denominators.  Throws DivisionByZero on den == 0.
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    return BigRational(num) / BigRational(den);
}

/// Coefficient domains supported by the library.  All of them have
/// characteristic different from 2; prime fields are odd by construction.
enum class FieldKind {
    Rational,     ///< exact rationals of unbounded size
    Prime,        ///< GF(p) for an odd prime p
    RealEmulated, ///< rationals with ordered-field (real closed) semantics
};

/// Identifies the coefficient domain an element lives in.
struct FieldDescriptor {
    FieldKind kind = FieldKind::Rational;
    std::int64_t p = 0; // only meaningful for FieldKind::Prime

    static FieldDescriptor rationals() { return {FieldKind::Rational, 0}; }
    static FieldDescriptor reals() { return {FieldKind::RealEmulated, 0}; }
    /// Throws BadDescriptor unless p is an odd prime that fits residue
    /// arithmetic in 64-bit intermediates.
    static FieldDescriptor prime(std::int64_t p);

    bool operator==(const FieldDescriptor&) const = default;

    std::string describe() const;
};

bool is_odd_prime(std::int64_t n);

/// A value of one of the supported exact fields.  Elements carry their
/// descriptor and refuse mixed-field arithmetic.  Rationals are kept in
/// lowest terms with positive denominator; residues in [0, p).
class FieldElement {
public:
    FieldElement() = default; // zero of the rationals
    FieldElement(FieldDescriptor desc, const BigRational& value);
    FieldElement(FieldDescriptor desc, std::int64_t value);

    static FieldElement zero(FieldDescriptor desc) { return {desc, 0}; }
    static FieldElement one(FieldDescriptor desc) { return {desc, 1}; }
    static FieldElement from_int(FieldDescriptor desc, std::int64_t n) { return {desc, n}; }
    /// Accepts "a" or "a/b" for rational kinds, a decimal residue for GF(p).
    static FieldElement parse(FieldDescriptor desc, const std::string& text);

    const FieldDescriptor& field() const { return desc_; }
    bool is_zero() const;
    bool is_one() const;

    /// Exact rational payload; also valid for real-emulated elements.
    /// Throws FieldMismatch for residues.
    const BigRational& rational_value() const;
    /// Residue in [0, p).  Throws FieldMismatch for rational kinds.
    std::int64_t residue() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    /// Small integer scalars appear all over the closed formulas; this keeps
    /// them readable in generic code shared with polynomial coefficients.
    friend FieldElement operator*(std::int64_t n, const FieldElement& x) {
        return FieldElement(x.desc_, n) * x;
    }

    FieldElement inverse() const;
    FieldElement pow(std::int64_t e) const; // e may be negative for nonzero elements

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }
    /// Numeric order for rational kinds, residue order for GF(p).  Useful for
    /// containers; only comparable within one field.
    std::strong_ordering operator<=>(const FieldElement& rhs) const;

    std::string to_string() const;

private:
    void require_same(const FieldElement& rhs) const;

    FieldDescriptor desc_ = FieldDescriptor::rationals();
    BigRational q_ = 0;     // rational kinds
    std::int64_t r_ = 0;    // prime kind
};

/// True iff x is a square in its field.  For the real-emulated kind this is
/// the sign test; for GF(p) the Euler criterion (0 counts as a square).
bool is_square(const FieldElement& x);

/// A square root when one exists in the field, with a canonical choice:
/// nonnegative for rational kinds, residue in [0, p/2] for GF(p).
/// Real-emulated mode throws UnsupportedInMode for nonnegative values that
/// are not perfect rational squares (the root exists but is not exact).
std::optional<FieldElement> sqrt_opt(const FieldElement& x);

} // namespace bisect
