#pragma once

#include <optional>

#include "bisect/core.hpp"
#include "bisect/plane.hpp"

namespace bisect {

/// A bisector field in standard position: one line pair on the coordinate
/// axes, center at (h, k), null slopes the square roots of mu (mu != 0).
/// The reduced data is Phi = T^2 - mu*U^2, Psi = 4TU(kT + mu*h*U).
class StandardFormField {
public:
    StandardFormField(const FieldElement& h, const FieldElement& k, const FieldElement& mu);

    const FieldElement& h() const { return h_; }
    const FieldElement& k() const { return k_; }
    const FieldElement& mu() const { return mu_; }
    BisectorClass cls() const { return cls_; }
    const FieldDescriptor& field() const { return h_.field(); }
    PlanePoint center() const { return PlanePoint::finite(h_, k_); }

    bool operator==(const StandardFormField& rhs) const;
    bool operator!=(const StandardFormField& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    FieldElement h_, k_, mu_;
    BisectorClass cls_;
};

/// Class of the field with data (h, k, mu): Linear iff (h, k) = (0, 0),
/// Quadratic iff k^2 = h^2 * mu with (h, k) != (0, 0), Cubic otherwise.
BisectorClass classify_triple(const FieldElement& h, const FieldElement& k,
                              const FieldElement& mu);

/// Result of moving a quadrilateral into standard position.
struct Standardization {
    AffineMap map;         ///< carries the input onto `image`
    Quadrilateral image;   ///< quadrilateral in standard position
    StandardFormField field;
};

/// Find an affine map placing one non-parallel line pair of `q` (opposite
/// sides preferred, diagonals as fallback) onto the coordinate axes, and
/// read off the standard data of the transported bisector family.
Standardization standardize(const Quadrilateral& q);

/// Unreduced and reduced dual polynomials of the standard field.
FieldPolynomials standard_polynomials(const StandardFormField& f);

/// Exact equality of standard data (same h, k, mu).
bool equal_standard(const StandardFormField& lhs, const StandardFormField& rhs);

/// The degree-3 binary form  W = h*T^3 + 3k*T^2*U + 3*h*mu*T*U^2 + k*mu*U^3
/// whose projective roots give the slopes of inflection-carrying bisectors.
BinaryForm center_form(const StandardFormField& f);

/// True when the cubic resolvent `center_form` has a slope rational over the
/// coefficient field.  Linear and quadratic fields qualify automatically, and
/// the emulated-real field always qualifies.
bool well_centered(const StandardFormField& f);

/// A quadrilateral whose bisector family is exactly the standard field `f`
/// (same Phi and Psi up to one scalar).  Returns nullopt when no such
/// quadrilateral exists over the coefficient field: a linear field whose mu
/// is not a square, or a cubic field over GF(3) with square mu.
std::optional<Quadrilateral> quadrilateral_from_triple(const StandardFormField& f);

/// Paired line of a member line `ell` of the standard field `f`.  Non-null
/// members pair across slopes [t:u] <-> [mu*u:t]; null members pair with the
/// parallel line placed symmetrically about the center.  Throws NotAPair if
/// `ell` does not belong to the field.
Line partner_line(const StandardFormField& f, const Line& ell);

/// Affine map sending the member pair (ell, ell1) of `f` onto the coordinate
/// axes (ell to the vertical axis) so that the transported field again has
/// standard form, with prescribed coefficient mu2.  Requires
/// theta^2 * mu * mu2 = 1; theta is derived via a square root when not
/// supplied.  Throws ParallelPair if the two lines are parallel, NotAPair if
/// they are not paired in `f`, NotASquare if no valid theta exists.
AffineMap retarget(const StandardFormField& f, const FieldElement& mu2, const Line& ell,
                   const Line& ell1, std::optional<FieldElement> theta = std::nullopt);

/// Three-valued answer for affine equivalence queries.
enum class Equivalence { No, Yes, Undecided };

std::string to_string(Equivalence e);

/// Decide whether two standard fields over the same coefficient field are
/// affinely equivalent.  Different classes: No.  Linear/linear and
/// quadratic/quadratic: Yes.  Cubic/cubic: No unless mu1*mu2 is a square;
/// Yes when it is and both fields are well centered; Undecided otherwise.
Equivalence affinely_equivalent(const StandardFormField& f1, const StandardFormField& f2);

/// Explicit affine map transporting field f1 onto field f2, when one is
/// constructible: quadratic/quadratic always, cubic/cubic when both are well
/// centered and mu1*mu2 is a square, linear/linear when mu1*mu2 is a square.
/// Returns nullopt when equivalence fails, is undecided, or no witness can
/// be built by radicals over the coefficient field.
std::optional<AffineMap> equivalence_witness(const StandardFormField& f1,
                                             const StandardFormField& f2);

}  // namespace bisect
