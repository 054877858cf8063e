#include "bisect/forms.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bisect {
namespace {

// Index of the first nonzero coefficient counted from the T side, or -1 for
// the zero form.  U^k divides a form exactly when its first k coefficients
// vanish.
int first_nonzero(const std::vector<FieldElement>& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) return static_cast<int>(i);
    return -1;
}

// Remainder of dense descending-coefficient division; both inputs have
// nonzero leading coefficients, output is trimmed the same way.
std::vector<FieldElement> poly_rem(std::vector<FieldElement> a, const std::vector<FieldElement>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        FieldElement factor = a[0] / b[0];
        for (std::size_t j = 0; j < b.size(); ++j)
            a[j] -= factor * b[j];
        std::size_t lead = 0;
        while (lead < a.size() && a[lead].is_zero()) ++lead;
        a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(lead));
    }
    return a;
}

std::vector<FieldElement> poly_gcd(std::vector<FieldElement> a, std::vector<FieldElement> b) {
    while (!b.empty()) {
        auto r = poly_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    const FieldElement lead = a[0]; // a nonempty since not both inputs were zero
    for (auto& c : a) c = c / lead; // monic
    return a;
}

std::vector<BigInt> divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> out;
    for (BigInt i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            out.push_back(i);
            out.push_back(n / i);
        }
    }
    return out;
}

} // namespace

P1Point::P1Point(const FieldElement& t, const FieldElement& u) : t_(t), u_(u) {
    if (t.field() != u.field()) throw FieldMismatch("projective coordinates in different fields");
    if (t.is_zero() && u.is_zero()) throw BothZero("[0:0] is not a point of the projective line");
    if (!u_.is_zero()) {
        t_ = t_ / u_;
        u_ = FieldElement::one(u_.field());
    } else {
        t_ = FieldElement::one(t_.field());
    }
}

bool P1Point::operator<(const P1Point& rhs) const {
    if (u_ != rhs.u_) return u_ < rhs.u_; // [1:0] sorts before all finite slopes
    return t_ < rhs.t_;
}

BinaryForm::BinaryForm(FieldDescriptor desc, int degree) : desc_(desc) {
    if (degree < 0) throw DegreeMismatch("binary form degree must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(degree) + 1, FieldElement::zero(desc));
}

BinaryForm::BinaryForm(FieldDescriptor desc, std::vector<FieldElement> coeffs)
    : desc_(desc), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DegreeMismatch("binary form needs at least one coefficient");
    for (const auto& c : coeffs_)
        if (c.field() != desc_) throw FieldMismatch("binary form coefficient in wrong field");
}

void BinaryForm::set_coeff(int i, const FieldElement& c) {
    if (c.field() != desc_) throw FieldMismatch("binary form coefficient in wrong field");
    coeffs_.at(static_cast<std::size_t>(i)) = c;
}

bool BinaryForm::is_zero() const {
    return first_nonzero(coeffs_) < 0;
}

FieldElement BinaryForm::eval(const FieldElement& t, const FieldElement& u) const {
    const int d = degree();
    FieldElement acc = FieldElement::zero(desc_);
    for (int i = 0; i <= d; ++i)
        acc += coeffs_[static_cast<std::size_t>(i)] * t.pow(d - i) * u.pow(i);
    return acc;
}

BinaryForm BinaryForm::operator-() const {
    BinaryForm out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& rhs) {
    if (desc_ != rhs.desc_) throw FieldMismatch("mixed-field form arithmetic");
    if (degree() != rhs.degree())
        throw DegreeMismatch("cannot add forms of degree " + std::to_string(degree()) + " and " +
                             std::to_string(rhs.degree()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& rhs) {
    return *this += -rhs;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    if (a.desc_ != b.desc_) throw FieldMismatch("mixed-field form arithmetic");
    BinaryForm out(a.desc_, a.degree() + b.degree());
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j)
            out.coeffs_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    return out;
}

BinaryForm operator*(BinaryForm a, const FieldElement& s) {
    if (a.desc_ != s.field()) throw FieldMismatch("scalar in wrong field");
    for (auto& c : a.coeffs_) c *= s;
    return a;
}

BinaryForm BinaryForm::derivative_T() const {
    const int d = degree();
    if (d == 0) return BinaryForm(desc_, 0); // the zero constant
    BinaryForm out(desc_, d - 1);
    for (int i = 0; i < d; ++i)
        out.coeffs_[static_cast<std::size_t>(i)] = (d - i) * coeffs_[static_cast<std::size_t>(i)];
    return out;
}

BinaryForm BinaryForm::derivative_U() const {
    const int d = degree();
    if (d == 0) return BinaryForm(desc_, 0);
    BinaryForm out(desc_, d - 1);
    for (int i = 1; i <= d; ++i)
        out.coeffs_[static_cast<std::size_t>(i - 1)] = i * coeffs_[static_cast<std::size_t>(i)];
    return out;
}

BinaryForm BinaryForm::divide_exact(const BinaryForm& divisor) const {
    if (desc_ != divisor.desc_) throw FieldMismatch("mixed-field form arithmetic");
    if (divisor.is_zero()) throw ZeroForm("division by the zero form");
    if (is_zero()) return BinaryForm(desc_, std::max(0, degree() - divisor.degree()));

    const int af = first_nonzero(coeffs_);
    const int ag = first_nonzero(divisor.coeffs_);
    if (af < ag) throw NotDivisible("divisor has a higher power of U");

    // strip U powers, then triangular division against a nonzero T-leading coefficient
    std::vector<FieldElement> f(coeffs_.begin() + af, coeffs_.end());
    std::vector<FieldElement> g(divisor.coeffs_.begin() + ag, divisor.coeffs_.end());
    const int n = static_cast<int>(f.size()) - 1;
    const int m = static_cast<int>(g.size()) - 1;
    if (n < m) throw NotDivisible("divisor degree exceeds dividend degree");

    std::vector<FieldElement> q(static_cast<std::size_t>(n - m) + 1, FieldElement::zero(desc_));
    for (int i = 0; i <= n - m; ++i) {
        q[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] / g[0];
        for (int j = 0; j <= m; ++j)
            f[static_cast<std::size_t>(i + j)] -= q[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)];
    }
    for (const auto& c : f)
        if (!c.is_zero()) throw NotDivisible("nonzero remainder");

    // reattach the U^(af-ag) factor carried by the quotient
    std::vector<FieldElement> out(static_cast<std::size_t>(af - ag), FieldElement::zero(desc_));
    out.insert(out.end(), q.begin(), q.end());
    return BinaryForm(desc_, std::move(out));
}

BinaryForm BinaryForm::normalized() const {
    const int i = first_nonzero(coeffs_);
    if (i < 0) return *this;
    return *this * coeffs_[static_cast<std::size_t>(i)].inverse();
}

bool BinaryForm::operator==(const BinaryForm& rhs) const {
    if (desc_ != rhs.desc_) throw FieldMismatch("comparing forms over different fields");
    return coeffs_ == rhs.coeffs_;
}

bool BinaryForm::proportional_to(const BinaryForm& rhs) const {
    if (desc_ != rhs.desc_) throw FieldMismatch("comparing forms over different fields");
    if (is_zero() || rhs.is_zero()) return is_zero() && rhs.is_zero();
    if (degree() != rhs.degree()) return false;
    return normalized() == rhs.normalized();
}

std::string BinaryForm::to_string() const {
    const int d = degree();
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= d; ++i) {
        const auto& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")";
        if (d - i > 0) out << "*T" << (d - i > 1 ? "^" + std::to_string(d - i) : "");
        if (i > 0) out << "*U" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    if (first) out << "0";
    return out.str();
}

BinaryForm gcd_forms(const BinaryForm& f, const BinaryForm& g) {
    if (f.field() != g.field()) throw FieldMismatch("mixed-field gcd");
    if (f.is_zero() && g.is_zero()) throw BothZero("gcd of two zero forms");
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();

    std::vector<FieldElement> fc, gc;
    for (int i = 0; i <= f.degree(); ++i) fc.push_back(f.coeff(i));
    for (int i = 0; i <= g.degree(); ++i) gc.push_back(g.coeff(i));
    const int af = first_nonzero(fc);
    const int ag = first_nonzero(gc);
    const int shared_u = std::min(af, ag);
    fc.erase(fc.begin(), fc.begin() + af);
    gc.erase(gc.begin(), gc.begin() + ag);

    auto h = poly_gcd(std::move(fc), std::move(gc));

    std::vector<FieldElement> out(static_cast<std::size_t>(shared_u), FieldElement::zero(f.field()));
    out.insert(out.end(), h.begin(), h.end());
    return BinaryForm(f.field(), std::move(out));
}

std::vector<P1Point> p1_roots(const BinaryForm& f) {
    if (f.is_zero()) throw ZeroForm("roots of the zero form are undefined");
    const FieldDescriptor desc = f.field();
    std::set<P1Point> roots;

    switch (desc.kind) {
        case FieldKind::Prime: {
            const FieldElement one = FieldElement::one(desc);
            const FieldElement zero = FieldElement::zero(desc);
            if (f.eval(one, zero).is_zero()) roots.insert(P1Point::infinity(desc));
            for (std::int64_t r = 0; r < desc.p; ++r) {
                FieldElement t = FieldElement::from_int(desc, r);
                if (f.eval(t, one).is_zero()) roots.insert(P1Point::finite(t));
            }
            break;
        }
        case FieldKind::Rational: {
            const int d = f.degree();
            if (f.coeff(0).is_zero()) roots.insert(P1Point::infinity(desc));
            if (f.coeff(d).is_zero()) roots.insert(P1Point::finite(FieldElement::zero(desc)));

            // integer model of the dehomogenization f(T, 1)
            BigInt lcm_den = 1;
            for (int i = 0; i <= d; ++i) {
                if (f.coeff(i).is_zero()) continue;
                const BigInt den = boost::multiprecision::denominator(f.coeff(i).rational_value());
                lcm_den = boost::multiprecision::lcm(lcm_den, den);
            }
            std::vector<BigInt> ic;
            for (int i = 0; i <= d; ++i) {
                const BigRational scaled = f.coeff(i).rational_value() * BigRational(lcm_den);
                ic.push_back(boost::multiprecision::numerator(scaled));
            }
            int lead = 0;
            while (ic[static_cast<std::size_t>(lead)] == 0) ++lead;
            int trail = d;
            while (ic[static_cast<std::size_t>(trail)] == 0) --trail;
            if (lead > trail) break; // single monomial; roots 0 / infinity already found

            auto eval_at = [&](const BigRational& r) {
                BigRational acc = 0;
                for (int i = lead; i <= d; ++i)
                    acc = acc * r + BigRational(ic[static_cast<std::size_t>(i)]);
                return acc;
            };
            for (const BigInt& num : divisors(ic[static_cast<std::size_t>(trail)]))
                for (const BigInt& den : divisors(ic[static_cast<std::size_t>(lead)])) {
                    if (boost::multiprecision::gcd(num, den) != 1) continue;
                    for (int sign : {1, -1}) {
                        const BigRational r(sign * num, den);
                        if (eval_at(r) == 0)
                            roots.insert(P1Point::finite(FieldElement(desc, r)));
                    }
                }
            break;
        }
        case FieldKind::RealEmulated:
            throw UnsupportedInMode("explicit root enumeration is not available in real-emulated mode");
    }
    return {roots.begin(), roots.end()};
}

int root_multiplicity(const BinaryForm& f, const P1Point& pt) {
    if (f.is_zero()) throw ZeroForm("root multiplicity on the zero form is undefined");
    const BinaryForm factor = BinaryForm::vanishing_at(pt);
    BinaryForm cur = f;
    int mult = 0;
    while (cur.degree() >= 1) {
        try {
            cur = cur.divide_exact(factor);
        } catch (const NotDivisible&) {
            break;
        }
        ++mult;
    }
    return mult;
}

FieldElement disc_quadratic(const BinaryForm& f) {
    if (f.degree() != 2) throw DegreeMismatch("quadratic discriminant needs a degree-2 form");
    return disc_quadratic(f.coeff(0), f.coeff(1), f.coeff(2));
}

FieldElement disc_cubic(const BinaryForm& f) {
    if (f.degree() != 3) throw DegreeMismatch("cubic discriminant needs a degree-3 form");
    return disc_cubic(f.coeff(0), f.coeff(1), f.coeff(2), f.coeff(3));
}

} // namespace bisect
