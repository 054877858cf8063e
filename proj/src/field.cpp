#include "bisect/field.hpp"

#include <sstream>

namespace bisect {
namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t p) {
    std::int64_t acc = 1 % p;
    base = mod_reduce(base, p);
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    // extended Euclid; a nonzero mod p
    std::int64_t t = 0, new_t = 1, r = p, new_r = mod_reduce(a, p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return mod_reduce(t, p);
}

// Tonelli-Shanks.  Assumes n is a nonzero quadratic residue mod the odd prime p.
std::int64_t sqrt_mod(std::int64_t n, std::int64_t p) {
    if (p % 4 == 3) return pow_mod(n, (p + 1) / 4, p);
    std::int64_t q = p - 1;
    std::int64_t s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    std::int64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::int64_t m = s;
    std::int64_t c = pow_mod(z, q, p);
    std::int64_t t = pow_mod(n, q, p);
    std::int64_t r = pow_mod(n, (q + 1) / 2, p);
    while (t != 1) {
        std::int64_t i = 0;
        std::int64_t probe = t;
        while (probe != 1) { probe = mul_mod(probe, probe, p); ++i; }
        std::int64_t b = pow_mod(c, std::int64_t(1) << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    return r;
}

bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

} // namespace

bool is_odd_prime(std::int64_t n) {
    if (n < 3 || n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldDescriptor FieldDescriptor::prime(std::int64_t p) {
    if (!is_odd_prime(p))
        throw BadDescriptor("prime field modulus must be an odd prime, got " + std::to_string(p));
    if (p >= (std::int64_t(1) << 31))
        throw BadDescriptor("prime field modulus too large: " + std::to_string(p));
    return {FieldKind::Prime, p};
}

std::string FieldDescriptor::describe() const {
    switch (kind) {
        case FieldKind::Rational: return "rational";
        case FieldKind::Prime: return "prime:" + std::to_string(p);
        case FieldKind::RealEmulated: return "real";
    }
    return "?";
}

FieldElement::FieldElement(FieldDescriptor desc, const BigRational& value) : desc_(desc) {
    if (desc_.kind == FieldKind::Prime) {
        const BigInt num = boost::multiprecision::numerator(value);
        const BigInt den = boost::multiprecision::denominator(value);
        const BigInt p = desc_.p;
        const std::int64_t n = static_cast<std::int64_t>(num % p);
        const std::int64_t d = static_cast<std::int64_t>(den % p);
        if (d == 0) throw DivisionByZero("rational value has no residue mod " + std::to_string(desc_.p));
        r_ = mul_mod(mod_reduce(n, desc_.p), inv_mod(d, desc_.p), desc_.p);
    } else {
        q_ = value;
    }
}

FieldElement::FieldElement(FieldDescriptor desc, std::int64_t value) : desc_(desc) {
    if (desc_.kind == FieldKind::Prime)
        r_ = mod_reduce(value, desc_.p);
    else
        q_ = value;
}

FieldElement FieldElement::parse(FieldDescriptor desc, const std::string& text) {
    auto bad = [&] { return ParseError("cannot parse field element from \"" + text + "\""); };
    std::string s = text;
    // trim
    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) throw bad();
    s = s.substr(first, last - first + 1);

    auto parse_int = [&](const std::string& part) -> BigInt {
        if (part.empty()) throw bad();
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw bad();
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw bad();
        return BigInt(part);
    };

    const auto slash = s.find('/');
    BigRational value;
    if (slash == std::string::npos) {
        value = parse_int(s);
    } else {
        if (desc.kind == FieldKind::Prime) throw bad(); // residues are plain decimals
        const BigInt num = parse_int(s.substr(0, slash));
        const BigInt den = parse_int(s.substr(slash + 1));
        if (den == 0) throw DivisionByZero("zero denominator in \"" + text + "\"");
        value = make_rational(num, den);
    }
    return FieldElement(desc, value);
}

bool FieldElement::is_zero() const {
    return desc_.kind == FieldKind::Prime ? r_ == 0 : q_ == 0;
}

bool FieldElement::is_one() const {
    return desc_.kind == FieldKind::Prime ? r_ == 1 % desc_.p : q_ == 1;
}

const BigRational& FieldElement::rational_value() const {
    if (desc_.kind == FieldKind::Prime)
        throw FieldMismatch("residue element has no rational value");
    return q_;
}

std::int64_t FieldElement::residue() const {
    if (desc_.kind != FieldKind::Prime)
        throw FieldMismatch("rational element has no residue");
    return r_;
}

void FieldElement::require_same(const FieldElement& rhs) const {
    if (desc_ != rhs.desc_)
        throw FieldMismatch("mixed-field arithmetic: " + desc_.describe() + " vs " + rhs.desc_.describe());
}

FieldElement FieldElement::operator-() const {
    FieldElement out = *this;
    if (desc_.kind == FieldKind::Prime)
        out.r_ = r_ == 0 ? 0 : desc_.p - r_;
    else
        out.q_ = -q_;
    return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    require_same(rhs);
    if (desc_.kind == FieldKind::Prime)
        r_ = mod_reduce(r_ + rhs.r_, desc_.p);
    else
        q_ += rhs.q_;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    require_same(rhs);
    if (desc_.kind == FieldKind::Prime)
        r_ = mod_reduce(r_ - rhs.r_, desc_.p);
    else
        q_ -= rhs.q_;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    require_same(rhs);
    if (desc_.kind == FieldKind::Prime)
        r_ = mul_mod(r_, rhs.r_, desc_.p);
    else
        q_ *= rhs.q_;
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    require_same(rhs);
    if (rhs.is_zero()) throw DivisionByZero("division by zero in " + desc_.describe());
    if (desc_.kind == FieldKind::Prime)
        r_ = mul_mod(r_, inv_mod(rhs.r_, desc_.p), desc_.p);
    else
        q_ /= rhs.q_;
    return *this;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + desc_.describe());
    return one(desc_) / *this;
}

FieldElement FieldElement::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement acc = one(desc_);
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    require_same(rhs);
    return desc_.kind == FieldKind::Prime ? r_ == rhs.r_ : q_ == rhs.q_;
}

std::strong_ordering FieldElement::operator<=>(const FieldElement& rhs) const {
    require_same(rhs);
    if (desc_.kind == FieldKind::Prime)
        return r_ <=> rhs.r_;
    if (q_ < rhs.q_) return std::strong_ordering::less;
    if (rhs.q_ < q_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string FieldElement::to_string() const {
    if (desc_.kind == FieldKind::Prime) return std::to_string(r_);
    std::ostringstream out;
    out << q_;
    return out.str();
}

bool is_square(const FieldElement& x) {
    switch (x.field().kind) {
        case FieldKind::Prime: {
            const std::int64_t p = x.field().p;
            const std::int64_t v = x.residue();
            return v == 0 || pow_mod(v, (p - 1) / 2, p) == 1;
        }
        case FieldKind::RealEmulated:
            return x.rational_value() >= 0;
        case FieldKind::Rational: {
            const BigRational& q = x.rational_value();
            if (q < 0) return false;
            return is_perfect_square(boost::multiprecision::numerator(q)) &&
                   is_perfect_square(boost::multiprecision::denominator(q));
        }
    }
    return false;
}

std::optional<FieldElement> sqrt_opt(const FieldElement& x) {
    const FieldDescriptor desc = x.field();
    switch (desc.kind) {
        case FieldKind::Prime: {
            const std::int64_t p = desc.p;
            const std::int64_t v = x.residue();
            if (v == 0) return FieldElement::zero(desc);
            if (pow_mod(v, (p - 1) / 2, p) != 1) return std::nullopt;
            std::int64_t r = sqrt_mod(v, p);
            if (r > p - r) r = p - r; // canonical root in [0, p/2]
            return FieldElement(desc, r);
        }
        case FieldKind::Rational:
        case FieldKind::RealEmulated: {
            const BigRational& q = x.rational_value();
            if (q < 0) return std::nullopt;
            const BigInt num = boost::multiprecision::numerator(q);
            const BigInt den = boost::multiprecision::denominator(q);
            if (is_perfect_square(num) && is_perfect_square(den)) {
                BigRational root(boost::multiprecision::sqrt(num), boost::multiprecision::sqrt(den));
                return FieldElement(desc, root);
            }
            if (desc.kind == FieldKind::RealEmulated)
                throw UnsupportedInMode("square root of " + x.to_string() +
                                        " exists but is not exactly representable");
            return std::nullopt;
        }
    }
    return std::nullopt;
}

} // namespace bisect
