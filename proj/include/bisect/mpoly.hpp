#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <string>

#include "bisect/field.hpp"

namespace bisect {

/// Sparse polynomial in N variables over one of the exact fields.  Only
/// nonzero terms are stored; the zero polynomial has no terms.  Intended for
/// the low-degree symbolic work done here (envelope curves, identity checks),
/// not for large-scale computer algebra.
template <int N>
class MPoly {
public:
    using Exps = std::array<int, N>;

    explicit MPoly(FieldDescriptor desc) : desc_(desc) {}

    static MPoly constant(FieldDescriptor desc, const FieldElement& c) {
        MPoly out(desc);
        out.add_term(Exps{}, c);
        return out;
    }
    static MPoly constant(FieldDescriptor desc, std::int64_t c) {
        return constant(desc, FieldElement::from_int(desc, c));
    }
    /// The monomial X_i.
    static MPoly variable(FieldDescriptor desc, int i) {
        Exps e{};
        e.at(i) = 1;
        MPoly out(desc);
        out.add_term(e, FieldElement::one(desc));
        return out;
    }

    const FieldDescriptor& field() const { return desc_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const {
        int deg = -1;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int x : e) d += x;
            deg = std::max(deg, d);
        }
        return deg;
    }

    FieldElement coeff(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? FieldElement::zero(desc_) : it->second;
    }

    void add_term(const Exps& e, const FieldElement& c) {
        if (c.field() != desc_) throw FieldMismatch("polynomial term in wrong field");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const std::map<Exps, FieldElement>& terms() const { return terms_; }

    /// Largest term under the ordering "compare exponents of X_0 first, then
    /// X_1, ...".  Throws ZeroForm on the zero polynomial.
    std::pair<Exps, FieldElement> leading_term() const {
        if (terms_.empty()) throw ZeroForm("zero polynomial has no leading term");
        return *terms_.rbegin();
    }

    MPoly& operator+=(const MPoly& rhs) {
        require_same(rhs);
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& rhs) {
        require_same(rhs);
        for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
        return *this;
    }
    MPoly operator-() const {
        MPoly out(desc_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }
    MPoly& operator*=(const MPoly& rhs) {
        require_same(rhs);
        MPoly out(desc_);
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : rhs.terms_) {
                Exps e;
                for (int i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        terms_ = std::move(out.terms_);
        return *this;
    }
    MPoly& operator*=(const FieldElement& s) {
        if (s.field() != desc_) throw FieldMismatch("scalar in wrong field");
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
    friend MPoly operator*(MPoly a, const FieldElement& s) { return a *= s; }
    friend MPoly operator*(const FieldElement& s, MPoly a) { return a *= s; }
    friend MPoly operator*(std::int64_t n, MPoly a) {
        return a *= FieldElement::from_int(a.desc_, n);
    }

    bool operator==(const MPoly& rhs) const {
        require_same(rhs);
        return terms_ == rhs.terms_;
    }

    FieldElement eval(const std::array<FieldElement, N>& at) const {
        FieldElement acc = FieldElement::zero(desc_);
        for (const auto& [e, c] : terms_) {
            FieldElement term = c;
            for (int i = 0; i < N; ++i)
                term *= at[i].pow(e[i]);
            acc += term;
        }
        return acc;
    }

    /// Substitute polynomials for the variables (composition).
    template <int M>
    MPoly<M> eval_poly(const std::array<MPoly<M>, N>& at) const {
        MPoly<M> acc(desc_);
        for (const auto& [e, c] : terms_) {
            MPoly<M> term = MPoly<M>::constant(desc_, c);
            for (int i = 0; i < N; ++i)
                for (int k = 0; k < e[i]; ++k) term *= at[i];
            acc += term;
        }
        return acc;
    }

    MPoly partial(int i) const {
        MPoly out(desc_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exps d = e;
            d[i] -= 1;
            out.add_term(d, e[i] * c);
        }
        return out;
    }

    std::string to_string(const std::array<std::string, N>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) out << " + ";
            first = false;
            out << "(" << it->second.to_string() << ")";
            for (int i = 0; i < N; ++i) {
                if (it->first[i] == 0) continue;
                out << "*" << names[i];
                if (it->first[i] > 1) out << "^" << it->first[i];
            }
        }
        return out.str();
    }

private:
    void require_same(const MPoly& rhs) const {
        if (desc_ != rhs.desc_) throw FieldMismatch("mixed-field polynomial arithmetic");
    }

    FieldDescriptor desc_;
    std::map<Exps, FieldElement> terms_;
};

using Poly2 = MPoly<2>; // affine plane coordinates (X, Y)
using Poly3 = MPoly<3>;

} // namespace bisect
