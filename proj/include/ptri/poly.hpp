/*
   Copyright 2026 The ptri Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PTRI_POLY_HPP
#define PTRI_POLY_HPP

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace ptri {

/// Dense univariate polynomial over a FieldCtx, constant term first, kept in
/// canonical form (no trailing zeros; the zero polynomial is empty).
class Poly {
   public:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}

    Poly(FieldPtr field, std::vector<FieldElem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
        for (const FieldElem& e : c_)
            if (e.ctx() != field_.get()) throw Error(ErrorCode::CtxMismatch, "coefficient from another field");
        normalize();
    }

    static Poly constant(FieldPtr field, const FieldElem& c) { return Poly(std::move(field), {c}); }

    static Poly monomial(FieldPtr field, const FieldElem& c, std::size_t degree) {
        std::vector<FieldElem> cs(degree + 1, field->zero());
        cs[degree] = c;
        return Poly(std::move(field), std::move(cs));
    }

    static Poly x(FieldPtr field) { return monomial(field, field->one(), 1); }

    /// X - r
    static Poly linear_root(FieldPtr field, const FieldElem& r) { return Poly(field, {-r, field->one()}); }

    const FieldPtr& field() const noexcept { return field_; }
    const FieldCtx& ctx() const noexcept { return *field_; }
    const std::vector<FieldElem>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }

    FieldElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }

    FieldElem leading() const {
        if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no leading coefficient");
        return c_.back();
    }

    /// Horner evaluation.
    FieldElem operator()(const FieldElem& x) const {
        if (x.ctx() != field_.get()) throw Error(ErrorCode::CtxMismatch, "evaluation point from another field");
        FieldElem acc = field_->zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_->add(field_->mul(acc, x), *it);
        return acc;
    }

    friend bool operator==(const Poly& lhs, const Poly& rhs) noexcept {
        return lhs.field_ == rhs.field_ && lhs.c_ == rhs.c_;
    }

    Poly& operator+=(const Poly& rhs) {
        same_field(rhs);
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), field_->zero());
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = field_->add(c_[i], rhs.c_[i]);
        normalize();
        return *this;
    }

    Poly& operator-=(const Poly& rhs) {
        same_field(rhs);
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), field_->zero());
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = field_->sub(c_[i], rhs.c_[i]);
        normalize();
        return *this;
    }

    Poly operator-() const {
        Poly r = *this;
        for (FieldElem& e : r.c_) e = field_->neg(e);
        return r;
    }

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }

    friend Poly operator*(const Poly& lhs, const Poly& rhs) {
        lhs.same_field(rhs);
        if (lhs.is_zero() || rhs.is_zero()) return Poly(lhs.field_);
        const FieldCtx& f = *lhs.field_;
        std::vector<FieldElem> out(lhs.c_.size() + rhs.c_.size() - 1, f.zero());
        for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
            if (lhs.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(lhs.c_[i], rhs.c_[j]));
        }
        return Poly(lhs.field_, std::move(out));
    }

    friend Poly operator*(const FieldElem& s, const Poly& p) {
        if (s.ctx() != p.field_.get()) throw Error(ErrorCode::CtxMismatch, "scalar from another field");
        std::vector<FieldElem> out = p.c_;
        for (FieldElem& e : out) e = p.field_->mul(s, e);
        return Poly(p.field_, std::move(out));
    }

   private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    void same_field(const Poly& rhs) const {
        if (field_ != rhs.field_) throw Error(ErrorCode::CtxMismatch, "polynomials over different fields");
    }

    FieldPtr field_;
    std::vector<FieldElem> c_;
};

/// (quotient, remainder) with num = den * quotient + remainder, deg(remainder) < deg(den).
inline std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (num.field() != den.field()) throw Error(ErrorCode::CtxMismatch, "polynomials over different fields");
    const FieldCtx& f = num.ctx();
    std::vector<FieldElem> rem = num.coeffs();
    const std::size_t dd = den.coeffs().size() - 1;
    if (rem.size() <= dd) return {Poly(num.field()), num};

    std::vector<FieldElem> quot(rem.size() - dd, f.zero());
    const FieldElem lead_inv = f.inv(den.leading());
    for (std::size_t k = rem.size(); k-- > dd;) {
        const FieldElem t = f.mul(rem[k], lead_inv);
        if (t.is_zero()) continue;
        quot[k - dd] = t;
        for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] = f.sub(rem[k - dd + j], f.mul(t, den.coeffs()[j]));
    }
    rem.resize(dd);
    return {Poly(num.field(), std::move(quot)), Poly(num.field(), std::move(rem))};
}

/// P(Q(X)) by Horner's rule over polynomials.
inline Poly compose(const Poly& outer, const Poly& inner) {
    if (outer.field() != inner.field()) throw Error(ErrorCode::CtxMismatch, "polynomials over different fields");
    Poly acc(outer.field());
    const auto& cs = outer.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * inner + Poly::constant(outer.field(), *it);
    return acc;
}

/// X^d * P(1/X); requires d >= deg(P).
inline Poly reciprocal(const Poly& p, std::size_t d) {
    if (p.degree() > static_cast<long>(d)) throw Error(ErrorCode::BadParams, "reciprocal degree below deg(P)");
    std::vector<FieldElem> out(d + 1, p.ctx().zero());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[d - i] = p.coeffs()[i];
    return Poly(p.field(), std::move(out));
}

struct RootMult {
    FieldElem root;
    unsigned multiplicity = 0;

    friend bool operator==(const RootMult&, const RootMult&) = default;
};

/// Every root in the field with its exact multiplicity, sorted by encoding.
/// Exhaustive scan; multiplicity by repeated division by (X - r).
inline std::vector<RootMult> roots_with_multiplicity(const Poly& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has every element as a root");
    std::vector<RootMult> out;
    const FieldCtx& f = p.ctx();
    for (FieldElem x : f.enumerate()) {
        if (!p(x).is_zero()) continue;
        Poly rest = p;
        const Poly lin = Poly::linear_root(p.field(), x);
        unsigned mult = 0;
        while (rest.degree() >= 1) {
            auto [quot, rem] = divmod(rest, lin);
            if (!rem.is_zero()) break;
            rest = std::move(quot);
            ++mult;
        }
        out.push_back({x, mult});
    }
    return out;
}

/// True iff the multiplicities of the nonzero roots add up to deg(P).
inline bool splits_completely_in_units(const Poly& p) {
    unsigned total = 0;
    for (const RootMult& r : roots_with_multiplicity(p))
        if (!r.root.is_zero()) total += r.multiplicity;
    return static_cast<long>(total) == p.degree();
}

/// Coefficient encodings, constant term first.
inline std::vector<std::uint64_t> encode(const Poly& p) {
    std::vector<std::uint64_t> out;
    out.reserve(p.coeffs().size());
    for (const FieldElem& e : p.coeffs()) out.push_back(p.ctx().encode(e));
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) {
    os << '[';
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << (i ? "," : "") << p.ctx().encode(p.coeffs()[i]);
    return os << ']';
}

}  // namespace ptri

#endif  // PTRI_POLY_HPP
