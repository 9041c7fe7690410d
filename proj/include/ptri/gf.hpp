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

/*
   Arithmetic in F_{p^n}, p odd, in the polynomial basis F_p[X]/(m(X)).

   Elements are stored inline as n residues (constant term first) together
   with a non-owning pointer to their FieldCtx. A FieldCtx is immutable once
   built and is handed out through a shared_ptr; anything that stores
   elements for longer than a call (Poly, GraphSpec, ...) keeps that
   shared_ptr alive.

   When the context is built as a tower F_{q^3} over F_q (q = p^m, n = 3m),
   F_q is the fixed field of x -> x^q and the relative norm and trace are
   available.
*/

#ifndef PTRI_GF_HPP
#define PTRI_GF_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <ranges>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace ptri {

inline constexpr unsigned kMaxDegree = 16;
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 31;

/* ---------------------------------------------------------------- numbers */

constexpr bool is_prime(std::uint64_t v) noexcept {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (std::uint64_t d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
    return true;
}

/// (p, m) with q = p^m, or nullopt if q is not a prime power.
constexpr std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) noexcept {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return std::pair{q, 1u};
    unsigned m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1) return std::nullopt;
    return std::pair{p, m};
}

/// Exact integer power; the caller keeps the result within 64 bits.
constexpr std::uint64_t ipow(std::uint64_t base, unsigned exp) noexcept {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

/* ------------------------------------------------- F_p[X] helper routines */

namespace detail {

using FpPoly = std::vector<std::uint64_t>;  // constant term first

inline void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // p prime, a != 0 mod p
    std::uint64_t r = 1, e = p - 2;
    a %= p;
    while (e > 0) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

/// Remainder of f modulo a nonzero g.
inline FpPoly fp_mod(FpPoly f, const FpPoly& g, std::uint64_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    const std::uint64_t lead_inv = inv_mod(g.back(), p);
    while (f.size() > dg && !f.empty()) {
        const std::size_t shift = f.size() - 1 - dg;
        const std::uint64_t t = f.back() * lead_inv % p;
        for (std::size_t j = 0; j <= dg; ++j) f[shift + j] = (f[shift + j] + (p - t) * g[j]) % p;
        trim(f);
    }
    return f;
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return fp_mod(std::move(r), m, p);
}

inline FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& m, std::uint64_t p) {
    FpPoly r{1};
    base = fp_mod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) r = fp_mulmod(r, base, m, p);
        base = fp_mulmod(base, base, m, p);
        e >>= 1;
    }
    return fp_mod(std::move(r), m, p);
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Rabin-style test: X^{p^n} = X mod f, and gcd(X^{p^k} - X, f) = 1 for
/// every proper divisor k of n.
inline bool fp_is_irreducible(const FpPoly& f, std::uint64_t p) {
    const std::size_t n = f.size() - 1;
    if (n == 1) return true;
    FpPoly frob{0, 1};  // X^{p^k} mod f, k = 0
    for (std::size_t k = 1; k <= n; ++k) {
        frob = fp_powmod(frob, p, f, p);
        FpPoly diff = frob;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (k == n) return diff.empty();
        if (n % k == 0) {
            if (diff.empty()) return false;
            if (fp_gcd(diff, f, p).size() != 1) return false;
        }
    }
    return false;
}

}  // namespace detail

/* ------------------------------------------------------------- elements */

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

class FieldElem {
   public:
    FieldElem() noexcept = default;

    const FieldCtx* ctx() const noexcept { return ctx_; }
    std::span<const std::uint32_t> coeffs() const noexcept;
    bool is_zero() const noexcept {
        return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
    }

    friend bool operator==(const FieldElem& lhs, const FieldElem& rhs) noexcept {
        return lhs.ctx_ == rhs.ctx_ && lhs.c_ == rhs.c_;
    }

    FieldElem& operator+=(const FieldElem& rhs);
    FieldElem& operator-=(const FieldElem& rhs);
    FieldElem& operator*=(const FieldElem& rhs);
    FieldElem& operator/=(const FieldElem& rhs);

   private:
    friend class FieldCtx;
    const FieldCtx* ctx_ = nullptr;
    std::array<std::uint32_t, kMaxDegree> c_{};
};

/* -------------------------------------------------------------- context */

class FieldCtx {
   public:
    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    std::uint32_t p() const noexcept { return p_; }
    unsigned n() const noexcept { return n_; }
    std::uint64_t order() const noexcept { return order_; }
    /// n+1 coefficients, constant term first, monic.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    bool has_tower() const noexcept { return q_sub_.has_value(); }
    std::optional<std::uint64_t> q_sub() const noexcept { return q_sub_; }

    std::uint64_t q() const {
        require_tower();
        return *q_sub_;
    }

    FieldElem zero() const noexcept {
        FieldElem e;
        e.ctx_ = this;
        return e;
    }
    FieldElem one() const noexcept { return from_int(1); }

    /// Image of an integer in the prime field.
    FieldElem from_int(std::int64_t v) const noexcept {
        FieldElem e = zero();
        const auto pp = static_cast<std::int64_t>(p_);
        e.c_[0] = static_cast<std::uint32_t>(((v % pp) + pp) % pp);
        return e;
    }

    /// The class of X in F_p[X]/(m); equals -m_0 when n = 1.
    FieldElem generator() const noexcept {
        if (n_ == 1) return from_int(-static_cast<std::int64_t>(modulus_[0]));
        FieldElem e = zero();
        e.c_[1] = 1;
        return e;
    }

    FieldElem from_coeffs(std::span<const std::uint32_t> coeffs) const {
        if (coeffs.size() != n_) throw Error(ErrorCode::OutOfRange, "coefficient count must equal n");
        FieldElem e = zero();
        for (unsigned i = 0; i < n_; ++i) {
            if (coeffs[i] >= p_) throw Error(ErrorCode::OutOfRange, "coefficient not reduced mod p");
            e.c_[i] = coeffs[i];
        }
        return e;
    }

    /* arithmetic */

    FieldElem add(const FieldElem& a, const FieldElem& b) const {
        check(a);
        check(b);
        FieldElem r = zero();
        for (unsigned i = 0; i < n_; ++i) {
            std::uint32_t s = a.c_[i] + b.c_[i];
            r.c_[i] = s >= p_ ? s - p_ : s;
        }
        return r;
    }

    FieldElem neg(const FieldElem& a) const {
        check(a);
        FieldElem r = zero();
        for (unsigned i = 0; i < n_; ++i) r.c_[i] = a.c_[i] == 0 ? 0 : p_ - a.c_[i];
        return r;
    }

    FieldElem sub(const FieldElem& a, const FieldElem& b) const {
        check(a);
        check(b);
        FieldElem r = zero();
        for (unsigned i = 0; i < n_; ++i)
            r.c_[i] = a.c_[i] >= b.c_[i] ? a.c_[i] - b.c_[i] : a.c_[i] + p_ - b.c_[i];
        return r;
    }

    FieldElem mul(const FieldElem& a, const FieldElem& b) const {
        check(a);
        check(b);
        const std::uint64_t p = p_;
        std::array<std::uint64_t, 2 * kMaxDegree> t{};
        for (unsigned i = 0; i < n_; ++i) {
            if (a.c_[i] == 0) continue;
            for (unsigned j = 0; j < n_; ++j) t[i + j] = (t[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p;
        }
        // reduce by the monic modulus from the top down
        for (unsigned d = 2 * n_ - 2; d >= n_; --d) {
            const std::uint64_t lead = t[d];
            if (lead != 0) {
                for (unsigned j = 0; j < n_; ++j) t[d - n_ + j] = (t[d - n_ + j] + (p - lead) * modulus_[j]) % p;
                t[d] = 0;
            }
        }
        FieldElem r = zero();
        for (unsigned i = 0; i < n_; ++i) r.c_[i] = static_cast<std::uint32_t>(t[i]);
        return r;
    }

    /// Exponents reduce mod (p^n - 1) for nonzero bases; pow(0, 0) = 1.
    FieldElem pow(FieldElem base, std::uint64_t e) const {
        check(base);
        if (e == 0) return one();
        if (base.is_zero()) return zero();
        e %= order_ - 1;
        FieldElem r = one();
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    FieldElem inv(const FieldElem& a) const {
        check(a);
        if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
        return pow(a, order_ - 2);
    }

    FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

    /* tower structure */

    FieldElem frobenius_q(const FieldElem& x) const {
        require_tower();
        return pow(x, *q_sub_);
    }

    /// x^{1 + q + q^2}
    FieldElem norm3(const FieldElem& x) const {
        const FieldElem xq = frobenius_q(x);
        return mul(mul(x, xq), frobenius_q(xq));
    }

    /// x + x^q + x^{q^2}
    FieldElem trace3(const FieldElem& x) const {
        const FieldElem xq = frobenius_q(x);
        return add(add(x, xq), frobenius_q(xq));
    }

    bool in_subfield(const FieldElem& x) const { return frobenius_q(x) == x; }

    /* encoding */

    /// Base-p integer of the coefficients, constant term least significant.
    std::uint64_t encode(const FieldElem& x) const {
        check(x);
        std::uint64_t v = 0;
        for (unsigned i = n_; i-- > 0;) v = v * p_ + x.c_[i];
        return v;
    }

    FieldElem decode(std::uint64_t v) const {
        if (v >= order_) throw Error(ErrorCode::OutOfRange, "encoding " + std::to_string(v) + " >= field order");
        FieldElem e = zero();
        for (unsigned i = 0; i < n_; ++i) {
            e.c_[i] = static_cast<std::uint32_t>(v % p_);
            v /= p_;
        }
        return e;
    }

    /// All elements in increasing encoding.
    auto enumerate() const {
        return std::views::iota(std::uint64_t{0}, order_) |
               std::views::transform([this](std::uint64_t v) { return decode(v); });
    }

    /// Elements of the embedded F_q in increasing encoding.
    std::vector<FieldElem> subfield_elements() const {
        require_tower();
        std::vector<FieldElem> out;
        for (FieldElem x : enumerate())
            if (in_subfield(x)) out.push_back(x);
        return out;
    }

    friend FieldPtr make_field(std::uint64_t p, unsigned n, std::optional<std::uint64_t> q_sub);

   private:
    FieldCtx() = default;

    void check(const FieldElem& x) const {
        if (x.ctx_ != this) throw Error(ErrorCode::CtxMismatch, "element belongs to a different field");
    }
    void require_tower() const {
        if (!q_sub_) throw Error(ErrorCode::NoTower, "field was not built as F_{q^3}");
    }

    std::uint32_t p_ = 0;
    unsigned n_ = 0;
    std::uint64_t order_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::optional<std::uint64_t> q_sub_;
};

/// Builds F_{p^n} with the smallest monic irreducible modulus in base-p
/// integer order. If q_sub is given it must equal p^m with n = 3m.
inline FieldPtr make_field(std::uint64_t p, unsigned n, std::optional<std::uint64_t> q_sub = std::nullopt) {
    if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (n == 0 || n > kMaxDegree) throw Error(ErrorCode::OutOfRange, "extension degree out of range");
    std::uint64_t order = 1;
    for (unsigned i = 0; i < n; ++i) {
        order *= p;
        if (order > kMaxFieldOrder) throw Error(ErrorCode::OutOfRange, "field too large");
    }
    if (q_sub) {
        const auto pm = prime_power(*q_sub);
        if (!pm || pm->first != p || 3 * pm->second != n)
            throw Error(ErrorCode::BadTower, "q_sub must be p^m with n = 3m");
    }

    std::optional<detail::FpPoly> found;
    for (std::uint64_t low = 0; low < order && !found; ++low) {
        detail::FpPoly f(n + 1, 0);
        std::uint64_t v = low;
        for (unsigned i = 0; i < n; ++i) {
            f[i] = v % p;
            v /= p;
        }
        f[n] = 1;
        if (n > 1 && f[0] == 0) continue;
        if (detail::fp_is_irreducible(f, p)) found = std::move(f);
    }
    if (!found) throw Error(ErrorCode::NoIrreducible, "no irreducible polynomial found");

    std::shared_ptr<FieldCtx> ctx(new FieldCtx());
    ctx->p_ = static_cast<std::uint32_t>(p);
    ctx->n_ = n;
    ctx->order_ = order;
    ctx->modulus_.assign(found->begin(), found->end());
    ctx->q_sub_ = q_sub;
    return ctx;
}

/// F_{q^3} viewed over F_q, for q an odd prime power.
inline FieldPtr make_tower(std::uint64_t q) {
    const auto pm = prime_power(q);
    if (!pm) throw Error(ErrorCode::BadParams, std::to_string(q) + " is not a prime power");
    if (pm->first == 2) throw Error(ErrorCode::EvenCharacteristic, "q must be odd");
    return make_field(pm->first, 3 * pm->second, q);
}

/* ----------------------------------------------------- element operators */

inline std::span<const std::uint32_t> FieldElem::coeffs() const noexcept {
    return {c_.data(), ctx_ ? ctx_->n() : 0u};
}

namespace detail {
inline const FieldCtx& ctx_of(const FieldElem& a, const FieldElem& b) {
    if (a.ctx() == nullptr || a.ctx() != b.ctx())
        throw Error(ErrorCode::CtxMismatch, "operands belong to different fields");
    return *a.ctx();
}
inline const FieldCtx& ctx_of(const FieldElem& a) {
    if (a.ctx() == nullptr) throw Error(ErrorCode::CtxMismatch, "unbound element");
    return *a.ctx();
}
}  // namespace detail

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) { return detail::ctx_of(a, b).add(a, b); }
inline FieldElem operator-(const FieldElem& a, const FieldElem& b) { return detail::ctx_of(a, b).sub(a, b); }
inline FieldElem operator*(const FieldElem& a, const FieldElem& b) { return detail::ctx_of(a, b).mul(a, b); }
inline FieldElem operator/(const FieldElem& a, const FieldElem& b) { return detail::ctx_of(a, b).div(a, b); }
inline FieldElem operator-(const FieldElem& a) { return detail::ctx_of(a).neg(a); }

inline FieldElem& FieldElem::operator+=(const FieldElem& rhs) { return *this = *this + rhs; }
inline FieldElem& FieldElem::operator-=(const FieldElem& rhs) { return *this = *this - rhs; }
inline FieldElem& FieldElem::operator*=(const FieldElem& rhs) { return *this = *this * rhs; }
inline FieldElem& FieldElem::operator/=(const FieldElem& rhs) { return *this = *this / rhs; }

inline FieldElem pow(const FieldElem& x, std::uint64_t e) { return detail::ctx_of(x).pow(x, e); }
inline FieldElem inv(const FieldElem& x) { return detail::ctx_of(x).inv(x); }
inline std::uint64_t encode(const FieldElem& x) { return detail::ctx_of(x).encode(x); }

/// Prints the integer encoding.
inline std::ostream& operator<<(std::ostream& os, const FieldElem& x) {
    if (x.ctx() == nullptr) return os << "<unbound>";
    return os << x.ctx()->encode(x);
}

}  // namespace ptri

#endif  // PTRI_GF_HPP
