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
   The polynomial

       f_a(X) = X^{q+1} + a^{-1}(X^q + X) + N(a^{-1})(Tr(a) - 2a)

   over F_{q^3}, together with the objects used to show it splits over the
   nonzero elements:

     - the root -a^{-q},
     - h(X) with f_a(X - a^{-q}) = X h(X),
     - the linearized L(X) = (a^{-1} - a^{-q^2}) X^q + (a^{-1} - a^{-q}) X,
       whose reciprocal relation is X^q h(1/X) = L(X) + 1.

   When a lies in F_q, h(X) = X^q and L is identically zero; L is only built
   for a outside F_q.
*/

#ifndef PTRI_FA_HPP
#define PTRI_FA_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "gf.hpp"
#include "parallel.hpp"
#include "poly.hpp"

namespace ptri {

struct FaObjects {
    FieldElem a;
    Poly fa;
    FieldElem canonical_root;  // -a^{-q}
    Poly h;
    std::optional<Poly> L;
};

/// Constant term N(a^{-1})(Tr(a) - 2a) of f_a.
inline FieldElem fa_constant(const FieldCtx& f, const FieldElem& a) {
    const FieldElem two = f.from_int(2);
    return f.mul(f.norm3(f.inv(a)), f.sub(f.trace3(a), f.mul(two, a)));
}

inline Poly make_fa(const FieldPtr& field, const FieldElem& a) {
    const FieldCtx& f = *field;
    const std::uint64_t q = f.q();
    if (a.is_zero()) throw Error(ErrorCode::ZeroParameter, "f_a needs a != 0");
    const FieldElem ainv = f.inv(a);
    std::vector<FieldElem> cs(q + 2, f.zero());
    cs[q + 1] = f.one();
    cs[q] = ainv;
    cs[1] = f.add(cs[1], ainv);  // q >= 3 so X^q and X do not overlap
    cs[0] = fa_constant(f, a);
    return Poly(field, std::move(cs));
}

/// Builds f_a and its companions, checking every identity coefficient by
/// coefficient. Throws IdentityFailed if one does not hold.
inline FaObjects build_fa(const FieldPtr& field, const FieldElem& a) {
    const FieldCtx& f = *field;
    const std::uint64_t q = f.q();
    if (a.ctx() != field.get()) throw Error(ErrorCode::CtxMismatch, "parameter from another field");
    if (a.is_zero()) throw Error(ErrorCode::ZeroParameter, "f_a needs a != 0");

    const FieldElem ainv = f.inv(a);
    const FieldElem ainv_q = f.frobenius_q(ainv);      // a^{-q}
    const FieldElem ainv_q2 = f.frobenius_q(ainv_q);   // a^{-q^2}
    const FieldElem c_hi = f.sub(ainv, ainv_q);        // a^{-1} - a^{-q}
    const FieldElem c_lo = f.sub(ainv, ainv_q2);       // a^{-1} - a^{-q^2}

    FaObjects out{a, make_fa(field, a), f.neg(ainv_q), Poly(field), std::nullopt};

    std::vector<FieldElem> hc(q + 1, f.zero());
    hc[q] = f.one();
    hc[q - 1] = c_hi;
    hc[0] = c_lo;
    out.h = Poly(field, std::move(hc));

    if (!out.fa(out.canonical_root).is_zero())
        throw Error(ErrorCode::IdentityFailed, "-a^{-q} is not a root of f_a");

    const Poly shifted = compose(out.fa, Poly(field, {f.neg(ainv_q), f.one()}));
    if (shifted != Poly::x(field) * out.h)
        throw Error(ErrorCode::IdentityFailed, "f_a(X - a^{-q}) != X h(X)");

    if (!f.in_subfield(a)) {
        std::vector<FieldElem> lc(q + 1, f.zero());
        lc[q] = c_lo;
        lc[1] = c_hi;
        out.L = Poly(field, std::move(lc));
        if (reciprocal(out.h, q) != *out.L + Poly::constant(field, f.one()))
            throw Error(ErrorCode::IdentityFailed, "X^q h(1/X) != L(X) + 1");
    } else if (out.h != Poly::monomial(field, f.one(), q)) {
        throw Error(ErrorCode::IdentityFailed, "h(X) != X^q for a in F_q");
    }
    return out;
}

enum class FaCase { SubfieldUnit, OutsideSubfield };

constexpr const char* to_string(FaCase c) noexcept {
    return c == FaCase::SubfieldUnit ? "subfield_unit" : "outside_subfield";
}

/// Outcome of checking the splitting statement for one a.
struct SplittingReport {
    FieldElem a;
    FaCase kase = FaCase::OutsideSubfield;
    std::vector<RootMult> roots;
    bool splits_in_units = false;
    bool pass = false;
};

/// Splits over F*_{q^3}; for a in F*_q a single root -a^{-q} of multiplicity
/// q+1, otherwise q+1 distinct nonzero roots.
inline SplittingReport verify_fa_splitting(const FieldPtr& field, const FieldElem& a) {
    const FieldCtx& f = *field;
    if (a.is_zero()) throw Error(ErrorCode::ZeroParameter, "f_a needs a != 0");
    const std::uint64_t q = f.q();
    const FaObjects obj = build_fa(field, a);

    SplittingReport rep;
    rep.a = a;
    rep.kase = f.in_subfield(a) ? FaCase::SubfieldUnit : FaCase::OutsideSubfield;
    rep.roots = roots_with_multiplicity(obj.fa);

    unsigned nonzero_total = 0;
    for (const RootMult& r : rep.roots)
        if (!r.root.is_zero()) nonzero_total += r.multiplicity;
    rep.splits_in_units = nonzero_total == q + 1;

    if (rep.kase == FaCase::SubfieldUnit) {
        rep.pass = rep.splits_in_units && rep.roots.size() == 1 && rep.roots[0].root == obj.canonical_root &&
                   rep.roots[0].multiplicity == q + 1;
    } else {
        bool distinct = rep.roots.size() == q + 1;
        for (const RootMult& r : rep.roots) distinct = distinct && r.multiplicity == 1 && !r.root.is_zero();
        rep.pass = rep.splits_in_units && distinct;
    }
    return rep;
}

/// verify_fa_splitting for every a in F*_{q^3}, ordered by encoding.
inline std::vector<SplittingReport> verify_fa_splitting_all(const FieldPtr& field, unsigned workers = 0) {
    const std::uint64_t order = field->order();
    std::vector<SplittingReport> out(order - 1);
    parallel_chunks(1, order, workers, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
        for (std::uint64_t i = lo; i < hi; ++i) out[i - 1] = verify_fa_splitting(field, field->decode(i));
    });
    return out;
}

namespace detail {
inline void require_outside_subfield(const FieldCtx& f, const FieldElem& a) {
    if (f.in_subfield(a)) throw Error(ErrorCode::SubfieldParameter, "a must lie outside F_q");
}
}  // namespace detail

/// The q roots alpha (a^{-1} - a^{-q^2}), alpha in F_q, in the order of
/// alpha's encoding. Each is checked against L.
inline std::vector<FieldElem> linearized_roots(const FieldPtr& field, const FieldElem& a) {
    const FieldCtx& f = *field;
    detail::require_outside_subfield(f, a);
    const FaObjects obj = build_fa(field, a);
    const FieldElem base = f.sub(f.inv(a), f.frobenius_q(f.frobenius_q(f.inv(a))));
    std::vector<FieldElem> out;
    for (const FieldElem& alpha : f.subfield_elements()) {
        FieldElem r = f.mul(alpha, base);
        if (!(*obj.L)(r).is_zero()) throw Error(ErrorCode::IdentityFailed, "alpha (a^{-1} - a^{-q^2}) is not a root of L");
        out.push_back(r);
    }
    return out;
}

struct FiberTraceReport {
    bool equivalence_holds = false;  // L(x) in F_q  <=>  Tr(x) = 0, for every x
    std::vector<std::uint64_t> fiber_sizes;  // |L^{-1}(alpha)| for alpha in F_q, by encoding
    bool pass = false;
};

inline FiberTraceReport check_linearized_fibers(const FieldPtr& field, const FieldElem& a) {
    const FieldCtx& f = *field;
    detail::require_outside_subfield(f, a);
    const FaObjects obj = build_fa(field, a);
    const std::uint64_t q = f.q();

    const std::vector<FieldElem> sub = f.subfield_elements();
    std::vector<std::uint64_t> slot(f.order(), ~std::uint64_t{0});
    for (std::size_t i = 0; i < sub.size(); ++i) slot[f.encode(sub[i])] = i;

    FiberTraceReport rep;
    rep.equivalence_holds = true;
    rep.fiber_sizes.assign(sub.size(), 0);
    for (FieldElem x : f.enumerate()) {
        const FieldElem lx = (*obj.L)(x);
        const bool in_fq = f.in_subfield(lx);
        if (in_fq != f.trace3(x).is_zero()) rep.equivalence_holds = false;
        if (in_fq) ++rep.fiber_sizes[slot[f.encode(lx)]];
    }
    rep.pass = rep.equivalence_holds &&
               std::all_of(rep.fiber_sizes.begin(), rep.fiber_sizes.end(), [q](std::uint64_t s) { return s == q; });
    return rep;
}

inline bool check_L_fiber_trace(const FieldPtr& field, const FieldElem& a) {
    return check_linearized_fibers(field, a).pass;
}

}  // namespace ptri

#endif  // PTRI_FA_HPP
