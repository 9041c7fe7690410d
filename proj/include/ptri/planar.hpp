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

#ifndef PTRI_PLANAR_HPP
#define PTRI_PLANAR_HPP

#include <atomic>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "gf.hpp"
#include "parallel.hpp"
#include "poly.hpp"

namespace ptri {

/// A shift s and two distinct points with equal differences
/// P(x1 + s) - P(x1) = P(x2 + s) - P(x2).
struct PlanarWitness {
    FieldElem shift;
    FieldElem x1;
    FieldElem x2;
};

struct PlanarReport {
    Poly poly;
    bool is_planar = false;
    std::optional<PlanarWitness> witness;
};

namespace detail {

/// First collision of x -> T(x + s) - T(x) scanning x upward, as (x1 < x2).
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> first_collision(const FieldCtx& f,
                                                                              const std::vector<FieldElem>& elems,
                                                                              const std::vector<FieldElem>& values,
                                                                              const FieldElem& s) {
    constexpr std::uint64_t kUnseen = ~std::uint64_t{0};
    std::vector<std::uint64_t> seen(f.order(), kUnseen);
    for (std::uint64_t xi = 0; xi < f.order(); ++xi) {
        const std::uint64_t shifted = f.encode(f.add(elems[xi], s));
        const std::uint64_t d = f.encode(f.sub(values[shifted], values[xi]));
        if (seen[d] != kUnseen) return std::pair{seen[d], xi};
        seen[d] = xi;
    }
    return std::nullopt;
}

}  // namespace detail

/// Planarity by definition: for each nonzero shift s the difference map must
/// hit every element exactly once. The reported witness uses the smallest
/// failing s and the first repeat found scanning x upward, independent of
/// the number of workers.
inline PlanarReport is_planar(const Poly& poly, unsigned workers = 1) {
    const FieldCtx& f = poly.ctx();
    const std::uint64_t order = f.order();

    std::vector<FieldElem> elems;
    std::vector<FieldElem> values;
    elems.reserve(order);
    values.reserve(order);
    for (FieldElem x : f.enumerate()) {
        elems.push_back(x);
        values.push_back(poly(x));
    }

    std::atomic<std::uint64_t> first_bad{order};
    parallel_chunks(1, order, workers, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
        for (std::uint64_t s = lo; s < hi && s < first_bad.load(); ++s) {
            if (detail::first_collision(f, elems, values, elems[s])) {
                std::uint64_t cur = first_bad.load();
                while (s < cur && !first_bad.compare_exchange_weak(cur, s)) {
                }
                return;
            }
        }
    });

    PlanarReport report{poly, true, std::nullopt};
    if (first_bad.load() < order) {
        const std::uint64_t s = first_bad.load();
        const auto hit = detail::first_collision(f, elems, values, elems[s]);
        report.is_planar = false;
        report.witness = PlanarWitness{elems[s], elems[hit->first], elems[hit->second]};
    }
    return report;
}

/// Re-checks a witness against the polynomial.
inline bool witness_holds(const Poly& poly, const PlanarWitness& w) {
    if (w.shift.is_zero() || w.x1 == w.x2) return false;
    return poly(w.x1 + w.shift) - poly(w.x1) == poly(w.x2 + w.shift) - poly(w.x2);
}

/// X^{q^alpha + 1} is planar over F_{q^e} iff e / gcd(alpha, e) is odd.
inline bool predict_monomial_qa1(std::uint64_t q, unsigned alpha, unsigned e) {
    const auto pm = prime_power(q);
    if (!pm || pm->first == 2 || alpha == 0 || e == 0)
        throw Error(ErrorCode::BadParams, "need q an odd prime power and alpha, e >= 1");
    return (e / std::gcd(alpha, e)) % 2 == 1;
}

/// X^{(3^alpha + 1)/2} is planar over F_{3^e} iff gcd(alpha, 2e) = 1.
inline bool predict_monomial_char3(unsigned alpha, unsigned e) {
    if (alpha == 0 || e == 0) throw Error(ErrorCode::BadParams, "need alpha, e >= 1");
    return std::gcd(alpha, 2 * e) == 1;
}

}  // namespace ptri

#endif  // PTRI_PLANAR_HPP
