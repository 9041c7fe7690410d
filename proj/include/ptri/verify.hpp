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
   C4 checks and triangle counts for G_q(a), each with an independent route:

     - pair solutions (z1, z2) of cf z1^e + cg z2^e + ch (-z1 - z2)^e = 0 by
       brute force, and from the roots of f_a outside {0, -1};
     - triangles as q^6 times the pair count (every triangle is a
       translate of one based at an A-vertex), and by explicit enumeration
       at q = 3;
     - C4-freeness by a pair-occupancy table, and through planarity of the
       three layer polynomials.
*/

#ifndef PTRI_VERIFY_HPP
#define PTRI_VERIFY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "construction.hpp"
#include "fa.hpp"
#include "parallel.hpp"
#include "planar.hpp"

namespace ptri {

/// Largest field order for the explicit (non-symmetric) oracles: q = 3.
inline constexpr std::uint64_t kBruteForceMaxOrder = 27;

/* ------------------------------------------------------ pair solutions */

inline std::uint64_t count_pair_solutions_bruteforce(const GraphSpec& s, unsigned workers = 0) {
    const FieldCtx& f = *s.field;
    const std::uint64_t order = f.order();
    std::vector<FieldElem> elems, powers;
    elems.reserve(order);
    powers.reserve(order);
    for (FieldElem z : f.enumerate()) {
        elems.push_back(z);
        powers.push_back(f.pow(z, s.exponent));
    }
    return parallel_sum(1, order, workers, [&](std::uint64_t i1) {
        std::uint64_t count = 0;
        const FieldElem t1 = f.mul(s.cf, powers[i1]);
        for (std::uint64_t i2 = 1; i2 < order; ++i2) {
            const FieldElem z3 = f.neg(f.add(elems[i1], elems[i2]));
            if (z3.is_zero()) continue;
            const FieldElem sum = f.add(f.add(t1, f.mul(s.cg, powers[i2])), f.mul(s.ch, powers[f.encode(z3)]));
            if (sum.is_zero()) ++count;
        }
        return count;
    });
}

/// (#distinct roots of f_a outside {0, -1}) * (q^3 - 1). Only meaningful
/// for the X^{q+1} construction.
inline std::uint64_t count_pair_solutions_from_roots(const GraphSpec& s) {
    if (s.exponent != s.q + 1) throw Error(ErrorCode::BadParams, "root route needs exponent q + 1");
    const FieldCtx& f = *s.field;
    const FieldElem minus_one = f.from_int(-1);
    std::uint64_t usable = 0;
    for (const RootMult& r : roots_with_multiplicity(make_fa(s.field, s.a)))
        if (!r.root.is_zero() && r.root != minus_one) ++usable;
    return usable * (f.order() - 1);
}

struct TriangleCount {
    std::uint64_t pair_solutions = 0;
    std::optional<std::uint64_t> pair_solutions_from_roots;
    std::uint64_t triangles = 0;
};

/// q^6 * (pair solutions). For exponent q + 1 both pair-count routes run
/// and must agree.
inline TriangleCount count_triangles_symbolic_detail(const GraphSpec& s, unsigned workers = 0) {
    TriangleCount out;
    out.pair_solutions = count_pair_solutions_bruteforce(s, workers);
    if (s.exponent == s.q + 1) {
        out.pair_solutions_from_roots = count_pair_solutions_from_roots(s);
        if (*out.pair_solutions_from_roots != out.pair_solutions)
            throw Error(ErrorCode::InconsistentCounts,
                        "brute force " + std::to_string(out.pair_solutions) + " vs roots " +
                            std::to_string(*out.pair_solutions_from_roots));
    }
    out.triangles = s.part_size() * out.pair_solutions;
    return out;
}

inline std::uint64_t count_triangles_symbolic(const GraphSpec& s, unsigned workers = 0) {
    return count_triangles_symbolic_detail(s, workers).triangles;
}

/* ------------------------------------------------- explicit enumeration */

/// Every A-vertex, every B- and C-neighbour of it, and one adjacency test
/// for the B-C pair. q = 3 only.
inline std::uint64_t count_triangles_bruteforce(const GraphSpec& s, unsigned workers = 0) {
    if (s.field_order() > kBruteForceMaxOrder)
        throw Error(ErrorCode::TooLarge, "explicit triangle enumeration is limited to q = 3");
    return parallel_sum(0, s.part_size(), workers, [&](std::uint64_t i) {
        const Vertex v = vertex_at(s, Part::A, i);
        const auto bs = neighbors(s, v, Part::B);
        const auto cs = neighbors(s, v, Part::C);
        std::uint64_t count = 0;
        for (const Vertex& b : bs)
            for (const Vertex& c : cs)
                if (adjacent(s, b, c)) ++count;
        return count;
    });
}

inline std::uint64_t count_triangles(const ExplicitGraph& g) {
    std::uint64_t count = 0;
    for (std::uint32_t a = 0; a < g.part_size(); ++a) {
        const auto& cs = g.neighbors(Part::A, a, Part::C);
        for (std::uint32_t b : g.neighbors(Part::A, a, Part::B))
            for (std::uint32_t c : cs)
                if (g.has_edge(Part::B, b, Part::C, c)) ++count;
    }
    return count;
}

/* ------------------------------------------------------------------ C4 */

/// Two vertices u1 < u2 of `far` with two common neighbours w1, w2 in `near`.
struct C4Witness {
    Part near = Part::A;
    std::uint64_t w1 = 0;
    std::uint64_t w2 = 0;
    Part far = Part::B;
    std::uint64_t u1 = 0;
    std::uint64_t u2 = 0;
};

struct C4Result {
    bool clean = true;
    std::optional<C4Witness> witness;
};

namespace detail {

/// Scans near-side vertices in index order and records every unordered pair
/// of their far-side neighbours; the first repeated pair is the witness.
template <class NeighborFn>
C4Result pair_occupancy_scan(std::uint64_t near_count, std::uint64_t far_count, Part near, Part far,
                             NeighborFn&& nbrs) {
    std::unordered_map<std::uint64_t, std::uint64_t> first_common;
    for (std::uint64_t w = 0; w < near_count; ++w) {
        std::vector<std::uint64_t> l = nbrs(w);
        std::sort(l.begin(), l.end());
        for (std::size_t i = 0; i < l.size(); ++i) {
            for (std::size_t j = i + 1; j < l.size(); ++j) {
                const auto [it, fresh] = first_common.try_emplace(l[i] * far_count + l[j], w);
                if (!fresh) return {false, C4Witness{near, it->second, w, far, l[i], l[j]}};
            }
        }
    }
    return {true, std::nullopt};
}

inline void require_adjacent_parts(Part a, Part b) {
    if (a == b) throw Error(ErrorCode::BadPartPair, "a part pair needs two different parts");
}

}  // namespace detail

inline C4Result check_c4_free_direct(const GraphSpec& s, Part near, Part far) {
    detail::require_adjacent_parts(near, far);
    if (s.field_order() > kBruteForceMaxOrder)
        throw Error(ErrorCode::TooLarge, "direct C4 check is limited to q = 3");
    return detail::pair_occupancy_scan(s.part_size(), s.part_size(), near, far, [&](std::uint64_t w) {
        std::vector<std::uint64_t> out;
        for (const Vertex& u : neighbors(s, vertex_at(s, near, w), far)) out.push_back(vertex_index(s, u));
        return out;
    });
}

inline C4Result check_c4_free_direct(const ExplicitGraph& g, Part near, Part far) {
    detail::require_adjacent_parts(near, far);
    if (g.part_size() > 100000) throw Error(ErrorCode::TooLarge, "graph too large for the pair table");
    return detail::pair_occupancy_scan(g.part_size(), g.part_size(), near, far, [&](std::uint64_t w) {
        const auto& l = g.neighbors(near, static_cast<std::uint32_t>(w), far);
        return std::vector<std::uint64_t>(l.begin(), l.end());
    });
}

/// Re-checks a witness against the implicit graph.
inline bool witness_holds(const GraphSpec& s, const C4Witness& w) {
    if (w.w1 == w.w2 || w.u1 == w.u2) return false;
    const Vertex a1 = vertex_at(s, w.near, w.w1), a2 = vertex_at(s, w.near, w.w2);
    const Vertex b1 = vertex_at(s, w.far, w.u1), b2 = vertex_at(s, w.far, w.u2);
    return adjacent(s, a1, b1) && adjacent(s, a1, b2) && adjacent(s, a2, b1) && adjacent(s, a2, b2);
}

struct PlanarityC4Result {
    bool clean = false;
    std::array<bool, 3> layer_planar{};  // layers leaving A, B, C
};

/// Clean iff cf X^e, cg X^e and ch X^e are all planar; a planar layer
/// polynomial makes its bipartite layer C4-free.
inline PlanarityC4Result check_c4_free_via_planarity(const GraphSpec& s, unsigned workers = 0) {
    PlanarityC4Result out;
    out.clean = true;
    for (Part p : {Part::A, Part::B, Part::C}) {
        const Poly layer = Poly::monomial(s.field, s.coefficient_from(p), s.exponent);
        const bool planar = !layer.is_zero() && is_planar(layer, workers).is_planar;
        out.layer_planar[static_cast<int>(p)] = planar;
        out.clean = out.clean && planar;
    }
    return out;
}

/* --------------------------------------------------------------- bounds */

struct BoundsRow {
    std::uint64_t q = 0;
    std::uint64_t k = 0;                   // q^6 vertices per part
    std::uint64_t baseline_k = 0;          // q^2 + q + 1
    std::uint64_t baseline_triangles = 0;  // (q + 1)(q^2 + q + 1)
    std::uint64_t lower_bound = 0;         // q^6 (q^3 - 1)(q + 1)
    std::uint64_t k_pow_3_2 = 0;           // q^9
    std::uint64_t k_pow_5_3 = 0;           // q^10
    double k_pow_7_4 = 0.0;                // q^10.5, display only
};

inline std::uint64_t triangle_lower_bound(std::uint64_t q) { return ipow(q, 6) * (ipow(q, 3) - 1) * (q + 1); }

inline BoundsRow bounds_report(std::uint64_t q) {
    const auto pm = prime_power(q);
    if (!pm || pm->first == 2 || q < 3) throw Error(ErrorCode::BadOrder, "q must be an odd prime power >= 3");
    if (q > 50) throw Error(ErrorCode::BadOrder, "q too large for 64-bit bounds");
    BoundsRow r;
    r.q = q;
    r.k = ipow(q, 6);
    r.baseline_k = q * q + q + 1;
    r.baseline_triangles = (q + 1) * r.baseline_k;
    r.lower_bound = triangle_lower_bound(q);
    r.k_pow_3_2 = ipow(q, 9);
    r.k_pow_5_3 = ipow(q, 10);
    r.k_pow_7_4 = std::pow(static_cast<double>(q), 10.5);
    return r;
}

/* ------------------------------------------------- alternative monomial */

struct AltMonomialResult {
    std::uint64_t q = 0;
    unsigned alpha = 0;
    std::uint64_t exponent = 0;  // (3^alpha + 1) / 2
    std::uint64_t a = 0;
    std::uint64_t pair_solutions = 0;
    std::uint64_t triangles = 0;
    std::uint64_t standard_triangles = 0;  // q^6 (q^3 - 1)(q + 1) for comparison
};

/// G_q(a) with X^{(3^alpha+1)/2} in place of X^{q+1}, same a and the same
/// cf, cg, ch. Pair solutions by brute force; nothing is asserted about the
/// outcome.
inline AltMonomialResult experiment_alt_monomial(std::uint64_t q, unsigned alpha, unsigned workers = 0) {
    const auto pm = prime_power(q);
    if (!pm || pm->first != 3) throw Error(ErrorCode::BadCharacteristic, "q must be a power of 3");
    if (alpha == 0 || alpha > 38) throw Error(ErrorCode::BadParams, "alpha must be in [1, 38]");
    const unsigned e = 3 * pm->second;
    if (!predict_monomial_char3(alpha, e))
        throw Error(ErrorCode::NotPlanar, "X^{(3^alpha+1)/2} is not planar over F_{3^" + std::to_string(e) + "}");

    FieldPtr field = make_tower(q);
    const FieldElem a = select_parameter(field);
    const GraphSpec s = make_graph_spec(field, a, (ipow(3, alpha) + 1) / 2);

    AltMonomialResult r;
    r.q = q;
    r.alpha = alpha;
    r.exponent = s.exponent;
    r.a = field->encode(a);
    r.pair_solutions = count_pair_solutions_bruteforce(s, workers);
    r.triangles = s.part_size() * r.pair_solutions;
    r.standard_triangles = triangle_lower_bound(q);
    return r;
}

/* --------------------------------------------------------- full report */

enum class C4Method { Direct, Planarity };

constexpr const char* to_string(C4Method m) noexcept { return m == C4Method::Direct ? "direct" : "planarity"; }

struct C4Status {
    Part near = Part::A;
    Part far = Part::B;
    C4Method method = C4Method::Planarity;
    bool clean = false;
};

struct VerifyOptions {
    bool direct_c4 = false;
    bool bruteforce_triangles = false;
    unsigned workers = 0;
};

struct VerifyReport {
    std::uint64_t q = 0;
    std::uint64_t a = 0;
    std::vector<C4Status> c4;
    std::uint64_t triangle_count_symbolic = 0;
    std::optional<std::uint64_t> triangle_count_oracle;
    std::uint64_t pair_solution_count = 0;
    std::uint64_t lower_bound = 0;
    bool pass = false;
};

inline VerifyReport run_verification(const GraphSpec& s, const VerifyOptions& opt = {}) {
    if ((opt.direct_c4 || opt.bruteforce_triangles) && s.field_order() > kBruteForceMaxOrder)
        throw Error(ErrorCode::TooLarge, "direct C4 check and explicit triangle count are limited to q = 3");

    VerifyReport r;
    r.q = s.q;
    r.a = s.field->encode(s.a);
    r.lower_bound = triangle_lower_bound(s.q);

    constexpr std::array<std::pair<Part, Part>, 3> layers{
        {{Part::A, Part::B}, {Part::B, Part::C}, {Part::C, Part::A}}};
    if (opt.direct_c4) {
        for (auto [near, far] : layers) r.c4.push_back({near, far, C4Method::Direct, check_c4_free_direct(s, near, far).clean});
    }
    const PlanarityC4Result viaplanar = check_c4_free_via_planarity(s, opt.workers);
    for (auto [near, far] : layers)
        r.c4.push_back({near, far, C4Method::Planarity, viaplanar.layer_planar[static_cast<int>(near)]});

    const TriangleCount tc = count_triangles_symbolic_detail(s, opt.workers);
    r.pair_solution_count = tc.pair_solutions;
    r.triangle_count_symbolic = tc.triangles;
    if (opt.bruteforce_triangles) r.triangle_count_oracle = count_triangles_bruteforce(s, opt.workers);

    r.pass = r.triangle_count_symbolic >= r.lower_bound &&
             std::all_of(r.c4.begin(), r.c4.end(), [](const C4Status& c) { return c.clean; }) &&
             (!r.triangle_count_oracle || *r.triangle_count_oracle == r.triangle_count_symbolic);
    return r;
}

}  // namespace ptri

#endif  // PTRI_VERIFY_HPP
