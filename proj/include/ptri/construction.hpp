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
   The 3-partite graph G_q(a) on three copies A, B, C of F_{q^3} x F_{q^3}:

       (x, y)_A ~ (x + z, y + cf z^e)_B
       (x, y)_B ~ (x + z, y + cg z^e)_C
       (x, y)_C ~ (x + z, y + ch z^e)_A        for every z != 0,

   with e = q + 1, cf = a - 1, cg = a N(a^{-1})(Tr(a) - 2a) - 1, ch = 1.
   The graph stays implicit; adjacency is a constant number of field
   operations. The explicit projective-plane baseline lives here too.
*/

#ifndef PTRI_CONSTRUCTION_HPP
#define PTRI_CONSTRUCTION_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "fa.hpp"
#include "gf.hpp"
#include "poly.hpp"

namespace ptri {

enum class Part : std::uint8_t { A = 0, B = 1, C = 2 };

constexpr char part_letter(Part p) noexcept { return "ABC"[static_cast<int>(p)]; }
constexpr Part next_part(Part p) noexcept { return static_cast<Part>((static_cast<int>(p) + 1) % 3); }
constexpr Part prev_part(Part p) noexcept { return static_cast<Part>((static_cast<int>(p) + 2) % 3); }

struct Vertex {
    Part part = Part::A;
    FieldElem x;
    FieldElem y;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

enum class ConstraintFailure { None, SubfieldElement, ConstraintEqZero, MinusOneIsRoot };

constexpr const char* to_string(ConstraintFailure r) noexcept {
    switch (r) {
        case ConstraintFailure::None: return "None";
        case ConstraintFailure::SubfieldElement: return "SubfieldElement";
        case ConstraintFailure::ConstraintEqZero: return "ConstraintEqZero";
        case ConstraintFailure::MinusOneIsRoot: return "MinusOneIsRoot";
    }
    return "Unknown";
}

struct ConstraintCheck {
    bool ok = false;
    ConstraintFailure reason = ConstraintFailure::None;
    explicit operator bool() const noexcept { return ok; }
};

/// a N(a^{-1})(Tr(a) - 2a) - 1, the coefficient of g.
inline FieldElem g_coefficient(const FieldCtx& f, const FieldElem& a) {
    return f.sub(f.mul(a, fa_constant(f, a)), f.one());
}

/// a must avoid F_q, make g nonzero, and keep -1 off the roots of f_a.
inline ConstraintCheck check_constraint(const FieldPtr& field, const FieldElem& a) {
    const FieldCtx& f = *field;
    if (f.in_subfield(a)) return {false, ConstraintFailure::SubfieldElement};
    if (g_coefficient(f, a).is_zero()) return {false, ConstraintFailure::ConstraintEqZero};
    if (make_fa(field, a)(f.from_int(-1)).is_zero()) return {false, ConstraintFailure::MinusOneIsRoot};
    return {true, ConstraintFailure::None};
}

/// All valid parameters in increasing encoding.
inline std::vector<FieldElem> valid_parameters(const FieldPtr& field) {
    std::vector<FieldElem> out;
    for (FieldElem a : field->enumerate())
        if (check_constraint(field, a)) out.push_back(a);
    return out;
}

/// The valid parameter with the smallest encoding.
inline FieldElem select_parameter(const FieldPtr& field) {
    if (field->q() < 3) throw Error(ErrorCode::BadParams, "need q >= 3");
    for (FieldElem a : field->enumerate())
        if (check_constraint(field, a)) return a;
    throw Error(ErrorCode::NoValidParameter, "no a satisfies the construction constraints");
}

struct GraphSpec {
    FieldPtr field;
    std::uint64_t q = 0;
    std::uint64_t exponent = 0;  // q + 1 for G_q(a)
    FieldElem a;
    FieldElem cf;
    FieldElem cg;
    FieldElem ch;

    std::uint64_t field_order() const noexcept { return field->order(); }
    /// Vertices per part, q^6.
    std::uint64_t part_size() const noexcept { return field->order() * field->order(); }

    const FieldElem& coefficient_from(Part from) const noexcept {
        switch (from) {
            case Part::A: return cf;
            case Part::B: return cg;
            case Part::C: return ch;
        }
        return ch;
    }

    /// c z^e for the layer leaving `from`.
    FieldElem shift_image(Part from, const FieldElem& z) const {
        return field->mul(coefficient_from(from), field->pow(z, exponent));
    }
};

/// Validated G_q(a); throws ConstraintViolation with the reason code.
/// `exponent` defaults to q + 1; other values give the alternative-monomial
/// variant with the same coefficient scheme.
inline GraphSpec make_graph_spec(const FieldPtr& field, const FieldElem& a, std::uint64_t exponent = 0) {
    if (a.ctx() != field.get()) throw Error(ErrorCode::CtxMismatch, "parameter from another field");
    const FieldCtx& f = *field;
    if (a.is_zero()) throw Error(ErrorCode::ZeroParameter, "a must be nonzero");
    const ConstraintCheck chk = check_constraint(field, a);
    if (!chk) {
        throw Error(ErrorCode::ConstraintViolation, std::string("a = ") + std::to_string(f.encode(a)) +
                                                        " rejected: " + to_string(chk.reason));
    }
    GraphSpec s;
    s.field = field;
    s.q = f.q();
    s.exponent = exponent == 0 ? s.q + 1 : exponent;
    s.a = a;
    s.cf = f.sub(a, f.one());
    s.cg = g_coefficient(f, a);
    s.ch = f.one();
    return s;
}

inline GraphSpec make_graph_spec(std::uint64_t q) {
    FieldPtr field = make_tower(q);
    const FieldElem a = select_parameter(field);
    return make_graph_spec(field, a);
}

/// Index in [0, q^6): encode(x) * q^3 + encode(y).
inline std::uint64_t vertex_index(const GraphSpec& s, const Vertex& v) {
    return s.field->encode(v.x) * s.field_order() + s.field->encode(v.y);
}

inline Vertex vertex_at(const GraphSpec& s, Part part, std::uint64_t index) {
    if (index >= s.part_size()) throw Error(ErrorCode::OutOfRange, "vertex index out of range");
    return {part, s.field->decode(index / s.field_order()), s.field->decode(index % s.field_order())};
}

/// Neighbours of v in `target`, in increasing encoding of the shift z.
inline std::vector<Vertex> neighbors(const GraphSpec& s, const Vertex& v, Part target) {
    const FieldCtx& f = *s.field;
    std::vector<Vertex> out;
    out.reserve(f.order() - 1);
    if (target == next_part(v.part)) {
        for (std::uint64_t zi = 1; zi < f.order(); ++zi) {
            const FieldElem z = f.decode(zi);
            out.push_back({target, f.add(v.x, z), f.add(v.y, s.shift_image(v.part, z))});
        }
    } else if (target == prev_part(v.part)) {
        for (std::uint64_t zi = 1; zi < f.order(); ++zi) {
            const FieldElem z = f.decode(zi);
            out.push_back({target, f.sub(v.x, z), f.sub(v.y, s.shift_image(target, z))});
        }
    } else {
        throw Error(ErrorCode::BadPartPair, "no edges inside a part");
    }
    return out;
}

inline bool adjacent(const GraphSpec& s, const Vertex& u, const Vertex& v) {
    if (u.part == v.part) throw Error(ErrorCode::SamePart, "vertices lie in the same part");
    if (v.part != next_part(u.part)) return adjacent(s, v, u);
    const FieldCtx& f = *s.field;
    const FieldElem z = f.sub(v.x, u.x);
    if (z.is_zero()) return false;
    return f.sub(v.y, u.y) == s.shift_image(u.part, z);
}

/// One edge per line, "A<i> B<j>", layers A-B, B-C, C-A in that order.
inline void write_edge_list(const GraphSpec& s, std::ostream& os) {
    for (Part from : {Part::A, Part::B, Part::C}) {
        const Part to = next_part(from);
        for (std::uint64_t i = 0; i < s.part_size(); ++i) {
            const Vertex v = vertex_at(s, from, i);
            for (const Vertex& w : neighbors(s, v, to))
                os << part_letter(from) << i << ' ' << part_letter(to) << vertex_index(s, w) << '\n';
        }
    }
}

/* -------------------------------------------------------- explicit graphs */

/// A small materialized 3-partite graph with `part_size` vertices per part.
class ExplicitGraph {
   public:
    explicit ExplicitGraph(std::size_t part_size) : part_size_(part_size) {
        for (auto& row : adj_)
            for (auto& lists : row) lists.assign(part_size, {});
    }

    std::size_t part_size() const noexcept { return part_size_; }

    void add_edge(Part pu, std::uint32_t u, Part pv, std::uint32_t v) {
        if (pu == pv) throw Error(ErrorCode::SamePart, "no edges inside a part");
        if (u >= part_size_ || v >= part_size_) throw Error(ErrorCode::OutOfRange, "vertex index out of range");
        insert_sorted(adj_[idx(pu)][idx(pv)][u], v);
        insert_sorted(adj_[idx(pv)][idx(pu)][v], u);
    }

    const std::vector<std::uint32_t>& neighbors(Part from, std::uint32_t u, Part to) const {
        if (from == to) throw Error(ErrorCode::BadPartPair, "no edges inside a part");
        return adj_[idx(from)][idx(to)].at(u);
    }

    bool has_edge(Part pu, std::uint32_t u, Part pv, std::uint32_t v) const {
        const auto& l = neighbors(pu, u, pv);
        return std::binary_search(l.begin(), l.end(), v);
    }

    std::uint64_t edge_count(Part from, Part to) const {
        std::uint64_t e = 0;
        for (const auto& l : adj_[idx(from)][idx(to)]) e += l.size();
        return e;
    }

   private:
    static std::size_t idx(Part p) noexcept { return static_cast<std::size_t>(p); }
    static void insert_sorted(std::vector<std::uint32_t>& l, std::uint32_t v) {
        auto it = std::lower_bound(l.begin(), l.end(), v);
        if (it == l.end() || *it != v) l.insert(it, v);
    }

    std::size_t part_size_;
    std::array<std::array<std::vector<std::vector<std::uint32_t>>, 3>, 3> adj_;
};

/// Points and lines of PG(2, q) as normalized triples (first nonzero
/// coordinate 1) over F_q given by add/mul tables on {0, ..., q-1}.
namespace detail {

struct SmallField {
    std::size_t q = 0;
    std::vector<std::uint32_t> add, mul;  // q x q tables
    std::uint32_t plus(std::uint32_t a, std::uint32_t b) const { return add[a * q + b]; }
    std::uint32_t times(std::uint32_t a, std::uint32_t b) const { return mul[a * q + b]; }
};

inline SmallField small_field(std::uint64_t q) {
    const auto pm = prime_power(q);
    if (!pm) throw Error(ErrorCode::BadOrder, std::to_string(q) + " is not a prime power");
    SmallField sf;
    sf.q = q;
    sf.add.resize(q * q);
    sf.mul.resize(q * q);
    if (pm->second == 1) {
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = 0; b < q; ++b) {
                sf.add[a * q + b] = static_cast<std::uint32_t>((a + b) % q);
                sf.mul[a * q + b] = static_cast<std::uint32_t>((a * b) % q);
            }
        return sf;
    }
    if (pm->first == 2) throw Error(ErrorCode::BadOrder, "even prime powers above 2 are not supported");
    const FieldPtr f = make_field(pm->first, pm->second);
    for (std::uint64_t a = 0; a < q; ++a)
        for (std::uint64_t b = 0; b < q; ++b) {
            sf.add[a * q + b] = static_cast<std::uint32_t>(f->encode(f->add(f->decode(a), f->decode(b))));
            sf.mul[a * q + b] = static_cast<std::uint32_t>(f->encode(f->mul(f->decode(a), f->decode(b))));
        }
    return sf;
}

inline std::vector<std::array<std::uint32_t, 3>> projective_points(std::uint32_t q) {
    std::vector<std::array<std::uint32_t, 3>> pts;
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) pts.push_back({1, a, b});
    for (std::uint32_t b = 0; b < q; ++b) pts.push_back({0, 1, b});
    pts.push_back({0, 0, 1});
    return pts;
}

}  // namespace detail

/// Incidence graph of PG(2, q) between A (points) and B (lines), plus C
/// vertex 0 joined to all of A and B; the other C vertices are isolated.
inline ExplicitGraph baseline_projective(std::uint64_t q) {
    if (q < 2 || q > 64) throw Error(ErrorCode::BadOrder, "projective baseline needs 2 <= q <= 64");
    const detail::SmallField sf = detail::small_field(q);
    const auto pts = detail::projective_points(static_cast<std::uint32_t>(q));
    ExplicitGraph g(pts.size());
    for (std::uint32_t i = 0; i < pts.size(); ++i) {
        for (std::uint32_t j = 0; j < pts.size(); ++j) {
            std::uint32_t dot = 0;
            for (int k = 0; k < 3; ++k) dot = sf.plus(dot, sf.times(pts[i][k], pts[j][k]));
            if (dot == 0) g.add_edge(Part::A, i, Part::B, j);
        }
        g.add_edge(Part::C, 0, Part::A, i);
        g.add_edge(Part::C, 0, Part::B, i);
    }
    return g;
}

}  // namespace ptri

#endif  // PTRI_CONSTRUCTION_HPP
