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
   JSON and CSV serialization. Every JSON document carries "schema": 1 and
   keeps a fixed key order so that identical runs give identical bytes.
   Field elements are written as their integer encodings, polynomials as
   coefficient-encoding lists (constant term first).
*/

#ifndef PTRI_REPORT_HPP
#define PTRI_REPORT_HPP

#include <cstdint>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "construction.hpp"
#include "fa.hpp"
#include "gf.hpp"
#include "planar.hpp"
#include "verify.hpp"

namespace ptri {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json to_json(const FieldCtx& f) {
    Json j;
    j["p"] = f.p();
    j["n"] = f.n();
    j["order"] = f.order();
    j["modulus"] = f.modulus();
    j["q_sub"] = f.q_sub() ? Json(*f.q_sub()) : Json(nullptr);
    return j;
}

inline Json to_json(const Poly& p) { return Json(encode(p)); }

inline Json to_json(const PlanarReport& r) {
    Json j;
    j["poly"] = to_json(r.poly);
    j["is_planar"] = r.is_planar;
    if (r.witness) {
        const FieldCtx& f = r.poly.ctx();
        j["witness"] = {{"shift", f.encode(r.witness->shift)},
                        {"x1", f.encode(r.witness->x1)},
                        {"x2", f.encode(r.witness->x2)}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

inline Json to_json(const SplittingReport& r) {
    const FieldCtx& f = *r.a.ctx();
    Json roots = Json::array();
    for (const RootMult& rm : r.roots) roots.push_back({{"root", f.encode(rm.root)}, {"multiplicity", rm.multiplicity}});
    Json j;
    j["a"] = f.encode(r.a);
    j["case"] = to_string(r.kase);
    j["roots"] = std::move(roots);
    j["splits_in_units"] = r.splits_in_units;
    j["pass"] = r.pass;
    return j;
}

inline Json to_json(const GraphSpec& s) {
    const FieldCtx& f = *s.field;
    Json j;
    j["q"] = s.q;
    j["field"] = to_json(f);
    j["a"] = f.encode(s.a);
    j["exponent"] = s.exponent;
    j["cf"] = f.encode(s.cf);
    j["cg"] = f.encode(s.cg);
    j["ch"] = f.encode(s.ch);
    j["vertices_per_part"] = s.part_size();
    j["edges_per_layer"] = s.part_size() * (f.order() - 1);
    return j;
}

inline std::string part_pair_name(Part near, Part far) { return {part_letter(near), part_letter(far)}; }

inline Json to_json(const VerifyReport& r) {
    Json c4 = Json::array();
    for (const C4Status& c : r.c4)
        c4.push_back({{"pair", part_pair_name(c.near, c.far)}, {"method", to_string(c.method)}, {"clean", c.clean}});
    Json j;
    j["q"] = r.q;
    j["a"] = r.a;
    j["c4_status"] = std::move(c4);
    j["pair_solution_count"] = r.pair_solution_count;
    j["triangle_count_symbolic"] = r.triangle_count_symbolic;
    j["triangle_count_oracle"] = r.triangle_count_oracle ? Json(*r.triangle_count_oracle) : Json(nullptr);
    j["lower_bound"] = r.lower_bound;
    j["pass"] = r.pass;
    return j;
}

inline Json to_json(const BoundsRow& r) {
    Json j;
    j["q"] = r.q;
    j["k"] = r.k;
    j["baseline_k"] = r.baseline_k;
    j["baseline_triangles"] = r.baseline_triangles;
    j["lower_bound"] = r.lower_bound;
    j["k_pow_3_2"] = r.k_pow_3_2;
    j["k_pow_5_3"] = r.k_pow_5_3;
    j["k_pow_7_4"] = r.k_pow_7_4;
    return j;
}

inline Json to_json(const AltMonomialResult& r) {
    Json j;
    j["q"] = r.q;
    j["alpha"] = r.alpha;
    j["exponent"] = r.exponent;
    j["a"] = r.a;
    j["pair_solutions"] = r.pair_solutions;
    j["triangles"] = r.triangles;
    j["standard_triangles"] = r.standard_triangles;
    return j;
}

/// Wraps a payload as {"schema": 1, "kind": ..., <payload keys>}.
inline Json document(const std::string& kind, const Json& payload) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = kind;
    for (const auto& [key, value] : payload.items()) j[key] = value;
    return j;
}

/* CSV */

inline std::string verify_csv_header() { return "q,a,pair_solutions,triangles,bound,pass"; }

inline std::string to_csv_row(const VerifyReport& r) {
    std::ostringstream os;
    os << r.q << ',' << r.a << ',' << r.pair_solution_count << ',' << r.triangle_count_symbolic << ','
       << r.lower_bound << ',' << (r.pass ? "true" : "false");
    return os.str();
}

inline std::string bounds_csv_header() {
    return "q,k,baseline_k,baseline_triangles,lower_bound,k_pow_3_2,k_pow_5_3,k_pow_7_4";
}

inline std::string to_csv_row(const BoundsRow& r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << r.q << ',' << r.k << ',' << r.baseline_k << ',' << r.baseline_triangles << ',' << r.lower_bound << ','
       << r.k_pow_3_2 << ',' << r.k_pow_5_3 << ',' << r.k_pow_7_4;
    return os.str();
}

}  // namespace ptri

#endif  // PTRI_REPORT_HPP
