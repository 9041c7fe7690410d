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

#include <gtest/gtest.h>

#include <ptri/report.hpp>

namespace ptri {
namespace {

TEST(Json, FieldContext) {
    const Json j = to_json(*make_tower(3));
    EXPECT_EQ(j.dump(), R"({"p":3,"n":3,"order":27,"modulus":[1,2,0,1],"q_sub":3})");
    EXPECT_TRUE(to_json(*make_field(5, 2))["q_sub"].is_null());
}

TEST(Json, DocumentCarriesSchemaFirst) {
    const Json d = document("bounds", to_json(bounds_report(3)));
    ASSERT_GE(d.size(), 2u);
    EXPECT_EQ(d.begin().key(), "schema");
    EXPECT_EQ(d["schema"], 1);
    EXPECT_EQ(d["kind"], "bounds");
    EXPECT_EQ(d["lower_bound"], 75816);
}

TEST(Json, VerifyReportIsByteStable) {
    const GraphSpec s = make_graph_spec(3);
    const std::string first = document("verify", to_json(run_verification(s, {true, true, 1}))).dump(2);
    const std::string second = document("verify", to_json(run_verification(s, {true, true, 3}))).dump(2);
    EXPECT_EQ(first, second);
    const Json j = Json::parse(first);
    EXPECT_EQ(j["triangle_count_symbolic"], 75816);
    EXPECT_EQ(j["pair_solution_count"], 104);
    EXPECT_EQ(j["c4_status"][0]["pair"], "AB");
    EXPECT_EQ(j["c4_status"][0]["method"], "direct");
    EXPECT_EQ(j["pass"], true);
}

TEST(Json, PlanarWitness) {
    const FieldPtr f = make_field(3, 2);
    const Json bad = to_json(is_planar(Poly::monomial(f, f->one(), 4)));
    EXPECT_FALSE(bad["is_planar"].get<bool>());
    EXPECT_EQ(bad["poly"], Json::parse("[0,0,0,0,1]"));
    EXPECT_EQ(bad["witness"]["shift"], 1);
    const Json good = to_json(is_planar(Poly::monomial(f, f->one(), 2)));
    EXPECT_TRUE(good["witness"].is_null());
}

TEST(Json, SplittingRecord) {
    const FieldPtr f = make_tower(3);
    const Json j = to_json(verify_fa_splitting(f, f->one()));
    EXPECT_EQ(j.dump(), R"({"a":1,"case":"subfield_unit","roots":[{"root":2,"multiplicity":4}],"splits_in_units":true,"pass":true})");
}

TEST(Json, GraphSpecFields) {
    const Json j = to_json(make_graph_spec(3));
    EXPECT_EQ(j["a"], 3);
    EXPECT_EQ(j["exponent"], 4);
    EXPECT_EQ(j["ch"], 1);
    EXPECT_EQ(j["vertices_per_part"], 729);
    EXPECT_EQ(j["edges_per_layer"], 729 * 26);
}

TEST(Csv, Rows) {
    const VerifyReport r = run_verification(make_graph_spec(3));
    EXPECT_EQ(verify_csv_header(), "q,a,pair_solutions,triangles,bound,pass");
    EXPECT_EQ(to_csv_row(r), "3,3,104,75816,75816,true");
    EXPECT_EQ(to_csv_row(bounds_report(3)), "3,729,13,52,75816,19683,59049,102275.9");
}

}  // namespace
}  // namespace ptri
