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

#include <algorithm>
#include <cmath>

#include <ptri/verify.hpp>

namespace ptri {
namespace {

ErrorCode code_of(auto fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an exception";
    return ErrorCode::BadParams;
}

TEST(PairSolutions, Q3Count) {
    const GraphSpec s = make_graph_spec(3);
    EXPECT_EQ(count_pair_solutions_bruteforce(s, 1), 104u);
    EXPECT_EQ(count_pair_solutions_from_roots(s), 104u);
}

TEST(PairSolutions, EverySolutionIsRootRatio) {
    const GraphSpec s = make_graph_spec(3);
    const FieldCtx& f = *s.field;
    const Poly fa = make_fa(s.field, s.a);
    std::uint64_t n = 0;
    for (std::uint64_t i1 = 1; i1 < f.order(); ++i1)
        for (std::uint64_t i2 = 1; i2 < f.order(); ++i2) {
            const FieldElem z1 = f.decode(i1), z2 = f.decode(i2), z3 = -(z1 + z2);
            const FieldElem lhs = s.cf * f.pow(z1, 4) + s.cg * f.pow(z2, 4) + s.ch * f.pow(z3, 4);
            if (!lhs.is_zero()) continue;
            EXPECT_FALSE(z3.is_zero());
            EXPECT_TRUE(fa(z1 / z2).is_zero());
            ++n;
        }
    EXPECT_EQ(n, 104u);
}

TEST(PairSolutions, RootRouteMatchesBruteForceForEveryValidParameter) {
    for (std::uint64_t q : {3u, 5u}) {
        const FieldPtr f = make_tower(q);
        const auto params = valid_parameters(f);
        for (std::size_t i = 0; i < params.size(); i += (q == 3 ? 1 : 13)) {
            const GraphSpec s = make_graph_spec(f, params[i]);
            ASSERT_EQ(count_pair_solutions_bruteforce(s), count_pair_solutions_from_roots(s)) << f->encode(params[i]);
        }
    }
}

TEST(PairSolutions, IndependentOfWorkerCount) {
    const GraphSpec s = make_graph_spec(5);
    const std::uint64_t one = count_pair_solutions_bruteforce(s, 1);
    EXPECT_EQ(one, 744u);
    EXPECT_EQ(count_pair_solutions_bruteforce(s, 3), one);
    EXPECT_EQ(count_pair_solutions_bruteforce(s, 8), one);
}

TEST(Triangles, SymbolicMatchesFormula) {
    EXPECT_EQ(count_triangles_symbolic(make_graph_spec(3)), 75816u);
    EXPECT_EQ(count_triangles_symbolic(make_graph_spec(5)), 11625000u);
    EXPECT_EQ(count_triangles_symbolic(make_graph_spec(7)), 321887664u);
    for (std::uint64_t q : {3u, 5u, 7u}) EXPECT_EQ(count_triangles_symbolic(make_graph_spec(q)), triangle_lower_bound(q));
}

TEST(Triangles, BruteForceAgreesForThreeParameters) {
    const FieldPtr f = make_tower(3);
    const auto params = valid_parameters(f);
    ASSERT_GE(params.size(), 3u);
    for (std::size_t i : {std::size_t{0}, std::size_t{7}, params.size() - 1}) {
        const GraphSpec s = make_graph_spec(f, params[i]);
        EXPECT_EQ(count_triangles_bruteforce(s), count_triangles_symbolic(s)) << f->encode(params[i]);
        EXPECT_EQ(count_triangles_symbolic(s), 75816u);
    }
}

TEST(Triangles, BruteForceRefusesLargeQ) {
    EXPECT_EQ(code_of([] { count_triangles_bruteforce(make_graph_spec(5)); }), ErrorCode::TooLarge);
}

TEST(Triangles, BaselineCounts) {
    EXPECT_EQ(count_triangles(baseline_projective(2)), 21u);
    EXPECT_EQ(count_triangles(baseline_projective(3)), 52u);
    EXPECT_EQ(count_triangles(baseline_projective(5)), 6u * 31u);
}

TEST(C4, DirectCleanOnAllLayersQ3) {
    const GraphSpec s = make_graph_spec(3);
    EXPECT_TRUE(check_c4_free_direct(s, Part::A, Part::B).clean);
    EXPECT_TRUE(check_c4_free_direct(s, Part::B, Part::C).clean);
    EXPECT_TRUE(check_c4_free_direct(s, Part::C, Part::A).clean);
    EXPECT_TRUE(check_c4_free_direct(s, Part::B, Part::A).clean);
    EXPECT_EQ(code_of([&] { check_c4_free_direct(s, Part::A, Part::A); }), ErrorCode::BadPartPair);
    EXPECT_EQ(code_of([] { check_c4_free_direct(make_graph_spec(5), Part::A, Part::B); }), ErrorCode::TooLarge);
}

TEST(C4, BaselineIncidenceGraphIsClean) {
    for (std::uint64_t q : {2u, 3u}) {
        const ExplicitGraph g = baseline_projective(q);
        EXPECT_TRUE(check_c4_free_direct(g, Part::A, Part::B).clean);
        EXPECT_TRUE(check_c4_free_direct(g, Part::B, Part::A).clean);
        EXPECT_TRUE(check_c4_free_direct(g, Part::A, Part::C).clean);
        EXPECT_TRUE(check_c4_free_direct(g, Part::B, Part::C).clean);
    }
}

TEST(C4, InjectedK22IsDetected) {
    ExplicitGraph g(6);
    g.add_edge(Part::A, 0, Part::B, 5);
    g.add_edge(Part::A, 1, Part::B, 2);
    g.add_edge(Part::A, 1, Part::B, 4);
    g.add_edge(Part::A, 3, Part::B, 2);
    g.add_edge(Part::A, 3, Part::B, 4);
    const C4Result r = check_c4_free_direct(g, Part::A, Part::B);
    ASSERT_FALSE(r.clean);
    EXPECT_EQ(r.witness->w1, 1u);
    EXPECT_EQ(r.witness->w2, 3u);
    EXPECT_EQ(r.witness->u1, 2u);
    EXPECT_EQ(r.witness->u2, 4u);

    ExplicitGraph plane = baseline_projective(2);
    EXPECT_TRUE(check_c4_free_direct(plane, Part::A, Part::B).clean);
    // two points already share one line; joining both to a second line closes a C4
    const auto& l0 = plane.neighbors(Part::A, 0, Part::B);
    const auto& l1 = plane.neighbors(Part::A, 1, Part::B);
    std::uint32_t other = 0;
    while (std::find(l0.begin(), l0.end(), other) != l0.end() || std::find(l1.begin(), l1.end(), other) != l1.end()) ++other;
    plane.add_edge(Part::A, 0, Part::B, other);
    plane.add_edge(Part::A, 1, Part::B, other);
    EXPECT_FALSE(check_c4_free_direct(plane, Part::A, Part::B).clean);
}

TEST(C4, NonPlanarLayerGivesWitnessOnImplicitGraph) {
    // X^3 is additive, so every difference map is constant
    const FieldPtr f = make_tower(3);
    const GraphSpec bad = make_graph_spec(f, select_parameter(f), 3);
    const C4Result r = check_c4_free_direct(bad, Part::A, Part::B);
    ASSERT_FALSE(r.clean);
    EXPECT_TRUE(witness_holds(bad, *r.witness));
    EXPECT_FALSE(check_c4_free_via_planarity(bad).clean);
}

TEST(C4, PlanarityRouteClean) {
    for (std::uint64_t q : {3u, 5u}) {
        const PlanarityC4Result r = check_c4_free_via_planarity(make_graph_spec(q));
        EXPECT_TRUE(r.clean) << q;
        EXPECT_EQ(r.layer_planar, (std::array<bool, 3>{true, true, true}));
    }
}

TEST(Bounds, Rows) {
    const BoundsRow r3 = bounds_report(3);
    EXPECT_EQ(r3.k, 729u);
    EXPECT_EQ(r3.lower_bound, 75816u);
    EXPECT_EQ(r3.k_pow_5_3, 59049u);
    EXPECT_EQ(r3.k_pow_3_2, 19683u);
    EXPECT_NEAR(r3.k_pow_7_4, std::pow(729.0, 1.75), 1e-6);
    EXPECT_NEAR(r3.k_pow_7_4, 102275.868, 1e-3);
    EXPECT_EQ(r3.baseline_k, 13u);
    EXPECT_EQ(r3.baseline_triangles, 52u);
    EXPECT_LT(static_cast<double>(r3.k_pow_3_2), static_cast<double>(r3.lower_bound));
    EXPECT_LT(static_cast<double>(r3.lower_bound), r3.k_pow_7_4);

    const BoundsRow r5 = bounds_report(5);
    EXPECT_EQ(r5.k, 15625u);
    EXPECT_EQ(r5.lower_bound, 11625000u);
    EXPECT_EQ(code_of([] { bounds_report(2); }), ErrorCode::BadOrder);
    EXPECT_EQ(code_of([] { bounds_report(4); }), ErrorCode::BadOrder);
    EXPECT_EQ(code_of([] { bounds_report(6); }), ErrorCode::BadOrder);
}

TEST(Bounds, AsymptoticSanity) {
    for (std::uint64_t q : {3u, 5u, 7u}) {
        const double t = static_cast<double>(count_triangles_symbolic(make_graph_spec(q)));
        const double k = std::pow(static_cast<double>(q), 6);
        EXPECT_GE(t, std::pow(q, 10) * (1.0 - 3.0 / static_cast<double>(q)));
        EXPECT_GT(t, std::pow(k, 1.5));
        EXPECT_LT(t, std::pow(k, 1.75));
        // well above what independent edges at this density would give
        const double density = (std::pow(q, 3) - 1) / std::pow(q, 6);
        EXPECT_GT(t, std::pow(density, 3) * std::pow(q, 18));
    }
}

TEST(AltMonomial, SquareAtQ3) {
    const AltMonomialResult r = experiment_alt_monomial(3, 1);
    EXPECT_EQ(r.exponent, 2u);
    EXPECT_EQ(r.a, 3u);
    EXPECT_EQ(r.triangles, 729u * r.pair_solutions);
    const FieldPtr f = make_tower(3);
    const GraphSpec s = make_graph_spec(f, f->decode(3), 2);
    EXPECT_EQ(r.pair_solutions, count_pair_solutions_bruteforce(s));
}

TEST(AltMonomial, Errors) {
    EXPECT_EQ(code_of([] { experiment_alt_monomial(3, 3); }), ErrorCode::NotPlanar);
    EXPECT_EQ(code_of([] { experiment_alt_monomial(5, 1); }), ErrorCode::BadCharacteristic);
    EXPECT_EQ(code_of([] { experiment_alt_monomial(3, 0); }), ErrorCode::BadParams);
}

TEST(Report, FullVerificationQ3) {
    const VerifyReport r = run_verification(make_graph_spec(3), {true, true, 0});
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.c4.size(), 6u);
    EXPECT_EQ(r.triangle_count_symbolic, 75816u);
    EXPECT_EQ(r.triangle_count_oracle, 75816u);
    EXPECT_EQ(r.triangle_count_symbolic, 729u * r.pair_solution_count);
    EXPECT_EQ(code_of([] { run_verification(make_graph_spec(7), {true, false, 0}); }), ErrorCode::TooLarge);
}

}  // namespace
}  // namespace ptri
