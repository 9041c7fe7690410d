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

#include <ptri/planar.hpp>

namespace ptri {
namespace {

Poly monomial(const FieldPtr& f, std::uint64_t d) { return Poly::monomial(f, f->one(), d); }

TEST(IsPlanar, SquareOverF9) {
    const FieldPtr f = make_field(3, 2);
    const PlanarReport r = is_planar(monomial(f, 2));
    EXPECT_TRUE(r.is_planar);
    EXPECT_FALSE(r.witness);
}

TEST(IsPlanar, XqPlus1OverCubicExtension) {
    EXPECT_TRUE(is_planar(monomial(make_tower(3), 4)).is_planar);
    EXPECT_TRUE(is_planar(monomial(make_tower(5), 6)).is_planar);
}

TEST(IsPlanar, XqPlus1OverQuadraticExtensionFailsWithWitness) {
    const FieldPtr f = make_field(3, 2);
    const Poly p = monomial(f, 4);
    const PlanarReport r = is_planar(p);
    ASSERT_FALSE(r.is_planar);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(witness_holds(p, *r.witness));
    // smallest failing shift is the first nonzero element
    EXPECT_EQ(f->encode(r.witness->shift), 1u);
    EXPECT_LT(f->encode(r.witness->x1), f->encode(r.witness->x2));
}

TEST(IsPlanar, NonzeroScalarMultiplesStayPlanar) {
    const FieldPtr f = make_tower(3);
    for (std::uint64_t c = 1; c < f->order(); ++c)
        EXPECT_TRUE(is_planar(Poly::monomial(f, f->decode(c), 4)).is_planar) << c;
    EXPECT_FALSE(is_planar(Poly(f)).is_planar);
}

TEST(IsPlanar, WorkerCountDoesNotChangeWitness) {
    const FieldPtr f = make_field(5, 2);
    const Poly p = monomial(f, 6);  // X^{5+1} over F_25: e/gcd = 2, not planar
    const PlanarReport one = is_planar(p, 1);
    const PlanarReport many = is_planar(p, 4);
    ASSERT_FALSE(one.is_planar);
    ASSERT_FALSE(many.is_planar);
    EXPECT_EQ(one.witness->shift, many.witness->shift);
    EXPECT_EQ(one.witness->x1, many.witness->x1);
    EXPECT_EQ(one.witness->x2, many.witness->x2);
}

TEST(Predict, QAlphaPlusOne) {
    EXPECT_TRUE(predict_monomial_qa1(3, 1, 3));
    EXPECT_FALSE(predict_monomial_qa1(3, 1, 2));
    EXPECT_TRUE(predict_monomial_qa1(5, 2, 2));
    EXPECT_THROW(predict_monomial_qa1(4, 1, 3), Error);
    EXPECT_THROW(predict_monomial_qa1(3, 0, 3), Error);
}

TEST(Predict, CharThree) {
    EXPECT_TRUE(predict_monomial_char3(1, 1));
    EXPECT_FALSE(predict_monomial_char3(3, 3));
    EXPECT_TRUE(predict_monomial_char3(5, 3));
    EXPECT_THROW(predict_monomial_char3(0, 1), Error);
}

TEST(Predict, QAlphaPlusOneAgreesWithDefinition) {
    for (std::uint64_t q : {3u, 5u}) {
        const auto [p, m] = *prime_power(q);
        for (unsigned e = 1; e <= 3; ++e) {
            if (ipow(q, e) > 343) continue;
            const FieldPtr f = make_field(p, m * e);
            for (unsigned alpha = 1; alpha <= 3; ++alpha) {
                const Poly mono = monomial(f, ipow(q, alpha) + 1);
                const PlanarReport r = is_planar(mono);
                EXPECT_EQ(r.is_planar, predict_monomial_qa1(q, alpha, e)) << "q=" << q << " alpha=" << alpha << " e=" << e;
                if (!r.is_planar) EXPECT_TRUE(witness_holds(mono, *r.witness));
            }
        }
    }
}

TEST(Predict, CharThreeAgreesWithDefinition) {
    for (unsigned e = 1; e <= 5; ++e) {
        const FieldPtr f = make_field(3, e);
        for (unsigned alpha : {1u, 3u, 5u}) {
            const Poly mono = monomial(f, (ipow(3, alpha) + 1) / 2);
            EXPECT_EQ(is_planar(mono).is_planar, predict_monomial_char3(alpha, e)) << "alpha=" << alpha << " e=" << e;
        }
    }
}

}  // namespace
}  // namespace ptri
