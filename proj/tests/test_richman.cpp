/*
   Copyright 2026 The invariant-forge authors

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

#include <catch2/catch_amalgamated.hpp>

#include <invariant_forge/richman.hpp>

using namespace invariant_forge;

namespace {

std::vector<std::pair<long long, long long>> small_cases() {
    // (q, l) with l <= 3, trimmed to l <= 2 for q = 4
    return {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}};
}

} // namespace

TEST_CASE("f_poly small examples") {
    FieldSpec gf2 = FieldSpec::prime(2);
    Polynomial x1 = Polynomial::variable(gf2, 2, 0);
    Polynomial y1 = Polynomial::variable(gf2, 2, 1);
    CHECK(f_poly(1, 0, 2) == y1);
    CHECK(f_poly(1, 1, 2) == x1);
    CHECK(g_poly(1, 2) == x1);

    // l = 2, q = 2: f_{2,1} = x1 y2 + y1 x2
    Polynomial x2 = Polynomial::variable(gf2, 4, 0);
    Polynomial y2 = Polynomial::variable(gf2, 4, 1);
    Polynomial x2b = Polynomial::variable(gf2, 4, 2);
    Polynomial y2b = Polynomial::variable(gf2, 4, 3);
    CHECK(f_poly(2, 0, 2) == y2 * y2b);
    CHECK(f_poly(2, 1, 2) == x2 * y2b + y2 * x2b);
    CHECK(g_poly(2, 2) == x2 * y2b + y2 * x2b);

    FieldSpec gf3 = FieldSpec::prime(3);
    Polynomial x = Polynomial::variable(gf3, 2, 0);
    Polynomial y = Polynomial::variable(gf3, 2, 1);
    CHECK(f_poly(1, 0, 3) == y * y);
    CHECK(f_poly(1, 1, 3) == x * y);
    CHECK(g_poly(1, 3) == x * x);

    CHECK_THROWS_AS(f_poly(1, 2, 2), precondition_error);
    CHECK_THROWS_AS(f_poly(0, 0, 2), precondition_error);
}

TEST_CASE("f_poly is homogeneous of degree q-1 in every pair") {
    for (auto [q, l] : small_cases())
        for (long long i = 0; i <= q - 1; ++i) {
            Polynomial f = f_poly(l, i, q);
            CHECK(f.is_homogeneous(l * (q - 1)));
            std::vector<int> xs;
            for (long long j = 0; j < l; ++j) {
                std::vector<int> pair = {static_cast<int>(2 * j), static_cast<int>(2 * j + 1)};
                CHECK(f.is_homogeneous_in(pair, q - 1));
                xs.push_back(static_cast<int>(2 * j));
            }
            // x-degree across the monomials is exactly i
            CHECK(f.is_homogeneous_in(xs, i));
        }
}

TEST_CASE("f_poly satisfies the one-variable-block recursion") {
    // f_{l+1,i} = sum_s x_{l+1}^s y_{l+1}^{q-1-s} f_{l,i-s}
    for (auto [q, l] : std::vector<std::pair<long long, long long>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}}) {
        FieldSpec f = f_poly(1, 0, q).field();
        int n = static_cast<int>(2 * (l + 1));
        for (long long i = 0; i <= q - 1; ++i) {
            Polynomial expect(f, n);
            for (long long s = 0; s <= std::min(i, q - 1); ++s) {
                if (i - s > q - 1) continue;
                Polynomial block = Polynomial::one(f, n);
                for (long long c = 0; c < s; ++c)
                    block = block * Polynomial::variable(f, n, n - 2);
                for (long long c = 0; c < q - 1 - s; ++c)
                    block = block * Polynomial::variable(f, n, n - 1);
                expect = expect + block * f_poly(l, i - s, q).extended(n);
            }
            CHECK(f_poly(l + 1, i, q) == expect);
        }
    }
}

TEST_CASE("coaction moves f_{l,i} up the ladder") {
    for (auto [q, l] : small_cases())
        for (long long i = 0; i <= q - 1; ++i) {
            IdentityCheck chk = verify_identity3(l, i, q);
            INFO("q=" << q << " l=" << l << " i=" << i << " diff=" << chk.diff);
            CHECK(chk.holds);
        }
}

TEST_CASE("g_poly is invariant, lower f_poly are not") {
    for (auto [q, l] : small_cases()) {
        AlphaCoaction a = standard_alpha_rep(q, l);
        CHECK(is_invariant(a, g_poly(l, q)));
        for (long long i = 0; i < q - 1; ++i) CHECK_FALSE(is_invariant(a, f_poly(l, i, q)));
    }
}

TEST_CASE("lower-bound certificates for small (q, l)") {
    for (auto [q, l] : std::vector<std::pair<long long, long long>>{{2, 2}, {2, 3}, {3, 2}}) {
        LowerBoundCertificate cert = richman_certificate(q, l, l * (q - 1));
        CHECK(cert.g_invariant);
        CHECK(cert.indecomposability_witness);
        CHECK(cert.certified());
        CHECK(cert.g_degree == l * (q - 1));
        CHECK(cert.beta_lower_from_engine >= l);
    }
}

TEST_CASE("single-block certificate reduces to the k[x, y^q] picture") {
    // l = 1: only constants have degree <= l - 1, so the witness is the
    // trivial bound beta >= 1; the engine still finds generators in degrees
    // 1 and q, matching the invariant ring k[x, y^q].
    for (long long q : {2, 3, 4}) {
        LowerBoundCertificate cert = richman_certificate(q, 1, q);
        CHECK(cert.g_invariant);
        CHECK(cert.indecomposability_witness);
        CHECK(cert.certified());
        CHECK(cert.beta_lower_from_engine == q);
        BetaCertificate engine = minimal_generators(ActionDescriptor{standard_alpha_rep(q, 1)}, q);
        CHECK(engine.generator_degrees == std::vector<long long>{1, q});
    }
}

TEST_CASE("engine limit below the witness degree is rejected") {
    CHECK_THROWS_AS(richman_certificate(2, 3, 2), precondition_error);
}
