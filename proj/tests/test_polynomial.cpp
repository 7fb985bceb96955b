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

#include <random>

#include <invariant_forge/polynomial.hpp>

using namespace invariant_forge;

namespace {

Polynomial random_poly(std::mt19937& rng, const FieldSpec& f, int nvars, int max_deg) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> nterms(1, 6);
    std::uniform_int_distribution<int> deg(0, max_deg);
    Polynomial p(f, nvars);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        auto monos = monomials_of_degree(nvars, deg(rng));
        std::uniform_int_distribution<size_t> pick(0, monos.size() - 1);
        p.add_term(monos[pick(rng)], Scalar::from_int(f, coeff(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("no stored coefficient is zero") {
    FieldSpec f = FieldSpec::prime(3);
    Polynomial p(f, 2);
    Monomial m = Monomial::variable(2, 0);
    p.add_term(m, Scalar::from_int(f, 1));
    p.add_term(m, Scalar::from_int(f, 2));
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
}

TEST_CASE("graded pieces recompose the polynomial") {
    std::mt19937 rng(5);
    for (const FieldSpec& f : {FieldSpec::rational(), FieldSpec::prime(5)}) {
        for (int trial = 0; trial < 20; ++trial) {
            Polynomial p = random_poly(rng, f, 3, 4);
            Polynomial sum(f, 3);
            for (long long d = 0; d <= 4; ++d) sum = sum + p.component(d);
            CHECK(sum == p);
        }
    }
}

TEST_CASE("product respects the grading") {
    std::mt19937 rng(9);
    FieldSpec f = FieldSpec::rational();
    for (int trial = 0; trial < 15; ++trial) {
        Polynomial a = random_poly(rng, f, 4, 4);
        Polynomial b = random_poly(rng, f, 4, 4);
        CHECK(a * b == b * a);
        Polynomial ab = a * b;
        for (long long d = 0; d <= 8; ++d) {
            Polynomial expect(f, 4);
            for (long long k = 0; k <= d; ++k) expect = expect + a.component(k) * b.component(d - k);
            CHECK(ab.component(d) == expect);
        }
    }
}

TEST_CASE("ring laws on random samples") {
    std::mt19937 rng(13);
    FieldSpec f = FieldSpec::prime(7);
    for (int trial = 0; trial < 15; ++trial) {
        Polynomial a = random_poly(rng, f, 2, 3);
        Polynomial b = random_poly(rng, f, 2, 3);
        Polynomial c = random_poly(rng, f, 2, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("truncated multiplication discards high powers of t") {
    FieldSpec f = FieldSpec::prime(2);
    Polynomial x = Polynomial::variable(f, 1, 0);
    TruncatedPoly a(3, f, 1);
    a.coeff(0) = x;
    a.coeff(2) = x;
    TruncatedPoly b(3, f, 1);
    b.coeff(1) = x;
    TruncatedPoly ab = a * b;
    CHECK(ab.coeff(0).is_zero());
    CHECK(ab.coeff(1) == x * x);
    CHECK(ab.coeff(2).is_zero()); // t^3 term dropped
    CHECK(ab.at_zero().is_zero());
}

TEST_CASE("monomial enumeration is graded-lex ordered") {
    auto monos = monomials_of_degree(2, 2);
    REQUIRE(monos.size() == 3);
    CHECK(monos[0].exps == std::vector<int>{2, 0});
    CHECK(monos[1].exps == std::vector<int>{1, 1});
    CHECK(monos[2].exps == std::vector<int>{0, 2});
}
