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

#include <invariant_forge/binomial.hpp>

using namespace invariant_forge;

TEST_CASE("lucas_binom examples") {
    CHECK(lucas_binom(3, 0, 5) == Scalar::one(FieldSpec::prime(5)));
    CHECK(lucas_binom(5, 2, 2).is_zero()); // C(5,2) = 10
    // C(q, j) vanishes mod p for 0 < j < q, q a power of p
    for (auto [p, q] : std::vector<std::pair<long long, long long>>{{2, 4}, {2, 8}, {3, 9}, {5, 25}})
        for (long long j = 1; j < q; ++j) CHECK(lucas_binom(q, j, p).is_zero());
    CHECK_THROWS_AS(lucas_binom(3, 1, 6), invalid_field_error);
}

TEST_CASE("lucas_binom equals the factorial value mod p") {
    for (long long p : {2, 3, 5, 7}) {
        FieldSpec f = FieldSpec::prime(p);
        for (long long n = 0; n <= 60; ++n)
            for (long long k = 0; k <= n; ++k) {
                mpz_class direct = binomial(n, k) % static_cast<long>(p);
                CHECK(lucas_binom(n, k, p) == Scalar::from_int(f, direct.get_si()));
            }
    }
}

TEST_CASE("binom_convolution examples and closed form") {
    CHECK(binom_convolution(2, 0, 0) == 3);
    CHECK(binom_convolution(4, 1, 2) == 5);
    CHECK(binom_convolution(0, 0, 0) == 1);
    for (long long n = 0; n <= 20; ++n)
        for (long long x = 0; x <= n; ++x)
            for (long long y = 0; y <= n; ++y)
                CHECK(binom_convolution(n, x, y) == binomial(n + 1, x + y + 1));
}
