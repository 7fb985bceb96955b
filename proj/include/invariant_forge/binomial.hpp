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

#ifndef INVARIANT_FORGE_BINOMIAL_HPP
#define INVARIANT_FORGE_BINOMIAL_HPP

#include <gmpxx.h>

#include "field.hpp"

namespace invariant_forge {

/// C(n, k) as an exact integer (0 when k > n or k < 0).
inline mpz_class binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// C(n, k) mod p by multiplying the base-p digit binomials.
inline Scalar lucas_binom(long long n, long long k, long long p) {
    FieldSpec f = FieldSpec::prime(p); // validates p
    if (n < 0 || k < 0) throw precondition_error("lucas_binom: negative argument");
    long long acc = 1;
    while (n > 0 || k > 0) {
        long long nd = n % p, kd = k % p;
        if (kd > nd) return Scalar::zero(f);
        // digit binomial C(nd, kd) with nd, kd < p < 2^31; reduce as we go
        mpz_class digit = binomial(nd, kd) % static_cast<long>(p);
        acc = (acc * digit.get_si()) % p;
        n /= p;
        k /= p;
    }
    return Scalar::from_int(f, acc);
}

/// Sum_{r=0}^{n} C(r, x) C(n-r, y), with the Vandermonde-type closed form
/// C(n+1, x+y+1) asserted in characteristic zero.
inline mpz_class binom_convolution(long long n, long long x, long long y) {
    mpz_class sum = 0;
    for (long long r = 0; r <= n; ++r) sum += binomial(r, x) * binomial(n - r, y);
    if (sum != binomial(n + 1, x + y + 1))
        throw error("binom_convolution: closed form mismatch");
    return sum;
}

} // namespace invariant_forge

#endif
