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

#ifndef INVARIANT_FORGE_FIELD_HPP
#define INVARIANT_FORGE_FIELD_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace invariant_forge {

/// Deterministic primality test, valid for p < 2^31.
inline bool is_prime(long long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

/// Coefficient field of every scalar: Q, GF(p), or the cyclotomic field Q(zeta_N)
/// represented as residues modulo the N-th cyclotomic polynomial.
struct FieldSpec {
    enum class Kind { rational, prime, cyclotomic };

    Kind kind = Kind::rational;
    long long p = 0; // prime, when kind == prime
    long long n = 0; // cyclotomic order N, when kind == cyclotomic

    static FieldSpec rational() { return FieldSpec{}; }

    static FieldSpec prime(long long p) {
        if (!is_prime(p))
            throw invalid_field_error("FieldSpec: " + std::to_string(p) + " is not prime");
        return FieldSpec{Kind::prime, p, 0};
    }

    static FieldSpec cyclotomic(long long n) {
        if (n <= 0)
            throw invalid_field_error("FieldSpec: cyclotomic order must be positive");
        return FieldSpec{Kind::cyclotomic, 0, n};
    }

    long long characteristic() const { return kind == Kind::prime ? p : 0; }

    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && p == o.p && n == o.n;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string describe() const {
        switch (kind) {
        case Kind::rational: return "Q";
        case Kind::prime: return "GF(" + std::to_string(p) + ")";
        case Kind::cyclotomic: return "Q(zeta_" + std::to_string(n) + ")";
        }
        return "?";
    }
};

namespace detail {

/// Coefficients of the N-th cyclotomic polynomial (integer, lowest degree first,
/// monic). Computed by exact division of x^N - 1 by Phi_d over all proper d | N.
inline const std::vector<mpz_class>& cyclotomic_polynomial_locked(
    long long n, std::map<long long, std::vector<mpz_class>>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // num = x^n - 1
    std::vector<mpz_class> num(static_cast<size_t>(n) + 1, 0);
    num[0] = -1;
    num.back() = 1;
    for (long long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const std::vector<mpz_class>& phi_d = cyclotomic_polynomial_locked(d, cache);
        // exact long division num /= phi_d (phi_d is monic)
        std::vector<mpz_class> quot(num.size() - phi_d.size() + 1, 0);
        std::vector<mpz_class> rem = num;
        for (size_t i = quot.size(); i-- > 0;) {
            quot[i] = rem[i + phi_d.size() - 1];
            if (quot[i] == 0) continue;
            for (size_t j = 0; j < phi_d.size(); ++j)
                rem[i + j] -= quot[i] * phi_d[j];
        }
        num = std::move(quot);
    }
    return cache.emplace(n, std::move(num)).first->second;
}

inline const std::vector<mpz_class>& cyclotomic_polynomial(long long n) {
    static std::map<long long, std::vector<mpz_class>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    return cyclotomic_polynomial_locked(n, cache);
}

inline long long mod_inverse(long long a, long long p) {
    long long t = 0, new_t = 1, r = p, new_r = a % p;
    if (new_r < 0) new_r += p;
    while (new_r != 0) {
        long long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw error("mod_inverse: not invertible");
    return ((t % p) + p) % p;
}

} // namespace detail

/// Exact field element. Canonical representative:
///   rational   -> reduced fraction
///   prime      -> residue in [0, p)
///   cyclotomic -> coefficient vector of length deg Phi_N (reduced fractions)
/// Equality is representational equality.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rational()), v_(mpq_class(0)) {}

    static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
    static Scalar one(const FieldSpec& f) { return from_int(f, 1); }

    static Scalar from_int(const FieldSpec& f, long long value) {
        return from_rational(f, mpq_class(static_cast<long>(value)));
    }

    static Scalar from_rational(const FieldSpec& f, mpq_class value) {
        value.canonicalize();
        Scalar s;
        s.field_ = f;
        switch (f.kind) {
        case FieldSpec::Kind::rational:
            s.v_ = std::move(value);
            break;
        case FieldSpec::Kind::prime: {
            // value = a/b with gcd(b, p) required to be 1
            mpz_class num = value.get_num() % static_cast<long>(f.p);
            mpz_class den = value.get_den() % static_cast<long>(f.p);
            long long a = ((num.get_si() % f.p) + f.p) % f.p;
            long long b = ((den.get_si() % f.p) + f.p) % f.p;
            if (b == 0) throw error("Scalar: denominator vanishes mod p");
            s.v_ = (a * detail::mod_inverse(b, f.p)) % f.p;
            break;
        }
        case FieldSpec::Kind::cyclotomic: {
            std::vector<mpq_class> c(cyclotomic_degree(f.n), mpq_class(0));
            c[0] = std::move(value);
            s.v_ = std::move(c);
            break;
        }
        }
        return s;
    }

    /// zeta_N^k as an element of Q(zeta_N).
    static Scalar zeta_power(long long n, long long k) {
        FieldSpec f = FieldSpec::cyclotomic(n);
        k %= n;
        if (k < 0) k += n;
        std::vector<mpq_class> raw(static_cast<size_t>(k) + 1, mpq_class(0));
        raw.back() = 1;
        Scalar s;
        s.field_ = f;
        s.v_ = reduce_cyclotomic(raw, n);
        return s;
    }

    /// Cyclotomic element from an arbitrary coefficient vector in x (reduced mod Phi_N).
    static Scalar from_cyclotomic_coeffs(long long n, std::vector<mpq_class> raw) {
        Scalar s;
        s.field_ = FieldSpec::cyclotomic(n);
        s.v_ = reduce_cyclotomic(std::move(raw), n);
        return s;
    }

    const FieldSpec& field() const { return field_; }

    bool is_zero() const {
        switch (field_.kind) {
        case FieldSpec::Kind::rational: return std::get<mpq_class>(v_) == 0;
        case FieldSpec::Kind::prime: return std::get<long long>(v_) == 0;
        case FieldSpec::Kind::cyclotomic:
            for (const auto& c : std::get<std::vector<mpq_class>>(v_))
                if (c != 0) return false;
            return true;
        }
        return false;
    }

    bool is_one() const { return *this == one(field_); }

    bool operator==(const Scalar& o) const { return field_ == o.field_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const { return v_ < o.v_; } // container ordering only

    Scalar operator-() const {
        Scalar r = *this;
        switch (field_.kind) {
        case FieldSpec::Kind::rational:
            std::get<mpq_class>(r.v_) = -std::get<mpq_class>(r.v_);
            break;
        case FieldSpec::Kind::prime: {
            long long& x = std::get<long long>(r.v_);
            if (x != 0) x = field_.p - x;
            break;
        }
        case FieldSpec::Kind::cyclotomic:
            for (auto& c : std::get<std::vector<mpq_class>>(r.v_)) c = -c;
            break;
        }
        return r;
    }

    Scalar operator+(const Scalar& o) const {
        check_same_field(o);
        Scalar r = *this;
        switch (field_.kind) {
        case FieldSpec::Kind::rational:
            std::get<mpq_class>(r.v_) += std::get<mpq_class>(o.v_);
            break;
        case FieldSpec::Kind::prime:
            std::get<long long>(r.v_) =
                (std::get<long long>(r.v_) + std::get<long long>(o.v_)) % field_.p;
            break;
        case FieldSpec::Kind::cyclotomic: {
            auto& a = std::get<std::vector<mpq_class>>(r.v_);
            const auto& b = std::get<std::vector<mpq_class>>(o.v_);
            for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
            break;
        }
        }
        return r;
    }

    Scalar operator-(const Scalar& o) const { return *this + (-o); }

    Scalar operator*(const Scalar& o) const {
        check_same_field(o);
        Scalar r;
        r.field_ = field_;
        switch (field_.kind) {
        case FieldSpec::Kind::rational:
            r.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
            break;
        case FieldSpec::Kind::prime: {
            // p < 2^31 so the product fits in 64 bits
            r.v_ = (std::get<long long>(v_) * std::get<long long>(o.v_)) % field_.p;
            break;
        }
        case FieldSpec::Kind::cyclotomic: {
            const auto& a = std::get<std::vector<mpq_class>>(v_);
            const auto& b = std::get<std::vector<mpq_class>>(o.v_);
            std::vector<mpq_class> prod(a.size() + b.size(), mpq_class(0));
            for (size_t i = 0; i < a.size(); ++i) {
                if (a[i] == 0) continue;
                for (size_t j = 0; j < b.size(); ++j)
                    if (b[j] != 0) prod[i + j] += a[i] * b[j];
            }
            r.v_ = reduce_cyclotomic(std::move(prod), field_.n);
            break;
        }
        }
        return r;
    }

    Scalar inverse() const {
        if (is_zero()) throw error("Scalar: inverse of zero");
        Scalar r;
        r.field_ = field_;
        switch (field_.kind) {
        case FieldSpec::Kind::rational:
            r.v_ = mpq_class(1 / std::get<mpq_class>(v_));
            break;
        case FieldSpec::Kind::prime:
            r.v_ = detail::mod_inverse(std::get<long long>(v_), field_.p);
            break;
        case FieldSpec::Kind::cyclotomic:
            r.v_ = cyclotomic_inverse(std::get<std::vector<mpq_class>>(v_), field_.n);
            break;
        }
        return r;
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar acc = one(field_);
        Scalar base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    /// Rational value; requires kind == rational or a constant cyclotomic element.
    mpq_class rational_value() const {
        switch (field_.kind) {
        case FieldSpec::Kind::rational:
            return std::get<mpq_class>(v_);
        case FieldSpec::Kind::cyclotomic: {
            const auto& c = std::get<std::vector<mpq_class>>(v_);
            for (size_t i = 1; i < c.size(); ++i)
                if (c[i] != 0) throw error("Scalar: not a rational cyclotomic element");
            return c[0];
        }
        case FieldSpec::Kind::prime:
            return mpq_class(static_cast<long>(std::get<long long>(v_)));
        }
        throw error("Scalar: unreachable");
    }

    /// True when a cyclotomic element lies in Q (all higher coordinates vanish).
    bool is_rational_constant() const {
        if (field_.kind != FieldSpec::Kind::cyclotomic) return true;
        const auto& c = std::get<std::vector<mpq_class>>(v_);
        for (size_t i = 1; i < c.size(); ++i)
            if (c[i] != 0) return false;
        return true;
    }

    long long residue() const { return std::get<long long>(v_); }

    std::string to_string() const {
        switch (field_.kind) {
        case FieldSpec::Kind::rational:
            return std::get<mpq_class>(v_).get_str();
        case FieldSpec::Kind::prime:
            return std::to_string(std::get<long long>(v_));
        case FieldSpec::Kind::cyclotomic: {
            const auto& c = std::get<std::vector<mpq_class>>(v_);
            std::ostringstream os;
            bool first = true;
            for (size_t i = 0; i < c.size(); ++i) {
                if (c[i] == 0) continue;
                if (!first) os << " + ";
                os << c[i].get_str();
                if (i > 0) os << "*z^" << i;
                first = false;
            }
            if (first) os << "0";
            return os.str();
        }
        }
        return "?";
    }

    static size_t cyclotomic_degree(long long n) {
        return detail::cyclotomic_polynomial(n).size() - 1;
    }

private:
    void check_same_field(const Scalar& o) const {
        if (field_ != o.field_)
            throw field_mismatch_error("Scalar: mixed fields " + field_.describe() + " and " +
                                       o.field_.describe());
    }

    static std::vector<mpq_class> reduce_cyclotomic(std::vector<mpq_class> raw, long long n) {
        const auto& phi = detail::cyclotomic_polynomial(n);
        const size_t deg = phi.size() - 1;
        for (size_t i = raw.size(); i-- > deg;) {
            if (raw[i] == 0) continue;
            mpq_class c = raw[i];
            raw[i] = 0;
            for (size_t j = 0; j < deg; ++j)
                raw[i - deg + j] -= c * mpq_class(phi[j]);
        }
        raw.resize(deg, mpq_class(0));
        for (auto& c : raw) c.canonicalize();
        return raw;
    }

    /// Extended Euclid in Q[x] against Phi_N.
    static std::vector<mpq_class> cyclotomic_inverse(const std::vector<mpq_class>& a,
                                                     long long n) {
        const auto& phi_z = detail::cyclotomic_polynomial(n);
        std::vector<mpq_class> r0(phi_z.begin(), phi_z.end());
        std::vector<mpq_class> r1 = a;
        trim(r1);
        std::vector<mpq_class> s0{mpq_class(0)}, s1{mpq_class(1)};
        while (!r1.empty()) {
            auto [q, rem] = poly_divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(rem);
            auto qs1 = poly_mul(q, s1);
            std::vector<mpq_class> s2 = s0;
            s2.resize(std::max(s2.size(), qs1.size()), mpq_class(0));
            for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
            trim(s2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 = gcd, a unit since Phi_N is irreducible over Q
        if (r0.size() != 1) throw error("Scalar: cyclotomic gcd not a unit");
        for (auto& c : s0) c /= r0[0];
        return reduce_cyclotomic(std::move(s0), n);
    }

    static void trim(std::vector<mpq_class>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }

    static std::vector<mpq_class> poly_mul(const std::vector<mpq_class>& a,
                                           const std::vector<mpq_class>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<mpq_class> r(a.size() + b.size() - 1, mpq_class(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    }

    static std::pair<std::vector<mpq_class>, std::vector<mpq_class>>
    poly_divmod(std::vector<mpq_class> num, const std::vector<mpq_class>& den) {
        trim(num);
        std::vector<mpq_class> quot;
        if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, mpq_class(0));
        while (num.size() >= den.size()) {
            mpq_class c = num.back() / den.back();
            size_t shift = num.size() - den.size();
            quot[shift] += c;
            for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
            trim(num); // leading term cancels exactly
        }
        return {std::move(quot), std::move(num)};
    }

    FieldSpec field_;
    std::variant<mpq_class, long long, std::vector<mpq_class>> v_;
};

} // namespace invariant_forge

#endif
