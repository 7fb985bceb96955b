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

#ifndef INVARIANT_FORGE_POLYNOMIAL_HPP
#define INVARIANT_FORGE_POLYNOMIAL_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "field.hpp"

namespace invariant_forge {

/// Exponent vector of a monomial in n variables.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
    static Monomial constant(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial variable(int nvars, int i, int power = 1) {
        Monomial m = constant(nvars);
        m.exps.at(i) = power;
        return m;
    }

    int nvars() const { return static_cast<int>(exps.size()); }
    long long degree() const { return std::accumulate(exps.begin(), exps.end(), 0LL); }

    Monomial operator*(const Monomial& o) const {
        if (exps.size() != o.exps.size()) throw precondition_error("Monomial: nvars mismatch");
        Monomial r = *this;
        for (size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
        return r;
    }

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::string to_string(const char* var = "x") const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!first) os << "*";
            os << var << (i + 1);
            if (exps[i] > 1) os << "^" << exps[i];
            first = false;
        }
        if (first) os << "1";
        return os.str();
    }
};

/// Graded lexicographic order: compare total degree, then exponents left to right.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long long da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exps > b.exps; // larger leading exponents = later in increasing order
    }
};

/// All degree-d monomials in n variables, in increasing graded-lex order.
inline std::vector<Monomial> monomials_of_degree(int nvars, long long d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.push_back(Monomial(std::vector<int>{}));
        return out;
    }
    std::vector<int> cur(nvars, 0);
    std::function<void(int, long long)> rec = [&](int pos, long long rem) {
        if (pos == nvars - 1) {
            cur[pos] = static_cast<int>(rem);
            out.push_back(Monomial(cur));
            return;
        }
        for (long long e = 0; e <= rem; ++e) {
            cur[pos] = static_cast<int>(e);
            rec(pos + 1, rem - e);
        }
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

/// Sparse multivariate polynomial with exact coefficients. No stored
/// coefficient is zero.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar, GradedLexLess>;

    Polynomial() : field_(FieldSpec::rational()), nvars_(0) {}
    Polynomial(FieldSpec field, int nvars) : field_(std::move(field)), nvars_(nvars) {}

    static Polynomial zero(const FieldSpec& f, int nvars) { return Polynomial(f, nvars); }
    static Polynomial constant(const FieldSpec& f, int nvars, const Scalar& c) {
        Polynomial p(f, nvars);
        p.add_term(Monomial::constant(nvars), c);
        return p;
    }
    static Polynomial one(const FieldSpec& f, int nvars) {
        return constant(f, nvars, Scalar::one(f));
    }
    static Polynomial monomial(const FieldSpec& f, const Monomial& m, const Scalar& c) {
        Polynomial p(f, m.nvars());
        p.add_term(m, c);
        return p;
    }
    static Polynomial variable(const FieldSpec& f, int nvars, int i) {
        return monomial(f, Monomial::variable(nvars, i), Scalar::one(f));
    }

    const FieldSpec& field() const { return field_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Scalar& c) {
        if (m.nvars() != nvars_) throw precondition_error("Polynomial: monomial nvars mismatch");
        if (c.field() != field_) throw field_mismatch_error("Polynomial: coefficient field");
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Scalar coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar::zero(field_) : it->second;
    }

    /// Highest total degree of a term (-1 for the zero polynomial).
    long long degree() const {
        long long d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous(long long d) const {
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    /// Graded piece: the sum of terms of total degree d.
    Polynomial component(long long d) const {
        Polynomial r(field_, nvars_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == d) r.terms_.emplace(m, c);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(field_, nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        check_compatible(o);
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        check_compatible(o);
        Polynomial r(field_, nvars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial operator*(const Scalar& s) const {
        Polynomial r(field_, nvars_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) {
            Scalar cs = c * s;
            if (!cs.is_zero()) r.terms_.emplace(m, cs);
        }
        return r;
    }

    bool operator==(const Polynomial& o) const {
        return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Same polynomial viewed in a ring with more variables (appended at the end).
    Polynomial extended(int new_nvars) const {
        if (new_nvars < nvars_) throw precondition_error("Polynomial: cannot shrink nvars");
        Polynomial r(field_, new_nvars);
        for (const auto& [m, c] : terms_) {
            std::vector<int> e = m.exps;
            e.resize(new_nvars, 0);
            r.terms_.emplace(Monomial(std::move(e)), c);
        }
        return r;
    }

    /// Degree of the polynomial in the listed variables only (-1 if zero);
    /// homogeneity check against the same restriction.
    long long degree_in(const std::vector<int>& vars) const {
        long long d = -1;
        for (const auto& [m, c] : terms_) {
            long long s = 0;
            for (int v : vars) s += m.exps[v];
            d = std::max(d, s);
        }
        return d;
    }
    bool is_homogeneous_in(const std::vector<int>& vars, long long d) const {
        for (const auto& [m, c] : terms_) {
            long long s = 0;
            for (int v : vars) s += m.exps[v];
            if (s != d) return false;
        }
        return true;
    }

    std::string to_string(const char* var = "x") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            if (c.is_one() && m.degree() > 0)
                os << m.to_string(var);
            else if (m.degree() == 0)
                os << c.to_string();
            else
                os << c.to_string() << "*" << m.to_string(var);
            first = false;
        }
        return os.str();
    }

private:
    void check_compatible(const Polynomial& o) const {
        if (field_ != o.field_) throw field_mismatch_error("Polynomial: mixed fields");
        if (nvars_ != o.nvars_) throw precondition_error("Polynomial: nvars mismatch");
    }

    FieldSpec field_;
    int nvars_;
    TermMap terms_;
};

/// Element of S[t]/(t^q): coefficient polynomials indexed by the power of t.
class TruncatedPoly {
public:
    TruncatedPoly(long long q, FieldSpec field, int nvars)
        : q_(q), coeffs_(static_cast<size_t>(q), Polynomial(field, nvars)) {
        if (q <= 0) throw precondition_error("TruncatedPoly: q must be positive");
    }

    static TruncatedPoly embed(long long q, const Polynomial& f) {
        TruncatedPoly r(q, f.field(), f.nvars());
        r.coeffs_[0] = f;
        return r;
    }

    long long q() const { return q_; }
    const Polynomial& coeff(long long m) const { return coeffs_.at(static_cast<size_t>(m)); }
    Polynomial& coeff(long long m) { return coeffs_.at(static_cast<size_t>(m)); }

    /// Specialization t := 0.
    const Polynomial& at_zero() const { return coeffs_[0]; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    TruncatedPoly operator+(const TruncatedPoly& o) const {
        check_compatible(o);
        TruncatedPoly r = *this;
        for (size_t m = 0; m < coeffs_.size(); ++m) r.coeffs_[m] = r.coeffs_[m] + o.coeffs_[m];
        return r;
    }

    TruncatedPoly operator-(const TruncatedPoly& o) const {
        check_compatible(o);
        TruncatedPoly r = *this;
        for (size_t m = 0; m < coeffs_.size(); ++m) r.coeffs_[m] = r.coeffs_[m] - o.coeffs_[m];
        return r;
    }

    /// Product, discarding every t^m with m >= q.
    TruncatedPoly operator*(const TruncatedPoly& o) const {
        check_compatible(o);
        TruncatedPoly r(q_, coeffs_[0].field(), coeffs_[0].nvars());
        for (size_t a = 0; a < coeffs_.size(); ++a) {
            if (coeffs_[a].is_zero()) continue;
            for (size_t b = 0; a + b < coeffs_.size(); ++b) {
                if (o.coeffs_[b].is_zero()) continue;
                r.coeffs_[a + b] = r.coeffs_[a + b] + coeffs_[a] * o.coeffs_[b];
            }
        }
        return r;
    }

    TruncatedPoly pow(long long e) const {
        TruncatedPoly acc = embed(q_, Polynomial::one(coeffs_[0].field(), coeffs_[0].nvars()));
        TruncatedPoly base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const TruncatedPoly& o) const { return q_ == o.q_ && coeffs_ == o.coeffs_; }
    bool operator!=(const TruncatedPoly& o) const { return !(*this == o); }

private:
    void check_compatible(const TruncatedPoly& o) const {
        if (q_ != o.q_) throw precondition_error("TruncatedPoly: truncation order mismatch");
    }

    long long q_;
    std::vector<Polynomial> coeffs_;
};

} // namespace invariant_forge

#endif
