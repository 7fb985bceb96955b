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

#include <invariant_forge/corpus.hpp>
#include <invariant_forge/invariants.hpp>
#include "oracle.hpp"

using namespace invariant_forge;

namespace {

Permutation perm(std::vector<int> image) {
    Permutation p;
    p.image = std::move(image);
    return p;
}

DiagonalizableAction random_diag(std::mt19937& rng, const FieldSpec& f) {
    size_t s = 1 + rng() % 2;
    int n = 2 + static_cast<int>(rng() % 3);
    std::vector<long long> moduli(s);
    for (auto& m : moduli) m = 2 + static_cast<long long>(rng() % 5);
    std::vector<std::vector<long long>> w(static_cast<size_t>(n));
    for (auto& row : w) {
        row.resize(s);
        for (size_t j = 0; j < s; ++j) row[j] = static_cast<long long>(rng() % 7);
    }
    return DiagonalizableAction(moduli, w, f);
}

/// Product with paired weights so the swap permutations commute with the torus.
ProductAction random_product(std::mt19937& rng, const FieldSpec& f) {
    std::vector<long long> moduli{2 + static_cast<long long>(rng() % 3)};
    long long a = static_cast<long long>(rng() % moduli[0]);
    long long b = static_cast<long long>(rng() % moduli[0]);
    DiagonalizableAction diag(moduli, {{a}, {a}, {b}, {b}}, f);
    std::vector<Permutation> gens{perm({1, 0, 2, 3})};
    if (rng() % 2) gens.push_back(perm({0, 1, 3, 2}));
    return ProductAction(diag, PermutationAction(4, gens, f));
}

} // namespace

TEST_CASE("invariant_monomials for weights (1,2) mod 3") {
    DiagonalizableAction a({3}, {{1}, {2}}, FieldSpec::rational());
    auto d2 = invariant_monomials(a, 2);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].exps == std::vector<int>{1, 1});
    auto d3 = invariant_monomials(a, 3);
    REQUIRE(d3.size() == 2);
    CHECK(d3[0].exps == std::vector<int>{3, 0});
    CHECK(d3[1].exps == std::vector<int>{0, 3});
}

TEST_CASE("invariant_basis dimensions match the element-wise oracle") {
    std::mt19937 rng(41);
    for (const FieldSpec& f : {FieldSpec::rational(), FieldSpec::prime(3)}) {
        for (int trial = 0; trial < 8; ++trial) {
            DiagonalizableAction a = random_diag(rng, f);
            ActionDescriptor action = a;
            for (long long d = 0; d <= 5; ++d) {
                auto basis = invariant_basis(action, d);
                CHECK(static_cast<long long>(basis.size()) == oracle::invariant_dimension(a, d));
                for (const auto& g : basis) CHECK(is_invariant(action, g));
            }
        }
    }
}

TEST_CASE("permutation invariant_basis matches the full-group oracle") {
    std::mt19937 rng(43);
    FieldSpec fields[] = {FieldSpec::rational(), FieldSpec::prime(2), FieldSpec::prime(5)};
    std::vector<std::vector<Permutation>> gen_sets = {
        {perm({1, 0, 2})},
        {perm({1, 2, 0})},
        {perm({1, 2, 0}), perm({1, 0, 2})},
        {perm({1, 0, 3, 2}), perm({2, 3, 0, 1})},
    };
    for (const auto& gens : gen_sets)
        for (const FieldSpec& f : fields) {
            PermutationAction a(gens[0].size(), gens, f);
            ActionDescriptor action = a;
            for (long long d = 0; d <= 4; ++d) {
                auto basis = invariant_basis(action, d);
                CHECK(static_cast<long long>(basis.size()) == oracle::invariant_dimension(a, d));
                for (const auto& g : basis) CHECK(is_invariant(action, g));
            }
        }
    (void)rng;
}

TEST_CASE("alpha invariant_basis matches the binomial-expansion oracle") {
    for (auto [q, l] : std::vector<std::pair<long long, long long>>{{2, 1}, {2, 2}, {3, 1}}) {
        AlphaCoaction a = standard_alpha_rep(q, l);
        ActionDescriptor action = a;
        for (long long d = 0; d <= 4; ++d) {
            auto basis = invariant_basis(action, d);
            CHECK(static_cast<long long>(basis.size()) ==
                  oracle::invariant_dimension_alpha(q, l, d));
            for (const auto& g : basis) CHECK(is_invariant(action, g));
        }
    }
}

TEST_CASE("product invariant_basis matches the oracle and the two-step route") {
    std::mt19937 rng(47);
    for (const FieldSpec& f : {FieldSpec::rational(), FieldSpec::prime(5)}) {
        for (int trial = 0; trial < 6; ++trial) {
            ProductAction a = random_product(rng, f);
            ActionDescriptor action = a;
            for (long long d = 0; d <= 5; ++d) {
                auto one_shot = invariant_basis(action, d);
                CHECK(static_cast<long long>(one_shot.size()) ==
                      oracle::invariant_dimension(a, d));
                CHECK(one_shot == two_step_invariants(a, d));
                for (const auto& g : one_shot) CHECK(is_invariant(action, g));
            }
        }
    }
}

TEST_CASE("invariant_basis is in reduced echelon form") {
    ActionDescriptor action = corpus::s6_z2_action(FieldSpec::rational());
    auto basis = invariant_basis(action, 2);
    // leading monomials strictly increase and appear in no other element
    for (size_t i = 0; i < basis.size(); ++i) {
        const Monomial& lead = basis[i].terms().begin()->first;
        CHECK(basis[i].terms().begin()->second == Scalar::one(FieldSpec::rational()));
        for (size_t j = 0; j < basis.size(); ++j)
            if (j != i) CHECK(basis[j].coefficient(lead).is_zero());
    }
}

TEST_CASE("diagonalizable Reynolds drops exactly the non-invariant monomials") {
    DiagonalizableAction a({3}, {{1}, {2}}, FieldSpec::rational());
    FieldSpec f = a.field;
    Polynomial x = Polynomial::variable(f, 2, 0), y = Polynomial::variable(f, 2, 1);
    Polynomial g = x * y + x * x + y * y * y;
    Polynomial r = reynolds(a, g);
    CHECK(r == x * y + y * y * y);
    CHECK(reynolds(a, r) == r);
    CHECK(is_invariant(a, r));
}

TEST_CASE("permutation Reynolds symmetrizes the cubic") {
    FieldSpec f = FieldSpec::rational();
    PermutationAction a = corpus::s6_z2_action(f);
    auto var = [&](int i) { return Polynomial::variable(f, 6, i - 1); };
    Polynomial half = Polynomial::one(f, 6) * Scalar::from_rational(f, mpq_class(1, 2));
    CHECK(reynolds(a, var(1) * var(4) * var(5)) == corpus::s6_z2_cubic_invariant(f) * half);
    CHECK(reynolds(a, var(1) * var(3)) ==
          corpus::s6_z2_low_degree_invariants(f)[6] * half); // f_7 / 2
}

TEST_CASE("Reynolds operator properties") {
    std::mt19937 rng(53);
    FieldSpec f = FieldSpec::rational();
    PermutationAction a(4, {perm({1, 2, 3, 0})}, f);
    auto monos = monomials_of_degree(4, 3);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial g(f, 4);
        g.add_term(monos[rng() % monos.size()], Scalar::from_int(f, 1 + rng() % 5));
        g.add_term(monos[rng() % monos.size()], Scalar::from_int(f, 1 + rng() % 5));
        Polynomial r = reynolds(a, g);
        CHECK(is_invariant(a, r));
        CHECK(reynolds(a, r) == r);
        // Reynolds is S^G-linear
        Polynomial inv = Polynomial::variable(f, 4, 0) + Polynomial::variable(f, 4, 1) +
                         Polynomial::variable(f, 4, 2) + Polynomial::variable(f, 4, 3);
        CHECK(reynolds(a, inv * g) == inv * r);
    }
}

TEST_CASE("permutation Reynolds needs invertible group order") {
    PermutationAction a = corpus::s6_z2_action(FieldSpec::prime(2));
    Polynomial g = Polynomial::variable(FieldSpec::prime(2), 6, 0);
    CHECK_THROWS_AS(reynolds(a, g), not_linearly_reductive_error);
    // order 2 is fine over GF(3)
    PermutationAction b = corpus::s6_z2_action(FieldSpec::prime(3));
    CHECK_NOTHROW(reynolds(b, Polynomial::variable(FieldSpec::prime(3), 6, 0)));
}

TEST_CASE("split_monomial factors stay invariant and short") {
    std::mt19937 rng(59);
    FieldSpec f = FieldSpec::rational();
    int produced = 0;
    while (produced < 40) {
        DiagonalizableAction a = random_diag(rng, f);
        long long order = a.order();
        long long d = order + 1 + static_cast<long long>(rng() % (2 * order));
        auto invs = invariant_monomials(a, d);
        if (invs.empty()) continue;
        const Monomial& m = invs[rng() % invs.size()];
        auto factors = split_monomial(a, m);
        Monomial product = Monomial::constant(a.nvars);
        for (const auto& g : factors) {
            CHECK(g.degree() >= 1);
            CHECK(g.degree() <= order);
            CHECK(is_weight_zero(monomial_weight(a, g)));
            product = product * g;
        }
        CHECK(product == m);
        ++produced;
    }
}

TEST_CASE("split_monomial rejects non-invariant input") {
    DiagonalizableAction a({3}, {{1}, {2}}, FieldSpec::rational());
    Monomial m = Monomial::variable(2, 0);
    CHECK_THROWS_AS(split_monomial(a, m), precondition_error);
}

TEST_CASE("minimal generators of the weight (1,2) mod 3 action") {
    ActionDescriptor a = DiagonalizableAction({3}, {{1}, {2}}, FieldSpec::rational());
    BetaCertificate c = minimal_generators(a, 4);
    CHECK(c.generator_degrees == std::vector<long long>{2, 3, 3}); // xy, x^3, y^3
    CHECK(c.beta_lower == 3);
    CHECK(c.certified_complete);
}

TEST_CASE("alpha invariants for one block are generated in degrees 1 and q") {
    for (long long q : {2, 3, 4}) {
        ActionDescriptor a = standard_alpha_rep(q, 1);
        BetaCertificate c = minimal_generators(a, q + 1);
        CHECK(c.generator_degrees == std::vector<long long>{1, q}); // x and y^q
        CHECK_FALSE(c.certified_complete);
    }
}

TEST_CASE("pair-swap action on six variables is generated in degree 2 over Q") {
    ActionDescriptor a = corpus::s6_z2_action(FieldSpec::rational());
    BetaCertificate c = minimal_generators(a, 2);
    CHECK(c.beta_lower == 2);
    CHECK(c.certified_complete);
    CHECK(c.generator_degrees == std::vector<long long>{1, 1, 1, 2, 2, 2, 2, 2, 2});
}

TEST_CASE("low-degree invariants span the computed bases") {
    FieldSpec f = FieldSpec::rational();
    ActionDescriptor a = corpus::s6_z2_action(f);
    auto named = corpus::s6_z2_low_degree_invariants(f);
    auto b1 = invariant_basis(a, 1);
    auto b2 = invariant_basis(a, 2);
    CHECK(b1.size() == 3);
    CHECK(b2.size() == 12); // 3 fixed products, 3 paired squares, 6 paired cross terms
    for (int i = 0; i < 3; ++i) CHECK(in_span(named[static_cast<size_t>(i)], b1));
    for (int i = 3; i < 9; ++i) CHECK(in_span(named[static_cast<size_t>(i)], b2));
    // f_4, f_5, f_6 together with squares of the linear ones span all of b2
    std::vector<Polynomial> deg2 = {named[3], named[4], named[5], named[6], named[7], named[8],
                                    named[0] * named[0], named[1] * named[1], named[2] * named[2]};
    CHECK(span_dimension(deg2) == 9);
}

TEST_CASE("Noether bound holds on random diagonalizable actions") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        DiagonalizableAction a = random_diag(rng, FieldSpec::rational());
        if (a.order() > 10) continue;
        BetaCertificate c = minimal_generators(ActionDescriptor{a}, a.order());
        CHECK(c.certified_complete);
        CHECK(c.beta_lower <= a.order());
    }
}
