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

#include <fstream>

#include <invariant_forge/action_io.hpp>

using namespace invariant_forge;
using io::json;

namespace {

json load(const std::string& name) {
    std::ifstream in(std::string(INVARIANT_FORGE_DATA_DIR) + "/actions/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

} // namespace

TEST_CASE("every bundled action file parses") {
    const char* names[] = {"mu2.json",    "mu3.json",        "mu5.json",
                           "mu3_12.json", "s6_z2.json",      "s6_z2_gf2.json",
                           "s6_z2_gf3.json", "alpha_q2_l3.json",
                           "alpha_q2_l1_explicit.json", "product_mu2_swap.json"};
    for (const char* name : names) {
        INFO(name);
        CHECK_NOTHROW(io::parse_action(load(name)));
    }
}

TEST_CASE("parse, serialize, parse is a fixed point") {
    const char* names[] = {"mu3_12.json", "s6_z2.json", "alpha_q2_l3.json",
                           "alpha_q2_l1_explicit.json", "product_mu2_swap.json"};
    for (const char* name : names) {
        INFO(name);
        ActionDescriptor a = io::parse_action(load(name));
        json round = io::serialize_action(a);
        ActionDescriptor b = io::parse_action(round);
        CHECK(io::serialize_action(b) == round);
        CHECK(action_nvars(a) == action_nvars(b));
        CHECK(action_field(a) == action_field(b));
    }
}

TEST_CASE("explicit matrix file matches the standard single-block coaction") {
    ActionDescriptor parsed = io::parse_action(load("alpha_q2_l1_explicit.json"));
    const auto& a = std::get<AlphaCoaction>(parsed);
    AlphaCoaction expect = standard_alpha_rep(2, 1);
    CHECK(a.p == expect.p);
    CHECK(a.q == expect.q);
    CHECK(a.nvars == expect.nvars);
    CHECK(a.matrix == expect.matrix);
}

TEST_CASE("cycle parsing") {
    Permutation p = io::parse_cycles("(1,2)(3,4)(5,6)", 6, "/g");
    CHECK(p.image == std::vector<int>{1, 0, 3, 2, 5, 4});
    CHECK(io::parse_cycles("()", 3, "/g").is_identity());
    CHECK(io::parse_cycles("", 3, "/g").is_identity());
    CHECK(io::parse_cycles("(1,2,3)", 3, "/g").image == std::vector<int>{1, 2, 0});
    CHECK_THROWS_AS(io::parse_cycles("(1,7)", 6, "/g"), action_file_error);
    CHECK_THROWS_AS(io::parse_cycles("(1,2)(2,3)", 3, "/g"), action_file_error);
    CHECK_THROWS_AS(io::parse_cycles("(1,2", 3, "/g"), action_file_error);
}

TEST_CASE("polynomial string parsing") {
    FieldSpec f = FieldSpec::rational();
    Polynomial p = io::parse_polynomial(f, 3, "2*x1*x2^3 + x3 - 1/2", "/p");
    CHECK(p.coefficient(Monomial::variable(3, 0) * Monomial::variable(3, 1, 3)) ==
          Scalar::from_int(f, 2));
    CHECK(p.coefficient(Monomial::variable(3, 2)) == Scalar::one(f));
    CHECK(p.coefficient(Monomial::constant(3)) ==
          Scalar::from_rational(f, mpq_class(-1, 2)));
    CHECK_THROWS_AS(io::parse_polynomial(f, 2, "x3", "/p"), action_file_error);
    CHECK_THROWS_AS(io::parse_polynomial(f, 2, "", "/p"), action_file_error);
    CHECK_THROWS_AS(io::parse_polynomial(f, 2, "x1 + *", "/p"), action_file_error);
}

TEST_CASE("validation errors carry JSON pointers") {
    auto expect_pointer = [](json doc, const std::string& prefix) {
        try {
            io::parse_action(doc);
            FAIL("expected action_file_error");
        } catch (const action_file_error& e) {
            INFO(e.what());
            CHECK(e.pointer.rfind(prefix, 0) == 0);
        }
    };

    expect_pointer(json{{"field", {{"char", 0}}}}, "/kind");
    expect_pointer(json{{"kind", "diagonalizable"}}, "/field");
    expect_pointer(json{{"kind", "mystery"}, {"field", {{"char", 0}}}}, "/kind");
    expect_pointer(json{{"kind", "diagonalizable"}, {"field", {{"char", 4}}}}, "/field/char");
    expect_pointer(json{{"kind", "diagonalizable"},
                        {"field", {{"char", 0}}},
                        {"moduli", {0}},
                        {"weights", json::array()}},
                   "/moduli/0");
    expect_pointer(json{{"kind", "diagonalizable"},
                        {"field", {{"char", 0}}},
                        {"moduli", {2}},
                        {"weights", {{1, 2}}}},
                   "/weights/0");
    expect_pointer(json{{"kind", "permutation"},
                        {"field", {{"char", 0}}},
                        {"nvars", 3},
                        {"generators", {"(1,5)"}}},
                   "/generators/0");
    expect_pointer(json{{"kind", "alpha"}, {"field", {{"char", 0}}}, {"q", 2}, {"l", 1}},
                   "/field/char");
    expect_pointer(json{{"kind", "alpha"}, {"field", {{"char", 2}}}, {"q", 3}, {"l", 1}}, "/q");
    expect_pointer(json{{"kind", "alpha"}, {"field", {{"char", 2}}}, {"q", 2}}, "/matrix");

    // non-commuting product
    json bad_product = {{"kind", "product"},
                        {"field", {{"char", 0}}},
                        {"diagonalizable", {{"moduli", {3}}, {"weights", {{1}, {2}}}}},
                        {"permutation", {{"nvars", 2}, {"generators", {"(1,2)"}}}}};
    CHECK_THROWS_AS(io::parse_action(bad_product), action_file_error);
}

TEST_CASE("cyclotomic field round trip") {
    json doc = {{"kind", "permutation"},
                {"field", {{"char", 0}, {"cyclotomic", 12}}},
                {"nvars", 2},
                {"generators", {"(1,2)"}}};
    ActionDescriptor a = io::parse_action(doc);
    CHECK(action_field(a) == FieldSpec::cyclotomic(12));
    CHECK(io::serialize_action(a)["field"]["cyclotomic"] == 12);
    json bad = doc;
    bad["field"]["char"] = 5;
    CHECK_THROWS_AS(io::parse_action(bad), action_file_error);
}
