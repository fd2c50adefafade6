#include "doctest.h"
#include "laukit/address.hpp"
#include "laukit/constructions.hpp"
#include "laukit/corpus.hpp"
#include "laukit/error.hpp"
#include "laukit/io.hpp"
#include "test_helpers.hpp"

using namespace laukit;
using testing::sc;

TEST_CASE("algebra files round-trip exactly") {
    std::vector<AlgebraPtr> subjects = {
        catalog_algebra({Family::matrix, 2}),
        catalog_algebra({Family::cyclic_group, 3}),
        lau_product(catalog_algebra({Family::zero, 2}), catalog_algebra({Family::pointwise, 2}),
                    catalog_character({Family::pointwise, 2}, "coord:2")),
    };
    for (const AlgebraPtr& a : subjects) {
        std::string text = write_algebra(*a);
        AlgebraPtr back = read_algebra(text);
        CHECK(*back == *a);  // name, labels, and tensor all survive
        CHECK(write_algebra(*back) == text);
    }
}

TEST_CASE("scalars with fractions and imaginary parts survive the table format") {
    std::vector<Scalar> t(8);
    t[(0 * 2 + 0) * 2 + 0] = sc(1, 2, -3, 4);   // e1 e1 = (1/2 - 3/4 i) e1
    t[(0 * 2 + 0) * 2 + 1] = sc(0, 1, 1, 1);    // + i e2
    AlgebraPtr a = Algebra::make_unchecked("frac", {"e1", "e2"}, std::move(t));
    AlgebraPtr back = read_algebra(write_algebra(*a), /*checked=*/false);
    CHECK(*back == *a);
}

TEST_CASE("parse errors carry distinct diagnoses") {
    SUBCASE("missing fields") {
        CHECK_THROWS_AS(read_algebra("{}"), ParseError);
    }
    SUBCASE("dimension mismatch in basis") {
        CHECK_THROWS_WITH_AS(
            read_algebra("{\"name\":\"t\",\"dim\":2,\"basis\":[\"a\"],\"table\":[]}"),
            doctest::Contains("dimension mismatch"), ParseError);
        try {
            read_algebra("{\"name\":\"t\",\"dim\":2,\"basis\":[\"a\"],\"table\":[]}");
        } catch (const ParseError& e) {
            CHECK(e.kind == ParseError::Kind::dimension_mismatch);
        }
    }
    SUBCASE("dimension mismatch in table") {
        CHECK_THROWS_WITH_AS(
            read_algebra(
                "{\"name\":\"t\",\"dim\":1,\"basis\":[\"a\"],\"table\":[[[\"0\"],[\"0\"]]]}"),
            doctest::Contains("dimension mismatch"), ParseError);
    }
    SUBCASE("bad scalar names its position") {
        CHECK_THROWS_WITH_AS(
            read_algebra("{\"name\":\"t\",\"dim\":1,\"basis\":[\"a\"],\"table\":[[[\"1//2\"]]]}"),
            doctest::Contains("table[0][0][0]"), ParseError);
        CHECK_THROWS_WITH_AS(
            read_algebra("{\"name\":\"t\",\"dim\":1,\"basis\":[\"a\"],\"table\":[[[\"1/0\"]]]}"),
            doctest::Contains("zero denominator"), ParseError);
        try {
            read_algebra("{\"name\":\"t\",\"dim\":1,\"basis\":[\"a\"],\"table\":[[[\"1/0\"]]]}");
        } catch (const ParseError& e) {
            CHECK(e.kind == ParseError::Kind::bad_scalar);
        }
    }
    SUBCASE("not JSON at all") {
        CHECK_THROWS_WITH_AS(read_algebra("pointwise"), doctest::Contains("invalid JSON"),
                             ParseError);
    }
}

TEST_CASE("a non-associative table is rejected with the violating triple") {
    // the dim-2 example: e1 e1 = e2, e2 e1 = e1
    std::string text =
        "{\"name\":\"bad\",\"dim\":2,\"basis\":[\"e1\",\"e2\"],"
        "\"table\":[[[\"0\",\"1\"],[\"0\",\"0\"]],[[\"1\",\"0\"],[\"0\",\"0\"]]]}";
    try {
        read_algebra(text);
        FAIL("expected NotAssociativeError");
    } catch (const NotAssociativeError& e) {
        CHECK(e.i == 0);
        CHECK(e.j == 0);
        CHECK(e.k == 0);
    }
    // the unchecked path accepts it so the checker can be exercised
    AlgebraPtr raw = read_algebra(text, /*checked=*/false);
    CHECK_FALSE(is_associative(raw).pass);
}

TEST_CASE("map files round-trip with embedded endpoints") {
    AlgebraPtr a = catalog_algebra({Family::trunc_poly, 2});
    LinearMap chi = catalog_character({Family::trunc_poly, 2}, "eval0");
    std::string text = write_map(chi);
    LinearMap back = read_map(text);
    CHECK(back.matrix() == chi.matrix());
    CHECK(*back.domain() == *chi.domain());
    CHECK(*back.codomain() == *chi.codomain());
    CHECK(write_map(back) == text);
    CHECK(is_character(back).pass);
    (void)a;
}

TEST_CASE("address resolution: expressions, instances, and failure modes") {
    CHECK(resolve_algebra("pointwise:2").algebra->same_structure(
        *catalog_algebra({Family::pointwise, 2})));
    CHECK(resolve_algebra("dsum(zero:1,pointwise:1)").algebra->dim() == 2);
    CHECK(resolve_algebra("unitize(zero:1)").algebra->dim() == 2);
    CHECK(resolve_algebra("lau(zero:1,pointwise:1,coord:1)").algebra->dim() == 2);
    CHECK(resolve_algebra("genlau(pointwise:2,cyclic:2,scalar:aug)").algebra->dim() == 4);
    CHECK(resolve_algebra("genlau(dsum(zero:1,zero:1),zero:2,zero)").algebra->dim() == 4);
    CHECK(resolve_algebra("sub(upper2)").algebra->dim() == 3);
    CHECK(resolve_algebra("sub(psi(zero:1,pointwise:1,coord:1))").algebra->dim() == 2);

    CHECK_THROWS_AS(resolve_algebra("lau(zero:1,pointwise:1)"), ParseError);
    CHECK_THROWS_AS(resolve_algebra("dsum(zero:1)"), ParseError);
    CHECK_THROWS_AS(resolve_algebra("sub(nothing)"), ParseError);
    CHECK_THROWS_AS(resolve_algebra("warp(zero:1)"), ParseError);
    CHECK_THROWS_AS(resolve_algebra("/no/such/file.json"), ParseError);
    // a named character cannot attach to a non-catalog algebra
    CHECK_THROWS_AS(resolve_algebra("lau(zero:1,dsum(zero:1,zero:1),coord:1)"), ParseError);
}

TEST_CASE("shipped H3 instances expose codimension and closure facts") {
    for (const H3Instance& inst : shipped_h3_instances()) {
        CAPTURE(inst.name);
        SubspaceReport rep = subspace_report(inst.subspace);
        CHECK(rep.is_subalgebra);
        CHECK(rep.codimension >= 1);  // finite codimension, proper
        AlgebraPtr sub = subspace_algebra(inst.subspace, "sub(" + inst.name + ")");
        CHECK(is_associative(sub).pass);
    }
    // psi images always have codimension exactly one
    for (const LauTriple& t : shipped_lau_triples()) {
        H3Instance inst = h3_instance("psi(" + t.a.to_string() + "," + t.b.to_string() + "," +
                                      t.character + ")");
        CHECK(subspace_report(inst.subspace).codimension == 1);
    }
}
