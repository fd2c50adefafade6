#include "doctest.h"
#include "laukit/constructions.hpp"
#include "laukit/corpus.hpp"
#include "laukit/error.hpp"
#include "laukit/morphisms.hpp"
#include "test_helpers.hpp"

using namespace laukit;
using testing::sc;

TEST_CASE("is_homomorphism: zero map, corner embedding, and a failing map") {
    AlgebraPtr c1 = catalog_algebra({Family::pointwise, 1});
    AlgebraPtr m2 = catalog_algebra({Family::matrix, 2});

    CHECK(is_homomorphism(LinearMap::zero_map(c1, m2)).pass);

    Mat to_e11(4, 1);
    to_e11.at(0, 0) = sc(1);  // l -> l*e11, idempotent target
    CHECK(is_homomorphism(LinearMap(c1, m2, std::move(to_e11))).pass);

    Mat to_e12(4, 1);
    to_e12.at(1, 0) = sc(1);  // l -> l*e12, e12*e12 = 0
    HomReport rep = is_homomorphism(LinearMap(c1, m2, std::move(to_e12)));
    REQUIRE_FALSE(rep.pass);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->i == 0);
    CHECK(rep.witness->j == 0);
    CHECK(rep.witness->lhs == m2->basis_element(1));  // T(1*1) = e12
    CHECK(rep.witness->rhs == m2->zero());            // T(1)T(1) = e12 e12 = 0
}

TEST_CASE("a passing homomorphism is multiplicative on 100 seeded random pairs") {
    AlgebraPtr b = catalog_algebra({Family::trunc_poly, 3});
    AlgebraPtr a = catalog_algebra({Family::trunc_poly, 2});
    LinearMap t = catalog_homomorphism(
        HomSpec::projection({Family::trunc_poly, 3}, {Family::trunc_poly, 2}));
    REQUIRE(is_homomorphism(t).pass);
    for (std::uint64_t s = 0; s < 100; ++s) {
        Element x = random_element(b, 2 * s, 6);
        Element y = random_element(b, 2 * s + 1, 6);
        CHECK(t.apply(multiply(x, y)) == multiply(t.apply(x), t.apply(y)));
    }
}

TEST_CASE("is_character: evaluation, zero functional, sum-of-coordinates") {
    AlgebraPtr c2 = catalog_algebra({Family::pointwise, 2});
    AlgebraPtr c = complex_algebra();

    Mat first(1, 2);
    first.at(0, 0) = sc(1);
    CHECK(is_character(LinearMap(c2, c, std::move(first))).pass);

    CharReport zero_rep = is_character(LinearMap::zero_map(c2, c));
    CHECK_FALSE(zero_rep.pass);
    CHECK_FALSE(zero_rep.nonzero);
    CHECK(zero_rep.multiplicative);  // the zero map is multiplicative, just not a character

    Mat sum(1, 2);
    sum.at(0, 0) = sc(1);
    sum.at(0, 1) = sc(1);
    CharReport sum_rep = is_character(LinearMap(c2, c, std::move(sum)));
    REQUIRE_FALSE(sum_rep.pass);
    REQUIRE(sum_rep.witness.has_value());
    // chi(e1 e2) = chi(0) = 0 differs from chi(e1) chi(e2) = 1 at pair (0,1)
    CHECK(sum_rep.witness->i == 0);
    CHECK(sum_rep.witness->j == 1);

    CHECK_THROWS_WITH_AS(is_character(LinearMap::zero_map(c2, c2)),
                         "character codomain must be C", Error);
}

TEST_CASE("verify_isomorphism: identity, unitriangular witness, tensor mismatch") {
    AlgebraPtr c2 = catalog_algebra({Family::pointwise, 2});
    CHECK(verify_isomorphism(LinearMap::identity(c2)).pass);

    LinearMap phi = trivializing_isomorphism(catalog_algebra({Family::pointwise, 1}),
                                             catalog_algebra({Family::pointwise, 1}),
                                             LinearMap::identity(catalog_algebra({Family::pointwise, 1})));
    IsoReport good = verify_isomorphism(phi);
    CHECK(good.pass);
    CHECK(good.determinant == sc(1));

    // pointwise C^2 against the dim-2 algebra with e1 e1 = e2: bijective but
    // never multiplicative
    std::vector<Scalar> t(8);
    t[(0 * 2 + 0) * 2 + 1] = sc(1);
    AlgebraPtr nil = Algebra::make("nil2", {"e1", "e2"}, std::move(t));
    IsoReport bad = verify_isomorphism(LinearMap(c2, nil, Mat::identity(2)));
    REQUIRE_FALSE(bad.pass);
    CHECK(bad.bijective);
    CHECK_FALSE(bad.multiplicative);
    CHECK(bad.failed_clause == "not multiplicative");
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->i == 0);
    CHECK(bad.witness->j == 0);

    // non-square maps fail the shape clause
    IsoReport shape = verify_isomorphism(LinearMap::zero_map(c2, complex_algebra()));
    CHECK_FALSE(shape.pass);
    CHECK(shape.failed_clause == "matrix not square");
}

TEST_CASE("property: a passing isomorphism has a passing exact inverse") {
    AlgebraPtr a = catalog_algebra({Family::trunc_poly, 2});
    AlgebraPtr product = lau_product(a, catalog_algebra({Family::pointwise, 1}),
                                     catalog_character({Family::pointwise, 1}, "coord:1"));
    AlgebraPtr sharp = unitization(a).algebra;
    LinearMap f(product, sharp, Mat::identity(3));
    IsoReport rep = verify_isomorphism(f);
    REQUIRE(rep.pass);
    auto inv = f.inverse();
    REQUIRE(inv.has_value());
    CHECK(verify_isomorphism(*inv).pass);
}

TEST_CASE("subspace_report: matrix-unit span and the whole algebra") {
    AlgebraPtr m2 = catalog_algebra({Family::matrix, 2});

    SUBCASE("span{e11, e12}: subalgebra but not an ideal") {
        Subspace s(m2, {m2->basis_element(0), m2->basis_element(1)});
        SubspaceReport rep = subspace_report(s);
        CHECK(rep.rank == 2);
        CHECK(rep.codimension == 2);
        CHECK(rep.is_subalgebra);
        CHECK(rep.is_right_ideal);  // row space: e1c * x stays upper row
        CHECK_FALSE(rep.is_left_ideal);
        CHECK_FALSE(rep.is_ideal);
        REQUIRE(rep.left_ideal_witness.has_value());
        CHECK_FALSE(s.contains(rep.left_ideal_witness->product));
        // the documented witness: e21 * e12 = e22 lies outside the span
        Element e21e12 = multiply(m2->basis_element(2), m2->basis_element(1));
        CHECK(e21e12 == m2->basis_element(3));
        CHECK_FALSE(s.contains(e21e12));
    }

    SUBCASE("full span: codimension 0, two-sided ideal") {
        std::vector<Element> all;
        for (std::size_t i = 0; i < 4; ++i) all.push_back(m2->basis_element(i));
        SubspaceReport rep = subspace_report(Subspace(m2, all));
        CHECK(rep.codimension == 0);
        CHECK(rep.is_subalgebra);
        CHECK(rep.is_ideal);
    }

    SUBCASE("strictly upper triangular span{e12}: a nilpotent right+left test") {
        SubspaceReport rep = subspace_report(Subspace(m2, {m2->basis_element(1)}));
        CHECK(rep.rank == 1);
        CHECK(rep.is_subalgebra);  // e12*e12 = 0
        CHECK_FALSE(rep.is_ideal);
    }
}

TEST_CASE("is_ideal implies is_subalgebra on every emitted report") {
    AlgebraPtr m2 = catalog_algebra({Family::matrix, 2});
    AlgebraPtr p3 = catalog_algebra({Family::trunc_poly, 3});
    std::vector<Subspace> subs = {
        Subspace(m2, {m2->basis_element(0), m2->basis_element(1)}),
        Subspace(m2, {m2->basis_element(1), m2->basis_element(3)}),
        Subspace(p3, {p3->basis_element(1), p3->basis_element(2)}),  // the ideal (x)
        Subspace(p3, {p3->basis_element(2)}),                        // the ideal (x^2)
        Subspace(p3, {p3->basis_element(0)}),                        // span{1}: subalgebra only
    };
    for (const Subspace& s : subs) {
        SubspaceReport rep = subspace_report(s);
        if (rep.is_ideal) CHECK(rep.is_subalgebra);
        CHECK(rep.is_ideal == (rep.is_left_ideal && rep.is_right_ideal));
    }
    // the two poly ideals really are two-sided ideals
    CHECK(subspace_report(Subspace(p3, {p3->basis_element(1), p3->basis_element(2)})).is_ideal);
    CHECK(subspace_report(Subspace(p3, {p3->basis_element(2)})).is_ideal);
    CHECK_FALSE(subspace_report(Subspace(p3, {p3->basis_element(0)})).is_ideal);
}

TEST_CASE("property: codimension is invariant under permutation, duplication, scaling") {
    AlgebraPtr m2 = catalog_algebra({Family::matrix, 2});
    Element v1 = m2->element({sc(1), sc(2), sc(0), sc(0)});
    Element v2 = m2->element({sc(0), sc(1), sc(1, 2), sc(0)});
    Subspace base(m2, {v1, v2});

    std::vector<std::vector<Element>> variants = {
        {v2, v1},
        {v1, v2, v1, v2},
        {sc(3) * v1, sc(-1, 2) * v2},
        {v2, sc(0, 1, 5, 1) * v1, v2},
    };
    for (const auto& spanning : variants) {
        Subspace s(m2, spanning);
        CHECK(s.rank() == base.rank());
        CHECK(s.codimension() == base.codimension());
        // identical canonical reduced basis, not merely equal rank
        REQUIRE(s.reduced_basis().size() == base.reduced_basis().size());
        for (std::size_t i = 0; i < s.reduced_basis().size(); ++i)
            CHECK(s.reduced_basis()[i] == base.reduced_basis()[i]);
    }
}

TEST_CASE("subspace_algebra extracts the induced structure constants") {
    AlgebraPtr m2 = catalog_algebra({Family::matrix, 2});
    Subspace diag(m2, {m2->basis_element(0), m2->basis_element(3)});
    AlgebraPtr sub = subspace_algebra(diag, "diag");
    CHECK(sub->same_structure(*catalog_algebra({Family::pointwise, 2})));

    Subspace not_closed(m2, {m2->basis_element(1), m2->basis_element(2)});
    CHECK_THROWS_AS(subspace_algebra(not_closed, "bad"), MathError);
}
