"""Smoke tests for the laukit Python module."""

import json

import pytest

import laukit


def test_catalog_and_fingerprint():
    m2 = laukit.catalog("matrix:2")
    fp = laukit.fingerprint(m2)
    assert (fp.dim, fp.unital, fp.commutative, fp.center_dim, fp.radical_dim) == (
        4, True, False, 1, 0)
    assert fp.semisimple


def test_element_arithmetic_is_exact():
    c2 = laukit.catalog("pointwise:2")
    x = c2.element(["1", "2"])
    y = c2.element(["3", "4"])
    assert (x * y).coeffs == ["3", "8"]
    assert (x + y).coeffs == ["4", "6"]
    half = x.scale("1/2")
    assert half.coeffs == ["1/2", "1"]
    assert laukit.parse_scalar_canonical("2/4") == "1/2"
    assert laukit.parse_scalar_canonical("-1+2i") == "-1+2i"


def test_trivializing_isomorphism_collapses_the_product():
    a = laukit.catalog("pointwise:2")
    b = laukit.catalog("cyclic:2")
    t = laukit.character_to_hom(a, laukit.catalog_character("cyclic:2", "aug"))
    product = laukit.generalized_lau_product(a, b, t)
    assert laukit.is_associative(product).passed
    phi = laukit.trivializing_isomorphism(a, b, t)
    rep = laukit.verify_isomorphism(phi)
    assert rep.passed and rep.determinant == "1"
    fp_product = laukit.fingerprint(product)
    fp_sum = laukit.fingerprint(laukit.direct_sum(a, b))
    assert fp_product == fp_sum


def test_unitization_versus_direct_sum():
    z1 = laukit.catalog("zero:1")
    c = laukit.catalog("pointwise:1")
    sharp, incl = laukit.unitization(z1)
    assert laukit.is_homomorphism(incl).passed
    cert = laukit.distinguish(laukit.direct_sum(z1, c), sharp)
    assert cert is not None and cert.field == "unital"
    # but the character Lau product is isomorphic to the unitization
    lau = laukit.lau_product(z1, c, laukit.catalog_character("pointwise:1", "coord:1"))
    witness = laukit.LinearMap(lau, sharp, [["1", "0"], ["0", "1"]])
    assert laukit.verify_isomorphism(witness).passed


def test_embedding_image_is_codimension_one_not_ideal():
    c = laukit.catalog("pointwise:1")
    chi = laukit.catalog_character("pointwise:1", "coord:1")
    psi = laukit.unitization_embedding(c, c, chi)
    ambient = psi.codomain
    image = laukit.Subspace(ambient, [psi(lau_el) for lau_el in
                                      [psi.domain.basis_element(0), psi.domain.basis_element(1)]])
    rep = laukit.subspace_report(image)
    assert rep.codimension == 1
    assert rep.is_subalgebra
    assert not rep.is_ideal
    assert rep.ideal_witness


def test_json_round_trip():
    a = laukit.resolve("dsum(unitize(zero:1),cyclic:2)")
    text = laukit.algebra_to_json(a)
    back = laukit.algebra_from_json(text)
    assert back == a
    assert laukit.algebra_to_json(back) == text
    parsed = json.loads(text)
    assert parsed["dim"] == a.dim
    assert list(parsed.keys()) == ["name", "dim", "basis", "table"]


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        laukit.catalog("zero:0")
    with pytest.raises(ValueError):
        laukit.parse_scalar_canonical("1/0")
    z1 = laukit.catalog("zero:1")
    chi = laukit.catalog_character("pointwise:1", "coord:1")
    with pytest.raises(ValueError, match="requires unital A"):
        laukit.character_to_hom(z1, chi)


def test_lab_reports():
    lab = laukit.run_lab("commutative")
    assert lab.all_passed
    lab = laukit.run_lab("unital")
    assert not lab.all_passed
    assert len(lab.h3_finite_codim.failures) == 1
    assert "xpoly2" in lab.h3_finite_codim.failures[0].description
    assert lab.h3_finite_codim.failures[0].replay.startswith("laukit describe")
