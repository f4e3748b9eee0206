"""Tests for the 14-dimensional exceptional algebra model.

Printed data (basis brackets, the degree-2 invariant, the slice identity,
the hypersurface) is frozen here; the heavier exhaustive sweeps live in
the acceptance suite.
"""

import random
from fractions import Fraction

import pytest

from exactlie.g2 import (
    CHI6_READING,
    S3_NORMALIZATION,
    SLICE_DEGREES,
    VARS7,
    VARS8,
    G2Elt,
    chi2_closed,
    chi6_closed,
    chi6_identity_scan,
    chi_crosscheck,
    chi_from_charpoly,
    example_f,
    flatten,
    g2_basis,
    g2_bracket,
    g2_element,
    g2_embed_so7,
    g2_hypersurface,
    g2_slice_xi,
    g2_triple,
    invariant_form,
    random_element,
    s3_invariant_model,
    s3_polarizations,
    singular_locus_certificates,
    slice_invariants,
    slice_relations,
    slice_structure_check,
)
from exactlie.mpoly import MPoly
from exactlie.polymat import PolyMatrix, charpoly, det_cofactor, rank
from exactlie.scalar import Scalar


def test_bracket_antisymmetry_on_basis():
    basis = g2_basis()
    for e in basis:
        assert g2_bracket(e, e).is_zero()
    rng = random.Random(1)
    for _ in range(30):
        e, f = random_element(rng), random_element(rng)
        lhs = g2_bracket(e, f)
        rhs = g2_bracket(f, e)
        assert (lhs + rhs).is_zero()


def test_sl3_part_closes():
    a1 = g2_element([[0, 1, 0], [0, 0, 0], [0, 0, 0]], (0, 0, 0), (0, 0, 0))
    a2 = g2_element([[0, 0, 0], [1, 0, 0], [0, 0, 0]], (0, 0, 0), (0, 0, 0))
    br = g2_bracket(a1, a2)
    assert br.v.is_zero() and br.w.is_zero()
    assert br.a == a1.a * a2.a - a2.a * a1.a


def test_vw_pairing_order_and_factor():
    # the 3/4 pairing appears for the (row, column) order; the reverse
    # order carries the opposite sign
    v = (1, 2, 3)
    w = (5, 0, -1)
    xv = g2_element([[0] * 3] * 3, v, (0, 0, 0))
    xw = g2_element([[0] * 3] * 3, (0, 0, 0), w)
    vw = PolyMatrix([[Scalar(Fraction(3, 4) * v[i] * w[j]) for j in range(3)] for i in range(3)])
    wv = sum(v[i] * w[i] for i in range(3))
    expected = vw - PolyMatrix.identity(3).scale(Fraction(wv, 4))
    assert g2_bracket(xw, xv).a == expected
    assert g2_bracket(xv, xw).a == -expected


def test_jacobi_sampled_triples():
    basis = g2_basis()
    rng = random.Random(5)
    for _ in range(60):
        e, f, g = (basis[rng.randrange(14)] for _ in range(3))
        lhs = g2_bracket(g2_bracket(e, f), g)
        rhs = g2_bracket(g2_bracket(e, g), f) + g2_bracket(e, g2_bracket(f, g))
        assert (lhs - rhs).is_zero()


def test_embedding_is_homomorphism_on_all_pairs():
    basis = g2_basis()
    images = [g2_embed_so7(e) for e in basis]
    for i in range(14):
        for j in range(14):
            expected = g2_embed_so7(g2_bracket(basis[i], basis[j]))
            assert expected == images[i] * images[j] - images[j] * images[i]


def test_embedding_is_injective():
    cols = []
    for e in g2_basis():
        m = g2_embed_so7(e)
        cols.append([m.entry(i, j) for i in range(7) for j in range(7)])
    matrix = PolyMatrix([[cols[j][k] for j in range(14)] for k in range(49)])
    assert rank(matrix) == 14


def test_invariant_form_is_block_exchange():
    g = invariant_form()
    assert g.is_symmetric()
    for i in range(3):
        assert g.entry(i, i + 4) == Scalar(1)
        assert g.entry(i + 4, i) == Scalar(1)
    assert g.entry(3, 3) == Scalar(1)
    total = sum(1 for i in range(7) for j in range(7) if g.entry(i, j))
    assert total == 7


def test_chi2_on_vector_pair():
    # w.v = 2 with no sl3 part gives chi2 = 3
    e = g2_element([[0] * 3] * 3, (1, 1, 0), (1, 1, 0))
    c2, _ = chi_from_charpoly(e)
    assert c2 == Scalar(3)
    assert chi2_closed(e) == Scalar(3)


def test_closed_formulas_match_charpoly_on_random_points():
    assert chi_crosscheck(samples=60, seed=0) == 60


def test_charpoly_extraction_against_cofactor_oracle():
    rng = random.Random(11)
    e = random_element(rng)
    rho = g2_embed_so7(e)
    lam = MPoly.variable("t", ("t",))
    shifted = PolyMatrix(
        [
            [
                lam * (1 if i == j else 0) - MPoly.constant(rho.entry(i, j), ("t",))
                for j in range(7)
            ]
            for i in range(7)
        ]
    )
    det = det_cofactor(shifted)
    c2, c6 = chi_from_charpoly(e)
    assert det.coefficient((5,)) == c2
    assert det.coefficient((1,)) == c6


def test_triple_and_slice_structure():
    report = slice_structure_check()
    assert report == {"kernel_dim": 8, "orbit_dim": 6, "algebra_dim": 14}


def test_triple_is_nilpotent_pair():
    x, h, y = g2_triple()
    ad = lambda e, f: g2_bracket(e, f)
    assert ad(h, x) == x.scale(Scalar(2))
    assert ad(x, y) == h


def test_chi2_of_slice_element():
    c2, _ = slice_invariants()
    a, b, c, u = (MPoly.variable(n, VARS8) for n in ("a", "b", "c", "u"))
    assert c2 == -2 * (u - Fraction(3, 4) * (a * c - b * b))


def test_chi6_identity_reading_frozen():
    assert CHI6_READING == ("z1", "-z2")
    assert chi6_identity_scan() == CHI6_READING


def test_hypersurface_equals_quotient_polynomial():
    f = g2_hypersurface()
    assert f == example_f()
    assert f.vars == VARS7
    assert f.coefficient((0,) * 7) == Scalar(0)
    for exps in f.terms:
        assert sum(exps) >= 2
    weights = {n: SLICE_DEGREES[n] for n in VARS7}
    assert f.quasi_homogeneous_degree(weights) == 12


def test_relations_are_quasi_homogeneous():
    rel = slice_relations(VARS7)
    weights = {n: SLICE_DEGREES[n] for n in VARS7}
    assert rel["t1"].quasi_homogeneous_degree(weights) == 6
    assert rel["t2"].quasi_homogeneous_degree(weights) == 6
    assert rel["t3"].quasi_homogeneous_degree(weights) == 6
    assert rel["z1"].quasi_homogeneous_degree(weights) == 5
    assert rel["z2"].quasi_homogeneous_degree(weights) == 5


def test_singular_locus_certificates_reconstruct_partials():
    f = g2_hypersurface()
    rel = slice_relations(VARS7)
    gens = [rel[k] for k in ("t1", "t2", "t3", "z1", "z2")]
    certs = singular_locus_certificates()
    assert set(certs) == set(VARS7)
    for var, cert in certs.items():
        assert cert.bound == 8
        total = MPoly.zero(VARS7)
        for h, g in zip(cert.cofactors, gens):
            total = total + h * g
        assert total == f.derivative(var)


def test_s3_model_frozen_and_relations_vanish():
    found = s3_invariant_model()
    assert found == S3_NORMALIZATION
    assert found["alpha"] == Fraction(2, 3)
    pol = s3_polarizations()
    images = {
        "a": pol["a"] * found["alpha"], "c": pol["c"] * found["alpha"],
        "b": pol["b"] * found["beta"],
        "p": pol["p"] * found["pi"], "s": pol["s"] * found["pi"],
        "q": pol["q"] * found["kappa"], "r": pol["r"] * found["kappa"],
    }
    # direct check of one relation by hand-expansion
    t1 = slice_relations(VARS7)["t1"]
    acc = MPoly.zero(pol["a"].vars)
    for exps, coef in t1.terms.items():
        term = MPoly.constant(coef, pol["a"].vars)
        for var, e in zip(VARS7, exps):
            for _ in range(e):
                term = term * images[var]
        acc = acc + term
    assert acc.is_zero()


def test_flatten_roundtrip_dimension():
    basis = g2_basis()
    matrix = PolyMatrix([flatten(e) for e in basis])
    assert rank(matrix) == 14


def test_random_element_is_traceless():
    rng = random.Random(3)
    for _ in range(10):
        e = random_element(rng)
        assert e.a.trace() == Scalar(0)


def test_g2elt_shape_validation():
    with pytest.raises(ValueError):
        G2Elt(PolyMatrix.zeros(2, 2), PolyMatrix.zeros(3, 1), PolyMatrix.zeros(1, 3))
    with pytest.raises(ValueError):
        G2Elt(PolyMatrix.zeros(3, 3), PolyMatrix.zeros(1, 3), PolyMatrix.zeros(1, 3))
