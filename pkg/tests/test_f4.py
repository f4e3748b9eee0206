from fractions import Fraction

from exactlie.f4 import (
    GRADE2_DIAGRAM,
    biweight_multisets_match,
    coweight_pair,
    f4_betti_subsubregular,
    f4_grading,
    f4_invariant_hyperplanes,
    f4_module,
    f4_roots,
    grade,
    grade2_arrows,
    highest_root,
    orbit_dimension_check,
    reflection_closure_check,
)


def test_root_count_and_positivity():
    system = f4_roots()
    assert len(system.roots) == 48
    assert len(system.positives()) == 24
    for r in system.roots:
        assert all(x >= 0 for x in r) or all(x <= 0 for x in r)


def test_simple_roots_and_highest_root():
    system = f4_roots()
    assert system.simple_roots == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    assert highest_root(system) == (2, 3, 4, 2)


def test_two_root_lengths():
    system = f4_roots()
    long_count = sum(1 for r in system.roots if system.is_long(r))
    assert long_count == 24
    for r in system.roots:
        e = system.euclidean_coords[r]
        norm = sum(x * x for x in e)
        assert norm in (Fraction(1), Fraction(2))


def test_reflections_permute_the_roots():
    assert reflection_closure_check(f4_roots()) == 48 * 48


def test_grading_layers():
    graded = f4_grading()
    assert graded.weights == (0, 2, 0, 2)
    assert graded.dims[0] == 8
    assert graded.dims[2] == 8
    assert sum(graded.dims.values()) == 52
    for g, d in graded.dims.items():
        assert g % 2 == 0
        if g != 0:
            assert graded.dims[-g] == d


def test_grade_is_linear_on_root_sums():
    system = f4_roots()
    roots = set(system.roots)
    for a in system.roots:
        for b in system.roots:
            c = tuple(x + y for x, y in zip(a, b))
            if c in roots:
                assert grade(c) == grade(a) + grade(b)


def test_grade2_arrow_pattern():
    arrows = grade2_arrows()
    assert len(arrows["alpha3"]) == 5
    assert len(arrows["alpha1"]) == 3
    assert ((0, 0, 0, 1), (0, 0, 1, 1)) in arrows["alpha3"]
    assert ((0, 1, 2, 0), (1, 1, 2, 0)) in arrows["alpha1"]


def test_grade2_biweights_match_the_module():
    assert biweight_multisets_match()
    system = f4_roots()
    pairs = sorted(coweight_pair(system, r) for r in GRADE2_DIAGRAM)
    assert pairs == [
        (-1, -2), (-1, 0), (-1, 2), (0, -1), (0, 1), (1, -2), (1, 0), (1, 2),
    ]


def test_module_raising_operators_are_nilpotent():
    module = f4_module()
    assert (module.e1 * module.e1).is_zero()
    e3 = module.e3
    assert not (e3 * e3).is_zero()
    assert (e3 * e3 * e3).is_zero()
    # weights shift by the right amount
    for op, shift in ((module.e1, (2, 0)), (module.e3, (0, 2))):
        for j, (_, wj) in enumerate(module.basis):
            for i, (_, wi) in enumerate(module.basis):
                if op.entry(i, j):
                    assert wi == (wj[0] + shift[0], wj[1] + shift[1])


def test_exactly_two_invariant_hyperplanes():
    planes = f4_invariant_hyperplanes()
    assert len(planes) == 2
    assert [p["bidegree"] for p in planes] == [(0, 1), (1, 2)]
    assert [p["summand"] for p in planes] == ["V3", "V1xS2V3"]
    assert [p["annihilator_weight"] for p in planes] == [(0, -1), (-1, -2)]


def test_second_betti_number():
    report = f4_betti_subsubregular()
    assert report["b2"] == 4
    assert report["decomposition"] == "2+1+1"
    assert report["base"] == 2
    assert report["components"] == [1, 1]


def test_orbit_dimension():
    report = orbit_dimension_check()
    assert report == {"algebra_dim": 52, "centralizer_dim": 8, "orbit_dim": 44}
