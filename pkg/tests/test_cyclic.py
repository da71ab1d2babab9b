from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symconf import (
    CyclicTriple,
    are_isomorphic,
    classify_cyclic,
    count_triangles,
    cyclic_configuration,
    enumerate_cyclic,
    format_compact,
    is_connected,
    predict_cyclic_triangles,
    validate,
)
from symconf.core import Configuration
from symconf.cyclic import orbit_blocks
from symconf.errors import Disconnected, InvalidTriple, UnsupportedV


def all_triples(v):
    """Every ordered (a, b, c) with a+b+c = v, valid or not."""
    return [CyclicTriple(v, a, b, v - a - b) for a in range(1, v) for b in range(1, v - a)]


def test_small_cases(fano, mobius_kantor):
    c7 = cyclic_configuration(CyclicTriple(7, 1, 2, 4))
    assert are_isomorphic(c7, fano) and count_triangles(c7) == 28
    c8 = cyclic_configuration(CyclicTriple(8, 1, 2, 5))
    assert count_triangles(c8) == 24
    c9 = cyclic_configuration(CyclicTriple(9, 1, 2, 6))
    assert count_triangles(c9) == 21


def test_orbit_is_starter_translates():
    cfg = cyclic_configuration(CyclicTriple(7, 1, 2, 4))
    assert format_compact(cfg) == "013 124 235 346 045 156 026"


def test_shift_is_automorphism():
    for t in enumerate_cyclic(31):
        cfg = cyclic_configuration(t)
        assert cfg.relabel([(i + 1) % 31 for i in range(31)]) == cfg


@pytest.mark.parametrize(
    "triple",
    [(10, 1, 4, 5), (9, 3, 3, 3), (8, 1, 3, 4), (9, 1, 1, 7), (10, 0, 3, 7), (9, 1, 2, 5)],
)
def test_invalid_triples(triple):
    with pytest.raises(InvalidTriple):
        cyclic_configuration(CyclicTriple(*triple))


def test_gcd_gives_disconnected():
    with pytest.raises(Disconnected):
        cyclic_configuration(CyclicTriple(14, 2, 4, 8))


def test_gcd_orbits_are_disconnected():
    for v in range(7, 41):
        for t in all_triples(v):
            if t.problems() or gcd(gcd(t.a, t.b), t.c) == 1:
                continue
            raw = Configuration(v, orbit_blocks(t))
            assert validate(raw).valid
            assert not is_connected(raw)


def test_predictions():
    assert predict_cyclic_triangles(CyclicTriple(13, 1, 3, 9)) == 13
    assert predict_cyclic_triangles(CyclicTriple(10, 1, 2, 7)) == 20
    assert predict_cyclic_triangles(CyclicTriple(12, 1, 4, 7)) == 16
    for t in [CyclicTriple(13, 1, 3, 9), CyclicTriple(10, 1, 2, 7), CyclicTriple(12, 1, 4, 7)]:
        assert count_triangles(cyclic_configuration(t)) == predict_cyclic_triangles(t)


def test_prediction_unsupported_below_ten():
    with pytest.raises(UnsupportedV):
        predict_cyclic_triangles(CyclicTriple(9, 1, 2, 6))


def test_enumerate_small():
    assert enumerate_cyclic(7) == [CyclicTriple(7, 1, 2, 4)]
    nine = enumerate_cyclic(9)
    assert [t.parts for t in nine] == [(1, 2, 6), (1, 3, 5), (2, 3, 4)]
    assert len(enumerate_cyclic(9, up_to_isomorphism=True)) == 1
    a, b, c = (cyclic_configuration(t) for t in nine)
    assert are_isomorphic(a, b) and are_isomorphic(a, c)


def test_enumerate_matches_exhaustive_classes():
    for v in range(7, 40):
        classes = set()
        for t in all_triples(v):
            if t.problems() or gcd(gcd(t.a, t.b), t.c) != 1:
                continue
            classes.add(min(r.parts for r in t.rotations_and_reversals()))
        assert [t.parts for t in enumerate_cyclic(v)] == sorted(classes)


def test_enumerated_triples_build():
    for v in range(7, 30):
        for t in enumerate_cyclic(v):
            assert validate(cyclic_configuration(t)).valid


def test_rotation_and_reversal_give_isomorphic_configurations():
    t = CyclicTriple(13, 1, 3, 9)
    base = cyclic_configuration(t)
    for r in t.rotations_and_reversals():
        assert are_isomorphic(cyclic_configuration(r), base)


def test_classify():
    assert set(classify_cyclic(13)) <= {13, 26}
    assert set(classify_cyclic(12)) <= {12, 16, 24}
    assert set(classify_cyclic(10)) <= {10, 20}
    with pytest.raises(UnsupportedV):
        classify_cyclic(9)


def test_third_only_when_divisible_by_three():
    for v in range(10, 61):
        counts = classify_cyclic(v)
        if v % 3:
            assert 4 * v // 3 not in counts or 4 * v % 3


@settings(max_examples=60, deadline=None)
@given(st.integers(10, 60).flatmap(lambda v: st.tuples(st.just(v), st.integers(1, v - 2), st.integers(1, v - 2))))
def test_prediction_property(vab):
    v, a, b = vab
    if a + b >= v:
        return
    t = CyclicTriple(v, a, b, v - a - b)
    try:
        cfg = cyclic_configuration(t)
    except InvalidTriple:
        return
    n = count_triangles(cfg)
    assert n == predict_cyclic_triangles(t)
    assert n in {v, 2 * v} or (v % 3 == 0 and n == 4 * v // 3)
