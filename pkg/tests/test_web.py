import json
import pathlib
import time
from fractions import Fraction

import pytest

from kummerweb.ratfunc import ONE, X, Y, parse_ratfunc
from kummerweb.web import (
    INTERIOR_TEXT, U, DegenerateTripleError, SubwebSelector, blaschke_curvature,
    is_generic, is_hexagonal, strand_values,
)

GOLDEN = json.loads((pathlib.Path(__file__).parent / "golden" / "curvature.json").read_text())
W0 = (Fraction(1, 3), Fraction(1, 2))


def test_interior_functions():
    assert U[0] == X and U[1] == Y
    assert U[2] == X / Y
    assert U[8] == U[4] * U[3]  # U9 = U5 * U4
    assert U[6] == -Y * U[4]  # U7 = -y U5
    assert U[7] == -U[3] / Y  # U8 = -U4 / y
    assert U[5] == X * Y
    assert len(INTERIOR_TEXT) == 9


def test_strand_values_at_base_point():
    vals = strand_values(W0)
    assert vals == tuple(Fraction(n, d) for n, d in
                         [(1, 3), (1, 2), (2, 3), (3, 4), (1, 2), (1, 6), (-1, 4), (-3, 2), (3, 8)])


def test_genericity():
    assert is_generic(W0)
    assert is_generic((0.3, 0.55))
    r = is_generic((Fraction(1), Fraction(1, 2)))
    assert not r and r.reason == "pole" and r.witness == (4,)
    r = is_generic((Fraction(1, 2), Fraction(1, 2)))
    assert not r and r.reason == "diagonal"
    r = is_generic((Fraction(1, 2), Fraction(0)))
    assert not r and r.reason == "pole"


def test_genericity_wedge_vanishing():
    # dU1 ^ dU6 = x vanishes on x = 0; U3 has no pole there
    r = is_generic((Fraction(0), Fraction(1, 2)))
    assert not r and r.reason == "wedge"


def test_selector():
    assert SubwebSelector.complement({3, 6, 9}).indices == (1, 2, 4, 5, 7, 8)
    assert SubwebSelector.complement({6, 9}).label() == "T_{^69}"
    assert SubwebSelector(range(1, 10)).label() == "K"
    for bad in ([1, 2], [1, 2, 10], [0, 1, 2], [1, 1, 2]):
        with pytest.raises(ValueError):
            SubwebSelector(bad)


def test_curvature_examples():
    assert blaschke_curvature(1, 2, 3).is_zero
    assert blaschke_curvature(1, 2, 4).is_zero
    assert blaschke_curvature(1, 3, 7) == parse_ratfunc(
        "(-2*x*y^2 + 2*y^2)/(x^4*y^2 - 4*x^3*y^2 + 2*x^3*y + 4*x^2*y^2 - 4*x^2*y + x^2)"
    )


def test_curvature_errors():
    with pytest.raises(ValueError):
        blaschke_curvature(1, 2, 10)
    with pytest.raises(ValueError):
        blaschke_curvature(1, 1, 2)


def test_degenerate_triple_error_type():
    assert issubclass(DegenerateTripleError, ValueError)


def test_curvature_matches_golden_file():
    # the golden file was cross-checked against two independent sympy computations
    for entry in GOLDEN:
        k = blaschke_curvature(*entry["triple"])
        assert k.render() == entry["curvature"], entry["triple"]
        assert k.is_zero == entry["zero"]


def test_curvature_verdict_independent_of_order():
    for tri in [(1, 3, 7), (2, 5, 9), (3, 4, 6), (1, 2, 4)]:
        base = blaschke_curvature(*tri).is_zero
        for i, j, k in [(tri[1], tri[0], tri[2]), (tri[2], tri[1], tri[0]), (tri[0], tri[2], tri[1])]:
            assert blaschke_curvature(i, j, k).is_zero == base


def test_complement_369_hexagonal_and_fast():
    blaschke_curvature.cache_clear()
    t = time.perf_counter()
    cert = is_hexagonal(SubwebSelector.complement({3, 6, 9}))
    assert time.perf_counter() - t < 60
    assert cert.hexagonal and len(cert.triples) == 20
    assert all(c.is_zero for _, c in cert.triples)


def test_bol_subweb_curvatures_vanish():
    # every 3-subweb of {1..5} is hexagonal (independently confirmed with sympy)
    cert = is_hexagonal(SubwebSelector(range(1, 6)))
    assert cert.nonzero_triples() == []


def test_nonhexagonal_count():
    nonzero = [e["triple"] for e in GOLDEN if not e["zero"]]
    assert len(nonzero) == 36
    cert = is_hexagonal(SubwebSelector(range(1, 10)))
    assert [list(t) for t in cert.nonzero_triples()] == nonzero
    d = cert.as_dict()
    assert d["hexagonal"] is False and len(d["triples"]) == 84


def test_hand_computed_hexagonal_triples():
    # with (u, v) = (x, y), W = u/v or uv gives W_u / W_v = -v/u or v/u,
    # whose log has vanishing mixed derivative
    assert blaschke_curvature(1, 2, 3).is_zero
    assert blaschke_curvature(1, 2, 6).is_zero
