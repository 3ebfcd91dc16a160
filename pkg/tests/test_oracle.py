import random

from pretzeldimer.diagram import build_diagram, trace
from pretzeldimer.laurent import Laurent
from pretzeldimer.oracle import state_sum_bracket


def L(pairs):
    return Laurent.from_pairs(pairs)


def test_bracket_single_kinks():
    assert state_sum_bracket(build_diagram((1,))) == L([[-3, -1]])
    assert state_sum_bracket(build_diagram((-1,))) == L([[3, -1]])
    assert state_sum_bracket(build_diagram((2,))) == L([[-6, 1]])
    assert state_sum_bracket(build_diagram((3,))) == L([[-9, -1]])


def test_bracket_trefoil():
    got = state_sum_bracket(build_diagram((1, 1, 1)))
    assert got == L([[-5, -1], [3, -1], [7, 1]])


def test_bracket_torus_819():
    got = state_sum_bracket(build_diagram((-2, 3, 3)))
    assert got == L([[12, 1], [4, 1], [-8, -1]])


def test_bracket_pretzel_237():
    got = state_sum_bracket(build_diagram((-2, 3, 7)))
    assert got == L([[16, 1], [8, 1], [-8, -1], [-12, 1], [-16, -1]])


def test_bracket_two_component_link():
    got = state_sum_bracket(build_diagram((2, 2)))
    assert got == L([[6, -1], [-2, -1], [-6, 1], [-10, -1]])


def test_bracket_mirror_symmetry():
    # mirroring every crossing inverts A
    a = state_sum_bracket(build_diagram((1, 1, 1)))
    b = state_sum_bracket(build_diagram((-1, -1, -1)))
    assert b == a.reexpress(-1)
    a = state_sum_bracket(build_diagram((-2, 3, 3)))
    b = state_sum_bracket(build_diagram((2, -3, -3)))
    assert b == a.reexpress(-1)


def test_unknot_normalization():
    # kink diagrams of the unknot: (-A^-3)^w <D> = 1
    for spec in [(1,), (-1,), (2,), (-3,)]:
        d = build_diagram(spec)
        t = trace(d)
        assert t.components == 1
        val = (Laurent.term(-1, -3) ** t.writhe) * state_sum_bracket(d)
        assert val == Laurent.one()


def test_bracket_at_one_counts_components():
    # <D>(A=1) = (-1)^w (-2)^(c-1) for any diagram
    rng = random.Random(99)
    for _ in range(12):
        k = rng.randint(1, 3)
        spec = tuple(rng.choice([1, -1]) * rng.randint(1, 3) for _ in range(k))
        d = build_diagram(spec)
        t = trace(d)
        got = state_sum_bracket(d).at_one()
        assert got == (-1) ** (t.writhe % 2) * (-2) ** (t.components - 1)
