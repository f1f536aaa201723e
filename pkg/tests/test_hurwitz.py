import random

import pytest

from palf.curves import act_on_curve, convex, curves_equal
from palf.fibration import Palf, report, total_monodromy
from palf.hurwitz import (LEFT, RIGHT, HurwitzMove, apply_move,
                          equivalent_within)
from palf.surface import Surface, SurfaceMismatchError, TwistGen, equals


def _palf(s, *runs):
    return Palf(s, tuple(convex(s, lo, hi) for lo, hi in runs))


def test_move_validation_and_str():
    m = HurwitzMove(0, LEFT)
    assert str(m) == "L0"
    assert str(HurwitzMove(2, RIGHT)) == "R2"
    with pytest.raises(ValueError):
        HurwitzMove(-1, LEFT)
    with pytest.raises(ValueError):
        HurwitzMove(0, "up")


def test_apply_move_out_of_range():
    s = Surface(0, 4)
    p = _palf(s, (1, 2), (2, 3))
    with pytest.raises(IndexError):
        apply_move(p, HurwitzMove(1, LEFT))


def test_right_move_shape():
    s = Surface(0, 4)
    a, b = convex(s, 1, 2), convex(s, 2, 3)
    q = apply_move(Palf(s, (a, b)), HurwitzMove(0, RIGHT))
    assert curves_equal(q.cycles[0], b)
    assert curves_equal(q.cycles[1], act_on_curve(TwistGen(2, 3), a))


def test_left_then_right_is_the_identity():
    s = Surface(0, 5)
    p = _palf(s, (1, 2), (2, 3), (1, 4))
    for i in (0, 1):
        q = apply_move(apply_move(p, HurwitzMove(i, LEFT)),
                       HurwitzMove(i, RIGHT))
        assert all(curves_equal(x, y) for x, y in zip(p.cycles, q.cycles))


def test_moves_preserve_monodromy_and_report():
    s = Surface(0, 5)
    p = _palf(s, (1, 2), (2, 3), (2, 2), (3, 4))
    m0, r0 = total_monodromy(p), report(p)
    rng = random.Random(11)
    q = p
    for _ in range(6):
        mv = HurwitzMove(rng.randrange(len(q.cycles) - 1),
                         rng.choice((LEFT, RIGHT)))
        q = apply_move(q, mv)
        assert equals(total_monodromy(q), m0)
        assert report(q) == r0


def test_search_finds_the_scramble():
    s = Surface(0, 5)
    p = _palf(s, (1, 2), (2, 3), (3, 4))
    q = apply_move(p, HurwitzMove(0, RIGHT))
    assert equivalent_within(p, p, 0) == []
    assert equivalent_within(p, q, 0) is None
    witness = equivalent_within(p, q, 1)
    assert witness == [HurwitzMove(0, RIGHT)]
    # replaying the witness lands elementwise on q
    r = p
    for mv in witness:
        r = apply_move(r, mv)
    assert all(curves_equal(x, y) for x, y in zip(r.cycles, q.cycles))


def test_search_is_minimal_and_deterministic():
    s = Surface(0, 5)
    p = _palf(s, (1, 2), (2, 3), (3, 4))
    q = apply_move(apply_move(p, HurwitzMove(1, RIGHT)), HurwitzMove(0, LEFT))
    w1 = equivalent_within(p, q, 4)
    w2 = equivalent_within(p, q, 4)
    assert w1 == w2
    assert len(w1) == 2
    r = p
    for mv in w1:
        r = apply_move(r, mv)
    assert all(curves_equal(x, y) for x, y in zip(r.cycles, q.cycles))


def test_search_rejects_mismatched_inputs():
    p4 = _palf(Surface(0, 4), (1, 2), (2, 3))
    p5 = _palf(Surface(0, 5), (1, 2), (2, 3))
    with pytest.raises(SurfaceMismatchError):
        equivalent_within(p4, p5, 1)
    short = _palf(Surface(0, 4), (1, 2))
    assert equivalent_within(p4, short, 3) is None


def test_search_up_to_conjugation():
    s = Surface(0, 4)
    p = _palf(s, (1, 2), (2, 3))
    u = (TwistGen(1, 2), TwistGen(2, 3, -1))
    q = Palf(s, tuple(act_on_curve(u, c) for c in p.cycles))
    assert equivalent_within(p, q, 0) is None
    assert equivalent_within(p, q, 0, conjugation=True) == []


def test_tie_break_prefers_left_moves():
    # for disjoint a, b both L0 and R0 swap them; the witness must be the
    # lexicographically first of the two
    s = Surface(0, 5)
    a, b = convex(s, 1, 2), convex(s, 3, 4)
    assert equivalent_within(Palf(s, (a, b)), Palf(s, (b, a)), 1) == \
        [HurwitzMove(0, LEFT)]
