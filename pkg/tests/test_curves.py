import random

from hypothesis import given, strategies as st
import pytest

from palf.curves import (Curve, _gen_image, act_on_curve, convex, curve_twist,
                         curves_equal, homology_class, pi1_class,
                         twist_as_word)
from palf.surface import (Surface, SurfaceMismatchError, TwistGen, equals,
                          invert, loop_action, twist, twist_word)
from palf.words import reduce


def test_curve_validation():
    s = Surface(0, 5)
    c = Curve(s, 2, 3)
    assert (c.lo, c.hi, c.conjugator) == (2, 3, ())
    with pytest.raises(ValueError):
        Curve(s, 3, 5)
    with pytest.raises(ValueError):
        Curve(s, 1, 2, (TwistGen(4, 5),))


def test_str():
    s = Surface(0, 5)
    assert str(Curve(s, 1, 2)) == "c(1,2)"
    assert str(Curve(s, 1, 2, (TwistGen(2, 3, -1),))) == "c(1,2) <- [-c(2,3)]"


def test_pi1_class_of_convex_curves():
    s = Surface(0, 5)
    assert pi1_class(convex(s, 1, 3)).letters == (1, 2, 3)
    assert pi1_class(convex(s, 2, 2)).letters == (2,)


def test_pi1_class_of_a_transported_curve():
    # t_{c(2,3)} sends c(1,2) to the curve with class x1 x2 x3 x2 x3^-1 x2^-1
    s = Surface(0, 5)
    c = act_on_curve(TwistGen(2, 3), Curve(s, 1, 2))
    assert pi1_class(c).letters == (1, 2, 3, 2, -3, -2)
    assert homology_class(c) == (1, 1, 0, 0)


def test_homology_class_is_the_run_indicator():
    s = Surface(0, 5)
    assert homology_class(convex(s, 2, 4)) == (0, 1, 1, 1)
    moved = act_on_curve((TwistGen(1, 2), TwistGen(2, 4, -1)),
                         convex(s, 2, 4))
    assert homology_class(moved) == (0, 1, 1, 1)


def test_twists_fix_their_own_curve():
    s = Surface(0, 4)
    c = convex(s, 1, 2)
    assert curves_equal(c, act_on_curve(TwistGen(1, 2), c))
    assert curves_equal(c, act_on_curve(TwistGen(1, 2, -1), c))


def test_single_hole_curves_are_fixed_by_everything():
    s = Surface(0, 5)
    c = convex(s, 3, 3)
    word = (TwistGen(1, 3), TwistGen(2, 4, -1), TwistGen(3, 3))
    assert curves_equal(c, act_on_curve(word, c))


def test_curves_equal_requires_same_surface():
    with pytest.raises(SurfaceMismatchError):
        curves_equal(convex(Surface(0, 4), 1, 2),
                     convex(Surface(0, 5), 1, 2))


def test_act_on_curve_composes():
    s = Surface(0, 5)
    c = convex(s, 1, 2)
    u, v = TwistGen(2, 3), TwistGen(1, 4, -1)
    assert curves_equal(act_on_curve(v, act_on_curve(u, c)),
                        act_on_curve((u, v), c))
    # inverse transport undoes
    assert curves_equal(act_on_curve((u, u.inverted()), c), c)


def test_curve_twist_of_convex_base_is_the_plain_twist():
    s = Surface(0, 5)
    assert equals(curve_twist(convex(s, 2, 4)), twist(s, TwistGen(2, 4)))
    assert equals(curve_twist(convex(s, 2, 4), -1),
                  twist(s, TwistGen(2, 4, -1)))


def test_curve_twist_is_the_conjugated_twist():
    # t_{f(c)} = f t_c f^-1 with f a twist word
    s = Surface(0, 5)
    rng = random.Random(3)
    for _ in range(25):
        lo = rng.randint(1, 4)
        c = convex(s, lo, rng.randint(lo, 4))
        word = tuple(TwistGen(a, rng.randint(a, 4), rng.choice((1, -1)))
                     for a in (rng.randint(1, 4) for _ in range(3)))
        f = twist_word(s, word)
        lhs = curve_twist(act_on_curve(word, c))
        rhs = f * curve_twist(c) * invert(f)
        assert equals(lhs, rhs)


def test_twist_as_word_agrees_with_curve_twist():
    s = Surface(0, 5)
    c = Curve(s, 1, 2, (TwistGen(2, 3), TwistGen(1, 4, -1)))
    for sign in (1, -1):
        assert equals(twist_word(s, twist_as_word(c, sign)),
                      curve_twist(c, sign))


@given(st.integers(1, 4), st.integers(0, 3), st.sampled_from((1, -1)),
       st.lists(st.sampled_from([1, -1, 2, -2, 3, -3, 4, -4]), max_size=10))
def test_gen_image_matches_the_loop_action(lo, span, sign, letters):
    s = Surface(0, 5)
    g = TwistGen(lo, min(lo + span, 4), sign)
    w = reduce(4, letters)
    assert _gen_image(g, w.letters) == loop_action(twist(s, g), w).letters
