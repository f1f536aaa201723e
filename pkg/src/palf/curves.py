"""Isotopy classes of essential simple closed curves on the planar fiber.

A curve is stored as a convex round base c_{lo,hi} together with a
conjugating twist word (first generator applied first); the curve itself
is the image of the base under that word.  Every essential simple closed
curve on a planar surface arises this way, and conversely everything
built this way stays embedded, so simplicity never needs checking.

Semantic equality goes through pi1: two simple closed curves are
isotopic iff they are freely homotopic, and free homotopy classes are
conjugacy classes, compared via the cyclic normal form.  The class of an
unoriented curve is the smaller of the normal forms of a representative
and its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .surface import (MappingClass, Surface, TwistGen, _check_same_surface,
                      compose, invert, twist)
from .words import Word, abelianize, unoriented_class


@dataclass(frozen=True)
class Curve:
    surface: Surface
    lo: int
    hi: int
    conjugator: tuple[TwistGen, ...] = ()

    def __post_init__(self):
        n = self.surface.nholes
        if not 1 <= self.lo <= self.hi <= n:
            raise ValueError(f"hole run ({self.lo}, {self.hi}) does not fit "
                             f"on {self.surface}")
        for g in self.conjugator:
            if g.hi > n:
                raise ValueError(f"conjugator twist {g} does not fit on "
                                 f"{self.surface}")

    @cached_property
    def _rep(self) -> Word:
        # a pi1 representative: image of the base run under the conjugator,
        # one generator twist at a time.  Substituting on the single word
        # keeps every intermediate an honest curve image; building the
        # conjugator as one mapping class first can blow up, because its
        # partial products are generic mapping classes with far longer
        # arc coordinates than the composite.
        letters: tuple[int, ...] = tuple(range(self.lo, self.hi + 1))
        for g in self.conjugator:
            letters = _gen_image(g, letters)
        return Word(self.surface.nholes, letters)

    @cached_property
    def _pi1(self) -> Word:
        return unoriented_class(self._rep)

    def __str__(self) -> str:
        word = " ".join(str(g) for g in self.conjugator)
        core = f"c({self.lo},{self.hi})"
        return f"{core} <- [{word}]" if word else core


def _gen_image(g: TwistGen, letters: tuple[int, ...]) -> tuple[int, ...]:
    """Image of a reduced letter sequence under the twist about the plain
    convex curve of ``g``: x_i -> C x_i C^-1 on the enclosed run, identity
    elsewhere (inverses too, since (C x C^-1)^-1 = C x^-1 C^-1).  Reduces
    as it goes; the output is freely reduced whenever the input is."""
    lo, hi = g.lo, g.hi
    run = range(lo, hi + 1)
    conj = tuple(run) if g.sign > 0 else tuple(-i for i in reversed(run))
    back = tuple(-a for a in reversed(conj))
    out: list[int] = []
    for a in letters:
        if lo <= abs(a) <= hi:
            for x in conj:
                if out and out[-1] == -x:
                    out.pop()
                else:
                    out.append(x)
            for x in (a,) + back:
                if out and out[-1] == -x:
                    out.pop()
                else:
                    out.append(x)
        elif out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def convex(surface: Surface, lo: int, hi: int) -> Curve:
    return Curve(surface, lo, hi)


def pi1_class(c: Curve) -> Word:
    """Canonical conjugacy representative of the (unoriented) curve."""
    return c._pi1


def curves_equal(a: Curve, b: Curve) -> bool:
    _check_same_surface(a, b)
    return a._pi1 == b._pi1


def homology_class(c: Curve) -> tuple[int, ...]:
    """Class in H1(F) = Z^{b-1}, sign fixed so the first nonzero entry is
    positive.  Twists act trivially on H1 of a planar surface, so this is
    always the indicator vector of the base run."""
    v = abelianize(c._pi1)
    for entry in v:
        if entry > 0:
            return v
        if entry < 0:
            return tuple(-x for x in v)
    return v


def act_on_curve(f, c: Curve) -> Curve:
    """Image of ``c`` under the twist word ``f`` (applied after the
    curve's own conjugator)."""
    gens = (f,) if isinstance(f, TwistGen) else tuple(f)
    return Curve(c.surface, c.lo, c.hi, c.conjugator + gens)


def curve_twist(c: Curve, sign: int = 1) -> MappingClass:
    """Dehn twist about ``c``: conjugate the base twist by the curve's
    conjugator word, one generator at a time.  Every intermediate is the
    twist about a partially transported curve, which keeps coordinate
    growth tied to the curve itself rather than to the conjugator word."""
    t = twist(c.surface, TwistGen(c.lo, c.hi, sign))
    for g in c.conjugator:
        tg = twist(c.surface, g)
        t = compose(tg, compose(t, invert(tg)))
    return t


def twist_as_word(c: Curve, sign: int = 1) -> tuple[TwistGen, ...]:
    """The twist about ``c`` written as a twist word in application order:
    undo the conjugator, twist about the base, redo the conjugator.
    Useful where a plain word of generators is required, e.g. to transport
    other curves through it."""
    back = tuple(g.inverted() for g in reversed(c.conjugator))
    return back + (TwistGen(c.lo, c.hi, sign),) + c.conjugator
