"""Relation checks that witness the engine's correctness: the lantern
relation, commutation of disjoint twists, and conjugation naturality.

The lantern needs a curve that no convex-curve twist word can reach: the
round curves about holes {1,2}, {2,3} and the curve enclosing {1} and
{3} while dodging hole 2.  That last one has homology class e1 + e3,
and twist words cannot change homology classes on a planar surface, so
it lies outside the twist orbit of any convex curve.  We reach it with a
half twist that swaps two holes.  Half twists permute the boundary, so
they get their own small representation here; conjugating a genuine
twist by a half twist lands back in Map(F, dF) and the boundary
ambiguity of the half-twist lift cancels.
"""

from __future__ import annotations

from typing import Sequence

from .curves import Curve, act_on_curve, curve_twist
from .surface import (MappingClass, Surface, TwistGen, compose, equals,
                      invert, twist, twist_word)
from .words import Word


class Braided:
    """Mapping class that may permute the holes: arc delta_i maps to
    w_i . delta_{perm(i)}.  Loop action: x_i -> w_i x_{perm(i)} w_i^-1."""

    __slots__ = ("surface", "perm", "coords", "iperm", "icoords")

    def __init__(self, surface: Surface, perm: tuple[int, ...],
                 coords: tuple[Word, ...], iperm: tuple[int, ...],
                 icoords: tuple[Word, ...]):
        self.surface = surface
        self.perm = perm
        self.coords = coords
        self.iperm = iperm
        self.icoords = icoords

    def apply(self, w: Word) -> Word:
        out: list[int] = []
        for a in w.letters:
            u = self.coords[abs(a) - 1].letters
            target = self.perm[abs(a) - 1] * (1 if a > 0 else -1)
            for c in u + (target,) + tuple(-c for c in reversed(u)):
                if out and out[-1] == -c:
                    out.pop()
                else:
                    out.append(c)
        return Word(w.rank, tuple(out))

    def __mul__(self, other: "Braided") -> "Braided":
        # self after other
        g, f = self, other
        n = g.surface.nholes
        perm = tuple(g.perm[f.perm[i] - 1] for i in range(n))
        coords = tuple(g.apply(f.coords[i]) * g.coords[f.perm[i] - 1]
                       for i in range(n))
        finv = f.inverse()
        ginv = g.inverse()
        iperm = tuple(finv.perm[ginv.perm[i] - 1] for i in range(n))
        icoords = tuple(finv.apply(ginv.coords[i]) * finv.coords[ginv.perm[i] - 1]
                        for i in range(n))
        return Braided(g.surface, perm, coords, iperm, icoords)

    def inverse(self) -> "Braided":
        return Braided(self.surface, self.iperm, self.icoords,
                       self.perm, self.coords)

    def to_mapping_class(self) -> MappingClass:
        if self.perm != tuple(range(1, self.surface.nholes + 1)):
            raise ValueError("class permutes the holes, not in Map(F, dF)")
        return MappingClass(self.surface, self.coords, self.icoords)


def braided(m: MappingClass) -> Braided:
    ident = tuple(range(1, m.surface.nholes + 1))
    return Braided(m.surface, ident, m.arc_coords, ident, m.inv_coords)


def half_twist(surface: Surface, k: int, sign: int = 1) -> Braided:
    """Right-handed half twist swapping holes k and k+1 (sign -1 for the
    left-handed one)."""
    n = surface.nholes
    if not 1 <= k <= n - 1:
        raise ValueError(f"half twist at {k} does not fit on {surface}")
    perm = list(range(1, n + 1))
    perm[k - 1], perm[k] = perm[k], perm[k - 1]
    e = Word(n, ())
    co = [e] * n
    ico = [e] * n
    co[k - 1] = Word(n, (k,))
    ico[k] = Word(n, (-(k + 1),))
    pos = Braided(surface, tuple(perm), tuple(co), tuple(perm), tuple(ico))
    return pos if sign > 0 else pos.inverse()


def lantern_third_twist(surface: Surface) -> MappingClass:
    """Twist about the curve enclosing holes 1 and 3 behind hole 2,
    realized as the half-twist conjugate  sigma_2^-1 t_{c_{1,2}} sigma_2."""
    s = half_twist(surface, 2)
    t12 = braided(twist(surface, TwistGen(1, 2)))
    return (s.inverse() * t12 * s).to_mapping_class()


def verify_lantern(surface: Surface) -> bool:
    """t_{c_{1,1}} t_{c_{2,2}} t_{c_{3,3}} t_{c_{1,3}} = t_a t_b t_c with
    a = c_{1,2}, b = c_{2,3} and c the {1,3}-enclosing curve; rightmost
    factor applied first, all twists positive."""
    if surface.boundaries != 4:
        raise ValueError("the lantern relation lives on the 4-holed sphere "
                         f"(disk with 3 holes), got {surface}")
    t = lambda lo, hi: twist(surface, TwistGen(lo, hi))
    lhs = t(1, 1) * t(2, 2) * t(3, 3) * t(1, 3)
    rhs = t(1, 2) * t(2, 3) * lantern_third_twist(surface)
    return equals(lhs, rhs)


def runs_disjoint(a: TwistGen, b: TwistGen) -> bool:
    """Whether the convex curves can be drawn disjoint: interval runs are
    disjoint as curves iff the hole sets are nested or do not meet."""
    if a.hi < b.lo or b.hi < a.lo:
        return True
    return (a.lo <= b.lo and b.hi <= a.hi) or (b.lo <= a.lo and a.hi <= b.hi)


def verify_commuting(surface: Surface, a: TwistGen, b: TwistGen) -> bool:
    ta, tb = twist(surface, a), twist(surface, b)
    return equals(compose(ta, tb), compose(tb, ta))


def verify_conjugation(surface: Surface, f: Sequence[TwistGen],
                       c: TwistGen) -> bool:
    """t_{f(c)} = f t_c f^-1, with the left side computed through the
    curve layer and the right side through plain group arithmetic."""
    m = twist_word(surface, f)
    lhs = compose(m, compose(twist(surface, c), invert(m)))
    image = act_on_curve(f, Curve(surface, c.lo, c.hi))
    return equals(lhs, curve_twist(image, c.sign))


def verify_relation(kind: str, surface: Surface, **params) -> bool:
    """Dispatcher used by the service layer and the CLI.

    kinds: ``lantern`` (no params, b = 4); ``commuting`` (params a, b:
    TwistGen); ``conjugation`` (params f: sequence of TwistGen, c:
    TwistGen).
    """
    if kind == "lantern":
        if params:
            raise ValueError("lantern takes no parameters")
        return verify_lantern(surface)
    if kind == "commuting":
        return verify_commuting(surface, params["a"], params["b"])
    if kind == "conjugation":
        return verify_conjugation(surface, params["f"], params["c"])
    raise ValueError(f"unknown relation kind {kind!r}")


def commuting_sweep(surface: Surface) -> bool:
    """Every disjoint pair of convex twists commutes and every
    essentially intersecting pair does not."""
    n = surface.nholes
    gens = [TwistGen(lo, hi) for lo in range(1, n + 1)
            for hi in range(lo, n + 1)]
    for i, a in enumerate(gens):
        for b in gens[i:]:
            want = runs_disjoint(a, b)
            if verify_commuting(surface, a, b) != want:
                return False
    return True


def conjugation_sweep(surface: Surface) -> bool:
    """Naturality t_{f(c)} = f t_c f^-1 over all single-generator f
    (both signs) and all convex c."""
    n = surface.nholes
    gens = [TwistGen(lo, hi) for lo in range(1, n + 1)
            for hi in range(lo, n + 1)]
    for c in gens:
        for g in gens:
            for sign in (1, -1):
                if not verify_conjugation(surface,
                                          (TwistGen(g.lo, g.hi, sign),), c):
                    return False
    return True
