"""Planar surfaces and a faithful model of their mapping class groups.

The surface is a disk with holes: boundary 0 is the outer circle and the
holes 1..b-1 sit left to right on a horizontal axis.  pi1 is free of rank
b-1, with x_i the loop around hole i, and the product x1 x2 ... x_{b-1}
is freely homotopic to the outer boundary.

A mapping class f fixing the boundary pointwise is recorded by where it
sends the standard vertical arcs delta_i from the outer boundary down to
hole i: f(delta_i) differs from delta_i by a loop w_i, and the tuple
(w_1, ..., w_{b-1}) determines f completely (the arcs cut the surface
into a disk, so the Alexander method applies).  This sees boundary
twists, which the induced free-group automorphism x_i -> w_i x_i w_i^-1
alone does not.

The inverse's coordinates are carried alongside so that inversion is a
swap instead of an automorphism inversion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .intlinalg import IntMatrix, from_columns
from .words import Word, WordError, abelianize, identity as identity_word, reduce as reduce_word


class UnsupportedGenusError(ValueError):
    """Only genus zero is modeled; anything else is refused loudly."""


class SurfaceMismatchError(ValueError):
    """Operands live on different surfaces."""


@dataclass(frozen=True)
class Surface:
    genus: int
    boundaries: int

    def __post_init__(self):
        if self.genus != 0:
            raise UnsupportedGenusError(
                f"genus {self.genus} not supported: the arc-coordinate model "
                "is planar only")
        if self.boundaries < 2:
            raise ValueError(f"need at least 2 boundary components, got "
                             f"{self.boundaries}")

    @property
    def nholes(self) -> int:
        return self.boundaries - 1

    def __str__(self) -> str:
        return f"Sigma_{{0,{self.boundaries}}}"


@dataclass(frozen=True)
class TwistGen:
    """A signed Dehn twist about the convex round curve c_{lo,hi} that
    encloses the consecutive holes lo..hi.  sign +1 is right-handed."""

    lo: int
    hi: int
    sign: int = 1

    def __post_init__(self):
        if not 1 <= self.lo <= self.hi:
            raise ValueError(f"bad hole run ({self.lo}, {self.hi})")
        if self.sign not in (1, -1):
            raise ValueError(f"twist sign must be +1 or -1, got {self.sign}")

    def inverted(self) -> "TwistGen":
        return TwistGen(self.lo, self.hi, -self.sign)

    def __str__(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}c({self.lo},{self.hi})"


def _check_same_surface(a, b) -> None:
    if a.surface != b.surface:
        raise SurfaceMismatchError(f"{a.surface} vs {b.surface}")


def _substitute(coords: Sequence[tuple[int, ...]], letters: Iterable[int],
                rank: int) -> Word:
    # apply x_i -> w_i x_i w_i^-1 letter by letter, reducing as we go;
    # the same piece works for inverse letters since phi(x^-1) = w x^-1 w^-1
    out: list[int] = []
    for a in letters:
        w = coords[abs(a) - 1]
        for c in w + (a,) + tuple(-c for c in reversed(w)):
            if out and out[-1] == -c:
                out.pop()
            else:
                out.append(c)
    return Word(rank, tuple(out))


class MappingClass:
    """Element of Map(F, dF) in arc coordinates.

    ``arc_coords[i-1]`` is the loop prefix of the image of arc delta_i.
    Equality compares arc coordinates; that is a complete invariant.
    """

    __slots__ = ("surface", "arc_coords", "inv_coords", "_hash")

    def __init__(self, surface: Surface, arc_coords: tuple[Word, ...],
                 inv_coords: tuple[Word, ...]):
        object.__setattr__(self, "surface", surface)
        object.__setattr__(self, "arc_coords", arc_coords)
        object.__setattr__(self, "inv_coords", inv_coords)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("MappingClass is immutable")

    @property
    def is_identity(self) -> bool:
        return all(w.is_identity for w in self.arc_coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MappingClass):
            return NotImplemented
        return (self.surface == other.surface and
                self.arc_coords == other.arc_coords)

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash",
                               hash((self.surface, self.arc_coords)))
        return self._hash

    def __mul__(self, other: "MappingClass") -> "MappingClass":
        return compose(self, other)

    def inverse(self) -> "MappingClass":
        return invert(self)

    def __repr__(self) -> str:
        coords = ", ".join(str(w) for w in self.arc_coords)
        return f"MappingClass({self.surface}; {coords})"


def identity_class(surface: Surface) -> MappingClass:
    e = tuple(identity_word(surface.nholes) for _ in range(surface.nholes))
    return MappingClass(surface, e, e)


def from_arc_coords(surface: Surface, arc_coords: Sequence[Word],
                    inv_coords: Sequence[Word]) -> MappingClass:
    """Build a mapping class from explicit coordinate data, validating that
    the two tuples really are inverse to each other and that the loop
    action preserves the peripheral class."""
    n = surface.nholes
    if len(arc_coords) != n or len(inv_coords) != n:
        raise WordError("coordinate tuple length must equal the hole count")
    for w in (*arc_coords, *inv_coords):
        if w.rank != n:
            raise WordError(f"word rank {w.rank} does not match {n} holes")
    f = MappingClass(surface, tuple(arc_coords), tuple(inv_coords))
    if not (f * invert(f)).is_identity or not (invert(f) * f).is_identity:
        raise ValueError("coordinate tuples are not mutually inverse")
    if not preserves_peripheral(f):
        raise ValueError("loop action does not preserve the peripheral class")
    return f


def twist(surface: Surface, g: TwistGen) -> MappingClass:
    """Dehn twist about the convex curve c_{lo,hi}.

    For sign +1 every arc into the enclosed run picks up the full loop
    C = x_lo ... x_hi around the run; sign -1 inserts C^-1.
    """
    n = surface.nholes
    if g.hi > n:
        raise ValueError(f"twist {g} does not fit on {surface}")
    c = tuple(range(g.lo, g.hi + 1))
    ci = tuple(-i for i in reversed(c))
    if g.sign < 0:
        c, ci = ci, c
    e: tuple[int, ...] = ()
    co = tuple(Word(n, c if g.lo <= i <= g.hi else e) for i in range(1, n + 1))
    ico = tuple(Word(n, ci if g.lo <= i <= g.hi else e) for i in range(1, n + 1))
    return MappingClass(surface, co, ico)


def twist_word(surface: Surface, gens: Iterable[TwistGen]) -> MappingClass:
    """Compose a sequence of signed twists, first element applied first."""
    m = identity_class(surface)
    for g in gens:
        m = compose(twist(surface, g), m)
    return m


def compose(g: MappingClass, f: MappingClass) -> MappingClass:
    """g after f.  New coordinates: u_i = phi_g(w_i^f) . w_i^g."""
    _check_same_surface(g, f)
    n = g.surface.nholes
    fc = tuple(w.letters for w in f.arc_coords)
    gc = tuple(w.letters for w in g.arc_coords)
    coords = tuple(_substitute(gc, fc[i], n) * g.arc_coords[i]
                   for i in range(n))
    # (g f)^-1 = f^-1 g^-1, same formula on the stored inverse data
    gi = tuple(w.letters for w in g.inv_coords)
    fi = tuple(w.letters for w in f.inv_coords)
    inv = tuple(_substitute(fi, gi[i], n) * f.inv_coords[i]
                for i in range(n))
    return MappingClass(g.surface, coords, inv)


def invert(f: MappingClass) -> MappingClass:
    return MappingClass(f.surface, f.inv_coords, f.arc_coords)


def equals(f: MappingClass, g: MappingClass) -> bool:
    _check_same_surface(f, g)
    return f.arc_coords == g.arc_coords


def loop_action(f: MappingClass, w: Word) -> Word:
    """Induced automorphism of pi1 applied to ``w``: x_i -> w_i x_i w_i^-1."""
    n = f.surface.nholes
    if w.rank != n:
        raise WordError(f"word rank {w.rank} does not match {n} holes")
    return _substitute(tuple(v.letters for v in f.arc_coords), w.letters, n)


def peripheral_word(surface: Surface) -> Word:
    return reduce_word(surface.nholes, tuple(range(1, surface.nholes + 1)))


def preserves_peripheral(f: MappingClass) -> bool:
    """The loop action must send x1...x_{b-1} to a conjugate of itself."""
    from .words import cyclic_normal_form
    p = peripheral_word(f.surface)
    return cyclic_normal_form(loop_action(f, p)) == cyclic_normal_form(p)


def abelianized_action(f: MappingClass) -> IntMatrix:
    """Action on H1(F) = Z^{b-1}; identity for every planar mapping class,
    computed honestly from the loop action."""
    n = f.surface.nholes
    cols = [abelianize(loop_action(f, reduce_word(n, (i,))))
            for i in range(1, n + 1)]
    return from_columns(cols, n)
