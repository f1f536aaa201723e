"""Positive factorizations on a planar fiber and the homology of the
total space X and its boundary.

Handle picture: X is F x D2 plus one 2-handle per vanishing cycle, so

    chi(X)  = (2 - b) + n
    H1(X)   = Z^{b-1} / column span of V
    H2(X)   = Z^{n - rank V}            (free; no 3-handles)

where V is the (b-1) x n matrix of cycle homology classes.  For the
boundary, the planar Picard-Lefschetz formula sends each relative arc
class delta_i to delta_i + sum_k <delta_i, alpha_k> [alpha_k]; the
absolute intersection form of a planar surface vanishes, which collapses
H1(dX) to the cokernel of V V^T.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curves import Curve, curve_twist, curves_equal, homology_class
from .intlinalg import AbelianGroup, IntMatrix, cokernel, from_columns, smith_normal_form
from .surface import MappingClass, Surface, equals, identity_class


@dataclass(frozen=True)
class Palf:
    """A fiber plus vanishing cycles in application order: the written
    monodromy product t_{c_n} ... t_{c_1} applies cycles[0] first."""

    fiber: Surface
    cycles: tuple[Curve, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(self.cycles))


def validate(p: Palf) -> list[str]:
    """Violations as data; empty list means valid."""
    problems = []
    for i, c in enumerate(p.cycles):
        if c.surface != p.fiber:
            problems.append(f"cycle {i} lives on {c.surface}, fiber is "
                            f"{p.fiber}")
        elif not any(homology_class(c)):
            # unreachable for curves built through the Curve type, but
            # re-checked for externally ingested data
            problems.append(f"cycle {i} is homologically trivial")
    return problems


def euler_characteristic(p: Palf) -> int:
    return (2 - p.fiber.boundaries) + len(p.cycles)


def cycle_matrix(p: Palf) -> IntMatrix:
    """Columns are the homology classes of the cycles."""
    return from_columns([homology_class(c) for c in p.cycles],
                        p.fiber.nholes)


def total_space_h1(p: Palf) -> AbelianGroup:
    return cokernel(cycle_matrix(p))


def total_space_h2(p: Palf) -> AbelianGroup:
    v = cycle_matrix(p)
    _, rank = smith_normal_form(v)
    return AbelianGroup(v.cols - rank)


def boundary_h1(p: Palf) -> AbelianGroup:
    v = cycle_matrix(p)
    return cokernel(v * v.transpose())


def total_monodromy(p: Palf) -> MappingClass:
    m = identity_class(p.fiber)
    for c in p.cycles:
        m = curve_twist(c) * m
    return m


@dataclass(frozen=True)
class InvariantReport:
    euler: int
    h1_total: AbelianGroup
    h2_total: AbelianGroup
    h1_boundary: AbelianGroup
    cycle_count: int
    fiber_boundaries: int

    def __post_init__(self):
        if self.euler != (2 - self.fiber_boundaries) + self.cycle_count:
            raise ValueError("euler characteristic does not match the "
                             "handle count")

    def rows(self) -> list[tuple[str, str]]:
        return [("euler", str(self.euler)),
                ("h1_total", str(self.h1_total)),
                ("h2_total", str(self.h2_total)),
                ("h1_boundary", str(self.h1_boundary)),
                ("cycle_count", str(self.cycle_count)),
                ("fiber_boundaries", str(self.fiber_boundaries))]


def report(p: Palf) -> InvariantReport:
    return InvariantReport(
        euler=euler_characteristic(p),
        h1_total=total_space_h1(p),
        h2_total=total_space_h2(p),
        h1_boundary=boundary_h1(p),
        cycle_count=len(p.cycles),
        fiber_boundaries=p.fiber.boundaries,
    )


ELEMENTWISE = "elementwise-equal"
MONODROMY = "equal-up-to-total-monodromy"
NEITHER = "neither"


@dataclass(frozen=True)
class CompareRow:
    name: str
    left: str
    right: str
    equal: bool


@dataclass(frozen=True)
class Comparison:
    rows: tuple[CompareRow, ...]
    same_fiber: bool
    elementwise_equal: bool
    monodromy_equal: bool

    @property
    def relation(self) -> str:
        if self.elementwise_equal:
            return ELEMENTWISE
        if self.monodromy_equal:
            return MONODROMY
        return NEITHER

    @property
    def invariants_equal(self) -> bool:
        return all(r.equal for r in self.rows)


def compare(p: Palf, q: Palf) -> Comparison:
    """Invariant-by-invariant diff plus how the factorizations relate:
    elementwise equal curves, equal total monodromy only, or neither."""
    rp, rq = report(p), report(q)
    rows = tuple(CompareRow(name, a, b, a == b)
                 for (name, a), (_, b) in zip(rp.rows(), rq.rows()))
    same_fiber = p.fiber == q.fiber
    elementwise = (same_fiber and len(p.cycles) == len(q.cycles) and
                   all(curves_equal(a, b)
                       for a, b in zip(p.cycles, q.cycles)))
    monodromy = (same_fiber and
                 equals(total_monodromy(p), total_monodromy(q)))
    return Comparison(rows, same_fiber, elementwise, monodromy)
