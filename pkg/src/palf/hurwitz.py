"""Hurwitz moves on positive factorizations and a bounded search for a
move sequence connecting two of them.

With cycles in application order (cycles[0] applied first), the right
move at i uses t_b t_a = t_{t_b(a)} t_b:

    (..., a, b, ...)  ->  (..., b, t_b(a), ...)

and the left move is its inverse, (a, b) -> (t_a^-1(b), a).  Both leave
the composed monodromy untouched, which is the defining property and is
what the tests lean on.

The search never composes mapping classes: a state holds, per cycle, a
pi1 representative and the twist about the cycle written as a twist
word.  Transporting a representative walks that word one generator at a
time, and transporting the twist itself is word concatenation.  Twists
about complicated curves have arc coordinates quadratic in the curve
length, so building them as mapping classes inside the search blows up.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .curves import (Curve, _gen_image, act_on_curve, pi1_class,
                     twist_as_word)
from .fibration import Palf
from .surface import SurfaceMismatchError, TwistGen
from .words import Word, unoriented_class

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class HurwitzMove:
    index: int  # acts on the adjacent pair (cycles[index], cycles[index+1])
    direction: str

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"negative move index {self.index}")
        if self.direction not in (LEFT, RIGHT):
            raise ValueError(f"direction must be {LEFT!r} or {RIGHT!r}")

    def __str__(self) -> str:
        return f"{'L' if self.direction == LEFT else 'R'}{self.index}"


def apply_move(p: Palf, m: HurwitzMove) -> Palf:
    if m.index > len(p.cycles) - 2:
        raise IndexError(f"move {m} out of range for {len(p.cycles)} cycles")
    return Palf(p.fiber, _apply_pair(tuple(p.cycles), m), p.name)


def _apply_pair(cycles: tuple, m: HurwitzMove) -> tuple:
    i = m.index
    a, b = cycles[i], cycles[i + 1]
    if m.direction == RIGHT:
        pair = (b, act_on_curve(twist_as_word(b, 1), a))
    else:
        pair = (act_on_curve(twist_as_word(a, -1), b), a)
    return cycles[:i] + pair + cycles[i + 2:]


def _state_key(cycles) -> tuple:
    return tuple(pi1_class(c).letters for c in cycles)


def _moves(n: int) -> list[HurwitzMove]:
    # fixed enumeration order so witnesses are deterministic:
    # by index, left before right
    return [HurwitzMove(i, d) for i in range(n - 1) for d in (LEFT, RIGHT)]


class _Cyc(NamedTuple):
    """One cycle inside a search state."""

    rep: Word                     # pi1 representative of the curve
    key: tuple[int, ...]          # canonical class letters, for dedup
    tws: tuple[TwistGen, ...]     # twist about the curve, as a twist word


def _inv_word(tws: tuple[TwistGen, ...]) -> tuple[TwistGen, ...]:
    return tuple(g.inverted() for g in reversed(tws))


def _cat(*words: tuple[TwistGen, ...]) -> tuple[TwistGen, ...]:
    """Concatenate twist words, cancelling adjacent inverse generators.
    Conjugated twist words cancel heavily at the junctions, and keeping
    them short keeps later transports cheap."""
    out: list[TwistGen] = []
    for tws in words:
        for g in tws:
            if out and out[-1].lo == g.lo and out[-1].hi == g.hi \
                    and out[-1].sign == -g.sign:
                out.pop()
            else:
                out.append(g)
    return tuple(out)


def _transport(tws: tuple[TwistGen, ...], w: Word) -> Word:
    letters = w.letters
    for g in tws:
        letters = _gen_image(g, letters)
    return Word(w.rank, letters)


def _cyc(rep: Word, tws: tuple[TwistGen, ...]) -> _Cyc:
    return _Cyc(rep, unoriented_class(rep).letters, tws)


def _cyc_from_curve(c: Curve) -> _Cyc:
    return _Cyc(c._rep, pi1_class(c).letters, twist_as_word(c, 1))


def _child(state: tuple, m: HurwitzMove) -> tuple:
    i = m.index
    a, b = state[i], state[i + 1]
    if m.direction == RIGHT:
        # a' = t_b(a), so t_{a'} = t_b t_a t_b^-1
        rep = _transport(b.tws, a.rep)
        pair = (b, _cyc(rep, _cat(_inv_word(b.tws), a.tws, b.tws)))
    else:
        # b' = t_a^-1(b), so t_{b'} = t_a^-1 t_b t_a
        inv = _inv_word(a.tws)
        rep = _transport(inv, b.rep)
        pair = (_cyc(rep, _cat(a.tws, b.tws, inv)), a)
    return state[:i] + pair + state[i + 2:]


def _conjugated_keys(cycles, gens) -> set:
    """State keys of all global conjugates by twist words of length <= 2."""
    keys = {_state_key(cycles)}
    words = [(g,) for g in gens]
    words += [(g, h) for g in gens for h in gens]
    for u in words:
        keys.add(_state_key(tuple(act_on_curve(u, c) for c in cycles)))
    return keys


def equivalent_within(p: Palf, q: Palf, depth: int,
                      conjugation: bool = False) -> Optional[list[HurwitzMove]]:
    """Breadth-first search for a move sequence of length <= depth taking
    p's cycles elementwise (by curve equality) to q's.

    Returns the minimal witness, ties broken by lexicographic move order
    (index, then left before right); None when nothing is found, which is
    not a proof of inequivalence.  With ``conjugation`` the target is
    also matched up to global conjugation by twist words of length <= 2.
    """
    if p.fiber != q.fiber:
        raise SurfaceMismatchError(f"{p.fiber} vs {q.fiber}")
    if len(p.cycles) != len(q.cycles):
        return None
    n = len(p.cycles)
    if conjugation:
        nh = p.fiber.nholes
        gens = [TwistGen(lo, hi, s) for lo in range(1, nh + 1)
                for hi in range(lo, nh + 1) for s in (1, -1)]
        targets = _conjugated_keys(q.cycles, gens)
    else:
        targets = {_state_key(q.cycles)}

    start = tuple(_cyc_from_curve(c) for c in p.cycles)
    if tuple(c.key for c in start) in targets:
        return []
    moves = _moves(n)
    visited = {tuple(c.key for c in start)}
    frontier: list[tuple[tuple, list[HurwitzMove]]] = [(start, [])]
    for _ in range(depth):
        nxt: list[tuple[tuple, list[HurwitzMove]]] = []
        for state, path in frontier:
            for mv in moves:
                child = _child(state, mv)
                key = tuple(c.key for c in child)
                if key in visited:
                    continue
                visited.add(key)
                if key in targets:
                    return path + [mv]
                nxt.append((child, path + [mv]))
        if not nxt:
            break
        frontier = nxt
    return None
