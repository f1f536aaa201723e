"""Bundled fibration families: W1 on the five-boundary fiber and the
pair C1(m), C2(m) on the fiber with -m+5 boundary components (m <= -5).

The exact vanishing-cycle curves of these families exist only as
pictures elsewhere; the words generated here are reconstructions pinned
down by everything stated about the families in text: fiber and cycle
counts, the delta tail shared verbatim by C1 and C2, and the homology
the totals must have (W1 contractible with homology-sphere boundary;
C1(m) and C2(m) with identical invariant reports).  Any curve system
meeting those constraints is equally valid data for this tool.

C2's gamma cycles are the C1 beta cycles pushed around by per-curve
conjugators, so both families share the cycle homology matrix (hence all
reports) while the factorizations differ elementwise.  gamma_4 is the
one exception: it is a curve around a single hole, and such curves are
fixed by every twist word, so it coincides with beta_4 in any
presentation of this shape.
"""

from __future__ import annotations

from .documents import ConvexDecl, DerivedDecl, PalfDecl, PalfDocument, serialize
from .surface import Surface, TwistGen

FAMILIES = ("w1", "c1", "c2")

_PROVENANCE = (
    "Curve words in this file are a reconstruction: they are pinned by the",
    "documented constraints of the family (fiber and cycle counts and the",
    "required homology of the total space and its boundary), not traced",
    "from any drawing.",
)
_PROVENANCE_C = (
    "The delta cycles are shared verbatim between C1 and C2; the gamma",
    "cycles of C2 are the C1 betas moved by per-curve conjugators, so both",
    "families carry identical invariant reports without being elementwise",
    "equal.",
)

# beta base runs; beta_4 is the boundary-parallel curve around hole 2
_BETA_RUNS = ((1, 2), (2, 3), (3, 4), (2, 2), (4, 5), (5, 6))

# per-curve conjugators turning beta_i into gamma_i (index 4 stays put)
_GAMMA_WORDS = {
    1: (TwistGen(2, 3),),
    2: (TwistGen(3, 4),),
    3: (TwistGen(2, 3),),
    5: (TwistGen(5, 6),),
    6: (TwistGen(4, 5),),
}


def w1_document() -> PalfDocument:
    s = Surface(0, 5)
    decls = (ConvexDecl("a1", 1, 2), ConvexDecl("a2", 2, 3),
             ConvexDecl("a3", 3, 4), ConvexDecl("a4", 2, 2))
    return PalfDocument(s, decls,
                        (PalfDecl("W1", ("a1", "a2", "a3", "a4")),))


def _delta_decls(boundaries: int) -> list[ConvexDecl]:
    # delta_j encloses holes 6..j-1, for j = 7..boundaries
    return [ConvexDecl(f"d{j}", 6, j - 1)
            for j in range(7, boundaries + 1)]


def c1_document(m: int) -> PalfDocument:
    b = -m + 5
    s = Surface(0, b)
    decls = [ConvexDecl(f"b{i}", lo, hi)
             for i, (lo, hi) in enumerate(_BETA_RUNS, start=1)]
    decls += _delta_decls(b)
    cycles = tuple(f"b{i}" for i in range(1, 7)) + \
        tuple(f"d{j}" for j in range(7, b + 1))
    return PalfDocument(s, tuple(decls), (PalfDecl("C1", cycles),))


def c2_document(m: int) -> PalfDocument:
    b = -m + 5
    s = Surface(0, b)
    decls: list = []
    for i, (lo, hi) in enumerate(_BETA_RUNS, start=1):
        if i in _GAMMA_WORDS:
            decls.append(ConvexDecl(f"b{i}", lo, hi))
            decls.append(DerivedDecl(f"g{i}", f"b{i}", _GAMMA_WORDS[i]))
        else:
            decls.append(ConvexDecl(f"g{i}", lo, hi))
    decls += _delta_decls(b)
    cycles = tuple(f"g{i}" for i in range(1, 7)) + \
        tuple(f"d{j}" for j in range(7, b + 1))
    return PalfDocument(s, tuple(decls), (PalfDecl("C2", cycles),))


def gen_dataset(which: str, m: int | None = None) -> PalfDocument:
    """``w1`` takes no parameter; ``c1``/``c2`` need m <= -5."""
    if which == "w1":
        if m is not None:
            raise ValueError("w1 has no parameter m")
        return w1_document()
    if which in ("c1", "c2"):
        if m is None:
            m = -5
        if m > -5:
            raise ValueError(f"m must be <= -5, got {m}")
        return c1_document(m) if which == "c1" else c2_document(m)
    raise ValueError(f"unknown dataset {which!r}, expected one of "
                     f"{FAMILIES}")


def dataset_text(which: str, m: int | None = None) -> str:
    doc = gen_dataset(which, m)
    if which == "w1":
        header = ["Family W1 on the 5-boundary fiber.", *_PROVENANCE]
    else:
        header = [f"Family {which.upper()} with m = "
                  f"{m if m is not None else -5} on the "
                  f"{doc.surface.boundaries}-boundary fiber; label "
                  "convention (m, 1, 3, 0).",
                  *_PROVENANCE, *_PROVENANCE_C]
    return serialize(doc, header)
