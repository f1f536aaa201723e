"""The operations behind the API endpoints and the CLI subcommands.

Every function takes plain arguments and returns a response model.
PalfParseError propagates to the caller (HTTP 400 / CLI exit 2);
ValueError and KeyError mean a bad request in some other way and get the
same treatment.
"""

from __future__ import annotations

from .. import datasets, fibration, relations, render
from ..documents import PalfDocument, parse
from ..hurwitz import equivalent_within
from ..surface import Surface, abelianized_action
from .models import (CompareResponse, CompareRowModel, GenerateResponse,
                     HurwitzSearchResponse, InvariantRecord,
                     InvariantsResponse, MonodromyResponse, MoveModel,
                     RelationsResponse, RenderResponse, ValidateResponse)


def _pick_palfs(doc: PalfDocument, name: str | None):
    if name is not None:
        return [doc.palf(name)]
    return [doc.palf(n) for n in doc.palf_names]


def validate_text(text: str) -> ValidateResponse:
    doc = parse(text)
    violations = []
    for name in doc.palf_names:
        for v in fibration.validate(doc.palf(name)):
            violations.append(f"{name}: {v}")
    return ValidateResponse(valid=not violations, violations=violations,
                            palfs=doc.palf_names)


def invariants(text: str, palf: str | None = None) -> InvariantsResponse:
    doc = parse(text)
    records = []
    for p in _pick_palfs(doc, palf):
        rep = fibration.report(p)
        records.extend(InvariantRecord(palf=p.name, name=name, value=value)
                       for name, value in rep.rows())
    return InvariantsResponse(records=records)


def monodromy(text: str, palf: str | None = None,
              show: str = "arcs") -> MonodromyResponse:
    doc = parse(text)
    p = doc.palf(palf)
    m = fibration.total_monodromy(p)
    if show == "arcs":
        return MonodromyResponse(palf=p.name,
                                 arcs=[str(w) for w in m.arc_coords])
    if show == "abelianized":
        mat = abelianized_action(m)
        return MonodromyResponse(palf=p.name,
                                 matrix=[list(row) for row in mat.entries])
    raise ValueError(f"show must be 'arcs' or 'abelianized', got {show!r}")


def compare_texts(text_a: str, text_b: str, palf_a: str | None = None,
                  palf_b: str | None = None) -> CompareResponse:
    pa = parse(text_a).palf(palf_a)
    pb = parse(text_b).palf(palf_b)
    cmp = fibration.compare(pa, pb)
    rows = [CompareRowModel(name=r.name, left=r.left, right=r.right,
                            equal=r.equal) for r in cmp.rows]
    return CompareResponse(rows=rows, invariants_equal=cmp.invariants_equal,
                           same_fiber=cmp.same_fiber, relation=cmp.relation)


def hurwitz_search(text_a: str, text_b: str, depth: int,
                   palf_a: str | None = None, palf_b: str | None = None,
                   conjugation: bool = False) -> HurwitzSearchResponse:
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    pa = parse(text_a).palf(palf_a)
    pb = parse(text_b).palf(palf_b)
    witness = equivalent_within(pa, pb, depth, conjugation=conjugation)
    if witness is None:
        return HurwitzSearchResponse(found=False, moves=None, depth=depth)
    moves = [MoveModel(index=m.index, direction=m.direction)
             for m in witness]
    return HurwitzSearchResponse(found=True, moves=moves, depth=depth)


def generate(which: str, m: int | None = None) -> GenerateResponse:
    return GenerateResponse(text=datasets.dataset_text(which, m))


def check_relation(kind: str, boundaries: int) -> RelationsResponse:
    s = Surface(0, boundaries)
    if kind == "lantern":
        holds = relations.verify_lantern(s)
    elif kind == "commuting":
        holds = relations.commuting_sweep(s)
    elif kind == "conjugation":
        holds = relations.conjugation_sweep(s)
    else:
        raise ValueError(f"unknown relation kind {kind!r}")
    return RelationsResponse(kind=kind, boundaries=boundaries, holds=holds)


def render_text(text: str, palf: str | None = None) -> RenderResponse:
    doc = parse(text)
    return RenderResponse(svg=render.render_svg(doc, palf))
