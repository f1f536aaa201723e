"""Deterministic SVG pictures of a factorization's curve system.

The fiber is a round disk with its holes on the horizontal diameter.
Each cycle appears as an ellipse around its convex base run, nested
ellipses pushed outward so repeated or containing runs stay visible.  A
cycle whose curve carries a conjugator is drawn as its base with the
twist word spelled out in the label; no geometric realization of the
twisted curve is attempted.

Output is built from document data alone, so rendering the same document
twice gives byte-identical SVG.
"""

from __future__ import annotations

from .documents import PalfDocument

_DX = 70          # hole spacing
_HOLE_R = 12
_STEP = 7         # nesting offset between stacked ellipses


def _fmt(x: float) -> str:
    return f"{x:.1f}".rstrip("0").rstrip(".")


def render_svg(doc: PalfDocument, palf_name: str | None = None) -> str:
    p = doc.palf(palf_name)
    curves = doc.curves()
    decl = next(d for d in doc.palf_decls if d.name == p.name)

    nh = doc.surface.nholes
    size = _DX * (nh + 1)
    cy = size / 2
    cx = [0.0] * (nh + 1)  # 1-based hole centers
    for i in range(1, nh + 1):
        cx[i] = _DX * i

    out = []
    out.append(f'<svg xmlns="http://www.w3.org/2000/svg" '
               f'width="{_fmt(size)}" height="{_fmt(size)}" '
               f'viewBox="0 0 {_fmt(size)} {_fmt(size)}">')
    out.append(f'  <circle class="boundary outer" cx="{_fmt(cy)}" '
               f'cy="{_fmt(cy)}" r="{_fmt(size / 2 - 5)}" fill="none" '
               f'stroke="black"/>')
    for i in range(1, nh + 1):
        out.append(f'  <circle class="boundary hole" cx="{_fmt(cx[i])}" '
                   f'cy="{_fmt(cy)}" r="{_HOLE_R}" fill="none" '
                   f'stroke="black"/>')
        out.append(f'  <text class="hole-label" x="{_fmt(cx[i])}" '
                   f'y="{_fmt(cy + 4)}" text-anchor="middle" '
                   f'font-size="10">{i}</text>')

    drawn: list[tuple[int, int]] = []
    for name in decl.cycles:
        c = curves[name]
        depth = sum(1 for (lo, hi) in drawn if lo <= c.lo and c.hi <= hi)
        drawn.append((c.lo, c.hi))
        pad = _HOLE_R + 6 + _STEP * depth
        ex = (cx[c.lo] + cx[c.hi]) / 2
        rx = (cx[c.hi] - cx[c.lo]) / 2 + pad
        ry = float(pad)
        out.append(f'  <ellipse class="cycle" cx="{_fmt(ex)}" '
                   f'cy="{_fmt(cy)}" rx="{_fmt(rx)}" ry="{_fmt(ry)}" '
                   f'fill="none" stroke="crimson"/>')
        label = name
        if c.conjugator:
            word = " ".join(str(g) for g in c.conjugator)
            label = f"{name} [{word}]"
        out.append(f'  <text class="cycle-label" x="{_fmt(ex)}" '
                   f'y="{_fmt(cy - ry - 2)}" text-anchor="middle" '
                   f'font-size="9">{label}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"
