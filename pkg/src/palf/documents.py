"""The ``.palf`` text format: parser and serializer.

Line oriented; ``#`` starts a comment anywhere on a line.  Directives:

    surface <genus> <boundaries>
    curve <name> convex <lo> <hi>
    curve <name> from <base-name> apply <signed-twist> [<signed-twist> ...]
    palf <name> [<curve name in application order> ...]

A signed twist is ``+c(lo,hi)`` or ``-c(lo,hi)``; the apply list is read
left to right, first twist applied first.  Names must be declared before
use, duplicates are rejected, and every hole index must fit the declared
surface.  Exactly one surface line is allowed and it must come first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence, Union

from .curves import Curve, act_on_curve
from .fibration import Palf
from .surface import Surface, TwistGen, UnsupportedGenusError

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_TWIST_RE = re.compile(r"^([+-])c\((\d+),(\d+)\)$")


class PalfParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, col {column}: {message}")


@dataclass(frozen=True)
class ConvexDecl:
    name: str
    lo: int
    hi: int


@dataclass(frozen=True)
class DerivedDecl:
    name: str
    base: str
    word: tuple[TwistGen, ...]


CurveDecl = Union[ConvexDecl, DerivedDecl]


@dataclass(frozen=True)
class PalfDecl:
    name: str
    cycles: tuple[str, ...]


@dataclass(frozen=True)
class PalfDocument:
    surface: Surface
    curve_decls: tuple[CurveDecl, ...]
    palf_decls: tuple[PalfDecl, ...]

    def __post_init__(self):
        # programmatic construction gets the same checks as the parser,
        # minus the line numbers
        curves = self.curves()
        seen: set[str] = set()
        for d in self.palf_decls:
            if d.name in seen:
                raise ValueError(f"duplicate palf name {d.name!r}")
            seen.add(d.name)
            for ref in d.cycles:
                if ref not in curves:
                    raise ValueError(f"undeclared curve {ref!r} in palf "
                                     f"{d.name!r}")

    def curves(self) -> dict[str, Curve]:
        out: dict[str, Curve] = {}
        for d in self.curve_decls:
            if d.name in out:
                raise ValueError(f"duplicate curve name {d.name!r}")
            if isinstance(d, ConvexDecl):
                out[d.name] = Curve(self.surface, d.lo, d.hi)
            else:
                if d.base not in out:
                    raise ValueError(f"undeclared base curve {d.base!r}")
                out[d.name] = act_on_curve(d.word, out[d.base])
        return out

    def curve(self, name: str) -> Curve:
        curves = self.curves()
        if name not in curves:
            raise KeyError(f"no curve named {name!r}")
        return curves[name]

    @property
    def palf_names(self) -> list[str]:
        return [d.name for d in self.palf_decls]

    def palf(self, name: str | None = None) -> Palf:
        if name is None:
            if len(self.palf_decls) != 1:
                raise ValueError(
                    "document declares "
                    f"{len(self.palf_decls)} factorizations; name one of "
                    f"{self.palf_names}")
            decl = self.palf_decls[0]
        else:
            match = [d for d in self.palf_decls if d.name == name]
            if not match:
                raise KeyError(f"no factorization named {name!r}")
            decl = match[0]
        curves = self.curves()
        return Palf(self.surface, tuple(curves[c] for c in decl.cycles),
                    decl.name)


def _tokens(line: str) -> list[tuple[str, int]]:
    body = line.split("#", 1)[0]
    return [(m.group(0), m.start() + 1)
            for m in re.finditer(r"\S+", body)]


def _int(tok: str, lineno: int, col: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise PalfParseError(lineno, col, f"{what} must be an integer, "
                                          f"got {tok!r}") from None


def _twist_token(tok: str, lineno: int, col: int,
                 nholes: int) -> TwistGen:
    m = _TWIST_RE.match(tok)
    if not m:
        raise PalfParseError(lineno, col,
                             f"bad twist {tok!r}, expected +c(lo,hi) or "
                             "-c(lo,hi)")
    sign = 1 if m.group(1) == "+" else -1
    lo, hi = int(m.group(2)), int(m.group(3))
    if not 1 <= lo <= hi <= nholes:
        raise PalfParseError(lineno, col,
                             f"twist run ({lo},{hi}) out of range, holes "
                             f"are 1..{nholes}")
    return TwistGen(lo, hi, sign)


def parse(text: str) -> PalfDocument:
    surface: Surface | None = None
    curve_decls: list[CurveDecl] = []
    names: set[str] = set()
    palf_decls: list[PalfDecl] = []
    palf_names: set[str] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        head, hcol = toks[0]

        if head == "surface":
            if surface is not None:
                raise PalfParseError(lineno, hcol,
                                     "duplicate surface declaration")
            if curve_decls or palf_decls:
                raise PalfParseError(lineno, hcol,
                                     "surface must be declared first")
            if len(toks) != 3:
                raise PalfParseError(lineno, hcol,
                                     "expected: surface <genus> <boundaries>")
            genus = _int(toks[1][0], lineno, toks[1][1], "genus")
            bnd = _int(toks[2][0], lineno, toks[2][1], "boundary count")
            try:
                surface = Surface(genus, bnd)
            except UnsupportedGenusError:
                raise PalfParseError(
                    lineno, toks[1][1],
                    f"unsupported genus {genus}: only genus 0 surfaces are "
                    "modeled") from None
            except ValueError as e:
                raise PalfParseError(lineno, toks[2][1], str(e)) from None
            continue

        if surface is None:
            raise PalfParseError(lineno, hcol,
                                 "surface must be declared before "
                                 f"{head!r}")

        if head == "curve":
            if len(toks) < 3:
                raise PalfParseError(lineno, hcol,
                                     "expected: curve <name> convex <lo> "
                                     "<hi> | curve <name> from <base> "
                                     "apply <twists>")
            name, ncol = toks[1]
            if not _NAME_RE.match(name):
                raise PalfParseError(lineno, ncol, f"bad name {name!r}")
            if name in names:
                raise PalfParseError(lineno, ncol,
                                     f"duplicate curve name {name!r}")
            kind, kcol = toks[2]
            if kind == "convex":
                if len(toks) != 5:
                    raise PalfParseError(lineno, kcol,
                                         "expected: curve <name> convex "
                                         "<lo> <hi>")
                lo = _int(toks[3][0], lineno, toks[3][1], "lo")
                hi = _int(toks[4][0], lineno, toks[4][1], "hi")
                if not 1 <= lo <= hi <= surface.nholes:
                    raise PalfParseError(lineno, toks[3][1],
                                         f"hole run ({lo},{hi}) out of "
                                         "range, holes are "
                                         f"1..{surface.nholes}")
                curve_decls.append(ConvexDecl(name, lo, hi))
            elif kind == "from":
                if len(toks) < 6 or toks[4][0] != "apply":
                    raise PalfParseError(lineno, kcol,
                                         "expected: curve <name> from "
                                         "<base> apply <twists>")
                base, bcol = toks[3]
                if base not in names:
                    raise PalfParseError(lineno, bcol,
                                         f"undeclared base curve {base!r}")
                word = tuple(_twist_token(t, lineno, c, surface.nholes)
                             for t, c in toks[5:])
                curve_decls.append(DerivedDecl(name, base, word))
            else:
                raise PalfParseError(lineno, kcol,
                                     f"expected 'convex' or 'from', got "
                                     f"{kind!r}")
            names.add(name)
            continue

        if head == "palf":
            if len(toks) < 2:
                raise PalfParseError(lineno, hcol,
                                     "expected: palf <name> [<curves>]")
            name, ncol = toks[1]
            if not _NAME_RE.match(name):
                raise PalfParseError(lineno, ncol, f"bad name {name!r}")
            if name in palf_names:
                raise PalfParseError(lineno, ncol,
                                     f"duplicate palf name {name!r}")
            refs = []
            for tok, col in toks[2:]:
                if tok not in names:
                    raise PalfParseError(lineno, col,
                                         f"undeclared curve {tok!r}")
                refs.append(tok)
            palf_decls.append(PalfDecl(name, tuple(refs)))
            palf_names.add(name)
            continue

        raise PalfParseError(lineno, hcol, f"unknown directive {head!r}")

    if surface is None:
        raise PalfParseError(1, 1, "missing surface declaration")
    return PalfDocument(surface, tuple(curve_decls), tuple(palf_decls))


def serialize(doc: PalfDocument, header: Sequence[str] = ()) -> str:
    lines = [f"# {h}" if h else "#" for h in header]
    lines.append(f"surface {doc.surface.genus} {doc.surface.boundaries}")
    for d in doc.curve_decls:
        if isinstance(d, ConvexDecl):
            lines.append(f"curve {d.name} convex {d.lo} {d.hi}")
        else:
            word = " ".join(str(g) for g in d.word)
            lines.append(f"curve {d.name} from {d.base} apply {word}")
    for p in doc.palf_decls:
        lines.append(" ".join(["palf", p.name, *p.cycles]))
    return "\n".join(lines) + "\n"
