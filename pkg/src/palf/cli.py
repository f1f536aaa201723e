"""Command line front end.

Exit codes, kept stable for CI: 0 success, 1 validation-type failure
(violations found, relation does not hold, no Hurwitz witness within
depth), 2 parse or usage errors.
"""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from .documents import PalfParseError
from .service import operations as ops


def _read(path: str) -> str:
    return Path(path).read_text()


def _write(path: str | None, text: str) -> None:
    if path is None:
        click.echo(text, nl=False)
    else:
        Path(path).write_text(text)


def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except PalfParseError as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(2)
        except (ValueError, KeyError) as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(2)
    return wrapper


@click.group()
@click.version_option(package_name="palf")
def main():
    """Genus-zero positive allowable Lefschetz fibrations.

    Exit codes: 0 success, 1 validation failure (or relation fails /
    no witness found), 2 parse or usage error.
    """


_FILE = click.Path(exists=True, dir_okay=False)


@main.command()
@click.argument("file", type=_FILE)
@_guarded
def validate(file):
    """Parse FILE and check every declared factorization."""
    res = ops.validate_text(_read(file))
    if res.valid:
        listing = ", ".join(res.palfs) if res.palfs else "none declared"
        click.echo(f"OK ({len(res.palfs)} factorization(s): {listing})")
    else:
        for v in res.violations:
            click.echo(v)
        sys.exit(1)


@main.command()
@click.argument("file", type=_FILE)
@click.option("--palf", default=None, help="Restrict to one factorization.")
@click.option("--format", "fmt", type=click.Choice(["text", "json-lines"]),
              default="text", show_default=True)
@_guarded
def invariants(file, palf, fmt):
    """Euler characteristic and homology of the total space and boundary."""
    res = ops.invariants(_read(file), palf)
    if fmt == "json-lines":
        for r in res.records:
            click.echo(json.dumps(
                {"palf": r.palf, "name": r.name, "value": r.value},
                sort_keys=True))
        return
    current = None
    for r in res.records:
        if r.palf != current:
            click.echo(f"{r.palf}:")
            current = r.palf
        click.echo(f"  {r.name:<18} {r.value}")


@main.command()
@click.argument("file", type=_FILE)
@click.option("--palf", default=None)
@click.option("--show", type=click.Choice(["arcs", "abelianized"]),
              default="arcs", show_default=True)
@_guarded
def monodromy(file, palf, show):
    """Total monodromy of a factorization (composition, last cycle
    outermost)."""
    res = ops.monodromy(_read(file), palf, show)
    if res.arcs is not None:
        click.echo(f"{res.palf} monodromy, arc coordinates:")
        for i, w in enumerate(res.arcs, start=1):
            click.echo(f"  d{i}: {w}")
    else:
        click.echo(f"{res.palf} monodromy on H1(F):")
        for row in res.matrix:
            click.echo("  " + " ".join(str(x) for x in row))


@main.command()
@click.argument("file_a", type=_FILE)
@click.argument("file_b", type=_FILE)
@click.option("--palf-a", default=None)
@click.option("--palf-b", default=None)
@_guarded
def compare(file_a, file_b, palf_a, palf_b):
    """Invariant-by-invariant diff of two factorizations."""
    res = ops.compare_texts(_read(file_a), _read(file_b), palf_a, palf_b)
    for r in res.rows:
        mark = "equal" if r.equal else "DIFFERENT"
        click.echo(f"{r.name:<18} {r.left:>10}  {r.right:>10}  {mark}")
    click.echo(f"factorizations: {res.relation}")


@main.command(name="hurwitz-search")
@click.argument("file_a", type=_FILE)
@click.argument("file_b", type=_FILE)
@click.option("--depth", type=click.IntRange(min=0), required=True)
@click.option("--conjugation", is_flag=True,
              help="Also match up to global conjugation by twist words "
                   "of length <= 2.")
@click.option("--palf-a", default=None)
@click.option("--palf-b", default=None)
@_guarded
def hurwitz_search(file_a, file_b, depth, conjugation, palf_a, palf_b):
    """Breadth-first search for a Hurwitz move sequence from A to B.

    Exits 0 with the minimal witness when found, 1 when nothing is found
    within the depth (which proves nothing).
    """
    res = ops.hurwitz_search(_read(file_a), _read(file_b), depth,
                             palf_a, palf_b, conjugation)
    if res.found:
        if res.moves:
            seq = " ".join(("L" if m.direction == "left" else "R") +
                           str(m.index) for m in res.moves)
        else:
            seq = "(already equal)"
        click.echo(f"witness ({len(res.moves)} move(s)): {seq}")
    else:
        click.echo(f"no witness within depth {depth}")
        sys.exit(1)


@main.command()
@click.argument("which", type=click.Choice(["w1", "c1", "c2"]))
@click.option("--m", "m", type=int, default=None,
              help="Family parameter for c1/c2, must be <= -5 "
                   "[default: -5].")
@click.option("-o", "--output", type=click.Path(dir_okay=False),
              default=None, help="Write to a file instead of stdout.")
@_guarded
def gen(which, m, output):
    """Generate a bundled dataset as a .palf document."""
    res = ops.generate(which, m)
    _write(output, res.text)


@main.command()
@click.option("--check", "kind",
              type=click.Choice(["lantern", "commuting", "conjugation"]),
              required=True)
@click.option("--boundaries", type=click.IntRange(min=2), default=4,
              show_default=True)
@_guarded
def relations(kind, boundaries):
    """Verify a mapping-class relation through the engine.

    lantern: the four-boundary lantern relation with all-positive twists.
    commuting: disjoint convex twists commute, intersecting ones do not.
    conjugation: t_{f(c)} = f t_c f^-1 across the generator sweep.
    """
    res = ops.check_relation(kind, boundaries)
    verdict = "holds" if res.holds else "FAILS"
    click.echo(f"{kind} on surface with {boundaries} boundary "
               f"components: {verdict}")
    if not res.holds:
        sys.exit(1)


@main.command()
@click.argument("file", type=_FILE)
@click.option("--palf", default=None)
@click.option("-o", "--output", type=click.Path(dir_okay=False),
              default=None, help="Write SVG to a file instead of stdout.")
@_guarded
def render(file, palf, output):
    """Draw the curve system of a factorization as SVG."""
    res = ops.render_text(_read(file), palf)
    _write(output, res.svg)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Serve the HTTP API (see palf.service.app)."""
    import uvicorn

    uvicorn.run("palf.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
