"""End-to-end acceptance checks, one test per shipped guarantee.

Each test is self-contained and enforces its own time budget where the
guarantee names one.  Randomized suites use fixed seeds so runs are
reproducible.
"""

import math
import random
import time
from pathlib import Path

from click.testing import CliRunner

from palf.cli import main
from palf.curves import act_on_curve, convex, curve_twist, curves_equal
from palf.datasets import dataset_text, gen_dataset
from palf.documents import parse, serialize
from palf.fibration import (Palf, boundary_h1, euler_characteristic, report,
                            total_monodromy)
from palf.hurwitz import LEFT, RIGHT, HurwitzMove, apply_move, equivalent_within
from palf.intlinalg import identity_matrix, matrix, smith_normal_form
from palf.relations import runs_disjoint
from palf.surface import (Surface, TwistGen, abelianized_action, compose,
                          equals, identity_class, invert, twist, twist_word)

from oracles import determinant, invariant_factors


def _random_twist_word(rng, nholes, max_len):
    word = []
    for _ in range(rng.randint(0, max_len)):
        lo = rng.randint(1, nholes)
        word.append(TwistGen(lo, rng.randint(lo, nholes),
                             rng.choice((1, -1))))
    return tuple(word)


def _random_disjoint_pair(rng, nholes):
    while True:
        lo1 = rng.randint(1, nholes)
        a = TwistGen(lo1, rng.randint(lo1, nholes))
        lo2 = rng.randint(1, nholes)
        b = TwistGen(lo2, rng.randint(lo2, nholes))
        if runs_disjoint(a, b):
            return a, b


def test_lantern_relation_holds_through_the_cli():
    start = time.perf_counter()
    res = CliRunner().invoke(main, ["relations", "--check", "lantern",
                                    "--boundaries", "4"])
    elapsed = time.perf_counter() - start
    assert res.exit_code == 0
    assert "lantern on surface with 4 boundary components: holds" in res.output
    assert elapsed < 1.0


def test_engine_properties_over_a_thousand_random_cases():
    rng = random.Random(2024)
    cases = 0
    for round_no in range(200):
        s = Surface(0, 4 + round_no % 2)
        n = s.nholes
        f = twist_word(s, _random_twist_word(rng, n, 6))
        g = twist_word(s, _random_twist_word(rng, n, 6))
        h = twist_word(s, _random_twist_word(rng, n, 6))

        # group axioms: associativity, identity, inverses
        assert compose(compose(f, g), h) == compose(f, compose(g, h))
        e = identity_class(s)
        assert compose(f, e) == f == compose(e, f)
        assert compose(f, invert(f)).is_identity
        cases += 3

        # twists are natural: t_{f(c)} = f t_c f^-1
        word = _random_twist_word(rng, n, 6)
        lo = rng.randint(1, n)
        c = convex(s, lo, rng.randint(lo, n))
        fc = twist_word(s, word)
        assert equals(curve_twist(act_on_curve(word, c)),
                      fc * curve_twist(c) * invert(fc))
        cases += 1

        # disjoint twists commute
        a, b = _random_disjoint_pair(rng, n)
        assert equals(compose(twist(s, a), twist(s, b)),
                      compose(twist(s, b), twist(s, a)))
        cases += 1

        # every composed twist word acts trivially on H1 of the fiber
        assert abelianized_action(compose(f, g)) == identity_matrix(n)
        cases += 1
    assert cases >= 1000


def test_w1_is_a_contractible_filling_with_homology_sphere_boundary():
    start = time.perf_counter()
    doc = gen_dataset("w1")
    p = doc.palf()
    assert doc.surface == Surface(0, 5)
    assert len(p.cycles) == 4
    rep = report(p)
    assert rep.euler == 1
    assert rep.h1_total.is_trivial
    assert rep.h2_total.is_trivial
    assert rep.h1_boundary.is_trivial
    assert time.perf_counter() - start < 1.0


def test_c_family_pairs_share_counts_delta_tails_and_reports():
    start = time.perf_counter()
    for m in (-5, -6, -7):
        b = -m + 5
        p1 = gen_dataset("c1", m).palf()
        p2 = gen_dataset("c2", m).palf()
        for p in (p1, p2):
            assert p.fiber == Surface(0, b)
            assert len(p.cycles) == b
            assert euler_characteristic(p) == 2
        deltas1, deltas2 = p1.cycles[6:], p2.cycles[6:]
        assert len(deltas1) == b - 6
        assert all(curves_equal(x, y) for x, y in zip(deltas1, deltas2))
        assert report(p1) == report(p2)
    assert time.perf_counter() - start < 5.0


def test_annulus_open_book_boundary_homology():
    s = Surface(0, 2)
    core = convex(s, 1, 1)
    assert str(boundary_h1(Palf(s, ()))) == "Z"        # S^1 x S^2
    assert str(boundary_h1(Palf(s, (core,)))) == "0"   # S^3
    assert str(boundary_h1(Palf(s, (core, core)))) == "Z/2"  # RP^3


def test_hurwitz_scrambles_preserve_invariants_and_are_recovered():
    rng = random.Random(1)
    start = time.perf_counter()
    for _ in range(200):
        s = Surface(0, rng.randint(4, 5))
        nh = s.nholes
        n = rng.randint(2, 6)
        cycles = []
        for _ in range(n):
            lo = rng.randint(1, nh)
            cycles.append(convex(s, lo, rng.randint(lo, nh)))
        p = Palf(s, tuple(cycles))
        mono = total_monodromy(p)
        rep = report(p)

        k = rng.randint(1, 4)
        q = p
        for _ in range(k):
            mv = HurwitzMove(rng.randrange(n - 1), rng.choice((LEFT, RIGHT)))
            q = apply_move(q, mv)
            assert equals(total_monodromy(q), mono)
            assert report(q) == rep

        witness = equivalent_within(p, q, k)
        assert witness is not None
        assert len(witness) <= k
        r = p
        for mv in witness:
            r = apply_move(r, mv)
        assert all(curves_equal(x, y) for x, y in zip(r.cycles, q.cycles))
    assert time.perf_counter() - start < 60.0


def test_smith_normal_form_agrees_with_the_elementary_oracle():
    rng = random.Random(7)
    for _ in range(500):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        entries = [[rng.randint(-5, 5) for _ in range(cols)]
                   for _ in range(rows)]
        factors, rank = smith_normal_form(matrix(entries))
        assert list(factors) == invariant_factors(entries)
        assert rank == len(factors)
        if rows == cols:
            det = determinant(entries)
            if rank == rows:
                assert math.prod(factors) == abs(det)
            else:
                assert det == 0


def test_format_roundtrip_and_cli_contract():
    bundled = [("w1", None)] + [(w, m) for w in ("c1", "c2")
                                for m in (-5, -6, -7)]
    for which, m in bundled:
        doc = gen_dataset(which, m)
        again = parse(serialize(doc))
        assert again.surface == doc.surface
        p, q = doc.palf(), again.palf()
        assert p.name == q.name
        assert len(p.cycles) == len(q.cycles)
        assert all(curves_equal(a, b) for a, b in zip(p.cycles, q.cycles))

    runner = CliRunner()
    with runner.isolated_filesystem():
        Path("w1.palf").write_text(dataset_text("w1"))
        assert runner.invoke(main, ["validate", "w1.palf"]).exit_code == 0

        first = runner.invoke(main, ["invariants", "w1.palf"])
        second = runner.invoke(main, ["invariants", "w1.palf"])
        assert first.exit_code == 0
        assert first.output == second.output  # deterministic reporting

        Path("bad.palf").write_text("surface 0 4\ncurve a convex 1 9\n")
        assert runner.invoke(main, ["validate", "bad.palf"]).exit_code == 2

        Path("a.palf").write_text(
            "surface 0 4\ncurve a convex 1 2\npalf p a\n")
        Path("b.palf").write_text(
            "surface 0 4\ncurve b convex 2 3\npalf p b\n")
        no_witness = runner.invoke(
            main, ["hurwitz-search", "a.palf", "b.palf", "--depth", "1"])
        assert no_witness.exit_code == 1
