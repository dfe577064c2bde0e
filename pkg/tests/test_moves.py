import random

import pytest

from vknots.gausscode import canonical_key, parse_gauss, render_gauss, validate_code
from vknots.invariants import f_polynomial
from vknots.moves import (
    MOVE_KINDS,
    apply_move,
    descending_switch_set,
    enumerate_sites,
    random_walk,
    switch_crossing,
    virt_construction,
    virtualize_crossing,
)

from conftest import random_code

TREFOIL = "O1+U2+O3+U1+O2+U3+"
VTREF = "O1+O2+U1+U2+"


def seeds():
    return [
        parse_gauss(t)
        for t in ("O1+U1+", TREFOIL, VTREF, "O1+U2+/U1+O2+", "O1+/U1+")
    ]


# --- site enumeration and validity --------------------------------------------


def test_move_kinds_complete():
    assert set(MOVE_KINDS) == {
        "R1Add",
        "R1Remove",
        "R2Add",
        "R2Remove",
        "R3",
        "ForbiddenOver",
    }


@pytest.mark.parametrize("kind", MOVE_KINDS)
def test_every_applied_move_is_valid(rng, kind):
    for n in range(1, 5):
        code = random_code(rng, n)
        for site in enumerate_sites(code, kind)[:20]:
            new = apply_move(code, site)
            assert validate_code(new) == [], (render_gauss(code), site)


def test_kink_has_r1_remove():
    code = parse_gauss("O1+U1+")
    sites = enumerate_sites(code, "R1Remove")
    assert sites
    assert render_gauss(apply_move(code, sites[0])) == "()"


def test_trefoil_has_no_r3():
    assert enumerate_sites(parse_gauss(TREFOIL), "R3") == []


def test_r2_remove_needs_opposite_signs():
    # same-sign adjacent pairs are not an R2 face
    code = parse_gauss("O1+O2+U1+U2+")
    assert enumerate_sites(code, "R2Remove") == []


# --- inverse round-trips ----------------------------------------------------------


def test_r1_add_then_remove_roundtrip(rng):
    for n in range(0, 4):
        code = random_code(rng, n)
        key = canonical_key(code)
        for site in enumerate_sites(code, "R1Add")[:10]:
            grown = apply_move(code, site)
            back = {
                canonical_key(apply_move(grown, s))
                for s in enumerate_sites(grown, "R1Remove")
            }
            assert key in back


def test_r2_add_then_remove_roundtrip(rng):
    for n in range(0, 4):
        code = random_code(rng, n)
        key = canonical_key(code)
        for site in enumerate_sites(code, "R2Add")[:12]:
            grown = apply_move(code, site)
            back = {
                canonical_key(apply_move(grown, s))
                for s in enumerate_sites(grown, "R2Remove")
            }
            assert key in back, (render_gauss(code), site)


def test_r3_is_involution(rng):
    found = 0
    for trial in range(300):
        code = random_code(random.Random(trial), random.Random(trial).randint(3, 5))
        for site in enumerate_sites(code, "R3"):
            moved = apply_move(code, site)
            again = {
                canonical_key(apply_move(moved, s))
                for s in enumerate_sites(moved, "R3")
            }
            assert canonical_key(code) in again
            found += 1
        if found > 10:
            break
    assert found > 0, "no R3 sites found in the sample"


def test_forbidden_over_is_involution():
    code = parse_gauss(TREFOIL)
    for site in enumerate_sites(code, "ForbiddenOver"):
        moved = apply_move(code, site)
        back = {
            canonical_key(apply_move(moved, s))
            for s in enumerate_sites(moved, "ForbiddenOver")
        }
        assert canonical_key(code) in back


# --- random walks -----------------------------------------------------------------


def test_random_walk_reproducible():
    code = parse_gauss(TREFOIL)
    w1 = random_walk(code, 8, seed=5, max_crossings=6)
    w2 = random_walk(code, 8, seed=5, max_crossings=6)
    assert [render_gauss(c) for c in w1] == [render_gauss(c) for c in w2]


def test_random_walk_respects_cap():
    code = parse_gauss(TREFOIL)
    for c in random_walk(code, 30, seed=1, max_crossings=5):
        assert c.n_crossings <= 5
        assert validate_code(c) == []


def test_random_walk_zero_steps():
    code = parse_gauss(VTREF)
    assert random_walk(code, 0, seed=0) == [code]


# --- switching and virtualization ---------------------------------------------------


def test_switch_crossing_swaps_passages_and_sign():
    code = parse_gauss("O1+U1+")
    s = switch_crossing(code, 1)
    assert render_gauss(s) == "U1-O1-"


def test_virtualize_crossing_flips_sign_only():
    code = parse_gauss("O1+U1+")
    v = virtualize_crossing(code, 1)
    assert render_gauss(v) == "O1-U1-"


def test_switch_virtualize_same_f(rng):
    # the displayed equality: switching and virtualizing a crossing give
    # diagrams with the same f-polynomial
    for n in range(1, 5):
        code = random_code(rng, n)
        for label in sorted(code.labels):
            assert f_polynomial(virtualize_crossing(code, label)) == f_polynomial(
                switch_crossing(code, label)
            )


def test_descending_switch_set_trefoil():
    code = parse_gauss(TREFOIL)
    # scanning O1 U2 O3 U1 O2 U3: label 2 is first met as Under
    assert descending_switch_set(code) == {2}


def test_virt_construction_classical_unit_f():
    for text in ("O1+U1+", TREFOIL):
        virt = virt_construction(parse_gauss(text))
        assert f_polynomial(virt).render() == "1"


def test_virt_construction_canonicalizes_first():
    code = parse_gauss(TREFOIL)
    rotated = parse_gauss("U1+O2+U3+O1+U2+O3+")
    assert canonical_key(virt_construction(code)) == canonical_key(
        virt_construction(rotated)
    )
