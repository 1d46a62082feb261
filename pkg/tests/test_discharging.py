from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _corpus import pentagon_ring
from facialchroma.discharging import (
    EULER_TOTAL,
    RULES,
    UNIT,
    apply_rules,
    audit,
    discharge,
    initial_charges,
    render,
)
from facialchroma.embedding import build_from_rotation
from facialchroma.generators import named, random_plane_graph, tight_example, wheel


def finals(ledger):
    return (Counter(render(c) for c in ledger.per_vertex.values()),
            Counter(render(c) for c in ledger.per_face.values()))


def test_rule_constants_in_twelfths():
    as_frac = {k: Fraction(v, UNIT) for k, v in RULES.items()}
    assert as_frac == {"R1safe": Fraction(1, 3), "R1dangerous": Fraction(1, 2),
                       "R2": Fraction(1, 3), "R3": Fraction(1, 6), "R4": Fraction(1, 12),
                       "R5": Fraction(2, 3)}


def test_render_is_exact():
    assert [render(x) for x in (-96, -8, 1, 6, 0)] == ["-8", "-2/3", "1/12", "1/2", "0"]


def test_initial_k4():
    led = initial_charges(named("tetrahedron"))
    assert set(led.per_vertex.values()) == {-UNIT} and set(led.per_face.values()) == {-UNIT}
    assert led.total() == EULER_TOTAL


def test_initial_dodecahedron():
    led = initial_charges(named("dodecahedron"))
    assert sum(led.per_vertex.values()) == -20 * UNIT
    assert sum(led.per_face.values()) == 12 * UNIT


def test_triangle_among_long_faces_ends_at_zero():
    g = tight_example(3)
    led, _ = discharge(g)
    tri = next(f for f in g.faces if f.size == 3)
    assert [f.size for f in g.faces if f.id != tri.id] == [7, 7, 7]
    assert led.per_face[tri.id] == 0
    assert sum(t.target == f"f{tri.id}" and t.rule == "R2" for t in led.transfers) == 3


def test_dodecahedron_final():
    led, rep = discharge(named("dodecahedron"))
    assert finals(led) == (Counter({"0": 20}), Counter({"-2/3": 12}))
    assert rep.conserved and len(rep.negative_faces) == 12


def test_cube_final():
    led, rep = discharge(named("cube"))
    assert finals(led) == (Counter({"-1": 8}), Counter({"0": 6}))
    assert len(rep.negative_vertices) == 8


def test_icosahedron_final():
    led, rep = discharge(named("icosahedron"))
    assert finals(led) == (Counter({"1": 12}), Counter({"-1": 20}))
    assert not led.transfers


def test_pentagonal_prism():
    # every vertex is dangerous (it sits on squares) and meets one pentagon
    rot = {1: [2, 5, 6], 2: [3, 1, 7], 3: [4, 2, 8], 4: [5, 3, 9], 5: [1, 4, 10],
           6: [10, 7, 1], 7: [6, 8, 2], 8: [7, 9, 3], 9: [8, 10, 4], 10: [9, 6, 5]}
    g = build_from_rotation(rot)
    assert sorted(g.face_sizes()) == [4, 4, 4, 4, 4, 5, 5]
    led, _ = discharge(g)
    assert set(render(c) for c in led.per_vertex.values()) == {"-1/2"}
    assert {render(led.per_face[f.id]) for f in g.faces if f.size == 5} == {"-3/2"}


def wheel_without_spokes(n, missing):
    rot = {v: wheel(n).neighbors(v) for v in wheel(n).vertices}
    for r in missing:
        rot[1].remove(r)
        rot[r].remove(1)
    return build_from_rotation(rot)


def test_r5_pays_a_long_face_between_two_triangles():
    g = wheel_without_spokes(10, [4, 5, 6, 7])
    long_face = next(f for f in g.faces if f.size == 7 and 1 in f.vertices)
    led, rep = discharge(g)
    paid = [t for t in led.transfers if t.rule == "R5"]
    assert [(t.source, t.target, t.amount) for t in paid] == [("v1", f"f{long_face.id}", 8)]
    assert rep.small_r5_targets == []


def test_r5_on_a_small_face_is_flagged():
    g = wheel_without_spokes(7, [3])
    led, rep = discharge(g)
    square = next(f for f in g.faces if f.size == 4)
    assert rep.small_r5_targets == [(1, square.id, 4)]
    assert rep.conserved


def test_r5_never_pays_a_triangle():
    led, _ = discharge(named("W9"))
    assert all(t.rule != "R5" for t in led.transfers)
    assert led.per_vertex[1] == UNIT * (9 - 4)


def test_very_bad_pentagon_fed_by_six_and_seven_faces():
    g = pentagon_ring([2, 2, 3, 3, 3])
    pent = next(f for f in g.faces if sorted(f.vertices) == [1, 2, 3, 4, 5])
    led, _ = discharge(g)
    received = sorted((t.rule, t.amount) for t in led.transfers if t.target == f"f{pent.id}")
    assert received == [("R3", 2)] * 3 + [("R4", 1)] * 2
    assert led.per_face[pent.id] == 0


def test_dangerous_vertex_on_two_long_faces_ends_at_zero():
    # C_12 with a triangle hung on edge 1-2: both ends are dangerous
    rot = {i: [i % 12 + 1, (i - 2) % 12 + 1] for i in range(1, 13)}
    rot[1], rot[2], rot[13] = [2, 13, 12], [3, 13, 1], [1, 2]
    led, _ = discharge(build_from_rotation(rot))
    assert led.per_vertex[1] == led.per_vertex[2] == 0


def test_rules_refuse_used_ledger():
    g = named("dodecahedron")
    led = apply_rules(g)
    with pytest.raises(ValueError):
        apply_rules(g, led)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(3, 16), seed=st.integers(0, 10_000), keep=st.floats(0.2, 1.0))
def test_conservation_and_rule_shapes(n, seed, keep):
    g = random_plane_graph(n, seed=seed, keep_prob=keep)
    led = apply_rules(g)
    assert led.total() == EULER_TOTAL
    sizes = {f.id: f.size for f in g.faces}
    for t in led.transfers:
        src = int(t.source[1:])
        if t.rule == "R1":
            assert t.source[0] == "f" and sizes[src] >= 5 and t.amount in (4, 6)
        elif t.rule in ("R2", "R3"):
            assert t.source[0] == "f" and sizes[src] >= 7
        elif t.rule == "R4":
            assert t.source[0] == "f" and sizes[src] == 6 and t.amount == 1
        else:
            assert t.rule == "R5" and t.source[0] == "v" and g.degree(src) >= 5
    again = apply_rules(g)
    assert again.transfers == led.transfers and again.per_face == led.per_face
    assert audit(g, led).bad_amounts == []
