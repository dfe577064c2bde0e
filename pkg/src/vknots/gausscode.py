"""Signed oriented Gauss codes: data model, parser, validator, structure.

Grammar (whitespace between tokens is ignored):

    code      := component ("/" component)*
    component := "()" | entry+
    entry     := ("O" | "U") integer ("+" | "-")

Integers are base-10 without leading zeros.  Every crossing label must
occur exactly twice in the whole code, once Over and once Under, with the
same sign at both occurrences.  An empty component "()" is an unknotted,
unlinked circle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations
from typing import NamedTuple


class GaussCodeError(ValueError):
    """Syntax or validation failure for a Gauss code."""


class GaussEntry(NamedTuple):
    passage: str  # "O" or "U"
    label: int
    sign: int  # +1 or -1

    def render(self):
        return f"{self.passage}{self.label}{'+' if self.sign > 0 else '-'}"


class LinkGaussCode:
    """Immutable signed oriented Gauss code of a virtual link."""

    __slots__ = ("components",)

    def __init__(self, components):
        self.components = tuple(tuple(c) for c in components)
        if not self.components:
            raise GaussCodeError("a code needs at least one component")

    def __eq__(self, other):
        if not isinstance(other, LinkGaussCode):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"LinkGaussCode({render_gauss(self)!r})"

    @property
    def labels(self):
        return sorted({e.label for comp in self.components for e in comp})

    @property
    def n_crossings(self):
        return sum(len(c) for c in self.components) // 2

    def sign_of(self, label):
        for comp in self.components:
            for e in comp:
                if e.label == label:
                    return e.sign
        raise GaussCodeError(f"unknown label {label}")

    def entry_positions(self, label):
        """((comp, pos) of the Over entry, (comp, pos) of the Under entry)."""
        over = under = None
        for ci, comp in enumerate(self.components):
            for pi, e in enumerate(comp):
                if e.label == label:
                    if e.passage == "O":
                        over = (ci, pi)
                    else:
                        under = (ci, pi)
        if over is None or under is None:
            raise GaussCodeError(f"label {label} lacks a partner")
        return over, under


_TOKEN = re.compile(r"\s+|\(\)|/|[OU](?:[1-9][0-9]*)[+-]|.", re.DOTALL)
_ENTRY = re.compile(r"([OU])([1-9][0-9]*)([+-])")


def parse_gauss(text):
    """Parse and validate a Gauss code string into a LinkGaussCode."""
    components = [[]]
    saw_empty = [False]
    for m in _TOKEN.finditer(text):
        tok = m.group(0)
        if tok.isspace():
            continue
        if tok == "/":
            components.append([])
            saw_empty.append(False)
            continue
        if tok == "()":
            if components[-1] or saw_empty[-1]:
                raise GaussCodeError(
                    f"position {m.start()}: '()' must stand alone in a component"
                )
            saw_empty[-1] = True
            continue
        em = _ENTRY.fullmatch(tok)
        if not em:
            raise GaussCodeError(f"position {m.start()}: unexpected {tok!r}")
        if saw_empty[-1]:
            raise GaussCodeError(
                f"position {m.start()}: entries after '()' in one component"
            )
        components[-1].append(
            GaussEntry(em.group(1), int(em.group(2)), 1 if em.group(3) == "+" else -1)
        )
    for comp, empty in zip(components, saw_empty):
        if not comp and not empty:
            raise GaussCodeError("empty component; write '()' for a free circle")
    code = LinkGaussCode(components)
    problems = validate_code(code)
    if problems:
        raise GaussCodeError("; ".join(_render_violation(v) for v in problems))
    return code


def render_gauss(code):
    """Deterministic string form; reparses to an equal code."""
    return "/".join(
        "".join(e.render() for e in comp) if comp else "()"
        for comp in code.components
    )


@dataclass(frozen=True)
class Violation:
    kind: str  # MissingPartner | ExtraOccurrence | PassageMismatch | SignMismatch
    label: int


def _render_violation(v):
    return f"{v.kind}({v.label})"


def validate_code(code):
    """All label-pairing violations, as data; empty list iff valid."""
    occurrences = {}
    for comp in code.components:
        for e in comp:
            occurrences.setdefault(e.label, []).append(e)
    out = []
    for label in sorted(occurrences):
        occ = occurrences[label]
        if len(occ) == 1:
            out.append(Violation("MissingPartner", label))
            continue
        if len(occ) > 2:
            out.append(Violation("ExtraOccurrence", label))
            continue
        a, b = occ
        if a.passage == b.passage:
            out.append(Violation("PassageMismatch", label))
        if a.sign != b.sign:
            out.append(Violation("SignMismatch", label))
    return out


def _relabel_key(entry_seq_list):
    """Relabel in first-traversal order; return comparable nested tuple."""
    mapping = {}
    out = []
    for comp in entry_seq_list:
        newcomp = []
        for e in comp:
            if e.label not in mapping:
                mapping[e.label] = len(mapping) + 1
            newcomp.append((e.passage, mapping[e.label], e.sign))
        out.append(tuple(newcomp))
    return tuple(out)


def canonicalize(code):
    """Representative of the orbit under rotation, relabeling, and
    component permutation: the minimal relabeled entry sequence over all
    component orders and rotations."""
    comps = code.components
    empties = sum(1 for c in comps if not c)
    nonempty = [c for c in comps if c]
    best = None
    for order in permutations(range(len(nonempty))):
        for rotations in _rotation_product([len(nonempty[i]) for i in order]):
            seqs = []
            for oi, rot in zip(order, rotations):
                c = nonempty[oi]
                seqs.append(c[rot:] + c[:rot])
            key = _relabel_key(seqs)
            if best is None or key < best:
                best = key
    new_components = [()] * empties
    if best is not None:
        for comp in best:
            new_components.append(
                tuple(GaussEntry(p, lbl, s) for (p, lbl, s) in comp)
            )
    return LinkGaussCode(new_components)


def _rotation_product(lengths):
    if not lengths:
        yield ()
        return
    for r in range(lengths[0]):
        for rest in _rotation_product(lengths[1:]):
            yield (r,) + rest


def canonical_key(code):
    """Stable string identifying the code up to relabeling/rotation/order."""
    return render_gauss(canonicalize(code))


class FlatCode(NamedTuple):
    components: tuple  # tuple of tuples of labels

    def render(self):
        return " / ".join(
            " ".join(str(l) for l in comp) if comp else "()"
            for comp in self.components
        )


def flat_projection(code):
    """Forget passage and sign, keeping only the label pattern."""
    return FlatCode(tuple(tuple(e.label for e in comp) for comp in code.components))


def inter_component_parity(code, i, j):
    """Parity of the number of crossings shared by components i and j.

    Two closed curves in the plane meet transversally an even number of
    times, so classical + virtual inter-component crossings are even in
    any realization; the virtual parity therefore equals the classical
    parity and is computable from the code alone.  Invariant under all
    generalized Reidemeister moves.
    """
    if i == j:
        raise ValueError("components must differ")
    ncomp = len(code.components)
    if not (0 <= i < ncomp and 0 <= j < ncomp):
        raise IndexError("component index out of range")
    li = {e.label for e in code.components[i]}
    lj = {e.label for e in code.components[j]}
    return len(li & lj) % 2


@dataclass(frozen=True)
class EdgeStructure:
    """Edges, arcs, and crossing incidences of a code.

    edges[k] = (component, position): the segment from entry `position`
    to the cyclically next entry of that component.  crossing_edges maps
    each label to (over_in, over_out, under_in, under_out) edge indices.
    arcs are maximal edge runs broken only at Under passages; a non-empty
    component with no Under passage contributes one closed arc (recorded
    in closed_arc_components).  crossing_arcs maps each label to
    (over_arc, under_in_arc, under_out_arc).
    """

    edges: tuple
    arcs: tuple
    crossing_edges: dict
    crossing_arcs: dict
    closed_arc_components: tuple
    free_circles: int


def edge_structure(code):
    edges = []
    edge_index = {}  # (comp, pos) -> global edge id
    free = 0
    for ci, comp in enumerate(code.components):
        if not comp:
            free += 1
            continue
        for pi in range(len(comp)):
            edge_index[(ci, pi)] = len(edges)
            edges.append((ci, pi))
    crossing_edges = {}
    for ci, comp in enumerate(code.components):
        k = len(comp)
        for pi, e in enumerate(comp):
            e_in = edge_index[(ci, (pi - 1) % k)]
            e_out = edge_index[(ci, pi)]
            slot = crossing_edges.setdefault(e.label, [None] * 4)
            if e.passage == "O":
                slot[0], slot[1] = e_in, e_out
            else:
                slot[2], slot[3] = e_in, e_out
    crossing_edges = {l: tuple(v) for l, v in crossing_edges.items()}

    arcs = []
    arc_of_edge = {}
    closed = []
    for ci, comp in enumerate(code.components):
        k = len(comp)
        if k == 0:
            continue
        under_positions = [pi for pi, e in enumerate(comp) if e.passage == "U"]
        if not under_positions:
            arc = tuple(edge_index[(ci, pi)] for pi in range(k))
            for eid in arc:
                arc_of_edge[eid] = len(arcs)
            arcs.append(arc)
            closed.append(ci)
            continue
        # an arc runs from just after one Under passage to the next
        for a_i, start in enumerate(under_positions):
            stop = under_positions[(a_i + 1) % len(under_positions)]
            arc = []
            pi = start
            while True:
                arc.append(edge_index[(ci, pi)])
                pi = (pi + 1) % k
                if pi == stop:
                    break
            arc = tuple(arc)
            for eid in arc:
                arc_of_edge[eid] = len(arcs)
            arcs.append(arc)

    crossing_arcs = {}
    for label, (o_in, o_out, u_in, u_out) in crossing_edges.items():
        crossing_arcs[label] = (
            arc_of_edge[o_out],
            arc_of_edge[u_in],
            arc_of_edge[u_out],
        )
    return EdgeStructure(
        edges=tuple(edges),
        arcs=tuple(arcs),
        crossing_edges=crossing_edges,
        crossing_arcs=crossing_arcs,
        closed_arc_components=tuple(closed),
        free_circles=free,
    )


# --- realizability -------------------------------------------------------
#
# A signed oriented Gauss code determines an abstract 4-valent graph with
# a rotation system: at a positive crossing the counterclockwise order of
# the four edge-ends is (over-in, under-in, over-out, under-out); at a
# negative crossing it is (over-in, under-out, over-out, under-in).  The
# code admits a planar (classical) realization exactly when the closed
# surface built from this rotation system has genus zero on every
# connected piece, which Euler's formula decides after face tracing.

_SLOTS_POS = ("O_in", "U_in", "O_out", "U_out")
_SLOTS_NEG = ("O_in", "U_out", "O_out", "U_in")


def realizability_check(code):
    es = edge_structure(code)
    labels = code.labels
    if not labels:
        return True
    # slot id: (label, k) with k the ccw position 0..3
    slot_of_end = {}  # ("head"/"tail", edge) -> slot
    end_of_slot = {}
    for label in labels:
        o_in, o_out, u_in, u_out = es.crossing_edges[label]
        names = _SLOTS_POS if code.sign_of(label) > 0 else _SLOTS_NEG
        for k, nm in enumerate(names):
            slot = (label, k)
            end = {
                "O_in": ("head", o_in),
                "O_out": ("tail", o_out),
                "U_in": ("head", u_in),
                "U_out": ("tail", u_out),
            }[nm]
            slot_of_end[end] = slot
            end_of_slot[slot] = end
    # darts: (edge, +1) runs tail->head, (edge, -1) runs head->tail
    unused = {(e, d) for e in range(len(es.edges)) for d in (1, -1)}
    faces = {}  # label-connectivity handled after counting per component
    nfaces_per_label_component = None
    # trace all faces
    face_count = 0
    face_labels = []  # set of crossing labels touched by each face
    while unused:
        dart = next(iter(unused))
        touched = set()
        while dart in unused:
            unused.discard(dart)
            edge, direction = dart
            arrive = ("head", edge) if direction == 1 else ("tail", edge)
            label, k = slot_of_end[arrive]
            touched.add(label)
            nxt = (label, (k + 1) % 4)
            kind, e2 = end_of_slot[nxt]
            dart = (e2, 1) if kind == "tail" else (e2, -1)
        face_count += 1
        face_labels.append(touched)
    # connected pieces of the diagram: crossings linked through components
    parent = {l: l for l in labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for comp in code.components:
        for a, b in zip(comp, comp[1:]):
            union(a.label, b.label)
    pieces = {}
    for l in labels:
        pieces.setdefault(find(l), set()).add(l)
    # per piece: V = crossings, E = 2V (each crossing has 4 ends, each edge 2)
    faces_per_piece = {root: 0 for root in pieces}
    for touched in face_labels:
        root = find(next(iter(touched)))
        faces_per_piece[root] += 1
    for root, labs in pieces.items():
        V = len(labs)
        E = 2 * V
        F = faces_per_piece[root]
        if V - E + F != 2:
            return False
    return True
