"""Finite quandles and biquandles, and coloring-count invariants.

A finite biquandle is a set {0..n-1} with four binary operations,
written ``a^b`` (up), ``a_b`` (down), ``a^{b-bar}`` (upbar), and
``a_{b-bar}`` (downbar), satisfying axioms that transcribe the
generalized Reidemeister moves.  Diagram edges carry labels; at a
positive crossing with under-input a and over-input b, the under-output
is a^b and the over-output is b_a; a negative crossing imposes the same
shape with the barred operations.

An involutory quandle (IQ) labels arcs instead of edges: an arc runs
between consecutive under-passages, and the relation at every crossing
(independent of sign, by involutivity) is (under-out) = (under-in) |> (over).

Coloring counts are computed by label propagation with branching only
at genuinely free choices; the search is exact and budgeted.
"""

import os
from dataclasses import dataclass, field

from .gausscode import GaussCodeError, edge_structure

BUDGET_ENV_VAR = "VKNOTS_COLOR_BUDGET"
DEFAULT_COLOR_BUDGET = 10**8


class ColoringBudgetError(RuntimeError):
    """Raised when a coloring search would exceed its node budget."""


def _color_budget():
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_COLOR_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise ValueError(
            f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}"
        ) from None


# --- structures -----------------------------------------------------------


@dataclass(frozen=True)
class FiniteBiquandle:
    """Four n-by-n operation tables over the carrier {0..n-1}.

    up[a][b] = a^b, down[a][b] = a_b, upbar[a][b] = a^{b-bar},
    downbar[a][b] = a_{b-bar}.  Tables are tuples of tuples.
    """

    n: int
    up: tuple
    down: tuple
    upbar: tuple
    downbar: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        for table in (self.up, self.down, self.upbar, self.downbar):
            if len(table) != self.n or any(len(row) != self.n for row in table):
                raise ValueError("operation table is not n-by-n")
            if any(not (0 <= v < self.n) for row in table for v in row):
                raise ValueError("operation table value out of range")


@dataclass(frozen=True)
class FiniteQuandle:
    """One n-by-n table for a |> b plus an involutory flag."""

    n: int
    table: tuple
    involutory: bool
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.table) != self.n or any(len(r) != self.n for r in self.table):
            raise ValueError("operation table is not n-by-n")
        if any(not (0 <= v < self.n) for row in self.table for v in row):
            raise ValueError("operation table value out of range")


# --- biquandle axioms -----------------------------------------------------
#
# Axiom 1: for every a there exist x and y with
#     x = a_x,  a = x^a    and    y = a^{y-bar},  a = y_{a-bar}.
# Axiom 2 (four cancellation identities, composing left to right):
#     (a^b)^{(b_a)-bar} = a        (b_a)_{(a^b)-bar} = b
#     (a^{b-bar})^{b_{a-bar}} = a  (b_{a-bar})_{a^{b-bar}} = b
# Axiom 3: for all a, b there exist x, y with
#     x_b = a,  y^{a-bar} = b,  b^x = y,  a_{y-bar} = x
# and z, t with
#     t^a = b,  a_t = z,  z_{b-bar} = a,  b^{z-bar} = t.
# The biquandle is *strong* when these solutions are unique.
# Axiom 4 (set-theoretic Yang-Baxter, right operations):
#     a^{bc} = a^{(c_b)(b^c)}
#     c_{ba} = c_{(a^b)(b_a)}
#     (b_a)^{c_{a^b}} = (b^c)_{a^{c_b}}
# and the same three equations with every up/down replaced by upbar/downbar.
# Stacked exponents and subscripts compose sequentially: a^{bc} = (a^b)^c.


def check_biquandle_axioms(bq):
    """Return a list of human-readable violation strings (empty iff valid)."""
    n = bq.n
    rng = range(n)
    up, down, upbar, downbar = bq.up, bq.down, bq.upbar, bq.downbar
    bad = []

    for a in rng:
        if not any(x == down[a][x] and a == up[x][a] for x in rng):
            bad.append(f"axiom 1: no x with x = a_x and a = x^a for a={a}")
        if not any(y == upbar[a][y] and a == downbar[y][a] for y in rng):
            bad.append(
                f"axiom 1: no y with y = a^(y-bar) and a = y_(a-bar) for a={a}"
            )

    for a in rng:
        for b in rng:
            if upbar[up[a][b]][down[b][a]] != a:
                bad.append(f"axiom 2: (a^b)^((b_a)-bar) != a at a={a}, b={b}")
            if downbar[down[b][a]][up[a][b]] != b:
                bad.append(f"axiom 2: (b_a)_((a^b)-bar) != b at a={a}, b={b}")
            if up[upbar[a][b]][downbar[b][a]] != a:
                bad.append(f"axiom 2: (a^(b-bar))^(b_(a-bar)) != a at a={a}, b={b}")
            if down[downbar[b][a]][upbar[a][b]] != b:
                bad.append(f"axiom 2: (b_(a-bar))_(a^(b-bar)) != b at a={a}, b={b}")

    for a in rng:
        for b in rng:
            first = [
                (x, y)
                for x in rng
                for y in rng
                if down[x][b] == a
                and upbar[y][a] == b
                and up[b][x] == y
                and downbar[a][y] == x
            ]
            if not first:
                bad.append(f"axiom 3: no (x, y) solution at a={a}, b={b}")
            second = [
                (z, t)
                for z in rng
                for t in rng
                if up[t][a] == b
                and down[a][t] == z
                and downbar[z][b] == a
                and upbar[b][z] == t
            ]
            if not second:
                bad.append(f"axiom 3: no (z, t) solution at a={a}, b={b}")

    for a in rng:
        for b in rng:
            for c in rng:
                if up[up[a][b]][c] != up[up[a][down[c][b]]][up[b][c]]:
                    bad.append(
                        f"axiom 4: a^(bc) != a^((c_b)(b^c)) at a={a}, b={b}, c={c}"
                    )
                if down[down[c][b]][a] != down[down[c][up[a][b]]][down[b][a]]:
                    bad.append(
                        f"axiom 4: c_(ba) != c_((a^b)(b_a)) at a={a}, b={b}, c={c}"
                    )
                if (
                    up[down[b][a]][down[c][up[a][b]]]
                    != down[up[b][c]][up[a][down[c][b]]]
                ):
                    bad.append(
                        "axiom 4: (b_a)^(c_(a^b)) != (b^c)_(a^(c_b))"
                        f" at a={a}, b={b}, c={c}"
                    )
                if upbar[upbar[a][b]][c] != upbar[upbar[a][downbar[c][b]]][upbar[b][c]]:
                    bad.append(
                        "axiom 4 (left ops): a^(bc) != a^((c_b)(b^c))"
                        f" at a={a}, b={b}, c={c}"
                    )
                if (
                    downbar[downbar[c][b]][a]
                    != downbar[downbar[c][upbar[a][b]]][downbar[b][a]]
                ):
                    bad.append(
                        "axiom 4 (left ops): c_(ba) != c_((a^b)(b_a))"
                        f" at a={a}, b={b}, c={c}"
                    )
                if (
                    upbar[downbar[b][a]][downbar[c][upbar[a][b]]]
                    != downbar[upbar[b][c]][upbar[a][downbar[c][b]]]
                ):
                    bad.append(
                        "axiom 4 (left ops): (b_a)^(c_(a^b)) != (b^c)_(a^(c_b))"
                        f" at a={a}, b={b}, c={c}"
                    )
    return bad


def is_strong_biquandle(bq):
    """True when the axiom-3 solutions (x, y) and (z, t) are unique."""
    n = bq.n
    rng = range(n)
    up, down, upbar, downbar = bq.up, bq.down, bq.upbar, bq.downbar
    for a in rng:
        for b in rng:
            first = sum(
                1
                for x in rng
                for y in rng
                if down[x][b] == a
                and upbar[y][a] == b
                and up[b][x] == y
                and downbar[a][y] == x
            )
            second = sum(
                1
                for z in rng
                for t in rng
                if up[t][a] == b
                and down[a][t] == z
                and downbar[z][b] == a
                and upbar[b][z] == t
            )
            if first != 1 or second != 1:
                return False
    return True


def make_alexander_biquandle_modp(p, s, t):
    """Linear biquandle on Z_p: a^b = ta + (1-st)b, a_b = sa, barred via inverses."""
    s %= p
    t %= p
    d, s_inv, _ = _egcd(s, p)
    if d != 1:
        raise ValueError(f"s={s} is not a unit mod {p}")
    d, t_inv, _ = _egcd(t, p)
    if d != 1:
        raise ValueError(f"t={t} is not a unit mod {p}")
    s_inv %= p
    t_inv %= p
    up = tuple(
        tuple((t * a + (1 - s * t) * b) % p for b in range(p)) for a in range(p)
    )
    down = tuple(tuple((s * a) % p for _b in range(p)) for a in range(p))
    upbar = tuple(
        tuple((t_inv * a + (1 - s_inv * t_inv) * b) % p for b in range(p))
        for a in range(p)
    )
    downbar = tuple(tuple((s_inv * a) % p for _b in range(p)) for a in range(p))
    return FiniteBiquandle(
        n=p,
        up=up,
        down=down,
        upbar=upbar,
        downbar=downbar,
        name=f"alexander-mod{p}-s{s}-t{t}",
    )


def _egcd(a, b):
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def make_dihedral_quandle(n):
    """Dihedral quandle R_n: a |> b = 2b - a mod n (always involutory)."""
    if n < 1:
        raise ValueError("quandle size must be at least 1")
    table = tuple(tuple((2 * b - a) % n for b in range(n)) for a in range(n))
    return FiniteQuandle(n=n, table=table, involutory=True, name=f"dihedral-{n}")


# --- coloring counts ------------------------------------------------------
#
# Both counters run the same budgeted backtracking search: variables are
# edge (or arc) labels, constraints are the crossing relations.  After
# every tentative assignment, constraint propagation forces every value
# determined by a crossing whose other inputs are known; branching happens
# only when no value is forced.


def _search_count(n_vars, q, constraints, var_constraints, budget):
    """Count assignments of {0..q-1} to n_vars satisfying all constraints.

    Each constraint is a callable taking the assignment list (entries may
    be None) and returning ``False`` (violated), ``True`` (satisfied or
    undetermined), or ``("force", var, value)`` to propagate a forced
    value.  var_constraints[v] lists constraint indices mentioning v.
    """
    assign = [None] * n_vars
    nodes = 0

    def propagate(trail):
        queue = list(range(len(constraints)))
        while queue:
            ci = queue.pop()
            res = constraints[ci](assign)
            if res is False:
                return False
            if res is True:
                continue
            _tag, var, value = res
            if assign[var] is None:
                assign[var] = value
                trail.append(var)
                queue.extend(var_constraints[var])
            elif assign[var] != value:
                return False
        return True

    def undo(trail):
        for var in trail:
            assign[var] = None

    def recurse():
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise ColoringBudgetError(
                f"coloring search exceeded budget of {budget} nodes"
                f" (override with {BUDGET_ENV_VAR})"
            )
        try:
            var = assign.index(None)
        except ValueError:
            return 1
        total = 0
        for value in range(q):
            assign[var] = value
            trail = []
            if propagate(trail):
                total += recurse()
            undo(trail)
            assign[var] = None
        return total

    trail = []
    if not propagate(trail):
        return 0
    forced = [v for v in range(n_vars) if assign[v] is not None]
    result = recurse()
    for var in forced:
        assign[var] = None
    return result


def _relation_constraint(out_var, in1, in2, table):
    """Constraint: assign[out_var] == table[assign[in1]][assign[in2]]."""

    def check(assign):
        a, b = assign[in1], assign[in2]
        if a is None or b is None:
            return True
        want = table[a][b]
        got = assign[out_var]
        if got is None:
            return ("force", out_var, want)
        return got == want

    return check


def count_biquandle_colorings(code, bq):
    """Number of edge labelings satisfying the crossing relations.

    Positive crossing, under-input a, over-input b: under-out = a^b,
    over-out = b_a.  Negative crossings use the barred operations.
    Every free circle contributes a factor of n (one unconstrained label).
    """
    struct = edge_structure(code)
    n_edges = len(struct.edges)
    constraints = []
    var_constraints = [[] for _ in range(n_edges)]
    for label in sorted(struct.crossing_edges):
        o_in, o_out, u_in, u_out = struct.crossing_edges[label]
        if code.sign_of(label) > 0:
            up_table, down_table = bq.up, bq.down
        else:
            up_table, down_table = bq.upbar, bq.downbar
        for con in (
            _relation_constraint(u_out, u_in, o_in, up_table),
            _relation_constraint(o_out, o_in, u_in, down_table),
        ):
            ci = len(constraints)
            constraints.append(con)
            for var in (o_in, o_out, u_in, u_out):
                var_constraints[var].append(ci)
    count = _search_count(n_edges, bq.n, constraints, var_constraints, _color_budget())
    return count * bq.n**struct.free_circles


def count_iq_colorings(code, q):
    """Number of arc labelings with (under-out) = (under-in) |> (over).

    Requires an involutory quandle: involutivity makes the relation
    sign-independent, so signs are ignored.  Free circles and closed-arc
    components each carry one unconstrained label.
    """
    if not q.involutory:
        raise ValueError("IQ coloring requires an involutory quandle")
    struct = edge_structure(code)
    n_arcs = len(struct.arcs)
    constraints = []
    for label in sorted(struct.crossing_arcs):
        over_arc, under_in, under_out = struct.crossing_arcs[label]
        constraints.append(
            _relation_constraint(under_out, under_in, over_arc, q.table)
        )
    var_constraints = [[] for _ in range(n_arcs)]
    for ci, label in enumerate(sorted(struct.crossing_arcs)):
        for var in struct.crossing_arcs[label]:
            var_constraints[var].append(ci)
    count = _search_count(n_arcs, q.n, constraints, var_constraints, _color_budget())
    return count * q.n**struct.free_circles


# --- table file format ----------------------------------------------------
#
# Biquandle file: first line "n", then four n-line blocks of n integers,
# in the order (a^b, a_b, a^{b-bar}, a_{b-bar}).  Quandle file: "n", one
# n-line block, then a line "involutory" or "not-involutory".


def _read_table(lines, pos, n, path):
    rows = []
    for i in range(n):
        if pos + i >= len(lines):
            raise GaussCodeError(f"{path}: truncated table at line {pos + i + 1}")
        parts = lines[pos + i].split()
        if len(parts) != n:
            raise GaussCodeError(
                f"{path}: expected {n} entries on line {pos + i + 1},"
                f" got {len(parts)}"
            )
        try:
            row = tuple(int(x) for x in parts)
        except ValueError:
            raise GaussCodeError(
                f"{path}: non-integer table entry on line {pos + i + 1}"
            ) from None
        rows.append(row)
    return tuple(rows), pos + n


def load_biquandle_file(path):
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise GaussCodeError(f"{path}: empty biquandle file")
    try:
        n = int(lines[0])
    except ValueError:
        raise GaussCodeError(f"{path}: first line must be the size n") from None
    pos = 1
    tables = []
    for _ in range(4):
        table, pos = _read_table(lines, pos, n, path)
        tables.append(table)
    if pos != len(lines):
        raise GaussCodeError(f"{path}: trailing content after the four tables")
    return FiniteBiquandle(n=n, up=tables[0], down=tables[1],
                           upbar=tables[2], downbar=tables[3],
                           name=os.path.basename(path))


def load_quandle_file(path):
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise GaussCodeError(f"{path}: empty quandle file")
    try:
        n = int(lines[0])
    except ValueError:
        raise GaussCodeError(f"{path}: first line must be the size n") from None
    table, pos = _read_table(lines, 1, n, path)
    if pos >= len(lines):
        raise GaussCodeError(f"{path}: missing involutory flag line")
    flag = lines[pos].lower()
    if flag not in ("involutory", "not-involutory"):
        raise GaussCodeError(
            f"{path}: flag line must be 'involutory' or 'not-involutory'"
        )
    if pos + 1 != len(lines):
        raise GaussCodeError(f"{path}: trailing content after the flag line")
    return FiniteQuandle(n=n, table=table, involutory=(flag == "involutory"),
                         name=os.path.basename(path))
