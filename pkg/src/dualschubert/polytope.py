"""
Lattice supports, Newton polytopes, and generalized permutahedra, all in
exact rational arithmetic.

A point set has the saturated-support property (SNP) when it equals the set
of integer points of its own convex hull.  It is M-convex when it satisfies
the exchange axiom: for any two members a, b and any coordinate i with
a_i > b_i there is a j with a_j < b_j such that both a - e_i + e_j and
b - e_j + e_i are members.

Convex-hull membership questions are decided by a phase-1 simplex over
Fractions with Bland's rule; no verdict ever touches floating point.

A generalized permutahedron in k coordinates is stored as its support
numbers z_I, one per subset I of {1..k}: the polytope of points t with
sum(t) = z_{full} and sum(t_i, i in I) >= z_I for every other I.
Minkowski sums add z-values pointwise.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Mapping, Sequence

from .perm import Perm, PositionPair, inversions, validate
from .poly import ExponentVector, SparsePolynomial, global_weight

LatticePoint = tuple[int, ...]


# -- exact linear feasibility -------------------------------------------------


def _nonneg_combination_exists(
    columns: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> bool:
    """Is rhs a nonnegative linear combination of the columns?  Exact.

    Phase-1 simplex: minimize the sum of one artificial variable per row,
    steered by Bland's rule (smallest eligible index enters; ties on the
    ratio test leave by smallest basis index), which cannot cycle.
    Feasible exactly when the optimal artificial mass is zero.
    """
    k = len(rhs)
    m = len(columns)
    rows = [[Fraction(col[i]) for col in columns] for i in range(k)]
    b = [Fraction(v) for v in rhs]
    for i in range(k):
        if b[i] < 0:
            rows[i] = [-v for v in rows[i]]
            b[i] = -b[i]
    # tableau columns: m structural then k artificial
    for i in range(k):
        rows[i].extend(Fraction(1) if j == i else Fraction(0) for j in range(k))
    basis = list(range(m, m + k))
    # reduced costs under the all-artificial basis
    cost = [-sum(rows[i][j] for i in range(k)) for j in range(m)]
    cost.extend(Fraction(0) for _ in range(k))
    neg_obj = -sum(b)
    banned = [False] * (m + k)

    while True:
        enter = -1
        for j in range(m + k):
            if not banned[j] and cost[j] < 0:
                enter = j
                break
        if enter < 0:
            return neg_obj == 0
        leave = -1
        best: Fraction | None = None
        for i in range(k):
            coeff = rows[i][enter]
            if coeff > 0:
                ratio = b[i] / coeff
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            raise ArithmeticError("phase-1 objective cannot be unbounded")
        piv = rows[leave][enter]
        rows[leave] = [v / piv for v in rows[leave]]
        b[leave] /= piv
        for i in range(k):
            if i != leave and rows[i][enter]:
                f = rows[i][enter]
                rows[i] = [v - f * p for v, p in zip(rows[i], rows[leave])]
                b[i] -= f * b[leave]
        if cost[enter]:
            f = cost[enter]
            cost = [v - f * p for v, p in zip(cost, rows[leave])]
            neg_obj -= f * b[leave]
        if basis[leave] >= m:
            banned[basis[leave]] = True
        basis[leave] = enter


def _check_point_dims(points: list[tuple]) -> int:
    if not points:
        raise ValueError("need at least one point")
    d = len(points[0])
    if any(len(p) != d for p in points):
        raise ValueError("points have mixed dimensions")
    return d


def hull_contains(points: Iterable[tuple], target: tuple) -> bool:
    """Is target in the convex hull of the points?  Exact.

    >>> hull_contains({(1, 1), (0, 2)}, (0, 2))
    True
    >>> hull_contains({(1, 1), (0, 2)}, (2, 0))
    False
    """
    pts = sorted(set(tuple(p) for p in points))
    d = _check_point_dims(pts)
    target = tuple(target)
    if len(target) != d:
        raise ValueError(f"target has dimension {len(target)}, points {d}")
    if target in set(pts):
        return True
    if d == 0:
        return True  # the unique 0-dim point, already equal
    columns = [tuple(p) + (1,) for p in pts]
    return _nonneg_combination_exists(columns, tuple(target) + (1,))


def hull_vertices(points: Iterable[tuple]) -> frozenset[tuple]:
    """Vertices of the convex hull of a finite point set.  Exact.

    A point is kept exactly when it is not in the hull of the others.
    Midpoints of two other members are discarded without touching the
    simplex; the rest are decided by exact hull membership.
    """
    pts = sorted(set(tuple(p) for p in points))
    _check_point_dims(pts)
    if len(pts) == 1:
        return frozenset(pts)
    pset = set(pts)
    verts = []
    for alpha in pts:
        is_mid = False
        for beta in pts:
            if beta == alpha:
                continue
            gamma = tuple(2 * a - c for a, c in zip(alpha, beta))
            if gamma in pset:
                is_mid = True
                break
        if is_mid:
            continue
        if not hull_contains([p for p in pts if p != alpha], alpha):
            verts.append(alpha)
    return frozenset(verts)


# -- supports and their polytopes ---------------------------------------------


def minkowski_support(w: Perm) -> frozenset[LatticePoint]:
    """Minkowski sum, over the inversions (a, b) of w, of {e_a, ..., e_{b-1}}.

    Equals the support of the global weight polynomial term for term.

    >>> sorted(minkowski_support((3, 2, 1)))
    [(1, 2), (2, 1)]
    """
    w = validate(w)
    nvars = len(w) - 1
    pts: set[LatticePoint] = {(0,) * nvars}
    for a, b in sorted(inversions(w)):
        pts = {
            p[: i - 1] + (p[i - 1] + 1,) + p[i:]
            for p in pts
            for i in range(a, b)
        }
    return frozenset(pts)


def segment_rank(seg: PositionPair, subset: Iterable[int]) -> int:
    """1 when the coordinate set {a, ..., b-1} meets the subset, else 0.

    >>> segment_rank((1, 3), {2})
    1
    >>> segment_rank((1, 2), {2, 3})
    0
    """
    a, b = seg
    if not a < b:
        raise ValueError(f"segment ({a}, {b}) is empty")
    s = set(subset)
    return 1 if any(i in s for i in range(a, b)) else 0


def _subset_key(subset: frozenset[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(subset)) + "}"


def _parse_subset_key(key: str) -> frozenset[int]:
    key = key.strip()
    if not (key.startswith("{") and key.endswith("}")):
        raise ValueError(f"bad subset key {key!r}")
    body = key[1:-1].strip()
    if not body:
        return frozenset()
    return frozenset(int(part) for part in body.split(","))


class GeneralizedPermutahedron:
    """Polytope described by one support number per coordinate subset."""

    __slots__ = ("nvars", "z")

    def __init__(self, nvars: int, z: Mapping[frozenset[int], int]):
        if nvars < 0:
            raise ValueError(f"nvars must be >= 0, got {nvars}")
        self.nvars = nvars
        full = frozenset(range(1, nvars + 1))
        table: dict[frozenset[int], int] = {}
        for subset, val in z.items():
            subset = frozenset(subset)
            if not subset <= full:
                raise ValueError(f"subset {sorted(subset)} not within 1..{nvars}")
            table[subset] = val
        if table.get(frozenset(), 0) != 0:
            raise ValueError("the empty set must carry z = 0")
        for r in range(nvars + 1):
            for c in combinations(range(1, nvars + 1), r):
                table.setdefault(frozenset(c), 0)
        self.z = table

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GeneralizedPermutahedron)
            and self.nvars == other.nvars
            and self.z == other.z
        )

    def __repr__(self) -> str:
        zs = {
            _subset_key(s): v
            for s, v in sorted(self.z.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
        }
        return f"GeneralizedPermutahedron({self.nvars}, {zs})"

    def __add__(self, other: "GeneralizedPermutahedron") -> "GeneralizedPermutahedron":
        if not isinstance(other, GeneralizedPermutahedron):
            return NotImplemented
        if self.nvars != other.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
        return GeneralizedPermutahedron(
            self.nvars, {s: v + other.z[s] for s, v in self.z.items()}
        )

    def contains(self, t: Sequence) -> bool:
        """Membership test; works for integer or rational coordinates."""
        if len(t) != self.nvars:
            raise ValueError(f"point has dimension {len(t)}, expected {self.nvars}")
        full = frozenset(range(1, self.nvars + 1))
        if sum(t) != self.z[full]:
            return False
        for subset, bound in self.z.items():
            if subset and subset != full:
                if sum(t[i - 1] for i in subset) < bound:
                    return False
        return True

    def integer_points(self) -> frozenset[LatticePoint]:
        """All integer points of the polytope.

        Coordinate i is boxed by z_{i} from below and by
        z_full - z_complement(i) from above; candidates are walked with
        prefix-sum pruning and filtered by the remaining inequalities.
        """
        n = self.nvars
        full = frozenset(range(1, n + 1))
        total = self.z[full]
        if n == 0:
            return frozenset({()}) if total == 0 else frozenset()
        los = [self.z[frozenset({i})] for i in range(1, n + 1)]
        his = [total - self.z[full - {i}] for i in range(1, n + 1)]
        if any(lo > hi for lo, hi in zip(los, his)):
            return frozenset()
        lo_tail = [0] * (n + 1)
        hi_tail = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            lo_tail[i] = lo_tail[i + 1] + los[i]
            hi_tail[i] = hi_tail[i + 1] + his[i]
        out = set()

        def walk(i: int, remaining: int, prefix: tuple[int, ...]) -> None:
            if i == n:
                if self.contains(prefix):
                    out.add(prefix)
                return
            lo = max(los[i], remaining - hi_tail[i + 1])
            hi = min(his[i], remaining - lo_tail[i + 1])
            for v in range(lo, hi + 1):
                walk(i + 1, remaining - v, prefix + (v,))

        walk(0, total, ())
        return frozenset(out)

    def to_json_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "z": {
                _subset_key(s): v
                for s, v in sorted(
                    self.z.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))
                )
            },
        }

    @classmethod
    def from_json_dict(cls, d: Mapping) -> "GeneralizedPermutahedron":
        z = {_parse_subset_key(k): int(v) for k, v in d["z"].items()}
        return cls(int(d["nvars"]), z)


def gp_from_segment(seg: PositionPair, nvars: int) -> GeneralizedPermutahedron:
    """The segment simplex conv{e_a, ..., e_{b-1}} as a support-number table:
    z_I = 1 exactly when I contains all of {a, ..., b-1}."""
    a, b = seg
    if not (1 <= a < b <= nvars + 1):
        raise ValueError(f"segment ({a}, {b}) out of range for {nvars} vars")
    cells = frozenset(range(a, b))
    z = {}
    for r in range(nvars + 1):
        for c in combinations(range(1, nvars + 1), r):
            s = frozenset(c)
            z[s] = 1 if cells <= s else 0
    return GeneralizedPermutahedron(nvars, z)


def gp_from_inversions(w: Perm) -> GeneralizedPermutahedron:
    """Support numbers z_I = number of inversions (a, b) of w with
    {a, ..., b-1} contained in I.

    >>> gp_from_inversions((3, 2, 1)).z[frozenset({1, 2})]
    3
    """
    w = validate(w)
    nvars = len(w) - 1
    inv = sorted(inversions(w))
    cells = [frozenset(range(a, b)) for a, b in inv]
    z = {}
    for r in range(nvars + 1):
        for c in combinations(range(1, nvars + 1), r):
            s = frozenset(c)
            z[s] = sum(1 for cell in cells if cell <= s)
    return GeneralizedPermutahedron(nvars, z)


def gp_minkowski_sum(
    gps: Iterable[GeneralizedPermutahedron],
) -> GeneralizedPermutahedron:
    """Minkowski sum: support numbers add pointwise."""
    gps = list(gps)
    if not gps:
        raise ValueError("need at least one summand")
    out = gps[0]
    for g in gps[1:]:
        out = out + g
    return out


def gp_contains(p: GeneralizedPermutahedron, t: Sequence) -> bool:
    return p.contains(t)


def gp_integer_points(p: GeneralizedPermutahedron) -> frozenset[LatticePoint]:
    return p.integer_points()


# -- SNP and M-convexity ------------------------------------------------------


def compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if parts < 0 or total < 0:
        raise ValueError("total and parts must be nonnegative")
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for v in range(total + 1):
        for rest in compositions(total - v, parts - 1):
            yield (v,) + rest


def is_snp(f: SparsePolynomial) -> bool:
    """Does the support of f saturate its Newton polytope?

    True when every integer point of the convex hull of the support is
    itself a support point.  The zero polynomial is rejected; negative
    coefficients only draw a warning, the definition still applies.
    """
    supp = f.support()
    if not supp:
        raise ValueError("the zero polynomial has no Newton polytope")
    if any(c < 0 for _, c in f.items()):
        warnings.warn("polynomial has negative coefficients", stacklevel=2)
    d = f.nvars
    if d == 0 or len(supp) == 1:
        return True
    verts = hull_vertices(supp)
    los = [min(p[i] for p in supp) for i in range(d)]
    his = [max(p[i] for p in supp) for i in range(d)]
    if f.is_homogeneous():
        candidates = (
            c
            for c in compositions(f.degree(), d)
            if all(lo <= v <= hi for v, lo, hi in zip(c, los, his))
        )
    else:
        candidates = product(*(range(lo, hi + 1) for lo, hi in zip(los, his)))
    for cand in candidates:
        if cand not in supp and hull_contains(verts, cand):
            return False
    return True


def m_convex_failure(points: Iterable[LatticePoint]):
    """First exchange-axiom violation, or None if the set is M-convex.

    Returns (alpha, beta, i): member alpha exceeds member beta in
    coordinate i (1-based) yet no coordinate j with alpha_j < beta_j makes
    both alpha - e_i + e_j and beta - e_j + e_i members.
    """
    pts = sorted(set(tuple(p) for p in points))
    d = _check_point_dims(pts)
    if len(pts) == 1:
        return None
    # integer-encode so the inner loop is set lookups on ints; the offset
    # keeps every digit of an exchanged point nonnegative
    mn = min(min(p) for p in pts)
    offset = 1 - mn
    base = max(max(p) for p in pts) + offset + 2
    weights = [base ** (d - 1 - i) for i in range(d)]

    def encode(p: LatticePoint) -> int:
        return sum((c + offset) * wt for c, wt in zip(p, weights))

    codes = {encode(p) for p in pts}
    for xi in range(len(pts)):
        alpha = pts[xi]
        ca = encode(alpha)
        for yi in range(xi + 1, len(pts)):
            beta = pts[yi]
            cb = encode(beta)
            up = [i for i in range(d) if alpha[i] > beta[i]]
            down = [i for i in range(d) if alpha[i] < beta[i]]
            for i in up:
                ok = any(
                    ca - weights[i] + weights[j] in codes
                    and cb + weights[i] - weights[j] in codes
                    for j in down
                )
                if not ok:
                    return (alpha, beta, i + 1)
            for i in down:
                ok = any(
                    cb - weights[i] + weights[j] in codes
                    and ca + weights[i] - weights[j] in codes
                    for j in up
                )
                if not ok:
                    return (beta, alpha, i + 1)
    return None


def is_m_convex(points: Iterable[LatticePoint]) -> bool:
    """Exchange axiom over all pairs; see m_convex_failure.

    >>> is_m_convex({(2, 1), (1, 2)})
    True
    >>> is_m_convex({(2, 0), (0, 2)})
    False
    """
    return m_convex_failure(points) is None


def newton_vertices_coeff1(w: Perm) -> frozenset[ExponentVector]:
    """Exponents of the global weight polynomial that carry coefficient 1."""
    return global_weight(w).coeff_one_exponents()
