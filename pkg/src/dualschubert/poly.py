"""
Sparse multivariate polynomials with exact rational coefficients, and the
weight constructions built on them.

A polynomial in k variables x1..xk is a map from exponent tuples of width k
to nonzero Fractions; zero coefficients are never stored.  All arithmetic is
exact.  Terms serialize and print in graded reverse lexicographic order
(higher total degree first; within a degree, smaller reversed exponent tuple
first), e.g. ``x1*x2 + 1/2*x2^2``.

The weight of a saturated chain is the product, over its labels (a, b), of
the segment polynomial x_a + x_{a+1} + ... + x_{b-1}; the global weight of a
permutation takes that product over its inversion set instead.  Averaging
chain weights over all saturated chains of [u, w] (dividing by r! where r is
the number of steps) gives the interval's weight polynomial; the same value
is computed much faster by a cover-split dynamic program over the interval.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Mapping

from . import bruhat
from .perm import (
    Perm,
    PositionPair,
    all_perms,
    bruhat_leq,
    down_covers,
    format_perm,
    identity,
    inversions,
    length,
    validate,
)
from .bruhat import SaturatedChain

ExponentVector = tuple[int, ...]


def grevlex_key(exp: ExponentVector) -> tuple:
    """Sort key putting exponents in graded reverse lexicographic order."""
    return (-sum(exp), tuple(reversed(exp)))


class SparsePolynomial:
    """Immutable-by-convention sparse polynomial over the rationals."""

    __slots__ = ("nvars", "_terms")

    def __init__(
        self,
        nvars: int,
        terms: Mapping[ExponentVector, Fraction | int] | None = None,
    ):
        if nvars < 0:
            raise ValueError(f"nvars must be >= 0, got {nvars}")
        self.nvars = nvars
        clean: dict[ExponentVector, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars or any(e < 0 or not isinstance(e, int) for e in exp):
                raise ValueError(f"bad exponent vector for {nvars} vars: {exp!r}")
            c = Fraction(coeff)
            if c != 0:
                clean[exp] = c
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "SparsePolynomial":
        return SparsePolynomial(nvars, {})

    @staticmethod
    def one(nvars: int) -> "SparsePolynomial":
        return SparsePolynomial(nvars, {(0,) * nvars: Fraction(1)})

    @staticmethod
    def variable(i: int, nvars: int) -> "SparsePolynomial":
        """The monomial x_i (1-based)."""
        if not (1 <= i <= nvars):
            raise ValueError(f"variable index {i} out of range 1..{nvars}")
        exp = tuple(1 if j == i else 0 for j in range(1, nvars + 1))
        return SparsePolynomial(nvars, {exp: Fraction(1)})

    # -- inspection --------------------------------------------------------

    def items(self):
        return self._terms.items()

    def coefficient(self, exp: ExponentVector) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> frozenset[ExponentVector]:
        return frozenset(self._terms)

    def coeff_one_exponents(self) -> frozenset[ExponentVector]:
        return frozenset(e for e, c in self._terms.items() if c == 1)

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1 by convention."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def sorted_terms(self) -> list[tuple[ExponentVector, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: grevlex_key(t[0]))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        if self.nvars != other.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return SparsePolynomial(self.nvars, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return SparsePolynomial(
                self.nvars, {e: c * v for e, v in self._terms.items()}
            )
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        if self.nvars != other.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
        out: dict[ExponentVector, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return SparsePolynomial(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparsePolynomial)
            and self.nvars == other.nvars
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, coeff in self.sorted_terms():
            factors = []
            if coeff != 1 or not any(exp):
                factors.append(str(coeff))
            for i, e in enumerate(exp, start=1):
                if e == 1:
                    factors.append(f"x{i}")
                elif e >= 2:
                    factors.append(f"x{i}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.nvars}, {dict(self.sorted_terms())!r})"

    def to_json_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {
                    "exp": list(exp),
                    "num": str(coeff.numerator),
                    "den": str(coeff.denominator),
                }
                for exp, coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, d: Mapping) -> "SparsePolynomial":
        terms = {
            tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"]))
            for t in d["terms"]
        }
        return cls(int(d["nvars"]), terms)


# -- segment and chain weights ----------------------------------------------


def segment_poly(seg: PositionPair, nvars: int) -> SparsePolynomial:
    """x_a + x_{a+1} + ... + x_{b-1} for a label (a, b) with b <= nvars + 1.

    >>> str(segment_poly((1, 3), 2))
    'x1 + x2'
    """
    a, b = seg
    if not (1 <= a < b <= nvars + 1):
        raise ValueError(f"segment ({a}, {b}) out of range for {nvars} vars")
    terms = {}
    for i in range(a, b):
        exp = tuple(1 if j == i else 0 for j in range(1, nvars + 1))
        terms[exp] = Fraction(1)
    return SparsePolynomial(nvars, terms)


def chain_weight(chain: SaturatedChain) -> SparsePolynomial:
    """Product of the segment polynomials of the chain's labels.

    The trivial chain has weight 1.
    """
    nvars = len(chain.start) - 1
    out = SparsePolynomial.one(nvars)
    for lab in chain.labels:
        out = out * segment_poly(lab, nvars)
    return out


def global_weight(w: Perm) -> SparsePolynomial:
    """Product of segment polynomials over all inversions of w.

    >>> str(global_weight((3, 2, 1)))
    'x1^2*x2 + x1*x2^2'
    """
    w = validate(w)
    nvars = len(w) - 1
    out = SparsePolynomial.one(nvars)
    for seg in sorted(inversions(w)):
        out = out * segment_poly(seg, nvars)
    return out


# -- interval weight polynomials ---------------------------------------------


def postnikov_stanley_chainsum(u: Perm, w: Perm) -> SparsePolynomial:
    """Definitional form: average of chain weights over all chains of [u, w].

    Sums chain_weight over enumerate_chains(u, w) and divides by r! where
    r = length(w) - length(u).  Exponential in r; intended as the oracle
    the dynamic program is checked against.
    """
    u, w = validate(u), validate(w)
    if not bruhat_leq(u, w):
        raise ValueError(
            f"{format_perm(u)} is not below {format_perm(w)} in Bruhat order"
        )
    nvars = len(w) - 1
    total = SparsePolynomial.zero(nvars)
    for chain in bruhat.enumerate_chains(u, w):
        total = total + chain_weight(chain)
    return total * Fraction(1, factorial(length(w) - length(u)))


def postnikov_stanley_dp(u: Perm, w: Perm) -> SparsePolynomial:
    """Interval weight polynomial by dynamic programming.

    Splitting every chain at its final cover gives, for each v in (u, w],

        D(v) = (1 / (length(v) - length(u))) * sum over covers v' < v in
               [u, w] of D(v') * segment(label(v', v)),

    with D(u) = 1.  Runs over the interval in increasing length order.
    """
    u, w = validate(u), validate(w)
    if not bruhat_leq(u, w):
        raise ValueError(
            f"{format_perm(u)} is not below {format_perm(w)} in Bruhat order"
        )
    nvars = len(w) - 1
    interval = bruhat.interval_elements(u, w)
    base = length(u)
    table: dict[Perm, SparsePolynomial] = {u: SparsePolynomial.one(nvars)}
    for v in sorted(interval, key=lambda p: (length(p), p)):
        if v == u:
            continue
        acc = SparsePolynomial.zero(nvars)
        for v2, lab in down_covers(v):
            if v2 in interval:
                acc = acc + table[v2] * segment_poly(lab, nvars)
        table[v] = acc * Fraction(1, length(v) - base)
    return table[w]


def dual_schubert(w: Perm) -> SparsePolynomial:
    """Interval weight polynomial of [identity, w].

    >>> str(dual_schubert((3, 2, 1)))
    '1/2*x1^2*x2 + 1/2*x1*x2^2'
    """
    w = validate(w)
    return postnikov_stanley_dp(identity(len(w)), w)


def dual_schubert_table(n: int) -> dict[Perm, SparsePolynomial]:
    """All rank-n dual Schubert polynomials in one sweep over the group.

    One pass in increasing length order costs what a single call for the
    longest element would, so exhaustive rank sweeps use this.
    """
    nvars = n - 1
    table: dict[Perm, SparsePolynomial] = {identity(n): SparsePolynomial.one(nvars)}
    for v in sorted(all_perms(n), key=lambda p: (length(p), p)):
        if v in table:
            continue
        acc = SparsePolynomial.zero(nvars)
        for v2, lab in down_covers(v):
            acc = acc + table[v2] * segment_poly(lab, nvars)
        table[v] = acc * Fraction(1, length(v))
    return table


# -- free-function aliases ----------------------------------------------------


def support(f: SparsePolynomial) -> frozenset[ExponentVector]:
    """Exponent vectors with nonzero coefficient."""
    return f.support()


def coeff_one_exponents(f: SparsePolynomial) -> frozenset[ExponentVector]:
    """Exponent vectors whose coefficient is exactly 1."""
    return f.coeff_one_exponents()
