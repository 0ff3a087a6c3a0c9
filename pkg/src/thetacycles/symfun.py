"""Exact symmetric-function engine.

Partitions, and transition coefficients between the power-sum, elementary
and Schur basesreused throughout the cycle calculus.  Everything is exact:
coefficients are `fractions.Fraction` over arbitrary-precision integers,
and no floating point appears anywhere in this module.

The central operation is the expansion of a Schur polynomial in power sums,

    s_alpha = sum_beta  m(alpha, beta) * p_beta,

whose coefficients are computed as m = chi^alpha(beta) / z_beta with the
symmetric-group character value chi^alpha(beta) evaluated by the
Murnaghan-Nakayama rule.  The elementary symmetric polynomials are obtained
independently from the exponential generating series, which gives a
cross-check since e_n = s_(1^n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")

    @property
    def degree(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


EMPTY_PARTITION = Partition(())


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n``, in lexicographically descending order.

    The order starts at ``(n)`` and ends at ``(1,...,1)``; for ``n = 0``
    the list is ``[()]``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Partition] = []

    def rec(remaining: int, maxpart: int, prefix: list[int]):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for p in range(min(maxpart, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def zee(beta: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type ``beta``.

    z_beta = prod_i i^{m_i} m_i!  where m_i is the number of parts equal i.
    """
    mult: dict[int, int] = {}
    for p in beta:
        mult[p] = mult.get(p, 0) + 1
    z = 1
    for i, m in mult.items():
        z *= i**m * factorial(m)
    return z


@lru_cache(maxsize=None)
def _mn_character(alpha: tuple[int, ...], beta: tuple[int, ...]) -> int:
    """chi^alpha(beta) by recursive border-strip removal (Murnaghan-Nakayama).

    Border strips of size k are enumerated through the beta-set (first-column
    hook length) encoding: with B = {alpha_i + (l-1-i)}, removing a strip of
    size k is replacing some b in B by b-k not in B, with sign (-1)^(number
    of elements of B strictly between b-k and b).
    """
    if not beta:
        return 1 if not alpha else 0
    k = beta[0]
    rest = beta[1:]
    ell = len(alpha) + k
    padded = list(alpha) + [0] * (ell - len(alpha))
    bset = [padded[i] + (ell - 1 - i) for i in range(ell)]
    present = set(bset)
    total = 0
    for b in bset:
        if b >= k and (b - k) not in present:
            height = sum(1 for c in bset if b - k < c < b)
            newb = sorted((present - {b}) | {b - k}, reverse=True)
            newalpha = tuple(
                x for x in (newb[i] - (ell - 1 - i) for i in range(ell)) if x > 0
            )
            total += (-1) ** height * _mn_character(newalpha, rest)
    return total


def symmetric_group_character(alpha: Partition, beta: Partition) -> int:
    """Irreducible character of the symmetric group, chi^alpha at class beta."""
    if alpha.degree != beta.degree:
        raise ValueError("alpha and beta must have equal degree")
    return _mn_character(alpha.parts, beta.parts)


@dataclass(frozen=True)
class SymExpr:
    """A finite linear combination of basis symmetric functions.

    ``basis`` is one of ``"powersum"``, ``"elementary"``, ``"schur"``;
    ``terms`` maps Partition -> Fraction and never stores zeros.
    """

    basis: str
    terms: dict  # Partition -> Fraction

    BASES = ("powersum", "elementary", "schur")

    def __post_init__(self):
        if self.basis not in self.BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for part, coeff in self.terms.items():
            if not isinstance(part, Partition):
                part = Partition(tuple(part))
            coeff = Fraction(coeff)
            if coeff != 0:
                clean[part] = coeff
        object.__setattr__(self, "terms", clean)

    @property
    def is_homogeneous(self) -> bool:
        degrees = {p.degree for p in self.terms}
        return len(degrees) <= 1

    @property
    def degree(self) -> int | None:
        degrees = {p.degree for p in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def coefficient(self, part) -> Fraction:
        if not isinstance(part, Partition):
            part = Partition(tuple(part))
        return self.terms.get(part, Fraction(0))

    def __add__(self, other: "SymExpr") -> "SymExpr":
        if self.basis != other.basis:
            raise ValueError("cannot add expressions in different bases")
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms.get(p, Fraction(0)) + c
        return SymExpr(self.basis, terms)

    def scale(self, c) -> "SymExpr":
        c = Fraction(c)
        return SymExpr(self.basis, {p: c * v for p, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, SymExpr)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __str__(self):
        if not self.terms:
            return "0"
        sym = {"powersum": "p", "elementary": "e", "schur": "s"}[self.basis]
        bits = []
        for p in sorted(self.terms, key=lambda q: (q.degree, q.parts), reverse=True):
            bits.append(f"{self.terms[p]}*{sym}{p}")
        return " + ".join(bits)


def schur_to_powersum(alpha) -> SymExpr:
    """Expand the Schur function s_alpha in the power-sum basis.

    Coefficients are chi^alpha(beta)/z_beta, exact rationals.
    """
    if not isinstance(alpha, Partition):
        alpha = Partition(tuple(alpha))
    if alpha.degree == 0:
        raise ValueError("alpha must be a nonempty partition")
    terms = {}
    for beta in partitions(alpha.degree):
        chi = symmetric_group_character(alpha, beta)
        if chi:
            terms[beta] = Fraction(chi, zee(beta))
    return SymExpr("powersum", terms)


def _series_exp(coeffs: list[dict], n: int) -> list[dict]:
    """exp of a power series with SymExpr-style term dicts, truncated at X^n.

    ``coeffs[k]`` is the dict of powersum terms of the X^k coefficient,
    with coeffs[0] = {} (no constant term). Uses E' = A' E.
    """
    exp: list[dict] = [dict() for _ in range(n + 1)]
    exp[0] = {EMPTY_PARTITION: Fraction(1)}
    for m in range(1, n + 1):
        acc: dict = {}
        for k in range(1, m + 1):
            a_k = coeffs[k] if k < len(coeffs) else {}
            if not a_k:
                continue
            for p1, c1 in a_k.items():
                for p2, c2 in exp[m - k].items():
                    merged = Partition(tuple(sorted(p1.parts + p2.parts, reverse=True)))
                    acc[merged] = acc.get(merged, Fraction(0)) + Fraction(k, m) * c1 * c2
        exp[m] = {p: c for p, c in acc.items() if c != 0}
    return exp


def elementary_to_powersum(n: int) -> SymExpr:
    """Expand e_n in power sums via the generating series

    sum_n e_n X^n = exp( sum_nu (-1)^(nu+1)/nu * p_nu X^nu ).

    Independent of the Murnaghan-Nakayama route; e_n = s_(1^n) is used as a
    cross-check in the test suite.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    log_coeffs: list[dict] = [dict()]
    for nu in range(1, n + 1):
        log_coeffs.append({Partition((nu,)): Fraction((-1) ** (nu + 1), nu)})
    series = _series_exp(log_coeffs, n)
    return SymExpr("powersum", series[n])


def homogeneous_to_powersum(n: int) -> SymExpr:
    """Expand the complete homogeneous h_n = s_(n) in power sums."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return schur_to_powersum(Partition((n,)))
