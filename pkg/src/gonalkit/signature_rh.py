"""Signatures, Riemann-Hurwitz arithmetic and the family's parameters.

Everything here is exact: rational quantities are ``fractions.Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from gonalkit.errors import (
    DivisibilityError,
    InconsistencyError,
    InvalidParameterError,
    NonHyperbolicError,
    UnsupportedCaseError,
)
from gonalkit.group_engine import is_prime


@dataclass(frozen=True)
class Signature:
    """Orbit genus ``h`` and the ordered branch periods ``(m_1, ..., m_r)``."""

    h: int
    periods: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "periods", tuple(self.periods))
        if self.h < 0:
            raise InvalidParameterError(f"orbit genus must be >= 0, got {self.h}")
        bad = [m for m in self.periods if m < 2]
        if bad:
            raise InvalidParameterError(f"periods must be >= 2, got {bad}")

    @property
    def r(self) -> int:
        return len(self.periods)

    def __str__(self) -> str:
        if not self.periods:
            return f"({self.h}; —)"
        return f"({self.h}; {','.join(map(str, self.periods))})"


@dataclass(frozen=True)
class TheoremParams:
    p: int
    n: int
    d: int
    g: int
    sig: Signature

    def to_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "d": self.d, "g": self.g, "signature": str(self.sig)}


def family_signature(p: int, d: int) -> Signature:
    return Signature(0, (2, 2, 2) + (p,) * d)


def teichmuller_dimension(sig: Signature) -> int:
    return 3 * sig.h - 3 + sig.r


def reduced_area(sig: Signature) -> Fraction:
    """``2h - 2 + sum(1 - 1/m_i)``."""
    return 2 * sig.h - 2 + sum((1 - Fraction(1, m) for m in sig.periods), Fraction(0))


def rh_genus(order: int, sig: Signature) -> int:
    """Genus of a surface carrying an ``order``-element action with signature ``sig``.

    Solves ``2(g-1) = order * reduced_area(sig)``.
    """
    if order < 1:
        raise InvalidParameterError(f"group order must be >= 1, got {order}")
    mu = reduced_area(sig)
    if mu <= 0:
        raise NonHyperbolicError(f"signature {sig} is not hyperbolic (reduced area {mu})")
    twice = order * mu
    if twice.denominator != 1 or twice.numerator % 2 or twice < 2:
        raise InconsistencyError(
            f"order {order} and signature {sig} give 2(g-1) = {twice}, not an even integer >= 2"
        )
    return twice.numerator // 2 + 1


def cs_unique_pn(p: int, n: int, g: int) -> bool:
    """Whether genus ``g`` lies strictly above the bound ``2pn + (p-1)^2``."""
    return g > 2 * p * n + (p - 1) ** 2


def theorem_params(p: int, n: int) -> TheoremParams:
    if not is_prime(p):
        raise InvalidParameterError(f"p must be a prime >= 2, got {p}")
    if n < 0:
        raise InvalidParameterError(f"n must be >= 0, got {n}")
    if n % (p - 1):
        raise DivisibilityError(f"p−1 divides n is required: p−1 = {p - 1} does not divide n = {n}")
    if p == 2 and n % 2 == 0:
        raise UnsupportedCaseError(
            f"p=2 requires n odd (got n = {n}); the odd-d vector does not generate D_2 x D_2"
        )
    d = n // (p - 1) + 1
    g = 2 * n * p + (p - 1) ** 2
    sig = family_signature(p, d)
    computed = rh_genus(4 * p * p, sig)
    if computed != g:
        raise InconsistencyError(f"Riemann-Hurwitz gives genus {computed}, expected {g}")
    return TheoremParams(p=p, n=n, d=d, g=g, sig=sig)


def parse_signature(text: str) -> Signature:
    """Inverse of ``str(Signature)``; accepts ``(0; 2,2,2,3)`` or ``(2; —)``."""
    body = text.strip().removeprefix("(").removesuffix(")")
    head, _, tail = body.partition(";")
    tail = tail.strip()
    periods: Sequence[int] = () if tail in ("", "—", "-") else [int(t) for t in tail.split(",")]
    return Signature(int(head), tuple(periods))
