"""Exact arithmetic in G = D_p x D_p.

Elements are stored in the normal form ``s1^a r1^b s2^c r2^e``. Each dihedral
factor multiplies by the twist rule

    (s^x r^y)(s^x' r^y') = s^(x+x') r^(y' + (-1)^x' y)

and the two factors commute, so no Cayley table is needed for a single
product. A table is still built lazily for the hot loops in ``search``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from gonalkit.errors import InvalidParameterError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True, order=True)
class GroupElement:
    """``s1^a r1^b s2^c r2^e``; ordering is lexicographic on ``(a, b, c, e)``."""

    a: int
    b: int
    c: int
    e: int

    @property
    def key(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.e)

    def is_identity(self) -> bool:
        return not (self.a or self.b or self.c or self.e)

    def __str__(self) -> str:
        return format_element(self)


def format_element(x: GroupElement) -> str:
    """Report form, e.g. ``s1 r1^2 r2``; the identity prints as ``1``."""
    parts = []
    for name, exp in (("s1", x.a), ("r1", x.b), ("s2", x.c), ("r2", x.e)):
        if exp == 1:
            parts.append(name)
        elif exp:
            parts.append(f"{name}^{exp}")
    return " ".join(parts) if parts else "1"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup stored as its canonically sorted member tuple."""

    members: tuple[GroupElement, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    @cached_property
    def member_set(self) -> frozenset[GroupElement]:
        return frozenset(self.members)

    @property
    def generator(self) -> GroupElement:
        """Canonical generator: the smallest non-identity member (identity if trivial).

        For cyclic groups of prime order any non-identity member generates.
        """
        nontrivial = [x for x in self.members if not x.is_identity()]
        return nontrivial[0] if nontrivial else self.members[0]

    def __contains__(self, x: GroupElement) -> bool:
        return x in self.member_set

    def __lt__(self, other: "Subgroup") -> bool:
        return self.sort_key < other.sort_key

    @property
    def sort_key(self):
        return tuple(m.key for m in self.members)

    def issubset(self, other: "Subgroup") -> bool:
        return self.member_set <= other.member_set

    def label(self) -> str:
        if self.order == 1:
            return "⟨1⟩"
        return f"⟨{format_element(self.generator)}⟩"

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class FiniteGroup:
    """The group D_p x D_p for a prime ``p`` (``p = 2`` gives (Z/2)^4)."""

    p: int

    @property
    def order(self) -> int:
        return 4 * self.p * self.p

    @property
    def identity(self) -> GroupElement:
        return GroupElement(0, 0, 0, 0)

    @property
    def s1(self) -> GroupElement:
        return GroupElement(1, 0, 0, 0)

    @property
    def r1(self) -> GroupElement:
        return GroupElement(0, 1, 0, 0)

    @property
    def s2(self) -> GroupElement:
        return GroupElement(0, 0, 1, 0)

    @property
    def r2(self) -> GroupElement:
        return GroupElement(0, 0, 0, 1)

    @property
    def generators(self) -> tuple[GroupElement, ...]:
        return (self.s1, self.s2, self.r1, self.r2)

    def element(self, a: int = 0, b: int = 0, c: int = 0, e: int = 0) -> GroupElement:
        """Normal form of ``s1^a r1^b s2^c r2^e`` with exponents reduced."""
        return GroupElement(a % 2, b % self.p, c % 2, e % self.p)

    @cached_property
    def elements(self) -> tuple[GroupElement, ...]:
        p = self.p
        return tuple(
            GroupElement(a, b, c, e)
            for a in range(2)
            for b in range(p)
            for c in range(2)
            for e in range(p)
        )

    def index(self, x: GroupElement) -> int:
        p = self.p
        return ((x.a * p + x.b) * 2 + x.c) * p + x.e

    def is_valid(self, x: GroupElement) -> bool:
        return 0 <= x.a <= 1 and 0 <= x.c <= 1 and 0 <= x.b < self.p and 0 <= x.e < self.p

    def mul(self, x: GroupElement, y: GroupElement) -> GroupElement:
        p = self.p
        b = (y.b + (-x.b if y.a else x.b)) % p
        e = (y.e + (-x.e if y.c else x.e)) % p
        return GroupElement(x.a ^ y.a, b, x.c ^ y.c, e)

    def inv(self, x: GroupElement) -> GroupElement:
        # reflections are involutions; rotations negate
        b = x.b if x.a else (-x.b) % self.p
        e = x.e if x.c else (-x.e) % self.p
        return GroupElement(x.a, b, x.c, e)

    def power(self, x: GroupElement, k: int) -> GroupElement:
        if k < 0:
            x, k = self.inv(x), -k
        result = self.identity
        base = x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def product(self, xs: Iterable[GroupElement]) -> GroupElement:
        result = self.identity
        for x in xs:
            result = self.mul(result, x)
        return result

    def conjugate(self, g: GroupElement, x: GroupElement) -> GroupElement:
        """``g x g^-1``."""
        return self.mul(self.mul(g, x), self.inv(g))

    @cached_property
    def table(self) -> list[list[int]]:
        """Cayley table on canonical indices."""
        elems = self.elements
        return [[self.index(self.mul(x, y)) for y in elems] for x in elems]

    @cached_property
    def inverse_table(self) -> list[int]:
        return [self.index(self.inv(x)) for x in self.elements]

    @cached_property
    def order_table(self) -> list[int]:
        return [element_order(self, x) for x in self.elements]


def build_dihedral_product(p: int) -> FiniteGroup:
    """Return D_p x D_p. Raises ``InvalidParameterError`` unless ``p`` is a prime."""
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise InvalidParameterError(f"p must be a prime >= 2, got {p!r}")
    return FiniteGroup(p)


def multiply(G: FiniteGroup, x: GroupElement, y: GroupElement) -> GroupElement:
    return G.mul(x, y)


def element_order(G: FiniteGroup, x: GroupElement) -> int:
    k, y = 1, x
    while not y.is_identity():
        y = G.mul(y, x)
        k += 1
    return k


def _subgroup_from(members: Iterable[GroupElement]) -> Subgroup:
    return Subgroup(tuple(sorted(set(members))))


def generated_subgroup(G: FiniteGroup, gens: Sequence[GroupElement]) -> Subgroup:
    """Closure of ``gens`` under right multiplication by generators (BFS)."""
    gens = [x for x in gens if not x.is_identity()]
    seen = {G.identity}
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = G.mul(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return _subgroup_from(seen)


def cyclic_subgroup(G: FiniteGroup, x: GroupElement) -> Subgroup:
    return generated_subgroup(G, [x])


def conjugate_subgroup(G: FiniteGroup, g: GroupElement, H: Subgroup) -> Subgroup:
    """``g H g^-1``."""
    return _subgroup_from(G.conjugate(g, h) for h in H.members)


def is_subgroup(G: FiniteGroup, H: Subgroup) -> bool:
    members = H.member_set
    if G.identity not in members or G.order % H.order:
        return False
    if any(not G.is_valid(x) for x in members):
        return False
    return all(G.inv(x) in members for x in members) and all(
        G.mul(x, y) in members for x in members for y in members
    )


def subgroups_of_prime_order(G: FiniteGroup, q: int) -> list[Subgroup]:
    """All subgroups of prime order ``q``, sorted canonically."""
    if not is_prime(q):
        raise InvalidParameterError(f"q must be prime, got {q!r}")
    if G.order % q:
        return []
    found: dict[tuple, Subgroup] = {}
    for x in G.elements:
        if element_order(G, x) == q:
            H = cyclic_subgroup(G, x)
            found.setdefault(H.sort_key, H)
    return sorted(found.values())


def are_conjugate(G: FiniteGroup, H1: Subgroup, H2: Subgroup) -> Optional[GroupElement]:
    """First ``g`` in canonical order with ``g H1 g^-1 = H2``, or ``None``."""
    if H1.order != H2.order:
        return None
    target = H2.member_set
    for g in G.elements:
        if all(G.conjugate(g, h) in target for h in H1.members):
            return g
    return None
