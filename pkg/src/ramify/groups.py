"""Finite groups given by multiplication tables, and degree-1 characters."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import product
from math import gcd

from .errors import NotAbelian, ValidationError


class Group:
    """A finite group on the indices 0..n-1 with ``table[i][j]`` the index of i*j."""

    def __init__(self, table: list[list[int]]):
        self.table = [list(row) for row in table]
        self.n = len(table)
        ids = [i for i in range(self.n) if self.table[i] == list(range(self.n))]
        if not ids:
            raise ValidationError("multiplication table has no identity")
        self.identity = ids[0]
        self._check_group()

    def _check_group(self):
        n, t = self.n, self.table
        cols = [[t[i][j] for i in range(n)] for j in range(n)]
        for row in t + cols:
            if sorted(row) != list(range(n)):
                raise ValidationError("multiplication table is not a Latin square")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if t[t[a][b]][c] != t[a][t[b][c]]:
                        raise ValidationError("multiplication table is not associative")
        self._inv = [t[i].index(self.identity) for i in range(n)]

    @property
    def elements(self) -> list[int]:
        return list(range(self.n))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self._inv[a]

    def power(self, a: int, k: int) -> int:
        r = self.identity
        for _ in range(k % self.order(a)):
            r = self.table[r][a]
        return r

    def order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.n) for b in range(self.n))

    def order_profile(self) -> Counter:
        return Counter(self.order(a) for a in range(self.n))

    def closure(self, gens) -> frozenset:
        S = {self.identity}
        frontier = list(gens)
        while frontier:
            g = frontier.pop()
            if g in S:
                continue
            new = {self.table[s][g] for s in S} | {self.table[g][s] for s in S}
            S.add(g)
            frontier.extend(new - S)
            # close under products
            changed = True
            while changed:
                changed = False
                for a in list(S):
                    for b in list(S):
                        c = self.table[a][b]
                        if c not in S:
                            S.add(c)
                            changed = True
        return frozenset(S)

    def subgroups(self) -> list[frozenset]:
        found = {frozenset({self.identity})}
        frontier = list(found)
        while frontier:
            H = frontier.pop()
            for g in range(self.n):
                if g not in H:
                    K = self.closure(set(H) | {g})
                    if K not in found:
                        found.add(K)
                        frontier.append(K)
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def is_normal(self, H) -> bool:
        return all(self.table[self.table[g][h]][self._inv[g]] in H for g in range(self.n) for h in H)

    def cosets(self, H) -> list[frozenset]:
        """Left cosets gH, ordered by their smallest element."""
        seen, out = set(), []
        for g in range(self.n):
            if g in seen:
                continue
            c = frozenset(self.table[g][h] for h in H)
            seen |= c
            out.append(c)
        return out

    def is_cyclic(self) -> bool:
        return any(self.order(a) == self.n for a in range(self.n))

    def generator(self) -> int:
        for a in range(self.n):
            if self.order(a) == self.n:
                return a
        raise ValidationError("group is not cyclic")


def parse_group(spec: str) -> Counter:
    """Order profile of a presented abelian group: ``cyclic:4`` or ``product:2,2``."""
    try:
        kind, _, rest = spec.partition(":")
        if kind == "cyclic":
            factors = [int(rest)]
        elif kind == "product":
            factors = [int(x) for x in rest.split(",")]
        elif kind == "trivial":
            factors = []
        else:
            raise ValueError(kind)
    except ValueError:
        raise ValidationError(f"unrecognised group presentation {spec!r}", "group") from None
    if any(f < 1 for f in factors):
        raise ValidationError(f"bad factor in {spec!r}", "group")
    prof = Counter()
    for tup in product(*[range(f) for f in factors]):
        o = 1
        for x, f in zip(tup, factors):
            k = f // gcd(x, f)
            o = o * k // gcd(o, k)
        prof[o] += 1
    return prof if factors else Counter({1: 1})


def group_order_of(spec: str) -> int:
    return sum(parse_group(spec).values())


class Character:
    """Degree-1 character G -> Q/Z, stored as exact fractions in [0, 1)."""

    def __init__(self, group: Group, values: dict[int, Fraction]):
        self.group = group
        self.values = {g: Fraction(v) % 1 for g, v in values.items()}
        for a in range(group.n):
            for b in range(group.n):
                if self.values[group.mul(a, b)] != (self.values[a] + self.values[b]) % 1:
                    raise ValidationError("map is not a homomorphism")

    def __call__(self, g: int) -> Fraction:
        return self.values[g]

    def kernel(self) -> frozenset:
        return frozenset(g for g, v in self.values.items() if v == 0)

    def is_faithful(self) -> bool:
        return len(self.kernel()) == 1

    def order(self) -> int:
        o = 1
        for v in self.values.values():
            o = o * v.denominator // gcd(o, v.denominator)
        return o

    def trivial_on(self, S) -> bool:
        return all(self.values[g] == 0 for g in S)

    def __repr__(self):
        return f"Character({dict(sorted(self.values.items()))})"


def characters(group: Group) -> list[Character]:
    """All degree-1 characters of an abelian group (brute force over generator images)."""
    if not group.is_abelian():
        raise NotAbelian("characters requested for a non-abelian group")
    gens: list[int] = []
    span = frozenset({group.identity})
    for g in sorted(range(group.n), key=lambda a: -group.order(a)):
        if g not in span:
            gens.append(g)
            span = group.closure(set(span) | {g})
    out = []
    for imgs in product(*[range(group.order(g)) for g in gens]):
        values = {group.identity: Fraction(0)}
        frontier = [group.identity]
        # walk the Cayley graph from the identity
        while frontier:
            x = frontier.pop()
            for g, k in zip(gens, imgs):
                y = group.mul(x, g)
                v = (values[x] + Fraction(k, group.order(g))) % 1
                if y not in values:
                    values[y] = v
                    frontier.append(y)
        try:
            out.append(Character(group, values))
        except ValidationError:
            continue
    # drop duplicates (consistent assignments are unique per generator image)
    uniq = {}
    for c in out:
        uniq[tuple(c.values[g] for g in range(group.n))] = c
    return list(uniq.values())


def faithful_character(group: Group) -> Character:
    for c in characters(group):
        if c.is_faithful():
            return c
    raise ValidationError("group has no faithful degree-1 character (not cyclic)")
