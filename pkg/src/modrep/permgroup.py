"""Finite permutation groups: generation, classes, cosets, quotients, p-core.

Points are 0-based internally and 1-based in all I/O (cycle notation).
Element order inside a GroupTable is deterministic BFS so that every
downstream basis, idempotent and report is byte-stable across runs.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import DegreeMismatch, GroupTooLarge, NotSubgroup, UnknownGroup

GROUP_ORDER_GUARD = 10000


class Perm:
    """A permutation of {0..n-1} stored as its image array."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise DegreeMismatch(f"not a bijection: {images}")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        """Composition: (a*b)(x) = a(b(x)), i.e. b acts first."""
        if self.degree != other.degree:
            raise DegreeMismatch("composing permutations of different degree")
        return Perm(tuple(self.images[other.images[x]] for x in range(self.degree)))

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def order(self) -> int:
        n = 1
        for c in self.cycles(all_points=True):
            n = n * len(c) // gcd(n, len(c))
        return n

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, all_points: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cyc) > 1 or all_points:
                out.append(tuple(cyc))
        return out

    def cycle_str(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(p + 1) for p in c) + ")" for c in cyc)

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Perm{self.cycle_str()}"


_CYCLE_RE = re.compile(r"\(\s*([0-9,\s]*)\)")


def parse_cycles(text: str, degree: Optional[int] = None) -> Perm:
    """Parse one-line cycle notation, e.g. "(1,2,3)(4,5)".

    Cycles need not be disjoint and are applied left-to-right.  Whitespace is
    ignored; "()" is the identity.  Points are 1-based.
    """
    if not re.fullmatch(r"(\s*\(\s*[0-9,\s]*\s*\))+\s*", text):
        raise DegreeMismatch(f"cannot parse cycle notation: {text!r}")
    cycles = []
    maxpoint = 0
    for m in _CYCLE_RE.finditer(text):
        body = m.group(1).strip()
        if not body:
            continue
        pts = [int(t) for t in body.split(",") if t.strip()]
        if len(set(pts)) != len(pts) or any(p < 1 for p in pts):
            raise DegreeMismatch(f"bad cycle {m.group(0)}")
        cycles.append([p - 1 for p in pts])
        maxpoint = max(maxpoint, max(pts))
    n = degree if degree is not None else maxpoint
    if n < maxpoint:
        raise DegreeMismatch(f"cycle uses point beyond degree {degree}")
    images = list(range(n))
    for cyc in cycles:  # applied left-to-right
        nxt = list(images)
        for i, p in enumerate(cyc):
            q = cyc[(i + 1) % len(cyc)]
            for x in range(n):
                if images[x] == p:
                    nxt[x] = q
        images = nxt
    return Perm(images)


class GroupTable:
    """A finite permutation group with full multiplication table.

    elements[0] is the identity; the rest follow deterministic BFS order by
    generator application, ties broken by image-array lexicographic order.
    Immutable after generation; all queries are pure.
    """

    def __init__(self, elements: list[Perm], generators: list[Perm]):
        self.elements = tuple(elements)
        self.degree = elements[0].degree
        self.index = {p.images: i for i, p in enumerate(elements)}
        n = len(elements)
        self.generators = tuple(self.index[g.images] for g in generators)
        self.generator_perms = tuple(generators)
        mult = np.zeros((n, n), dtype=np.int32)
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                mult[i, j] = self.index[(a * b).images]
        self.mult = mult
        inv = np.zeros(n, dtype=np.int32)
        for i, a in enumerate(elements):
            inv[i] = self.index[a.inverse().images]
        self.inv = inv
        # BFS parents: element i = parent * generator (identity is its own root)
        self.parents: list[tuple[int, int]] = [(-1, -1)] * n
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for gi, g in enumerate(self.generators):
                    y = int(mult[x, g])
                    if y not in seen:
                        seen.add(y)
                        self.parents[y] = (x, gi)
                        nxt.append(y)
            frontier = nxt
        self._orders: Optional[tuple[int, ...]] = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_order(self, i: int) -> int:
        if self._orders is None:
            self._orders = tuple(p.order() for p in self.elements)
        return self._orders[i]

    def mul(self, i: int, j: int) -> int:
        return int(self.mult[i, j])

    def conjugate(self, g: int, x: int) -> int:
        """g x g^-1."""
        return int(self.mult[self.mult[g, x], self.inv[g]])

    def index_of(self, perm: Perm) -> int:
        try:
            return self.index[perm.images]
        except KeyError:
            raise NotSubgroup(f"{perm} is not an element of this group") from None

    def __contains__(self, perm: Perm) -> bool:
        return isinstance(perm, Perm) and perm.images in self.index

    def __repr__(self) -> str:
        return f"GroupTable(order {self.order}, degree {self.degree})"


def group_generate(gens: Sequence[Perm], degree: Optional[int] = None) -> GroupTable:
    """Close a generator list into a full GroupTable (BFS, deterministic)."""
    if not gens:
        if degree is None:
            degree = 1
        return GroupTable([Perm.identity(degree)], [])
    degrees = {g.degree for g in gens}
    if degree is not None:
        degrees.add(degree)
    if len(degrees) != 1:
        raise DegreeMismatch(f"generators act on different degrees: {sorted(degrees)}")
    deg = degrees.pop()
    ident = Perm.identity(deg)
    elements = [ident]
    seen = {ident.images}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y.images not in seen:
                    seen.add(y.images)
                    new.append(y)
        new.sort(key=lambda p: p.images)
        elements.extend(new)
        if len(elements) > GROUP_ORDER_GUARD:
            raise GroupTooLarge(f"group order exceeds guard {GROUP_ORDER_GUARD}")
        frontier = new
    return GroupTable(elements, list(gens))


@dataclass(frozen=True)
class ConjClass:
    rep: int
    members: tuple[int, ...]
    p_regular: bool


def conjugacy_data(g: GroupTable, p: int) -> tuple[list[ConjClass], int]:
    """Conjugacy classes (brute-force orbits) and the p-regular class count."""
    n = g.order
    assigned = [False] * n
    classes = []
    for i in range(n):
        if assigned[i]:
            continue
        orbit = {i}
        frontier = [i]
        while frontier:
            x = frontier.pop()
            for h in range(n):
                y = g.conjugate(h, x)
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        for x in orbit:
            assigned[x] = True
        classes.append(
            ConjClass(
                rep=min(orbit),
                members=tuple(sorted(orbit)),
                p_regular=g.element_order(i) % p != 0,
            )
        )
    classes.sort(key=lambda c: c.rep)
    return classes, sum(1 for c in classes if c.p_regular)


class Subgroup:
    """A subgroup of a GroupTable given by its sorted member index set."""

    def __init__(self, parent: GroupTable, members: Iterable[int]):
        members = tuple(sorted(set(int(m) for m in members)))
        if 0 not in members:
            raise NotSubgroup("subgroup must contain the identity")
        mset = set(members)
        for a in members:
            for b in members:
                if int(parent.mult[a, b]) not in mset:
                    raise NotSubgroup("member set is not closed under multiplication")
        self.parent = parent
        self.members = members

    @classmethod
    def from_perms(cls, parent: GroupTable, perms: Sequence[Perm]) -> "Subgroup":
        idxs = {0}
        frontier = [parent.index_of(p) for p in perms]
        idxs.update(frontier)
        while frontier:
            new = []
            for a in list(idxs):
                for b in frontier:
                    c = int(parent.mult[a, b])
                    if c not in idxs:
                        idxs.add(c)
                        new.append(c)
            frontier = new
        return cls(parent, idxs)

    @classmethod
    def whole(cls, parent: GroupTable) -> "Subgroup":
        return cls(parent, range(parent.order))

    @classmethod
    def trivial(cls, parent: GroupTable) -> "Subgroup":
        return cls(parent, [0])

    @property
    def order(self) -> int:
        return len(self.members)

    def is_normal(self) -> bool:
        mset = set(self.members)
        for g in range(self.parent.order):
            for m in self.members:
                if self.parent.conjugate(g, m) not in mset:
                    return False
        return True

    def element_perms(self) -> list[Perm]:
        return [self.parent.elements[i] for i in self.members]

    def as_table(self) -> GroupTable:
        """The subgroup as its own GroupTable (same permutation degree)."""
        gens = self.element_perms()
        return group_generate([g for g in gens if not g.is_identity()] or [], self.parent.degree)

    def __repr__(self) -> str:
        return f"Subgroup(order {self.order} of {self.parent!r})"


def _closure(parent: GroupTable, seed: Iterable[int]) -> set[int]:
    idxs = {0} | set(seed)
    frontier = list(idxs)
    while frontier:
        new = []
        for a in list(idxs):
            for b in frontier:
                c = int(parent.mult[a, b])
                if c not in idxs:
                    idxs.add(c)
                    new.append(c)
        frontier = new
    return idxs


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def sylow_subgroup(g: GroupTable, p: int) -> Subgroup:
    """One Sylow p-subgroup by greedy closure over p-elements."""
    p_elems = [i for i in range(1, g.order) if _is_p_power(g.element_order(i), p)]
    current: set[int] = {0}
    changed = True
    while changed:
        changed = False
        for x in p_elems:
            if x in current:
                continue
            cand = _closure(g, current | {x})
            if _is_p_power(len(cand), p):
                current = cand
                changed = True
    return Subgroup(g, current)


def normal_p_core(g: GroupTable, p: int) -> Subgroup:
    """O_p(G): intersection of all conjugates of one Sylow p-subgroup."""
    syl = sylow_subgroup(g, p)
    core = set(syl.members)
    for h in range(g.order):
        conj = {g.conjugate(h, x) for x in syl.members}
        core &= conj
        if len(core) == 1:
            break
    return Subgroup(g, core)


@dataclass(frozen=True)
class QuotientMap:
    """A quotient G/N realized as a permutation group on the cosets."""

    source: GroupTable
    quotient: GroupTable
    projection: tuple[int, ...]  # source element index -> quotient element index


def cosets_and_quotient(
    g: GroupTable, n: Subgroup
) -> tuple[list[int], Optional[QuotientMap]]:
    """Left-coset transversal (least element index per coset) and, when n is
    normal, the quotient acting on the cosets with its projection recorded."""
    if n.parent is not g:
        raise NotSubgroup("subgroup belongs to a different group table")
    order = g.order
    coset_of = [-1] * order
    transversal = []
    for i in range(order):
        if coset_of[i] != -1:
            continue
        transversal.append(i)
        ci = len(transversal) - 1
        for m in n.members:
            coset_of[int(g.mult[i, m])] = ci
    if not n.is_normal():
        return transversal, None
    ncosets = len(transversal)
    # left multiplication action of g on cosets
    def coset_perm(gi: int) -> Perm:
        return Perm(tuple(coset_of[int(g.mult[gi, t])] for t in transversal))

    gen_perms = [coset_perm(gi) for gi in g.generators]
    quotient = group_generate([p for p in gen_perms if not p.is_identity()] or [], ncosets)
    projection = tuple(quotient.index_of(coset_perm(i)) for i in range(order))
    return transversal, QuotientMap(source=g, quotient=quotient, projection=projection)


_BUILTIN_GENS = {
    "C2": ["(1,2)"],
    "C3": ["(1,2,3)"],
    "C4": ["(1,2,3,4)"],
    "C5": ["(1,2,3,4,5)"],
    "V4": ["(1,2)(3,4)", "(1,3)(2,4)"],
    "S3": ["(1,2,3)", "(1,2)"],
    "S4": ["(1,2,3,4)", "(1,2)"],
    # A4 embedded in degree 5 as the stabilizer of point 5, so A4 <= A5
    "A4": ["(1,2,3)", "(1,2)(3,4)"],
    "A5": ["(1,2,3,4,5)", "(1,2,3)"],
}
_BUILTIN_DEGREE = {"A4": 5}


def builtin(name: str) -> GroupTable:
    """Named groups with fixed conventional generators."""
    if name not in _BUILTIN_GENS:
        raise UnknownGroup(f"unknown builtin group {name!r} (have {sorted(_BUILTIN_GENS)})")
    degree = _BUILTIN_DEGREE.get(name)
    if degree is None:
        degree = max(parse_cycles(s).degree for s in _BUILTIN_GENS[name])
    gens = [parse_cycles(s, degree) for s in _BUILTIN_GENS[name]]
    return group_generate(gens, degree)


def group_from_json(text_or_obj) -> GroupTable:
    """Group spec JSON: {"degree": 5, "generators": ["(1,2,3,4,5)", "(1,2,3)"]}."""
    obj = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
    degree = int(obj["degree"])
    gens = [parse_cycles(s, degree) for s in obj.get("generators", [])]
    return group_generate(gens, degree)


def group_to_json(g: GroupTable) -> dict:
    return {
        "degree": g.degree,
        "generators": [p.cycle_str() for p in g.generator_perms],
    }
