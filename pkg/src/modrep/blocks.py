"""Block decomposition of kG.

Blocks are the connected components of the graph on simples whose edges are
the nonzero Cartan entries; each block idempotent is the sum of the
primitive idempotents whose PIMs live in the block.  Centrality is checked
directly, and primitivity in the center is certified by brute force over
the (class-sum) center whenever that search is feasible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import (
    NonCentralSum,
    NoSuitableRoot,
    NotCyclic,
    OrderDivisibleByP,
)
from .fieldcore import FieldCtx
from .linalg import Mat, Subspace
from .modalg import AlgebraElem, GroupAlgebra, Module, sub_quotient
from .permgroup import Subgroup, conjugacy_data
from .structure import CartanMatrix, PimSet

CENTER_SEARCH_LIMIT = 2**20


@dataclass
class BlockPartition:
    parts: list[list[int]]  # sorted simple-index sets
    block_idempotents: list[AlgebraElem]
    principal_index: int
    primitivity_verified: list[Optional[bool]]  # None = search skipped

    @property
    def count(self) -> int:
        return len(self.parts)

    def block_of_simple(self, i: int) -> int:
        return next(b for b, part in enumerate(self.parts) if i in part)


class _CenterArithmetic:
    """The center of kG in the class-sum basis, with structure constants."""

    def __init__(self, a: GroupAlgebra):
        self.a = a
        k = a.field
        classes, _ = conjugacy_data(a.group, k.char)
        self.classes = classes
        nc = len(classes)
        sums = []
        for c in classes:
            v = np.zeros(a.dim, dtype=k.dtype)
            v[list(c.members)] = 1
            sums.append(v)
        self.sums = sums
        # K_i K_j = sum_l c[i][j][l] K_l, read off at class representatives
        self.tensor = np.zeros((nc, nc, nc), dtype=np.int64)
        for i in range(nc):
            for j in range(nc):
                prod = a.conv(sums[i], sums[j])
                for l, c in enumerate(classes):
                    self.tensor[i, j, l] = int(prod[c.rep])

    def mul(self, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        k = self.a.field
        nc = len(self.classes)
        out = [0] * nc
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                cij = k.mul(int(xi), int(yj))
                for l in range(nc):
                    t = int(self.tensor[i, j, l])
                    if t:
                        out[l] = k.add(out[l], k.mul(cij, t))
        return tuple(out)

    def coords_of_central(self, elem: AlgebraElem) -> tuple[int, ...]:
        return tuple(int(elem.coeffs[c.rep]) for c in self.classes)

    def to_elem(self, coords: Sequence[int]) -> AlgebraElem:
        k = self.a.field
        v = np.zeros(self.a.dim, dtype=k.dtype)
        for c, cls in zip(coords, self.classes):
            if c:
                v[list(cls.members)] = c
        return AlgebraElem(self.a, v)


def _central_idempotent_strictly_under(
    ca: _CenterArithmetic, e_coords: tuple[int, ...]
) -> Optional[tuple[int, ...]]:
    """A central idempotent z with z e = z, z != 0, z != e, or None."""
    k = ca.a.field
    nc = len(ca.classes)
    zero = tuple([0] * nc)
    # plain odometer over all q^nc coordinate vectors
    total = k.order**nc
    for code in range(total):
        coords = []
        c = code
        for _ in range(nc):
            coords.append(c % k.order)
            c //= k.order
        z = tuple(coords)
        if z == zero or z == e_coords:
            continue
        if ca.mul(z, z) != z:
            continue
        if ca.mul(z, e_coords) == z:
            return z
    return None


def block_partition(
    c: CartanMatrix, pims: PimSet, trivial_index: int
) -> BlockPartition:
    """Linkage components, block idempotents, and the principal block."""
    n = len(c.entries)
    if not c.is_symmetric():
        raise NonCentralSum("Cartan matrix must be verified symmetric first")
    # connected components via union-find
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(n):
            if c.entries[i][j]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    parts = sorted((sorted(g) for g in groups.values()), key=lambda p: p[0])

    a = pims.idempotents[0].algebra
    idems = []
    for part in parts:
        e = a.zero()
        for j, si in enumerate(pims.assignment):
            if si in part:
                e = e + pims.idempotents[j]
        idems.append(e)
    # centrality: commuting with every group generator suffices
    for e in idems:
        for gi in a.group.generators:
            b = a.basis_elem(gi)
            if e * b != b * e:
                raise NonCentralSum("linkage sum fails to commute with a generator")
    total = a.zero()
    for e in idems:
        total = total + e
    if total != a.one():
        raise NonCentralSum("block idempotents do not sum to 1")
    for i in range(len(idems)):
        for j in range(len(idems)):
            if i != j and not (idems[i] * idems[j]).is_zero():
                raise NonCentralSum("block idempotents are not orthogonal")

    ca = _CenterArithmetic(a)
    verified: list[Optional[bool]] = []
    feasible = a.field.order ** len(ca.classes) <= CENTER_SEARCH_LIMIT
    for e in idems:
        if not feasible:
            verified.append(None)
            continue
        under = _central_idempotent_strictly_under(ca, ca.coords_of_central(e))
        verified.append(under is None)

    principal = next(b for b, part in enumerate(parts) if trivial_index in part)
    return BlockPartition(parts, idems, principal, verified)


@dataclass
class CyclicCharTable:
    """Characters of a cyclic p'-group valued in the field via a chosen root.

    Row i is chi_i on (1, g, g^2, ...), with chi_i(g) = root^(1-i); this
    enumeration makes the derived idempotent e_i carry coefficient
    root^((i-1)j) on g^j.
    """

    order: int
    root: int  # field encoding, multiplicative order = group order
    values: list[list[int]]

    def is_orthogonal(self, k: FieldCtx) -> bool:
        m = self.order
        mm = k.scalar_from_int(m)
        for a_ in range(m):
            for b in range(m):
                acc = 0
                for j in range(m):
                    acc = k.add(
                        acc, k.mul(self.values[a_][j], self.values[b][(-j) % m])
                    )
                want = mm if a_ == b else 0
                if acc != want:
                    return False
        return True


def _least_root_of_order(k: FieldCtx, m: int) -> int:
    if m == 1:
        return 1
    for v in range(2, k.order):
        if k.element_order(v) == m:
            return v
    raise NoSuitableRoot(f"no field element of multiplicative order {m} in {k!r}")


def cyclic_char_table(k: FieldCtx, m: int) -> CyclicCharTable:
    if m % k.char == 0:
        raise OrderDivisibleByP(f"order {m} divisible by the characteristic {k.char}")
    root = _least_root_of_order(k, m)
    values = [[k.pow(root, (-(i) * j) % m if m > 1 else 0) for j in range(m)] for i in range(m)]
    table = CyclicCharTable(order=m, root=root, values=values)
    if not table.is_orthogonal(k):
        raise NoSuitableRoot("character rows fail the orthogonality pairing")
    return table


def cyclic_idempotents(a: GroupAlgebra, k_sub: Subgroup) -> list[AlgebraElem]:
    """The character-formula idempotents of a cyclic p'-subgroup.

    e_i = (1/m) sum_j chi_i(g^-j) g^j, with the complex root of unity
    replaced by the least-indexed field element of exact order m.  The
    returned elements are orthogonal idempotents summing to the identity of
    the span of the subgroup.
    """
    if k_sub.parent is not a.group:
        raise NotCyclic("subgroup belongs to a different group table")
    m = k_sub.order
    g = a.group
    gen = next(
        (i for i in k_sub.members if g.element_order(i) == m),
        None,
    )
    if gen is None:
        raise NotCyclic(f"subgroup of order {m} has no element of that order")
    k = a.field
    table = cyclic_char_table(k, m)
    inv_m = k.inv(k.scalar_from_int(m))
    out = []
    for i in range(m):
        coeff_pairs = []
        idx = 0  # g^0
        for j in range(m):
            # coefficient of g^j: (1/m) chi_i(g^-j) = (1/m) root^((i)j)
            coeff_pairs.append((idx, k.mul(inv_m, k.pow(table.root, (i * j) % m))))
            idx = g.mul(idx, gen)
        out.append(a.from_coeffs(coeff_pairs))
    return out


@dataclass
class BlockAssignment:
    """Either the unique block index, or the split across blocks."""

    block_index: Optional[int]
    pieces: list[tuple[int, Module]]  # (block index, e_B.M) for nonzero pieces

    @property
    def decomposable(self) -> bool:
        return self.block_index is None


def module_block_assignment(m: Module, bp: BlockPartition) -> BlockAssignment:
    """Compute e_B.M per block; indecomposables land in exactly one block."""
    k = m.algebra.field
    pieces = []
    full_blocks = []
    for b, e in enumerate(bp.block_idempotents):
        act = m.action_of(e)
        image = Subspace(k, m.dim, Mat(k, act.a.T.copy()))
        if image.dim == 0:
            continue
        if image.dim == m.dim:
            full_blocks.append(b)
        sub, _ = sub_quotient(m, image)
        pieces.append((b, sub))
    if len(pieces) == 1 and full_blocks:
        return BlockAssignment(block_index=pieces[0][0], pieces=pieces)
    return BlockAssignment(block_index=None, pieces=pieces)
