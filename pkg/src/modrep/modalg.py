"""The group algebra kG and its modules.

A Module carries one invertible matrix per group generator; matrices for all
other elements are products along the group's BFS words and are cached.  The
constructor certifies that the generator matrices actually extend to an
action of the whole multiplication table (full check at desk scale, sampled
beyond it).

Everything here is pure: modules are immutable once built, and every
randomized step (Norton tests, isomorphism tests, chopping) takes an
explicit seed or Generator so parallel runs stay reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .errors import (
    AlgebraMismatch,
    ChopInstability,
    DimensionMismatch,
    NoQuotientRecorded,
    NotInvariant,
    NotSubgroup,
    ZeroModule,
)
from .fieldcore import FieldCtx, FieldElem, Poly, field_from_json, field_to_json, poly_factor
from .linalg import (
    Mat,
    Subspace,
    _add_arr,
    _kron_arr,
    _matmul_arr,
    _nullspace_arr,
    _sub_arr,
)
from .permgroup import GroupTable, QuotientMap, Subgroup, cosets_and_quotient

FULL_CHECK_LIMIT = 4000  # dim * |G| at or below this gets the full action check
SeedLike = Union[int, np.random.Generator]


def _rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


class GroupAlgebra:
    """kG: the group as a basis, with multiplication by table convolution."""

    def __init__(self, group: GroupTable, field: FieldCtx):
        self.group = group
        self.field = field
        self.dim = group.order

    def zero(self) -> "AlgebraElem":
        return AlgebraElem(self, np.zeros(self.dim, dtype=self.field.dtype))

    def one(self) -> "AlgebraElem":
        v = np.zeros(self.dim, dtype=self.field.dtype)
        v[0] = 1
        return AlgebraElem(self, v)

    def basis_elem(self, i: int) -> "AlgebraElem":
        v = np.zeros(self.dim, dtype=self.field.dtype)
        v[i] = 1
        return AlgebraElem(self, v)

    def from_coeffs(self, pairs: Iterable[tuple[int, int]]) -> "AlgebraElem":
        """Element from (group-element-index, coefficient-encoding) pairs."""
        v = np.zeros(self.dim, dtype=self.field.dtype)
        k = self.field
        for idx, c in pairs:
            v[idx] = k.add(int(v[idx]), int(c) % k.order)
        return AlgebraElem(self, v)

    def conv(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Coefficient vector of the product: out[gh] += a[g] b[h]."""
        k = self.field
        out = np.zeros(self.dim, dtype=k.dtype)
        for g in np.nonzero(a)[0]:
            row = self.group.mult[int(g)]
            out[row] = _add_arr(k, out[row], k.MUL[int(a[g])][b])
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupAlgebra)
            and self.group is other.group
            and self.field == other.field
        )

    def __hash__(self) -> int:
        return hash((id(self.group), self.field))

    def __repr__(self) -> str:
        return f"GroupAlgebra(|G|={self.group.order} over {self.field})"


class AlgebraElem:
    """Coefficient vector over the group-element basis of kG."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: GroupAlgebra, coeffs: np.ndarray):
        coeffs = np.asarray(coeffs, dtype=algebra.field.dtype)
        if coeffs.shape != (algebra.dim,):
            raise DimensionMismatch(f"coefficient vector of length {coeffs.shape}")
        self.algebra = algebra
        self.coeffs = coeffs

    def _check(self, other: "AlgebraElem") -> None:
        if self.algebra != other.algebra:
            raise AlgebraMismatch("elements of different group algebras")

    def __add__(self, other: "AlgebraElem") -> "AlgebraElem":
        self._check(other)
        return AlgebraElem(self.algebra, _add_arr(self.algebra.field, self.coeffs, other.coeffs))

    def __sub__(self, other: "AlgebraElem") -> "AlgebraElem":
        self._check(other)
        return AlgebraElem(self.algebra, _sub_arr(self.algebra.field, self.coeffs, other.coeffs))

    def __mul__(self, other: "AlgebraElem") -> "AlgebraElem":
        self._check(other)
        return AlgebraElem(self.algebra, self.algebra.conv(self.coeffs, other.coeffs))

    def scale(self, s) -> "AlgebraElem":
        k = self.algebra.field
        val = s.val if isinstance(s, FieldElem) else int(s) % k.order
        return AlgebraElem(self.algebra, k.MUL[val][self.coeffs])

    def coeff(self, i: int) -> FieldElem:
        return FieldElem(self.algebra.field, int(self.coeffs[i]))

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def is_idempotent(self) -> bool:
        return np.array_equal((self * self).coeffs, self.coeffs)

    def is_central(self) -> bool:
        a = self.algebra
        for i in range(a.dim):
            b = a.basis_elem(i)
            if not np.array_equal((self * b).coeffs, (b * self).coeffs):
                return False
        return True

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElem)
            and self.algebra == other.algebra
            and bool(np.array_equal(self.coeffs, other.coeffs))
        )

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.coeffs.tobytes()))

    def __repr__(self) -> str:
        k = self.algebra.field
        terms = []
        for i in np.nonzero(self.coeffs)[0]:
            c = FieldElem(k, int(self.coeffs[i]))
            gs = self.algebra.group.elements[int(i)].cycle_str()
            cs = repr(c)
            terms.append(gs if cs == "1" else (f"({cs})*{gs}" if "+" in cs else f"{cs}*{gs}"))
        return " + ".join(terms) if terms else "0"


class Module:
    """A kG-module: dimension plus one invertible matrix per group generator."""

    def __init__(
        self,
        algebra: GroupAlgebra,
        gen_action: Sequence[Mat],
        dim: Optional[int] = None,
        label: Optional[str] = None,
        check: str = "auto",
    ):
        self.algebra = algebra
        self.gen_action = tuple(gen_action)
        if dim is None:
            if not self.gen_action:
                raise DimensionMismatch("dim is required for generator-free groups")
            dim = self.gen_action[0].rows
        self.dim = dim
        self.label = label
        for m in self.gen_action:
            if m.rows != dim or m.cols != dim:
                raise DimensionMismatch(f"generator action is {m.rows}x{m.cols}, dim {dim}")
            if m.ctx != algebra.field:
                raise AlgebraMismatch("generator matrix over the wrong field")
        self._mats: dict[int, np.ndarray] = {}
        if check != "off":
            self._verify(check)

    # --- action matrices ---

    def _mat_arr(self, i: int) -> np.ndarray:
        """Matrix of group element i, built along its BFS word, memoized."""
        cached = self._mats.get(i)
        if cached is not None:
            return cached
        k = self.algebra.field
        g = self.algebra.group
        chain = []
        while i not in self._mats:
            if i == 0:
                self._mats[0] = np.eye(self.dim, dtype=k.dtype)
                break
            chain.append(i)
            i = g.parents[i][0]
        for j in reversed(chain):
            parent, gi = g.parents[j]
            self._mats[j] = _matmul_arr(k, self._mats[parent], self.gen_action[gi].a)
        return self._mats[chain[0] if chain else i]

    def _all_mats(self) -> list[np.ndarray]:
        return [self._mat_arr(i) for i in range(self.algebra.group.order)]

    def element_mat(self, i: int) -> Mat:
        """Action matrix of the i-th group element."""
        return Mat(self.algebra.field, self._mat_arr(i))

    def action_of(self, elem: AlgebraElem) -> Mat:
        """Action matrix of an arbitrary algebra element."""
        if elem.algebra != self.algebra:
            raise AlgebraMismatch("element of a different algebra")
        k = self.algebra.field
        out = np.zeros((self.dim, self.dim), dtype=k.dtype)
        for i in np.nonzero(elem.coeffs)[0]:
            out = _add_arr(k, out, k.MUL[int(elem.coeffs[i])][self._mat_arr(int(i))])
        return Mat(k, out)

    def _verify(self, mode: str) -> None:
        g = self.algebra.group
        k = self.algebra.field
        if self.dim == 0 or g.order == 1:
            return
        full = mode == "full" or (mode == "auto" and self.dim * g.order <= FULL_CHECK_LIMIT)
        if full:
            mats = self._all_mats()
            stacked = np.hstack(mats)  # d x (n*d), h-th block is rho(h)
            for gi in g.generators:
                prod = _matmul_arr(k, mats[gi], stacked)
                expect = np.hstack([mats[int(g.mult[gi, h])] for h in range(g.order)])
                if not np.array_equal(prod, expect):
                    raise NotInvariant("generator matrices do not extend to the group")
        else:
            for m in self.gen_action:
                if m.rank() != self.dim:
                    raise NotInvariant("generator action is singular")
            rng = np.random.default_rng(self.dim * 1009 + g.order)
            for _ in range(20):
                a, b = (int(x) for x in rng.integers(0, g.order, size=2))
                lhs = _matmul_arr(k, self._mat_arr(a), self._mat_arr(b))
                if not np.array_equal(lhs, self._mat_arr(g.mul(a, b))):
                    raise NotInvariant("sampled product check failed")

    def __repr__(self) -> str:
        tag = f" {self.label!r}" if self.label else ""
        return f"Module(dim {self.dim}{tag} over {self.algebra!r})"


# ------------------------------------------------------------ constructors --


def regular_module(a: GroupAlgebra) -> Module:
    """kG acting on itself by left multiplication (permutation matrices)."""
    g = a.group
    mats = []
    for gi in g.generators:
        m = np.zeros((g.order, g.order), dtype=a.field.dtype)
        for h in range(g.order):
            m[int(g.mult[gi, h]), h] = 1
        mats.append(Mat(a.field, m))
    return Module(a, mats, dim=g.order, label="regular", check="sample")


def permutation_module(a: GroupAlgebra) -> Module:
    """The natural permutation module on the group's points."""
    g = a.group
    n = g.degree
    mats = []
    for p in g.generator_perms:
        m = np.zeros((n, n), dtype=a.field.dtype)
        for x in range(n):
            m[p(x), x] = 1
        mats.append(Mat(a.field, m))
    return Module(a, mats, dim=n, label="perm")


def trivial_module(a: GroupAlgebra) -> Module:
    return Module(
        a, [Mat.identity(a.field, 1) for _ in a.group.generators], dim=1, label="trivial"
    )


def module_to_json(m: Module) -> dict:
    obj = {
        "dim": m.dim,
        "field": field_to_json(m.algebra.field),
        "generators": [g.tolist() for g in m.gen_action],
    }
    if m.label:
        obj["label"] = m.label
    return obj


def module_from_json(a: GroupAlgebra, text_or_obj) -> Module:
    obj = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
    field = field_from_json(obj["field"])
    if field != a.field:
        raise AlgebraMismatch("module field does not match the algebra's field")
    gens = [Mat.from_rows(a.field, rows) for rows in obj["generators"]]
    if len(gens) != len(a.group.generators):
        raise AlgebraMismatch(
            f"{len(gens)} matrices for {len(a.group.generators)} group generators"
        )
    return Module(a, gens, dim=int(obj["dim"]), label=obj.get("label"))


# ------------------------------------------------------------------- spin --


def _spin_arrays(k: FieldCtx, gens: Sequence[np.ndarray], seeds: np.ndarray, dim: int) -> Subspace:
    space = Subspace.from_vectors(k, dim, seeds)
    frontier = space.basis.a
    while frontier.size and space.dim < dim:
        images = []
        for g in gens:
            images.append(_matmul_arr(k, frontier, g.T.copy()))
        if not images:
            break
        batch = space.reduce_rows(np.vstack(images))
        batch = batch[batch.any(axis=1)]
        if batch.size == 0:
            break
        newspace = Subspace(k, dim, Mat(k, np.vstack([space.basis.a, batch])))
        gained = newspace.dim - space.dim
        if gained == 0:
            break
        # fresh directions only: reduce new basis rows by the old space
        fresh = space.reduce_rows(newspace.basis.a)
        frontier = fresh[fresh.any(axis=1)]
        space = newspace
    return space


def spin(m: Module, seeds: Iterable) -> Subspace:
    """Smallest invariant subspace containing the seed vectors."""
    k = m.algebra.field
    rows = []
    for v in seeds:
        if isinstance(v, np.ndarray):
            row = np.asarray(v, dtype=k.dtype)
        else:
            row = np.array([x.val if isinstance(x, FieldElem) else int(x) for x in v], k.dtype)
        if row.shape != (m.dim,):
            raise DimensionMismatch(f"seed of length {row.shape} in dim {m.dim}")
        rows.append(row)
    if not rows:
        return Subspace.zero(k, m.dim)
    return _spin_arrays(k, [g.a for g in m.gen_action], np.array(rows), m.dim)


# ----------------------------------------------------------- sub/quotient --


def sub_quotient(m: Module, s: Subspace) -> tuple[Module, Module]:
    """Submodule on s and quotient on the non-pivot coordinate complement."""
    k = m.algebra.field
    if s.ambient != m.dim:
        raise DimensionMismatch(f"subspace of k^{s.ambient} in a dim-{m.dim} module")
    piv = s.pivots()
    nonpiv = [c for c in range(m.dim) if c not in piv]
    B = s.basis.a
    sub_gens = []
    quot_gens = []
    for g in m.gen_action:
        img = _matmul_arr(k, B, g.a.T.copy())  # rows: rho(g) b_i
        resid = s.reduce_rows(img)
        if resid.any():
            raise NotInvariant("subspace is not invariant under the module action")
        sub_gens.append(Mat(k, img[:, piv].T.copy()))
        cols = g.a[:, nonpiv].T.copy()  # rows: rho(g) e_j for complement coords j
        red = s.reduce_rows(cols)
        quot_gens.append(Mat(k, red[:, nonpiv].T.copy()))
    sub = Module(m.algebra, sub_gens, dim=s.dim, check="sample")
    quot = Module(m.algebra, quot_gens, dim=m.dim - s.dim, check="sample")
    return sub, quot


# -------------------------------------------------------------- hom space --


@dataclass(frozen=True)
class ModuleHom:
    """A kG-homomorphism source -> target given by its matrix."""

    source: Module
    target: Module
    mat: Mat

    def is_valid(self) -> bool:
        for gs, gt in zip(self.source.gen_action, self.target.gen_action):
            if (self.mat @ gs) != (gt @ self.mat):
                return False
        return True


def hom_space(v: Module, w: Module) -> list[ModuleHom]:
    """Canonical basis of Hom_kG(v, w) via the stacked intertwining system."""
    if v.algebra != w.algebra:
        raise AlgebraMismatch("hom between modules of different algebras")
    k = v.algebra.field
    if v.dim == 0 or w.dim == 0:
        return []
    blocks = []
    eye_w = np.eye(w.dim, dtype=k.dtype)
    eye_v = np.eye(v.dim, dtype=k.dtype)
    for gv, gw in zip(v.gen_action, w.gen_action):
        lhs = _kron_arr(k, eye_w, gv.a.T.copy())  # vec(X A) for row-major vec
        rhs = _kron_arr(k, gw.a, eye_v)  # vec(B X)
        blocks.append(_sub_arr(k, lhs, rhs))
    if not blocks:
        basis = np.eye(w.dim * v.dim, dtype=k.dtype)
    else:
        basis = _nullspace_arr(k, np.vstack(blocks))
    return [ModuleHom(v, w, Mat(k, row.reshape(w.dim, v.dim).copy())) for row in basis]


def hom_dim(v: Module, w: Module) -> int:
    return len(hom_space(v, w))


# ------------------------------------------------------- irreducibility ----


@dataclass(frozen=True)
class IrreducibilityVerdict:
    irreducible: bool
    witness: Optional[Subspace]  # proper nonzero invariant subspace when reducible
    certificate: Optional[str]  # description of the successful Norton test


_THETA_ATTEMPTS = 120


def _matrix_minpoly(k: FieldCtx, theta: np.ndarray):
    """Minimal polynomial of a square matrix, by Krylov in matrix space.

    Rows [vec(theta^i) | e_i] are reduced incrementally; the first dependent
    power exposes its combination coefficients in the augmented tail.
    """
    d = theta.shape[0]
    width = d * d
    maxdeg = d + 1
    reduced: list[np.ndarray] = []
    pivots: list[int] = []
    power = np.eye(d, dtype=k.dtype)
    for deg in range(maxdeg + 1):
        row = np.zeros(width + maxdeg + 1, dtype=k.dtype)
        row[:width] = power.reshape(-1)
        row[width + deg] = 1
        for r, p in zip(reduced, pivots):
            c = int(row[p])
            if c:
                row = _sub_arr(k, row, k.MUL[c][r])
        lead = np.nonzero(row[:width])[0]
        if lead.size == 0:
            # theta^deg = combination of lower powers; tail holds the relation
            tail = row[width : width + deg + 1]
            return Poly(k, [int(c) for c in tail])
        p = int(lead[0])
        inv = k.INV[int(row[p])]
        row = k.MUL[inv][row]
        reduced.append(row)
        pivots.append(p)
        power = _matmul_arr(k, power, theta)
    raise ChopInstability("minimal polynomial search exceeded the matrix dimension")


def _poly_at_matrix(k: FieldCtx, coeffs, theta: np.ndarray) -> np.ndarray:
    d = theta.shape[0]
    acc = np.zeros((d, d), dtype=k.dtype)
    eye = np.eye(d, dtype=k.dtype)
    for c in reversed(coeffs):
        acc = _matmul_arr(k, acc, theta)
        if c:
            acc = _add_arr(k, acc, k.MUL[int(c)][eye])
    return acc


def is_irreducible(m: Module, seed: SeedLike = 0) -> IrreducibilityVerdict:
    """Norton/MeatAxe irreducibility test with the Holt-Rees extension.

    For a random enveloping-algebra element theta, each irreducible factor f
    of its minimal polynomial gives a kernel ker f(theta).  Any proper spin
    of a kernel vector is a reducibility witness.  When dim ker f(theta)
    equals deg f, all kernel vectors share one spin, so a single full spin
    plus a full spin of one dual kernel vector under the transposed action
    certifies irreducibility (Norton's criterion).
    """
    if m.dim == 0:
        raise ZeroModule("zero module has no irreducibility verdict")
    if m.dim == 1:
        return IrreducibilityVerdict(True, None, "dim 1")
    rng = _rng(seed)
    k = m.algebra.field
    g = m.algebra.group
    gens = [x.a for x in m.gen_action]
    gens_t = [x.a.T.copy() for x in m.gen_action]
    for attempt in range(_THETA_ATTEMPTS):
        support = 2 + int(rng.integers(0, 3)) + attempt // 20
        theta = np.zeros((m.dim, m.dim), dtype=k.dtype)
        terms = []
        for _ in range(support):
            e = int(rng.integers(0, g.order))
            c = int(rng.integers(1, k.order))
            theta = _add_arr(k, theta, k.MUL[c][m._mat_arr(e)])
            terms.append((c, e))
        minpoly = _matrix_minpoly(k, theta)
        if minpoly.degree < 1:
            continue
        factors = sorted((f for f, _ in poly_factor(minpoly)), key=lambda f: f.degree)
        for f in factors:
            ftheta = _poly_at_matrix(k, f.coeffs, theta)
            ker = _nullspace_arr(k, ftheta)
            nu = ker.shape[0]
            if nu == 0:
                continue
            # nu == deg f makes ker an irreducible k[theta]-module: one spin
            # speaks for every kernel vector (covers nu == dim for a module
            # that is 1-dimensional over the field k[theta])
            decisive = nu == f.degree
            probes = [ker[0]] if decisive else list(ker[: min(3, nu)])
            for v in probes:
                space = _spin_arrays(k, gens, v[None, :], m.dim)
                if space.dim < m.dim:
                    return IrreducibilityVerdict(False, space, None)
            if not decisive:
                continue
            ker_t = _nullspace_arr(k, ftheta.T.copy())
            dual_space = _spin_arrays(k, gens_t, ker_t[0][None, :], m.dim)
            if dual_space.dim == m.dim:
                desc = " + ".join(
                    f"{FieldElem(k, c)!r}*{g.elements[e].cycle_str()}" for c, e in terms
                )
                return IrreducibilityVerdict(
                    True, None, f"norton theta = {desc}, factor degree {f.degree}"
                )
            # the annihilator of a proper dual submodule is a proper submodule
            perp = Subspace(k, m.dim, Mat(k, _nullspace_arr(k, dual_space.basis.a)))
            return IrreducibilityVerdict(False, perp, None)
    raise ChopInstability(f"no conclusive Norton element after {_THETA_ATTEMPTS} attempts")


# ------------------------------------------------------------------- chop --


def chop(m: Module, seed: SeedLike = 0) -> list[Module]:
    """All composition factors of m as modules (recursive MeatAxe chop)."""
    rng = _rng(seed)
    out: list[Module] = []
    stack = [m]
    while stack:
        cur = stack.pop()
        if cur.dim == 0:
            continue
        verdict = is_irreducible(cur, rng)
        if verdict.irreducible:
            out.append(cur)
            continue
        sub, quot = sub_quotient(cur, verdict.witness)
        stack.append(quot)
        stack.append(sub)
    return out


def modules_isomorphic(v: Module, w: Module, seed: SeedLike = 0) -> bool:
    """Iso test: equal dims plus an invertible element of Hom(v, w).

    Tries each hom basis element, then 8 random combinations.
    """
    if v.algebra != w.algebra:
        raise AlgebraMismatch("modules over different algebras")
    if v.dim != w.dim:
        return False
    if v.dim == 0:
        return True
    homs = hom_space(v, w)
    if not homs:
        return False
    d = v.dim
    for h in homs:
        if h.mat.rank() == d:
            return True
    rng = _rng(seed)
    k = v.algebra.field
    for _ in range(8):
        combo = np.zeros((d, d), dtype=k.dtype)
        for h in homs:
            c = int(rng.integers(0, k.order))
            if c:
                combo = _add_arr(k, combo, k.MUL[c][h.mat.a])
        if Mat(k, combo).rank() == d:
            return True
    return False


def composition_factors(m: Module, seed: SeedLike = 0) -> list[tuple[Module, int]]:
    """Composition factor multiset as (representative simple, multiplicity).

    Jordan-Hoelder makes the multiset independent of the chop seed; the
    representatives are the first-found copies, ordered by (dim, discovery).
    """
    rng = _rng(seed)
    factors = chop(m, rng)
    reps: list[Module] = []
    counts: list[int] = []
    for f in factors:
        for i, r in enumerate(reps):
            if modules_isomorphic(f, r, rng):
                counts[i] += 1
                break
        else:
            reps.append(f)
            counts.append(1)
    order = sorted(range(len(reps)), key=lambda i: (reps[i].dim, i))
    return [(reps[i], counts[i]) for i in order]


def factor_multiset(m: Module, simples: Sequence[Module], seed: SeedLike = 0) -> list[int]:
    """Multiplicity of each given simple among the composition factors of m."""
    rng = _rng(seed)
    counts = [0] * len(simples)
    for f in chop(m, rng):
        for i, s in enumerate(simples):
            if modules_isomorphic(f, s, rng):
                counts[i] += 1
                break
        else:
            raise ChopInstability("composition factor matches none of the given simples")
    return counts


# ---------------------------------------------------------- Loewy series --


@dataclass(frozen=True)
class LoewyLayer:
    module: Module  # semisimple layer
    mults: tuple[int, ...]  # multiplicity of each reference simple


@dataclass(frozen=True)
class LoewyData:
    radical_layers: tuple[LoewyLayer, ...]  # descending: head first
    socle_layers: tuple[LoewyLayer, ...]  # ascending: socle first

    @property
    def loewy_length(self) -> int:
        return len(self.radical_layers)

    def layer_dims(self) -> list[int]:
        return [layer.module.dim for layer in self.radical_layers]


def _algebra_action_mats(m: Module, vectors: np.ndarray) -> list[np.ndarray]:
    """Action matrices on m of several algebra elements (rows of vectors)."""
    k = m.algebra.field
    out = []
    for row in vectors:
        acc = np.zeros((m.dim, m.dim), dtype=k.dtype)
        for i in np.nonzero(row)[0]:
            acc = _add_arr(k, acc, k.MUL[int(row[i])][m._mat_arr(int(i))])
        out.append(acc)
    return out


def _sub_coords(outer: Subspace, inner: Subspace) -> Subspace:
    """inner expressed in coordinates of outer's RREF basis (inner <= outer)."""
    k = outer.ctx
    rows = inner.basis.a[:, outer.pivots()]
    return Subspace(k, outer.dim, Mat(k, rows.copy()))


def section_module(m: Module, outer: Subspace, inner: Subspace) -> Module:
    """The subquotient outer/inner of m as a module (inner <= outer <= m)."""
    sub, _ = sub_quotient(m, outer)
    if inner.dim == 0:
        return sub
    _, layer = sub_quotient(sub, _sub_coords(outer, inner))
    return layer


def _semisimple_mults(layer: Module, simples: Sequence[Module], endo: Sequence[int]) -> tuple[int, ...]:
    return tuple(hom_dim(s, layer) // e for s, e in zip(simples, endo))


def radical_chain(m: Module, rad_a: Subspace) -> list[Subspace]:
    """Descending chain [U, rad U, rad^2 U, ..., 0] via rad U = radA.U."""
    k = m.algebra.field
    if rad_a.ambient != m.algebra.dim:
        raise DimensionMismatch(
            f"radical lives in k^{rad_a.ambient}, algebra has dimension {m.algebra.dim}"
        )
    rho = _algebra_action_mats(m, rad_a.basis.a)
    out = [Subspace.full(k, m.dim)]
    while out[-1].dim > 0:
        cur = out[-1]
        if not rho:
            out.append(Subspace.zero(k, m.dim))
            break
        images = np.vstack([_matmul_arr(k, cur.basis.a, r.T.copy()) for r in rho])
        nxt = Subspace(k, m.dim, Mat(k, images))
        out.append(nxt)
        if nxt.dim == cur.dim:
            raise NotInvariant("radical chain failed to descend; rad_a is not nilpotent")
    return out


def socle_chain(m: Module, rad_a: Subspace) -> list[Subspace]:
    """Ascending chain [0, soc U, soc^2 U, ..., U] via soc U = ker(radA)."""
    k = m.algebra.field
    if rad_a.ambient != m.algebra.dim:
        raise DimensionMismatch(
            f"radical lives in k^{rad_a.ambient}, algebra has dimension {m.algebra.dim}"
        )
    rho = _algebra_action_mats(m, rad_a.basis.a)
    out = [Subspace.zero(k, m.dim)]
    while out[-1].dim < m.dim:
        cur = out[-1]
        if not rho:
            out.append(Subspace.full(k, m.dim))
            break
        piv = cur.pivots()
        nonpiv = [c for c in range(m.dim) if c not in piv]
        blocks = []
        for r in rho:
            red = cur.reduce_rows(r.T.copy()).T  # residuals of columns rho(r) e_j
            blocks.append(red[nonpiv, :])
        nxt = Subspace(k, m.dim, Mat(k, _nullspace_arr(k, np.vstack(blocks))))
        out.append(nxt)
        if nxt.dim == cur.dim:
            raise NotInvariant("socle chain failed to ascend")
    return out


def radical_and_socle_series(
    m: Module,
    rad_a: Subspace,
    simples: Sequence[Module],
    endo_dims: Optional[Sequence[int]] = None,
) -> LoewyData:
    """Loewy data from rad U = radA.U and soc U = {u | radA.u = 0}."""
    endo = list(endo_dims) if endo_dims is not None else [1] * len(simples)
    rads = radical_chain(m, rad_a)
    socs = socle_chain(m, rad_a)
    rad_layers = []
    for i in range(len(rads) - 1):
        layer = section_module(m, rads[i], rads[i + 1])
        rad_layers.append(LoewyLayer(layer, _semisimple_mults(layer, simples, endo)))
    soc_layers = []
    for i in range(len(socs) - 1):
        layer = section_module(m, socs[i + 1], socs[i])
        soc_layers.append(LoewyLayer(layer, _semisimple_mults(layer, simples, endo)))
    return LoewyData(tuple(rad_layers), tuple(soc_layers))


# -------------------------------------------------------- change of group --


def restrict_module(m: Module, h: GroupTable) -> Module:
    """Restriction along H <= G, H sharing the permutation degree."""
    g = m.algebra.group
    if h.degree != g.degree:
        raise NotSubgroup("subgroup must share the permutation degree")
    halg = GroupAlgebra(h, m.algebra.field)
    gens = [m.element_mat(g.index_of(p)) for p in h.generator_perms]
    label = f"({m.label})|H" if m.label else None
    return Module(halg, gens, dim=m.dim, label=label, check="sample")


def induce_module(m: Module, g_alg: GroupAlgebra) -> Module:
    """Induction along H <= G: block matrices over the left transversal."""
    h_table = m.algebra.group
    g = g_alg.group
    if m.algebra.field != g_alg.field:
        raise AlgebraMismatch("induction must stay over the same field")
    sub = Subgroup.from_perms(g, list(h_table.generator_perms))
    transversal, _ = cosets_and_quotient(g, sub)
    n = len(transversal)
    d = m.dim
    k = g_alg.field
    member_set = set(sub.members)
    coset_of = {}
    for ci, t in enumerate(transversal):
        for s in sub.members:
            coset_of[int(g.mult[t, s])] = ci
    gens = []
    for gi in g.generators:
        big = np.zeros((n * d, n * d), dtype=k.dtype)
        for i, xi in enumerate(transversal):
            y = int(g.mult[gi, xi])
            j = coset_of[y]
            hidx = int(g.mult[g.inv[transversal[j]], y])
            if hidx not in member_set:
                raise NotSubgroup("transversal bookkeeping escaped the subgroup")
            hmat = m.element_mat(h_table.index_of(g.elements[hidx]))
            big[j * d : (j + 1) * d, i * d : (i + 1) * d] = hmat.a
        gens.append(Mat(k, big))
    label = f"({m.label})^G" if m.label else None
    return Module(g_alg, gens, dim=n * d, label=label, check="sample")


def inflate_module(m: Module, g_alg: GroupAlgebra, qmap: Optional[QuotientMap]) -> Module:
    """Inflation along a recorded projection G -> G/N."""
    if qmap is None:
        raise NoQuotientRecorded("inflation needs the quotient's projection map")
    if qmap.quotient is not m.algebra.group:
        raise AlgebraMismatch("module is not over the recorded quotient group")
    if qmap.source is not g_alg.group:
        raise AlgebraMismatch("target algebra is not over the projection's source")
    gens = [m.element_mat(qmap.projection[gi]) for gi in g_alg.group.generators]
    label = f"Inf({m.label})" if m.label else None
    return Module(g_alg, gens, dim=m.dim, label=label, check="sample")


def dual_module(m: Module) -> Module:
    """Contragredient: g acts by the inverse-transpose."""
    gens = [g.inverse().T for g in m.gen_action]
    label = f"({m.label})*" if m.label else None
    return Module(m.algebra, gens, dim=m.dim, label=label, check="sample")


def direct_sum(ms: Sequence[Module]) -> Module:
    if not ms:
        raise DimensionMismatch("direct sum of no modules")
    a = ms[0].algebra
    for m in ms:
        if m.algebra != a:
            raise AlgebraMismatch("summands over different algebras")
    k = a.field
    total = sum(m.dim for m in ms)
    gens = []
    for gi in range(len(a.group.generators)):
        big = np.zeros((total, total), dtype=k.dtype)
        off = 0
        for m in ms:
            big[off : off + m.dim, off : off + m.dim] = m.gen_action[gi].a
            off += m.dim
        gens.append(Mat(k, big))
    return Module(a, gens, dim=total, check="sample")
